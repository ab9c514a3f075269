"""Summary statistics over simulation sweeps."""

import pandas as pd


def aggregate_results(df: pd.DataFrame) -> pd.DataFrame:
    """
    Aggregate suite results by scheme kind and demand mode.

    Args:
        df: DataFrame returned by ``run_experiment_suite`` (possibly several
            concatenated)

    Returns:
        One row per (kind, demand_mode) with the trial count, the number of
        successful decodes, whether every trial hit the expected load, and
        mean/max of the run time
    """
    if df.empty:
        return df
    grouped = df.groupby(['kind', 'demand_mode'])
    aggregated = grouped.agg(
        trials=('trial', 'count'),
        decoded=('decode_ok', 'sum'),
        load=('load', 'first'),
        load_matches=('load_matches', 'all'),
        time_run_mean=('time_run', 'mean'),
        time_run_max=('time_run', 'max'),
    )
    return aggregated.reset_index()
