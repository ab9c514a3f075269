"""Simulation, experiments and comparison reports."""

from .baselines import (
    ComparisonRow,
    cweg_tdesign_metrics,
    cweg_tgdd_metrics,
    jcm_metrics,
    jcm_tdesign_metrics,
    jcm_tgdd_metrics,
    row_from_metrics,
    tdesign_pda_baseline,
    tgdd_pda_baselines,
    transformed_pda_metrics,
    wccwc_metrics,
)
from .experiments import (
    DEMAND_MODES,
    ExperimentReport,
    choose_demand,
    run_experiment,
    run_experiment_suite,
)
from .metrics import aggregate_results
from .simulation import (
    CacheContents,
    DecodeReport,
    DemandVector,
    Library,
    PacketStore,
    Transmission,
    TransmissionLog,
    decode_all,
    deliver,
    place,
    split_library,
)
from .tables import (
    CheckResult,
    MemoryLoadPoint,
    MemoryShare,
    check_table,
    memory_share,
    memory_tradeoff_points,
    render_csv,
    render_points_csv,
    render_text,
    rows_to_frame,
    table_report,
)

__all__ = [
    'ComparisonRow', 'cweg_tdesign_metrics', 'cweg_tgdd_metrics', 'jcm_metrics',
    'jcm_tdesign_metrics', 'jcm_tgdd_metrics', 'row_from_metrics', 'tdesign_pda_baseline',
    'tgdd_pda_baselines', 'transformed_pda_metrics', 'wccwc_metrics',
    'DEMAND_MODES', 'ExperimentReport', 'choose_demand', 'run_experiment', 'run_experiment_suite',
    'aggregate_results',
    'CacheContents', 'DecodeReport', 'DemandVector', 'Library', 'PacketStore', 'Transmission',
    'TransmissionLog', 'decode_all', 'deliver', 'place', 'split_library',
    'CheckResult', 'MemoryLoadPoint', 'MemoryShare', 'check_table', 'memory_share',
    'memory_tradeoff_points', 'render_csv', 'render_points_csv', 'render_text', 'rows_to_frame',
    'table_report',
]
