"""Experiment orchestration: place, deliver and decode a scheme end to end."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Union

import pandas as pd
from tqdm import tqdm

from ..errors import InvalidParametersError
from ..schemes import SchemeBundle
from ..utils.combinatorics import format_fraction
from ..utils.seeding import DEMAND_STREAM, make_rng
from ..utils.timing import Timer
from .simulation import (
    DemandVector,
    TransmissionLog,
    decode_all,
    deliver,
    place,
    split_library,
)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_FILE_SIZE = 4096
DEFAULT_TRIALS = 1

WORST = 'worst'
RANDOM = 'random'
FIXED = 'fixed'
DEMAND_MODES = (WORST, RANDOM, FIXED)


@dataclass(frozen=True)
class ExperimentReport:
    kind: str
    N: int
    B: int
    seed: int
    demand: DemandVector
    log: TransmissionLog
    per_user_messages: List[int]
    expected_load: Fraction
    success: bool
    mismatch: Optional[tuple] = None

    @property
    def load(self) -> Fraction:
        return self.log.load

    @property
    def transmissions(self) -> int:
        return self.log.count

    def to_text(self, verbose: bool = False) -> str:
        """key=value lines; ``verbose`` adds one hex line per transmission."""
        lines = [
            f"kind={self.kind}",
            f"K={self.demand.K}",
            f"F={self.log.F}",
            f"N={self.N}",
            f"B={self.B}",
            f"seed={self.seed}",
            'demand=' + ','.join(map(str, self.demand.d)),
            f"transmissions={self.transmissions}",
            f"R={format_fraction(self.load)}",
            f"R_expected={format_fraction(self.expected_load)}",
            'messages_per_user=' + ','.join(map(str, self.per_user_messages)),
            f"decode={'ok' if self.success else 'failed'}",
        ]
        if self.mismatch is not None:
            lines.append(f"mismatch=user{self.mismatch[0] + 1},row{self.mismatch[1] + 1}")
        if verbose:
            lines += [f"tx s{tx.label} sender={tx.sender + 1} payload={tx.payload.hex()}"
                      for tx in self.log.transmissions]
        return '\n'.join(lines) + '\n'


def choose_demand(mode: str, K: int, N: int, seed: int,
                  fixed: Optional[Sequence[int]] = None) -> DemandVector:
    """
    Demand vector for one run.

    ``worst`` falls back to uniform demands with repetition when N < K.
    """
    rng = make_rng(seed, DEMAND_STREAM)
    if mode == FIXED:
        if fixed is None:
            raise InvalidParametersError("fixed demand mode needs a demand vector")
        demand = fixed if isinstance(fixed, DemandVector) else DemandVector(d=tuple(fixed), N=N)
        if demand.K != K:
            raise InvalidParametersError(f"demand covers {demand.K} users, the scheme has K={K}")
        return demand
    if mode == WORST:
        if N >= K:
            return DemandVector.worst(K, N, rng)
        logger.warning("N=%d < K=%d: worst-case demands fall back to random demands", N, K)
        return DemandVector.uniform(K, N, rng)
    if mode == RANDOM:
        return DemandVector.uniform(K, N, rng)
    raise InvalidParametersError(f"unknown demand mode '{mode}', choose from {DEMAND_MODES}")


def run_experiment(bundle: SchemeBundle, demand_mode: str = WORST, seed: int = DEFAULT_SEED,
                   n_files: Optional[int] = None, file_size: int = DEFAULT_FILE_SIZE,
                   demand: Optional[Sequence[int]] = None) -> ExperimentReport:
    """
    Build a library, place it, deliver one demand and decode every user.

    Args:
        bundle: The scheme to run
        demand_mode: ``worst``, ``random`` or ``fixed``
        seed: Seed for both the library and the demand
        n_files: Library size N (defaults to K)
        file_size: File size B in bytes
        demand: Demand vector for ``fixed`` mode

    Returns:
        ExperimentReport (deterministic given the arguments)
    """
    N = bundle.K if n_files is None else n_files
    with Timer() as timer:
        library, packets = split_library(N, file_size, bundle.F, seed)
        chosen = choose_demand(demand_mode, bundle.K, N, seed, demand)
        caches = place(bundle, packets)
        log = deliver(bundle, chosen, caches)
        decoded = decode_all(bundle, log, chosen, caches, packets, library)
    logger.info("%s: %d transmissions, decode %s in %.3fs", bundle.kind, log.count,
                'ok' if decoded.success else 'failed', timer.elapsed)
    return ExperimentReport(kind=bundle.kind, N=N, B=file_size, seed=seed, demand=chosen, log=log,
                            per_user_messages=log.per_sender(bundle.K),
                            expected_load=bundle.metrics.load, success=decoded.success,
                            mismatch=decoded.mismatch)


def run_experiment_suite(bundle: SchemeBundle, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                         demand_mode: str = RANDOM, n_files: Optional[int] = None,
                         file_size: int = DEFAULT_FILE_SIZE,
                         output_path: Optional[Union[str, Path]] = None,
                         show_progress: bool = True) -> pd.DataFrame:
    """
    Repeat ``run_experiment`` with seeds seed, seed+1, ...

    Rows are appended to ``output_path`` as they finish when one is given.
    """
    if trials < 1:
        raise InvalidParametersError(f"trials must be positive, got trials={trials}")
    if output_path is not None:
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
    results = []
    for trial in tqdm(range(trials), desc=f"Simulating {bundle.kind}", disable=not show_progress):
        with Timer() as timer:
            report = run_experiment(bundle, demand_mode, seed + trial, n_files, file_size)
        row = {
            'kind': bundle.kind, 'trial': trial, 'seed': seed + trial, 'demand_mode': demand_mode,
            'K': bundle.K, 'F': bundle.F, 'N': report.N,
            'transmissions': report.transmissions,
            'load': format_fraction(report.load),
            'load_value': float(report.load),
            'load_matches': report.load == report.expected_load,
            'decode_ok': report.success,
            'time_run': timer.elapsed,
        }
        results.append(row)
        if output_path is not None:
            pd.DataFrame([row]).to_csv(output_path, mode='w' if trial == 0 else 'a', index=False,
                                       header=trial == 0)
    return pd.DataFrame(results)
