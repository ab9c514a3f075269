"""Comparison tables, construction cross-checks and memory-sharing tradeoffs."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm

from ..arrays import SchemeMetrics
from ..designs import linear_mds_oa, load_fixture, proper_oa, trivial_gdd
from ..errors import InvalidParametersError, OutOfRangeError
from ..schemes import (
    COR1,
    FAMILY_I,
    FAMILY_J,
    THM5,
    complete_family_metrics,
    complete_family_scheme,
    cor5_metrics,
    cor5_scheme,
    tdesign_d2d_metrics,
    tdesign_d2d_scheme,
    tdesign_metrics,
    tdesign_scheme,
    tgdd_d2d_metrics,
    tgdd_d2d_scheme,
    tgdd_metrics,
    tgdd_scheme,
    thm9_metrics,
    thm9_scheme,
)
from ..utils.combinatorics import binom, display_decimal, format_fraction
from .baselines import (
    ComparisonRow,
    cweg_tdesign_metrics,
    cweg_tgdd_metrics,
    jcm_metrics,
    jcm_tdesign_metrics,
    jcm_tgdd_metrics,
    maybe,
    row_from_metrics,
    table1_wccwc,
    table2_wccwc,
    tdesign_pda_baseline,
    tgdd_pda_baselines,
)

logger = logging.getLogger(__name__)

TABLES = ('I', 'II', 'III', 'IV')

DEFAULT_PARAMS: Dict[str, Dict[str, int]] = {
    'I': dict(v=7, k=3, t=2, r=3),
    'II': dict(m=3, q=3, t=2, r=2),
    'III': dict(n=8, k=3),
    'IV': dict(v=7, k=3, lam=1, t=2, i=1, m=3, q=3, gdd_t=2, gdd_s=2, gdd_l=1,
               n=8, subset_k=3, idx_i=1, idx_j=2),
}

# Fixtures a design-based row can be cross-checked against.
DESIGN_FIXTURES = ('fano', 'steiner-3-8-4', 'example13')

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


def resolve_params(which: str, params: Optional[Mapping[str, Optional[int]]] = None) -> Dict[str, int]:
    """Table defaults overridden by the non-None entries of ``params``."""
    if which not in TABLES:
        raise InvalidParametersError(f"unknown table '{which}', choose from {TABLES}")
    resolved = dict(DEFAULT_PARAMS[which])
    for name, value in (params or {}).items():
        if value is None:
            continue
        if name not in resolved:
            raise InvalidParametersError(f"table {which} takes {sorted(resolved)}, got '{name}'")
        resolved[name] = int(value)
    if which == 'IV' and params and params.get('m') is not None and params.get('gdd_s') is None:
        resolved['gdd_s'] = resolved['m'] - 1
    return resolved


# --- constructions, addressed by name so they can cross process boundaries ---

def _measure_tdesign(fixture: str, i: int, variant: str) -> SchemeMetrics:
    return tdesign_scheme(load_fixture(fixture), i, variant).metrics


def _measure_tdesign_d2d(fixture: str, i: int, variant: str) -> SchemeMetrics:
    return tdesign_d2d_scheme(load_fixture(fixture), i, variant).metrics


def _measure_tgdd(m: int, q: int, t: int) -> SchemeMetrics:
    return tgdd_scheme(trivial_gdd(m, q, t), proper_oa(q, m), 1).metrics


def _measure_tgdd_d2d(m: int, q: int, t: int, s: int, l: int) -> SchemeMetrics:
    oa = proper_oa(q, m) if s == m - 1 else linear_mds_oa(q, m, s)
    return tgdd_d2d_scheme(trivial_gdd(m, q, t), oa, l).metrics


def _measure_family(n: int, k: int, family: str, idx: int) -> SchemeMetrics:
    return complete_family_scheme(n, k, family, idx).metrics


def _measure_cor5(m: int, q: int, t: int) -> SchemeMetrics:
    return cor5_scheme(m, q, t).metrics


def _measure_thm9(m: int, q: int, t: int) -> SchemeMetrics:
    return thm9_scheme(m, q, t).metrics


CONSTRUCTIONS: Dict[str, Callable[..., SchemeMetrics]] = {
    'tdesign': _measure_tdesign,
    'tdesign-d2d': _measure_tdesign_d2d,
    'tgdd': _measure_tgdd,
    'tgdd-d2d': _measure_tgdd_d2d,
    'family': _measure_family,
    'cor5': _measure_cor5,
    'thm9': _measure_thm9,
}

Task = Tuple[str, Tuple]


def measure(name: str, args: Tuple) -> SchemeMetrics:
    """Build the named construction and return its measured metrics."""
    return CONSTRUCTIONS[name](*args)


def _measure_task(task: Task) -> SchemeMetrics:
    return measure(*task)


def run_constructions(tasks: Sequence[Task], jobs: int = 1,
                      show_progress: bool = False) -> List[SchemeMetrics]:
    """Measured metrics in task order, on ``jobs`` worker processes when jobs > 1."""
    if jobs < 1:
        raise InvalidParametersError(f"jobs must be positive, got jobs={jobs}")
    if jobs == 1 or len(tasks) < 2:
        return [_measure_task(task) for task in tqdm(tasks, desc="Constructing",
                                                     disable=not show_progress)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(tqdm(pool.map(_measure_task, tasks), total=len(tasks), desc="Constructing",
                         disable=not show_progress))


def family_indices(n: int, k: int) -> List[Tuple[str, int]]:
    """Every (family, idx) the complete-design family admits at (n, k)."""
    if k < 1 or 2 * k > n:
        raise InvalidParametersError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    indices = [(FAMILY_I, i) for i in range(1, k - 1)]
    if n - k >= k + 1:
        indices += [(FAMILY_J, j) for j in range(1, min(n - k - 2, k) + 1)]
    return indices


def find_design_fixture(v: int, k: int, t: int, lam: int = 1) -> Optional[str]:
    """Name of a built-in t-(v,k,lambda) design, if one ships."""
    for name in DESIGN_FIXTURES:
        declared = load_fixture(name).declared
        if declared is not None and (declared.t, declared.v, declared.k, declared.lam) == (t, v, k, lam):
            return name
    return None


# --- table rows ---

def _table1(p: Dict[str, int]) -> List[ComparisonRow]:
    v, k, t, r = p['v'], p['k'], p['t'], p['r']
    return [
        row_from_metrics('proposed-tdesign', tdesign_metrics(v, k, 1, t, 1, THM5)),
        cweg_tdesign_metrics(v, k, t),
        table1_wccwc(v, r),
    ]


def _table2(p: Dict[str, int]) -> List[ComparisonRow]:
    m, q, t, r = p['m'], p['q'], p['t'], p['r']
    return [
        row_from_metrics('proposed-tgdd', tgdd_metrics(m, q, t, t, m - 1, 1)),
        cweg_tgdd_metrics(m, q, t),
        table2_wccwc(m, q, r),
    ]


def _family_name(family: str, idx: int) -> str:
    return f"{family}={idx}"


def _table3(p: Dict[str, int], jobs: int) -> List[ComparisonRow]:
    n, k = p['n'], p['k']
    indices = family_indices(n, k)
    measured = run_constructions([('family', (n, k, family, idx)) for family, idx in indices], jobs)
    return [row_from_metrics(_family_name(family, idx), metrics)
            for (family, idx), metrics in zip(indices, measured)]


def _table4(p: Dict[str, int]) -> List[ComparisonRow]:
    v, k, lam, t, i = p['v'], p['k'], p['lam'], p['t'], p['i']
    m, q, gt = p['m'], p['q'], p['gdd_t']
    rows = [
        row_from_metrics('tdesign-d2d', tdesign_d2d_metrics(v, k, lam, t, i, THM5)),
        row_from_metrics('tdesign-cor1-d2d', tdesign_d2d_metrics(v, k, lam, t, i, COR1)),
        row_from_metrics('tgdd-d2d', tgdd_d2d_metrics(m, q, gt, gt, p['gdd_s'], p['gdd_l'])),
        row_from_metrics('cor4-i', complete_family_metrics(p['n'], p['subset_k'], FAMILY_I, p['idx_i'])),
        row_from_metrics('cor4-j', complete_family_metrics(p['n'], p['subset_k'], FAMILY_J, p['idx_j'])),
        row_from_metrics('cor5', cor5_metrics(m, q, gt)),
        row_from_metrics('thm9', thm9_metrics(m, q, gt)),
    ]
    baselines = [maybe(jcm_tdesign_metrics, v, k, lam, t, i)]
    if lam == 1:
        baselines.append(tdesign_pda_baseline(v, k, t))
    baselines.append(maybe(jcm_tgdd_metrics, m, q, gt))
    baselines += tgdd_pda_baselines(m, q, gt)
    return rows + [row for row in baselines if row is not None]


def table_report(which: str, params: Optional[Mapping[str, Optional[int]]] = None,
                 jobs: int = 1) -> List[ComparisonRow]:
    """
    Rows of one comparison table.

    Args:
        which: 'I' (t-design topology), 'II' (t-GDD topology), 'III'
            (complete-design family, measured from constructions) or 'IV'
            (new D2D schemes followed by the JCM and transformed-PDA baselines)
        params: Overrides of ``DEFAULT_PARAMS[which]``
        jobs: Worker processes for the constructions of table III

    Returns:
        List of ComparisonRow in table order
    """
    p = resolve_params(which, params)
    logger.info("table %s with %s", which, p)
    if which == 'I':
        return _table1(p)
    if which == 'II':
        return _table2(p)
    if which == 'III':
        return _table3(p, jobs)
    return _table4(p)


# --- cross-checks ---

@dataclass(frozen=True)
class CheckResult:
    table: str
    scheme: str
    status: str
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def __str__(self) -> str:
        text = f"table {self.table} {self.scheme}: {self.status}"
        return f"{text} ({self.detail})" if self.detail else text


def _describe(row: ComparisonRow) -> str:
    K, F, ratio, load = row.key()
    return f"K={K} F={F} M/N={format_fraction(ratio)} R={format_fraction(load)}"


def _compare(which: str, expected: ComparisonRow, measured: SchemeMetrics) -> CheckResult:
    built = row_from_metrics(expected.scheme, measured)
    if expected.exact:
        ok = built.key() == expected.key()
    else:
        ok = built.key()[:3] == expected.key()[:3] and built.load <= expected.load
    detail = _describe(built) if ok else f"calculator {_describe(expected)}, constructed {_describe(built)}"
    return CheckResult(which, expected.scheme, PASS if ok else FAIL, detail)


def _identity(which: str, name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(which, name, PASS if ok else FAIL, detail)


def _check_tasks(which: str, p: Dict[str, int],
                 rows: List[ComparisonRow]) -> Tuple[List[Optional[Task]], List[CheckResult]]:
    """One construction task (or None) per row, plus the table's identity checks."""
    by_name = {row.scheme: row for row in rows}
    tasks: List[Optional[Task]] = [None] * len(rows)
    identities: List[CheckResult] = []

    def put(scheme: str, task: Optional[Task]) -> None:
        for position, row in enumerate(rows):
            if row.scheme == scheme:
                tasks[position] = task

    if which == 'I':
        fixture = find_design_fixture(p['v'], p['k'], p['t'])
        put('proposed-tdesign', None if fixture is None else ('tdesign', (fixture, 1, THM5)))
        proposed, derived = by_name['proposed-tdesign'], by_name['derived-cweg-tdesign']
        ratio = Fraction(proposed.F, derived.F)
        identities.append(_identity(which, 'identity', proposed.load == derived.load
                                    and ratio == Fraction(1, p['k'] - p['t'] + 1),
                                    f"equal R, F ratio {format_fraction(ratio)}"))
    elif which == 'II':
        put('proposed-tgdd', ('tgdd', (p['m'], p['q'], p['t'])))
        if p['t'] == p['m'] - 1:
            proposed, derived = by_name['proposed-tgdd'], by_name['derived-cweg-tgdd']
            ratio = proposed.per_user_load / derived.per_user_load
            identities.append(_identity(which, 'identity', proposed.F == derived.F
                                        and ratio == Fraction(p['m'] - 1, p['m']),
                                        f"equal F, per-user load ratio {format_fraction(ratio)}"))
    else:
        for variant, scheme in ((THM5, 'tdesign-d2d'), (COR1, 'tdesign-cor1-d2d')):
            fixture = find_design_fixture(p['v'], p['k'], p['t'], p['lam'])
            put(scheme, None if fixture is None else ('tdesign-d2d', (fixture, p['i'], variant)))
        m, q, gt = p['m'], p['q'], p['gdd_t']
        put('tgdd-d2d', ('tgdd-d2d', (m, q, gt, p['gdd_s'], p['gdd_l'])))
        put('cor4-i', ('family', (p['n'], p['subset_k'], FAMILY_I, p['idx_i'])))
        put('cor4-j', ('family', (p['n'], p['subset_k'], FAMILY_J, p['idx_j'])))
        put('cor5', ('cor5', (m, q, gt)))
        put('thm9', ('thm9', (m, q, gt)))
    return tasks, identities


def check_table(which: str, params: Optional[Mapping[str, Optional[int]]] = None,
                jobs: int = 1) -> List[CheckResult]:
    """
    Cross-check calculator rows against constructed bundles.

    Table III rows are measured, so they are checked against the closed
    forms instead. Rows without a construction (baselines, designs with no
    built-in fixture) are reported as skipped.
    """
    p = resolve_params(which, params)
    if which == 'III':
        indices = family_indices(p['n'], p['k'])
        measured = run_constructions([('family', (p['n'], p['k'], f, idx)) for f, idx in indices], jobs)
        return [_compare(which, row_from_metrics(_family_name(f, idx),
                                                 complete_family_metrics(p['n'], p['k'], f, idx)), built)
                for (f, idx), built in zip(indices, measured)]
    rows = table_report(which, p, jobs)
    tasks, identities = _check_tasks(which, p, rows)
    pending = [(position, task) for position, task in enumerate(tasks) if task is not None]
    measured = dict(zip((position for position, _ in pending),
                        run_constructions([task for _, task in pending], jobs)))
    results = []
    for position, row in enumerate(rows):
        if position in measured:
            results.append(_compare(which, row, measured[position]))
        else:
            results.append(CheckResult(which, row.scheme, SKIPPED, 'no construction'))
    return results + identities


# --- memory sharing ---

@dataclass(frozen=True)
class MemoryLoadPoint:
    """An achievable (M, R) pair, M in files."""

    M: Fraction
    R: Fraction
    F: Optional[int] = None
    scheme: str = ''

    @classmethod
    def parse(cls, text: str) -> 'MemoryLoadPoint':
        """``M:R`` with each side an integer or ``p/q``."""
        try:
            memory, load = text.split(':')
            return cls(M=Fraction(memory.strip()), R=Fraction(load.strip()))
        except ValueError as exc:
            raise InvalidParametersError(f"a point must read M:R, got '{text}'") from exc


def _cross(o: MemoryLoadPoint, a: MemoryLoadPoint, b: MemoryLoadPoint) -> Fraction:
    return (a.M - o.M) * (b.R - o.R) - (a.R - o.R) * (b.M - o.M)


@dataclass(frozen=True)
class MemoryShare:
    """Lower convex envelope of achievable points on [0, N]."""

    N: int
    vertices: Tuple[MemoryLoadPoint, ...]

    def load_at(self, memory) -> Fraction:
        """R(M) by linear interpolation between adjacent vertices."""
        memory = Fraction(memory)
        if not 0 <= memory <= self.N:
            raise OutOfRangeError(f"M={memory} lies outside [0, {self.N}]")
        for left, right in zip(self.vertices, self.vertices[1:]):
            if left.M <= memory <= right.M:
                if memory == left.M:
                    return left.R
                share = (memory - left.M) / (right.M - left.M)
                return left.R + share * (right.R - left.R)
        return self.vertices[-1].R

    def sample(self, memories: Sequence) -> List[MemoryLoadPoint]:
        return [MemoryLoadPoint(M=Fraction(memory), R=self.load_at(memory), scheme='envelope')
                for memory in memories]


def memory_share(points: Sequence[MemoryLoadPoint], N: int, K: int) -> MemoryShare:
    """
    Memory-sharing envelope of ``points`` and the trivial points (0, min(K,N))
    and (N, 0).

    Raises:
        OutOfRangeError: if a point has M outside [0, N] or R < 0
    """
    if N < 1 or K < 1:
        raise InvalidParametersError(f"N and K must be positive, got N={N}, K={K}")
    for point in points:
        if not 0 <= point.M <= N or point.R < 0:
            raise OutOfRangeError(f"point (M={point.M}, R={point.R}) is outside [0, {N}] x [0, inf)")
    trivial = [MemoryLoadPoint(M=Fraction(0), R=Fraction(min(K, N)), scheme='trivial'),
               MemoryLoadPoint(M=Fraction(N), R=Fraction(0), scheme='trivial')]
    best: Dict[Fraction, MemoryLoadPoint] = {}
    for point in list(points) + trivial:
        if point.M not in best or point.R < best[point.M].R:
            best[point.M] = point
    hull: List[MemoryLoadPoint] = []
    for point in sorted(best.values(), key=lambda p: p.M):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return MemoryShare(N=N, vertices=tuple(hull))


def memory_tradeoff_points(v: int, k: int, lam: int, t: int,
                           n_files: int) -> Dict[str, List[MemoryLoadPoint]]:
    """
    (M, R, F) points of the t-design D2D schemes at every admissible i, the
    trivial points and the JCM scheme at every integer K M/N.

    Points whose closed forms are not integral at these parameters are left
    out.
    """
    K = lam * binom(v, t) // binom(k, t)
    if K * binom(k, t) != lam * binom(v, t):
        raise InvalidParametersError(f"no t-({v},{k},{lam}) design exists with t={t}")
    series: Dict[str, List[MemoryLoadPoint]] = {'trivial': [
        MemoryLoadPoint(M=Fraction(0), R=Fraction(min(K, n_files)), scheme='trivial'),
        MemoryLoadPoint(M=Fraction(n_files), R=Fraction(0), scheme='trivial'),
    ]}
    for variant, name, top in ((THM5, 'tdesign-d2d', t - 1), (COR1, 'tdesign-cor1-d2d', min(t, k - t + 1))):
        points = []
        for i in range(1, top + 1):
            try:
                metrics = tdesign_d2d_metrics(v, k, lam, t, i, variant)
            except InvalidParametersError as exc:
                logger.debug("skipping %s at i=%d: %s", name, i, exc)
                continue
            points.append(MemoryLoadPoint(M=metrics.memory_ratio * n_files, R=metrics.load,
                                          F=metrics.F, scheme=name))
        series[name] = points
    series['jcm'] = []
    for point in range(1, K + 1):
        row = jcm_metrics(K, Fraction(point, K))
        series['jcm'].append(MemoryLoadPoint(M=row.memory_ratio * n_files, R=row.load, F=row.F,
                                             scheme='jcm'))
    return series


# --- rendering ---

COLUMNS = ['scheme', 'Gamma', 'M/N', 'K', 'L', 'R', 'R/K', 'F', 'exact']


def rows_to_frame(rows: Sequence[ComparisonRow]) -> pd.DataFrame:
    """Exact cells: ints stay ints, ratios stay Fractions."""
    return pd.DataFrame([
        {'scheme': row.scheme, 'Gamma': row.gamma, 'M/N': row.memory_ratio, 'K': row.K, 'L': row.L,
         'R': row.load, 'R/K': row.per_user_load, 'F': row.F, 'exact': row.exact}
        for row in rows
    ], columns=COLUMNS)


def _cells(frame: pd.DataFrame, render: Callable) -> pd.DataFrame:
    rendered = frame.copy()
    for column in ('M/N', 'R', 'R/K'):
        rendered[column] = [render(value) for value in frame[column]]
    rendered['exact'] = ['yes' if value else 'bound' for value in frame['exact']]
    return rendered


def render_text(rows: Sequence[ComparisonRow]) -> str:
    """Aligned table; ratios shown to three significant digits."""
    return _cells(rows_to_frame(rows), display_decimal).to_string(index=False) + '\n'


def render_csv(rows: Sequence[ComparisonRow]) -> str:
    """Comma-separated table with exact ``p/q`` ratio cells."""
    return _cells(rows_to_frame(rows), format_fraction).to_csv(index=False, lineterminator='\n')


def points_frame(points: Sequence[MemoryLoadPoint]) -> pd.DataFrame:
    return pd.DataFrame([
        {'scheme': point.scheme, 'M': format_fraction(point.M), 'R': format_fraction(point.R),
         'F': '' if point.F is None else point.F}
        for point in points
    ], columns=['scheme', 'M', 'R', 'F'])


def render_points_csv(points: Sequence[MemoryLoadPoint], axis: str = 'R') -> str:
    """Two-column ``M,<axis>`` CSV; ``axis`` is 'R' or 'F'."""
    if axis not in ('R', 'F'):
        raise InvalidParametersError(f"axis must be 'R' or 'F', got '{axis}'")
    frame = points_frame([point for point in points if axis == 'R' or point.F is not None])
    return frame[['M', axis]].to_csv(index=False, lineterminator='\n')


def render_checks(results: Sequence[CheckResult]) -> str:
    return ''.join(f"{result}\n" for result in results)
