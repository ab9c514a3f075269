"""Scheme bundles: placement, topology, delivery, senders and metrics together."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..arrays import (
    CodedArray,
    SchemeMetrics,
    SenderMap,
    format_array,
    format_star_pattern,
    parse_array,
    parse_metrics_lines,
    parse_star_pattern,
    scheme_metrics_from_dpda,
)
from ..errors import ConsistencyViolationError, MalformedInputError
from .placement import AccessTopology, PlacementArray, retrieval_stars

logger = logging.getLogger(__name__)

PLACEMENT_FILE = 'placement.pda'
DELIVERY_FILE = 'delivery.pda'
TOPOLOGY_FILE = 'topology.txt'
METRICS_FILE = 'metrics.txt'


@dataclass(frozen=True)
class SchemeBundle:
    """
    Everything needed to run one scheme.

    ``kind`` names the construction (``tdesign``, ``tgdd``, ``thm9``, ...);
    original D2D schemes carry a ``-d2d`` suffix or are D2D by nature.
    """

    kind: str
    placement: PlacementArray
    topology: AccessTopology
    delivery: CodedArray
    phi: SenderMap
    metrics: SchemeMetrics

    @property
    def K(self) -> int:
        return self.delivery.K

    @property
    def F(self) -> int:
        return self.delivery.F

    @property
    def is_multiaccess(self) -> bool:
        return self.topology.L > 1 or self.placement.gamma != self.K


def check_consistency(bundle: SchemeBundle) -> None:
    """
    A delivery cell is a star exactly when the user can read that packet row.

    Raises:
        ConsistencyViolationError: at the first mismatching cell, row-major
    """
    if bundle.placement.F != bundle.F:
        raise ConsistencyViolationError(
            f"placement has F={bundle.placement.F} rows, delivery has F={bundle.F}")
    if bundle.topology.K != bundle.K:
        raise ConsistencyViolationError(
            f"topology has {bundle.topology.K} users, delivery has K={bundle.K}")
    readable = retrieval_stars(bundle.topology, bundle.placement)
    mismatch = np.argwhere(readable != bundle.delivery.stars)
    if len(mismatch):
        j, k = (int(x) for x in mismatch[0])
        side = 'retrievable but not a star' if readable[j, k] else 'a star but not retrievable'
        raise ConsistencyViolationError(f"cell ({j + 1},{k + 1}) is {side}", cell=(j, k))


def original_d2d_bundle(arr: CodedArray, phi: SenderMap, kind: str,
                        metrics: Optional[SchemeMetrics] = None) -> SchemeBundle:
    """One cache per user: the placement is the DPDA's own star pattern."""
    placement = PlacementArray(stars=arr.stars.copy(), row_index=tuple(range(1, arr.F + 1)),
                               column_index=tuple(range(1, arr.K + 1)))
    if metrics is None:
        metrics = scheme_metrics_from_dpda(arr, phi)
    return SchemeBundle(kind=kind, placement=placement, topology=AccessTopology.identity(arr.K),
                        delivery=arr, phi=phi, metrics=metrics)


def format_topology(topology: AccessTopology) -> str:
    return ''.join('user: ' + ' '.join(str(c + 1) for c in block) + '\n'
                   for block in topology.user_blocks)


def parse_topology(text: str) -> AccessTopology:
    blocks = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tag, sep, rest = line.partition(':')
        if not sep or tag != 'user':
            raise MalformedInputError(f"expected 'user: c1 c2 ...', got '{line}'", line=number)
        try:
            block = tuple(int(token) - 1 for token in rest.split())
        except ValueError as exc:
            raise MalformedInputError(f"cache ids must be integers: '{rest.strip()}'", line=number) from exc
        if not block or min(block) < 0:
            raise MalformedInputError("cache ids must be positive", line=number)
        blocks.append(block)
    if not blocks:
        raise MalformedInputError("topology lists no users", line=1)
    return AccessTopology(user_blocks=tuple(blocks))


def save_bundle(bundle: SchemeBundle, directory: Union[str, Path]) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / PLACEMENT_FILE).write_text(format_star_pattern(bundle.placement.stars))
    (directory / DELIVERY_FILE).write_text(format_array(bundle.delivery, bundle.phi))
    (directory / TOPOLOGY_FILE).write_text(format_topology(bundle.topology))
    metrics = [f"kind={bundle.kind}"] + bundle.metrics.to_lines()
    (directory / METRICS_FILE).write_text('\n'.join(metrics) + '\n')
    logger.info("wrote %s bundle to %s", bundle.kind, directory)
    return directory


def _read(directory: Path, name: str) -> str:
    path = directory / name
    if not path.is_file():
        raise MalformedInputError(f"bundle file {path} is missing")
    return path.read_text()


def _with_file(name: str, exc: MalformedInputError) -> MalformedInputError:
    return MalformedInputError(f"{name}: {exc}")


def load_bundle(directory: Union[str, Path]) -> SchemeBundle:
    """
    Read a bundle written by ``save_bundle``.

    Only shapes are checked here; callers decide whether to run the DPDA
    checker or the consistency check.
    """
    directory = Path(directory)
    parsed = {}
    for name, parser in ((PLACEMENT_FILE, parse_star_pattern), (DELIVERY_FILE, parse_array),
                         (TOPOLOGY_FILE, parse_topology),
                         (METRICS_FILE, lambda text: parse_metrics_lines(text.splitlines()))):
        try:
            parsed[name] = parser(_read(directory, name))
        except MalformedInputError as exc:
            raise _with_file(name, exc) from exc
    stars = parsed[PLACEMENT_FILE]
    delivery, phi = parsed[DELIVERY_FILE]
    if phi is None:
        raise MalformedInputError(f"{DELIVERY_FILE}: the delivery array has no phi lines")
    values = parsed[METRICS_FILE]
    kind = values.pop('kind', 'unknown')
    values.pop('per_user_load', None)
    try:
        metrics = SchemeMetrics.from_mapping(values)
    except MalformedInputError as exc:
        raise _with_file(METRICS_FILE, exc) from exc
    placement = PlacementArray(stars=stars, row_index=tuple(range(1, stars.shape[0] + 1)),
                               column_index=tuple(range(1, stars.shape[1] + 1)))
    return SchemeBundle(kind=kind, placement=placement, topology=parsed[TOPOLOGY_FILE],
                        delivery=delivery, phi=phi, metrics=metrics)

