"""Coded caching schemes built from designs, GDDs and orthogonal arrays."""

from .bundle import SchemeBundle, check_consistency, load_bundle, original_d2d_bundle, save_bundle
from .d2d import (
    FAMILY_I,
    FAMILY_J,
    complete_family_metrics,
    complete_family_scheme,
    cor5_metrics,
    cor5_scheme,
    thm9_dpda,
    thm9_metrics,
    thm9_scheme,
)
from .placement import AccessTopology, PlacementArray, retrieval_stars
from .tdesign import (
    COR1,
    THM5,
    declared_params,
    tdesign_d2d_metrics,
    tdesign_d2d_scheme,
    tdesign_delivery,
    tdesign_metrics,
    tdesign_placement,
    tdesign_scheme,
    tdesign_topology,
)
from .tgdd import (
    tgdd_d2d_metrics,
    tgdd_d2d_scheme,
    tgdd_delivery,
    tgdd_metrics,
    tgdd_placement,
    tgdd_scheme,
    tgdd_topology,
)

__all__ = [
    'SchemeBundle', 'check_consistency', 'load_bundle', 'original_d2d_bundle', 'save_bundle',
    'FAMILY_I', 'FAMILY_J', 'complete_family_metrics', 'complete_family_scheme',
    'cor5_metrics', 'cor5_scheme', 'thm9_dpda', 'thm9_metrics', 'thm9_scheme',
    'AccessTopology', 'PlacementArray', 'retrieval_stars',
    'COR1', 'THM5', 'declared_params', 'tdesign_d2d_metrics', 'tdesign_d2d_scheme',
    'tdesign_delivery', 'tdesign_metrics', 'tdesign_placement', 'tdesign_scheme', 'tdesign_topology',
    'tgdd_d2d_metrics', 'tgdd_d2d_scheme', 'tgdd_delivery', 'tgdd_metrics',
    'tgdd_placement', 'tgdd_scheme', 'tgdd_topology',
]
