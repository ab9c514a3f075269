"""Combinatorial structures: designs, resolutions, orthogonal arrays and GDDs."""

from .blocks import (
    NONUNIFORM,
    Design,
    DesignParams,
    block_count,
    complete_design,
    design_profile,
    dual_design,
    duplicate_blocks,
    lambda_closed_form,
)
from .fixtures import FIXTURES, load_fixture
from .formats import (
    format_design,
    format_gdd,
    format_oa,
    format_structure,
    load_structure,
    parse_design,
    parse_gdd,
    parse_oa,
)
from .gdd import GroupDivisibleDesign, gdd_from_crd, gdd_lambda_closed, gdd_profile, trivial_gdd
from .orthogonal import (
    NOT_AN_OA,
    OrthogonalArray,
    covering_check,
    is_simple,
    linear_mds_oa,
    oa_min_distance,
    oa_profile,
    proper_oa,
)
from .resolvable import CrdProfile, Resolution, crd_from_oa, crd_profile, resolvable_from_code

__all__ = [
    'NONUNIFORM', 'Design', 'DesignParams', 'block_count', 'complete_design',
    'design_profile', 'dual_design', 'duplicate_blocks', 'lambda_closed_form',
    'FIXTURES', 'load_fixture',
    'format_design', 'format_gdd', 'format_oa', 'format_structure', 'load_structure',
    'parse_design', 'parse_gdd', 'parse_oa',
    'GroupDivisibleDesign', 'gdd_from_crd', 'gdd_lambda_closed', 'gdd_profile', 'trivial_gdd',
    'NOT_AN_OA', 'OrthogonalArray', 'covering_check', 'is_simple', 'linear_mds_oa',
    'oa_min_distance', 'oa_profile', 'proper_oa',
    'CrdProfile', 'Resolution', 'crd_from_oa', 'crd_profile', 'resolvable_from_code',
]
