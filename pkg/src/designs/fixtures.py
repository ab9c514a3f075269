"""Small named structures used by the CLI and the tests."""

from typing import Callable, Dict

from ..errors import InvalidParametersError
from .blocks import Design, DesignParams
from .formats import Structure
from .gdd import GroupDivisibleDesign, trivial_gdd
from .orthogonal import OrthogonalArray, proper_oa
from .resolvable import Resolution, resolvable_from_code


def _blocks(*words: str):
    return [tuple(int(ch) for ch in word) for word in words]


def fano() -> Design:
    """The 2-(7,3,1) design."""
    return Design.from_blocks(_blocks('124', '235', '346', '457', '156', '267', '137'),
                              v=7, declared=DesignParams(t=2, v=7, k=3, lam=1))


def steiner_3_8_4() -> Design:
    """A 3-(8,4,1) design."""
    words = ('1256', '1278', '1357', '1368', '1458', '1467', '1234',
             '3456', '3478', '2457', '2468', '2358', '2367', '5678')
    return Design.from_blocks(_blocks(*words), v=8, declared=DesignParams(t=3, v=8, k=4, lam=1))


def two_6_3_2() -> Design:
    """A 2-(6,3,2) design."""
    words = ('124', '126', '134', '135', '156', '235', '236', '245', '346', '456')
    return Design.from_blocks(_blocks(*words), v=6, declared=DesignParams(t=2, v=6, k=3, lam=2))


def affine_plane_3() -> Resolution:
    """The 9-point resolvable design from a ternary code, printed 0-based."""
    return resolvable_from_code(3, ((1, 0), (0, 1), (1, 1), (1, 2)))


def four_point_crd() -> Resolution:
    """Classes {12,34}, {13,24}, {14,23}."""
    design = Design.from_blocks(_blocks('12', '34', '13', '24', '14', '23'), v=4)
    return Resolution(design=design, classes=((0, 1), (2, 3), (4, 5)))


def six_point_resolution() -> Resolution:
    """Resolvable but not cross resolvable."""
    design = Design.from_blocks(_blocks('12', '34', '56', '13', '25', '46', '14', '26', '35'), v=6)
    return Resolution(design=design, classes=((0, 1, 2), (3, 4, 5), (6, 7, 8)))


def binary_oa_3() -> OrthogonalArray:
    """2-(2,3,1) OA, printed over {0,1}."""
    rows = ('110', '000', '101', '011')
    return OrthogonalArray(q=2, rows=tuple(tuple(int(ch) + 1 for ch in row) for row in rows),
                           strength=2, index=1, symbol_base=0)


def binary_oa_7() -> OrthogonalArray:
    """2-(2,7,2) OA, printed over {0,1}."""
    rows = ('1111111', '1110000', '1001100', '1000011',
            '0101010', '0100101', '0011001', '0010110')
    return OrthogonalArray(q=2, rows=tuple(tuple(int(ch) + 1 for ch in row) for row in rows),
                           strength=2, index=2, symbol_base=0)


def six_point_gdd() -> GroupDivisibleDesign:
    """2-(3,2,3,1) GDD on groups {1,2}, {3,4}, {5,6}; point p is ((p+1)//2, (p-1)%2+1)."""
    def pair(p):
        return (p + 1) // 2, (p - 1) % 2 + 1
    blocks = [[pair(p) for p in block] for block in _blocks('135', '236', '146', '245')]
    return GroupDivisibleDesign.from_blocks(3, 2, blocks, t=2, lam=1)


FIXTURES: Dict[str, Callable[[], Structure]] = {
    'fano': fano,
    'steiner-3-8-4': steiner_3_8_4,
    'example4': affine_plane_3,
    'example5': four_point_crd,
    'example7': six_point_resolution,
    'example7-oa': binary_oa_3,
    'example8-oa': binary_oa_7,
    'example9-gdd': six_point_gdd,
    'example13': two_6_3_2,
    'example14-gdd': lambda: trivial_gdd(3, 3, 2),
    'example14-oa': lambda: proper_oa(3, 3),
    'example18-gdd': lambda: trivial_gdd(3, 2, 2),
    'example18-oa': lambda: proper_oa(2, 3),
}


def load_fixture(name: str) -> Structure:
    if name not in FIXTURES:
        raise InvalidParametersError(f"unknown fixture '{name}', choose from {sorted(FIXTURES)}")
    return FIXTURES[name]()
