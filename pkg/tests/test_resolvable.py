"""Tests for resolvable designs, CRD profiles and the OA-to-CRD mapping."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def _classes(res):
    """Parallel classes as sets of printed blocks."""
    return [frozenset(frozenset(res.design.display_block(res.design.blocks[i])) for i in cls)
            for cls in res.classes]


def _as_sets(*classes):
    return [frozenset(frozenset(int(ch) for ch in word) for word in cls.split()) for cls in classes]


def test_resolvable_from_code_reproduces_the_ternary_example():
    from src.designs import resolvable_from_code

    res = resolvable_from_code(3, ((1, 0), (0, 1), (1, 1), (1, 2)))
    assert _classes(res) == _as_sets('012 345 678', '036 147 258', '057 138 246', '048 237 156')
    # blocks within a class follow the level value
    assert res.design.display_blocks()[6:9] == [(0, 5, 7), (1, 3, 8), (2, 4, 6)]


def test_resolvable_from_code_small_cases():
    from src.designs import crd_profile, resolvable_from_code

    single = resolvable_from_code(2, ((1,),))
    assert _classes(single) == _as_sets('0 1')
    res = resolvable_from_code(2, ((1, 0), (0, 1), (1, 1)))
    assert res.r == 3
    assert crd_profile(res).mu[2] == 1


def test_resolvable_from_code_errors():
    from src.designs import resolvable_from_code
    from src.errors import InvalidParametersError, UnsupportedFieldError

    with pytest.raises(UnsupportedFieldError):
        resolvable_from_code(6, ((1, 0),))
    with pytest.raises(InvalidParametersError):
        resolvable_from_code(3, ((0, 0),))
    with pytest.raises(InvalidParametersError):
        resolvable_from_code(3, ((1, 3),))


def test_crd_profile_of_printed_examples():
    from src.designs import crd_profile, load_fixture

    four = crd_profile(load_fixture('example5'))
    assert four.mu == {2: 1, 3: None}
    assert four.is_crd and four.strength == 2
    assert not crd_profile(load_fixture('example7')).is_crd
    assert crd_profile(load_fixture('example4')).mu[2] == 1


def test_resolution_rejects_non_partitions():
    from src.designs import Design, Resolution
    from src.errors import InvalidParametersError

    design = Design.from_blocks([(1, 2), (3, 4), (1, 3), (2, 4)], v=4)
    with pytest.raises(InvalidParametersError):
        Resolution(design=design, classes=((0, 2), (1, 3)))


def test_crd_from_binary_oa_of_strength_two():
    from src.designs import crd_from_oa, crd_profile, load_fixture

    res = crd_from_oa(load_fixture('example8-oa'))
    assert res.design.v == 8 and res.design.b == 14 and res.r == 7
    assert res.design.k == 4
    classes = _classes(res)
    assert classes[0] == _as_sets('1234 5678')[0]
    assert classes[1] == _as_sets('1256 3478')[0]
    assert crd_profile(res).mu[2] == 2


def test_crd_from_small_oa_and_single_column():
    from src.designs import OrthogonalArray, crd_from_oa, crd_profile, load_fixture

    res = crd_from_oa(load_fixture('example7-oa'))
    assert res.design.v == 4 and res.r == 3 and res.design.k == 2
    assert crd_profile(res).mu[2] == 1
    column = crd_from_oa(OrthogonalArray(q=3, rows=((1,), (2,), (3,)), strength=1, index=1))
    assert column.design.blocks == ((1,), (2,), (3,))


def test_crd_from_oa_rejects_repeated_rows():
    from src.designs import OrthogonalArray, crd_from_oa
    from src.errors import DuplicateRowsError

    with pytest.raises(DuplicateRowsError):
        crd_from_oa(OrthogonalArray(q=2, rows=((1, 1), (1, 1), (2, 2), (2, 2))))
