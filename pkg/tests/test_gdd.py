"""Tests for group divisible designs."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def test_trivial_gdd_small():
    from src.designs import trivial_gdd

    gdd = trivial_gdd(3, 2, 2)
    assert len(gdd.blocks) == 12
    assert gdd.blocks[:3] == (((1, 1), (2, 1)), ((1, 1), (2, 2)), ((1, 1), (3, 1)))
    assert gdd.k == 2 and gdd.t == 2 and gdd.lam == 1


def test_trivial_gdd_counts_and_errors():
    from src.designs import trivial_gdd
    from src.errors import InvalidParametersError

    assert len(trivial_gdd(3, 3, 2).blocks) == 27
    assert len(trivial_gdd(4, 2, 3).blocks) == 32
    with pytest.raises(InvalidParametersError):
        trivial_gdd(3, 2, 3)
    with pytest.raises(InvalidParametersError):
        trivial_gdd(3, 1, 2)


def test_gdd_profile_and_closed_form():
    from src.designs import gdd_lambda_closed, gdd_profile, load_fixture, trivial_gdd

    six = load_fixture('example9-gdd')
    assert gdd_profile(six, 1) == 2
    assert gdd_lambda_closed(3, 2, 3, 1, 2, 1) == 2
    assert gdd_profile(six, 2) == 1
    assert gdd_profile(trivial_gdd(3, 3, 2), 2) == 1


@pytest.mark.parametrize('m,q,t', [(3, 2, 2), (4, 2, 2), (4, 3, 3), (5, 2, 3), (5, 3, 3)])
def test_trivial_gdd_matches_closed_form(m, q, t):
    from src.designs import gdd_lambda_closed, gdd_profile, trivial_gdd

    gdd = trivial_gdd(m, q, t)
    for i in range(1, t + 1):
        assert gdd_profile(gdd, i) == gdd_lambda_closed(m, q, t, 1, t, i)


def test_gdd_closed_form_range():
    from src.designs import gdd_lambda_closed
    from src.errors import OutOfRangeError

    with pytest.raises(OutOfRangeError):
        gdd_lambda_closed(3, 2, 3, 1, 2, 3)


def test_gdd_rejects_two_points_of_one_group():
    from src.designs import GroupDivisibleDesign
    from src.errors import InvalidParametersError

    with pytest.raises(InvalidParametersError):
        GroupDivisibleDesign.from_blocks(2, 2, [[(1, 1), (1, 2)]])


def test_gdd_from_four_point_crd():
    from src.designs import crd_profile, gdd_from_crd, load_fixture

    res = load_fixture('example5')
    gdd = gdd_from_crd(res, crd_profile(res))
    # (u, v) is the v-th block of class u: 12=(1,1) 34=(1,2) 13=(2,1) 24=(2,2) 14=(3,1) 23=(3,2)
    assert gdd.blocks == (((1, 1), (2, 1), (3, 1)), ((1, 1), (2, 2), (3, 2)),
                          ((1, 2), (2, 1), (3, 2)), ((1, 2), (2, 2), (3, 1)))
    assert (gdd.m, gdd.q, gdd.k, gdd.t, gdd.lam) == (3, 2, 3, 2, 1)


def test_oa_to_crd_to_gdd_has_index_one():
    from src.designs import crd_from_oa, crd_profile, gdd_from_crd, gdd_profile, load_fixture, proper_oa

    for oa in (load_fixture('example7-oa'), proper_oa(3, 3)):
        res = crd_from_oa(oa)
        gdd = gdd_from_crd(res, crd_profile(res))
        assert gdd_profile(gdd, oa.strength) == 1


def test_gdd_from_crd_rejects_non_crd():
    from src.designs import crd_profile, gdd_from_crd, load_fixture
    from src.errors import PreconditionFailedError

    res = load_fixture('example7')
    with pytest.raises(PreconditionFailedError):
        gdd_from_crd(res, crd_profile(res))
