"""Tests for the t-GDD multiaccess D2D scheme."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def _example14():
    from src.designs import load_fixture

    return load_fixture('example14-gdd'), load_fixture('example14-oa')


def test_placement_of_the_ternary_example():
    from src.schemes import tgdd_placement

    gdd, oa = _example14()
    placement = tgdd_placement(gdd, oa, 1)
    assert placement.stars.shape == (18, 9)
    assert placement.column_index[0] == (1, 1)
    rows = {placement.row_index[f][0] for f in placement.cache_rows(0)}
    assert rows == {(1, 1, 1), (1, 2, 3), (1, 3, 2)}
    assert placement.memory_ratio == Fraction(1, 3)


def test_user_sees_stars_where_the_row_agrees_on_a_group():
    from src.schemes import retrieval_stars, tgdd_delivery, tgdd_placement, tgdd_topology

    gdd, oa = _example14()
    placement = tgdd_placement(gdd, oa, 1)
    readable = retrieval_stars(tgdd_topology(gdd), placement)
    assert gdd.blocks[0] == ((1, 1), (2, 1))
    expected = [D[0] == 1 or D[1] == 1 for D, _ in placement.row_index]
    assert readable[:, 0].tolist() == expected
    arr, _ = tgdd_delivery(gdd, oa, 1)
    assert (arr.stars == readable).all()


def test_delivery_of_the_ternary_example():
    from src.arrays import verify_dpda
    from src.schemes import tgdd_delivery

    gdd, oa = _example14()
    arr, phi = tgdd_delivery(gdd, oa, 1)
    report = verify_dpda(arr, phi)
    assert report.valid
    assert report.params == (27, 18, 10, 72)
    assert Fraction(arr.S, arr.F) == 4


def test_label_occurrences_inside_one_row_group():
    from src.schemes import tgdd_delivery

    gdd, oa = _example14()
    assert oa.rows[0] == (1, 1, 1)
    arr, _ = tgdd_delivery(gdd, oa, 1)
    # rows 0 and 1 are the two T choices for D = 111
    alphas = sorted(arr.label_of(int(s))[1] for s in arr.cells[:2].ravel()
                    if s and arr.label_of(int(s))[0] == (1, 3, 1))
    assert alphas == [1, 2, 3, 4]


def test_sender_is_the_first_block_agreeing_on_t_groups():
    from src.schemes import tgdd_delivery

    gdd, oa = _example14()
    arr, phi = tgdd_delivery(gdd, oa, 1)
    e = (1, 1, 3)
    candidates = [block for block in gdd.blocks if sum(e[u - 1] == v for u, v in block) >= 2]
    assert candidates == [((1, 1), (2, 1)), ((1, 1), (3, 3)), ((2, 1), (3, 3))]
    assert phi[arr.id_of((e, 1))] == 0


def test_measured_metrics_of_the_ternary_example():
    from src.schemes import check_consistency, tgdd_metrics, tgdd_scheme

    gdd, oa = _example14()
    bundle = tgdd_scheme(gdd, oa, 1)
    check_consistency(bundle)
    closed = tgdd_metrics(3, 3, 2, 2, 2, 1)
    assert bundle.metrics == closed
    assert (closed.gamma, closed.L, closed.load) == (9, 2, 4)


def test_d2d_reading_of_the_ternary_example():
    from src.schemes import tgdd_d2d_metrics, tgdd_d2d_scheme

    gdd, oa = _example14()
    bundle = tgdd_d2d_scheme(gdd, oa, 1)
    assert bundle.metrics.memory_ratio == Fraction(5, 9)
    assert bundle.metrics == tgdd_d2d_metrics(3, 3, 2, 2, 2, 1)
    assert 1 - Fraction(2, 3) ** 2 == Fraction(5, 9)


def test_bound_holds_outside_the_exact_cases():
    from src.designs import linear_mds_oa, trivial_gdd
    from src.schemes import tgdd_metrics, tgdd_scheme

    bound = tgdd_metrics(4, 3, 2, 2, 2, 1)
    assert not bound.exact
    assert bound.S == 648
    assert bound.summary() == 'K=54 F=18 Z=10 S<=648 R<=36/1'
    bundle = tgdd_scheme(trivial_gdd(4, 3, 2), linear_mds_oa(3, 4, 2), 1)
    assert bundle.metrics.exact
    assert bundle.metrics.params[:3] == (54, 18, 10)
    assert bundle.metrics.load <= bound.load


def test_second_exact_case():
    from src.schemes import tgdd_metrics

    metrics = tgdd_metrics(5, 2, 2, 2, 4, 1)
    assert metrics.exact
    assert metrics.S == 2 ** 4 * 1 * 4
    wide = tgdd_metrics(6, 2, 3, 3, 4, 2)
    assert wide.exact
    assert wide.S == (64 - 16) * 1 * 4


EXACT_CASE_LIMIT = 243

# k = t, s = m-1, l = 1. Within this range every buildable instance of the
# other exact case (s = m-t+1 > t, l = m-s) also has s = m-1.
EXACT_CASES = [(m, q, t) for m in range(3, 9) for q in range(2, 16) for t in range(2, m)
               if q ** (m - 1) <= EXACT_CASE_LIMIT]
MDS_CASES = [(m, q, t) for m, q, t in EXACT_CASES if q in (2, 3, 4, 5, 7, 8, 9, 11, 13) and m <= q + 1]


def _check_exact_instance(bundle, m, q, t):
    from src.arrays import verify_dpda
    from src.evaluation import run_experiment
    from src.schemes import tgdd_metrics

    closed = tgdd_metrics(m, q, t, t, m - 1, 1)
    assert closed.exact
    assert bundle.metrics == closed
    assert verify_dpda(bundle.delivery, bundle.phi).valid
    assert run_experiment(bundle, demand_mode='random', seed=m * 100 + q * 10 + t, file_size=8).success


@pytest.mark.parametrize('m,q,t', EXACT_CASES)
def test_exact_cases_with_the_proper_oa(m, q, t):
    from src.designs import proper_oa, trivial_gdd
    from src.schemes import tgdd_scheme

    _check_exact_instance(tgdd_scheme(trivial_gdd(m, q, t), proper_oa(q, m), 1), m, q, t)


@pytest.mark.parametrize('m,q,t', MDS_CASES)
def test_exact_cases_with_a_reed_solomon_oa(m, q, t):
    from src.designs import linear_mds_oa, trivial_gdd
    from src.schemes import tgdd_scheme

    _check_exact_instance(tgdd_scheme(trivial_gdd(m, q, t), linear_mds_oa(q, m, m - 1), 1), m, q, t)


def test_parameter_checks():
    from src.designs import OrthogonalArray, proper_oa, trivial_gdd
    from src.errors import InvalidParametersError
    from src.schemes import tgdd_delivery, tgdd_metrics

    gdd, oa = _example14()
    with pytest.raises(InvalidParametersError):
        tgdd_delivery(gdd, oa, 2)
    with pytest.raises(InvalidParametersError):
        tgdd_delivery(gdd, proper_oa(2, 3), 1)
    with pytest.raises(InvalidParametersError):
        undeclared = OrthogonalArray(q=2, rows=((1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)))
        tgdd_delivery(trivial_gdd(3, 2, 2), undeclared, 1)
    with pytest.raises(InvalidParametersError):
        tgdd_metrics(3, 3, 2, 2, 3, 1)
