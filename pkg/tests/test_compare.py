"""Tests for baselines, comparison tables, cross-checks and memory sharing."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


@pytest.mark.parametrize('K0,t0,r,K,load,F', [
    (6, 1, 2, 7, 5, 42),
    (3, 1, 3, 7, 4, 21),
    (6, 3, 2, 9, 1, 540),
])
def test_cyclic_wraparound_baseline(K0, t0, r, K, load, F):
    from src.evaluation import wccwc_metrics

    row = wccwc_metrics(K0, t0, r)
    assert (row.K, row.load, row.F) == (K, load, F)
    assert row.memory_ratio == Fraction(t0, K)


def test_derived_topology_baselines():
    from src.evaluation import cweg_tdesign_metrics, cweg_tgdd_metrics

    design = cweg_tdesign_metrics(7, 3, 2)
    assert (design.K, design.F, design.load, design.memory_ratio) == (7, 42, 2, Fraction(1, 7))
    gdd = cweg_tgdd_metrics(3, 3, 2)
    assert (gdd.K, gdd.F, gdd.load) == (27, 18, 6)


def test_jcm_baselines():
    from src.errors import NotApplicableError
    from src.evaluation import jcm_metrics, jcm_tdesign_metrics, jcm_tgdd_metrics
    from src.evaluation.baselines import maybe

    row = jcm_tdesign_metrics(7, 3, 1, 2, 1)
    assert (row.K, row.memory_ratio, row.F, row.load) == (7, Fraction(3, 7), 105, Fraction(4, 3))
    gdd = jcm_tgdd_metrics(3, 3, 2)
    assert (gdd.K, gdd.memory_ratio, gdd.load) == (27, Fraction(5, 9), Fraction(4, 5))
    with pytest.raises(NotApplicableError):
        jcm_metrics(7, Fraction(1, 3))
    assert maybe(jcm_metrics, 7, Fraction(1, 3)) is None


def test_transformed_pda_baselines():
    from src.evaluation import tdesign_pda_baseline, tgdd_pda_baselines

    design = tdesign_pda_baseline(7, 3, 2)
    assert (design.F, design.load, design.memory_ratio) == (42, 2, Fraction(3, 7))
    full, reduced = tgdd_pda_baselines(3, 3, 2)
    assert (full.K, full.F, full.load) == (27, 54, 6)
    assert (reduced.K, reduced.F, reduced.load) == (27, 18, 6)
    assert full.memory_ratio == reduced.memory_ratio == Fraction(5, 9)


def test_baseline_parameter_checks():
    from src.errors import InvalidParametersError
    from src.evaluation import transformed_pda_metrics, wccwc_metrics
    from src.evaluation.baselines import table2_wccwc

    with pytest.raises(InvalidParametersError):
        wccwc_metrics(6, 1, 1)
    with pytest.raises(InvalidParametersError):
        transformed_pda_metrics(4, 4, 2, 4, 0)
    with pytest.raises(InvalidParametersError):
        table2_wccwc(3, 2, 4)


def test_table_one_values():
    from src.evaluation import table_report

    rows = table_report('I')
    assert [row.scheme for row in rows] == ['proposed-tdesign', 'derived-cweg-tdesign', 'wccwc']
    assert [row.per_user_load for row in rows] == [Fraction(2, 7), Fraction(2, 7), Fraction(4, 7)]
    assert {row.gamma for row in rows} == {7}
    assert [row.F for row in rows] == [21, 42, 21]


def test_table_two_values():
    from src.evaluation import table_report

    rows = table_report('II')
    assert [row.per_user_load for row in rows] == [Fraction(4, 27), Fraction(6, 27), Fraction(1, 9)]
    assert [row.F for row in rows] == [18, 18, 540]
    proposed, derived, _ = rows
    assert proposed.per_user_load / derived.per_user_load == Fraction(2, 3)


def test_table_three_values():
    from src.evaluation import table_report

    rows = table_report('III')
    assert [row.scheme for row in rows] == ['i=1', 'j=1', 'j=2', 'j=3']
    assert [(row.memory_ratio, row.F, row.load) for row in rows] == [
        (Fraction(3, 8), 24, Fraction(35, 2)),
        (Fraction(5, 8), 80, Fraction(21, 4)),
        (Fraction(25, 28), 280, Fraction(1)),
        (Fraction(55, 56), 280, Fraction(1, 4)),
    ]


def test_table_four_rows():
    from src.evaluation import table_report

    rows = {row.scheme: row for row in table_report('IV')}
    assert list(rows)[:7] == ['tdesign-d2d', 'tdesign-cor1-d2d', 'tgdd-d2d', 'cor4-i', 'cor4-j',
                              'cor5', 'thm9']
    assert rows['tdesign-d2d'].key() == (7, 21, Fraction(3, 7), 2)
    assert rows['tgdd-d2d'].key() == (27, 18, Fraction(5, 9), 4)
    assert rows['thm9'].key() == (9, 27, Fraction(5, 9), Fraction(4, 3))
    assert rows['jcm-tdesign'].F == 105
    assert rows['transformed-tdesign-pda'].load == 2
    assert rows['jcm-tgdd'].load == Fraction(4, 5)
    assert rows['transformed-tgdd-pda-reduced'].F == 18


def test_table_parameters():
    from src.errors import InvalidParametersError
    from src.evaluation.tables import resolve_params

    assert resolve_params('I', {'v': 8, 'k': None})['v'] == 8
    assert resolve_params('IV', {'m': 4})['gdd_s'] == 3
    with pytest.raises(InvalidParametersError):
        resolve_params('I', {'m': 3})
    with pytest.raises(InvalidParametersError):
        resolve_params('V')


@pytest.mark.parametrize('which,statuses', [
    ('I', ['pass', 'skipped', 'skipped', 'pass']),
    ('II', ['pass', 'skipped', 'skipped', 'pass']),
    ('III', ['pass', 'pass', 'pass', 'pass']),
])
def test_check_tables(which, statuses):
    from src.evaluation import check_table

    results = check_table(which)
    assert [result.status for result in results] == statuses
    assert all(result.passed for result in results)


def test_check_table_four_builds_every_new_scheme():
    from src.evaluation import check_table

    results = check_table('IV')
    built = [result.scheme for result in results if result.status == 'pass']
    assert built == ['tdesign-d2d', 'tdesign-cor1-d2d', 'tgdd-d2d', 'cor4-i', 'cor4-j', 'cor5', 'thm9']
    assert all(result.passed for result in results)


def test_check_result_text():
    from src.evaluation import check_table

    first = check_table('I')[0]
    assert str(first) == 'table I proposed-tdesign: pass (K=7 F=21 M/N=1/7 R=2/1)'


def test_unknown_design_rows_are_skipped():
    from src.evaluation import check_table

    results = check_table('I', {'v': 9, 'k': 3, 't': 2, 'r': 5})
    assert results[0].status == 'skipped'


def test_constructions_run_in_worker_processes():
    from src.evaluation.tables import run_constructions

    tasks = [('thm9', (3, 2, 2)), ('thm9', (4, 2, 2)), ('cor5', (3, 2, 2))]
    measured = run_constructions(tasks, jobs=2)
    assert [metrics.K for metrics in measured] == [4, 8, 12]


def test_fixture_lookup_and_family_indices():
    from src.evaluation.tables import family_indices, find_design_fixture

    assert find_design_fixture(7, 3, 2) == 'fano'
    assert find_design_fixture(6, 3, 2, 2) == 'example13'
    assert find_design_fixture(9, 3, 2) is None
    assert family_indices(8, 3) == [('i', 1), ('j', 1), ('j', 2), ('j', 3)]


def test_rendered_tables():
    from src.evaluation import render_csv, render_text, table_report

    rows = table_report('I')
    csv = render_csv(rows).splitlines()
    assert csv[0] == 'scheme,Gamma,M/N,K,L,R,R/K,F,exact'
    assert csv[1] == 'proposed-tdesign,7,1/7,7,3,2/1,2/7,21,yes'
    text = render_text(rows)
    assert 'proposed-tdesign' in text and '0.286' in text


def test_memory_share_envelope():
    from src.evaluation import MemoryLoadPoint, memory_share

    points = [MemoryLoadPoint.parse('12:6'), MemoryLoadPoint.parse('20:10/3'), MemoryLoadPoint.parse('15:20')]
    share = memory_share(points, N=30, K=30)
    assert [(p.M, p.R) for p in share.vertices] == [(0, 30), (12, 6), (30, 0)]
    assert share.load_at(20) == Fraction(10, 3)
    assert share.load_at(6) == 18
    assert [p.R for p in share.sample([0, 30])] == [30, 0]


def test_memory_share_errors():
    from src.errors import InvalidParametersError, OutOfRangeError
    from src.evaluation import MemoryLoadPoint, memory_share

    with pytest.raises(InvalidParametersError):
        MemoryLoadPoint.parse('12')
    with pytest.raises(OutOfRangeError):
        memory_share([MemoryLoadPoint(M=Fraction(40), R=Fraction(1))], N=30, K=30)
    share = memory_share([], N=4, K=2)
    assert share.load_at(2) == 1
    with pytest.raises(OutOfRangeError):
        share.load_at(5)


def test_tradeoff_points_of_a_three_design():
    from src.evaluation import memory_tradeoff_points

    series = memory_tradeoff_points(10, 4, 1, 3, 30)
    assert set(series) == {'trivial', 'tdesign-d2d', 'tdesign-cor1-d2d', 'jcm'}
    assert [(p.M, p.R, p.F) for p in series['tdesign-d2d']] == [(12, 6, 60), (20, Fraction(10, 3), 180)]
    assert [(p.M, p.R) for p in series['tdesign-cor1-d2d']] == [(12, 6), (20, Fraction(5, 3))]
    assert [(p.M, p.R) for p in series['trivial']] == [(0, 30), (30, 0)]
    jcm = series['jcm']
    assert len(jcm) == 30
    assert (jcm[9].M, jcm[9].R) == (10, 2)


def test_points_csv():
    from src.evaluation import MemoryLoadPoint, render_points_csv

    points = [MemoryLoadPoint(M=Fraction(12), R=Fraction(6), F=60),
              MemoryLoadPoint(M=Fraction(0), R=Fraction(30))]
    assert render_points_csv(points) == 'M,R\n12/1,6/1\n0/1,30/1\n'
    assert render_points_csv(points, 'F') == 'M,F\n12/1,60\n'
