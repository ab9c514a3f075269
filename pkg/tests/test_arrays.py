"""Tests for coded arrays, the C1-C4 checker and scheme metrics."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def test_example_one_is_a_regular_dpda():
    from src.arrays import example1_dpda, find_phi, verify_dpda, verify_pda

    arr, phi = example1_dpda()
    report = verify_pda(arr)
    assert report.valid
    assert report.params == (4, 4, 2, 4)
    assert report.regularity == 2
    assert report.describe() == '(4,4,2,4) g=2 valid'
    assert verify_dpda(arr, phi).valid
    assert find_phi(arr) == phi
    assert phi.phi == (0, 1, 2, 3)


def test_from_grid_interns_labels_row_major():
    from src.arrays import CodedArray

    arr = CodedArray.from_grid([[None, 'b', 'a'], ['b', None, None]])
    assert arr.labels == ('b', 'a')
    assert arr.cells.tolist() == [[0, 1, 2], [1, 0, 0]]
    assert arr.id_of('a') == 2 and arr.label_of(1) == 'b'
    assert arr.cells_by_label == {1: ((0, 1), (1, 0)), 2: ((0, 2),)}


def test_coded_array_is_read_only():
    from src.arrays import example1_dpda

    arr, _ = example1_dpda()
    with pytest.raises(ValueError):
        arr.cells[0, 0] = 3


def test_unequal_star_counts_break_c1_and_c3():
    from src.arrays import Condition, example1_dpda, verify_pda

    arr, _ = example1_dpda()
    broken = arr.with_cell(0, 0, 3)
    report = verify_pda(broken)
    assert not report.valid
    assert report.Z is None
    conditions = [v.condition for v in report.violations]
    assert conditions[0] == Condition.C1
    assert report.violations[0].columns == (0,)
    assert Condition.C3A in conditions
    assert any(v.involves(0, 0) for v in report.violations if v.condition == Condition.C3A)


def test_cross_cell_without_star_breaks_c3b():
    from src.arrays import CodedArray, Condition, verify_pda

    arr = CodedArray.from_integers([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    report = verify_pda(arr)
    assert [v.condition for v in report.violations][:1] == [Condition.C3B]
    assert str(report.violations[0]).startswith('C3b: s1 cross cells are not stars at (1,2) (2,1)')


def test_missing_integer_breaks_c2():
    from src.arrays import CodedArray, Condition, verify_pda

    arr = CodedArray(cells=CodedArray.from_integers([[0, 2], [2, 0]]).cells, labels=(1, 2))
    report = verify_pda(arr)
    assert report.violations[0].condition == Condition.C2
    assert 's1' in report.violations[0].detail
    assert report.regularity == 'irregular'


def test_wrong_sender_breaks_c4():
    from src.arrays import Condition, SenderMap, example1_dpda, verify_dpda

    arr, _ = example1_dpda()
    report = verify_dpda(arr, SenderMap(phi=(1, 1, 2, 3)))
    assert [v.condition for v in report.violations] == [Condition.C4, Condition.C4]
    short = verify_dpda(arr, SenderMap(phi=(0, 1)))
    assert short.violations[-1].condition == Condition.C4


def test_find_phi_prefers_the_smallest_column():
    from src.arrays import CodedArray, find_phi, phi_candidates

    arr = CodedArray.from_integers([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert phi_candidates(arr) == {1: ()}
    assert find_phi(arr) is None
    star_rich = CodedArray.from_integers([[0, 0, 1], [0, 0, 0], [0, 1, 0]])
    assert find_phi(star_rich).phi == (0,)


@pytest.mark.parametrize('K0,t0,params,g', [
    (3, 1, (3, 3, 1, 3), 2),
    (4, 2, (4, 6, 3, 4), 3),
    (5, 2, (5, 10, 4, 10), 3),
])
def test_man_pda_parameters(K0, t0, params, g):
    from src.arrays import man_pda, verify_pda

    report = verify_pda(man_pda(K0, t0))
    assert report.valid
    assert report.params == params
    assert report.regularity == g


def test_man_pda_labels_are_subsets():
    from src.arrays import man_pda

    arr = man_pda(3, 1)
    assert arr.labels == ((1, 2), (1, 3), (2, 3))
    assert arr.cells.tolist() == [[0, 1, 2], [1, 0, 3], [2, 3, 0]]


def test_man_pda_rejects_degenerate_parameters():
    from src.arrays import man_pda
    from src.errors import ConstructionUnsupportedError, InvalidParametersError

    with pytest.raises(ConstructionUnsupportedError):
        man_pda(3, 3)
    with pytest.raises(InvalidParametersError):
        man_pda(3, 0)


def test_metrics_of_example_one():
    from src.arrays import SchemeMetrics, example1_dpda, parse_metrics_lines, scheme_metrics_from_dpda

    metrics = scheme_metrics_from_dpda(*example1_dpda())
    assert metrics.memory_ratio == Fraction(1, 2)
    assert metrics.load == 1
    assert metrics.per_user_load == Fraction(1, 4)
    assert metrics.summary() == 'K=4 F=4 Z=2 S=4 R=1/1'
    lines = metrics.to_lines()
    assert 'load=1/1' in lines and 'exact=true' in lines
    assert SchemeMetrics.from_mapping(parse_metrics_lines(lines)) == metrics


def test_metrics_refuse_invalid_arrays():
    from src.arrays import SenderMap, example1_dpda, scheme_metrics_from_dpda
    from src.errors import PreconditionFailedError

    arr, _ = example1_dpda()
    with pytest.raises(PreconditionFailedError):
        scheme_metrics_from_dpda(arr, SenderMap(phi=(3, 3, 3, 3)))


def test_bounded_metrics_summary_and_bad_lines():
    from src.arrays import SchemeMetrics, closed_form_metrics, parse_metrics_lines
    from src.errors import MalformedInputError

    bound = closed_form_metrics(K=27, F=18, Z=10, S=72, gamma=9, L=2, z_cache=6, exact=False)
    assert bound.summary() == 'K=27 F=18 Z=10 S<=72 R<=4/1'
    assert bound.memory_ratio == Fraction(1, 3)
    with pytest.raises(MalformedInputError) as info:
        parse_metrics_lines(['K=1', 'nonsense'])
    assert info.value.line == 2
    with pytest.raises(MalformedInputError):
        SchemeMetrics.from_mapping({'K': '1'})
