"""Tests for the original D2D constructions: GDD rows, complete designs and the binary case."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def test_gdd_row_dpda_of_the_binary_example():
    from src.arrays import verify_dpda
    from src.schemes import thm9_dpda

    arr, phi = thm9_dpda(3, 2, 2)
    report = verify_dpda(arr, phi)
    assert report.valid
    assert report.params == (4, 12, 9, 4)
    assert {label[1] for label in arr.labels} == {1}


@pytest.mark.parametrize('m,q,t', [(3, 2, 2), (3, 3, 2), (4, 2, 2)])
def test_gdd_row_dpda_matches_closed_forms(m, q, t):
    from src.schemes import thm9_metrics, thm9_scheme

    bundle = thm9_scheme(m, q, t)
    assert bundle.metrics == thm9_metrics(m, q, t)
    assert bundle.kind == 'thm9'


def test_gdd_row_closed_forms():
    from src.errors import InvalidParametersError
    from src.schemes import thm9_metrics

    metrics = thm9_metrics(3, 2, 2)
    assert metrics.memory_ratio == Fraction(3, 4)
    assert metrics.load == Fraction(1, 3)
    assert thm9_metrics(3, 3, 2).params == (9, 27, 15, 36)
    with pytest.raises(InvalidParametersError):
        thm9_metrics(3, 2, 3)


@pytest.mark.parametrize('family,idx,ratio,F,load', [
    ('i', 1, Fraction(3, 8), 24, Fraction(35, 2)),
    ('j', 1, Fraction(5, 8), 80, Fraction(21, 4)),
    ('j', 2, Fraction(25, 28), 280, Fraction(1)),
    ('j', 3, Fraction(55, 56), 280, Fraction(1, 4)),
])
def test_complete_family_closed_forms(family, idx, ratio, F, load):
    from src.schemes import complete_family_metrics

    metrics = complete_family_metrics(8, 3, family, idx)
    assert (metrics.memory_ratio, metrics.F, metrics.load) == (ratio, F, load)
    assert metrics.K == 56


@pytest.mark.parametrize('family,idx', [('i', 1), ('j', 2)])
def test_complete_family_arrays_match_closed_forms(family, idx):
    from src.schemes import complete_family_metrics, complete_family_scheme

    bundle = complete_family_scheme(8, 3, family, idx)
    assert bundle.metrics == complete_family_metrics(8, 3, family, idx)
    assert bundle.kind == f"cor4-{family}"


def test_printed_family_formulas():
    from src.errors import OutOfRangeError
    from src.schemes import complete_family_metrics

    printed = complete_family_metrics(8, 3, 'j', 1, as_printed=True)
    assert (printed.F, printed.memory_ratio, printed.load) == (40, Fraction(5, 8), Fraction(21, 2))
    assert complete_family_metrics(8, 3, 'i', 1, as_printed=True) == complete_family_metrics(8, 3, 'i', 1)
    with pytest.raises(OutOfRangeError):
        complete_family_metrics(8, 3, 'j', 3, as_printed=True)


@pytest.mark.parametrize('n,k,family,idx', [
    (8, 3, 'i', 2),
    (8, 3, 'j', 4),
    (8, 5, 'i', 1),
    (8, 3, 'x', 1),
])
def test_complete_family_ranges(n, k, family, idx):
    from src.errors import InvalidParametersError
    from src.schemes import complete_family_metrics

    with pytest.raises(InvalidParametersError):
        complete_family_metrics(n, k, family, idx)


def test_binary_trivial_gdd_scheme():
    from src.schemes import check_consistency, cor5_metrics, cor5_scheme

    bundle = cor5_scheme(3, 2, 2)
    check_consistency(bundle)
    assert bundle.kind == 'cor5'
    assert bundle.metrics == cor5_metrics(3, 2, 2)
    assert bundle.metrics.params == (12, 8, 6, 8)
    assert bundle.metrics.memory_ratio == Fraction(3, 4)
    assert bundle.metrics.load == 1
