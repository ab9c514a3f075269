"""Tests for the t-design multiaccess D2D scheme."""

import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def test_fano_placement_caches_one_point_per_row_group():
    from src.designs import load_fixture
    from src.schemes import tdesign_placement

    placement = tdesign_placement(load_fixture('fano'), 1)
    assert placement.stars.shape == (21, 7)
    assert placement.z == 3
    assert placement.memory_ratio == Fraction(1, 7)
    assert {placement.row_index[f][0] for f in placement.cache_rows(0)} == {(1,)}


def test_user_retrieves_the_rows_of_its_points():
    from src.designs import load_fixture
    from src.schemes import retrieval_stars, tdesign_placement, tdesign_topology

    fano = load_fixture('fano')
    placement = tdesign_placement(fano, 1)
    readable = retrieval_stars(tdesign_topology(fano), placement)
    assert fano.blocks[0] == (1, 2, 4)
    rows = [placement.row_index[f] for f in range(placement.F) if readable[f, 0]]
    assert {D for D, _ in rows} == {(1,), (2,), (4,)}
    assert len(rows) == 9


def test_cor1_placement_on_two_six_three_two():
    from src.designs import load_fixture
    from src.schemes import COR1, tdesign_placement

    placement = tdesign_placement(load_fixture('example13'), 2, COR1)
    assert placement.stars.shape == (45, 6)
    assert placement.z == 15
    assert placement.memory_ratio == Fraction(1, 3)


def test_fano_delivery_array():
    from src.arrays import verify_dpda
    from src.designs import load_fixture
    from src.schemes import tdesign_delivery

    fano = load_fixture('fano')
    arr, phi = tdesign_delivery(fano, 1)
    report = verify_dpda(arr, phi)
    assert report.valid
    assert report.params == (7, 21, 9, 42)
    assert Counter(phi.phi) == {k: 6 for k in range(7)}
    for s, label in enumerate(arr.labels, start=1):
        assert set(label[0]) <= set(fano.blocks[phi[s]])


def test_cor1_delivery_on_two_six_three_two():
    from src.arrays import verify_dpda
    from src.designs import load_fixture
    from src.schemes import COR1, tdesign_delivery

    arr, phi = tdesign_delivery(load_fixture('example13'), 2, COR1)
    report = verify_dpda(arr, phi)
    assert report.params == (10, 45, 36, 30)
    assert Fraction(arr.S, arr.F) == Fraction(2, 3)


@pytest.mark.parametrize('name,i,variant', [
    ('fano', 1, 'thm5'),
    ('steiner-3-8-4', 1, 'thm5'),
    ('steiner-3-8-4', 2, 'thm5'),
    ('example13', 2, 'cor1'),
])
def test_measured_metrics_match_closed_forms(name, i, variant):
    from src.designs import load_fixture
    from src.schemes import tdesign_metrics, tdesign_scheme

    design = load_fixture(name)
    d = design.declared
    bundle = tdesign_scheme(design, i, variant)
    closed = tdesign_metrics(d.v, d.k, d.lam, d.t, i, variant)
    assert bundle.metrics == closed
    assert closed.memory_ratio == Fraction(i, d.v)


def test_fano_closed_forms():
    from src.schemes import tdesign_d2d_metrics, tdesign_metrics

    metrics = tdesign_metrics(7, 3, 1, 2, 1)
    assert metrics.params == (7, 21, 9, 42)
    assert (metrics.gamma, metrics.L) == (7, 3)
    assert metrics.load == 2
    assert metrics.summary() == 'K=7 F=21 Z=9 S=42 R=2/1'
    d2d = tdesign_d2d_metrics(7, 3, 1, 2, 1)
    assert d2d.memory_ratio == Fraction(3, 7)
    assert (d2d.gamma, d2d.L, d2d.load) == (7, 1, 2)


def test_bundles_are_consistent():
    from src.designs import load_fixture
    from src.schemes import check_consistency, tdesign_d2d_scheme, tdesign_scheme

    fano = load_fixture('fano')
    bundle = tdesign_scheme(fano, 1)
    check_consistency(bundle)
    assert bundle.is_multiaccess
    assert bundle.kind == 'tdesign-thm5'
    d2d = tdesign_d2d_scheme(fano, 1)
    check_consistency(d2d)
    assert not d2d.is_multiaccess
    assert d2d.metrics.memory_ratio == Fraction(3, 7)


def test_index_ranges():
    from src.designs import load_fixture
    from src.errors import InvalidParametersError
    from src.schemes import COR1, tdesign_delivery, tdesign_metrics

    fano = load_fixture('fano')
    with pytest.raises(InvalidParametersError):
        tdesign_delivery(fano, 2)
    with pytest.raises(InvalidParametersError):
        tdesign_delivery(fano, 3, COR1)
    with pytest.raises(InvalidParametersError):
        tdesign_delivery(fano, 1, 'thm6')
    with pytest.raises(InvalidParametersError):
        tdesign_metrics(7, 3, 1, 4, 1)


def test_strength_must_be_known():
    from src.designs import Design
    from src.errors import InvalidParametersError
    from src.schemes import tdesign_placement

    bare = Design.from_blocks([(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7)])
    with pytest.raises(InvalidParametersError):
        tdesign_placement(bare, 1)
    assert tdesign_placement(bare, 1, t=2).F == 21


def test_declared_params_at_lower_strength():
    from src.designs import load_fixture
    from src.errors import InvalidParametersError
    from src.schemes import declared_params

    steiner = load_fixture('steiner-3-8-4')
    assert str(declared_params(steiner, 2)) == '2-(8,4,3)'
    assert declared_params(steiner) == steiner.declared
    with pytest.raises(InvalidParametersError):
        declared_params(steiner, 4)


def test_consistency_check_names_the_first_bad_cell():
    from dataclasses import replace

    import numpy as np
    import pytest

    from src.designs import load_fixture
    from src.errors import ConsistencyViolationError
    from src.schemes import THM5, check_consistency, tdesign_scheme

    bundle = tdesign_scheme(load_fixture('fano'), 1, THM5)
    check_consistency(bundle)
    j, k = (int(x) for x in np.argwhere(~bundle.delivery.stars)[0])
    tampered = replace(bundle, delivery=bundle.delivery.with_cell(j, k, 0))
    with pytest.raises(ConsistencyViolationError) as info:
        check_consistency(tampered)
    assert info.value.cell == (j, k)
    assert 'a star but not retrievable' in str(info.value)
