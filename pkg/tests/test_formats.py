"""Tests for the text formats of designs, OAs, GDDs and arrays."""

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))


def test_fixtures_survive_format_and_parse():
    from src.designs import FIXTURES, format_structure, load_fixture, load_structure

    for name in FIXTURES:
        structure = load_fixture(name)
        text = format_structure(structure)
        assert format_structure(load_structure(text)) == text, name


def test_zero_based_design_is_printed_zero_based():
    from src.designs import format_design, load_fixture, parse_design

    text = format_design(load_fixture('example4'))
    assert 'block: 0 1 2' in text
    again = parse_design(text)
    assert again.design.point_base == 0
    assert again.r == 4


def test_design_header_declares_parameters():
    from src.designs import parse_design

    design = parse_design("# fano\ndesign v=7 k=3 t=2 lambda=1\nblock: 1 2 4\nblock: 2 3 5\n")
    assert str(design.declared) == '2-(7,3,1)'
    assert design.b == 2


@pytest.mark.parametrize('text,line', [
    ("", 1),
    ("design v=7\nblock: 1 2 3\n", 1),
    ("design v=7 k=3\nblock: 1 2\n", 2),
    ("# comment\n\ndesign v=7 k=3\nblock: 1 2 x\n", 4),
    ("design v=7 k=3\nblock: 1 2 3\nclass: 2\n", 3),
    ("design v=7 k=3 t=2\nblock: 1 2 3\n", 1),
    ("design v=4 k=2\nblock: 1 9\n", 1),
    ("oa q=2 r=3\n1 1\n", 2),
    ("gdd m=3 q=2\nblock: (1,1) 2\n", 2),
    ("matrix n=3\n", 1),
])
def test_malformed_structures_report_their_line(text, line):
    from src.designs import load_structure
    from src.errors import MalformedInputError

    with pytest.raises(MalformedInputError) as info:
        load_structure(text)
    assert info.value.line == line


def test_oa_format_keeps_symbol_base():
    from src.designs import format_oa, load_fixture, parse_oa

    text = format_oa(load_fixture('example7-oa'))
    assert text.splitlines()[0] == 'oa q=2 r=3 t=2 lambda=1'
    assert text.splitlines()[1] == '1 1 0'
    assert parse_oa(text).symbol_base == 0


def test_array_text_round_trip_of_example_one():
    from src.arrays import EXAMPLE1_TEXT, example1_dpda, format_array

    arr, phi = example1_dpda()
    assert format_array(arr, phi) == EXAMPLE1_TEXT
    assert (arr.F, arr.K, arr.S) == (4, 4, 4)


def test_star_pattern_round_trip():
    from src.arrays import example1_dpda, format_star_pattern, parse_star_pattern

    arr, _ = example1_dpda()
    text = format_star_pattern(arr.stars)
    assert text.splitlines()[1] == '* . * .'
    assert np.array_equal(parse_star_pattern(text), arr.stars)


@pytest.mark.parametrize('text,line', [
    ("", 1),
    ("pda F=2 k=2\n", 1),
    ("pda F=2 K=2\n* s1\n", 1),
    ("pda F=1 K=2\n* x1\n", 2),
    ("pda F=1 K=2\n* s1 s1\n", 2),
    ("pda F=1 K=2\n* s0\n", 2),
    ("pda F=1 K=2\n* s1\nphi: s1->3\n", 3),
    ("pda F=1 K=2\n* s1\nphi: s2->1\n", 3),
    ("pda F=1 K=2\n* s1\nphi s1 1\n", 3),
    ("pda F=2 K=2\n* s1\nphi: s1->1\ns1 *\n", 3),
    ("pda F=2 K=2\n* s1\ns2 *\nphi: s1->1\n", 4),
])
def test_malformed_arrays_report_their_line(text, line):
    from src.arrays import parse_array
    from src.errors import MalformedInputError

    with pytest.raises(MalformedInputError) as info:
        parse_array(text)
    assert info.value.line == line


def test_star_pattern_rejects_labels():
    from src.arrays import parse_star_pattern
    from src.errors import MalformedInputError

    with pytest.raises(MalformedInputError):
        parse_star_pattern("pda F=1 K=2\n* s1\n")
