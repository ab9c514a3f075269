"""Placement delivery arrays: representation, checks and metrics."""

from .checks import IRREGULAR, Condition, PdaReport, Violation, find_phi, phi_candidates, verify_dpda, verify_pda
from .coded_array import STAR, CodedArray, SenderMap
from .fixtures import EXAMPLE1_TEXT, example1_dpda
from .formats import format_array, format_star_pattern, parse_array, parse_star_pattern
from .man import man_pda
from .metrics import SchemeMetrics, closed_form_metrics, parse_metrics_lines, scheme_metrics_from_dpda

__all__ = [
    'IRREGULAR', 'Condition', 'PdaReport', 'Violation', 'find_phi', 'phi_candidates',
    'verify_dpda', 'verify_pda',
    'STAR', 'CodedArray', 'SenderMap',
    'EXAMPLE1_TEXT', 'example1_dpda',
    'format_array', 'format_star_pattern', 'parse_array', 'parse_star_pattern',
    'man_pda',
    'SchemeMetrics', 'closed_form_metrics', 'parse_metrics_lines', 'scheme_metrics_from_dpda',
]
