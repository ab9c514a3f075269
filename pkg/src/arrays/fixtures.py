"""Built-in arrays."""

from typing import Tuple

from .coded_array import CodedArray, SenderMap
from .formats import parse_array

# (4,4,2,4) DPDA with the identity sender map
EXAMPLE1_TEXT = """\
pda F=4 K=4
* s3 * s1
s3 * * s2
* s4 s1 *
s4 * s2 *
phi: s1->1
phi: s2->2
phi: s3->3
phi: s4->4
"""


def example1_dpda() -> Tuple[CodedArray, SenderMap]:
    return parse_array(EXAMPLE1_TEXT)
