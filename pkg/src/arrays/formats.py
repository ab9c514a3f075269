"""Text format for coded arrays and placement arrays.

::

    pda F=4 K=4
    * s1 * s2
    s3 * s4 *
    phi: s1->1

``*`` is a star, ``s<id>`` an integer, ``.`` an empty placement cell.
``phi:`` lines give the sending column (1-based) of each integer.
"""

import re
from typing import List, Optional, Tuple

import numpy as np

from ..errors import InvalidParametersError, MalformedInputError
from .coded_array import STAR, CodedArray, SenderMap

_HEADER = re.compile(r'^pda F=(\d+) K=(\d+)$')
_LABEL = re.compile(r'^s(\d+)$')
_PHI = re.compile(r'^phi:\s*s(\d+)->(\d+)$')


def format_array(arr: CodedArray, phi: Optional[SenderMap] = None) -> str:
    lines = [f"pda F={arr.F} K={arr.K}"]
    for row in arr.cells:
        lines.append(' '.join('*' if value == STAR else f"s{value}" for value in row))
    if phi is not None:
        lines += [f"phi: s{s}->{col + 1}" for s, col in phi.items()]
    return '\n'.join(lines) + '\n'


def format_star_pattern(stars: np.ndarray) -> str:
    """Placement arrays: stars and empty cells only."""
    rows, cols = stars.shape
    lines = [f"pda F={rows} K={cols}"]
    lines += [' '.join('*' if cell else '.' for cell in row) for row in stars]
    return '\n'.join(lines) + '\n'


def _read_grid(text: str) -> Tuple[List[List[str]], List[Tuple[int, str]], int]:
    raw = [(n, line.strip()) for n, line in enumerate(text.splitlines(), start=1)]
    content = [(n, line) for n, line in raw if line and not line.startswith('#')]
    if not content:
        raise MalformedInputError("empty input", line=1)
    header_line, header = content[0]
    match = _HEADER.match(header)
    if not match:
        raise MalformedInputError(f"expected 'pda F=<F> K=<K>', got '{header}'", line=header_line)
    F, K = int(match.group(1)), int(match.group(2))
    if F < 1 or K < 1:
        raise MalformedInputError("F and K must be positive", line=header_line)
    body = content[1:]
    grid_lines = [(n, line) for n, line in body if not line.startswith('phi:')]
    extra = [(n, line) for n, line in body if line.startswith('phi:')]
    if len(grid_lines) != F:
        where = grid_lines[F][0] if len(grid_lines) > F else header_line
        raise MalformedInputError(f"expected {F} rows, found {len(grid_lines)}", line=where)
    grid = []
    for number, line in grid_lines:
        tokens = line.split()
        if len(tokens) != K:
            raise MalformedInputError(f"row has {len(tokens)} cells, header says K={K}", line=number)
        grid.append((number, tokens))
    if extra and extra[0][0] < grid_lines[-1][0]:
        raise MalformedInputError("phi lines must follow the array rows", line=extra[0][0])
    return grid, extra, header_line


def parse_array(text: str) -> Tuple[CodedArray, Optional[SenderMap]]:
    """
    Read a coded array and, when present, its sender map.

    Raises:
        MalformedInputError: on any token or shape problem, with its line
    """
    grid, phi_lines, header_line = _read_grid(text)
    cells = []
    for number, tokens in grid:
        row = []
        for token in tokens:
            if token == '*':
                row.append(STAR)
                continue
            match = _LABEL.match(token)
            if not match or int(match.group(1)) < 1:
                raise MalformedInputError(f"expected '*' or 's<id>', got '{token}'", line=number)
            row.append(int(match.group(1)))
        cells.append(row)
    try:
        arr = CodedArray.from_integers(np.array(cells, dtype=np.int64))
    except InvalidParametersError as exc:
        raise MalformedInputError(str(exc), line=header_line) from exc
    if not phi_lines:
        return arr, None

    senders = {}
    for number, line in phi_lines:
        match = _PHI.match(line)
        if not match:
            raise MalformedInputError(f"expected 'phi: s<id>-><col>', got '{line}'", line=number)
        s, col = int(match.group(1)), int(match.group(2))
        if not 1 <= s <= arr.S or s in senders:
            raise MalformedInputError(f"phi entry for s{s} is out of range or repeated", line=number)
        if not 1 <= col <= arr.K:
            raise MalformedInputError(f"sender column {col} outside 1..{arr.K}", line=number)
        senders[s] = col - 1
    if len(senders) != arr.S:
        raise MalformedInputError(f"phi covers {len(senders)} of {arr.S} integers", line=phi_lines[-1][0])
    return arr, SenderMap(phi=tuple(senders[s] for s in range(1, arr.S + 1)))


def parse_star_pattern(text: str) -> np.ndarray:
    grid, phi_lines, _ = _read_grid(text)
    if phi_lines:
        raise MalformedInputError("placement arrays carry no phi lines", line=phi_lines[0][0])
    rows = []
    for number, tokens in grid:
        if any(token not in ('*', '.') for token in tokens):
            raise MalformedInputError("placement cells must be '*' or '.'", line=number)
        rows.append([token == '*' for token in tokens])
    return np.array(rows, dtype=bool)
