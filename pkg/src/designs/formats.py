"""Plain-text formats for designs, orthogonal arrays and GDDs.

Design::

    design v=7 k=3 t=2 lambda=1
    block: 1 2 4
    class: 1 2

OA::

    oa q=2 r=3 t=2 lambda=1
    1 1 0

GDD::

    gdd m=3 q=2 t=2 lambda=1
    block: (1,1) (2,1) (3,1)

``t=`` and ``lambda=`` are optional. Blank lines and ``#`` comments are
ignored; anything else that does not fit is rejected with its line number.
Structures written with 0-based labels are read back 0-based.
"""

import re
from typing import Dict, List, Tuple, Union

from ..errors import InvalidParametersError, MalformedInputError
from .blocks import Design, DesignParams
from .gdd import GroupDivisibleDesign
from .orthogonal import OrthogonalArray
from .resolvable import Resolution

Structure = Union[Design, Resolution, OrthogonalArray, GroupDivisibleDesign]

_HEADER_KEYS = {
    'design': ({'v', 'k'}, {'t', 'lambda'}),
    'oa': ({'q', 'r'}, {'t', 'lambda'}),
    'gdd': ({'m', 'q'}, {'t', 'lambda'}),
}
_PAIR = re.compile(r'^\((\d+),(\d+)\)$')


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            lines.append((number, line))
    if not lines:
        raise MalformedInputError("empty input", line=1)
    return lines


def _parse_header(number: int, line: str, kind: str) -> Dict[str, int]:
    tokens = line.split()
    if tokens[0] != kind:
        raise MalformedInputError(f"expected a '{kind}' header, got '{tokens[0]}'", line=number)
    required, optional = _HEADER_KEYS[kind]
    values = {}
    for token in tokens[1:]:
        key, sep, value = token.partition('=')
        if not sep or key not in required | optional or key in values:
            raise MalformedInputError(f"unexpected header token '{token}'", line=number)
        values[key] = _int(value, number)
    missing = required - set(values)
    if missing:
        raise MalformedInputError(f"header is missing {sorted(missing)}", line=number)
    return values


def _int(token: str, number: int) -> int:
    if not re.fullmatch(r'\d+', token):
        raise MalformedInputError(f"expected a non-negative integer, got '{token}'", line=number)
    return int(token)


def _rebuild(error: InvalidParametersError, number: int) -> MalformedInputError:
    return MalformedInputError(str(error), line=number)


def parse_design(text: str) -> Union[Design, Resolution]:
    """Read a design; ``class:`` lines turn the result into a Resolution."""
    lines = _content_lines(text)
    header_line, header = lines[0]
    head = _parse_header(header_line, header, 'design')
    blocks: List[Tuple[int, ...]] = []
    classes: List[Tuple[int, ...]] = []
    for number, line in lines[1:]:
        tag, sep, rest = line.partition(':')
        if not sep or tag not in ('block', 'class'):
            raise MalformedInputError(f"expected 'block:' or 'class:', got '{line}'", line=number)
        values = tuple(_int(token, number) for token in rest.split())
        if not values:
            raise MalformedInputError(f"'{tag}:' line has no entries", line=number)
        if tag == 'block':
            if classes:
                raise MalformedInputError("block lines must precede class lines", line=number)
            if len(values) != head['k']:
                raise MalformedInputError(f"block has {len(values)} points, header says k={head['k']}",
                                          line=number)
            blocks.append(values)
        else:
            if any(not 1 <= i <= len(blocks) for i in values):
                raise MalformedInputError(f"class refers to a block outside 1..{len(blocks)}", line=number)
            classes.append(tuple(i - 1 for i in values))

    base = 0 if any(0 in block for block in blocks) else 1
    shifted = [tuple(sorted(p + 1 - base for p in block)) for block in blocks]
    if any(p > head['v'] for block in shifted for p in block):
        raise MalformedInputError(f"a block uses a point beyond v={head['v']}", line=header_line)
    declared = None
    if 't' in head or 'lambda' in head:
        if not {'t', 'lambda'} <= set(head):
            raise MalformedInputError("t= and lambda= must be given together", line=header_line)
        declared = DesignParams(t=head['t'], v=head['v'], k=head['k'], lam=head['lambda'])
    try:
        design = Design(points=tuple(range(1, head['v'] + 1)), blocks=tuple(shifted),
                        declared=declared, point_base=base)
        return Resolution(design=design, classes=tuple(classes)) if classes else design
    except InvalidParametersError as exc:
        raise _rebuild(exc, header_line) from exc


def format_design(structure: Union[Design, Resolution]) -> str:
    design = structure.design if isinstance(structure, Resolution) else structure
    header = f"design v={design.v} k={design.k or 0}"
    if design.declared is not None:
        header += f" t={design.declared.t} lambda={design.declared.lam}"
    lines = [header]
    lines += ['block: ' + ' '.join(map(str, design.display_block(b))) for b in design.blocks]
    if isinstance(structure, Resolution):
        lines += ['class: ' + ' '.join(str(i + 1) for i in cls) for cls in structure.classes]
    return '\n'.join(lines) + '\n'


def parse_oa(text: str) -> OrthogonalArray:
    lines = _content_lines(text)
    header_line, header = lines[0]
    head = _parse_header(header_line, header, 'oa')
    rows = []
    for number, line in lines[1:]:
        row = tuple(_int(token, number) for token in line.split())
        if len(row) != head['r']:
            raise MalformedInputError(f"row has {len(row)} symbols, header says r={head['r']}", line=number)
        rows.append(row)
    if not rows:
        raise MalformedInputError("orthogonal array has no rows", line=header_line)
    base = 0 if any(0 in row for row in rows) else 1
    shifted = tuple(tuple(x + 1 - base for x in row) for row in rows)
    try:
        return OrthogonalArray(q=head['q'], rows=shifted, strength=head.get('t'),
                               index=head.get('lambda'), symbol_base=base)
    except InvalidParametersError as exc:
        raise _rebuild(exc, header_line) from exc


def format_oa(oa: OrthogonalArray) -> str:
    header = f"oa q={oa.q} r={oa.columns}"
    if oa.strength is not None:
        header += f" t={oa.strength}"
    if oa.index is not None:
        header += f" lambda={oa.index}"
    lines = [header] + [' '.join(map(str, oa.display_row(row))) for row in oa.rows]
    return '\n'.join(lines) + '\n'


def parse_gdd(text: str) -> GroupDivisibleDesign:
    lines = _content_lines(text)
    header_line, header = lines[0]
    head = _parse_header(header_line, header, 'gdd')
    raw_blocks = []
    for number, line in lines[1:]:
        tag, sep, rest = line.partition(':')
        if not sep or tag != 'block':
            raise MalformedInputError(f"expected 'block:', got '{line}'", line=number)
        block = []
        for token in rest.split():
            match = _PAIR.match(token)
            if not match:
                raise MalformedInputError(f"expected a point '(u,v)', got '{token}'", line=number)
            block.append((int(match.group(1)), int(match.group(2))))
        if not block:
            raise MalformedInputError("'block:' line has no points", line=number)
        raw_blocks.append(block)
    base = 0 if any(0 in point for block in raw_blocks for point in block) else 1
    try:
        return GroupDivisibleDesign.from_blocks(
            head['m'], head['q'],
            [[(u + 1 - base, v + 1 - base) for u, v in block] for block in raw_blocks],
            t=head.get('t'), lam=head.get('lambda'),
        )
    except InvalidParametersError as exc:
        raise _rebuild(exc, header_line) from exc


def format_gdd(gdd: GroupDivisibleDesign) -> str:
    header = f"gdd m={gdd.m} q={gdd.q}"
    if gdd.t is not None:
        header += f" t={gdd.t}"
    if gdd.lam is not None:
        header += f" lambda={gdd.lam}"
    lines = [header] + ['block: ' + ' '.join(f"({u},{v})" for u, v in block) for block in gdd.blocks]
    return '\n'.join(lines) + '\n'


def load_structure(text: str) -> Structure:
    """Dispatch on the header keyword."""
    number, first = _content_lines(text)[0]
    keyword = first.split()[0]
    parsers = {'design': parse_design, 'oa': parse_oa, 'gdd': parse_gdd}
    if keyword not in parsers:
        raise MalformedInputError(f"unknown structure type '{keyword}'", line=number)
    return parsers[keyword](text)


def format_structure(structure: Structure) -> str:
    if isinstance(structure, (Design, Resolution)):
        return format_design(structure)
    if isinstance(structure, OrthogonalArray):
        return format_oa(structure)
    if isinstance(structure, GroupDivisibleDesign):
        return format_gdd(structure)
    raise TypeError(f"cannot format {type(structure).__name__}")
