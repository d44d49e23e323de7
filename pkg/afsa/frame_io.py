"""
Frame documents and labelling output.

A frame document looks like:

    frame hlaf          # kind: daf, hlaf, bhaf, setaf or hsaf
    arg a
    arg b
    atk r1 = {a} -> b

Labellings are written as JSON Lines with sorted keys.
"""
import json
import re
import sys
from pathlib import Path
from typing import Dict, List, Mapping, Sequence

import numpy as np

from .errors import DomainValueError, FrameParseError, InvalidFrameworkError
from .framework import Attack, Framework, FrameworkKind, ensure_valid, validate
from .logger import logger
from .logic3 import Truth3

_ID = r'[A-Za-z_][A-Za-z0-9_]*'
HEADER_RE = re.compile(r'frame (\S+)\Z')
ARG_RE = re.compile(rf'arg ({_ID})\Z')
ATK_RE = re.compile(rf'atk ({_ID}) = \{{({_ID}(?:, {_ID})*)\}} -> ({_ID})\Z')
ID_RE = re.compile(_ID)

KINDS = {kind.value: kind for kind in FrameworkKind}


def _strip(raw: str) -> str:
    return raw.split('#', 1)[0].rstrip()


def parse_frame(text: str) -> Framework:
    """
    Parse a frame document.

    Args:
        text: Document text

    Returns:
        Validated framework

    Raises:
        FrameParseError: On malformed lines, unknown ids and redeclarations
        InvalidFrameworkError: When the result breaks its kind's constraints
    """
    kind = None
    arguments: List[str] = []
    attacks: List[Attack] = []
    declared = set()

    def declare(name: str, lineno: int, column: int):
        if name in declared:
            raise FrameParseError(f'redeclaration of {name}', lineno, column)
        declared.add(name)

    def resolve(name: str, lineno: int, column: int):
        if name not in declared:
            raise FrameParseError(f'unknown id {name}', lineno, column)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue

        if kind is None:
            match = HEADER_RE.match(line)
            if not match:
                raise FrameParseError("expected header 'frame <kind>'", lineno)
            if match.group(1) not in KINDS:
                raise FrameParseError(f'unknown frame kind {match.group(1)}', lineno, match.start(1) + 1)
            kind = KINDS[match.group(1)]
            continue

        match = ARG_RE.match(line)
        if match:
            declare(match.group(1), lineno, match.start(1) + 1)
            arguments.append(match.group(1))
            continue

        match = ATK_RE.match(line)
        if match:
            source = []
            for member in ID_RE.finditer(match.group(2)):
                column = match.start(2) + member.start() + 1
                resolve(member.group(), lineno, column)
                if member.group() in source:
                    raise FrameParseError(f'duplicate source member {member.group()}', lineno, column)
                source.append(member.group())
            resolve(match.group(3), lineno, match.start(3) + 1)
            declare(match.group(1), lineno, match.start(1) + 1)
            attacks.append(Attack(match.group(1), frozenset(source), match.group(3)))
            continue

        directive = line.split(' ', 1)[0]
        if directive in ('arg', 'atk', 'frame'):
            raise FrameParseError(f'malformed {directive} line', lineno)
        raise FrameParseError(f'unknown directive {directive!r}', lineno)

    if kind is None:
        raise FrameParseError("missing header 'frame <kind>'", 1)

    framework = Framework(kind, frozenset(arguments), tuple(attacks))
    report = validate(framework)
    if not report.ok:
        raise InvalidFrameworkError(report)
    for warning in report.warnings:
        logger.warning(warning)
    return framework


def load_frame(path: str) -> Framework:
    """Parse the frame document at path, or standard input for '-'."""
    if path == '-':
        return parse_frame(sys.stdin.read())
    return parse_frame(Path(path).read_text(encoding='utf-8'))


def serialize_frame(framework: Framework) -> str:
    """Canonical document: sorted arg lines, attacks in declaration order."""
    ensure_valid(framework)
    lines = [f'frame {framework.kind.value}']
    lines += [f'arg {name}' for name in sorted(framework.arguments)]
    for attack in framework.attacks:
        members = sorted(attack.source, key=lambda name: (name not in framework.arguments, name))
        lines.append(f'atk {attack.id} = {{{", ".join(members)}}} -> {attack.target}')
    return '\n'.join(lines) + '\n'


def format_real(value: float) -> str:
    """Positional decimal with 12 significant digits."""
    value = float(value)
    # decimal exponent after rounding, so 0.9999999999999 prints as 1.00000000000
    exponent = int(np.format_float_scientific(value, precision=11, unique=False).split('e')[1])
    return np.format_float_positional(
        value, precision=max(11 - exponent, 0), unique=False, fractional=True, trim='k'
    )


def _format_three_valued(value) -> str:
    truth = value if isinstance(value, Truth3) else Truth3(value)
    return str(truth)


def write_labellings(labellings: Sequence[Mapping], mode: str = 'three_valued') -> str:
    """
    One JSON object per labelling, keys sorted.

    Args:
        labellings: Labellings sharing one domain
        mode: 'three_valued' writes "0", "1/2", "1"; 'real' writes 12-digit decimals

    Raises:
        DomainValueError: If the labellings have different domains
    """
    if mode == 'three_valued':
        formatter = _format_three_valued
    elif mode == 'real':
        formatter = format_real
    else:
        raise ValueError(f'unknown labelling mode {mode!r}')

    if not labellings:
        return ''
    domain = set(labellings[0])
    lines = []
    for labelling in labellings:
        if set(labelling) != domain:
            raise DomainValueError('labellings do not share one domain')
        row: Dict[str, str] = {name: formatter(value) for name, value in labelling.items()}
        lines.append(json.dumps(row, sort_keys=True, separators=(',', ':'), ensure_ascii=False))
    return '\n'.join(lines) + '\n'
