"""
Three-valued Łukasiewicz propositional logic.

Formulas are immutable ASTs over element-named variables. Truth values are exact:
evaluation runs on integer half-units (0, 1, 2), never on floats.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .config import Config
from .errors import CapExceededError, DomainValueError, UnboundVariableError
from .logger import logger


@total_ordering
class Truth3(Enum):
    ZERO = Fraction(0)
    HALF = Fraction(1, 2)
    ONE = Fraction(1)

    @property
    def units(self) -> int:
        """Value counted in halves: 0, 1 or 2."""
        return int(self.value * 2)

    @classmethod
    def from_units(cls, units: int) -> 'Truth3':
        return _BY_UNITS[units]

    @classmethod
    def parse(cls, text: str) -> 'Truth3':
        try:
            return cls(Fraction(text))
        except (ValueError, ZeroDivisionError) as e:
            raise DomainValueError(f'not a three-valued truth value: {text!r}') from e

    def __lt__(self, other):
        if not isinstance(other, Truth3):
            return NotImplemented
        return self.value < other.value

    def __str__(self):
        return _TEXT[self]


_BY_UNITS = {0: Truth3.ZERO, 1: Truth3.HALF, 2: Truth3.ONE}
_TEXT = {Truth3.ZERO: '0', Truth3.HALF: '1/2', Truth3.ONE: '1'}

Assignment3 = Mapping[str, Truth3]


class Formula:
    """Base class of the propositional AST."""

    def variables(self) -> FrozenSet[str]:
        raise NotImplementedError

    def __str__(self):
        return pretty(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def variables(self) -> FrozenSet[str]:
        return frozenset((self.name,))


@dataclass(frozen=True)
class Const(Formula):
    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        if not 0 <= value <= 1:
            raise DomainValueError(f'constant {value} outside [0, 1]')
        object.__setattr__(self, 'value', value)

    def variables(self) -> FrozenSet[str]:
        return frozenset()


@dataclass(frozen=True)
class Neg(Formula):
    operand: Formula

    def variables(self) -> FrozenSet[str]:
        return self.operand.variables()


@dataclass(frozen=True)
class _NAry(Formula):
    operands: Tuple[Formula, ...]

    def __post_init__(self):
        operands = tuple(self.operands)
        if not operands:
            raise ValueError(f'{type(self).__name__} needs at least one operand')
        object.__setattr__(self, 'operands', operands)

    def variables(self) -> FrozenSet[str]:
        return frozenset().union(*(op.variables() for op in self.operands))


class And(_NAry):
    pass


class Or(_NAry):
    pass


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula

    def variables(self) -> FrozenSet[str]:
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula

    def variables(self) -> FrozenSet[str]:
        return self.left.variables() | self.right.variables()


# Connectives on half-units
def _imp_units(x: int, y: int) -> int:
    return min(2, 2 - x + y)


def _eval_units(formula: Formula, units: Mapping[str, int]) -> int:
    if isinstance(formula, Var):
        try:
            return units[formula.name]
        except KeyError:
            raise UnboundVariableError(formula.name) from None
    if isinstance(formula, Const):
        doubled = formula.value * 2
        if doubled.denominator != 1:
            raise DomainValueError(f'constant {formula.value} is not three-valued')
        return int(doubled)
    if isinstance(formula, Neg):
        return 2 - _eval_units(formula.operand, units)
    if isinstance(formula, And):
        return min(_eval_units(op, units) for op in formula.operands)
    if isinstance(formula, Or):
        return max(_eval_units(op, units) for op in formula.operands)
    if isinstance(formula, Imp):
        return _imp_units(_eval_units(formula.left, units), _eval_units(formula.right, units))
    if isinstance(formula, Iff):
        x = _eval_units(formula.left, units)
        y = _eval_units(formula.right, units)
        return min(_imp_units(x, y), _imp_units(y, x))
    raise TypeError(f'not a formula: {formula!r}')


def _to_units(assignment: Mapping[str, Union[Truth3, Fraction, float, int]]) -> Dict[str, int]:
    units = {}
    for name, value in assignment.items():
        truth = value if isinstance(value, Truth3) else _coerce(value)
        units[name] = truth.units
    return units


def _coerce(value) -> Truth3:
    try:
        return Truth3(value)
    except ValueError:
        raise DomainValueError(f'not a three-valued truth value: {value!r}') from None


def eval3(formula: Formula, assignment: Assignment3) -> Truth3:
    """
    Evaluate a formula in three-valued Łukasiewicz logic.

    Args:
        formula: Formula to evaluate
        assignment: Truth value for every variable of the formula

    Returns:
        Exact truth value

    Raises:
        UnboundVariableError: If a variable has no value
    """
    return Truth3.from_units(_eval_units(formula, _to_units(assignment)))


def is_model3(formula: Formula, assignment: Assignment3) -> bool:
    return eval3(formula, assignment) is Truth3.ONE


def check_cap(count: int, cap: Optional[int]) -> int:
    cap = Config.ENUMERATION_CAP if cap is None else cap
    required = 3 ** count
    if required > cap:
        raise CapExceededError(required, cap)
    return required


def _models_with_prefix(formula: Formula, names: Tuple[str, ...], prefix: Tuple[int, ...]):
    found = []
    rest = names[len(prefix):]
    for tail in itertools.product((0, 1, 2), repeat=len(rest)):
        units = dict(zip(names, prefix + tail))
        if _eval_units(formula, units) == 2:
            found.append(prefix + tail)
    return found


def partitioned(search, names: Tuple[str, ...], workers: int, *args) -> List[Tuple[int, ...]]:
    """
    Run search(*args, names, prefix) over the assignment space.

    With more than one worker the space is split on the first variable's value and the
    parts are searched in separate processes; results come back in canonical order.
    """
    if workers <= 1 or not names:
        return search(*args, names, ())
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = [pool.submit(search, *args, names, (u,)) for u in (0, 1, 2)]
        return [row for job in jobs for row in job.result()]


def enumerate_models3(
    formula: Formula,
    cap: Optional[int] = None,
    variables: Optional[Sequence[str]] = None,
    workers: Optional[int] = None,
) -> List[Dict[str, Truth3]]:
    """
    All three-valued models of a formula.

    Assignments are produced in lexicographic order over the variable order (the
    given variables, else sorted names) with 0 < 1/2 < 1.

    Raises:
        CapExceededError: If 3^n exceeds cap
    """
    names = tuple(variables) if variables is not None else tuple(sorted(formula.variables()))
    missing = formula.variables() - set(names)
    if missing:
        raise UnboundVariableError(sorted(missing)[0])
    required = check_cap(len(names), cap)
    logger.debug('enumerating %d assignments over %d variables', required, len(names))
    rows = partitioned(_models_with_prefix, names, workers or Config.WORKERS, formula)
    return [{name: Truth3.from_units(u) for name, u in zip(names, row)} for row in rows]


_BINARY_SYMBOLS = {Imp: '->', Iff: '<->'}
_NARY_SYMBOLS = {And: '&', Or: '|'}


def pretty(formula: Formula, canonical: bool = False) -> str:
    """
    Fully parenthesized text of a formula.

    With canonical=True the operands of & and | are sorted by their text, which prints
    formulas equal up to commutativity of those connectives identically.
    """
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Const):
        return str(formula.value)
    if isinstance(formula, Neg):
        return '!' + pretty(formula.operand, canonical)
    if isinstance(formula, (And, Or)):
        parts = [pretty(op, canonical) for op in formula.operands]
        if len(parts) == 1:
            return parts[0]
        if canonical:
            parts.sort()
        return '(' + f' {_NARY_SYMBOLS[type(formula)]} '.join(parts) + ')'
    if isinstance(formula, (Imp, Iff)):
        symbol = _BINARY_SYMBOLS[type(formula)]
        return f'({pretty(formula.left, canonical)} {symbol} {pretty(formula.right, canonical)})'
    raise TypeError(f'not a formula: {formula!r}')


def conjunction(parts: Iterable[Formula]) -> Formula:
    """And over parts, collapsing a single operand."""
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else And(parts)
