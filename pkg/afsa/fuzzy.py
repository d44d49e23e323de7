"""
[0,1]-valued evaluation of formulas under a t-norm algebra.

Three named algebras are provided: Gödel (minimum), Product and Łukasiewicz, each with
the standard negation 1 - x and the residuum of its t-norm as implication. Operations
work on floats and on fractions.Fraction alike.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Callable, Dict, Mapping, Sequence

from .errors import DomainValueError, UnboundVariableError
from .logic3 import And, Const, Formula, Iff, Imp, Neg, Or, Var

Binary = Callable[[float, float], float]
Unary = Callable[[float], float]

AssignmentR = Mapping[str, float]


class Family(str, Enum):
    GODEL = 'godel'
    PRODUCT = 'product'
    LUKASIEWICZ = 'lukasiewicz'


def standard_negation(x):
    return 1 - x


def sugeno_negation(lam: float) -> Unary:
    """Sugeno negation (1 - x) / (1 + lam * x), continuous for lam > -1."""
    if lam <= -1:
        raise ValueError('Sugeno parameter must exceed -1')
    return lambda x: (1 - x) / (1 + lam * x)


def godel_tnorm(x, y):
    return min(x, y)


def product_tnorm(x, y):
    return x * y


def lukasiewicz_tnorm(x, y):
    return max(0, x + y - 1)


def godel_implication(x, y):
    return 1 if x <= y else y


def product_implication(x, y):
    return 1 if x <= y else y / x


def lukasiewicz_implication(x, y):
    # min(1, 1 - x + y), split so that x == y gives exactly 1 in floating point
    return 1 if x <= y else 1 - x + y


def _check_unit(value, what: str = 'value'):
    if not 0 <= value <= 1:
        raise DomainValueError(f'{what} {value} outside [0, 1]')
    return value


def luk_nary_closed_form(xs: Sequence[float]) -> float:
    """
    n-ary Łukasiewicz t-norm in closed form.

    Returns 0 when the sum is at most n - 1, otherwise sum - n + 1.
    """
    if not xs:
        raise DomainValueError('Łukasiewicz t-norm needs at least one value')
    total = 0
    for x in xs:
        total += _check_unit(x)
    n = len(xs)
    return 0 if total <= n - 1 else total - n + 1


@dataclass(frozen=True)
class Algebra:
    """Negation, t-norm and R-implication of one fuzzy logic."""

    family: Family
    tnorm: Binary
    implication: Binary
    negation: Unary = standard_negation
    name: str = ''

    def tnorm_many(self, values: Sequence[float]) -> float:
        """n-ary t-norm; the empty conjunction is 1."""
        if not values:
            return 1
        if self.family is Family.LUKASIEWICZ:
            return luk_nary_closed_form(values)
        if self.family is Family.PRODUCT:
            return math.prod(values)
        return reduce(self.tnorm, values)

    def conorm(self, x, y):
        """Dual t-conorm 1 - T(1 - x, 1 - y)."""
        return 1 - self.tnorm(1 - x, 1 - y)

    def with_negation(self, negation: Unary, name: str) -> 'Algebra':
        return dataclasses.replace(self, negation=negation, name=name)

    def __str__(self):
        return self.name or self.family.value


GODEL = Algebra(Family.GODEL, godel_tnorm, godel_implication, name='godel')
PRODUCT = Algebra(Family.PRODUCT, product_tnorm, product_implication, name='product')
LUKASIEWICZ = Algebra(Family.LUKASIEWICZ, lukasiewicz_tnorm, lukasiewicz_implication, name='lukasiewicz')

ALGEBRAS: Dict[str, Algebra] = {
    'godel': GODEL,
    'product': PRODUCT,
    'lukasiewicz': LUKASIEWICZ,
    'eqg': GODEL,
    'eqp': PRODUCT,
    'eql': LUKASIEWICZ,
}


def get_algebra(name: str) -> Algebra:
    """Look up a named algebra by family name or equational system name (eqG, eqP, eqL)."""
    try:
        return ALGEBRAS[name.lower()]
    except KeyError:
        raise ValueError(f'unknown algebra {name!r}') from None


def implication_value(algebra: Algebra, x: float, y: float) -> float:
    _check_unit(x, 'antecedent')
    _check_unit(y, 'consequent')
    return algebra.implication(x, y)


def eval_fuzzy(
    formula: Formula,
    assignment: AssignmentR,
    algebra: Algebra,
    tolerance: float = 0.0,
) -> float:
    """
    Evaluate a formula over [0, 1].

    And is the algebra's t-norm, Or its dual t-conorm, Iff(a, b) is T(I(x, y), I(y, x)).

    Args:
        formula: Formula to evaluate
        assignment: Real value for each variable
        algebra: Algebra supplying negation, t-norm and implication
        tolerance: Antecedents exceeding the consequent by at most this much imply 1.
            Gödel and Product residua jump at x = y, so numerical solutions need it.

    Returns:
        Truth degree in [0, 1]
    """

    def imp(x, y):
        if tolerance and x <= y + tolerance:
            return 1
        return algebra.implication(x, y)

    def walk(node: Formula):
        if isinstance(node, Var):
            try:
                value = assignment[node.name]
            except KeyError:
                raise UnboundVariableError(node.name) from None
            return _check_unit(value, node.name)
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Neg):
            return algebra.negation(walk(node.operand))
        if isinstance(node, And):
            return algebra.tnorm_many([walk(op) for op in node.operands])
        if isinstance(node, Or):
            return reduce(algebra.conorm, [walk(op) for op in node.operands])
        if isinstance(node, Imp):
            return imp(walk(node.left), walk(node.right))
        if isinstance(node, Iff):
            x, y = walk(node.left), walk(node.right)
            return algebra.tnorm(imp(x, y), imp(y, x))
        raise TypeError(f'not a formula: {node!r}')

    return walk(formula)
