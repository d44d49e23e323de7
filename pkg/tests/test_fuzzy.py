"""Tests for fuzzy algebras and [0, 1]-valued evaluation."""

from fractions import Fraction
from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from afsa.errors import DomainValueError, UnboundVariableError
from afsa.fuzzy import (
    GODEL,
    LUKASIEWICZ,
    PRODUCT,
    eval_fuzzy,
    get_algebra,
    implication_value,
    luk_nary_closed_form,
    lukasiewicz_tnorm,
    sugeno_negation,
)
from afsa.logic3 import And, Const, Iff, Imp, Neg, Or, Var
from tests.strategies import scaled

ALGEBRAS = (GODEL, PRODUCT, LUKASIEWICZ)
GRID = [Fraction(i, 20) for i in range(21)]
unit = st.floats(0.0, 1.0, allow_nan=False)


def test_named_implications():
    """Test worked residuum values."""
    assert implication_value(LUKASIEWICZ, 0.3, 0.2) == pytest.approx(0.9)
    assert implication_value(PRODUCT, 0.8, 0.2) == pytest.approx(0.25)
    assert implication_value(GODEL, 0.8, 0.2) == 0.2
    for algebra in ALGEBRAS:
        assert implication_value(algebra, 0.4, 0.4) == 1
        assert implication_value(algebra, 0.2, 0.7) == 1


def test_implication_range_checked():
    """Test that values outside [0, 1] are rejected."""
    with pytest.raises(DomainValueError):
        implication_value(GODEL, 1.5, 0.2)
    with pytest.raises(DomainValueError):
        implication_value(PRODUCT, 0.5, -0.1)


def test_residuation_law():
    """Test T(x, z) <= y iff z <= I(x, y) on an exact grid."""
    for algebra in ALGEBRAS:
        for x in GRID:
            for y in GRID:
                implied = algebra.implication(x, y)
                for z in GRID:
                    assert (algebra.tnorm(x, z) <= y) == (z <= implied)


def test_equivalence_is_one_exactly_when_equal():
    """Test that p <-> q evaluates to 1 iff p and q take the same value."""
    p, q = Var('p'), Var('q')
    for algebra in ALGEBRAS:
        for x in GRID:
            for y in GRID:
                value = eval_fuzzy(Iff(p, q), {'p': x, 'q': y}, algebra)
                assert (value == 1) == (x == y), (algebra.name, x, y)
                if algebra is LUKASIEWICZ:
                    assert value == 1 - abs(x - y)


def test_implication_is_one_exactly_when_ordered():
    """Test I(x, y) = 1 iff x <= y, and I(1, y) = y."""
    for algebra in ALGEBRAS:
        for x in GRID:
            assert algebra.implication(1, x) == x
            for y in GRID:
                assert (algebra.implication(x, y) == 1) == (x <= y)


def test_tnorm_boundary_laws():
    """Test identity 1 and annihilator 0 of every t-norm."""
    for algebra in ALGEBRAS:
        for x in GRID:
            assert algebra.tnorm(x, 1) == x
            assert algebra.tnorm(0, x) == 0
            assert algebra.conorm(x, 0) == x
        assert algebra.tnorm_many([]) == 1


def test_lukasiewicz_conjunction():
    """Test a worked Łukasiewicz conjunction."""
    formula = And((Var('a'), Var('b')))
    assert eval_fuzzy(formula, {'a': 0.5, 'b': 0.7}, LUKASIEWICZ) == pytest.approx(0.2)
    assert eval_fuzzy(formula, {'a': 0.5, 'b': 0.4}, LUKASIEWICZ) == 0


def test_closed_form_matches_fold():
    """Test the n-ary Łukasiewicz closed form against the binary fold."""
    rng = np.random.default_rng(0)
    for _ in range(scaled(10000)):
        xs = rng.uniform(0.0, 1.0, int(rng.integers(1, 11))).tolist()
        assert abs(luk_nary_closed_form(xs) - reduce(lukasiewicz_tnorm, xs)) <= 1e-12


def test_closed_form_edge_cases():
    """Test the single-value case and input checks."""
    assert luk_nary_closed_form([0.3]) == pytest.approx(0.3)
    assert luk_nary_closed_form([1, 1, 1]) == 1
    assert luk_nary_closed_form([Fraction(1, 2), Fraction(1, 2)]) == 0
    with pytest.raises(DomainValueError):
        luk_nary_closed_form([])
    with pytest.raises(DomainValueError):
        luk_nary_closed_form([0.5, 1.2])


@given(st.lists(unit, min_size=1, max_size=6))
@settings(max_examples=scaled(200))
def test_tnorm_many_is_order_free(values):
    """Test that n-ary t-norms ignore argument order."""
    for algebra in ALGEBRAS:
        assert algebra.tnorm_many(values) == pytest.approx(algebra.tnorm_many(values[::-1]), abs=1e-12)


def test_eval_connectives():
    """Test negation, disjunction and equivalence in each algebra."""
    a, b = Var('a'), Var('b')
    values = {'a': 0.25, 'b': 0.5}
    assert eval_fuzzy(Neg(a), values, GODEL) == 0.75
    assert eval_fuzzy(Or((a, b)), values, GODEL) == 0.5
    assert eval_fuzzy(Or((a, b)), values, PRODUCT) == pytest.approx(0.625)
    assert eval_fuzzy(Or((a, b)), values, LUKASIEWICZ) == 0.75
    assert eval_fuzzy(Iff(a, b), values, PRODUCT) == 0.5
    assert eval_fuzzy(Iff(a, b), values, LUKASIEWICZ) == 0.75
    assert eval_fuzzy(Imp(b, a), values, GODEL) == 0.25
    assert eval_fuzzy(Const(Fraction(1, 2)), {}, GODEL) == Fraction(1, 2)


def test_tolerance_smooths_the_residuum_jump():
    """Test that near-equal antecedents imply 1 with a tolerance."""
    formula = Iff(Var('x'), Var('y'))
    values = {'x': 0.5 + 1e-12, 'y': 0.5}
    assert eval_fuzzy(formula, values, GODEL) == 0.5
    assert eval_fuzzy(formula, values, GODEL, tolerance=1e-9) == 1
    assert eval_fuzzy(formula, values, PRODUCT, tolerance=1e-9) == 1


def test_eval_errors():
    """Test unbound variables and out-of-range values."""
    with pytest.raises(UnboundVariableError):
        eval_fuzzy(Var('a'), {}, GODEL)
    with pytest.raises(DomainValueError):
        eval_fuzzy(Var('a'), {'a': 1.5}, PRODUCT)


def test_get_algebra():
    """Test lookup by family and system name."""
    assert get_algebra('eqG') is GODEL
    assert get_algebra('Product') is PRODUCT
    assert get_algebra('eqL') is LUKASIEWICZ
    with pytest.raises(ValueError):
        get_algebra('hamacher')


def test_sugeno_negation():
    """Test a continuous non-standard negation."""
    negation = sugeno_negation(1.0)
    assert negation(0) == 1
    assert negation(1) == 0
    assert negation(0.5) == pytest.approx(1 / 3)
    algebra = GODEL.with_negation(negation, 'godel-sugeno')
    assert str(algebra) == 'godel-sugeno'
    assert eval_fuzzy(Neg(Var('a')), {'a': 0.5}, algebra) == pytest.approx(1 / 3)
    with pytest.raises(ValueError):
        sugeno_negation(-1)
