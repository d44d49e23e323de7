"""Hypothesis strategies and helpers shared by the property tests."""
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from afsa.config import Config
from afsa.framework import Attack, Framework, FrameworkKind
from afsa.logic3 import And, Const, Iff, Imp, Neg, Or, Var

FRAMES = Path(__file__).resolve().parent.parent / 'data' / 'frames'

ALL_KINDS = tuple(FrameworkKind)
HIGHER_ORDER_KINDS = (FrameworkKind.HLAF, FrameworkKind.BHAF, FrameworkKind.HSAF)
FORMULA_NAMES = ('p', 'q', 'r', 's')


def scaled(count: int) -> int:
    """Example count multiplied by AFSA_PROPERTY_SCALE."""
    return max(1, int(count * Config.PROPERTY_SCALE))


@st.composite
def frameworks(draw, kinds=ALL_KINDS, max_arguments=4, max_attacks=4, max_level=2, max_source=3):
    """Valid frameworks; attacks only reference arguments and earlier attacks."""
    kind = draw(st.sampled_from(kinds))
    arguments = [chr(ord('a') + i) for i in range(draw(st.integers(1, max_arguments)))]
    levels = {}
    attacks = []
    set_pairs = set()

    def subset(pool):
        members = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_source, unique=True))
        return frozenset(members)

    for index in range(draw(st.integers(0, max_attacks))):
        nested = [name for name, level in levels.items() if level < max_level]
        if kind is FrameworkKind.DAF:
            source = frozenset([draw(st.sampled_from(arguments))])
            target = draw(st.sampled_from(arguments))
        elif kind is FrameworkKind.HLAF:
            source = frozenset([draw(st.sampled_from(arguments))])
            target = draw(st.sampled_from(arguments + nested))
        elif kind is FrameworkKind.BHAF:
            source = frozenset([draw(st.sampled_from(arguments + nested))])
            target = draw(st.sampled_from(arguments + nested))
        elif kind is FrameworkKind.SETAF:
            source, target = subset(arguments), draw(st.sampled_from(arguments))
            if (source, target) in set_pairs:
                continue
            set_pairs.add((source, target))
        else:
            source, target = subset(arguments + nested), draw(st.sampled_from(arguments + nested))

        name = f'r{index + 1}'
        refs = [levels[ref] for ref in source | {target} if ref in levels]
        levels[name] = 1 + max(refs) if refs else 0
        attacks.append(Attack(name, source, target))

    return Framework(kind, frozenset(arguments), tuple(attacks))


def formulas(names=FORMULA_NAMES, max_leaves=12):
    """Formulas over names built from every connective."""
    leaves = st.one_of(
        st.sampled_from(names).map(Var),
        st.sampled_from((Fraction(0), Fraction(1, 2), Fraction(1))).map(Const),
    )

    def extend(children):
        operands = st.lists(children, min_size=1, max_size=3).map(tuple)
        return st.one_of(
            children.map(Neg),
            operands.map(And),
            operands.map(Or),
            st.tuples(children, children).map(lambda pair: Imp(*pair)),
            st.tuples(children, children).map(lambda pair: Iff(*pair)),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)
