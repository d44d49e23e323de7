"""Normal encoding of a framework as a propositional formula."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .framework import Attack, Framework, FrameworkKind, ensure_valid
from .logic3 import And, Const, Formula, Iff, Neg, Var, conjunction

FALSE = Const(0)
TRUE = Const(1)

# inner term of an element without attackers: the imaginary attacker is 0, its arrow 1
UNATTACKED = Neg(FALSE)


@dataclass(frozen=True)
class EncodedFrame:
    formula: Formula
    variables: Tuple[str, ...]
    kind: FrameworkKind


def neutral_term(kind: FrameworkKind) -> Formula:
    """The imaginary arrow's term; it evaluates to 1 in every algebra."""
    if kind is FrameworkKind.HSAF:
        return Neg(And((TRUE, FALSE)))
    return Neg(And((FALSE, TRUE)))


def attack_term(framework: Framework, attack: Attack) -> Formula:
    """Negated conjunction contributed by one attacker of its target."""
    members = [Var(name) for name in framework.ordered(attack.source)]
    if framework.kind is FrameworkKind.SETAF:
        return Neg(conjunction(members))
    if framework.kind is FrameworkKind.HSAF:
        return Neg(And((Var(attack.id), *members)))
    return Neg(And((*members, Var(attack.id))))


def encode(framework: Framework, explicit_imaginary: bool = False) -> EncodedFrame:
    """
    Encode a framework as one conjunction with a conjunct per labellable element.

    Each conjunct reads beta <-> inner, where inner conjoins the negated terms of
    beta's attackers, or is !0 when beta is unattacked.

    Args:
        framework: Valid framework of any kind; DAF encodes as a level-0 HLAF
        explicit_imaginary: Keep the imaginary arrow terms instead of simplifying them
            away (BHAF and HSAF carry one on every element, other kinds on unattacked
            elements only)

    Returns:
        Encoded formula and its variables in canonical order
    """
    ensure_valid(framework)
    every_element = framework.kind in (FrameworkKind.BHAF, FrameworkKind.HSAF)
    conjuncts: List[Formula] = []
    for element in framework.labellable:
        terms = [attack_term(framework, attack) for attack in framework.attackers_of(element)]
        if explicit_imaginary and (every_element or not terms):
            terms.append(neutral_term(framework.kind))
        inner = conjunction(terms) if terms else UNATTACKED
        conjuncts.append(Iff(Var(element), inner))
    formula = And(tuple(conjuncts)) if conjuncts else TRUE
    return EncodedFrame(formula, framework.labellable, framework.kind)
