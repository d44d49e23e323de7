"""Rewriting higher-order frameworks as SETAFs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping

from .framework import Attack, Framework, FrameworkKind, ensure_valid
from .logger import logger


@dataclass(frozen=True)
class TransformResult:
    setaf: Framework
    # original labellable element -> argument of the SETAF
    mapping: Dict[str, str]


def to_setaf(framework: Framework) -> TransformResult:
    """
    Turn attacks into arguments of a SETAF.

    Every original attack (S, beta) named r becomes the set attacker S | {r} of beta, and
    r itself becomes an argument. Names carry over, so the mapping is the identity. A SETAF
    is returned unchanged.
    """
    ensure_valid(framework)
    if framework.kind is FrameworkKind.SETAF:
        return TransformResult(framework, {name: name for name in framework.labellable})

    arguments = framework.arguments | set(framework.attack_ids)
    attacks = tuple(
        Attack(f'{attack.id}_set', attack.source | {attack.id}, attack.target)
        for attack in framework.attacks
    )
    setaf = Framework(FrameworkKind.SETAF, arguments, _fresh_names(attacks, arguments))
    logger.debug('rewrote a %s with %d attacks as a SETAF', framework.kind.name, len(attacks))
    return TransformResult(setaf, {name: name for name in framework.labellable})


def _fresh_names(attacks, taken) -> tuple:
    # SETAF attack names are bookkeeping only; keep them clear of the argument namespace
    used = set(taken)
    renamed = []
    for attack in attacks:
        name = attack.id
        while name in used:
            name += '_'
        used.add(name)
        renamed.append(Attack(name, attack.source, attack.target))
    return tuple(renamed)


def transfer(assignment: Mapping, result: TransformResult) -> Dict:
    """Carry an assignment over the original elements to the SETAF's arguments."""
    return {result.mapping[name]: value for name, value in assignment.items()}
