"""Seeded random frameworks for property checks and the solver regression suite."""
from typing import Dict, List, Optional, Sequence

import numpy as np

from .framework import Attack, Framework, FrameworkKind

KIND_CYCLE = (
    FrameworkKind.DAF,
    FrameworkKind.HLAF,
    FrameworkKind.BHAF,
    FrameworkKind.SETAF,
    FrameworkKind.HSAF,
)


def _pick(rng: np.random.Generator, pool: Sequence[str]) -> str:
    return pool[int(rng.integers(len(pool)))]


def _subset(rng: np.random.Generator, pool: Sequence[str], largest: int) -> frozenset:
    size = int(rng.integers(1, min(largest, len(pool)) + 1))
    return frozenset(pool[int(i)] for i in rng.choice(len(pool), size=size, replace=False))


def random_framework(
    rng: np.random.Generator,
    kind: FrameworkKind,
    max_arguments: int = 4,
    max_attacks: int = 4,
    max_level: int = 2,
    max_source: int = 3,
) -> Framework:
    """
    Draw a valid framework of the given kind.

    Attacks only reference arguments and earlier attacks, and no attack exceeds max_level.
    """
    kind = FrameworkKind(kind)
    arguments = [chr(ord('a') + i) for i in range(int(rng.integers(1, max_arguments + 1)))]
    levels: Dict[str, int] = {}
    attacks: List[Attack] = []
    set_pairs = set()

    for index in range(int(rng.integers(0, max_attacks + 1))):
        # attacks that can still be referenced without passing max_level
        nested = [name for name, level in levels.items() if level < max_level]
        if kind is FrameworkKind.DAF:
            source, target = frozenset([_pick(rng, arguments)]), _pick(rng, arguments)
        elif kind is FrameworkKind.HLAF:
            source, target = frozenset([_pick(rng, arguments)]), _pick(rng, arguments + nested)
        elif kind is FrameworkKind.BHAF:
            source = frozenset([_pick(rng, arguments + nested)])
            target = _pick(rng, arguments + nested)
        elif kind is FrameworkKind.SETAF:
            source, target = _subset(rng, arguments, max_source), _pick(rng, arguments)
            if (source, target) in set_pairs:
                continue
            set_pairs.add((source, target))
        else:
            source = _subset(rng, arguments + nested, max_source)
            target = _pick(rng, arguments + nested)

        name = f'r{index + 1}'
        refs = [levels[ref] for ref in source | {target} if ref in levels]
        levels[name] = 1 + max(refs) if refs else 0
        attacks.append(Attack(name, source, target))

    return Framework(kind, frozenset(arguments), tuple(attacks))


def random_frameworks(seed: int, kind: FrameworkKind, count: int, **limits) -> List[Framework]:
    rng = np.random.default_rng(seed)
    return [random_framework(rng, kind, **limits) for _ in range(count)]


def regression_suite(seed: int = 0, size: int = 200, kinds: Optional[Sequence[FrameworkKind]] = None) -> List[Framework]:
    """The frozen solver regression suite: size frameworks cycling through the kinds."""
    kinds = tuple(kinds or KIND_CYCLE)
    rng = np.random.default_rng(seed)
    return [random_framework(rng, kinds[i % len(kinds)]) for i in range(size)]


def random_assignment(rng: np.random.Generator, variables: Sequence[str]) -> Dict[str, float]:
    return {name: float(value) for name, value in zip(variables, rng.uniform(0.0, 1.0, len(variables)))}
