"""
Framework model for argumentation frameworks with (set) attackers.

One representation covers the five kinds: DAF, HLAF, BHAF, SETAF and HSAF. Attacks are
named so that they can be attacked themselves and used as propositional variables.
"""
from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from .errors import InvalidFrameworkError

ID_PATTERN = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')


class FrameworkKind(str, Enum):
    DAF = 'daf'
    HLAF = 'hlaf'
    BHAF = 'bhaf'
    SETAF = 'setaf'
    HSAF = 'hsaf'


@dataclass(frozen=True)
class Attack:
    """A named attack from a nonempty source set onto one target element."""

    id: str
    source: FrozenSet[str]
    target: str

    def __post_init__(self):
        object.__setattr__(self, 'source', frozenset(self.source))


@dataclass(frozen=True)
class Framework:
    """Immutable framework: kind tag, argument set and attacks in declaration order."""

    kind: FrameworkKind
    arguments: FrozenSet[str]
    attacks: Tuple[Attack, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'kind', FrameworkKind(self.kind))
        object.__setattr__(self, 'arguments', frozenset(self.arguments))
        object.__setattr__(self, 'attacks', tuple(self.attacks))

    @cached_property
    def attack_ids(self) -> Tuple[str, ...]:
        return tuple(attack.id for attack in self.attacks)

    @cached_property
    def elements(self) -> Tuple[str, ...]:
        """Canonical element order: arguments alphabetical, then attacks as declared."""
        return tuple(sorted(self.arguments)) + self.attack_ids

    @cached_property
    def labellable(self) -> Tuple[str, ...]:
        """Elements that carry truth values; SETAF attacks are not labellable."""
        if self.kind is FrameworkKind.SETAF:
            return tuple(sorted(self.arguments))
        return self.elements

    @cached_property
    def _rank(self) -> Dict[str, int]:
        return {name: index for index, name in enumerate(self.elements)}

    @cached_property
    def _attackers(self) -> Dict[str, Tuple[Attack, ...]]:
        grouped: Dict[str, List[Attack]] = {}
        for attack in self.attacks:
            grouped.setdefault(attack.target, []).append(attack)
        return {target: tuple(found) for target, found in grouped.items()}

    def is_argument(self, name: str) -> bool:
        return name in self.arguments

    def is_attack(self, name: str) -> bool:
        return name in self._rank and name not in self.arguments

    def attackers_of(self, element: str) -> Tuple[Attack, ...]:
        """Attacks targeting element, in declaration order."""
        return self._attackers.get(element, ())

    def ordered(self, names: Iterable[str]) -> Tuple[str, ...]:
        """Sort element names by canonical element order."""
        return tuple(sorted(names, key=lambda name: self._rank.get(name, len(self._rank))))

    def retag(self, kind: FrameworkKind) -> 'Framework':
        """Same arguments and attacks under another kind tag."""
        return dataclasses.replace(self, kind=FrameworkKind(kind))


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    ids: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check; violations make it fail, warnings do not."""

    violations: Tuple[Violation, ...] = ()
    warnings: Tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self):
        return f"ValidationReport(ok={self.ok}, violations={[v.code for v in self.violations]})"


def dependency_graph(framework: Framework) -> nx.DiGraph:
    """Directed graph over attacks with an edge r -> s when s references attack r."""
    graph = nx.DiGraph()
    graph.add_nodes_from(framework.attack_ids)
    declared = set(framework.attack_ids)
    for attack in framework.attacks:
        for ref in attack.source | {attack.target}:
            if ref in declared:
                graph.add_edge(ref, attack.id)
    return graph


def _check_names(framework: Framework) -> List[Violation]:
    violations = []
    for name in sorted(framework.arguments) + list(framework.attack_ids):
        if not ID_PATTERN.match(name):
            violations.append(Violation('bad-id', f'invalid identifier {name!r}', (name,)))
    seen = set(framework.arguments)
    for attack_id in framework.attack_ids:
        if attack_id in seen:
            violations.append(Violation('duplicate-id', f'id {attack_id} declared twice', (attack_id,)))
        seen.add(attack_id)
    return violations


def _check_references(framework: Framework) -> List[Violation]:
    violations = []
    all_attacks = set(framework.attack_ids)
    declared = set()
    for attack in framework.attacks:
        if not attack.source:
            violations.append(Violation('empty-source', f'attack {attack.id} has an empty source', (attack.id,)))
        for ref in sorted(attack.source) + [attack.target]:
            if ref in framework.arguments or ref in declared:
                continue
            if ref in all_attacks:
                violations.append(Violation(
                    'forward-reference',
                    f'attack {attack.id} references {ref} before its declaration',
                    (attack.id, ref),
                ))
            else:
                violations.append(Violation(
                    'unknown-reference', f'attack {attack.id} references unknown id {ref}', (attack.id, ref)
                ))
        declared.add(attack.id)

    if not nx.is_directed_acyclic_graph(dependency_graph(framework)):
        cycle = [edge[0] for edge in nx.find_cycle(dependency_graph(framework))]
        violations.append(Violation('cyclic-dependency', 'attack definitions form a cycle', tuple(cycle)))
    return violations


def _check_kind(framework: Framework) -> List[Violation]:
    kind = framework.kind
    violations = []
    set_sources = set()
    for attack in framework.attacks:
        ids = (attack.id,)
        if kind in (FrameworkKind.DAF, FrameworkKind.HLAF, FrameworkKind.BHAF) and len(attack.source) != 1:
            violations.append(Violation(
                'source-not-singleton', f'{kind.name} source of {attack.id} must be a single element', ids
            ))
        if kind in (FrameworkKind.DAF, FrameworkKind.HLAF) and not attack.source <= framework.arguments:
            violations.append(Violation(
                'source-not-argument', f'{kind.name} source of {attack.id} must be an argument', ids
            ))
        if kind is FrameworkKind.SETAF and not attack.source <= framework.arguments:
            violations.append(Violation(
                'source-not-argument', 'SETAF source must contain only arguments', ids
            ))
        if kind in (FrameworkKind.DAF, FrameworkKind.SETAF) and attack.target not in framework.arguments:
            violations.append(Violation(
                'target-not-argument', f'{kind.name} target of {attack.id} must be an argument', ids
            ))
        if kind is FrameworkKind.SETAF:
            key = (attack.source, attack.target)
            if key in set_sources:
                violations.append(Violation(
                    'duplicate-set-attack',
                    f'SETAF attack {attack.id} repeats a source set already attacking {attack.target}',
                    ids,
                ))
            set_sources.add(key)
    return violations


def _minimality_warnings(framework: Framework) -> List[str]:
    if framework.kind not in (FrameworkKind.SETAF, FrameworkKind.HSAF):
        return []
    warnings = []
    for target in framework.elements:
        attackers = framework.attackers_of(target)
        for attack in attackers:
            smaller = [other.id for other in attackers if other.source < attack.source]
            if smaller:
                warnings.append(
                    f'attacker {attack.id} of {target} is not minimal: '
                    f'its source strictly contains the source of {", ".join(smaller)}'
                )
    return warnings


def validate(framework: Framework, profile: Optional[str] = None) -> ValidationReport:
    """
    Check the structural constraints of the framework's kind.

    Args:
        framework: Framework to check
        profile: Optional extra profile; "semi" restricts HSAF sources to arguments

    Returns:
        Report listing every violation, plus non-minimal attacker warnings
    """
    violations = _check_names(framework) + _check_references(framework) + _check_kind(framework)
    if profile == 'semi':
        for attack in framework.attacks:
            if not attack.source <= framework.arguments:
                violations.append(Violation(
                    'semi-source', f'semi-HSAF source of {attack.id} contains an attack', (attack.id,)
                ))
    elif profile is not None:
        raise ValueError(f'unknown validation profile {profile!r}')
    return ValidationReport(tuple(violations), tuple(_minimality_warnings(framework)))


def ensure_valid(framework: Framework) -> Framework:
    """Return the framework unchanged, or raise InvalidFrameworkError."""
    report = validate(framework)
    if not report.ok:
        raise InvalidFrameworkError(report)
    return framework


def compute_level(framework: Framework) -> int:
    """
    Least n such that every attack fits the n-level attack relation.

    An attack between arguments has level 0; an attack referencing other attacks has
    level one above the highest of them.
    """
    ensure_valid(framework)
    graph = dependency_graph(framework)
    levels: Dict[str, int] = {}
    for attack_id in nx.topological_sort(graph):
        refs = list(graph.predecessors(attack_id))
        levels[attack_id] = 1 + max(levels[ref] for ref in refs) if refs else 0
    return max(levels.values(), default=0)
