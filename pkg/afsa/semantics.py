"""
Complete labellings, checked directly from the labelling conditions of each kind.

Nothing here goes through the encoder: these functions are the reference the encoded
formulas are compared against.
"""
from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from .config import Config
from .errors import DomainValueError, UnboundVariableError
from .framework import Framework, FrameworkKind, ensure_valid
from .logger import logger
from .logic3 import Truth3, check_cap, partitioned

Labelling3 = Dict[str, Truth3]
Conditions = Tuple[bool, bool]

ZERO, HALF, ONE = Truth3.ZERO, Truth3.HALF, Truth3.ONE


def _single_attacker_conditions(pairs) -> Conditions:
    # pairs of (attacker value, attack value)
    labelled_in = all(x is ZERO or r is ZERO for x, r in pairs)
    labelled_out = any(x is ONE and r is ONE for x, r in pairs)
    return labelled_in, labelled_out


def _hlaf_conditions(framework: Framework, lab: Mapping[str, Truth3], element: str) -> Conditions:
    pairs = [(lab[next(iter(a.source))], lab[a.id]) for a in framework.attackers_of(element)]
    if not pairs:
        return True, False
    return _single_attacker_conditions(pairs)


def _bhaf_conditions(framework: Framework, lab: Mapping[str, Truth3], element: str) -> Conditions:
    pairs = [(lab[next(iter(a.source))], lab[a.id]) for a in framework.attackers_of(element)]
    # the imaginary attacker is labelled 0 and its arrow 1
    pairs.append((ZERO, ONE))
    return _single_attacker_conditions(pairs)


def _setaf_conditions(framework: Framework, lab: Mapping[str, Truth3], element: str) -> Conditions:
    sets = [[lab[b] for b in a.source] for a in framework.attackers_of(element)]
    labelled_in = all(any(v is ZERO for v in members) for members in sets)
    labelled_out = any(all(v is ONE for v in members) for members in sets)
    return labelled_in, labelled_out


def _hsaf_conditions(framework: Framework, lab: Mapping[str, Truth3], element: str) -> Conditions:
    groups = [([lab[b] for b in a.source], lab[a.id]) for a in framework.attackers_of(element)]
    groups.append(([ZERO], ONE))
    labelled_in = all(any(v is ZERO for v in members) or r is ZERO for members, r in groups)
    labelled_out = any(all(v is ONE for v in members) and r is ONE for members, r in groups)
    return labelled_in, labelled_out


CONDITIONS: Dict[FrameworkKind, Callable[[Framework, Mapping[str, Truth3], str], Conditions]] = {
    FrameworkKind.DAF: _hlaf_conditions,
    FrameworkKind.HLAF: _hlaf_conditions,
    FrameworkKind.BHAF: _bhaf_conditions,
    FrameworkKind.SETAF: _setaf_conditions,
    FrameworkKind.HSAF: _hsaf_conditions,
}


def case_conditions(framework: Framework, labelling: Mapping[str, Truth3], element: str) -> Conditions:
    """Whether the conditions for labelling element 1 and for labelling it 0 hold."""
    return CONDITIONS[framework.kind](framework, labelling, element)


def _check_domain(framework: Framework, labelling: Mapping[str, Truth3]):
    for name in framework.labellable:
        if name not in labelling:
            raise UnboundVariableError(name)
    extra = set(labelling) - set(framework.labellable)
    if extra:
        raise DomainValueError(f'labelling has non-labellable elements: {", ".join(sorted(extra))}')


def satisfies_complete(framework: Framework, labelling: Mapping[str, Truth3]) -> bool:
    conditions = CONDITIONS[framework.kind]
    for element in framework.labellable:
        labelled_in, labelled_out = conditions(framework, labelling, element)
        expected = ONE if labelled_in else ZERO if labelled_out else HALF
        if labelling[element] is not expected:
            return False
    return True


def check_complete(framework: Framework, labelling: Mapping[str, Truth3]) -> bool:
    """
    Whether a total labelling is complete for the framework's kind.

    Raises:
        UnboundVariableError: If a labellable element has no label
        DomainValueError: If the labelling covers other names
    """
    ensure_valid(framework)
    _check_domain(framework, labelling)
    return satisfies_complete(framework, labelling)


def _complete_with_prefix(framework, checker, names, prefix):
    found = []
    values = (ZERO, HALF, ONE)
    for tail in itertools.product(values, repeat=len(names) - len(prefix)):
        labelling = dict(zip(names, tuple(Truth3.from_units(u) for u in prefix) + tail))
        if checker(framework, labelling):
            found.append(tuple(v.units for v in labelling.values()))
    return found


def enumerate_complete(
    framework: Framework,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    checker: Callable[[Framework, Mapping[str, Truth3]], bool] = satisfies_complete,
) -> List[Labelling3]:
    """
    All complete labellings, by exhausting {0, 1/2, 1}^n.

    Labellings come in lexicographic order over the canonical element order.

    Raises:
        CapExceededError: If 3^n exceeds cap
    """
    ensure_valid(framework)
    names = framework.labellable
    required = check_cap(len(names), cap)
    logger.debug('checking %d labellings of a %s', required, framework.kind.name)
    rows = partitioned(_complete_with_prefix, names, workers or Config.WORKERS, framework, checker)
    return [{name: Truth3.from_units(u) for name, u in zip(names, row)} for row in rows]


def labelling_key(labelling: Mapping[str, Truth3]) -> Tuple[Tuple[str, str], ...]:
    """Hashable form of a labelling, for set comparisons."""
    return tuple(sorted((name, str(value)) for name, value in labelling.items()))
