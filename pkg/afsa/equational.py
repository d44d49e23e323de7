"""
Equational semantics.

Each labellable element beta gets an equation x_beta = h(h_1(u_1), ..., h_n(u_n)) where
u_i collects the values feeding beta's i-th attacker (its members and, for higher-order
kinds, the attack itself). Unattacked elements get x_beta = 1. The systems are solved
by damped fixed-point iteration with seeded restarts.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .config import Config
from .encoder import encode
from .errors import DomainValueError, UnboundVariableError
from .framework import Framework, FrameworkKind, ValidationReport, Violation, ensure_valid
from .fuzzy import Algebra, Family, eval_fuzzy, luk_nary_closed_form, standard_negation
from .logger import logger
from .logic3 import Truth3, check_cap, partitioned
from .semantics import Labelling3

Vector = Sequence[float]

AXIOM_TOLERANCE = 1e-12

# damped Newton hand-over
NEWTON_STEPS = 25
NEWTON_MIN_STEP = 1e-6
NEWTON_DIFFERENCE = 1e-7
# a stall window that removes between 1% and half of the residual counts as slow
SLOW_PROGRESS = 0.5
STEADY_PROGRESS = 0.99


# ============ Closed forms per family ============

def godel_inner(u: Vector):
    return max(1 - v for v in u)


def product_inner(u: Vector):
    return 1 - math.prod(u)


def lukasiewicz_inner(u: Vector):
    k = len(u)
    total = sum(u)
    return 1 if total <= k - 1 else k - total


CLOSED_FORMS: Dict[Family, Tuple[Callable[[Vector], float], Callable[[Vector], float]]] = {
    Family.GODEL: (min, godel_inner),
    Family.PRODUCT: (math.prod, product_inner),
    Family.LUKASIEWICZ: (luk_nary_closed_form, lukasiewicz_inner),
}


@dataclass(frozen=True)
class Equation:
    variable: str
    # per attacker, positions of the inner function's inputs
    groups: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class EquationSystem:
    """x = F(x) over the labellable elements of a framework."""

    variables: Tuple[str, ...]
    equations: Tuple[Equation, ...]
    outer: Callable[[Vector], float]
    inner: Callable[[Vector], float]
    algebra: Algebra
    framework: Framework

    def update(self, position: int, values: Vector):
        """F_beta for the variable at position."""
        groups = self.equations[position].groups
        if not groups:
            return 1
        return self.outer([self.inner([values[i] for i in group]) for group in groups])

    def apply(self, values: Vector) -> List[float]:
        return [self.update(position, values) for position in range(len(self.variables))]

    def vector(self, assignment: Mapping[str, float]) -> List[float]:
        """Values of assignment in variable order."""
        try:
            return [assignment[name] for name in self.variables]
        except KeyError as e:
            raise UnboundVariableError(e.args[0]) from None


def _equations(framework: Framework) -> Tuple[Equation, ...]:
    position = {name: index for index, name in enumerate(framework.labellable)}
    equations = []
    for element in framework.labellable:
        groups = []
        for attack in framework.attackers_of(element):
            members = [position[name] for name in framework.ordered(attack.source)]
            if framework.kind is FrameworkKind.SETAF:
                groups.append(tuple(members))
            elif framework.kind is FrameworkKind.HSAF:
                groups.append((position[attack.id], *members))
            else:
                groups.append((*members, position[attack.id]))
        equations.append(Equation(element, tuple(groups)))
    return tuple(equations)


def build_system(framework: Framework, algebra: Algebra) -> EquationSystem:
    """
    Equational system Eq_G, Eq_P or Eq_L of a framework.

    Args:
        framework: Valid framework; a DAF gets the HLAF system with attack variables
        algebra: One of the named algebras

    Returns:
        System whose right-hand sides are the family's closed forms
    """
    ensure_valid(framework)
    if algebra.negation is not standard_negation:
        raise ValueError('closed-form systems need the standard negation; use build_cfne_system')
    outer, inner = CLOSED_FORMS[algebra.family]
    return EquationSystem(framework.labellable, _equations(framework), outer, inner, algebra, framework)


def build_cfne_system(framework: Framework, algebra: Algebra) -> EquationSystem:
    """
    System induced by evaluating the normal encoding in an arbitrary algebra.

    Inner functions are N(T(u)), the outer function is T; any continuous negation works.
    """
    ensure_valid(framework)

    def inner(u: Vector):
        return algebra.negation(algebra.tnorm_many(u))

    return EquationSystem(
        framework.labellable, _equations(framework), algebra.tnorm_many, inner, algebra, framework
    )


def residual(system: EquationSystem, assignment: Mapping[str, float]) -> float:
    """Infinity-norm distance between x and F(x)."""
    values = system.vector(assignment)
    image = system.apply(values)
    return float(max((abs(x - fx) for x, fx in zip(values, image)), default=0.0))


def model_value(system: EquationSystem, assignment: Mapping[str, float], tolerance: float = 0.0) -> float:
    """Truth degree of the framework's encoding at assignment, in the system's algebra."""
    formula = encode(system.framework).formula
    return float(eval_fuzzy(formula, assignment, system.algebra, tolerance))


# ============ Solver ============

class SolveStatus(str, Enum):
    CONVERGED = 'converged'
    FAILED = 'failed'


@dataclass(frozen=True)
class SolveConfig:
    tolerance: float = 1e-9
    max_iterations: int = 100000
    damping: float = 1.0
    fallback_damping: float = 0.5
    restarts: int = 8
    seed: int = 0
    stall_window: int = 2000

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError('tolerance must be positive')
        for name in ('damping', 'fallback_damping'):
            if not 0 < getattr(self, name) <= 1:
                raise ValueError(f'{name} must lie in (0, 1]')
        if self.max_iterations < 1 or self.restarts < 0 or self.stall_window < 1:
            raise ValueError('iteration counts must be positive and restarts non-negative')

    @classmethod
    def from_config(cls, **overrides) -> 'SolveConfig':
        """Settings from Config, with keyword overrides."""
        settings = dict(
            tolerance=Config.SOLVER_TOLERANCE,
            max_iterations=Config.SOLVER_MAX_ITERATIONS,
            damping=Config.SOLVER_DAMPING,
            fallback_damping=Config.SOLVER_FALLBACK_DAMPING,
            restarts=Config.SOLVER_RESTARTS,
            seed=Config.SEED,
            stall_window=Config.SOLVER_STALL_WINDOW,
        )
        settings.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**settings)


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    assignment: Optional[Dict[str, float]]
    residual: float
    # summed over all restarts
    iterations: int
    restart: int

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.CONVERGED


def _restart_plan(restart: int, size: int, rng: np.random.Generator, config: SolveConfig):
    """Start point and damping of a restart."""
    if restart == 0:
        return np.full(size, 0.5), config.damping
    damping = config.fallback_damping * 0.5 ** ((restart - 1) // 2)
    if restart % 2:
        return np.full(size, 0.5), damping
    return rng.uniform(0.0, 1.0, size), damping


def _distance(system: EquationSystem, x: np.ndarray) -> Tuple[np.ndarray, float]:
    image = np.asarray(system.apply(x.tolist()), dtype=float)
    return image, float(np.max(np.abs(x - image))) if x.size else 0.0


def _polish(system: EquationSystem, x: np.ndarray, image: np.ndarray, res: float, limit: int):
    # undamped sweeps settle components that are still creeping towards 0 or 1
    for _ in range(limit):
        if res == 0.0:
            break
        candidate = image
        candidate_image, candidate_res = _distance(system, candidate)
        if candidate_res > res:
            break
        x, image, res = candidate, candidate_image, candidate_res
    return x, res


def _jacobian(system: EquationSystem, x: np.ndarray, image: np.ndarray) -> np.ndarray:
    """Forward-difference Jacobian of x - F(x), stepping inside [0, 1]."""
    jacobian = np.eye(x.size)
    for column in range(x.size):
        step = NEWTON_DIFFERENCE if x[column] + NEWTON_DIFFERENCE <= 1.0 else -NEWTON_DIFFERENCE
        shifted = x.copy()
        shifted[column] += step
        shifted_image = np.asarray(system.apply(shifted.tolist()), dtype=float)
        jacobian[:, column] -= (shifted_image - image) / step
    return jacobian


def _newton(system: EquationSystem, x: np.ndarray, config: SolveConfig):
    """
    Damped Newton steps on x - F(x) from x.

    The step length halves until the residual drops and the search gives up below
    NEWTON_MIN_STEP. Returns the last point, its image, its residual and the step count.
    """
    image, res = _distance(system, x)
    steps = 0
    while res > config.tolerance and steps < NEWTON_STEPS:
        direction = np.linalg.lstsq(_jacobian(system, x, image), image - x, rcond=None)[0]
        length = 1.0
        while length >= NEWTON_MIN_STEP:
            candidate = np.clip(x + length * direction, 0.0, 1.0)
            candidate_image, candidate_res = _distance(system, candidate)
            if candidate_res < res:
                break
            length /= 2
        else:
            logger.debug('newton breakdown at residual %.3e', res)
            break
        x, image, res = candidate, candidate_image, candidate_res
        steps += 1
    return x, image, res, steps


def _iterate(system: EquationSystem, x: np.ndarray, damping: float, config: SolveConfig):
    best = math.inf
    best_iteration = 0
    window_start = math.inf
    res = math.inf
    for iteration in range(config.max_iterations + 1):
        image, res = _distance(system, x)
        if res <= config.tolerance:
            x, res = _polish(system, x, image, res, 2 * x.size + 8)
            return x, res, iteration, True
        if iteration % config.stall_window == 0:
            # steady but slow decrease, typical of a double root: finish with Newton
            if window_start * SLOW_PROGRESS < res < window_start * STEADY_PROGRESS:
                x_newton, image_newton, res_newton, steps = _newton(system, x, config)
                if res_newton <= config.tolerance:
                    logger.debug('newton finished after %d steps at iteration %d', steps, iteration)
                    x_newton, res_newton = _polish(
                        system, x_newton, image_newton, res_newton, 2 * x.size + 8
                    )
                    return x_newton, res_newton, iteration + steps, True
            window_start = res
        if res < best:
            best, best_iteration = res, iteration
        elif iteration - best_iteration > config.stall_window:
            break
        x = np.clip((1.0 - damping) * x + damping * image, 0.0, 1.0)
    return x, min(best, res), iteration, False


def solve_fixed_point(system: EquationSystem, config: Optional[SolveConfig] = None) -> SolveResult:
    """
    Find x with x = F(x) by damped iteration x <- (1 - d) x + d F(x).

    Restart 0 starts at all-1/2 without damping. Odd restarts start at all-1/2 again and
    even restarts at a seeded uniform point; both use the fallback damping, halved every
    second restart. A restart whose residual keeps falling but less than halves over a
    stall window hands over to damped Newton steps. The first converged restart wins.
    Failure is reported in the result.

    Args:
        system: System to solve
        config: Solver settings; defaults come from Config

    Returns:
        Result whose residual is at most the tolerance when converged; iterations counts
        every restart, Newton steps included
    """
    config = config or SolveConfig.from_config()
    rng = np.random.default_rng(config.seed)
    size = len(system.variables)
    best_res = math.inf
    total = 0
    for restart in range(config.restarts + 1):
        start, damping = _restart_plan(restart, size, rng, config)
        x, res, iterations, converged = _iterate(system, start, damping, config)
        total += iterations
        logger.debug('restart %d (damping %.4g): residual %.3e after %d iterations',
                     restart, damping, res, iterations)
        if converged:
            assignment = {name: float(value) for name, value in zip(system.variables, x)}
            logger.info('converged on restart %d, residual %.3e', restart, res)
            return SolveResult(SolveStatus.CONVERGED, assignment, res, total, restart)
        best_res = min(best_res, res)

    logger.warning('solver failed after %d restarts and %d iterations; best residual %.3e',
                   config.restarts + 1, total, best_res)
    return SolveResult(SolveStatus.FAILED, None, best_res, total, config.restarts)


# ============ Tuple axioms ============

def _arities(system: EquationSystem) -> Tuple[List[int], List[int]]:
    outer = sorted({len(eq.groups) for eq in system.equations if eq.groups})
    inner = sorted({len(group) for eq in system.equations for group in eq.groups})
    return outer, inner


def _check_function(fn, arity, identity, annihilated, label, rng, samples, strict) -> List[Violation]:
    violations = []
    ids = (f'{label}/{arity}',)
    if abs(fn([1.0] * arity) - identity) > AXIOM_TOLERANCE:
        violations.append(Violation(
            f'{label}-identity', f'{label}(1, ..., 1) != {identity} at arity {arity}', ids
        ))
    for _ in range(samples):
        point = rng.uniform(0.0, 1.0, arity)
        value = fn(point.tolist())
        permuted = fn(point[rng.permutation(arity)].tolist())
        if abs(value - permuted) > AXIOM_TOLERANCE:
            violations.append(Violation(
                f'{label}-symmetry', f'{label} changes under a permutation at arity {arity}', ids
            ))
            break
        point[rng.integers(arity)] = 0.0
        if abs(fn(point.tolist()) - annihilated) > AXIOM_TOLERANCE:
            violations.append(Violation(
                f'{label}-annihilator', f'{label} with a zero input != {annihilated} at arity {arity}', ids
            ))
            break
        if strict:
            positive = rng.uniform(0.05, 1.0, arity).tolist()
            value = fn(positive)
            if value == annihilated:
                violations.append(Violation(
                    f'{label}-strictness',
                    f'{label} reaches {annihilated} without a zero input at arity {arity}',
                    ids,
                ))
                break
    return violations


def validate_tuple_axioms(
    system: EquationSystem, samples: int = 100, seed: int = 0, strict: bool = False
) -> ValidationReport:
    """
    Check the real equation function tuple axioms on sampled points.

    h(1, ..., 1) = 1 and h is 0 once an input is 0; h_i(1, ..., 1) = 0 and h_i is 1 once
    an input is 0; h and every h_i are symmetric. With strict=True the converse
    directions are sampled too: h > 0 and h_i < 1 on points without zeros.
    """
    rng = np.random.default_rng(seed)
    outer_arities, inner_arities = _arities(system)
    violations: List[Violation] = []
    for arity in outer_arities:
        violations += _check_function(system.outer, arity, 1.0, 0.0, 'outer', rng, samples, strict)
    for arity in inner_arities:
        violations += _check_function(system.inner, arity, 0.0, 1.0, 'inner', rng, samples, strict)
    return ValidationReport(tuple(violations))


# ============ Three-valued solutions ============

def ternarize(assignment: Mapping[str, float], tolerance: Optional[float] = None) -> Labelling3:
    """Map 0 to 0, 1 to 1 and the open interval to 1/2, snapping within tolerance of an end."""
    tolerance = Config.MODEL_TOLERANCE if tolerance is None else tolerance
    labelling = {}
    for name, value in assignment.items():
        if not 0 <= value <= 1:
            raise DomainValueError(f'{name} = {value} outside [0, 1]')
        if value <= tolerance:
            labelling[name] = Truth3.ZERO
        elif value >= 1 - tolerance:
            labelling[name] = Truth3.ONE
        else:
            labelling[name] = Truth3.HALF
    return labelling


_EXACT = {0: Fraction(0), 1: Fraction(1, 2), 2: Fraction(1)}


def _solutions_with_prefix(system: EquationSystem, names, prefix):
    found = []
    for tail in itertools.product((0, 1, 2), repeat=len(names) - len(prefix)):
        row = prefix + tail
        point = [_EXACT[u] for u in row]
        if all(system.update(i, point) == point[i] for i in range(len(point))):
            found.append(row)
    return found


def enumerate_3valued_solutions(
    system: EquationSystem, cap: Optional[int] = None, workers: Optional[int] = None
) -> List[Labelling3]:
    """
    Points of {0, 1/2, 1}^n solving the system exactly.

    Arithmetic is over exact rationals for every family, so a zero residual is exact.
    """
    names = system.variables
    check_cap(len(names), cap)
    rows = partitioned(_solutions_with_prefix, names, workers or Config.WORKERS, system)
    return [{name: Truth3.from_units(u) for name, u in zip(names, row)} for row in rows]
