"""
Theory Services
기대 regret 상한(upper bound) 수치 계산, 선택 확률, 부등식 우변

All functions are pure. h(beta) is cached per (beta, budget, window).
"""

import itertools
import math
import sys
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import special

from tsvha.core.config import settings
from tsvha.core.logger import logger
from tsvha.core.exceptions import (
    BoundConstraintException,
    ErrorCode,
    ResourceException,
    TheoryException,
)
from tsvha.domains.theory.schemas.theory_schemas import (
    BoundParams,
    BoundRow,
    SelectionRow,
    SelectionVariant,
)

GAMMA_BRANCH = 4.0
TAIL_CONSTANT = 9.5
_MAX_FLOAT_LOG = math.log(sys.float_info.max)


# ============ Special functions ============

def q_function(x: float) -> float:
    """Standard normal upper tail Pr(Z > x)"""
    return float(0.5 * special.erfc(x / math.sqrt(2.0)))


def riemann_zeta(s: float, direct_terms: Optional[int] = None) -> float:
    """
    sum_{n>=1} n^-s for s > 1.

    Terms below M are summed directly; the remainder uses the Euler-Maclaurin
    tail M^(1-s)/(s-1) + M^-s/2 + s M^(-s-1)/12.
    """
    if not s > 1.0:
        raise TheoryException(detail=f"zeta requires s > 1, got {s!r}")
    m = direct_terms or settings.numeric.ZETA_DIRECT_TERMS
    head = math.fsum(np.arange(1, m, dtype=float) ** -s)
    tail = m ** (1.0 - s) / (s - 1.0) + 0.5 * m ** -s + s * m ** (-s - 1.0) / 12.0
    return head + tail


# ============ h(beta), g(epsilon) ============

def h_condition(r: int, beta: float) -> bool:
    """
    exp(-r^(1-beta/2) / sqrt(2 beta pi ln r)) <= 1 / r^2, evaluated in log
    space: with u = ln r, (1 - beta/2) u - ln sqrt(2 beta pi u) >= ln(2u).
    """
    u = math.log(r)
    return (1.0 - beta / 2.0) * u - 0.5 * math.log(2.0 * beta * math.pi * u) >= math.log(2.0 * u)


@lru_cache(maxsize=64)
def _h_beta(beta: float, max_iterations: int, verify_window: int) -> int:
    iterations = 0

    def holds(r: int) -> bool:
        nonlocal iterations
        iterations += 1
        if iterations > max_iterations:
            raise ResourceException(
                detail=f"h({beta!r}) search exceeded {max_iterations} iterations",
            )
        return h_condition(r, beta)

    # the condition fails at r = 2, keeps failing past the minimum of
    # a*u - 1.5*ln u and holds for every r after the single crossing
    low, high = 2, 4
    while not holds(high):
        low, high = high, high * 2
        if math.log(high) > _MAX_FLOAT_LOG:
            raise ResourceException(
                detail=f"h({beta!r}) exceeds the largest float",
                error_code=ErrorCode.RESOURCE_NOT_REPRESENTABLE,
            )

    # invariant: fails at low, holds at high
    while high - low > 1:
        middle = (low + high) // 2
        if holds(middle):
            high = middle
        else:
            low = middle

    for r in range(high + 1, high + verify_window + 1):
        if not holds(r):
            raise ResourceException(
                detail=f"h({beta!r}) candidate {high} fails again at {r}",
            )
    return high


def h_beta(beta: float, max_iterations: Optional[int] = None, verify_window: Optional[int] = None) -> int:
    """
    Smallest integer r >= 2 from which the Gaussian-tail condition holds.

    The condition has a single crossing, so a doubling search followed by a
    bisection finds it; the result is then checked over a window of
    consecutive integers.

    Raises:
        TheoryException: beta outside [1, 2)
        ResourceException: iteration budget exceeded or result beyond float range
    """
    if not 1.0 <= beta < 2.0:
        raise TheoryException(detail=f"beta must be in [1, 2), got {beta!r}")
    return _h_beta(
        float(beta),
        max_iterations or settings.numeric.H_BETA_MAX_ITERATIONS,
        verify_window or settings.numeric.H_BETA_VERIFY_WINDOW,
    )


def g_condition(r: float, epsilon: float, gamma: float, delta: float) -> bool:
    """exp(4 sqrt(ln r / gamma) (1 - delta/3)) <= r^epsilon"""
    log_r = math.log(r)
    return 4.0 * math.sqrt(log_r / gamma) * (1.0 - delta / 3.0) <= epsilon * log_r


def g_epsilon(epsilon: float, gamma: float, delta: float) -> float:
    """exp(16 (1 - delta/3)^2 / (epsilon^2 gamma))"""
    if not (epsilon > 0.0 and gamma > 0.0):
        raise TheoryException(detail=f"epsilon and gamma must be positive, got ({epsilon!r}, {gamma!r})")
    exponent = 16.0 * (1.0 - delta / 3.0) ** 2 / (epsilon * epsilon * gamma)
    if exponent > _MAX_FLOAT_LOG:
        raise ResourceException(
            detail=f"g(epsilon={epsilon!r}, gamma={gamma!r}, delta={delta!r}) overflows",
            error_code=ErrorCode.RESOURCE_NOT_REPRESENTABLE,
        )
    return math.exp(exponent)


# ============ Bound pieces ============

def bound_constant_h(beta: float) -> float:
    """H(beta) = 4 (h(beta) + zeta(2))"""
    return 4.0 * (h_beta(beta) + riemann_zeta(2.0))


def c_prime(delta: float) -> float:
    """e^(4 delta / 3) / (e^(2 delta^2 / 9) - 1)"""
    if not delta > 0.0:
        raise TheoryException(detail=f"gap must be positive, got {delta!r}")
    return math.exp(4.0 * delta / 3.0) / math.expm1(2.0 * delta * delta / 9.0)


def coefficient_c1(params: BoundParams, delta: float, h_constant: Optional[float] = None) -> float:
    """2 (H + 1) delta / (gamma (delta/3)^2), the coefficient of ln(T delta^2)"""
    h_constant = bound_constant_h(params.beta) if h_constant is None else h_constant
    return 2.0 * (h_constant + 1.0) * delta / (params.gamma * (delta / 3.0) ** 2)


def check_constraint(params: BoundParams) -> None:
    """Branch constraint on 2 beta / gamma - epsilon"""
    if params.gamma < GAMMA_BRANCH:
        if not params.exponent > 1.0:
            raise BoundConstraintException(
                "2*beta/gamma - epsilon > 1",
                detail=(
                    f"constraint '2*beta/gamma - epsilon > 1' violated for gamma < 4: "
                    f"2*{params.beta!r}/{params.gamma!r} - {params.epsilon!r} = {params.exponent!r}"
                ),
            )
    elif not params.exponent > 0.0:
        raise BoundConstraintException(
            "2*beta/gamma - epsilon > 0",
            detail=(
                f"constraint '2*beta/gamma - epsilon > 0' violated for gamma >= 4: "
                f"2*{params.beta!r}/{params.gamma!r} - {params.epsilon!r} = {params.exponent!r}"
            ),
        )


def horizon_term(params: BoundParams, delta: float) -> float:
    """
    Per-arm term linear in delta.

    gamma < 4:  (c' (g + zeta(2 beta/gamma - epsilon)) + 1) delta
    gamma >= 4: c' ((T^p - 1) / p + g + 1) delta with p = 1 + epsilon - 2 beta/gamma
    """
    check_constraint(params)
    cp = c_prime(delta)
    g = g_epsilon(params.epsilon, params.gamma, delta)
    if params.gamma < GAMMA_BRANCH:
        return (cp * (g + riemann_zeta(params.exponent)) + 1.0) * delta

    power = 1.0 - params.exponent
    if power == 0.0:
        growth = math.log(params.horizon)
    else:
        growth = math.expm1(power * math.log(params.horizon)) / power
    return cp * (growth + g + 1.0) * delta


def regret_bound(params: BoundParams) -> float:
    """
    sum over suboptimal arms of
    c1 max(0, ln(T delta^2)) + horizon_term + 9.5 / delta.

    Raises:
        BoundConstraintException: branch constraint violated
    """
    check_constraint(params)
    if not params.gaps:
        return 0.0

    h_constant = bound_constant_h(params.beta)
    total = 0.0
    for delta in params.gaps:
        log_term = max(0.0, math.log(params.horizon * delta * delta))
        total += (
            coefficient_c1(params, delta, h_constant) * log_term
            + horizon_term(params, delta)
            + TAIL_CONSTANT / delta
        )

    logger.debug(
        f"[Theory] bound(gamma={params.gamma!r}, beta={params.beta!r}, "
        f"epsilon={params.epsilon!r}, T={params.horizon}) = {total!r}"
    )
    return total


def bound_sweep(
    gammas: Sequence[float],
    betas: Sequence[float],
    epsilons: Sequence[float],
    horizons: Sequence[int],
    gaps: Sequence[float],
) -> List[BoundRow]:
    """Bound for every (gamma, beta, epsilon, T) combination, gamma outermost"""
    rows = []
    for gamma, beta, epsilon, horizon in itertools.product(gammas, betas, epsilons, horizons):
        params = BoundParams(gamma=gamma, beta=beta, epsilon=epsilon, gaps=list(gaps), horizon=horizon)
        rows.append(BoundRow(float(gamma), float(beta), float(epsilon), int(horizon), regret_bound(params)))
    logger.info(f"[Theory] bound sweep: {len(rows)} rows")
    return rows


# ============ Selection probabilities ============

def selection_probability(
    mu1: float,
    mu2: float,
    k1: int,
    k2: int,
    variant: SelectionVariant = SelectionVariant.TS,
    agents: int = 1,
) -> float:
    """
    Probability that arm 1 has the larger decision statistic on a two-arm
    Gaussian state: Q(z) with z = (mu2 - mu1) / sqrt(1/(k1+1) + 1/(k2+1)),
    z times sqrt(N) for C1 and z over sqrt(N) for C2.
    """
    variant = SelectionVariant(variant)
    if agents < 1:
        raise TheoryException(detail=f"N must be >= 1, got {agents}")
    if k1 < 0 or k2 < 0:
        raise TheoryException(detail=f"play counts must be nonnegative, got ({k1}, {k2})")

    z = (mu2 - mu1) / math.sqrt(1.0 / (k1 + 1) + 1.0 / (k2 + 1))
    if variant is SelectionVariant.C1:
        z *= math.sqrt(agents)
    elif variant is SelectionVariant.C2:
        z /= math.sqrt(agents)
    return q_function(z)


def selection_table(
    mu1s: Iterable[float],
    mu2s: Iterable[float],
    k1s: Iterable[int],
    k2s: Iterable[int],
    agent_counts: Iterable[int],
) -> List[SelectionRow]:
    """TS row plus C1(N) and C2(N) rows for every input combination"""
    agent_counts = list(agent_counts)
    rows = []
    for mu1, mu2, k1, k2 in itertools.product(mu1s, mu2s, k1s, k2s):
        rows.append(SelectionRow(mu1, mu2, k1, k2, "TS", 1, selection_probability(mu1, mu2, k1, k2)))
        for agents in agent_counts:
            for variant in (SelectionVariant.C1, SelectionVariant.C2):
                rows.append(SelectionRow(
                    mu1, mu2, k1, k2, variant.value.upper(), agents,
                    selection_probability(mu1, mu2, k1, k2, variant, agents),
                ))
    return rows


# ============ Inequality right-hand sides ============

def gaussian_tail_lower_bound(x: float) -> float:
    """x / (sqrt(2 pi) (x^2 + 1)) e^(-x^2/2), a lower bound on Pr(Z > m + x sigma)"""
    return x / (math.sqrt(2.0 * math.pi) * (x * x + 1.0)) * math.exp(-x * x / 2.0)


def tail_probability_bounds(z: float) -> Tuple[float, float]:
    """
    (1/(4 sqrt(pi)) e^(-7z^2/2), 1/2 e^(-z^2/2)) around the one-sided tail
    Pr(Z - m > z sigma). The upper bound does not hold for the two-sided tail
    when z <= 1; the lower bound holds for both.
    """
    return (
        math.exp(-3.5 * z * z) / (4.0 * math.sqrt(math.pi)),
        0.5 * math.exp(-0.5 * z * z),
    )


def pseries_upper_bound(n: int, p: float) -> float:
    """1 + ((n+1)^(1-p) - 1) / (1-p), an upper bound on sum_{i<=n} i^-p for 0 < p < 1"""
    if not 0.0 < p < 1.0:
        raise TheoryException(detail=f"p must be in (0, 1), got {p!r}")
    return 1.0 + ((n + 1) ** (1.0 - p) - 1.0) / (1.0 - p)
