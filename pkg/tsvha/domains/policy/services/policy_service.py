"""
Policy Services
TS / TS-VHA / Greedy / STS 팔 선택 및 상태 갱신
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from tsvha.core.exceptions import ErrorCode, PolicyException
from tsvha.domains.combiner import CombinerSpec, combine_table
from tsvha.domains.policy.schemas.policy_schemas import (
    HistoryEntry,
    PolicyKind,
    PolicySpec,
    PolicyState,
    SatisficingLog,
)
from tsvha.domains.posterior import init_table, sample_table, update_table


def init_state(spec: PolicySpec, n_arms: int) -> PolicyState:
    """Fresh state at t = 1 with prior posteriors and empty history"""
    if n_arms < 1:
        raise PolicyException(
            detail=f"at least one arm required, got {n_arms}",
            error_code=ErrorCode.POLICY_INVALID_SPEC,
        )
    return PolicyState(table=init_table(spec.posterior_family, n_arms))


def _check_arm(state: PolicyState, arm: int) -> None:
    if not 0 <= arm < state.n_arms:
        raise PolicyException(detail=f"arm must be in [0, {state.n_arms}), got {arm}", arm=arm)


def satisficing_arm(
    history: Sequence[HistoryEntry],
    candidate_arm: int,
    candidate_theta: float,
    epsilon: float,
) -> int:
    """
    Arm of the earliest period whose recorded theta is within epsilon of the
    candidate; the candidate itself when no period qualifies.
    """
    if not history:
        return candidate_arm
    log = SatisficingLog.from_entries(history)
    return _satisficing_from_log(log, len(history), candidate_arm, candidate_theta, epsilon)


def _satisficing_from_log(
    log: Optional[SatisficingLog],
    length: int,
    candidate_arm: int,
    candidate_theta: float,
    epsilon: float,
) -> int:
    if log is None or length == 0:
        return candidate_arm
    index = log.earliest_within(length, candidate_theta, epsilon)
    return candidate_arm if index is None else log.arm(index)


def _sts_choice(
    state: PolicyState,
    epsilon: float,
    combiner: CombinerSpec,
    rng: np.random.Generator,
) -> Tuple[int, float]:
    thetas = combine_table(combiner, state.table, state.t, rng)
    candidate = int(np.argmax(thetas))
    arm = _satisficing_from_log(state.log, state.history_length, candidate, float(thetas[candidate]), epsilon)
    return arm, float(thetas[arm])


def sts_select(
    state: PolicyState,
    epsilon: float,
    rng: np.random.Generator,
    combiner: Optional[CombinerSpec] = None,
) -> int:
    """Satisficing TS arm for the current period"""
    if epsilon < 0:
        raise PolicyException(
            detail=f"epsilon must be nonnegative, got {epsilon!r}",
            error_code=ErrorCode.POLICY_INVALID_SPEC,
        )
    arm, _ = _sts_choice(state, epsilon, combiner or CombinerSpec(), rng)
    return arm


def select_arm(state: PolicyState, spec: PolicySpec, rng: np.random.Generator) -> Tuple[int, float]:
    """
    Arm to play at period state.t and its decision statistic theta.

    Argmax ties go to the lowest arm index. Greedy consumes no randomness.
    """
    if spec.kind is PolicyKind.GREEDY:
        means = state.table.empirical_means
        arm = int(np.argmax(means))
        return arm, float(means[arm])

    if spec.kind is PolicyKind.TS:
        thetas = sample_table(state.table, rng)[:, 0]
    elif spec.kind is PolicyKind.TSVHA:
        thetas = combine_table(spec.effective_combiner, state.table, state.t, rng)
    else:
        return _sts_choice(state, spec.epsilon, spec.effective_combiner, rng)

    arm = int(np.argmax(thetas))
    return arm, float(thetas[arm])


def step(state: PolicyState, spec: PolicySpec, arm: int, reward: float, theta: float) -> PolicyState:
    """Posterior update of the played arm; t advances by one"""
    _check_arm(state, arm)
    log, length = state.log, state.history_length
    if spec.kind is PolicyKind.STS:
        entry = HistoryEntry(state.t, arm, float(theta))
        log = (log if log is not None else SatisficingLog()).appended(length, entry)
        length += 1
    return PolicyState(
        table=update_table(state.table, arm, reward),
        t=state.t + 1,
        log=log,
        history_length=length,
    )


def recommend_arm(state: PolicyState) -> int:
    """Arm with the highest empirical mean, lowest index on ties"""
    return int(np.argmax(state.table.empirical_means))
