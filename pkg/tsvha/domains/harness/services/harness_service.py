"""
Harness Service
재현 가능한 Monte Carlo 실험 실행 및 집계

Run r draws from SeedSequence(base_seed, spawn_key=(r,)): child 0 builds the
instance, child 1 + p drives policy p. Fixed-across-runs instances come from
the root SeedSequence(base_seed). Results are reduced in run-index order, so
the output does not depend on the worker count.
"""

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from tsvha.core.config import settings
from tsvha.core.logger import logger
from tsvha.core.exceptions import ErrorCode, HarnessException
from tsvha.domains.envs import BanditInstance, make_instance, pull, resolve_config
from tsvha.domains.harness.schemas.harness_schemas import (
    QUANTILES,
    BAIRow,
    ExperimentSpec,
    InstanceMode,
    PolicyResult,
    RegretTrace,
    Summary,
)
from tsvha.domains.policy import PolicySpec, init_state, recommend_arm, select_arm, step


# ============ Random streams ============

def run_seed_sequence(base_seed: int, run_index: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(base_seed, spawn_key=(run_index,))


def derive_run_rng(base_seed: int, run_index: int) -> np.random.Generator:
    """Independent, reproducible stream for one run"""
    return np.random.Generator(np.random.PCG64(run_seed_sequence(base_seed, run_index)))


def _generators(sequences: Sequence[np.random.SeedSequence]) -> List[np.random.Generator]:
    return [np.random.Generator(np.random.PCG64(seq)) for seq in sequences]


def _instance_for_run(spec: ExperimentSpec, instance_seq: np.random.SeedSequence) -> BanditInstance:
    if spec.instance_mode is InstanceMode.FIXED_ACROSS_RUNS:
        instance_seq = np.random.SeedSequence(spec.base_seed)
    return make_instance(spec.env, _generators([instance_seq])[0])


def _run_streams(spec: ExperimentSpec, run_index: int):
    children = run_seed_sequence(spec.base_seed, run_index).spawn(1 + len(spec.policies))
    instance = _instance_for_run(spec, children[0])
    return instance, _generators(children[1:])


# ============ Single run ============

def play(
    instance: BanditInstance,
    policy: PolicySpec,
    horizon: int,
    rng: np.random.Generator,
):
    """
    Play one policy for `horizon` periods.

    Returns (instantaneous regret per period, final PolicyState).
    """
    gaps = instance.gaps
    regrets = np.empty(horizon)
    state = init_state(policy, instance.n_arms)
    for index in range(horizon):
        arm, theta = select_arm(state, policy, rng)
        reward = pull(instance, arm, rng)
        state = step(state, policy, arm, reward, theta)
        regrets[index] = gaps[arm]
    return regrets, state


def run_single(spec: ExperimentSpec, run_index: int) -> np.ndarray:
    """Instantaneous regrets of run `run_index`, shape (policies, T)"""
    instance, rngs = _run_streams(spec, run_index)
    regrets = np.empty((len(spec.policies), spec.horizon))
    for index, (policy, rng) in enumerate(zip(spec.policies, rngs)):
        regrets[index], _ = play(instance, policy, spec.horizon, rng)
    logger.debug(f"[Harness] run {run_index} 완료")
    return regrets


def run_bai_single(spec: ExperimentSpec, budget: int, run_index: int) -> np.ndarray:
    """Per-policy miss flags (1.0 when the recommended arm is not optimal)"""
    instance, rngs = _run_streams(spec, run_index)
    misses = np.zeros(len(spec.policies))
    if instance.n_arms < 2:
        return misses
    for index, (policy, rng) in enumerate(zip(spec.policies, rngs)):
        _, state = play(instance, policy, budget, rng)
        recommended = recommend_arm(state)
        misses[index] = float(instance.means[recommended] < instance.optimal_mean)
    return misses


# ============ Parallel map ============

def resolve_workers(workers: Optional[int]) -> int:
    workers = workers or settings.DEFAULT_WORKERS or os.cpu_count() or 1
    if workers < 1:
        raise HarnessException(detail=f"workers must be >= 1, got {workers}")
    return workers


def _map_runs(task: Callable, args: Sequence[tuple], workers: int) -> List[np.ndarray]:
    # executor.map yields in submission order: results[i] belongs to args[i]
    if workers == 1 or len(args) == 1:
        return [task(*item) for item in args]
    chunksize = max(1, len(args) // (workers * 4))
    with ProcessPoolExecutor(max_workers=min(workers, len(args))) as executor:
        return list(executor.map(task, *zip(*args), chunksize=chunksize))


def _prepared(spec: ExperimentSpec) -> ExperimentSpec:
    # tabular files are read once here, not once per run
    env = resolve_config(spec.env)
    return spec if env is spec.env else spec.model_copy(update={"env": env})


# ============ Aggregation ============

def aggregate(per_run_values: Sequence[float]) -> Summary:
    """Exact mean, sample std (0 for one run), nearest-rank quantiles"""
    values = np.asarray(per_run_values, dtype=float)
    if values.size == 0:
        raise HarnessException(detail="nothing to aggregate", error_code=ErrorCode.HARNESS_EMPTY_INPUT)
    std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    quantiles = np.quantile(values, QUANTILES, method="inverted_cdf")
    return Summary(
        mean=math.fsum(values) / values.size,
        std=std,
        quantiles=tuple(float(q) for q in quantiles),
        runs=int(values.size),
    )


def aggregate_trace(values: np.ndarray) -> RegretTrace:
    """Column-wise aggregates of an (R, T) matrix"""
    if values.size == 0:
        raise HarnessException(detail="nothing to aggregate", error_code=ErrorCode.HARNESS_EMPTY_INPUT)
    runs = values.shape[0]
    std = np.std(values, axis=0, ddof=1) if runs > 1 else np.zeros(values.shape[1])
    return RegretTrace(
        mean=values.mean(axis=0),
        std=std,
        quantiles=np.quantile(values, QUANTILES, axis=0, method="inverted_cdf"),
        runs=runs,
    )


# ============ Experiments ============

def run_experiment(spec: ExperimentSpec, workers: Optional[int] = None) -> Dict[str, PolicyResult]:
    """
    Cumulative and per-period regret traces plus final-regret summaries,
    keyed by policy label in config order.
    """
    workers = resolve_workers(workers)
    prepared = _prepared(spec)
    logger.info(
        f"[Harness] 실험 시작: policies={spec.labels}, T={spec.horizon}, R={spec.runs}, "
        f"mode={spec.instance_mode.value}, workers={workers}"
    )
    started = time.perf_counter()

    outcomes = _map_runs(run_single, [(prepared, r) for r in range(spec.runs)], workers)
    regrets = np.stack(outcomes)  # (R, P, T), run-indexed

    results = {}
    for index, label in enumerate(spec.labels):
        instant = regrets[:, index, :]
        cumulative = np.cumsum(instant, axis=1)
        results[label] = PolicyResult(
            label=label,
            cumulative=aggregate_trace(cumulative),
            per_period=aggregate_trace(instant),
            final=aggregate(cumulative[:, -1]),
            final_regrets=cumulative[:, -1].copy(),
        )
        logger.info(f"[Harness] {label}: 최종 누적 regret 평균 {results[label].final.mean:.4f}")

    logger.info(f"[Harness] 실험 종료 ({time.perf_counter() - started:.1f}s)")
    return results


def bai_error_rates(spec: ExperimentSpec, budget: int, workers: Optional[int] = None) -> Dict[str, float]:
    """Misidentification rate of every policy after `budget` pulls"""
    if budget < 1:
        raise HarnessException(detail=f"budget must be >= 1, got {budget}")
    workers = resolve_workers(workers)
    prepared = _prepared(spec)
    outcomes = _map_runs(run_bai_single, [(prepared, budget, r) for r in range(spec.runs)], workers)
    misses = np.stack(outcomes)  # (R, P)
    return {label: math.fsum(misses[:, index]) / spec.runs for index, label in enumerate(spec.labels)}


def bai_experiment(spec: ExperimentSpec, budget: int, workers: Optional[int] = None) -> float:
    """Error rate of the first configured policy"""
    return bai_error_rates(spec, budget, workers)[spec.labels[0]]


def bai_sweep(spec: ExperimentSpec, budgets: Sequence[int], workers: Optional[int] = None) -> List[BAIRow]:
    """(budget, policy, error_rate, runs) for every budget, policies in config order"""
    rows = []
    for budget in budgets:
        logger.info(f"[Harness] BAI budget={budget}, R={spec.runs}")
        for label, rate in bai_error_rates(spec, budget, workers).items():
            rows.append(BAIRow(int(budget), label, rate, spec.runs))
    return rows
