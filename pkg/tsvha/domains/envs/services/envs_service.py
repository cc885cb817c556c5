"""
Environment Services
밴딧 인스턴스 생성 및 보상(reward) 샘플링
"""

import math
from typing import Tuple

import numpy as np

from tsvha.core.logger import logger
from tsvha.core.exceptions import EnvException, ErrorCode
from tsvha.domains.envs.schemas.envs_schemas import BanditInstance, EnvConfig, EnvFamily, NoiseKind
from tsvha.domains.ingest import load_arm_means_csv

_SQRT2 = math.sqrt(2.0)


def _linear_gaussian(n_arms: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    # rows of L are uniform on the unit sphere: normalised standard normal vectors
    loadings = rng.standard_normal((n_arms, n_arms))
    loadings /= np.linalg.norm(loadings, axis=1, keepdims=True)
    theta = rng.standard_normal(n_arms)
    return loadings @ theta, loadings


def make_instance(config: EnvConfig, rng: np.random.Generator) -> BanditInstance:
    """
    Build one instance.

    RandomUniform means are i.i.d. U[0,1], RandomNormal i.i.d. N(0,1),
    LinearGaussian L theta with theta ~ N(0, I). Fixed and Tabular copy their
    means. Tabular reads the arm_id,mean CSV on every call.
    """
    loadings = None
    if config.family is EnvFamily.RANDOM_UNIFORM:
        means = rng.uniform(0.0, 1.0, size=config.arms)
    elif config.family is EnvFamily.RANDOM_NORMAL:
        means = rng.standard_normal(config.arms)
    elif config.family is EnvFamily.LINEAR_GAUSSIAN:
        means, loadings = _linear_gaussian(config.arms, rng)
    elif config.family is EnvFamily.FIXED:
        means = np.array(config.means, dtype=float)
    else:
        means = np.array(resolve_config(config).means, dtype=float)

    instance = BanditInstance(means=means, noise=config.noise, loadings=loadings)
    logger.debug(
        f"[Env] {config.family.value} instance: K={instance.n_arms}, "
        f"mu*={instance.optimal_mean!r} (arm {instance.optimal_arm})"
    )
    return instance


def pull(instance: BanditInstance, arm: int, rng: np.random.Generator) -> float:
    """One reward from the arm; the instance is never modified"""
    if not 0 <= arm < instance.n_arms:
        raise EnvException(
            detail=f"arm must be in [0, {instance.n_arms}), got {arm}",
            arm=arm,
            error_code=ErrorCode.ENV_INVALID_ARM,
        )
    mean = float(instance.means[arm])
    if instance.noise is NoiseKind.NONE:
        return mean
    if instance.noise is NoiseKind.GAUSSIAN_UNIT:
        return mean + float(rng.standard_normal())
    if instance.noise is NoiseKind.GAUSSIAN_VAR2:
        return mean + _SQRT2 * float(rng.standard_normal())
    # random() is in [0, 1): mean 1 always succeeds, mean 0 never
    return 1.0 if rng.random() < mean else 0.0


def gaps(instance: BanditInstance) -> np.ndarray:
    """Delta_i = mu* - mu_i"""
    return instance.gaps


def instant_regret(instance: BanditInstance, arm: int) -> float:
    if not 0 <= arm < instance.n_arms:
        raise EnvException(
            detail=f"arm must be in [0, {instance.n_arms}), got {arm}",
            arm=arm,
            error_code=ErrorCode.ENV_INVALID_ARM,
        )
    return instance.instant_regret(arm)


def resolve_config(config: EnvConfig) -> EnvConfig:
    """Tabular config turned into the equivalent fixed config (file read once)"""
    if config.family is not EnvFamily.TABULAR:
        return config
    means = load_arm_means_csv(config.table_path).means
    if config.arms is not None and config.arms != means.size:
        raise EnvException(
            detail=f"arms = {config.arms} but {config.table_path} holds {means.size} arms",
            error_code=ErrorCode.ENV_INVALID_CONFIG,
        )
    return EnvConfig(family=EnvFamily.FIXED, means=[float(m) for m in means], noise=config.noise)
