"""
공통 테스트 fixture
"""

import textwrap
from pathlib import Path

import numpy as np
import pytest

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def write_text(tmp_path):
    """Write dedented text under tmp_path and return the path"""
    def _write(name: str, content: str) -> Path:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(textwrap.dedent(content).lstrip(), encoding="utf-8")
        return path
    return _write


@pytest.fixture
def small_run_config(write_text):
    """Small but complete run config: 3 arms, 3 policies"""
    return write_text("small.yaml", """
        experiment:
          horizon: 50
          runs: 6
          seed: 99
          instance_mode: resampled_per_run
        env:
          family: random_uniform
          arms: 3
          noise: gaussian_unit
        policies:
          - kind: ts
          - kind: tsvha
            combiner: {kind: c1, agents: 3}
          - kind: sts
            epsilon: 0.05
        bai:
          budgets: [5, 20]
    """)
