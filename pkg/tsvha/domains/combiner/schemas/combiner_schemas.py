"""
Combiner Schemas
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from tsvha.core.config import settings
from tsvha.core.exceptions import CombinerException, ErrorCode

MEAN_TOLERANCE = 1e-12


class CombinerKind(str, Enum):
    """Combiner applied to the N per-arm samples"""
    IDENTITY = "identity"
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"


class CombinerSpec(BaseModel):
    """Combiner configuration (agents counts the primary agent too)"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: CombinerKind = Field(CombinerKind.IDENTITY, description="Combiner type")
    agents: int = Field(1, ge=1, description="Total agents N, including the primary (ignored for C3)")
    c3_agent_cap: int = Field(
        default_factory=lambda: settings.numeric.C3_AGENT_CAP,
        ge=1,
        description="Upper limit on the dynamic agent count of C3",
    )

    @model_validator(mode="after")
    def check_agents(self) -> "CombinerSpec":
        if self.kind is CombinerKind.IDENTITY and self.agents != 1:
            raise ValueError("identity combiner requires agents = 1")
        if self.kind is CombinerKind.C2 and self.agents < 2:
            raise ValueError("c2 combiner requires agents >= 2")
        return self

    @property
    def virtual_agents(self) -> int:
        return self.agents - 1


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Linear combiner weights c_1..c_N; the weights always sum to one"""

    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        array = np.array(self.coefficients, dtype=float)
        array.flags.writeable = False
        object.__setattr__(self, "coefficients", array)
        if array.ndim != 1 or array.size == 0:
            raise CombinerException(
                detail="coefficients must be a non-empty 1-d vector",
                error_code=ErrorCode.COMBINER_EMPTY_INPUT,
            )
        if abs(self.total - 1.0) > MEAN_TOLERANCE:
            raise CombinerException(
                detail=f"coefficients sum to {self.total!r}, mean is not preserved",
                agents=self.n_agents,
            )

    @property
    def n_agents(self) -> int:
        return int(self.coefficients.size)

    @property
    def total(self) -> float:
        return math.fsum(self.coefficients)

    @property
    def sum_of_squares(self) -> float:
        """Variance multiplier applied to i.i.d. inputs"""
        return math.fsum(self.coefficients * self.coefficients)

    def __len__(self) -> int:
        return self.n_agents

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientVector):
            return NotImplemented
        return np.array_equal(self.coefficients, other.coefficients)
