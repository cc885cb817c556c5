"""
Policy Schemas
정책(policy) 설정 및 상태 타입
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from tsvha.domains.combiner import CombinerKind, CombinerSpec
from tsvha.domains.posterior import PosteriorFamily, PosteriorTable


class PolicyKind(str, Enum):
    TS = "ts"
    TSVHA = "tsvha"
    GREEDY = "greedy"
    STS = "sts"


class PolicySpec(BaseModel):
    """Arm-selection policy configuration"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: PolicyKind = Field(..., description="Policy type")
    combiner: Optional[CombinerSpec] = Field(None, description="Combiner (TSVHA required, STS optional)")
    epsilon: float = Field(0.0, ge=0.0, description="Satisficing tolerance (STS only)")
    posterior_family: PosteriorFamily = Field(PosteriorFamily.GAUSSIAN, description="Posterior family")
    label: Optional[str] = Field(
        None, pattern=r"^[A-Za-z0-9._+-]+$", description="Display label (also the output file suffix); derived when omitted"
    )

    @model_validator(mode="after")
    def check_combiner(self) -> "PolicySpec":
        if self.kind is PolicyKind.TSVHA and self.combiner is None:
            raise ValueError("tsvha policy requires a combiner")
        if self.kind in (PolicyKind.TS, PolicyKind.GREEDY) and self.combiner is not None \
                and self.combiner.kind is not CombinerKind.IDENTITY:
            raise ValueError(f"{self.kind.value} policy does not take a combiner")
        return self

    @property
    def effective_combiner(self) -> CombinerSpec:
        return self.combiner if self.combiner is not None else CombinerSpec()

    @property
    def display_name(self) -> str:
        """TS, Greedy, STS, TS-VHA-C1-VA2, TS-VHA-C2-VA2, TS-VHA-C3 ..."""
        if self.label:
            return self.label
        if self.kind is PolicyKind.TS:
            return "TS"
        if self.kind is PolicyKind.GREEDY:
            return "Greedy"
        suffix = _combiner_suffix(self.effective_combiner)
        if self.kind is PolicyKind.STS:
            return f"STS-VHA-{suffix}" if suffix else "STS"
        return f"TS-VHA-{suffix}" if suffix else "TS-VHA-VA0"


def _combiner_suffix(combiner: CombinerSpec) -> str:
    if combiner.kind is CombinerKind.IDENTITY:
        return ""
    if combiner.kind is CombinerKind.C3:
        return "C3"
    return f"{combiner.kind.value.upper()}-VA{combiner.virtual_agents}"


class HistoryEntry(NamedTuple):
    """(period, played arm, theta of the played arm)"""
    period: int
    arm: int
    theta: float


class SatisficingLog:
    """
    Append-only STS record with a running maximum of theta.

    States that follow one another share one log and each sees its first
    `length` entries. Entries are never rewritten, so appending for a newer
    state leaves every older view intact; appending behind the end copies
    the prefix first.
    """

    __slots__ = ("_periods", "_arms", "_thetas", "_best", "_size")

    def __init__(self, capacity: int = 64):
        self._periods = np.empty(capacity, dtype=np.int64)
        self._arms = np.empty(capacity, dtype=np.int64)
        self._thetas = np.empty(capacity, dtype=float)
        self._best = np.empty(capacity, dtype=float)
        self._size = 0

    @classmethod
    def from_entries(cls, entries: Sequence[HistoryEntry]) -> "SatisficingLog":
        log = cls(max(64, len(entries)))
        for entry in entries:
            log._push(entry)
        return log

    def __len__(self) -> int:
        return self._size

    def _push(self, entry: HistoryEntry) -> None:
        index = self._size
        if index == self._thetas.size:
            capacity = 2 * max(index, 32)
            self._periods = np.concatenate([self._periods, np.empty(capacity - index, dtype=np.int64)])
            self._arms = np.concatenate([self._arms, np.empty(capacity - index, dtype=np.int64)])
            self._thetas = np.concatenate([self._thetas, np.empty(capacity - index)])
            self._best = np.concatenate([self._best, np.empty(capacity - index)])
        theta = float(entry.theta)
        self._periods[index] = entry.period
        self._arms[index] = entry.arm
        self._thetas[index] = theta
        self._best[index] = theta if index == 0 else max(float(self._best[index - 1]), theta)
        self._size = index + 1

    def appended(self, length: int, entry: HistoryEntry) -> "SatisficingLog":
        """Log whose first length + 1 entries are this log's first `length` and `entry`"""
        if length == self._size:
            log = self
        else:
            log = SatisficingLog.from_entries(self.entries(length))
        log._push(entry)
        return log

    def entries(self, length: int) -> Tuple[HistoryEntry, ...]:
        return tuple(
            HistoryEntry(int(p), int(a), float(th))
            for p, a, th in zip(self._periods[:length], self._arms[:length], self._thetas[:length])
        )

    def arm(self, index: int) -> int:
        return int(self._arms[index])

    def earliest_within(self, length: int, theta: float, epsilon: float) -> Optional[int]:
        """Earliest index among the first `length` with theta_i + epsilon >= theta"""
        best = self._best[:length]
        # theta_i + epsilon >= theta first holds where the running max does
        index = int(np.searchsorted(best, theta - epsilon, side="left"))
        while index > 0 and best[index - 1] + epsilon >= theta:
            index -= 1
        while index < length and not best[index] + epsilon >= theta:
            index += 1
        return index if index < length else None


@dataclass(frozen=True)
class PolicyState:
    """
    State of one policy within one run.

    The satisficing log is kept only for STS; t is the period about to be
    played.
    """

    table: PosteriorTable
    t: int = 1
    log: Optional[SatisficingLog] = field(default=None, repr=False, compare=False)
    history_length: int = 0

    @property
    def n_arms(self) -> int:
        return self.table.n_arms

    @property
    def history(self) -> Tuple[HistoryEntry, ...]:
        """(period, arm, theta) of every STS period played so far"""
        if self.log is None:
            return ()
        return self.log.entries(self.history_length)
