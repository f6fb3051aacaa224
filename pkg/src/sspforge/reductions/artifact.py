"""Reduction artifacts and check verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..core import DistanceMeasure
from ..problems import ProblemKind

SSP = "ssp"
BLOWUP = "blowup"
PRESERVING = "preserving"


@dataclass(frozen=True)
class ReductionArtifact:
    edge: str
    kind: str  # ssp | blowup | preserving
    source_kind: ProblemKind
    source: Any
    target_kind: ProblemKind
    target: Any
    f: tuple[int, ...]  # target universe index per source universe index
    l_b: int = 0  # blow-up literal mask over the source universe
    beta: tuple[tuple[DistanceMeasure, int], ...] | None = None
    u_on: int = 0  # preserving partition masks over the target universe
    u_off: int = 0

    def beta_for(self, measure: DistanceMeasure) -> int:
        if self.beta is None:
            raise ValueError(f"artifact {self.edge} carries no blow-up factor")
        for m, v in self.beta:
            if m is measure:
                return v
        raise ValueError(f"no blow-up factor for {measure}")

    def f_image_mask(self) -> int:
        m = 0
        for t in self.f:
            m |= 1 << t
        return m


def beta_map(add: int, delete: int, hamming: int):
    return (
        (DistanceMeasure.KAPPA_ADDITION, add),
        (DistanceMeasure.KAPPA_DELETION, delete),
        (DistanceMeasure.HAMMING, hamming),
    )


@dataclass(frozen=True)
class CheckVerdict:
    passed: bool
    reason: str = ""
    counterexample: tuple[int, ...] = field(default_factory=tuple)
    source_solutions: int = 0
    target_solutions: int = 0

    def __bool__(self):
        return self.passed
