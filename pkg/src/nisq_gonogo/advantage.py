"""Five-axis quantum-vs-classical comparison: space, speed, quality,
energetic, cost.

Speed, energy, and cost are lower-is-better; quality is higher-is-better; a
relative parity band keeps noise-level differences from flipping verdicts.
The space axis compares the quantum state-space footprint (bytes for an
exact statevector of the data register) against the classical machine's
memory capacity, with no band.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .feasibility import statevector_memory

DEFAULT_PARITY_BAND = 0.05

AXES = ("space", "speed", "quality", "energetic", "cost")


class Outcome(str, enum.Enum):
    ADVANTAGE = "advantage"
    PARITY = "parity"
    DISADVANTAGE = "disadvantage"
    NOT_EVALUATED = "not-evaluated"


@dataclass(frozen=True)
class SolutionProfile:
    """One side of a comparison.  Optional axes are skipped when absent.

    ``memory_bytes`` is the memory the solution needs: a classical machine's
    capacity requirement, or the statevector-equivalent footprint of a
    quantum register (see :func:`quantum_profile`).
    """

    runtime_s: float
    energy_j: float | None = None
    cost: float | None = None
    quality: float | None = None
    memory_bytes: int | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.runtime_s) and self.runtime_s > 0.0):
            raise ValueError(f"runtime_s must be finite and > 0, got {self.runtime_s}")
        for name in ("energy_j", "cost", "quality"):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"{name} must be finite and >= 0, got {value}")
        if self.memory_bytes is not None and self.memory_bytes < 0:
            raise ValueError(f"memory_bytes must be >= 0, got {self.memory_bytes}")


def quantum_profile(
    runtime_s: float,
    *,
    qubits: int,
    energy_j: float | None = None,
    cost: float | None = None,
    quality: float | None = None,
) -> SolutionProfile:
    """Profile for the quantum side; the space footprint is the exact
    statevector size of its ``qubits``-qubit register."""
    return SolutionProfile(
        runtime_s=runtime_s,
        energy_j=energy_j,
        cost=cost,
        quality=quality,
        memory_bytes=statevector_memory(qubits),
    )


@dataclass(frozen=True)
class AdvantageReport:
    """Per-axis outcome of a comparison, quantum side first."""

    space: Outcome
    speed: Outcome
    quality: Outcome
    energetic: Outcome
    cost: Outcome
    notes: tuple[str, ...] = ()

    def axes(self) -> dict[str, Outcome]:
        return {axis: getattr(self, axis) for axis in AXES}


def _lower_is_better(q: float | None, c: float | None, band: float) -> Outcome:
    if q is None or c is None:
        return Outcome.NOT_EVALUATED
    if q < (1.0 - band) * c:
        return Outcome.ADVANTAGE
    if c < (1.0 - band) * q:
        return Outcome.DISADVANTAGE
    return Outcome.PARITY


def _strict_compare(q: int | None, c: int | None) -> Outcome:
    if q is None or c is None:
        return Outcome.NOT_EVALUATED
    if q > c:
        return Outcome.ADVANTAGE
    if q < c:
        return Outcome.DISADVANTAGE
    return Outcome.PARITY


def classify(
    quantum: SolutionProfile,
    classical: SolutionProfile,
    *,
    parity_band: float = DEFAULT_PARITY_BAND,
) -> AdvantageReport:
    """Classify ``quantum`` against ``classical`` along the five axes.

    Swapping the two profiles maps advantage to disadvantage and leaves
    parity and not-evaluated fixed; rescaling both sides of any axis by the
    same positive constant leaves the report unchanged.
    """
    if not 0.0 <= parity_band < 1.0:
        raise ValueError(f"parity_band must be in [0, 1), got {parity_band}")
    space = _strict_compare(quantum.memory_bytes, classical.memory_bytes)
    speed = _lower_is_better(quantum.runtime_s, classical.runtime_s, parity_band)
    energetic = _lower_is_better(quantum.energy_j, classical.energy_j, parity_band)
    cost = _lower_is_better(quantum.cost, classical.cost, parity_band)
    # higher-is-better is the mirrored comparison
    quality = _lower_is_better(classical.quality, quantum.quality, parity_band)

    notes: tuple[str, ...] = ()
    if space is Outcome.ADVANTAGE and energetic is Outcome.ADVANTAGE:
        notes = (
            "space and energetic advantage together: the reference classical "
            "machine cannot hold the full state, so the energy win may extend "
            "to any classical configuration of this class",
        )
    return AdvantageReport(
        space=space,
        speed=speed,
        quality=quality,
        energetic=energetic,
        cost=cost,
        notes=notes,
    )
