"""Power aggregation and job-energy accounting.

The energy footprint of a job is power x time, not power alone; the
classical side of any comparison uses an explicit user-supplied runtime,
never an inferred one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import QpuSpec
from .runtime import RuntimeEstimate


@dataclass(frozen=True)
class EnergyEstimate:
    power_draw: float  # watts
    job_energy: float  # joules
    breakdown: tuple[tuple[str, float], ...]  # (component label, watts)


def power_breakdown(qpu: QpuSpec) -> tuple[tuple[str, float], ...]:
    """Per-component steady-state draw in watts.

    A per-qubit component's effective count is the QPU's qubit count.
    """
    rows = []
    for component in qpu.power_components:
        count = qpu.qubit_count if component.per_qubit else component.count
        rows.append((component.label, component.unit_power_w * count))
    return tuple(rows)


def power_draw(qpu: QpuSpec) -> float:
    """Total steady-state draw in watts (0 for QPUs with no reported data)."""
    return sum(watts for _, watts in power_breakdown(qpu))


def job_energy(power: float, runtime: RuntimeEstimate | float) -> float:
    """Joules for a job: power x total wall-clock seconds."""
    if power < 0.0:
        raise ValueError(f"power must be >= 0, got {power}")
    seconds = runtime.total_time if isinstance(runtime, RuntimeEstimate) else float(runtime)
    return power * seconds


def estimate_energy(qpu: QpuSpec, runtime: RuntimeEstimate) -> EnergyEstimate:
    breakdown = power_breakdown(qpu)
    power = sum(watts for _, watts in breakdown)
    return EnergyEstimate(
        power_draw=power,
        job_energy=job_energy(power, runtime),
        breakdown=breakdown,
    )
