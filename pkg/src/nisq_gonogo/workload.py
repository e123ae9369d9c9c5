"""Variational workload models: Pauli-string counts, shot budgets, and
error-mitigation overhead.

Workload files are UTF-8 JSON: either one object with the
:class:`WorkloadSpec` fields in snake_case, or a list of such objects.

    {
      "id": "benzene-like-vqe",
      "family": "vqe",
      "data_qubits": 72,
      "depth": 72,
      "target_epsilon": 0.001,
      "ansatz_iterations": 100,
      "classical_prep_time": 1.0,
      "pauli_grouping": "none",
      "mitigation": {"enabled": false, "exponent_coefficient": 1.0},
      "c_vqe_override": null
    }
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

from .feasibility import CircuitShape

#: Quartic-scaling coefficient for ungrouped VQE measurement bases,
#: calibrated so a 72-qubit electronic-structure instance needs exactly
#: 330,816 measurement strings.  Overridable per workload.
VQE_PAULI_COEFF = 330816 / 72**4


class WorkloadError(ValueError):
    """Workload document failed to parse or violated an invariant."""


class AlgorithmFamily(str, enum.Enum):
    VQE = "vqe"
    QAOA = "qaoa"
    GENERIC = "generic"


class PauliGrouping(str, enum.Enum):
    NONE = "none"
    GROUPED = "grouped"


@dataclass(frozen=True)
class MitigationSpec:
    """Error-mitigation switch and its exponential-overhead coefficient."""

    enabled: bool = False
    exponent_coefficient: float = 1.0


@dataclass(frozen=True)
class WorkloadSpec:
    """One algorithm instance to be costed against hardware."""

    id: str
    family: AlgorithmFamily
    data_qubits: int
    depth: int
    target_epsilon: float
    ansatz_iterations: int
    classical_prep_time: float = 0.0
    qaoa_layers: int | None = None
    pauli_grouping: PauliGrouping = PauliGrouping.NONE
    mitigation: MitigationSpec = MitigationSpec()
    c_vqe_override: float | None = None

    @property
    def shape(self) -> CircuitShape:
        return CircuitShape(breadth=self.data_qubits, depth=self.depth)


@dataclass(frozen=True)
class ShotPlan:
    """Shot budget for one variational iteration.

    ``model`` records which accounting produced it: ``per-string``
    (strings x shots-per-string) or ``qaoa-aggregate`` (total n^2/eps budget).
    """

    pauli_strings: int
    shots_per_string: int
    mitigation_multiplier: float
    total_shots: int
    model: str = "per-string"


def _snap_ceil(value: float) -> int:
    """Ceiling with a relative-1e-9 snap so decimal inputs hit exact counts."""
    nearest = round(value)
    if nearest >= 1 and abs(value - nearest) <= 1e-9 * nearest:
        return int(nearest)
    return math.ceil(value)


def pauli_string_count(spec: WorkloadSpec) -> int:
    """Number of measurement-basis circuits per expectation-value estimate.

    Ungrouped VQE scales with the fourth power of the data-qubit count
    (coefficient :data:`VQE_PAULI_COEFF`); grouped VQE and the generic
    family use the qubit count itself; a QAOA instance needs two strings
    per layer.
    """
    if spec.family is AlgorithmFamily.QAOA:
        if spec.qaoa_layers is None:
            raise WorkloadError(f"workload '{spec.id}': qaoa_layers is required for the qaoa family")
        return 2 * spec.qaoa_layers
    if spec.family is AlgorithmFamily.VQE and spec.pauli_grouping is PauliGrouping.NONE:
        coeff = VQE_PAULI_COEFF if spec.c_vqe_override is None else spec.c_vqe_override
        return max(1, round(coeff * spec.data_qubits**4))
    return spec.data_qubits


def shots_per_string(epsilon: float) -> int:
    """Shots to reach standard error ``epsilon`` on one measured string: 1/eps^2."""
    if not 0.0 < epsilon <= 1.0:
        raise WorkloadError(f"target_epsilon must be in (0, 1], got {epsilon}")
    return _snap_ceil(1.0 / (epsilon * epsilon))


def qaoa_aggregate_shots(epsilon: float, qubits: int) -> int:
    """Alternative whole-run QAOA budget: n^2/eps shots in total."""
    if not 0.0 < epsilon <= 1.0:
        raise WorkloadError(f"target_epsilon must be in (0, 1], got {epsilon}")
    if qubits < 1:
        raise WorkloadError(f"qubits must be >= 1, got {qubits}")
    return _snap_ceil(qubits * qubits / epsilon)


def mitigation_multiplier(spec: MitigationSpec, error_rate: float, shape: CircuitShape) -> float:
    """Extra-shot factor from error mitigation: exp(c * expected error count).

    The expected error count is error_rate x breadth x depth, so the
    overhead grows exponentially in depth or qubit number, whichever moves.
    Always >= 1; exactly 1 when disabled or when the circuit is error-free.
    """
    if not 0.0 <= error_rate < 1.0:
        raise ValueError(f"error_rate must be in [0, 1), got {error_rate}")
    if not spec.enabled:
        return 1.0
    lam = error_rate * shape.volume
    return math.exp(spec.exponent_coefficient * lam)


def shot_plan(spec: WorkloadSpec, error_rate: float, *, qaoa_aggregate: bool = False) -> ShotPlan:
    """Full per-iteration shot budget for ``spec`` on hardware with ``error_rate``."""
    multiplier = mitigation_multiplier(spec.mitigation, error_rate, spec.shape)
    if qaoa_aggregate:
        if spec.family is not AlgorithmFamily.QAOA:
            raise WorkloadError(f"workload '{spec.id}': aggregate accounting applies only to the qaoa family")
        strings = 1
        per_string = qaoa_aggregate_shots(spec.target_epsilon, spec.data_qubits)
        model = "qaoa-aggregate"
    else:
        strings = pauli_string_count(spec)
        per_string = shots_per_string(spec.target_epsilon)
        model = "per-string"
    if multiplier == 1.0:
        total = strings * per_string
    else:
        total = math.ceil(strings * per_string * multiplier)
    return ShotPlan(
        pauli_strings=strings,
        shots_per_string=per_string,
        mitigation_multiplier=multiplier,
        total_shots=total,
        model=model,
    )


def _as_positive_int(value: object, record: str, fieldname: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise WorkloadError(f"{record}: field '{fieldname}' must be a positive integer, got {value!r}")
    return value


def _as_number(value: object, record: str, fieldname: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(float(value)):
        raise WorkloadError(f"{record}: field '{fieldname}' must be a finite number, got {value!r}")
    return float(value)


def _parse_one(raw: object, index: int, strict: bool, warnings: list[str]) -> WorkloadSpec:
    record = f"workload #{index}"
    if not isinstance(raw, dict):
        raise WorkloadError(f"{record}: expected a JSON object, got {type(raw).__name__}")
    known = {
        "id",
        "family",
        "data_qubits",
        "depth",
        "qaoa_layers",
        "target_epsilon",
        "ansatz_iterations",
        "classical_prep_time",
        "pauli_grouping",
        "mitigation",
        "c_vqe_override",
    }
    unknown = sorted(set(raw) - known)
    for key in unknown:
        if strict:
            raise WorkloadError(f"{record}: unknown field '{key}'")
        warnings.append(f"{record}: ignoring unknown field '{key}'")

    family_raw = raw.get("family")
    try:
        family = AlgorithmFamily(family_raw)
    except ValueError:
        raise WorkloadError(
            f"{record}: field 'family' must be one of {[f.value for f in AlgorithmFamily]}, got {family_raw!r}"
        ) from None

    data_qubits = _as_positive_int(raw.get("data_qubits"), record, "data_qubits")
    depth = _as_positive_int(raw.get("depth"), record, "depth")

    layers = raw.get("qaoa_layers")
    if family is AlgorithmFamily.QAOA:
        layers = _as_positive_int(layers, record, "qaoa_layers")
    elif layers is not None:
        raise WorkloadError(f"{record}: field 'qaoa_layers' is only valid for the qaoa family")

    epsilon = _as_number(raw.get("target_epsilon"), record, "target_epsilon")
    if not 0.0 < epsilon <= 1.0:
        raise WorkloadError(f"{record}: field 'target_epsilon' must be in (0, 1], got {epsilon}")

    iterations = _as_positive_int(raw.get("ansatz_iterations"), record, "ansatz_iterations")

    prep = 0.0
    if "classical_prep_time" in raw:
        prep = _as_number(raw["classical_prep_time"], record, "classical_prep_time")
        if prep < 0.0:
            raise WorkloadError(f"{record}: field 'classical_prep_time' must be >= 0, got {prep}")

    grouping = PauliGrouping.NONE
    if "pauli_grouping" in raw:
        try:
            grouping = PauliGrouping(raw["pauli_grouping"])
        except ValueError:
            raise WorkloadError(
                f"{record}: field 'pauli_grouping' must be one of {[g.value for g in PauliGrouping]},"
                f" got {raw['pauli_grouping']!r}"
            ) from None

    mitigation = MitigationSpec()
    if "mitigation" in raw:
        mraw = raw["mitigation"]
        if not isinstance(mraw, dict):
            raise WorkloadError(f"{record}: field 'mitigation' must be an object")
        munknown = sorted(set(mraw) - {"enabled", "exponent_coefficient"})
        for key in munknown:
            if strict:
                raise WorkloadError(f"{record}: unknown mitigation field '{key}'")
            warnings.append(f"{record}: ignoring unknown mitigation field '{key}'")
        enabled = mraw.get("enabled", False)
        if not isinstance(enabled, bool):
            raise WorkloadError(f"{record}: field 'mitigation.enabled' must be a boolean, got {enabled!r}")
        coeff = 1.0
        if "exponent_coefficient" in mraw:
            coeff = _as_number(mraw["exponent_coefficient"], record, "mitigation.exponent_coefficient")
            if coeff < 0.0:
                raise WorkloadError(f"{record}: field 'mitigation.exponent_coefficient' must be >= 0, got {coeff}")
        mitigation = MitigationSpec(enabled=enabled, exponent_coefficient=coeff)

    override = None
    if raw.get("c_vqe_override") is not None:
        override = _as_number(raw["c_vqe_override"], record, "c_vqe_override")
        if override <= 0.0:
            raise WorkloadError(f"{record}: field 'c_vqe_override' must be > 0, got {override}")

    workload_id = raw.get("id")
    if workload_id is None:
        workload_id = f"{family.value}-{data_qubits}q-d{depth}"
    elif not isinstance(workload_id, str) or not workload_id:
        raise WorkloadError(f"{record}: field 'id' must be a non-empty string, got {workload_id!r}")

    return WorkloadSpec(
        id=workload_id,
        family=family,
        data_qubits=data_qubits,
        depth=depth,
        target_epsilon=epsilon,
        ansatz_iterations=iterations,
        classical_prep_time=prep,
        qaoa_layers=layers,
        pauli_grouping=grouping,
        mitigation=mitigation,
        c_vqe_override=override,
    )


def parse_workloads(document: str, *, strict: bool = True) -> tuple[WorkloadSpec, ...]:
    """Parse a workload document (single object or list of objects)."""
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise WorkloadError(f"workload document: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
    warnings: list[str] = []
    if isinstance(raw, dict):
        items: list[object] = [raw]
    elif isinstance(raw, list):
        items = raw
    else:
        raise WorkloadError(f"workload document must be an object or a list, got {type(raw).__name__}")
    if not items:
        raise WorkloadError("no workloads: the workload document is an empty list")
    return tuple(_parse_one(item, i, strict, warnings) for i, item in enumerate(items))
