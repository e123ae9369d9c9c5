"""Hardware catalog: QPU and classical-reference data model, JSON parsing,
validation, and the bundled dataset.

Catalog files are UTF-8 JSON documents::

    {
      "schema_version": 1,
      "qpus": [
        {
          "id": "example-qpu",
          "modality": "superconducting",
          "qubit_count": 72,
          "two_qubit_error_median": 0.006,
          "two_qubit_error_stddev": 0.002,        # optional, omit if unreported
          "two_qubit_gate_time": 1e-7,            # seconds
          "readout_time": 1e-6,                   # seconds
          "reset_time": 1e-6,                     # seconds
          "connectivity": "grid-4",
          "power_components": [
            {"label": "pulse tubes", "unit_power_w": 10000, "count": 9, "per_qubit": false}
          ],
          "status": "available",
          "source_note": "where these numbers come from"
        }
      ],
      "classical_refs": [
        {"id": "dgx-rack", "description": "...", "power_draw": 30000,
         "memory_capacity": 2199023255552, "tier_hint": "hpc"}
      ]
    }

Fidelities are stored as error-rate probabilities, never percentages;
``units.format_fidelity_percent`` converts for display.  Unknown keys are
rejected in strict mode and collected as warnings in lenient mode.  A parsed
``Catalog`` is immutable and safe to share across threads.
"""

from __future__ import annotations

import enum
import functools
import json
import math
import re
from dataclasses import dataclass, field
from importlib import resources

SCHEMA_VERSION = 1

_CONNECTIVITY_CLASSES = ("all-to-all", "grid-4", "heavy-hex", "linear")
_CLUSTER_RE = re.compile(r"^cluster-[1-9][0-9]*$")

# Must mirror the EmulationTier labels in feasibility (kept as plain strings
# here to avoid a circular import).
_TIER_LABELS = (
    "laptop",
    "server",
    "cluster",
    "hpc",
    "tensor-network",
    "beyond-classical",
)


class CatalogError(ValueError):
    """Base class for catalog parsing and validation failures."""


class CatalogSyntaxError(CatalogError):
    """Malformed JSON; carries the reported position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class CatalogValidationError(CatalogError):
    """A record violated an invariant; message names the record and field."""


class Modality(str, enum.Enum):
    SUPERCONDUCTING = "superconducting"
    TRAPPED_ION = "trapped-ion"
    NEUTRAL_ATOM = "neutral-atom"
    PHOTONIC = "photonic"
    SPIN = "spin"
    OTHER = "other"


class QpuStatus(str, enum.Enum):
    AVAILABLE = "available"
    ANNOUNCED = "announced"
    PROJECTED = "projected"


@dataclass(frozen=True)
class PowerComponent:
    """One contributor to a QPU's steady-state power draw.

    ``per_qubit=True`` means the effective count is the QPU's qubit count.
    """

    label: str
    unit_power_w: float
    count: int = 1
    per_qubit: bool = False


@dataclass(frozen=True)
class QpuSpec:
    """One hardware platform, as transcribed from public figures."""

    id: str
    modality: Modality
    qubit_count: int
    two_qubit_error_median: float
    two_qubit_gate_time: float
    readout_time: float
    reset_time: float
    connectivity: str
    status: QpuStatus
    source_note: str
    two_qubit_error_stddev: float | None = None
    power_components: tuple[PowerComponent, ...] = ()


@dataclass(frozen=True)
class ClassicalRefSpec:
    """A classical machine used as the comparison side of estimates."""

    id: str
    description: str
    power_draw: float
    memory_capacity: int
    tier_hint: str | None = None


@dataclass(frozen=True)
class Catalog:
    qpus: tuple[QpuSpec, ...]
    classical_refs: tuple[ClassicalRefSpec, ...] = ()
    schema_version: int = SCHEMA_VERSION
    # Lenient-mode warnings; not part of structural equality or serialization.
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def get_qpu(self, qpu_id: str) -> QpuSpec:
        for qpu in self.qpus:
            if qpu.id == qpu_id:
                return qpu
        known = ", ".join(q.id for q in self.qpus)
        raise CatalogError(f"unknown qpu id {qpu_id!r} (catalog has: {known})")

    def get_classical_ref(self, ref_id: str) -> ClassicalRefSpec:
        for ref in self.classical_refs:
            if ref.id == ref_id:
                return ref
        known = ", ".join(r.id for r in self.classical_refs)
        raise CatalogError(f"unknown classical ref id {ref_id!r} (catalog has: {known})")


def _require(condition: bool, record: str, message: str) -> None:
    if not condition:
        raise CatalogValidationError(f"{record}: {message}")


def _finite_number(value: object, record: str, fieldname: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CatalogValidationError(f"{record}: field '{fieldname}' must be a number, got {value!r}")
    result = float(value)
    _require(math.isfinite(result), record, f"field '{fieldname}' must be finite, got {value!r}")
    return result


def _positive_int(value: object, record: str, fieldname: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CatalogValidationError(f"{record}: field '{fieldname}' must be an integer, got {value!r}")
    _require(value >= minimum, record, f"field '{fieldname}' must be >= {minimum}, got {value}")
    return value


def _string(value: object, record: str, fieldname: str) -> str:
    if not isinstance(value, str):
        raise CatalogValidationError(f"{record}: field '{fieldname}' must be a string, got {value!r}")
    return value


class _Fields:
    """Tracks which keys of a record were consumed, for unknown-key checks."""

    def __init__(self, raw: object, record: str, warnings: list[str], strict: bool):
        if not isinstance(raw, dict):
            raise CatalogValidationError(f"{record}: expected a JSON object, got {type(raw).__name__}")
        self.raw = raw
        self.record = record
        self.warnings = warnings
        self.strict = strict
        self.seen: set[str] = set()

    def take(self, key: str, required: bool = True):
        self.seen.add(key)
        if key not in self.raw:
            if required:
                raise CatalogValidationError(f"{self.record}: missing required field '{key}'")
            return None
        return self.raw[key]

    def finish(self) -> None:
        unknown = sorted(set(self.raw) - self.seen)
        for key in unknown:
            if self.strict:
                raise CatalogValidationError(f"{self.record}: unknown field '{key}'")
            self.warnings.append(f"{self.record}: ignoring unknown field '{key}'")


def _parse_power_component(raw: object, record: str, warnings: list[str], strict: bool) -> PowerComponent:
    fields = _Fields(raw, record, warnings, strict)
    label = _string(fields.take("label"), record, "label")
    unit_power = _finite_number(fields.take("unit_power_w"), record, "unit_power_w")
    _require(unit_power >= 0.0, record, f"field 'unit_power_w' must be >= 0, got {unit_power}")
    count_raw = fields.take("count", required=False)
    count = 1 if count_raw is None else _positive_int(count_raw, record, "count", minimum=0)
    per_qubit_raw = fields.take("per_qubit", required=False)
    per_qubit = False if per_qubit_raw is None else per_qubit_raw
    if not isinstance(per_qubit, bool):
        raise CatalogValidationError(f"{record}: field 'per_qubit' must be a boolean, got {per_qubit!r}")
    fields.finish()
    return PowerComponent(label=label, unit_power_w=unit_power, count=count, per_qubit=per_qubit)


def _parse_qpu(raw: object, warnings: list[str], strict: bool) -> QpuSpec:
    preliminary = raw.get("id", "<missing id>") if isinstance(raw, dict) else "<qpu>"
    record = f"qpu '{preliminary}'"
    fields = _Fields(raw, record, warnings, strict)

    qpu_id = _string(fields.take("id"), record, "id")
    _require(bool(qpu_id), record, "field 'id' must be non-empty")

    modality_raw = _string(fields.take("modality"), record, "modality")
    try:
        modality = Modality(modality_raw)
    except ValueError:
        raise CatalogValidationError(
            f"{record}: field 'modality' must be one of {[m.value for m in Modality]}, got {modality_raw!r}"
        ) from None

    qubit_count = _positive_int(fields.take("qubit_count"), record, "qubit_count")

    error_median = _finite_number(fields.take("two_qubit_error_median"), record, "two_qubit_error_median")
    _require(
        0.0 < error_median < 1.0,
        record,
        f"field 'two_qubit_error_median' must be in (0, 1), got {error_median}",
    )

    stddev_raw = fields.take("two_qubit_error_stddev", required=False)
    stddev = None
    if stddev_raw is not None:
        stddev = _finite_number(stddev_raw, record, "two_qubit_error_stddev")
        _require(stddev >= 0.0, record, f"field 'two_qubit_error_stddev' must be >= 0, got {stddev}")

    gate_time = _finite_number(fields.take("two_qubit_gate_time"), record, "two_qubit_gate_time")
    _require(gate_time > 0.0, record, f"field 'two_qubit_gate_time' must be > 0, got {gate_time}")
    readout_time = _finite_number(fields.take("readout_time"), record, "readout_time")
    _require(readout_time >= 0.0, record, f"field 'readout_time' must be >= 0, got {readout_time}")
    reset_time = _finite_number(fields.take("reset_time"), record, "reset_time")
    _require(reset_time >= 0.0, record, f"field 'reset_time' must be >= 0, got {reset_time}")

    connectivity = _string(fields.take("connectivity"), record, "connectivity")
    _require(
        connectivity in _CONNECTIVITY_CLASSES or bool(_CLUSTER_RE.match(connectivity)),
        record,
        f"field 'connectivity' must be one of {list(_CONNECTIVITY_CLASSES)} or 'cluster-<k>', got {connectivity!r}",
    )

    components_raw = fields.take("power_components", required=False)
    components: tuple[PowerComponent, ...] = ()
    if components_raw is not None:
        if not isinstance(components_raw, list):
            raise CatalogValidationError(f"{record}: field 'power_components' must be a list")
        components = tuple(
            _parse_power_component(item, f"{record} power component #{i}", warnings, strict)
            for i, item in enumerate(components_raw)
        )

    status_raw = _string(fields.take("status"), record, "status")
    try:
        status = QpuStatus(status_raw)
    except ValueError:
        raise CatalogValidationError(
            f"{record}: field 'status' must be one of {[s.value for s in QpuStatus]}, got {status_raw!r}"
        ) from None

    source_note = _string(fields.take("source_note"), record, "source_note")
    fields.finish()

    return QpuSpec(
        id=qpu_id,
        modality=modality,
        qubit_count=qubit_count,
        two_qubit_error_median=error_median,
        two_qubit_error_stddev=stddev,
        two_qubit_gate_time=gate_time,
        readout_time=readout_time,
        reset_time=reset_time,
        connectivity=connectivity,
        power_components=components,
        status=status,
        source_note=source_note,
    )


def _parse_classical_ref(raw: object, warnings: list[str], strict: bool) -> ClassicalRefSpec:
    preliminary = raw.get("id", "<missing id>") if isinstance(raw, dict) else "<classical ref>"
    record = f"classical ref '{preliminary}'"
    fields = _Fields(raw, record, warnings, strict)

    ref_id = _string(fields.take("id"), record, "id")
    _require(bool(ref_id), record, "field 'id' must be non-empty")
    description = _string(fields.take("description"), record, "description")
    power = _finite_number(fields.take("power_draw"), record, "power_draw")
    _require(power > 0.0, record, f"field 'power_draw' must be > 0, got {power}")
    memory_raw = fields.take("memory_capacity")
    memory = _positive_int(memory_raw, record, "memory_capacity")
    tier_raw = fields.take("tier_hint", required=False)
    tier = None
    if tier_raw is not None:
        tier = _string(tier_raw, record, "tier_hint")
        _require(tier in _TIER_LABELS, record, f"field 'tier_hint' must be one of {list(_TIER_LABELS)}, got {tier!r}")
    fields.finish()
    return ClassicalRefSpec(id=ref_id, description=description, power_draw=power, memory_capacity=memory, tier_hint=tier)


def parse_catalog(document: str, *, strict: bool = True) -> Catalog:
    """Parse and validate a catalog document.

    Strict mode (default) rejects unknown fields; lenient mode collects them
    into ``Catalog.warnings``.  Raises :class:`CatalogSyntaxError` on
    malformed JSON and :class:`CatalogValidationError` on invariant
    violations, naming the offending record and field.
    """
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise CatalogSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    warnings: list[str] = []
    fields = _Fields(raw, "catalog", warnings, strict)
    version = fields.take("schema_version")
    if isinstance(version, bool) or not isinstance(version, int):
        raise CatalogValidationError(f"catalog: field 'schema_version' must be an integer, got {version!r}")
    _require(version == SCHEMA_VERSION, "catalog", f"unsupported schema_version {version} (expected {SCHEMA_VERSION})")

    qpus_raw = fields.take("qpus")
    if not isinstance(qpus_raw, list):
        raise CatalogValidationError("catalog: field 'qpus' must be a list")
    qpus = tuple(_parse_qpu(item, warnings, strict) for item in qpus_raw)

    refs_raw = fields.take("classical_refs", required=False)
    refs: tuple[ClassicalRefSpec, ...] = ()
    if refs_raw is not None:
        if not isinstance(refs_raw, list):
            raise CatalogValidationError("catalog: field 'classical_refs' must be a list")
        refs = tuple(_parse_classical_ref(item, warnings, strict) for item in refs_raw)
    fields.finish()

    for label, ids in (("qpus", [q.id for q in qpus]), ("classical_refs", [r.id for r in refs])):
        seen: set[str] = set()
        for entry_id in ids:
            _require(entry_id not in seen, "catalog", f"duplicate id {entry_id!r} in {label}")
            seen.add(entry_id)

    return Catalog(qpus=qpus, classical_refs=refs, schema_version=version, warnings=tuple(warnings))


def _qpu_to_dict(qpu: QpuSpec) -> dict:
    out: dict = {
        "id": qpu.id,
        "modality": qpu.modality.value,
        "qubit_count": qpu.qubit_count,
        "two_qubit_error_median": qpu.two_qubit_error_median,
    }
    if qpu.two_qubit_error_stddev is not None:
        out["two_qubit_error_stddev"] = qpu.two_qubit_error_stddev
    out.update(
        {
            "two_qubit_gate_time": qpu.two_qubit_gate_time,
            "readout_time": qpu.readout_time,
            "reset_time": qpu.reset_time,
            "connectivity": qpu.connectivity,
            "power_components": [
                {
                    "label": c.label,
                    "unit_power_w": c.unit_power_w,
                    "count": c.count,
                    "per_qubit": c.per_qubit,
                }
                for c in qpu.power_components
            ],
            "status": qpu.status.value,
            "source_note": qpu.source_note,
        }
    )
    return out


def _classical_ref_to_dict(ref: ClassicalRefSpec) -> dict:
    out: dict = {
        "id": ref.id,
        "description": ref.description,
        "power_draw": ref.power_draw,
        "memory_capacity": ref.memory_capacity,
    }
    if ref.tier_hint is not None:
        out["tier_hint"] = ref.tier_hint
    return out


def serialize_catalog(catalog: Catalog) -> str:
    """Serialize to the same JSON document format ``parse_catalog`` accepts.

    Round-trip stable: the result re-parses to a structurally equal Catalog.
    """
    doc = {
        "schema_version": catalog.schema_version,
        "qpus": [_qpu_to_dict(q) for q in catalog.qpus],
        "classical_refs": [_classical_ref_to_dict(r) for r in catalog.classical_refs],
    }
    return json.dumps(doc, indent=2) + "\n"


@functools.lru_cache(maxsize=1)
def bundled_catalog() -> Catalog:
    """The compiled-in hardware dataset (validated at load time)."""
    text = resources.files(__package__).joinpath("data/catalog.json").read_text(encoding="utf-8")
    return parse_catalog(text, strict=True)
