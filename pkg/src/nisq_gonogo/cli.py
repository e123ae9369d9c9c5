"""Command-line front end.

    nisq-gonogo feasibility --workload jobs.json [--catalog hw.json]
    nisq-gonogo estimate    --workload jobs.json --qpu ibm-heron
    nisq-gonogo scatter     --out landscape.svg
    nisq-gonogo compare     --workload job.json --qpu ibm-flamingo --classical ref.json
    nisq-gonogo catalog

Reports are deterministic: identical inputs and flags produce byte-identical
text and CSV (the SVG can differ only in its version comment line).  Exit
codes: 0 success (feasibility: at least one go), 2 feasibility ran but no
pair reached go, 1 input or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import advantage as adv
from . import energy as energy_mod
from . import feasibility as feas
from . import runtime as runtime_mod
from . import workload as workload_mod
from .catalog import Catalog, QpuSpec, bundled_catalog, parse_catalog
from .scatter import scatter_csv, scatter_svg
from .units import (
    format_bytes,
    format_fidelity_percent,
    format_joules,
    format_seconds,
    format_watts,
    sci,
)

ENV_CATALOG = "NISQ_GONOGO_CATALOG"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_GO = 2


@dataclass(frozen=True)
class VerdictRow:
    qpu_id: str
    workload_id: str
    verdict: feas.FeasibilityVerdict | None
    note: str = ""

    @property
    def verdict_label(self) -> str:
        if self.verdict is None:
            return "no-go (capacity)"
        return self.verdict.verdict.value


@dataclass(frozen=True)
class ResourceRecord:
    qpu_id: str
    workload_id: str
    plan: workload_mod.ShotPlan
    runtime: runtime_mod.RuntimeEstimate
    energy: energy_mod.EnergyEstimate


@dataclass(frozen=True)
class ReportBundle:
    verdicts: tuple[VerdictRow, ...] = ()
    estimates: tuple[ResourceRecord, ...] = ()
    advantage: adv.AdvantageReport | None = None
    emitted_files: tuple[str, ...] = ()


def load_catalog(path: str | None, *, strict: bool) -> Catalog:
    """Load a catalog from --catalog, $NISQ_GONOGO_CATALOG, or the bundle."""
    if path is None:
        path = os.environ.get(ENV_CATALOG)
    if path is None:
        return bundled_catalog()
    return parse_catalog(Path(path).read_text(encoding="utf-8"), strict=strict)


def load_workloads(path: str, *, strict: bool) -> tuple[workload_mod.WorkloadSpec, ...]:
    return workload_mod.parse_workloads(Path(path).read_text(encoding="utf-8"), strict=strict)


def _verdict_sort_key(row: VerdictRow):
    order = {feas.Verdict.GO: 0, feas.Verdict.MARGINAL: 1, feas.Verdict.NO_GO: 2}
    if row.verdict is None:
        return (3, math.inf, row.qpu_id, row.workload_id)
    return (order[row.verdict.verdict], row.verdict.required_error_rate, row.qpu_id, row.workload_id)


def build_feasibility_bundle(
    catalog: Catalog,
    workloads: tuple[workload_mod.WorkloadSpec, ...],
    *,
    marginal_band: float = 10.0,
) -> ReportBundle:
    rows = []
    for spec in workloads:
        shape = spec.shape
        for qpu in catalog.qpus:
            try:
                verdict = feas.assess(qpu, shape, marginal_band=marginal_band)
            except feas.CapacityError:
                rows.append(
                    VerdictRow(
                        qpu_id=qpu.id,
                        workload_id=spec.id,
                        verdict=None,
                        note=f"insufficient qubits: needs {shape.breadth}, has {qpu.qubit_count}",
                    )
                )
                continue
            notes = []
            if qpu.status.value != "available":
                notes.append(f"{qpu.status.value} hardware")
            if verdict.optimistic:
                notes.append("optimistic: error-rate spread unreported")
            rows.append(VerdictRow(qpu_id=qpu.id, workload_id=spec.id, verdict=verdict, note="; ".join(notes)))
    rows.sort(key=_verdict_sort_key)
    return ReportBundle(verdicts=tuple(rows))


def render_feasibility_md(bundle: ReportBundle) -> str:
    lines = ["# Feasibility report", ""]
    lines.append(
        "| verdict | qpu | workload | required error rate | available error rate (fidelity) | success probability | note |"
    )
    lines.append("|---|---|---|---|---|---|---|")
    for row in bundle.verdicts:
        if row.verdict is None:
            lines.append(f"| {row.verdict_label} | {row.qpu_id} | {row.workload_id} | - | - | - | {row.note} |")
            continue
        v = row.verdict
        lines.append(
            f"| {v.verdict.value} | {row.qpu_id} | {row.workload_id} "
            f"| {sci(v.required_error_rate)} "
            f"| {sci(v.available_error_rate)} ({format_fidelity_percent(v.available_error_rate, 2)}) "
            f"| {sci(v.success_probability)} | {row.note} |"
        )
    go = sum(1 for r in bundle.verdicts if r.verdict is not None and r.verdict.verdict is feas.Verdict.GO)
    lines.append("")
    lines.append(f"{go} of {len(bundle.verdicts)} (qpu, workload) pairs reach go.")
    return "\n".join(lines) + "\n"


def render_feasibility_csv(bundle: ReportBundle) -> str:
    import csv as _csv
    import io as _io

    out = _io.StringIO()
    writer = _csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "verdict",
            "qpu_id",
            "workload_id",
            "required_error_rate",
            "available_error_rate",
            "success_probability",
            "optimistic",
            "note",
        ]
    )
    for row in bundle.verdicts:
        if row.verdict is None:
            writer.writerow([row.verdict_label, row.qpu_id, row.workload_id, "", "", "", "", row.note])
        else:
            v = row.verdict
            writer.writerow(
                [
                    v.verdict.value,
                    row.qpu_id,
                    row.workload_id,
                    str(v.required_error_rate),
                    str(v.available_error_rate),
                    str(v.success_probability),
                    str(v.optimistic).lower(),
                    row.note,
                ]
            )
    return out.getvalue()


def _describe_qpu(qpu: QpuSpec) -> str:
    return (
        f"{qpu.id} ({qpu.modality.value}, {qpu.qubit_count} qubits, "
        f"two-qubit error {qpu.two_qubit_error_median} = fidelity "
        f"{format_fidelity_percent(qpu.two_qubit_error_median, 2)}, {qpu.status.value})"
    )


def build_estimate_record(
    qpu: QpuSpec,
    spec: workload_mod.WorkloadSpec,
    *,
    parallel_shots: int = 1,
    qaoa_aggregate: bool = False,
) -> ResourceRecord:
    plan = workload_mod.shot_plan(spec, qpu.two_qubit_error_median, qaoa_aggregate=qaoa_aggregate)
    rt = runtime_mod.estimate_runtime(qpu, spec, plan, parallel_shots=parallel_shots)
    en = energy_mod.estimate_energy(qpu, rt)
    return ResourceRecord(qpu_id=qpu.id, workload_id=spec.id, plan=plan, runtime=rt, energy=en)


def render_estimate_md(record: ResourceRecord, qpu: QpuSpec, spec: workload_mod.WorkloadSpec) -> str:
    plan, rt, en = record.plan, record.runtime, record.energy
    lines = [f"# Resource estimate: {spec.id} on {qpu.id}", ""]
    lines.append(
        f"workload: {spec.family.value}, {spec.data_qubits} data qubits, depth {spec.depth} cycles, "
        f"target epsilon {spec.target_epsilon}, {spec.ansatz_iterations} iterations"
    )
    lines.append(f"qpu: {_describe_qpu(qpu)}")
    try:
        verdict = feas.assess(qpu, spec.shape)
        lines.append(
            f"feasibility: {verdict.verdict.value} "
            f"(required error rate {sci(verdict.required_error_rate)}, available {sci(verdict.available_error_rate)})"
        )
    except feas.CapacityError as exc:
        lines.append(f"feasibility: no-go ({exc})")
    lines.append("")
    lines.append(f"shot plan ({plan.model} accounting):")
    lines.append(f"- measurement strings: {plan.pauli_strings} strings")
    lines.append(f"- shots per string: {plan.shots_per_string} shots")
    lines.append(f"- mitigation multiplier: {sci(plan.mitigation_multiplier)} x")
    lines.append(f"- total shots per iteration: {plan.total_shots} shots ({sci(plan.total_shots)})")
    lines.append("")
    lines.append("runtime:")
    lines.append(f"- single shot: {format_seconds(rt.single_shot_time)}")
    lines.append(f"- quantum per iteration: {format_seconds(rt.quantum_time_per_iteration)}")
    lines.append(f"- classical per iteration: {format_seconds(spec.classical_prep_time)}")
    lines.append(f"- iteration: {format_seconds(rt.iteration_time)}")
    lines.append(f"- total: {format_seconds(rt.total_time)}")
    for label, seconds in rt.breakdown:
        lines.append(f"  - {label}: {format_seconds(seconds)}")
    lines.append("")
    lines.append("energy:")
    lines.append(f"- power draw: {format_watts(en.power_draw)}")
    for label, watts in en.breakdown:
        lines.append(f"  - {label}: {format_watts(watts)}")
    lines.append(f"- job energy: {format_joules(en.job_energy)}")
    if en.power_draw == 0.0 and not en.breakdown:
        lines.append("  (no power data reported for this qpu)")
    return "\n".join(lines) + "\n"


def _read_classical_profile(path: str, catalog: Catalog, *, strict: bool) -> tuple[adv.SolutionProfile, list[str]]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"classical profile: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
    if not isinstance(raw, dict):
        raise ValueError("classical profile must be a JSON object")
    known = {"runtime_s", "energy_j", "cost", "quality", "memory_bytes", "classical_ref"}
    notes: list[str] = []
    for key in sorted(set(raw) - known):
        if strict:
            raise ValueError(f"classical profile: unknown field '{key}'")
        notes.append(f"classical profile: ignoring unknown field '{key}'")

    runtime_s = raw.get("runtime_s")
    if not isinstance(runtime_s, (int, float)) or isinstance(runtime_s, bool):
        raise ValueError("classical profile: field 'runtime_s' (seconds) is required and must be a number")

    ref = None
    if raw.get("classical_ref") is not None:
        ref = catalog.get_classical_ref(raw["classical_ref"])

    def _opt_number(key: str) -> float | None:
        value = raw.get(key)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"classical profile: field '{key}' must be a number")
        return float(value)

    energy_j = _opt_number("energy_j")
    if energy_j is None and ref is not None:
        energy_j = ref.power_draw * float(runtime_s)
        notes.append(f"classical energy derived from '{ref.id}' power draw x runtime")

    memory = raw.get("memory_bytes")
    if memory is not None:
        if isinstance(memory, bool) or not isinstance(memory, (int, float)) or memory != int(memory):
            raise ValueError("classical profile: field 'memory_bytes' must be an integer byte count")
        memory = int(memory)
    elif ref is not None:
        memory = ref.memory_capacity
        notes.append(f"classical memory capacity taken from '{ref.id}'")

    profile = adv.SolutionProfile(
        runtime_s=float(runtime_s),
        energy_j=energy_j,
        cost=_opt_number("cost"),
        quality=_opt_number("quality"),
        memory_bytes=memory,
    )
    return profile, notes


def render_advantage_md(report: adv.AdvantageReport, extra_notes: list[str]) -> str:
    lines = ["# Advantage comparison (quantum vs classical)", ""]
    lines.append("| axis | outcome |")
    lines.append("|---|---|")
    for axis, outcome in report.axes().items():
        lines.append(f"| {axis} | {outcome.value} |")
    notes = list(report.notes) + extra_notes
    if notes:
        lines.append("")
        for note in notes:
            lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_catalog_md(catalog: Catalog) -> str:
    lines = ["# Hardware catalog", ""]
    lines.append("| qpu | modality | qubits | two-qubit error (fidelity) | status | power |")
    lines.append("|---|---|---|---|---|---|")
    for qpu in catalog.qpus:
        power = energy_mod.power_draw(qpu)
        power_text = format_watts(power) if power > 0 else "unreported"
        lines.append(
            f"| {qpu.id} | {qpu.modality.value} | {qpu.qubit_count} "
            f"| {qpu.two_qubit_error_median} ({format_fidelity_percent(qpu.two_qubit_error_median, 2)}) "
            f"| {qpu.status.value} | {power_text} |"
        )
    lines.append("")
    lines.append("| classical ref | description | power | memory |")
    lines.append("|---|---|---|---|")
    for ref in catalog.classical_refs:
        lines.append(
            f"| {ref.id} | {ref.description} | {format_watts(ref.power_draw)} "
            f"| {format_bytes(ref.memory_capacity)} |"
        )
    lines.append("")
    lines.append(f"{len(catalog.qpus)} qpus, {len(catalog.classical_refs)} classical refs.")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path is not None:
        Path(out_path).write_text(text, encoding="utf-8")


def cmd_feasibility(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog, strict=args.strict)
    workloads = load_workloads(args.workload, strict=args.strict)
    bundle = build_feasibility_bundle(catalog, workloads, marginal_band=args.marginal_band)
    if args.format == "csv":
        _emit(render_feasibility_csv(bundle), args.out)
    else:
        _emit(render_feasibility_md(bundle), args.out)
    any_go = any(r.verdict is not None and r.verdict.verdict is feas.Verdict.GO for r in bundle.verdicts)
    return EXIT_OK if any_go else EXIT_NO_GO


def cmd_estimate(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog, strict=args.strict)
    workloads = load_workloads(args.workload, strict=args.strict)
    qpu = catalog.get_qpu(args.qpu)
    sections = []
    for spec in workloads:
        record = build_estimate_record(
            qpu, spec, parallel_shots=args.parallel_shots, qaoa_aggregate=args.qaoa_aggregate
        )
        sections.append(render_estimate_md(record, qpu, spec))
    _emit("\n".join(sections), args.out)
    return EXIT_OK


def cmd_scatter(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog, strict=args.strict)
    out = Path(args.out)
    csv_path = out.with_suffix(".csv")
    svg_path = out.with_suffix(".svg")
    csv_path.write_text(scatter_csv(catalog), encoding="utf-8")
    svg_path.write_text(scatter_svg(catalog), encoding="utf-8")
    sys.stdout.write(f"wrote {csv_path}\nwrote {svg_path}\n")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog, strict=args.strict)
    workloads = load_workloads(args.workload, strict=args.strict)
    if len(workloads) != 1:
        raise ValueError(f"compare expects exactly one workload, got {len(workloads)}")
    spec = workloads[0]
    qpu = catalog.get_qpu(args.qpu)
    record = build_estimate_record(
        qpu, spec, parallel_shots=args.parallel_shots, qaoa_aggregate=args.qaoa_aggregate
    )
    notes: list[str] = []
    quantum_energy: float | None = record.energy.job_energy
    if record.energy.power_draw == 0.0:
        quantum_energy = None
        notes.append(f"power draw unreported for '{qpu.id}'; energetic axis not evaluated")
    quantum = adv.quantum_profile(
        record.runtime.total_time,
        qubits=spec.data_qubits,
        energy_j=quantum_energy,
    )
    classical, profile_notes = _read_classical_profile(args.classical, catalog, strict=args.strict)
    notes.extend(profile_notes)
    report = adv.classify(quantum, classical, parity_band=args.parity_band)
    header = (
        f"quantum side: {spec.id} on {qpu.id}: runtime {format_seconds(record.runtime.total_time)}, "
        f"state space {format_bytes(feas.statevector_memory(spec.data_qubits))} "
        f"({spec.data_qubits} qubits)\n"
        f"classical side: runtime {format_seconds(classical.runtime_s)}"
        + (f", energy {format_joules(classical.energy_j)}" if classical.energy_j is not None else "")
        + (f", memory {format_bytes(classical.memory_bytes)}" if classical.memory_bytes is not None else "")
        + "\n\n"
    )
    _emit(header + render_advantage_md(report, notes), args.out)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog, strict=args.strict)
    text = render_catalog_md(catalog)
    if catalog.warnings:
        text += "".join(f"warning: {w}\n" for w in catalog.warnings)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nisq-gonogo",
        description="Feasibility and resource estimates for noisy gate-model quantum workloads.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, workload: bool = False, qpu: bool = False) -> None:
        p.add_argument("--catalog", metavar="PATH", default=None, help=f"catalog file (default: ${ENV_CATALOG} or the bundled dataset)")
        p.add_argument("--out", metavar="PATH", default=None, help="also write the report to this path")
        p.add_argument("--strict", action="store_true", help="reject unknown input fields instead of warning")
        if workload:
            p.add_argument("--workload", metavar="PATH", required=True, help="workload file (object or list)")
        if qpu:
            p.add_argument("--qpu", metavar="ID", required=True, help="catalog id of the target qpu")

    p_feas = sub.add_parser("feasibility", help="go/no-go verdicts for every (qpu, workload) pair")
    common(p_feas, workload=True)
    p_feas.add_argument("--format", choices=("md", "csv"), default="md")
    p_feas.add_argument(
        "--marginal-band",
        type=float,
        default=10.0,
        metavar="X",
        help="factor above the required error rate still reported as marginal (default 10)",
    )
    p_feas.set_defaults(func=cmd_feasibility)

    p_est = sub.add_parser("estimate", help="shots, runtime, and energy for a workload on one qpu")
    common(p_est, workload=True, qpu=True)
    p_est.add_argument("--format", choices=("md",), default="md")
    p_est.add_argument("--parallel-shots", type=int, default=1, metavar="K", help="shot-parallelism divisor (default 1)")
    p_est.add_argument(
        "--qaoa-aggregate",
        action="store_true",
        help="use the aggregate n^2/eps shot budget for qaoa workloads",
    )
    p_est.set_defaults(func=cmd_estimate)

    p_scat = sub.add_parser("scatter", help="emit the catalog landscape as CSV + SVG")
    common(p_scat)
    p_scat.add_argument("--format", choices=("csv", "svg"), default=None, help="accepted for symmetry; both files are always written")
    p_scat.set_defaults(func=cmd_scatter)
    # --out is required for scatter
    for action in p_scat._actions:
        if action.dest == "out":
            action.required = True

    p_cmp = sub.add_parser("compare", help="five-axis advantage comparison against a classical profile")
    common(p_cmp, workload=True, qpu=True)
    p_cmp.add_argument("--format", choices=("md",), default="md")
    p_cmp.add_argument("--classical", metavar="PATH", required=True, help="classical solution profile (JSON)")
    p_cmp.add_argument("--parity-band", type=float, default=adv.DEFAULT_PARITY_BAND, metavar="FRACTION")
    p_cmp.add_argument("--parallel-shots", type=int, default=1, metavar="K")
    p_cmp.add_argument("--qaoa-aggregate", action="store_true")
    p_cmp.set_defaults(func=cmd_compare)

    p_cat = sub.add_parser("catalog", help="validate and summarize a catalog")
    common(p_cat)
    p_cat.add_argument("--format", choices=("md",), default="md")
    p_cat.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
