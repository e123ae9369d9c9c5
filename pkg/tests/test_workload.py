import json
import math

import pytest
from helpers import make_spec
from hypothesis import given, settings
from hypothesis import strategies as st

from nisq_gonogo.feasibility import CircuitShape
from nisq_gonogo.workload import (
    AlgorithmFamily,
    MitigationSpec,
    PauliGrouping,
    WorkloadError,
    mitigation_multiplier,
    parse_workloads,
    pauli_string_count,
    qaoa_aggregate_shots,
    shot_plan,
    shots_per_string,
)


class TestPauliStringCount:
    def test_quartic_anchor_at_72_qubits(self):
        assert pauli_string_count(make_spec()) == 330_816

    def test_quartic_scaling_at_half_size(self):
        # 36 = 72/2, so the quartic count is exactly 330816/16
        assert pauli_string_count(make_spec(data_qubits=36)) == 330_816 // 16
        assert pauli_string_count(make_spec(data_qubits=36)) == 20_676

    def test_grouped_is_linear(self):
        assert pauli_string_count(make_spec(data_qubits=12, pauli_grouping=PauliGrouping.GROUPED)) == 12

    def test_qaoa_two_per_layer(self):
        spec = make_spec(family=AlgorithmFamily.QAOA, qaoa_layers=1)
        assert pauli_string_count(spec) == 2
        assert pauli_string_count(make_spec(family=AlgorithmFamily.QAOA, qaoa_layers=4)) == 8

    def test_generic_is_linear(self):
        assert pauli_string_count(make_spec(family=AlgorithmFamily.GENERIC, data_qubits=40)) == 40

    def test_qaoa_requires_layers(self):
        with pytest.raises(WorkloadError, match="qaoa_layers"):
            pauli_string_count(make_spec(family=AlgorithmFamily.QAOA))

    def test_coefficient_override(self):
        assert pauli_string_count(make_spec(c_vqe_override=1.0, data_qubits=3)) == 81

    def test_small_registers_never_drop_below_one(self):
        assert pauli_string_count(make_spec(data_qubits=1)) == 1
        assert pauli_string_count(make_spec(data_qubits=2)) == 1

    def test_strictly_increasing_from_three_qubits(self):
        counts = [pauli_string_count(make_spec(data_qubits=n)) for n in range(3, 300)]
        assert all(b > a for a, b in zip(counts, counts[1:]))

    def test_quartic_dominates_linear_from_five_qubits(self):
        for n in range(5, 201):
            quartic = pauli_string_count(make_spec(data_qubits=n))
            grouped = pauli_string_count(make_spec(data_qubits=n, pauli_grouping=PauliGrouping.GROUPED))
            assert quartic >= grouped


class TestShotsPerString:
    def test_chemistry_precision(self):
        assert shots_per_string(1e-3) == 1_000_000

    def test_trivial_epsilons(self):
        assert shots_per_string(1.0) == 1
        assert shots_per_string(0.5) == 4

    def test_out_of_range(self):
        with pytest.raises(WorkloadError):
            shots_per_string(0.0)
        with pytest.raises(WorkloadError):
            shots_per_string(1.5)

    def test_qaoa_aggregate(self):
        assert qaoa_aggregate_shots(0.1, 10) == 1000
        assert qaoa_aggregate_shots(1.0, 900) == 810_000


class TestMitigationMultiplier:
    def test_disabled(self):
        assert mitigation_multiplier(MitigationSpec(enabled=False), 0.5, CircuitShape(100, 100)) == 1.0

    def test_perfect_gates(self):
        assert mitigation_multiplier(MitigationSpec(enabled=True), 0.0, CircuitShape(100, 100)) == 1.0

    def test_exponential_in_expected_errors(self):
        # lambda = 1e-3 * 25 * 20 = 0.5; exp(2 * 0.5) = e
        m = mitigation_multiplier(
            MitigationSpec(enabled=True, exponent_coefficient=2.0), 1e-3, CircuitShape(25, 20)
        )
        assert m == pytest.approx(math.e, rel=1e-12)

    def test_never_below_one(self):
        m = mitigation_multiplier(MitigationSpec(enabled=True, exponent_coefficient=0.0), 0.5, CircuitShape(5, 5))
        assert m == 1.0


class TestShotPlan:
    def test_quartic_chemistry_budget(self):
        plan = shot_plan(make_spec(), error_rate=0.006)
        assert plan.pauli_strings == 330_816
        assert plan.shots_per_string == 1_000_000
        assert plan.mitigation_multiplier == 1.0
        assert plan.total_shots == 330_816_000_000
        assert plan.model == "per-string"

    def test_qaoa_plan(self):
        spec = make_spec(family=AlgorithmFamily.QAOA, qaoa_layers=4, target_epsilon=0.1)
        plan = shot_plan(spec, error_rate=0.001)
        assert plan.total_shots == 8 * 100

    def test_qaoa_aggregate_model(self):
        spec = make_spec(family=AlgorithmFamily.QAOA, qaoa_layers=4, target_epsilon=0.1, data_qubits=30)
        plan = shot_plan(spec, error_rate=0.001, qaoa_aggregate=True)
        assert plan.model == "qaoa-aggregate"
        assert plan.total_shots == 9000
        with pytest.raises(WorkloadError):
            shot_plan(make_spec(), error_rate=0.001, qaoa_aggregate=True)

    def test_mitigation_increases_total(self):
        base = shot_plan(make_spec(), error_rate=0.006)
        boosted = shot_plan(
            make_spec(mitigation=MitigationSpec(enabled=True, exponent_coefficient=0.1)), error_rate=0.006
        )
        assert boosted.total_shots > base.total_shots
        assert boosted.total_shots == math.ceil(base.total_shots * boosted.mitigation_multiplier)


class TestParsing:
    def test_single_object(self):
        specs = parse_workloads(
            json.dumps(
                {
                    "family": "vqe",
                    "data_qubits": 72,
                    "depth": 72,
                    "target_epsilon": 0.001,
                    "ansatz_iterations": 100,
                }
            )
        )
        assert len(specs) == 1
        assert specs[0].id == "vqe-72q-d72"
        assert specs[0].mitigation == MitigationSpec()

    def test_list_of_objects(self):
        doc = json.dumps(
            [
                {"family": "qaoa", "data_qubits": 10, "depth": 8, "qaoa_layers": 2,
                 "target_epsilon": 0.1, "ansatz_iterations": 5},
                {"family": "generic", "data_qubits": 20, "depth": 8,
                 "target_epsilon": 0.1, "ansatz_iterations": 5},
            ]
        )
        specs = parse_workloads(doc)
        assert [s.family for s in specs] == [AlgorithmFamily.QAOA, AlgorithmFamily.GENERIC]

    def test_empty_list_rejected(self):
        with pytest.raises(WorkloadError, match="no workloads"):
            parse_workloads("[]")

    def test_layers_only_for_qaoa(self):
        doc = json.dumps(
            {"family": "vqe", "data_qubits": 4, "depth": 2, "qaoa_layers": 3,
             "target_epsilon": 0.5, "ansatz_iterations": 1}
        )
        with pytest.raises(WorkloadError, match="qaoa_layers"):
            parse_workloads(doc)

    def test_unknown_field_strict(self):
        doc = json.dumps(
            {"family": "vqe", "data_qubits": 4, "depth": 2, "target_epsilon": 0.5,
             "ansatz_iterations": 1, "oops": True}
        )
        with pytest.raises(WorkloadError, match="oops"):
            parse_workloads(doc, strict=True)
        assert parse_workloads(doc, strict=False)[0].data_qubits == 4

    def test_epsilon_range_checked(self):
        doc = json.dumps(
            {"family": "vqe", "data_qubits": 4, "depth": 2, "target_epsilon": 0.0, "ansatz_iterations": 1}
        )
        with pytest.raises(WorkloadError, match="target_epsilon"):
            parse_workloads(doc)


@settings(max_examples=200, deadline=None)
@given(
    eps=st.floats(min_value=1e-4, max_value=1.0, allow_nan=False),
    bump=st.floats(min_value=1e-6, max_value=0.5, allow_nan=False),
)
def test_total_shots_non_increasing_in_epsilon(eps, bump):
    small = shot_plan(make_spec(data_qubits=10, target_epsilon=eps), 0.01)
    larger_eps = min(1.0, eps + bump)
    big = shot_plan(make_spec(data_qubits=10, target_epsilon=larger_eps), 0.01)
    assert big.total_shots <= small.total_shots


@settings(max_examples=200, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=150),
    layers=st.integers(min_value=1, max_value=100),
    coeff=st.floats(min_value=0.0, max_value=3.0, allow_nan=False),
)
def test_total_shots_non_decreasing_in_size_knobs(n, layers, coeff):
    mit = MitigationSpec(enabled=True, exponent_coefficient=coeff)

    vqe = make_spec(data_qubits=n, depth=8, mitigation=mit)
    vqe_bigger = make_spec(data_qubits=n + 1, depth=8, mitigation=mit)
    assert shot_plan(vqe_bigger, 1e-3).total_shots >= shot_plan(vqe, 1e-3).total_shots

    qaoa = make_spec(family=AlgorithmFamily.QAOA, data_qubits=n, depth=8, qaoa_layers=layers, mitigation=mit)
    qaoa_deeper = make_spec(
        family=AlgorithmFamily.QAOA, data_qubits=n, depth=8, qaoa_layers=layers + 1, mitigation=mit
    )
    assert shot_plan(qaoa_deeper, 1e-3).total_shots >= shot_plan(qaoa, 1e-3).total_shots

    stronger = MitigationSpec(enabled=True, exponent_coefficient=coeff + 0.5)
    assert (
        shot_plan(make_spec(data_qubits=n, depth=8, mitigation=stronger), 1e-3).total_shots
        >= shot_plan(vqe, 1e-3).total_shots
    )
