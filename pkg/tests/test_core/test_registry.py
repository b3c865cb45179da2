"""Tests for the step registry"""

from fractions import Fraction

import pytest

from src.morley.registry import (
    CheckKind,
    DerivationStep,
    StepRegistry,
    StepResult,
    StepStatus,
)
from src.morley.steps import STEP_MIN_DEGREE, default_registry


def _noop(ctx, ev):
    ev.check("noop", True)


def _step(step_id, depends_on=(), min_degree=0):
    return DerivationStep(
        step_id, f"claim {step_id}", CheckKind.POLY_IDENTITY, "anchor", _noop, tuple(depends_on), min_degree
    )


@pytest.fixture
def registry():
    """Small registry: A <- B <- C, D independent"""
    reg = StepRegistry()
    reg.register(_step("A"))
    reg.register(_step("B", ["A"], min_degree=6))
    reg.register(_step("C", ["B"]))
    reg.register(_step("D", min_degree=4))
    return reg


class TestStepRegistry:
    """Test registration and ordering"""

    def test_register_duplicate(self, registry):
        """Test a duplicate id is refused"""
        with pytest.raises(ValueError):
            registry.register(_step("A"))

    def test_get_unknown(self, registry):
        """Test lookup of a missing id"""
        with pytest.raises(KeyError):
            registry.get("Z")
        assert "A" in registry
        assert len(registry) == 4

    def test_resolve_all(self, registry):
        """Test the full order keeps registration order where free"""
        ok, order, errors = registry.resolve_order()
        assert ok and errors == []
        assert order == ["A", "B", "C", "D"]

    def test_resolve_selection_orders_dependencies(self, registry):
        """Test dependencies inside the selection come first"""
        ok, order, _ = registry.resolve_order(["C", "A", "B"])
        assert ok
        assert order == ["A", "B", "C"]

    def test_dependencies_outside_selection_ignored(self, registry):
        """Test a lone step runs without its dependencies"""
        ok, order, _ = registry.resolve_order(["C"])
        assert ok and order == ["C"]

    def test_duplicates_collapsed(self, registry):
        """Test repeated ids appear once"""
        _, order, _ = registry.resolve_order(["D", "D"])
        assert order == ["D"]

    def test_unknown_ids(self, registry):
        """Test every unknown id is reported"""
        ok, order, errors = registry.resolve_order(["A", "X", "Y"])
        assert not ok and order == []
        assert errors == ["Unknown step: X", "Unknown step: Y"]

    def test_cycle(self):
        """Test a dependency cycle is detected"""
        reg = StepRegistry()
        reg.register(_step("A", ["B"]))
        reg.register(_step("B", ["A"]))
        ok, _, errors = reg.resolve_order()
        assert not ok
        assert "Circular dependency" in errors[0]

    def test_empty_selection(self, registry):
        """Test an empty selection is a valid empty order"""
        assert registry.resolve_order([]) == (True, [], [])

    def test_min_degree(self, registry):
        """Test the largest degree of a selection"""
        assert registry.min_degree() == 6
        assert registry.min_degree(["D"]) == 4
        assert registry.min_degree([]) == 0


class TestDefaultRegistry:
    """Test the S01..S37 registry"""

    def test_ids(self):
        """Test thirty-seven steps in order"""
        reg = default_registry()
        assert reg.ids() == [f"S{k:02d}" for k in range(1, 38)]
        assert set(STEP_MIN_DEGREE) == set(reg.ids())

    def test_anchors_and_kinds(self):
        """Test every step carries an anchor quote and a check kind"""
        for step_id in default_registry().ids():
            step = default_registry().get(step_id)
            assert step.anchor
            assert isinstance(step.check, CheckKind)

    def test_dependencies_are_earlier(self):
        """Test the registry order is already a dependency order"""
        reg = default_registry()
        ok, order, _ = reg.resolve_order()
        assert ok
        assert order == reg.ids()
        position = {step_id: k for k, step_id in enumerate(order)}
        for step_id in order:
            for dep in reg.get(step_id).depends_on:
                assert position[dep] < position[step_id]

    def test_degree_eight_covers_everything(self):
        """Test the default truncation degree suffices"""
        assert default_registry().min_degree() == 8
        assert STEP_MIN_DEGREE["S29"] == 0


class TestStepResult:
    """Test result records"""

    def test_constant(self):
        """Test the primary constant lookup"""
        result = StepResult(
            "S04", "claim", StepStatus.VERIFIED,
            constants={"alpha2beta2": Fraction(-1, 4)}, primary_constant="alpha2beta2",
        )
        assert result.constant() == Fraction(-1, 4)

    def test_no_constant(self):
        """Test a step without a constant"""
        with pytest.raises(ValueError):
            StepResult("S08", "claim", StepStatus.VERIFIED).constant()

    def test_to_dict_from_dict(self):
        """Test rationals travel as n/d text"""
        result = StepResult(
            "S21", "quadratic", StepStatus.FAILED, anchor="quote", check="ratfunc-identity",
            witness={"checks": [{"name": "Quad", "ok": False}]},
            constants={"Quad": Fraction(3, 2)}, primary_constant="Quad", millis=12.34567,
        )
        data = result.to_dict()
        assert data["status"] == "failed"
        assert data["constants"] == {"Quad": "3/2"}
        assert data["millis"] == 12.346
        restored = StepResult.from_dict(data)
        assert restored.status == StepStatus.FAILED
        assert restored.constants == {"Quad": Fraction(3, 2)}
        assert not restored.verified
