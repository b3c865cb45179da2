"""Tests for the derivation pipeline"""

import logging

import pytest

from src.core.config import RunConfig
from src.morley.context import DerivationContext
from src.morley.displays import default_catalog
from src.morley.pipeline import DerivationPipeline, derived_constant, run_pipeline
from src.morley.registry import CheckKind, DerivationStep, StepRegistry, StepStatus


def _passing(ctx, ev):
    ev.check("fine", True)


def _raising(ctx, ev):
    ev.check("partial", False, value=1)
    raise ZeroDivisionError("boom")


def _silent(ctx, ev):
    pass


@pytest.fixture
def registry():
    """X raises, Y depends on X, Z records nothing, W passes"""
    reg = StepRegistry()
    reg.register(DerivationStep("X", "raises", CheckKind.NUMERIC, "a", _raising))
    reg.register(DerivationStep("Y", "after X", CheckKind.NUMERIC, "a", _passing, ("X",)))
    reg.register(DerivationStep("Z", "no checks", CheckKind.NUMERIC, "a", _silent))
    reg.register(DerivationStep("W", "passes", CheckKind.NUMERIC, "a", _passing, ("Z",)))
    return reg


class TestDerivationPipeline:
    """Test ordering, skipping and error capture"""

    def test_exception_becomes_failure(self, registry):
        """Test a raising step is reported, not propagated"""
        (result,) = DerivationPipeline(registry).run(["X"])
        assert result.status == StepStatus.FAILED
        assert result.witness["error"] == "ZeroDivisionError: boom"
        assert result.witness["checks"][0]["name"] == "partial"

    def test_skip_cascade(self, registry):
        """Test dependents of a failed step are skipped"""
        results = {r.id: r for r in DerivationPipeline(registry).run()}
        assert results["Y"].status == StepStatus.SKIPPED
        assert results["Y"].witness == {"blocked_by": ["X"]}
        assert results["Z"].status == StepStatus.FAILED
        assert results["W"].status == StepStatus.SKIPPED

    def test_dependency_outside_selection(self, registry):
        """Test a step runs when its dependency was not selected"""
        (result,) = DerivationPipeline(registry).run(["Y"])
        assert result.verified
        assert result.millis >= 0

    def test_empty_selection(self, registry, caplog):
        """Test an empty selection warns and returns nothing"""
        with caplog.at_level(logging.WARNING, logger="derivation_pipeline"):
            assert DerivationPipeline(registry).run([]) == []
        assert "empty step selection" in caplog.text

    def test_unknown_step(self, registry):
        """Test unknown ids raise"""
        with pytest.raises(ValueError, match="Unknown step: Q"):
            DerivationPipeline(registry).run(["Q"])

    def test_result_fields(self):
        """Test a real step's result carries claim, anchor and check kind"""
        (result,) = DerivationPipeline().run(["S29"])
        assert result.verified
        assert result.check == "exact-trig"
        assert result.anchor == "a very tedious calculation gives"


class TestFaultInjection:
    """Test corrupted displays surface as failures"""

    def test_corrupted_eeq1_fails_s09_and_skips_s18(self):
        """Test a flipped sign in Eeq1 fails S09 and blocks S18"""
        context = DerivationContext(displays=default_catalog().corrupted("Eeq1"))
        results = {r.id: r for r in DerivationPipeline(context=context).run(["S09", "S18"])}
        assert results["S09"].status == StepStatus.FAILED
        assert results["S09"].witness["checks"]
        assert results["S18"].status == StepStatus.SKIPPED

    @pytest.mark.slow
    def test_corrupted_eeq1_fails_s08(self):
        """Test the extracted system no longer matches the display"""
        config = RunConfig(steps="S08", degree=6)
        (result,) = run_pipeline(config, catalog=default_catalog().corrupted("Eeq1"))
        assert result.status == StepStatus.FAILED
        failed = {check["name"]: check for check in result.witness["checks"]}
        assert "Eeq1" in failed
        assert failed["Eeq1"]["difference"] != "0"


class TestRunPipeline:
    """Test configuration-driven runs"""

    def test_subset(self):
        """Test an algebraic subset at degree 0"""
        results = run_pipeline(RunConfig(steps="S21,S29", degree=0))
        assert [r.id for r in results] == ["S21", "S29"]
        assert all(r.verified for r in results)
        assert derived_constant(results, "S21") != 0

    def test_scan_only_runs_nothing(self):
        """Test a scan-only configuration selects no steps"""
        assert run_pipeline(RunConfig(scan=True, degree=0)) == []

    def test_derived_constant_errors(self):
        """Test missing steps and steps without constants"""
        results = run_pipeline(RunConfig(steps="S29", degree=0))
        with pytest.raises(ValueError):
            derived_constant(results, "S29")
        with pytest.raises(KeyError):
            derived_constant(results, "S04")

    @pytest.mark.slow
    def test_alpha2beta2_constant(self):
        """Test S04 alone at degree 4 derives a nonzero constant"""
        (result,) = run_pipeline(RunConfig(steps="S04", degree=4))
        assert result.verified
        assert derived_constant([result], "S04") != 0

    @pytest.mark.slow
    def test_full_run(self):
        """Test every step verifies at the default degree"""
        results = run_pipeline(RunConfig())
        assert len(results) == 37
        assert [r.id for r in results if not r.verified] == []
