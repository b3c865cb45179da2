"""Tests for the verification report"""

import json
from fractions import Fraction

import pytest

from src.core.report import (
    EMPTY_SELECTION_WARNING,
    SCHEMA_VERSION,
    Report,
    build_report,
    parse_report,
    render_report,
)
from src.morley.registry import StepResult, StepStatus


def _result(step_id, status=StepStatus.VERIFIED, **kwargs):
    return StepResult(step_id, f"claim {step_id}", status, anchor="quote", check="poly-identity", **kwargs)


@pytest.fixture
def results():
    """Mixed results in execution order"""
    return [
        _result("S10", constants={"S1": Fraction(-1, 2)}, primary_constant="S1", millis=3.5),
        _result("S02", millis=1.25),
        _result(
            "S12",
            StepStatus.FAILED,
            witness={"checks": [{"name": "Eeq7_t3_half", "ok": False, "computed": "(1/1)*t5^1"}]},
        ),
        _result("S13", StepStatus.SKIPPED, witness={"blocked_by": ["S12"]}),
    ]


class TestReport:
    """Test the report model"""

    def test_verdict(self, results):
        """Test one failure fails the run"""
        report = build_report({"degree": 8}, results)
        assert not report.verified
        assert report.verdict == "failed"
        assert report.counts() == {"verified": 2, "failed": 1, "skipped": 1}
        assert report.total_millis == pytest.approx(4.75)

    def test_all_verified(self):
        """Test a clean run"""
        report = build_report({}, [_result("S29")])
        assert report.verdict == "verified"
        assert report.warning is None

    def test_empty_selection(self):
        """Test the vacuous verdict carries a warning"""
        report = build_report({}, [])
        assert report.verified
        assert report.warning == EMPTY_SELECTION_WARNING
        assert report.to_dict()["warning"] == EMPTY_SELECTION_WARNING

    def test_constants_table(self, results):
        """Test constants as n/d text per step"""
        assert build_report({}, results).constants() == {"S10": {"S1": "-1/2"}}


class TestRendering:
    """Test JSON and text output"""

    def test_json_schema(self, results):
        """Test the top-level keys and per-step fields"""
        data = json.loads(render_report(build_report({"degree": 8}, results), "json"))
        assert data["schema"] == SCHEMA_VERSION
        assert data["verdict"] == "failed"
        assert {"config", "steps", "constants", "counts", "total_millis"} <= set(data)
        step = data["steps"][0]
        assert set(step) == {
            "id", "claim", "status", "check", "witness", "anchor", "millis", "constants", "primary_constant"
        }
        assert [s["id"] for s in data["steps"]] == ["S10", "S02", "S12", "S13"]

    def test_round_trip(self, results):
        """Test parse then render reproduces the JSON"""
        text = render_report(build_report({"degree": 8}, results, scan={"cells": 3}), "json")
        again = render_report(parse_report(text), "json")
        assert json.loads(again) == json.loads(text)

    def test_unknown_schema(self):
        """Test a future schema version is refused"""
        with pytest.raises(ValueError):
            Report.from_dict({"schema": SCHEMA_VERSION + 1})

    def test_text_ordering(self, results):
        """Test text output is ordered by step id"""
        text = render_report(build_report({}, results), "text")
        lines = [line for line in text.splitlines() if line[:1] == "S"]
        assert [line.split()[0] for line in lines] == ["S02", "S10", "S12", "S13"]

    def test_text_details(self, results):
        """Test witness, blocked steps, constants and verdict lines"""
        text = render_report(build_report({}, results, scan={"cells": 3, "params": "p", "max_defect": 0.1}), "text")
        assert "witness:" in text
        assert "blocked by: S12" in text
        assert "Derived constants" in text
        assert "Scan: 3 cells" in text
        assert text.rstrip().endswith("(2 verified, 1 failed, 1 skipped)")

    def test_unknown_format(self):
        """Test formats other than json and text"""
        with pytest.raises(ValueError):
            render_report(build_report({}, []), "yaml")
