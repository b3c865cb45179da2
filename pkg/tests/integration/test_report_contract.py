"""
Report Contract Tests

These tests validate that rendered JSON reports match a Pydantic description
of the schema, so that consumers of the report can rely on its shape.
"""

import json
import re
from typing import Any, Dict, List, Literal, Optional

import pytest
from pydantic import BaseModel, ConfigDict, field_validator

from src.core.config import RunConfig
from src.core.report import SCHEMA_VERSION, build_report, render_report
from src.morley.context import DerivationContext
from src.morley.pipeline import DerivationPipeline, run_pipeline
from src.oracle.scan import equilateral_scan

RATIONAL = re.compile(r"^-?\d+/\d+$")


class StepSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    claim: str
    status: Literal["verified", "failed", "skipped"]
    check: Literal[
        "numeric", "poly-identity", "series-coeff", "ratfunc-identity",
        "resultant", "sign-certificate", "exact-trig",
    ]
    witness: Dict[str, Any]
    anchor: str
    millis: float
    constants: Dict[str, str]
    primary_constant: Optional[str]

    @field_validator("constants")
    @classmethod
    def rationals(cls, v: Dict[str, str]) -> Dict[str, str]:
        for name, value in v.items():
            if not RATIONAL.match(value):
                raise ValueError(f"{name}: {value!r} is not n/d")
        return v


class ScanSchema(BaseModel):
    grid: int
    cells: int
    params: str
    max_defect: float
    worst_cell: Optional[List[float]]


class ReportSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_: int
    config: Dict[str, Any]
    steps: List[StepSchema]
    constants: Dict[str, Dict[str, str]]
    counts: Dict[str, int]
    total_millis: float
    verdict: Literal["verified", "failed"]
    scan: Optional[ScanSchema] = None
    warning: Optional[str] = None


def _validate(text: str) -> ReportSchema:
    data = json.loads(text)
    data["schema_"] = data.pop("schema")
    return ReportSchema(**data)


@pytest.mark.integration
class TestReportContract:
    """Validate rendered reports against the schema"""

    def test_step_report(self):
        """Test a run over algebraic steps"""
        config = RunConfig(steps="S09,S10,S21,S29", degree=0)
        report = build_report(config.echo(), run_pipeline(config))
        parsed = _validate(render_report(report, "json"))
        assert parsed.schema_ == SCHEMA_VERSION
        assert parsed.verdict == "verified"
        assert [step.id for step in parsed.steps] == ["S09", "S10", "S21", "S29"]
        assert parsed.counts == {"verified": 4, "failed": 0, "skipped": 0}
        assert set(parsed.constants) == {"S21"}

    def test_scan_report(self):
        """Test a scan-only run"""
        config = RunConfig(scan=True, grid=3, degree=0)
        scan = equilateral_scan(config.grid, config.cevian_params()).to_dict()
        report = build_report(config.echo(), run_pipeline(config), scan)
        parsed = _validate(render_report(report, "json"))
        assert parsed.steps == []
        assert parsed.warning is not None
        assert parsed.scan is not None and parsed.scan.cells == 6

    def test_failed_report(self):
        """Test failure witnesses keep the contract"""
        context = DerivationContext(displays=DerivationContext().displays.corrupted("Eeq1"))
        results = DerivationPipeline(context=context).run(["S09", "S18"])
        parsed = _validate(render_report(build_report({}, results), "json"))
        assert parsed.verdict == "failed"
        assert parsed.steps[1].witness == {"blocked_by": ["S09"]}
