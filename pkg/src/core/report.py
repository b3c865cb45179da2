"""
Verification Report

The machine-readable record of one run: configuration echo, per-step
results, the derived constants table, optional scan summary and the overall
verdict. JSON output carries a top-level schema version; all rationals are
"n/d" strings.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.arith.rational import format_rational
from src.morley.registry import StepResult, StepStatus

SCHEMA_VERSION = 1

EMPTY_SELECTION_WARNING = "no steps selected; verdict is vacuously verified"

# Step fields in the JSON report
_STEP_FIELDS = ("id", "claim", "status", "check", "witness", "anchor", "millis", "constants", "primary_constant")


@dataclass
class Report:
    """Outcome of one verification run"""

    config: Dict[str, Any]
    steps: List[StepResult] = field(default_factory=list)
    scan: Optional[Dict[str, Any]] = None
    warning: Optional[str] = None

    @property
    def verified(self) -> bool:
        return all(step.verified for step in self.steps)

    @property
    def verdict(self) -> str:
        return StepStatus.VERIFIED.value if self.verified else StepStatus.FAILED.value

    @property
    def total_millis(self) -> float:
        return sum(step.millis for step in self.steps)

    def constants(self) -> Dict[str, Dict[str, str]]:
        """Derived constants table: step id -> constant name -> "n/d" """
        return {
            step.id: {name: format_rational(value) for name, value in step.constants.items()}
            for step in self.steps
            if step.constants
        }

    def counts(self) -> Dict[str, int]:
        totals = {status.value: 0 for status in StepStatus}
        for step in self.steps:
            totals[step.status.value] += 1
        return totals

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the versioned JSON schema"""
        steps = []
        for step in self.steps:
            data = step.to_dict()
            steps.append({key: data[key] for key in _STEP_FIELDS})
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "config": self.config,
            "steps": steps,
            "constants": self.constants(),
            "counts": self.counts(),
            "total_millis": round(self.total_millis, 3),
            "verdict": self.verdict,
        }
        if self.scan is not None:
            out["scan"] = self.scan
        if self.warning is not None:
            out["warning"] = self.warning
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        """
        Rebuild a report from its JSON schema

        Raises:
            ValueError: On an unsupported schema version
        """
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema: {data.get('schema')!r}")
        return cls(
            config=dict(data.get("config", {})),
            steps=[StepResult.from_dict(step) for step in data.get("steps", [])],
            scan=data.get("scan"),
            warning=data.get("warning"),
        )


def build_report(
    config: Dict[str, Any],
    results: Sequence[StepResult],
    scan: Optional[Dict[str, Any]] = None,
) -> Report:
    """Assemble a report; an empty selection gets the vacuous-verdict warning"""
    warning = EMPTY_SELECTION_WARNING if not results else None
    return Report(config=config, steps=list(results), scan=scan, warning=warning)


def _render_text(report: Report) -> str:
    lines = []
    for step in sorted(report.steps, key=lambda r: r.id):
        lines.append(f"{step.id:<4} {step.status.value:<9} {step.millis:>10.1f} ms  {step.claim}")
        if step.status == StepStatus.FAILED:
            lines.append("     witness: " + json.dumps(step.witness, sort_keys=True, default=str))
        elif step.status == StepStatus.SKIPPED:
            lines.append("     blocked by: " + ", ".join(step.witness.get("blocked_by", [])))

    table = report.constants()
    if table:
        lines.append("")
        lines.append("Derived constants")
        for step_id in sorted(table):
            for name, value in table[step_id].items():
                lines.append(f"  {step_id:<4} {name:<20} {value}")

    if report.scan is not None:
        lines.append("")
        lines.append(
            f"Scan: {report.scan.get('cells')} cells, params {report.scan.get('params')}, "
            f"max defect {report.scan.get('max_defect')}"
        )

    counts = report.counts()
    lines.append("")
    if report.warning:
        lines.append(f"Warning: {report.warning}")
    lines.append(
        f"Verdict: {report.verdict} "
        f"({counts['verified']} verified, {counts['failed']} failed, {counts['skipped']} skipped)"
    )
    return "\n".join(lines) + "\n"


def render_report(report: Report, fmt: str = "json") -> str:
    """
    Render a report as JSON or text

    Raises:
        ValueError: For an unknown format
    """
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, default=str) + "\n"
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown report format: {fmt}")


def parse_report(text: str) -> Report:
    """Inverse of the JSON rendering"""
    return Report.from_dict(json.loads(text))
