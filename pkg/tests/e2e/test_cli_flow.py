"""
End-to-end tests for the verify command.

Runs the command-line entry point in-process and checks exit codes, report
contents and files written.
"""

import json

import pytest

from src.core.report import EMPTY_SELECTION_WARNING, parse_report
from src.morley.registry import StepResult, StepStatus


@pytest.mark.e2e
class TestVerifyFlow:
    """Test complete command-line runs"""

    def test_single_step_json(self, run_cli):
        """Test a verified step gives exit 0 and a JSON report"""
        code, out, _ = run_cli("--steps", "S29", "--degree", "0")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "verified"
        assert [step["id"] for step in data["steps"]] == ["S29"]
        assert data["config"]["steps"] == ["S29"]

    def test_text_report_to_file(self, run_cli, tmp_path):
        """Test --format text with --output"""
        target = tmp_path / "report.txt"
        code, out, _ = run_cli("--steps", "S21,S35", "--degree", "0", "--format", "text", "-o", str(target))
        assert code == 0
        assert out == ""
        text = target.read_text(encoding="utf-8")
        assert text.index("S21") < text.index("S35")
        assert "Verdict: verified" in text

    def test_report_parses_back(self, run_cli, tmp_path):
        """Test the JSON file is a readable report"""
        target = tmp_path / "report.json"
        code, _, _ = run_cli("--steps", "S13", "--degree", "0", "--output", str(target))
        assert code == 0
        report = parse_report(target.read_text(encoding="utf-8"))
        assert report.verified
        assert "S13" in report.constants()

    def test_config_file(self, run_cli, tmp_path):
        """Test settings read from YAML, flags overriding"""
        config = tmp_path / "run.yaml"
        config.write_text("steps: [S29]\ndegree: 0\nformat: text\n", encoding="utf-8")
        code, out, _ = run_cli("--config", str(config), "--format", "json")
        assert code == 0
        assert json.loads(out)["steps"][0]["id"] == "S29"

    def test_scan_only(self, run_cli, tmp_path):
        """Test --scan without --steps runs only the scan and warns"""
        csv_path = tmp_path / "scan.csv"
        code, out, _ = run_cli("--scan", "--grid", "4", "--degree", "0", "--csv", str(csv_path))
        assert code == 0
        data = json.loads(out)
        assert data["steps"] == []
        assert data["warning"] == EMPTY_SELECTION_WARNING
        assert data["scan"]["cells"] == 10
        assert data["scan"]["max_defect"] < 1e-10
        assert len(csv_path.read_text(encoding="utf-8").splitlines()) == 11

    def test_failing_step_exit_code(self, run_cli, mocker):
        """Test a failed step gives exit 1"""
        failed = StepResult("S29", "claim", StepStatus.FAILED, witness={"error": "boom"})
        mocker.patch("src.cli.main.run_pipeline", return_value=[failed])
        code, out, _ = run_cli("--steps", "S29", "--degree", "0")
        assert code == 1
        assert json.loads(out)["verdict"] == "failed"


@pytest.mark.e2e
class TestUsageErrors:
    """Test exit code 2 paths"""

    def test_degree_too_low(self, run_cli):
        """Test the full derivation at degree 5"""
        code, out, err = run_cli("--degree", "5")
        assert code == 2
        assert out == ""
        assert "too low" in err

    def test_unknown_flag(self, run_cli):
        """Test argparse errors"""
        code, _, _ = run_cli("--frobnicate")
        assert code == 2

    def test_unknown_step(self, run_cli):
        """Test an unknown step id"""
        code, _, err = run_cli("--steps", "S38", "--degree", "0")
        assert code == 2
        assert "S38" in err

    def test_low_precision(self, run_cli):
        """Test precision below 64 bits"""
        code, _, _ = run_cli("--steps", "S29", "--degree", "0", "--precision", "32")
        assert code == 2

    def test_missing_output_directory(self, run_cli, tmp_path):
        """Test an output path whose directory does not exist"""
        target = tmp_path / "missing" / "report.json"
        code, _, err = run_cli("--steps", "S29", "--degree", "0", "-o", str(target))
        assert code == 2
        assert "does not exist" in err

    def test_missing_config_file(self, run_cli, tmp_path):
        """Test --config pointing nowhere"""
        code, _, err = run_cli("--config", str(tmp_path / "none.yaml"))
        assert code == 2
        assert "not found" in err

    def test_inadmissible_params(self, run_cli):
        """Test scan parameters violating t2 + t3 < 1"""
        code, _, _ = run_cli("--scan", "--degree", "0", "--params", "0.2,0.6,0.5,0.2,0.2,0.2")
        assert code == 2
