"""Tests for run configuration"""

import os
import tempfile

import pytest
import yaml
from pydantic import ValidationError

from src.core.config import RunConfig, build_config, load_config_file
from src.morley.params import CevianParams


@pytest.fixture
def temp_config_file():
    """Temporary YAML file path"""
    with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
        path = f.name
    yield path
    if os.path.exists(path):
        os.unlink(path)


def _write(path, data):
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(data, f)


class TestRunConfig:
    """Test field validation"""

    def test_defaults(self):
        """Test the default run covers every step"""
        config = RunConfig()
        assert config.degree == 8
        assert config.precision_bits == 128
        assert config.format == "json"
        assert config.grid == 50
        assert config.selected_steps() is None
        assert config.cevian_params() == CevianParams.trisector()

    def test_steps_from_text(self):
        """Test comma-separated ids, duplicates dropped"""
        config = RunConfig(steps="S29, S04,S29")
        assert config.steps == ["S29", "S04"]

    def test_unknown_step(self):
        """Test unknown ids are rejected"""
        with pytest.raises(ValidationError, match="S99"):
            RunConfig(steps="S04,S99")

    def test_degree_too_low(self):
        """Test degree 5 cannot cover the full derivation"""
        with pytest.raises(ValidationError, match="too low"):
            RunConfig(degree=5)

    def test_degree_follows_selection(self):
        """Test a low degree is fine for algebraic steps"""
        assert RunConfig(degree=0, steps="S29,S35").required_degree() == 0
        assert RunConfig(degree=4, steps="S04").required_degree() == 4
        with pytest.raises(ValidationError):
            RunConfig(degree=6, steps="S11")

    def test_precision_floor(self):
        """Test precision below 64 bits"""
        with pytest.raises(ValidationError):
            RunConfig(precision_bits=32)

    def test_format(self):
        """Test only json and text"""
        assert RunConfig(format="text").format == "text"
        with pytest.raises(ValidationError):
            RunConfig(format="xml")

    def test_scan_only(self):
        """Test --scan without --steps selects nothing"""
        config = RunConfig(scan=True, degree=0)
        assert config.selected_steps() == []
        assert config.required_degree() == 0

    def test_params_text(self):
        """Test parameters parsed from text"""
        config = RunConfig(params="0.2,0.3,0.25,0.35,0.3,0.15")
        assert config.cevian_params().as_floats() == (0.2, 0.3, 0.25, 0.35, 0.3, 0.15)

    def test_params_inadmissible(self):
        """Test t2 + t3 >= 1 is rejected"""
        with pytest.raises(ValidationError, match="below 1"):
            RunConfig(params="0.2,0.6,0.5,0.2,0.2,0.2")

    def test_params_count(self):
        """Test five values are rejected"""
        with pytest.raises(ValidationError):
            RunConfig(params=[0.1, 0.1, 0.1, 0.1, 0.1])

    def test_grid_floor(self):
        """Test grid 0"""
        with pytest.raises(ValidationError):
            RunConfig(grid=0)

    def test_echo(self):
        """Test the report echo is a plain dict"""
        echo = RunConfig(steps="S29", degree=0).echo()
        assert echo["steps"] == ["S29"]
        assert echo["degree"] == 0


class TestConfigFile:
    """Test YAML loading and merging"""

    def test_load(self, temp_config_file):
        """Test a mapping is returned as is"""
        _write(temp_config_file, {"degree": 10, "format": "text"})
        assert load_config_file(temp_config_file) == {"degree": 10, "format": "text"}

    def test_empty_file(self, temp_config_file):
        """Test an empty file is an empty mapping"""
        assert load_config_file(temp_config_file) == {}

    def test_missing_file(self):
        """Test a missing file"""
        with pytest.raises(ValueError, match="not found"):
            load_config_file("/nonexistent/run.yaml")

    def test_not_a_mapping(self, temp_config_file):
        """Test a YAML list is rejected"""
        _write(temp_config_file, ["S04", "S29"])
        with pytest.raises(ValueError, match="mapping"):
            load_config_file(temp_config_file)

    def test_invalid_yaml(self, temp_config_file):
        """Test unparsable YAML"""
        with open(temp_config_file, "w", encoding="utf-8") as f:
            f.write("degree: [8\n")
        with pytest.raises(ValueError, match="Cannot read"):
            load_config_file(temp_config_file)

    def test_overrides_win(self, temp_config_file):
        """Test command-line values beat file values, None is ignored"""
        _write(temp_config_file, {"degree": 10, "grid": 7})
        config = build_config({"degree": 12, "grid": None}, temp_config_file)
        assert config.degree == 12
        assert config.grid == 7

    def test_file_values_validated(self, temp_config_file):
        """Test file values go through the same validation"""
        _write(temp_config_file, {"steps": ["S42"]})
        with pytest.raises(ValueError):
            build_config({}, temp_config_file)
