"""
Run Configuration

This module provides the validated configuration of one verification run and
loading it from an optional YAML file.
"""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from src.morley.params import CevianParams
from src.morley.steps import STEP_MIN_DEGREE


class RunConfig(BaseModel):
    """Settings of one verification run"""

    degree: int = Field(default=8, ge=0, description="Series truncation degree")
    precision_bits: int = Field(default=128, ge=64, description="Bits for certified enclosures")
    steps: Optional[List[str]] = Field(default=None, description="Step ids to run (all when unset)")
    format: Literal["json", "text"] = Field(default="json", description="Report format")
    output: Optional[str] = Field(default=None, description="Report path (stdout when unset)")
    scan: bool = Field(default=False, description="Run the equilateral scan")
    grid: int = Field(default=50, ge=1, description="Scan grid resolution")
    params: Optional[List[float]] = Field(default=None, description="Numeric t1..t6")
    csv: Optional[str] = Field(default=None, description="Scan CSV path")
    progress: bool = Field(default=False, description="Show progress bars")

    @field_validator("steps", mode="before")
    @classmethod
    def split_steps(cls, v: Any) -> Any:
        """Accept "S01,S04" as well as a list"""
        if isinstance(v, str):
            return [part.strip() for part in v.split(",") if part.strip()]
        return v

    @field_validator("steps")
    @classmethod
    def validate_steps(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        """Reject unknown step ids"""
        if v is None:
            return v
        unknown = [step_id for step_id in v if step_id not in STEP_MIN_DEGREE]
        if unknown:
            raise ValueError(f"Unknown steps: {', '.join(unknown)}")
        return list(dict.fromkeys(v))

    @field_validator("params", mode="before")
    @classmethod
    def split_params(cls, v: Any) -> Any:
        if isinstance(v, str):
            return list(CevianParams.from_text(v).as_floats())
        return v

    @field_validator("params")
    @classmethod
    def validate_params(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        """Six admissible values"""
        if v is None:
            return v
        if len(v) != 6:
            raise ValueError(f"params must have six values t1..t6, got {len(v)}")
        ok, errors = CevianParams(tuple(v)).validate()
        if not ok:
            raise ValueError("; ".join(errors))
        return v

    @model_validator(mode="after")
    def check_degree(self) -> "RunConfig":
        """The truncation degree must cover every selected step"""
        needed = self.required_degree()
        if self.degree < needed:
            raise ValueError(f"degree {self.degree} is too low for the selection (needs {needed})")
        return self

    def selected_steps(self) -> Optional[List[str]]:
        """
        Step selection passed to the pipeline

        None means every step; a scan-only run selects nothing.
        """
        if self.steps is not None:
            return list(self.steps)
        if self.scan:
            return []
        return None

    def required_degree(self) -> int:
        selected = self.selected_steps()
        ids = STEP_MIN_DEGREE.keys() if selected is None else selected
        return max((STEP_MIN_DEGREE[step_id] for step_id in ids), default=0)

    def cevian_params(self) -> CevianParams:
        if self.params is None:
            return CevianParams.trisector()
        return CevianParams(tuple(self.params))

    def echo(self) -> Dict[str, Any]:
        """Configuration as recorded in the report"""
        return self.model_dump()


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read configuration values from a YAML file

    Args:
        path: YAML file with RunConfig field names as keys

    Returns:
        Mapping of field values (empty for an empty file)

    Raises:
        ValueError: If the file is missing, unreadable or not a mapping
    """
    file_path = Path(path)
    if not file_path.exists():
        raise ValueError(f"Config file not found: {file_path}")
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ValueError(f"Cannot read config file {file_path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"Config file {file_path} must contain a mapping")
    return data


def build_config(
    overrides: Optional[Dict[str, Any]] = None, config_file: Optional[Union[str, Path]] = None
) -> RunConfig:
    """
    Merge file values with command-line overrides (overrides win)

    Raises:
        ValueError: On invalid values (pydantic ValidationError is a ValueError)
    """
    values: Dict[str, Any] = {}
    if config_file is not None:
        values.update(load_config_file(config_file))
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return RunConfig(**values)
