"""Core module initialization"""

from src.core.config import RunConfig, build_config, load_config_file
from src.core.report import Report, build_report, parse_report, render_report

__all__ = [
    "RunConfig",
    "Report",
    "build_config",
    "build_report",
    "load_config_file",
    "parse_report",
    "render_report",
]
