"""
Shared fixtures for E2E tests.
"""

import pytest

from src.cli.main import main


@pytest.fixture
def run_cli(capsys):
    """Run the verify command; returns (exit code, stdout, stderr)"""

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
