"""Syncert integration test suite.

These tests run the randomized property suites over generated networks and the jobs
end to end against a temporary results directory.
"""

import tempfile
from pathlib import Path
from unittest import mock

import pytest


@pytest.fixture(autouse=True, scope="module")
def integration_storage_path():
    with tempfile.TemporaryDirectory() as storage_path:
        yield Path(storage_path)


@pytest.fixture(autouse=True, scope="module")
def integration_results_path(integration_storage_path):
    """Route job outputs without an explicit path into the temporary directory."""
    results = integration_storage_path / "results"
    with mock.patch("syncert.jobs.utils.SYNCERT_RESULTS_PATH", str(results)):
        yield results
