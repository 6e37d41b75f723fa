import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    """Fresh sweep CSVs produced through the dcavity command-line interface."""
    out = tmp_path_factory.mktemp("csv")
    subprocess.run(
        [sys.executable, "-m", "dcavity", "figure", "all", "--out", str(out),
         "--points", "201"],
        check=True,
        capture_output=True,
    )
    return out
