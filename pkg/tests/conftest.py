import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from unipcount import cli


def run_cli(argv):
    """Run the CLI in-process, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.run(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli_runner():
    return run_cli
