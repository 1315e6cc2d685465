import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError


class CommandResult:
    def __init__(self, stdout, stderr):
        self.stdout = stdout
        self.stderr = stderr

    def json(self):
        return json.loads(self.stdout)


@pytest.fixture()
def run_command():
    """Runs a management command and returns its captured stdout and stderr."""

    def run(*args):
        stdout, stderr = StringIO(), StringIO()
        call_command(*args, stdout=stdout, stderr=stderr)
        return CommandResult(stdout.getvalue(), stderr.getvalue())

    return run


@pytest.fixture()
def failing_command():
    """Runs a command expected to fail; returns the `CommandError` and the stderr JSON."""

    def run(*args):
        stderr = StringIO()
        with pytest.raises(CommandError) as err:
            call_command(*args, stdout=StringIO(), stderr=stderr)
        return err.value, json.loads(stderr.getvalue())

    return run


@pytest.fixture()
def family_file(tmp_path):
    path = tmp_path / "family.json"
    path.write_text(
        json.dumps(
            {
                "name": "hand-written",
                "description": "Entered by hand.",
                "phi": [[{"terms": [[0, 1, "3"]]}, 1], [1, 0]],
                "psi": [{"terms": [[1, 0, "-1"]]}, {"terms": [[0, 1, "-1"]]}],
                "weight": {"s": {"terms": [[0, 3, "1"], [1, 1, "-1"]]}, "factors": []},
            }
        )
    )
    return str(path)


@pytest.fixture()
def mismatched_family_file(tmp_path):
    """Φ = I and Ψ = -(x, y) with a disk weight that does not solve its Pearson equation."""
    path = tmp_path / "mismatched.json"
    path.write_text(
        json.dumps(
            {
                "name": "mismatched",
                "phi": [[1, 0], [0, 1]],
                "psi": [{"terms": [[1, 0, "-1"]]}, {"terms": [[0, 1, "-1"]]}],
                "weight": {
                    "factors": [
                        [{"terms": [[0, 0, "1"], [2, 0, "-1"], [0, 2, "-1"]]}, "1/2"]
                    ]
                },
            }
        )
    )
    return str(path)
