import json

import pytest
from django.apps import apps
from django.conf import settings

from cli.base import error_document, exit_code_for
from cli.choices import ExitCodeChoices
from polycore.exceptions import MomentCapExceeded, NonzeroResidual, NotDivisible, Unsolvable


class TestGenerate:
    def test_ball_degree_zero(self, run_command):
        result = run_command(
            "generate", "--family", "ball", "--mu", "1/2", "--degree", "0", "--format", "text"
        )
        assert result.stdout == "Q_0^t = (1)\n"

    def test_simplex_diagonal_document(self, run_command):
        result = run_command(
            "generate",
            "--family", "simplex",
            "--alpha", "0", "--beta", "0", "--gamma", "0",
            "--degree", "1",
            "--form", "diagonal",
        )
        document = result.json()
        assert document["form"] == "diagonal"
        assert document["route"] == "carrier"
        assert document["polynomials"][1]["text"] == ["-2*x - y + 1", "-x - 2*y + 1"]

    @pytest.mark.parametrize("route", ["carrier", "reduction", "moment"])
    def test_routes(self, run_command, route):
        result = run_command(
            "generate",
            "--family", "krall-sheffer-intriguing",
            "--degree", "2",
            "--route", route,
            "--format", "text",
        )
        assert result.stdout.splitlines()[-1] == "Q_2^t = (x^2 - 6*y, 2*x*y - 2, y^2)"

    def test_latex(self, run_command):
        result = run_command(
            "generate", "--family", "krall-sheffer-intriguing", "--degree", "3", "--format", "latex"
        )
        assert result.stdout == (
            "\\begin{align*}\n"
            "\\mathbb{Q}_{0}^t &= \\left(1\\right),\\\\\n"
            "\\mathbb{Q}_{1}^t &= \\left(-x,\\; -y\\right),\\\\\n"
            "\\mathbb{Q}_{2}^t &= \\left(x^{2} - 6 y,\\; 2 x y - 2,\\; y^{2}\\right),\\\\\n"
            "\\mathbb{Q}_{3}^t &= \\left(-x^{3} + 18 x y - 12,\\; "
            "-3 x^{2} y + 18 y^{2} + 6 x,\\; -3 x y^{2} + 6 y,\\; -y^{3}\\right).\n"
            "\\end{align*}\n"
        )

    def test_out_file(self, run_command, tmp_path):
        path = tmp_path / "vectors.json"
        result = run_command(
            "generate", "--family", "krall-sheffer-intriguing", "--degree", "1", "--out", str(path)
        )
        assert result.stdout == ""
        assert json.loads(path.read_text())["max_degree"] == 1

    def test_family_file(self, run_command, family_file):
        result = run_command(
            "generate", "--family-file", family_file, "--degree", "1", "--format", "text"
        )
        assert result.stdout == "Q_0^t = (1)\nQ_1^t = (-x, -y)\n"

    def test_decimal_parameter(self, failing_command):
        error, document = failing_command("generate", "--family", "ball", "--mu", "0.5")
        assert error.returncode == ExitCodeChoices.CONFIGURATION_ERROR
        assert document["error"] == "decimal_rejected"

    def test_no_family(self, failing_command):
        error, document = failing_command("generate", "--degree", "1")
        assert error.returncode == 3
        assert document["error"] == "invalid_family_source"

    def test_negative_degree(self, failing_command):
        error, document = failing_command(
            "generate", "--family", "krall-sheffer-intriguing", "--degree", "-1"
        )
        assert error.returncode == 3
        assert document["error"] == "invalid_degree"

    def test_construction_failure(self, failing_command, mismatched_family_file):
        error, document = failing_command(
            "generate",
            "--family-file", mismatched_family_file,
            "--degree", "1",
            "--form", "original",
        )
        assert error.returncode == ExitCodeChoices.CONSTRUCTION_FAILURE
        assert document["error"] == "not_divisible"
        assert document["details"]["degree"] == 1


@pytest.mark.django_db
class TestVerify:
    def test_passing_family(self, run_command):
        result = run_command("verify", "--family", "krall-sheffer-intriguing", "--degree", "1")
        report = result.json()
        assert report["passed"] is True
        assert report["conformance"] == {
            "condr_original": True,
            "lambda_shape": True,
            "symmetrizable": True,
        }

    def test_closed_form_text(self, run_command):
        result = run_command(
            "verify", "--family", "ball", "--mu", "1", "--degree", "2", "--closed-form",
            "--format", "text",
        )
        lines = result.stdout.splitlines()
        assert "form: diagonal" in lines
        assert "condition (R), original form: fails" in lines
        assert lines[-1] == "outcome: passed"

    def test_construction_failure_exit_code(self, failing_command, mismatched_family_file):
        error, document = failing_command(
            "verify", "--family-file", mismatched_family_file, "--degree", "1"
        )
        assert error.returncode == ExitCodeChoices.CONSTRUCTION_FAILURE
        assert document["error"] == "construction_failure"
        kinds = {failure["kind"] for failure in document["details"]["failures"]}
        assert "construction" in kinds

    def test_cap_below_twice_the_degree(self, failing_command):
        error, document = failing_command(
            "verify", "--family", "krall-sheffer-intriguing", "--degree", "3", "--cap", "4"
        )
        assert error.returncode == 3
        assert document["error"] == "invalid_cap"


class TestKron:
    def test_worked_example(self, run_command):
        result = run_command("kron", "--n", "2", "--matrix", "[[1, 2], [3, 4]]", "--format", "text")
        assert result.stdout == "[1, 4, 4]\n[3, 10, 8]\n[9, 24, 16]\n"

    @pytest.mark.parametrize("path", ["explicit", "recurrence-I", "recurrence-II"])
    def test_paths_document(self, run_command, path):
        result = run_command("kron", "--n", "2", "--matrix", "[[1, 2], [3, 4]]", "--path", path)
        assert result.json()["text"] == [["1", "4", "4"], ["3", "10", "8"], ["9", "24", "16"]]

    def test_decimal_entry(self, failing_command):
        error, document = failing_command("kron", "--n", "1", "--matrix", "[[0.5, 1], [1, 1]]")
        assert error.returncode == 3
        assert document["error"] == "decimal_rejected"

    def test_invalid_json(self, failing_command):
        error, document = failing_command("kron", "--n", "1", "--matrix", "[[1, 2]")
        assert error.returncode == 3
        assert document["error"] == "invalid_json"


class TestMoments:
    def test_intriguing_table(self, run_command):
        result = run_command(
            "moments", "--family", "krall-sheffer-intriguing", "--cap", "3", "--format", "text"
        )
        assert "mu[1,1] = 1/1" in result.stdout.splitlines()
        assert "mu[3,0] = 6/1" in result.stdout.splitlines()

    def test_closed_form_document(self, run_command):
        result = run_command(
            "moments", "--family", "simplex", "--alpha", "0", "--beta", "0", "--gamma", "0",
            "--cap", "1", "--closed-form",
        )
        assert result.json() == {
            "cap": 1,
            "provenance": "closed-form",
            "moments": [[0, 0, "1/1"], [1, 0, "1/3"], [0, 1, "1/3"]],
        }

    def test_no_closed_form(self, failing_command):
        error, document = failing_command(
            "moments", "--family", "krall-sheffer-intriguing", "--cap", "2", "--closed-form"
        )
        assert error.returncode == ExitCodeChoices.CONSTRUCTION_FAILURE
        assert document["error"] == "construction_unavailable"

    def test_negative_cap(self, failing_command):
        error, document = failing_command(
            "moments", "--family", "krall-sheffer-intriguing", "--cap", "-1"
        )
        assert document["error"] == "invalid_cap"


@pytest.mark.django_db
class TestFamily:
    def test_list(self, run_command):
        document = run_command("family", "list").json()
        assert [entry["name"] for entry in document["builtin"]][:2] == [
            "diagonal-disk",
            "tensor-hermite-hermite",
        ]
        assert len(document["builtin"]) == 8
        assert document["stored"] == []

    def test_add_then_use(self, run_command, family_file):
        added = run_command("family", "add", "--family-file", family_file).json()
        assert added["name"] == "hand-written"
        assert added["description"] == "Entered by hand."
        assert run_command("family", "list").json()["stored"] == ["hand-written"]
        result = run_command(
            "generate", "--family", "hand-written", "--degree", "1", "--format", "text"
        )
        assert result.stdout == "Q_0^t = (1)\nQ_1^t = (-x, -y)\n"

    def test_add_under_another_name(self, run_command, family_file):
        run_command("family", "add", "--family-file", family_file, "--name", "renamed")
        lines = run_command("family", "list", "--format", "text").stdout.splitlines()
        assert lines[-1] == "renamed: stored"
        assert "ball: parameters mu > -1/2" in lines

    def test_add_builtin_name(self, failing_command, family_file):
        error, document = failing_command(
            "family", "add", "--family-file", family_file, "--name", "ball"
        )
        assert error.returncode == 3
        assert document["error"] == "duplicate_family"

    def test_add_mismatched_weight(self, failing_command, mismatched_family_file):
        error, document = failing_command("family", "add", "--family-file", mismatched_family_file)
        assert document["error"] == "weight_mismatch"

    def test_add_missing_file(self, failing_command, tmp_path):
        error, document = failing_command(
            "family", "add", "--family-file", str(tmp_path / "absent.json")
        )
        assert error.returncode == 3
        assert document["error"] == "unreadable_file"

    def test_show(self, run_command):
        document = run_command("family", "show", "--family", "ball", "--mu", "1/2").json()
        assert document["name"] == "ball"
        assert document["params"] == {"mu": "1/2"}
        assert document["splitting"] is not None


class TestExitCodes:
    @pytest.mark.parametrize(
        "exc, code",
        [
            (MomentCapExceeded("cap"), ExitCodeChoices.CONFIGURATION_ERROR),
            (NotDivisible("division"), ExitCodeChoices.CONSTRUCTION_FAILURE),
            (NonzeroResidual("residual"), ExitCodeChoices.RESIDUAL_VIOLATION),
            (Unsolvable("singular"), ExitCodeChoices.MATH_FAILURE),
            (RuntimeError("boom"), ExitCodeChoices.INTERNAL_ERROR),
        ],
    )
    def test_exit_code_for(self, exc, code):
        assert exit_code_for(exc) == code

    def test_internal_error_document(self):
        assert error_document(KeyError("x")) == {
            "error": "internal_error",
            "message": "'x'",
            "details": {"type": "KeyError"},
        }


class TestSettings:
    def test_only_engine_apps_are_installed(self):
        assert not apps.is_installed("django.contrib.auth")
        assert apps.is_installed("catalog")

    def test_serializers_without_authentication(self):
        assert settings.REST_FRAMEWORK["UNAUTHENTICATED_USER"] is None
