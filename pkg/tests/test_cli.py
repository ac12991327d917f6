import json
from pathlib import Path

import pytest
import typer
from typer.testing import CliRunner

from dclifford.cli.router import cli_app, cli_main
from dclifford.core.error_handlers import format_error, with_error_handling
from dclifford.core.exceptions import ClosureError, ExpressionSyntaxError, InfeasibleError

GOLDEN = Path(__file__).parent / "golden"

runner = CliRunner()


def invoke(*args):
    return runner.invoke(cli_app, list(args))


def load_json(text):
    payload = json.loads(text)
    payload.pop("version")
    return payload


def golden_json(name):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


def golden_text(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


DECOMPOSE_X1 = ("decompose", "--n", "2", "--expr", "X1^(1) e0", "--strategy", "exact")
EVAL_X1_SQUARED = ("eval", "--n", "1", "--at", "3", "--expr", "X1^(2) e0")
VERIFY_EQ24 = (
    "verify", "--filter", "Eq24", "--seed", "0", "--dimensions", "1", "--max-degree", "2",
    "--mesh-widths", "1", "--trials", "0", "--format", "json",
)


class TestGolden:
    def test_decompose_text(self):
        result = invoke(*DECOMPOSE_X1)
        assert result.exit_code == 0
        assert result.stdout == golden_text("decompose_x1.txt")

    def test_decompose_json(self):
        result = invoke(*DECOMPOSE_X1, "--format", "json")
        assert result.exit_code == 0
        payload = load_json(result.stdout)
        assert payload == golden_json("decompose_x1.json")
        assert list(payload)[:3] == ["schema", "space", "strategy"]

    def test_eval(self):
        text = invoke(*EVAL_X1_SQUARED)
        assert text.exit_code == 0
        assert text.stdout == golden_text("eval_x1_squared.txt")
        as_json = invoke(*EVAL_X1_SQUARED, "--format", "json")
        assert load_json(as_json.stdout) == golden_json("eval_x1_squared.json")

    def test_verify_refuted_hypothesis_is_still_ok(self):
        result = invoke(*VERIFY_EQ24)
        assert result.exit_code == 0
        payload = load_json(result.stdout)
        expected = golden_json("verify_eq24.json")
        assert payload["ok"] is expected["ok"]
        assert payload["counts"] == expected["counts"]
        (claim,) = payload["claims"]
        for key, value in expected["claim"].items():
            assert claim[key] == value
        assert payload["grid"] == {"dimensions": [1], "max_degree": 2, "mesh_widths": ["1"], "trials": 0}

    def test_verify_is_deterministic(self):
        assert invoke(*VERIFY_EQ24).stdout == invoke(*VERIFY_EQ24).stdout

    def test_verify_table(self):
        result = invoke(*VERIFY_EQ24[:-2])
        assert result.exit_code == 0
        assert "witness at n=1 k=2 h=1 sign=+: -2 X1^(1) e0 != X1^(2) e0" in result.stdout


class TestCommands:
    @pytest.mark.parametrize("args,expected", [
        (("--op", "dh+", "--n", "2", "--expr", "X1^(1) e0"), "e1"),
        (("--op", "d+:1", "--op", "d+:1", "--n", "1", "--expr", "X1^(2) e0"), "2 e0"),
    ])
    def test_apply(self, args, expected):
        result = invoke("apply", *args)
        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_apply_json_names_the_chain(self):
        result = invoke("apply", "--op", "d+:1", "--op", "d+:1", "--n", "1", "--expr", "X1^(2) e0", "--format", "json")
        payload = load_json(result.stdout)
        assert payload["operators"] == ["d+:1", "d+:1"]
        assert payload["text"] == "2 e0"

    @pytest.mark.parametrize("direction,expected", [
        ("to-monomial", "-x1 e0 + x1^2 e0"),
        ("to-factorial", "X1^(1) e0 + X1^(2) e0"),
    ])
    def test_convert(self, direction, expected):
        result = invoke("convert", "--direction", direction, "--n", "1", "--expr", "X1^(2) e0")
        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_kernel(self):
        result = invoke("kernel", "--degree", "1", "--n", "2", "--format", "json")
        payload = load_json(result.stdout)
        assert (payload["dimension"], payload["rank"], payload["operator"]) == (4, 4, "dh+")
        assert len(payload["basis"]) == 4

    def test_mixed_kernel(self):
        result = invoke("kernel", "--degree", "1", "--n", "3", "--kind", "mixed", "--variant", "-+", "--format", "json")
        assert result.exit_code == 0
        payload = load_json(result.stdout)
        assert (payload["dimension"], payload["family"], payload["operator"]) == (8, "+", "D-+")

    def test_kernel_text(self):
        result = invoke("kernel", "--degree", "1", "--n", "2")
        lines = result.stdout.splitlines()
        assert lines[0] == "monogenic kernel (dh+), degree 1: dimension 4"
        assert len(lines) == 5

    def test_harmonic(self):
        result = invoke("harmonic", "--n", "2", "--expr", "X1^(2) e0", "--strategy", "graded", "--format", "json")
        assert result.exit_code == 0
        payload = load_json(result.stdout)
        assert payload["space"] == "harmonic"
        assert [c["degree"] for c in payload["components"]] == [2, 0]

    def test_claims(self):
        result = invoke("claims", "--filter", "Eq41", "--format", "json")
        payload = load_json(result.stdout)
        assert payload["filter"] == "Eq41"
        assert [c["id"] for c in payload["claims"]] == ["Eq41"]
        assert invoke("claims").stdout.count("\n") == 99

    def test_input_file(self, tmp_path):
        source = tmp_path / "p.txt"
        source.write_text("X1^(2) e0\n", encoding="utf-8")
        result = invoke("eval", "--n", "1", "--at", "3", "--input", str(source))
        assert result.stdout == golden_text("eval_x1_squared.txt")


class TestReplay:
    def _report(self, tmp_path):
        path = tmp_path / "report.json"
        path.write_text(invoke(*VERIFY_EQ24).stdout, encoding="utf-8")
        return path

    def test_round_trip(self, tmp_path):
        result = invoke("verify", "--replay", str(self._report(tmp_path)))
        assert result.exit_code == 0
        assert result.stdout.strip() == "Eq24: reproduced"

    def test_tampered_witness(self, tmp_path):
        path = self._report(tmp_path)
        payload = json.loads(path.read_text(encoding="utf-8"))
        payload["claims"][0]["witness"]["lhs"] = "0"
        path.write_text(json.dumps(payload), encoding="utf-8")
        result = invoke("verify", "--replay", str(path))
        assert result.exit_code == 1
        assert "Eq24: NOT reproduced" in result.stdout

    def test_not_a_report(self, tmp_path):
        path = tmp_path / "report.json"
        path.write_text('{"claims": 3}', encoding="utf-8")
        result = invoke("verify", "--replay", str(path))
        assert result.exit_code == 2
        assert "is not a claim report" in result.output


class TestErrors:
    @pytest.mark.parametrize("args,message", [
        (("eval", "--n", "1", "--at", "3", "--expr", "X1^(1) e0 ?"), "unexpected character '?'"),
        (("eval", "--n", "1", "--at", "3,4", "--expr", "X1^(1) e0"), "point has 2 coordinates, expected 1"),
        (("eval", "--n", "1", "--at", "3", "--h", "0", "--expr", "e0"), "mesh width must be positive"),
        (("eval", "--n", "1", "--at", "3"), "give exactly one of --expr and --input"),
        (("eval", "--n", "1", "--at", "3", "--expr", "e0", "--format", "xml"), "--format must be one of"),
        (("apply", "--op", "D-+", "--n", "2", "--expr", "e0"), "needs --n 3"),
        (("convert", "--direction", "sideways", "--n", "1", "--expr", "e0"), "--direction must be one of"),
        (("decompose", "--n", "2", "--expr", "X1^(1) e0", "--strategy", "fast"), "--strategy must be one of"),
        (("decompose", "--n", "2", "--expr", "X1^(1) e0", "--variant", "-+"), "variant -+ needs --n 3"),
        (("kernel", "--degree", "1", "--n", "2", "--kind", "spinor"), "--kind must be one of"),
        (("kernel", "--degree", "1", "--n", "2", "--variant", "-+"), "--variant only applies"),
        (("verify", "--filter", "Nope*", "--trials", "0"), "no claim matches 'Nope*'"),
        (("verify", "--dimensions", "x", "--trials", "0"), "must be integers"),
    ])
    def test_rejected_exit_two(self, args, message):
        result = invoke(*args)
        assert result.exit_code == 2
        assert "error:" in result.output
        assert message in result.output

    def test_missing_input_file(self, tmp_path):
        result = invoke("eval", "--n", "1", "--at", "3", "--input", str(tmp_path / "absent.txt"))
        assert result.exit_code == 2
        assert "cannot read" in result.output

    @pytest.mark.parametrize("error", [
        InfeasibleError("no solution"),
        ClosureError("d-:1", "X1^(2) e0", ["-2 e0"]),
    ])
    def test_solver_failures_exit_three(self, error):
        @with_error_handling
        def command(output_format="text"):
            raise error

        with pytest.raises(typer.Exit) as info:
            command()
        assert info.value.exit_code == 3

    def test_unexpected_failures_exit_one(self):
        @with_error_handling
        def command(output_format="text"):
            raise KeyError("boom")

        with pytest.raises(typer.Exit) as info:
            command()
        assert info.value.exit_code == 1

    def test_json_error_payload(self):
        error = ExpressionSyntaxError("unexpected end of expression", 1, 4, ["INT"])
        payload = json.loads(format_error(error, "json"))
        assert payload == {"detail": [{
            "loc": ["expr", "1", "4"], "msg": "unexpected end of expression", "type": "syntax_error",
        }]}
        assert format_error(error) == "error: unexpected end of expression\nexpected one of: INT"


class TestMain:
    def test_returns_zero(self, capsys):
        assert cli_main(list(EVAL_X1_SQUARED)) == 0
        assert capsys.readouterr().out == golden_text("eval_x1_squared.txt")

    def test_returns_error_codes(self):
        assert cli_main(["eval", "--n", "1", "--at", "3", "--expr", "X2^(1) e0"]) == 2
        assert cli_main(["no-such-command"]) == 2
