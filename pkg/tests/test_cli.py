import json

import pytest

from fpscomp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestExitCodes:
    def test_success(self, capsys):
        code, out, _ = run(capsys, "boettcher", "z^2 + z^3")
        assert code == 0
        body = json.loads(out)
        assert body["status"] == "ok" and body["n"] == 2

    def test_negative_result(self, capsys):
        code, out, _ = run(capsys, "solve", "right", "z^8 + z^9", "z^2")
        assert code == 2
        body = json.loads(out)
        assert body["status"] == "no" and body["error_type"] == "NoSolution"

    def test_operational_error(self, capsys):
        code, out, err = run(capsys, "boettcher", "1 + z")
        assert code == 1
        assert out == ""
        assert "error" in err

    def test_usage_error_is_not_two(self, capsys):
        code, _, _ = run(capsys, "no-such-command")
        assert code == 1

    def test_help_exits_zero(self, capsys):
        code, _, _ = run(capsys, "--help")
        assert code == 0

    def test_trunc_bounds(self, capsys):
        code, _, err = run(capsys, "--trunc", "2", "boettcher", "z^2")
        assert code == 1 and "truncation" in err


class TestCommands:
    def test_decompose_count(self, capsys):
        code, out, _ = run(capsys, "decompose", "z^8", "--count-only")
        assert code == 0
        assert json.loads(out)["count"] == 4

    def test_solve_left(self, capsys):
        code, out, _ = run(capsys, "solve", "left", "z^8", "z^2")
        assert code == 0
        assert len(json.loads(out)["solutions"]) == 2

    def test_solve_common(self, capsys):
        code, out, _ = run(
            capsys, "solve", "common", "z^4", "z^6", "--order", "2"
        )
        assert code == 0
        assert "w" in json.loads(out)

    def test_symmetry_profile(self, capsys):
        code, out, _ = run(capsys, "symmetry", "z^3 + z^7")
        assert code == 0
        assert json.loads(out)["maximal_m"] == 4

    def test_commute_negative(self, capsys):
        code, out, _ = run(capsys, "commute", "2*z^2", "5*z^3")
        assert code == 2
        body = json.loads(out)
        assert body["check"] == "direct" and body["commute"] is False

    def test_monomialize(self, capsys):
        code, out, _ = run(capsys, "monomialize", "2*z^2", "4*z^3")
        assert code == 0
        assert [im["m"] for im in json.loads(out)["images"]] == [2, 3]

    def test_probe_bounds(self, capsys):
        # "--" keeps the leading minus of the second series out of the
        # option parser
        code, out, _ = run(
            capsys, "probe", "--bounds", "2", "2", "--", "z^2", "-z^2"
        )
        assert code == 0
        assert json.loads(out)["reversible"] is True

    def test_selftest_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "--seed", "3", "selftest", "--rounds", "2")
        code2, out2, _ = run(capsys, "--seed", "3", "selftest", "--rounds", "2")
        assert code1 == code2 == 0
        assert out1 == out2


class TestInputForms:
    def test_json_file(self, capsys, tmp_path, exact):
        from fpscomp import parse_series

        path = tmp_path / "a.json"
        path.write_text(json.dumps(parse_series(exact, "z^2 + z^3", 12).to_json()))
        code, out, _ = run(capsys, "boettcher", f"@{path}")
        assert code == 0
        assert json.loads(out)["n"] == 2

    def test_inline_json(self, capsys, exact):
        from fpscomp import parse_series

        blob = json.dumps(parse_series(exact, "z^2", 8).to_json())
        code, out, _ = run(capsys, "boettcher", blob)
        assert code == 0

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "boettcher", "@/no/such/file.json")
        assert code == 1 and "error" in err

    def test_pretty_output(self, capsys):
        code, out, _ = run(capsys, "--output", "pretty", "boettcher", "2*z^2")
        assert code == 0
        body = json.loads(out)
        assert body["beta"] == "1/2*z (mod z^32)"

    def test_approx_field(self, capsys):
        code, out, _ = run(
            capsys, "--field", "approx", "boettcher", "z^2 + z^3"
        )
        assert code == 0
        assert json.loads(out)["residual_ok"] is True
