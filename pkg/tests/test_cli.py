"""CLI behaviour: exit codes, output shapes, --json, mutation sanity."""

import json

from screwinv import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPoly:
    def test_format(self, capsys):
        code, out, _ = run(capsys, "poly", "w12*v12 + w11*v11 + w13*v13", "--screws", "1")
        assert code == 0
        assert out.strip() == "w11*v11 + w12*v12 + w13*v13"

    def test_eval(self, capsys):
        code, out, _ = run(
            capsys, "poly", "w11*v11", "--screws", "1", "--eval", "w11=2, v11=3/2"
        )
        assert code == 0 and out.strip() == "3"

    def test_parse_error_exits_1(self, capsys):
        code, _, err = run(capsys, "poly", "w11 + $", "--screws", "1")
        assert code == 1 and "error" in err

    def test_unknown_variable_exits_1(self, capsys):
        code, _, err = run(capsys, "poly", "bogus", "--screws", "1")
        assert code == 1 and "bogus" in err

    def test_missing_context_exits_1(self, capsys):
        code, _, err = run(capsys, "poly", "w11")
        assert code == 1

    def test_explicit_vars_and_order(self, capsys):
        code, out, _ = run(
            capsys, "poly", "x + y", "--vars", "x y", "--order", "y x"
        )
        assert code == 0 and out.strip() == "y + x"


class TestSagbi:
    def test_pullback_to_basis(self, capsys, tmp_path):
        code, out, _ = run(capsys, "catalog", "--screws", "1", "--which", "pullback")
        assert code == 0
        seed_file = tmp_path / "seed.txt"
        seed_file.write_text(out)
        code, out, _ = run(
            capsys, "sagbi", str(seed_file), "--eliminate", "t1,t2,t3"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("order: lex")
        assert "complete: true" in lines
        polys = [l for l in lines if l and ":" not in l]
        assert polys == ["w11", "w12", "w13", "w11*v11 + w12*v12 + w13*v13"]
        # the sagbi output must itself be a readable basis file
        basis_file = tmp_path / "basis.txt"
        basis_file.write_text(out)
        code, out, _ = run(
            capsys, "subduct", "--basis", str(basis_file),
            "--poly", "w12*w11*v11 + w12^2*v12 + w12*w13*v13",
        )
        assert code == 0 and "member: yes" in out

    def test_incomplete_exits_2_with_partial_basis(self, capsys, tmp_path):
        seed_file = tmp_path / "chain.txt"
        seed_file.write_text("order: lex x y\nx + y\nx*y\nx*y^2\n")
        code, out, _ = run(capsys, "sagbi", str(seed_file), "--max-iter", "1")
        assert code == 2
        assert "complete: false" in out
        assert any(line.startswith("x*y^3") for line in out.splitlines())

    def test_bad_file_exits_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("order: lex x\nx + $\n")
        code, _, err = run(capsys, "sagbi", str(bad))
        assert code == 1 and "line 2" in err


class TestSubduct:
    def test_generator_against_own_basis(self, capsys, tmp_path):
        basis = tmp_path / "basis.txt"
        basis.write_text(
            "order: lex w11 w12 w13 v11 v12 v13\n"
            "w11^2 + w12^2 + w13^2\n"
            "w11*v11 + w12*v12 + w13*v13\n"
        )
        code, out, _ = run(
            capsys, "subduct", "--basis", str(basis), "--poly", "w11*v11 + w12*v12 + w13*v13"
        )
        assert code == 0
        assert "remainder: 0" in out
        assert "member: yes" in out
        assert "g2" in out

    def test_nonmember(self, capsys, tmp_path):
        basis = tmp_path / "basis.txt"
        basis.write_text("order: lex x y\nx\n")
        code, out, _ = run(capsys, "subduct", "--basis", str(basis), "--poly", "y")
        assert code == 0 and "member: no" in out


class TestInvariance:
    def test_symbolic_pass(self, capsys):
        code, out, _ = run(
            capsys,
            "invariance", "--poly", "w11*v11 + w12*v12 + w13*v13",
            "--group", "se3", "--screws", "1",
        )
        assert code == 0 and out.startswith("PASS")

    def test_sample_fail_shows_counterexample(self, capsys):
        code, out, _ = run(
            capsys,
            "invariance", "--poly", "w11", "--group", "se3", "--screws", "1",
            "--mode", "sample",
        )
        assert code == 3
        assert "FAIL" in out and "q:" in out and "t:" in out

    def test_bracket_sum_symbolic(self, capsys):
        zsum = (
            "v11*w22*w33 - v11*w23*w32 - v21*w12*w33 + v21*w13*w32"
            " + v31*w12*w23 - v31*w13*w22"
        )
        code, out, _ = run(
            capsys, "invariance", "--poly", zsum, "--group", "t3", "--screws", "3"
        )
        assert code == 0

    def test_json_shape(self, capsys):
        code, out, _ = run(
            capsys, "--json",
            "invariance", "--poly", "w11^2 + w12^2 + w13^2",
            "--group", "so3", "--screws", "1",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["command"] == "invariance"
        assert obj["pass"] is True
        assert obj["items"][0]["invariant"] is True


class TestCatalog:
    def test_se3_two_screws(self, capsys):
        code, out, _ = run(capsys, "catalog", "--screws", "2", "--which", "se3")
        assert code == 0
        lines = [l for l in out.splitlines() if l and not l.startswith("#")]
        assert len(lines) == 6
        assert any("# mixed_12" in l for l in lines)

    def test_t3_three_screws_reports_unknown_completeness(self, capsys):
        code, out, _ = run(capsys, "catalog", "--screws", "3", "--which", "t3")
        assert code == 0
        assert "# completeness: unknown" in out
        lines = [l for l in out.splitlines() if l and not l.startswith("#")]
        assert len(lines) == 21

    def test_se3_three_screws_flags_conjecture(self, capsys):
        code, out, _ = run(capsys, "--json", "catalog", "--screws", "3", "--which", "se3")
        obj = json.loads(out)
        assert obj["items"][0]["conjectural"] is True
        assert len(obj["items"][0]["entries"]) == 14


class TestDh:
    def test_example_pair(self, capsys, tmp_path):
        pair = tmp_path / "pair.txt"
        pair.write_text("0 0 1 0 0 0\n0 3/5 4/5 0 -8/5 6/5\n")
        code, out, _ = run(capsys, "dh", "--pair", str(pair))
        assert code == 0
        assert "cos_alpha: 4/5 / sqrt(1)" in out
        assert "d_sin_alpha: 6/5 / sqrt(1)" in out
        assert "= 2" in out

    def test_wrong_count_exits_1(self, capsys, tmp_path):
        pair = tmp_path / "pair.txt"
        pair.write_text("0 0 1 0 0 0\n")
        code, _, err = run(capsys, "dh", "--pair", str(pair))
        assert code == 1


class TestVerify:
    def test_unknown_suite_exits_1(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "everything")
        assert code == 1

    def test_mutated_z_poly_fails_bracket_item(self, monkeypatch):
        # inject a sign error and watch the bracket-sum identity item fail
        import screwinv.screw as screw_mod
        from screwinv.verification import check_bracket_sum_identity

        original = screw_mod.z_poly

        def flipped(i, j, k):
            return -original(i, j, k)

        monkeypatch.setattr(screw_mod, "z_poly", flipped)
        item = check_bracket_sum_identity()
        assert not item.passed

    def test_full_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paper")
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
        assert len(lines) == 10
        assert all(l.startswith("PASS") for l in lines)

    def test_json_verify_shape(self, capsys):
        code, out, _ = run(capsys, "--json", "verify", "--suite", "paper")
        assert code == 0
        obj = json.loads(out)
        assert obj["command"] == "verify" and obj["pass"] is True
        assert len(obj["items"]) == 10
        assert all(item["passed"] for item in obj["items"])

    def test_json_flag_accepted_after_subcommand(self, capsys):
        code, out, _ = run(capsys, "catalog", "--screws", "1", "--which", "se3", "--json")
        assert code == 0
        assert json.loads(out)["command"] == "catalog"


class TestUsage:
    def test_no_command_exits_1(self, capsys):
        code = cli.main([])
        assert code == 1

    def test_bad_flag_exits_1(self, capsys):
        code = cli.main(["catalog", "--screws", "2", "--which", "everything"])
        assert code == 1
