import json

from lielike.cli import main
from lielike.serialize import algebra_to_json, dumps, instance_to_json
from lielike import OrdinaryModule, adjoint
from lielike.linalg import Matrix


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr().out
    return code, out


def write_instance(tmp_path, L, M, name="inst.json"):
    path = tmp_path / name
    path.write_text(dumps(instance_to_json(L, M)))
    return str(path)


def write_algebra(tmp_path, L, name="alg.json"):
    path = tmp_path / name
    path.write_text(dumps(algebra_to_json(L)))
    return str(path)


class TestHappyPaths:
    def test_full_pipeline_on_generated_file(self, tmp_path, capsys):
        out_file = str(tmp_path / "gen.json")
        code, _ = run(
            capsys,
            "generate",
            "--construction",
            "graded-nilpotent",
            "--dim",
            "3",
            "--s",
            "2",
            "--seed",
            "1",
            "-o",
            out_file,
        )
        assert code == 0
        for cmd in (
            "check-algebra",
            "check-module",
            "derived",
            "annihilator",
            "solve",
            "oracle",
            "verify",
        ):
            code, _ = run(capsys, cmd, out_file)
            assert code == 0, cmd

    def test_json_flag_emits_canonical_json(self, tmp_path, capsys, leib2):
        path = write_instance(tmp_path, leib2, adjoint(leib2))
        code, out = run(capsys, "solve", path, "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["v"] == ["1", "0"]
        assert payload["dichotomy"] == "both"

    def test_derived_on_bare_algebra_file(self, tmp_path, capsys, leib2):
        path = write_algebra(tmp_path, leib2)
        code, out = run(capsys, "derived", path, "--json")
        assert code == 0
        assert json.loads(out)["dims"] == [2, 1, 0]

    def test_annihilator(self, tmp_path, capsys, nt3):
        path = write_instance(tmp_path, nt3, adjoint(nt3))
        code, out = run(capsys, "annihilator", path, "--json")
        assert code == 0
        assert json.loads(out)["dim"] == 2

    def test_adjoint_writes_instance(self, tmp_path, capsys, nt3):
        alg = write_algebra(tmp_path, nt3)
        out_file = str(tmp_path / "adj.json")
        code, _ = run(capsys, "adjoint", alg, "-o", out_file)
        assert code == 0
        code, _ = run(capsys, "verify", out_file)
        assert code == 0

    def test_oracle_reports_entries(self, tmp_path, capsys, leib2):
        path = write_instance(tmp_path, leib2, adjoint(leib2))
        code, out = run(capsys, "oracle", path, "--json")
        assert code == 0
        entries = json.loads(out)["entries"]
        assert len(entries) == 1 and entries[0]["dim"] == 1


class TestViolationExits:
    def test_check_algebra_failure(self, tmp_path, capsys):
        obj = {
            "dim": 1,
            "s": 1,
            "c": [[[["1"]]]],  # <e1,e1> = e1 violates the bracket identity
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, out = run(capsys, "check-algebra", str(path), "--json")
        assert code == 1
        assert not json.loads(out)["ok"]

    def test_verify_failure_on_perturbed_module(self, tmp_path, capsys, leib2):
        M = adjoint(leib2)
        rows = [list(r) for r in M.G[0][1].rows]
        rows[1][1] += 1
        bad = OrdinaryModule(
            leib2, 2, M.F, ((M.G[0][0], Matrix(rows)),)
        )
        path = write_instance(tmp_path, leib2, bad)
        code, _ = run(capsys, "verify", path)
        assert code == 1
        code, _ = run(capsys, "check-module", path)
        assert code == 1


class TestInvalidExits:
    def test_truncated_json(self, tmp_path, capsys):
        path = tmp_path / "trunc.json"
        path.write_text('{"algebra": {"dim": 2, ')
        code, _ = run(capsys, "verify", str(path))
        assert code == 2

    def test_missing_file(self, tmp_path, capsys):
        code, _ = run(capsys, "derived", str(tmp_path / "nope.json"))
        assert code == 2

    def test_wrong_shape(self, tmp_path, capsys):
        path = tmp_path / "shape.json"
        path.write_text(json.dumps({"dim": 2, "s": 1, "c": [[[["1"]]]]}))
        code, _ = run(capsys, "check-algebra", str(path))
        assert code == 2

    def test_generate_rejects_bad_spec(self, capsys):
        code, _ = run(
            capsys,
            "generate",
            "--construction",
            "abelian",
            "--dim",
            "2",
            "--s",
            "0",
            "--seed",
            "0",
        )
        assert code == 2

    def test_solve_irrational_spectrum(self, tmp_path, capsys):
        from fractions import Fraction as F

        from lielike import LieLikeAlgebra

        L = LieLikeAlgebra.from_constants(1, 1, {})
        op = Matrix([[F(1), F(1)], [F(1), F(0)]])
        M = OrdinaryModule(L, 2, ((op,),), ((op,),))
        path = write_instance(tmp_path, L, M)
        code, _ = run(capsys, "solve", path)
        assert code == 2
        code, _ = run(capsys, "oracle", path)
        assert code == 2


class TestDeterminism:
    def test_generate_is_byte_identical(self, tmp_path, capsys):
        files = []
        for name in ("a.json", "b.json"):
            out_file = str(tmp_path / name)
            code, _ = run(
                capsys,
                "generate",
                "--construction",
                "basis-changed",
                "--dim",
                "4",
                "--s",
                "2",
                "--seed",
                "11",
                "-o",
                out_file,
            )
            assert code == 0
            files.append(out_file)
        a, b = (open(f, "rb").read() for f in files)
        assert a == b

    def test_solve_output_is_byte_identical(self, tmp_path, capsys, nt3):
        path = write_instance(tmp_path, nt3, adjoint(nt3))
        outs = {run(capsys, "solve", path, "--json")[1] for _ in range(3)}
        assert len(outs) == 1
