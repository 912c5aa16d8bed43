"""
Tests for the command-line interface.
"""

import json
from pathlib import Path

from actorkit.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, render_text, run

DATA = Path(__file__).parent / "data"


class TestCLI:
    """Test cases for the actorkit command line."""

    def _json(self, capsys, argv):
        status = run(argv + ["--format", "json"])
        return status, json.loads(capsys.readouterr().out)

    def test_actor_compute_octonions(self, capsys):
        status, report = self._json(capsys, ["actor", "compute", "--algebra", "octonions", "--preset", "alt"])
        assert status == EXIT_OK
        assert report["dimension"] == 8
        assert len(report["basis"]) == 8

    def test_actor_compute_text(self, capsys):
        assert run(["actor", "compute", "--algebra", "F"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "dim E(F) = 1"
        assert "dimension: 1" in out

    def test_actor_compute_from_files(self, capsys):
        argv = ["actor", "compute", "--algebra", str(DATA / "dual_gf5.json"), "--variety", str(DATA / "assoc_variety.json")]
        status, report = self._json(capsys, argv)
        assert status == EXIT_OK
        assert report["dimension"] == 2
        assert report["variety"] == "my-assoc"

    def test_actor_inn(self, capsys):
        status, report = self._json(capsys, ["actor", "inn", "--algebra", "abelian2"])
        assert status == EXIT_OK
        assert report["image_dim"] == 0

    def test_actor_product(self, capsys):
        argv = ["actor", "product", "--algebra", "M2", "--left", "0", "--right", "0"]
        status, report = self._json(capsys, argv)
        assert status == EXIT_OK
        assert report["defined"] is True

    def test_verify_assoc(self, capsys):
        assert run(["verify", "thm-assoc1", "--algebra", "M2"]) == EXIT_OK
        assert "thm-assoc1: PASS" in capsys.readouterr().out

    def test_verify_failure(self, capsys):
        assert run(["verify", "thm-assoc1", "--algebra", "abelian2"]) == EXIT_FAIL
        assert "thm-assoc1: FAIL" in capsys.readouterr().out

    def test_verify_bijection(self, capsys):
        argv = ["verify", "bijection", "--B", "idempotent-line", "--X", "F", "--variety", "cassoc", "--field", "GF2"]
        assert run(argv) == EXIT_OK
        assert "2 = 2: PASS" in capsys.readouterr().out

    def test_verify_poisson_needs_unit(self, capsys):
        assert run(["verify", "thm-pois", "--algebra", str(DATA / "lie2_poisson.json")]) == EXIT_FAIL
        assert "not unital" in capsys.readouterr().err

    def test_usga_and_center(self, capsys):
        status, report = self._json(capsys, ["usga", "compute", "--algebra", "M2-poisson"])
        assert status == EXIT_OK
        assert report["dimension"] == 1
        assert report["closed"] is True
        status, report = self._json(capsys, ["center", "--algebra", "M2-poisson"])
        assert status == EXIT_OK
        assert report["center_dim"] == 1

    def test_semidirect(self, capsys):
        argv = ["semidirect", "--B", "F", "--X", "M2", "--morphism", str(DATA / "unit_morphism.json")]
        status, report = self._json(capsys, argv)
        assert status == EXIT_OK
        assert report["round_trip"] is True
        assert report["algebra"]["dim"] == 5

    def test_semidirect_poisson(self, capsys):
        """Test a morphism file with bracket blocks; two products default to pois."""
        lie2 = str(DATA / "lie2_poisson.json")
        argv = ["semidirect", "--B", lie2, "--X", lie2, "--morphism", str(DATA / "lie2_inner_morphism.json")]
        status, report = self._json(capsys, argv)
        assert status == EXIT_OK
        assert report["variety"] == "pois"
        assert report["round_trip"] is True
        assert report["algebra"]["dim"] == 4
        assert report["algebra"]["basis"] == ["b_u", "b_v", "x_u", "x_v"]

    def test_varieties(self, capsys):
        status, report = self._json(capsys, ["varieties"])
        assert status == EXIT_OK
        assert len(report["presets"]) == 8
        assert sorted(report["actor_kinds"]["center"]) == ["cpois", "pois"]

    def test_status(self, capsys):
        status, report = self._json(capsys, ["status", "--budget", "99"])
        assert status == EXIT_OK
        assert report["budget"] == 99
        assert report["varieties"] == 8

    def test_enumerate(self, capsys):
        argv = ["enumerate", "--B", "nilpotent-line", "--X", "F", "--preset", "assoc", "--field", "GF2"]
        status, report = self._json(capsys, argv)
        assert status == EXIT_OK
        assert report["split_extensions"] == 1

    def test_budget_exceeded(self, capsys):
        argv = ["enumerate", "--B", "F", "--X", "F", "--preset", "assoc", "--field", "GF3", "--budget", "8"]
        assert run(argv) == EXIT_FAIL
        assert "budget" in capsys.readouterr().err

    def test_validate(self, capsys):
        assert run(["validate", "--algebra", "M2", "--preset", "assoc"]) == EXIT_OK
        assert run(["validate", "--algebra", "M2", "--preset", "cassoc"]) == EXIT_FAIL
        assert "INVALID" in capsys.readouterr().out

    def test_validate_bad_file(self, capsys):
        assert run(["validate", "--algebra", str(DATA / "out_of_range.json")]) == EXIT_FAIL
        assert "Error" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert run(["actor", "compute", "--algebra", str(DATA / "missing.json")]) == EXIT_FAIL
        assert "file not found" in capsys.readouterr().err

    def test_usage_errors(self, capsys):
        assert run([]) == EXIT_USAGE
        assert run(["bogus"]) == EXIT_USAGE
        assert run(["actor", "compute"]) == EXIT_USAGE
        assert run(["actor", "compute", "--algebra", "F", "--colour", "red"]) == EXIT_USAGE
        assert run(["actor", "compute", "--algebra", "F", "--field", "GF4"]) == EXIT_USAGE
        assert run(["verify", "thm-assoc1", "--variety", "assoc", "--preset", "assoc", "--algebra", "F"]) == EXIT_USAGE

    def test_deterministic_reports(self, capsys):
        """Test that repeated runs print byte-identical JSON."""
        argv = ["verify", "thm-alt", "--algebra", "octonions", "--format", "json"]
        outputs = []
        for _ in range(2):
            assert run(argv) == EXIT_OK
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]

    def test_trace_file(self, tmp_path, capsys):
        trace = tmp_path / "trace.json"
        assert run(["verify", "thm-assoc1", "--algebra", "F", "--trace", str(trace)]) == EXIT_OK
        entries = json.loads(trace.read_text(encoding="utf-8"))
        assert entries[0]["step"] == "verification_started"
        assert entries[-1]["details"]["step_type"] == "verdict"

    def test_parser(self):
        args = build_parser().parse_args(["verify", "eq2", "--algebra", "abelian2"])
        assert args.theorem == "eq2"
        assert args.format == "text"

    def test_render_text(self):
        lines = render_text({"b": [1, 2], "a": {"c": True}})
        assert lines == ["a:", "  c: True", "b:", "  1 2"]
