import io

import pytest

import spherig as sp
from spherig.cli import main
from spherig.textio import format_facets, parse_facets


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def feed(monkeypatch, text: str) -> None:
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


class TestGen:
    def test_gen_cross_polytope(self, capsys):
        code, out, _ = run(capsys, "gen", "cross-polytope", "4")
        assert code == 0
        assert parse_facets(out) == sp.cross_polytope(4)

    def test_gen_cyclic_takes_n_then_d(self, capsys):
        code, out, _ = run(capsys, "gen", "cyclic", "7", "4")
        assert code == 0
        assert parse_facets(out) == sp.cyclic_polytope_boundary(7, 4)

    def test_wrong_arity_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "gen", "join-spheres", "2")
        assert code == 2
        assert "p q" in err

    def test_bad_parameter_reports_error(self, capsys):
        code, _, err = run(capsys, "gen", "cross-polytope", "1")
        assert code == 2
        assert err.startswith("error:")


class TestQueries:
    def test_g2_from_stdin(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        code, out, _ = run(capsys, "g2")
        assert (code, out.strip()) == (0, "2")

    def test_g2_from_file(self, capsys, tmp_path):
        path = tmp_path / "sphere.txt"
        path.write_text(format_facets(sp.join_spheres(2, 2)))
        code, out, _ = run(capsys, "g2", str(path))
        assert (code, out.strip()) == (0, "1")

    def test_prime_exit_codes(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        assert run(capsys, "prime")[0] == 0
        stacked = sp.stack_over_facet(sp.cross_polytope(4), (1, 3, 5, 7), 9)
        feed(monkeypatch, format_facets(stacked))
        code, out, _ = run(capsys, "prime")
        assert code == 1
        assert out.strip() == "not prime"

    def test_missing_faces_output(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.cross_polytope(3)))
        code, out, _ = run(capsys, "missing-faces")
        assert code == 0
        assert out.splitlines() == ["1 2", "3 4", "5 6"]

    def test_contract_pipes_facets(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.boundary_simplex(3)))
        code, out, _ = run(capsys, "contract", "1", "2")
        assert code == 0
        assert parse_facets(out) == sp.boundary_simplex(3).contract_edge((1, 2), 5)

    def test_malformed_input_is_error_2(self, capsys, monkeypatch):
        feed(monkeypatch, "1 2\n2 zzz\n")
        code, _, err = run(capsys, "g2")
        assert code == 2
        assert "line 2" in err

    def test_missing_file_is_error_2(self, capsys):
        code, _, err = run(capsys, "g2", "/nonexistent/sphere.txt")
        assert code == 2


class TestRigid:
    def test_rigid_sphere(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        code, out, _ = run(capsys, "rigid", "--dim", "4", "--seed", "3")
        assert code == 0
        assert "rigid=true" in out
        assert "rank=22" in out and "target=22" in out and "stress=2" in out

    def test_minus_edge_stays_rigid(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        code, out, _ = run(capsys, "rigid", "--dim", "4", "--minus-edge", "1,3", "--seed", "3")
        assert code == 0
        assert "rank=22" in out and "stress=1" in out

    def test_flexible_graph_exits_1(self, capsys, monkeypatch):
        stacked = sp.stack_over_facet(sp.boundary_simplex(4), (1, 2, 3, 4), 6)
        feed(monkeypatch, format_facets(stacked))
        code, out, _ = run(capsys, "rigid", "--dim", "4", "--minus-edge", "1,6", "--seed", "3")
        assert code == 1
        assert "rigid=false" in out

    def test_seed_env_var_is_the_default(self, capsys, monkeypatch):
        monkeypatch.setenv("SPHERIG_SEED", "77")
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        _, from_env, _ = run(capsys, "rigid", "--dim", "4")
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        _, from_flag, _ = run(capsys, "rigid", "--dim", "4", "--seed", "77")
        assert from_env == from_flag
        assert "seed=77" in from_env


class TestDecompose:
    def test_prime_input_is_one_factor(self, capsys, monkeypatch):
        feed(monkeypatch, format_facets(sp.cross_polytope(4)))
        code, out, _ = run(capsys, "decompose")
        assert code == 0
        assert out.startswith("# factor 0")
        assert parse_facets(out) == sp.cross_polytope(4)

    def test_sum_splits_into_two(self, capsys, monkeypatch):
        summed = sp.connected_sum(
            sp.cross_polytope(4), (1, 3, 5, 7), sp.cross_polytope(4), (1, 3, 5, 7)
        )
        feed(monkeypatch, format_facets(summed))
        code, out, _ = run(capsys, "decompose")
        assert code == 0
        assert out.count("# factor") == 2


class TestVerify:
    CONFIG = "families = cross-polytope, negative-control\ndims = 4\ntrials = 1\nseed = 11\n"

    def test_verify_passes_and_reports(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(self.CONFIG)
        code, out, _ = run(capsys, "verify", "--config", str(cfg))
        assert code == 0
        assert "total:" in out
        assert " 0 fail" in out

    def test_machine_output_is_byte_identical_across_runs(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(self.CONFIG)
        first, second = tmp_path / "a.tsv", tmp_path / "b.tsv"
        assert run(capsys, "verify", "--config", str(cfg), "--machine", str(first))[0] == 0
        assert run(capsys, "verify", "--config", str(cfg), "--machine", str(second))[0] == 0
        assert first.read_bytes() == second.read_bytes()

    def test_machine_dash_prints_tsv(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(self.CONFIG)
        code, out, _ = run(capsys, "verify", "--config", str(cfg), "--machine", "-")
        assert code == 0
        line = out.splitlines()[0]
        assert len(line.split("\t")) == 6

    def test_seed_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(self.CONFIG)
        _, base, _ = run(capsys, "verify", "--config", str(cfg), "--machine", "-")
        _, reseeded, _ = run(capsys, "verify", "--config", str(cfg), "--seed", "99", "--machine", "-")
        assert base != reseeded

    def test_unknown_family_in_config_is_error_2(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text("families = foo\n")
        code, _, err = run(capsys, "verify", "--config", str(cfg))
        assert code == 2
        assert "unknown family" in err
