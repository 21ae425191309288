from cliquesplit import parse_dimacs, parse_qubo
from cliquesplit.cli import main

K4_TEXT = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_gnp(self, tmp_path, capsys):
        out = tmp_path / "g.clq"
        code, _, _ = run_cli(["gen", "gnp", "--n", "20", "--p", "0.5", "--seed", "1",
                              "--out", str(out)], capsys)
        assert code == 0
        g = parse_dimacs(out.read_text())
        assert g.num_vertices == 20

    def test_chimera_to_stdout(self, capsys):
        code, out, _ = run_cli(["gen", "chimera", "--rows", "1", "--cols", "1", "--shore", "4"], capsys)
        assert code == 0
        g = parse_dimacs(out)
        assert (g.num_vertices, g.num_edges) == (8, 16)

    def test_cm(self, capsys):
        code, out, _ = run_cli(["gen", "cm", "--contractions", "152", "--seed", "0"], capsys)
        assert code == 0
        assert parse_dimacs(out).num_vertices == 1000

    def test_hamming(self, capsys):
        code, out, _ = run_cli(["gen", "hamming", "--word-length", "3", "--min-distance", "3"], capsys)
        assert code == 0
        assert parse_dimacs(out).num_edges == 4

    def test_usage_error_exit_code(self, capsys):
        assert main(["gen", "gnp", "--n", "not-a-number", "--p", "0.5"]) == 1


class TestReduce:
    def test_k_core(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text("p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")  # path P5
        code, out, err = run_cli(["reduce", str(src), "--k", "2"], capsys)
        assert code == 0
        assert parse_dimacs(out).num_vertices == 0
        assert "removed_vertices=5" in err

    def test_lower_bound_mode(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text(K4_TEXT)
        code, out, err = run_cli(
            ["reduce", str(src), "--lower-bound", "2", "--seed", "3"], capsys
        )
        assert code == 0
        assert parse_dimacs(out).num_vertices == 4
        assert "removed_vertices=0" in err

    def test_missing_file(self, capsys):
        assert main(["reduce", "nope.clq", "--k", "2"]) == 1


class TestSplit:
    def test_csv_row(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text(K4_TEXT)
        code, out, _ = run_cli(
            ["split", str(src), "--vertex-limit", "2", "--solver", "exact", "--seed", "1"],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "graph,n,m,vertex_limit,solver_calls,clique_size,wall_time_s"
        fields = lines[1].split(",")
        assert fields[1:4] == ["4", "6", "2"]
        assert fields[5] == "4"

    def test_parallel_flag(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text(K4_TEXT)
        code, out, _ = run_cli(
            ["split", str(src), "--vertex-limit", "3", "--parallel", "2"], capsys
        )
        assert code == 0
        assert out.strip().splitlines()[1].split(",")[5] == "4"


class TestSolve:
    def test_exact(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text(K4_TEXT)
        code, out, _ = run_cli(["solve", str(src), "--solver", "exact"], capsys)
        assert code == 0
        assert "clique_size=4" in out
        assert "vertices=0 1 2 3" in out

    def test_qubo_backend_prints_energy(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text(K4_TEXT)
        code, out, _ = run_cli(["solve", str(src), "--solver", "sa-qubo", "--seed", "2"], capsys)
        assert code == 0
        assert "energy=-4" in out

    def test_budget_exhaustion_is_solver_failure(self, tmp_path, capsys):
        src = tmp_path / "g.clq"
        from cliquesplit import gnp_random, write_dimacs

        src.write_text(write_dimacs(gnp_random(40, 0.6, 3)))
        code, _, err = run_cli(
            ["solve", str(src), "--solver", "exact", "--budget", "1"], capsys
        )
        assert code == 2
        assert "solver failure" in err


class TestQuboAndCapacity:
    def test_qubo_emission(self, tmp_path, capsys):
        src = tmp_path / "in.clq"
        src.write_text("p edge 3 2\ne 1 2\ne 2 3\n")
        code, out, _ = run_cli(["qubo", "--from-graph", str(src)], capsys)
        assert code == 0
        q = parse_qubo(out)
        assert q.num_variables == 3
        assert q.quadratic == {(0, 2): 2.0}

    def test_capacity(self, capsys):
        code, out, _ = run_cli(["capacity", "--qubits", "1152"], capsys)
        assert code == 0
        assert out.strip() == "49"


class TestBench:
    def test_config_run(self, tmp_path, capsys):
        import csv as csv_mod

        cfg = tmp_path / "exp.cfg"
        cfg.write_text(
            "experiment = demo\ngraph = gnp\nn = 20\np = 0.4\n"
            "vertex_limit = 10\nseeds = 1,2\n"
        )
        out_file = tmp_path / "res.csv"
        code, _, _ = run_cli(["bench", str(cfg), "--out", str(out_file)], capsys)
        assert code == 0
        rows = list(csv_mod.reader(out_file.open()))
        assert len(rows) == 4  # header + 2 runs + median
        assert rows[1][:3] == ["demo", "gnp(n=20,p=0.4)", "20"]

    def test_seed_flag_overrides(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("graph = gnp\nn = 15\np = 0.3\nvertex_limit = 10\nseeds = 1,2,3\n")
        code, out, _ = run_cli(["bench", str(cfg), "--seed", "9"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3  # header + 1 run + median
        assert ",9," in lines[1]

    def test_bad_config_is_usage_error(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("nonsense = 1\n")
        assert main(["bench", str(cfg)]) == 1
