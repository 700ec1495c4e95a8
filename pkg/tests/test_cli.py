import subprocess
import sys

import pytest

from tcover import parse_graph, serialize_graph
from tcover.cli import main
from tcover.instances import complete, hard_instance, star


@pytest.fixture
def hard4(tmp_path):
    target = tmp_path / "hard4.gr"
    target.write_text(serialize_graph(hard_instance(4)))
    return str(target)


@pytest.fixture
def k3(tmp_path):
    target = tmp_path / "k3.gr"
    target.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")
    return str(target)


def test_solve_reports_certificate(hard4, capsys):
    assert main(["solve", hard4]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "size=4 m=4 k=0 t=0 lb=2 ratio=2.0000"


def test_solve_k2(tmp_path, capsys):
    graph = tmp_path / "k2.gr"
    graph.write_text("p edge 2 1\ne 1 2\n")
    assert main(["solve", str(graph)]) == 0
    assert "size=1 m=1 k=0 t=0 lb=1 ratio=1.0000" in capsys.readouterr().out


def test_solve_empty_graph(tmp_path, capsys):
    graph = tmp_path / "empty.gr"
    graph.write_text("p edge 0 0\n")
    assert main(["solve", str(graph)]) == 0
    assert "size=0" in capsys.readouterr().out


def test_solve_trace_lines(hard4, capsys):
    assert main(["solve", hard4, "--trace"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1:] == [
        "3 endpoint v 2",
        "3 matching-edge e 3 7",
        "3 matching-edge e 4 8",
        "3 matching-edge e 5 9",
    ]


def test_solve_writes_cover_that_verifies(hard4, tmp_path, capsys):
    cover = tmp_path / "out.cover"
    assert main(["solve", hard4, "--output", str(cover)]) == 0
    assert main(["verify", hard4, "--cover", str(cover)]) == 0
    assert "VALID size=4" in capsys.readouterr().out


def test_solve_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.gr"
    bad.write_text("p edge 2 1\nq 1 2\n")
    assert main(["solve", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_solve_missing_file(tmp_path):
    assert main(["solve", str(tmp_path / "nope.gr")]) == 2


def test_exact_reports_optimum(hard4, capsys):
    assert main(["exact", hard4, "--max-elements", "64"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("size=3")
    assert out[1:] == ["v 1", "e 6 7", "e 8 9"]


def test_exact_start_at_lower_bound(k3, capsys):
    assert main(["exact", k3, "--start-at-lower-bound"]) == 0
    assert capsys.readouterr().out.startswith("size=2")


def test_exact_guard_exit(tmp_path):
    big = tmp_path / "k20.gr"
    big.write_text(serialize_graph(complete(20)))
    assert main(["exact", str(big)]) == 4


def test_exact_budget_exit(k3):
    assert main(["exact", k3, "--max-candidates", "3"]) == 5


def test_baseline_matched_vertices(hard4, capsys):
    assert main(["baseline", hard4, "--method", "matched-vertices"]) == 0
    assert capsys.readouterr().out.strip() == "size=8 valid=true"


def test_baseline_greedy_domination(tmp_path, capsys):
    graph = tmp_path / "star10.gr"
    graph.write_text(serialize_graph(star(10)))
    assert main(["baseline", str(graph), "--method", "greedy-domination"]) == 0
    out = capsys.readouterr().out
    size = int(out.split()[0].split("=")[1])
    assert size <= 2


def test_baseline_isolated_vertices(tmp_path, capsys):
    graph = tmp_path / "iso3.gr"
    graph.write_text("p edge 3 0\n")
    assert main(["baseline", str(graph), "--method", "matched-vertices"]) == 0
    assert "size=3" in capsys.readouterr().out


def test_baseline_maximal_mode(hard4, capsys):
    assert main(["baseline", hard4, "--method", "matched-vertices",
                 "--matching", "maximal"]) == 0
    assert "valid=true" in capsys.readouterr().out


def test_verify_invalid_cover(k3, tmp_path, capsys):
    cover = tmp_path / "cover.txt"
    cover.write_text("v 1\n")
    assert main(["verify", k3, "--cover", str(cover)]) == 1
    assert "INVALID witness=edge (2,3)" in capsys.readouterr().out


def test_verify_valid_pair(k3, tmp_path, capsys):
    cover = tmp_path / "cover.txt"
    cover.write_text("v 1\ne 2 3\n")
    assert main(["verify", k3, "--cover", str(cover)]) == 0
    assert "VALID size=2" in capsys.readouterr().out


def test_verify_cover_parse_error(k3, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("e 1 9\n")
    assert main(["verify", k3, "--cover", str(cover)]) == 2


def test_gen_writes_header(tmp_path, capsys):
    out = tmp_path / "f4.gr"
    assert main(["gen", "figure1", "--n", "4", "-o", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "n=9 edges=10"
    assert out.read_text().splitlines()[0] == "p edge 9 10"


def test_gen_stdout(capsys):
    assert main(["gen", "path", "--n", "3"]) == 0
    assert capsys.readouterr().out == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_gen_odd_parameter_exit(capsys):
    assert main(["gen", "figure1", "--n", "3"]) == 2
    assert "even" in capsys.readouterr().err


def test_gen_gnp_deterministic(tmp_path):
    a, b = tmp_path / "a.gr", tmp_path / "b.gr"
    assert main(["gen", "gnp", "--n", "10", "--p", "0.3", "--seed", "42", "-o", str(a)]) == 0
    assert main(["gen", "gnp", "--n", "10", "--p", "0.3", "--seed", "42", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_gnp_requires_p_and_seed(capsys):
    assert main(["gen", "gnp", "--n", "5"]) == 2


def test_gen_isolated_flag(tmp_path, capsys):
    out = tmp_path / "k2iso.gr"
    assert main(["gen", "complete", "--n", "2", "--isolated", "2", "-o", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 4
    assert len(g.edges) == 1


def test_compare_csv_content(hard4, k3, tmp_path):
    out = tmp_path / "report.csv"
    assert main(["compare", hard4, k3, "--csv", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == (
        "instance,n,edges,m,k,t,alg_size,lower_bound,exact_size,"
        "baseline_size,greedy_size,ratio_vs_lb,ratio_vs_exact,error"
    )
    assert lines[1].startswith("hard4.gr,9,10,4,0,0,4,2,3,8,")
    assert ",1.3333," in lines[1]  # alg 4 vs exact 3
    assert lines[2].startswith("k3.gr,3,3,1,1,0,2,1,2,")


def test_compare_ratio_column_on_hard_family(tmp_path):
    files = []
    for n in (4, 6, 8, 10, 12):
        f = tmp_path / f"hard{n}.gr"
        f.write_text(serialize_graph(hard_instance(n)))
        files.append(str(f))
    out = tmp_path / "report.csv"
    assert main(["compare", *files, "--csv", str(out), "--exact-limit", "0"]) == 0
    rows = out.read_text().splitlines()[1:]
    assert len(rows) == 5
    for row in rows:
        fields = row.split(",")
        assert fields[11] == "2.0000"  # ratio_vs_lb
        assert fields[8] == ""  # exact disabled


def test_compare_records_errors_and_continues(k3, tmp_path):
    bad = tmp_path / "broken.gr"
    bad.write_text("p edge 1 1\n")
    out = tmp_path / "report.csv"
    assert main(["compare", str(bad), k3, "--csv", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[1].startswith("broken.gr,")
    assert "header declared 1 edges" in lines[1]
    assert lines[2].startswith("k3.gr,3,")


def test_compare_is_byte_deterministic(hard4, k3, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["compare", hard4, k3, "--csv", str(a)]) == 0
    assert main(["compare", hard4, k3, "--csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_compare_dir_mode(tmp_path, capsys):
    inst = tmp_path / "instances"
    inst.mkdir()
    (inst / "b.gr").write_text("p edge 2 1\ne 1 2\n")
    (inst / "a.gr").write_text("p edge 1 0\n")
    assert main(["compare", "--dir", str(inst)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].startswith("a.gr,")  # sorted by name
    assert lines[2].startswith("b.gr,")


def test_compare_requires_inputs(capsys):
    assert main(["compare"]) == 2


def test_module_entry_point(tmp_path):
    graph = tmp_path / "k2.gr"
    graph.write_text("p edge 2 1\ne 1 2\n")
    proc = subprocess.run(
        [sys.executable, "-m", "tcover.cli", "solve", str(graph)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("size=1")
