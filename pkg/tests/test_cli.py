from pathlib import Path

from hmap.core.fmap import ZERO, I, L, V
from hmap.models import FuzzRun
from hmap.routes.cli import run_cli
from hmap.core.serialize import parse_map

from .maps import DIGON, DIGON_RING, FIX1, K4T, M2

STATS_GOLDEN_FIX1 = """nd=15
ne=7
nv=6
nf=6
nc=3
ec=4
genus=1
planar=false
"""


def test_stats_golden(runner, map_file):
    result = runner.invoke(args=["stats", map_file(FIX1)])
    assert result.exit_code == 0
    assert result.output == STATS_GOLDEN_FIX1


def test_stats_of_empty_map(runner, map_file):
    result = runner.invoke(args=["stats", map_file(V)])
    assert result.exit_code == 0
    assert result.output == "nd=0\nne=0\nnv=0\nnf=0\nnc=0\nec=0\ngenus=0\nplanar=true\n"


def test_check(runner, map_file):
    assert runner.invoke(args=["check", map_file(FIX1)]).exit_code == 0
    result = runner.invoke(args=["check", map_file(L(I(V, 1), ZERO, 1, 1), "bad")])
    assert result.exit_code == 1
    assert "closure equality" in result.output


def test_planar(runner, map_file):
    assert runner.invoke(args=["planar", map_file(FIX1)]).exit_code == 1
    result = runner.invoke(args=["planar", map_file(DIGON)])
    assert result.exit_code == 0
    assert result.output == "planar=true genus=0\n"


def test_orbit(runner, map_file):
    result = runner.invoke(args=["orbit", map_file(FIX1), "--kind", "face", "--dart", "1"])
    assert result.exit_code == 0
    assert result.output == "period=9\nmembers=1 5 2 11 12 7 6 4 9\n"
    result = runner.invoke(args=["orbit", map_file(FIX1), "--kind", "edge", "--dart", "99"])
    assert result.exit_code == 2


def test_ring_check(runner, map_file, ring_file):
    path = map_file(DIGON)
    result = runner.invoke(args=["ring-check", path, ring_file(DIGON_RING)])
    assert result.exit_code == 0
    assert result.output.endswith("verdict=valid\n")
    result = runner.invoke(args=["ring-check", path, ring_file([(1, True), (3, True)], "bad")])
    assert result.exit_code == 1
    assert "verdict=invalid(continuity at item 0,1)" in result.output


def test_jordan(runner, map_file, ring_file):
    result = runner.invoke(args=["jordan", map_file(M2), ring_file([(1, True)])])
    assert result.exit_code == 0
    assert result.output == "nc_before=1 nc_after=2 verdict=pass\n"


def test_jordan_precondition_exit_code(runner, map_file, ring_file):
    result = runner.invoke(args=["jordan", map_file(K4T), ring_file([(1, True)])])
    assert result.exit_code == 2


def test_break_matches_jordan(runner, map_file, ring_file, tmp_path):
    out = tmp_path / "broken.hmap"
    result = runner.invoke(args=["break", map_file(DIGON), ring_file(DIGON_RING), "-o", str(out)])
    assert result.exit_code == 0
    assert result.output == "nc=2\n"
    broken = parse_map(out.read_text(encoding="utf-8"))
    assert runner.invoke(args=["stats", str(out)]).output.splitlines()[4] == "nc=2"
    assert len(broken) == 6


def test_parse_error_exit_code(runner, tmp_path):
    path = tmp_path / "broken.hmap"
    path.write_text("hmap 1\nx 1\n", encoding="utf-8")
    result = runner.invoke(args=["stats", str(path)])
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_usage_error_exit_code(runner):
    assert runner.invoke(args=["orbit"]).exit_code == 2
    assert runner.invoke(args=["stats", "does-not-exist.hmap"]).exit_code == 2


def test_gen(runner, tmp_path):
    out = tmp_path / "gen.hmap"
    result = runner.invoke(args=["gen", "--darts", "20", "--links", "25", "--seed", "42", "-o", str(out)])
    assert result.exit_code == 0
    first = out.read_text(encoding="utf-8")
    runner.invoke(args=["gen", "--darts", "20", "--links", "25", "--seed", "42", "-o", str(out)])
    assert out.read_text(encoding="utf-8") == first
    assert runner.invoke(args=["planar", str(out)]).exit_code == 0


def test_gen_free(runner, tmp_path):
    out = tmp_path / "free.hmap"
    result = runner.invoke(args=["gen", "--free", "--darts", "10", "--links", "12", "-o", str(out)])
    assert result.exit_code == 0
    assert runner.invoke(args=["check", str(out)]).exit_code == 0


def test_gen_impossible_sizes(runner, tmp_path):
    result = runner.invoke(args=["gen", "--darts", "1", "--links", "5", "-o", str(tmp_path / "x.hmap")])
    assert result.exit_code == 2


def test_dot(runner, map_file, tmp_path):
    out = tmp_path / "m.dot"
    assert runner.invoke(args=["dot", map_file(DIGON), "-o", str(out)]).exit_code == 0
    assert out.read_text(encoding="utf-8").startswith("digraph hmap {")


def test_fuzz_records_run(app, runner, tmp_path):
    result = runner.invoke(args=["fuzz", "--trials", "10", "--seed", "7", "--size", "12",
                                 "--witness-dir", str(tmp_path / "w")])
    assert result.exit_code == 0
    assert "jordan_failures=0" in result.output
    with app.app_context():
        run = FuzzRun.query.one()
        assert (run.seed, run.trials, run.size_bound, run.failures) == (7, 10, 12, 0)
        assert run.witnesses == []


def test_run_cli(app, map_file, ring_file, capsys):
    assert run_cli(["planar", map_file(FIX1)], app=app) == 1
    assert run_cli(["jordan", map_file(M2, "m2"), ring_file([(1, True)])], app=app) == 0
    assert "nc_before=1 nc_after=2 verdict=pass" in capsys.readouterr().out
    assert run_cli(["stats", str(Path("missing.hmap"))], app=app) == 2
    assert run_cli(["nonsense"], app=app) == 2
