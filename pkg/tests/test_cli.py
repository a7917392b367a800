"""End-to-end command-line behavior: outputs, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

import inthull.cli as cli

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "inthull", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
        timeout=120,
    )


# ---------------------------------------------------------------------------
# hull


def test_hull_prints_canonical_vertex_list():
    for engine in ("new", "baseline", "oracle"):
        r = run_cli("hull", str(FIXTURES / "triangle_shallow.json"), "--engine", engine)
        assert r.returncode == 0, r.stderr
        assert r.stdout == "[[-1,0],[2,0],[2,2],[1,3],[0,2]]\n"


def test_hull_check_passes_on_agreement():
    r = run_cli("hull", str(FIXTURES / "triangle_slanted.json"), "--engine", "new", "--check")
    assert r.returncode == 0
    assert r.stdout == "[[-2,0],[2,0],[3,2],[3,3],[1,2]]\n"


def test_hull_handles_degenerate_instance():
    r = run_cli("hull", str(FIXTURES / "segment.json"))
    assert r.returncode == 0
    assert r.stdout == "[[0,0],[3,6]]\n"


def test_hull_engine_knobs_change_nothing_observable():
    base = run_cli("hull", str(FIXTURES / "narrow_band.json"))
    tuned = run_cli(
        "hull", str(FIXTURES / "narrow_band.json"), "--brute-threshold", "1", "--max-depth", "1"
    )
    assert base.returncode == tuned.returncode == 0
    assert base.stdout == tuned.stdout


def test_exit_code_1_on_bad_input():
    assert run_cli("hull", "/no/such/file.json").returncode == 1
    assert run_cli("hull", "--engine", "quantum", str(FIXTURES / "segment.json")).returncode == 1
    assert run_cli("gen", "--kind", "random", "--n", "2", "--scale", "5", "--seed", "0", "-o", "/dev/null").returncode == 1
    assert run_cli("nonsense").returncode == 1


def test_exit_code_3_on_sweep_limit():
    r = run_cli("hull", str(FIXTURES / "narrow_band.json"), "--max-sweep", "1")
    assert r.returncode == 3
    assert "sweep" in r.stderr


def test_check_catches_a_corrupted_engine(monkeypatch, capsys):
    real = cli.integer_hull_new

    def corrupted(P, *args, **kwargs):
        hull = real(P, *args, **kwargs)
        return hull[:-1]  # drop a vertex

    monkeypatch.setattr(cli, "integer_hull_new", corrupted)
    code = cli.main(["hull", str(FIXTURES / "triangle_shallow.json"), "--engine", "new", "--check"])
    assert code == 2
    assert "mismatch" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# gen


def test_gen_writes_deterministic_instances(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        r = run_cli("gen", "--kind", "edgecase", "--n", "4", "--scale", "31/2", "--seed", "5", "-o", str(out))
        assert r.returncode == 0, r.stderr
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert set(data) == {"name", "inequalities"}
    # generated instances feed straight back into the hull command
    r = run_cli("hull", str(a), "--check")
    assert r.returncode == 0


def test_gen_random_round_trips_through_hull(tmp_path):
    out = tmp_path / "r.json"
    assert run_cli("gen", "--kind", "random", "--n", "7", "--scale", "12", "--seed", "3", "-o", str(out)).returncode == 0
    r = run_cli("hull", str(out), "--engine", "baseline", "--check")
    assert r.returncode == 0
    assert r.stdout.startswith("[[")


# ---------------------------------------------------------------------------
# bench


CSV_HEADER = "name,n_vertices,area,area_decimal,engine,wall_time_ns,hull_size,brute_cells,status"


def make_suite(tmp_path):
    suite = tmp_path / "suite"
    suite.mkdir()
    for kind, n, seed in (("random", 5, 1), ("random", 8, 2), ("edgecase", 3, 3)):
        run_cli("gen", "--kind", kind, "--n", str(n), "--scale", "15", "--seed", str(seed),
                "-o", str(suite / f"{kind}{seed}.json"))
    return suite


def test_bench_csv_schema_and_stability(tmp_path):
    suite = make_suite(tmp_path)
    out1, out2 = tmp_path / "o1.csv", tmp_path / "o2.csv"
    for out in (out1, out2):
        r = run_cli("bench", "--suite", str(suite), "--reps", "2", "--no-timing", "-o", str(out))
        assert r.returncode == 0, r.stderr
    text = out1.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 3 * 2  # three instances x two engines
    assert out1.read_bytes() == out2.read_bytes()
    for row in lines[1:]:
        cols = row.split(",")
        assert cols[4] in ("new", "baseline")
        assert cols[5] == "0"  # --no-timing zeroes the clock column
        assert cols[8] == "ok"


def test_bench_records_real_timings_without_the_flag(tmp_path):
    suite = make_suite(tmp_path)
    out = tmp_path / "t.csv"
    assert run_cli("bench", "--suite", str(suite), "--reps", "1", "-o", str(out)).returncode == 0
    rows = out.read_text().strip().split("\n")[1:]
    assert all(int(r.split(",")[5]) > 0 for r in rows)


def test_bench_engine_selection(tmp_path):
    suite = make_suite(tmp_path)
    out = tmp_path / "e.csv"
    assert run_cli("bench", "--suite", str(suite), "--engines", "oracle", "--no-timing", "-o", str(out)).returncode == 0
    rows = out.read_text().strip().split("\n")[1:]
    assert rows and all(r.split(",")[4] == "oracle" for r in rows)


# ---------------------------------------------------------------------------
# plot


def test_plot_svg_structure_and_stability(tmp_path):
    out1, out2 = tmp_path / "p1.svg", tmp_path / "p2.svg"
    for out in (out1, out2):
        r = run_cli("plot", str(FIXTURES / "unit_square.json"), "-o", str(out))
        assert r.returncode == 0, r.stderr
    svg = out1.read_text()
    assert svg.startswith("<svg ")
    assert svg.count('class="lp-in"') == 4  # the four lattice points of the square
    assert 'class="hull"' in svg
    assert 'class="poly"' in svg
    assert out1.read_bytes() == out2.read_bytes()


def test_plot_degenerate_instance_renders_line(tmp_path):
    out = tmp_path / "seg.svg"
    assert run_cli("plot", str(FIXTURES / "segment.json"), "-o", str(out)).returncode == 0
    svg = out.read_text()
    assert '<line class="poly"' in svg


def test_help_exits_zero():
    assert run_cli("--help").returncode == 0
    assert run_cli("hull", "--help").returncode == 0
