import json
import subprocess
import sys

from cdgame.families import cycle, predomination_penalty_graph
from cdgame.graph import emit_graph6


def run_cli(*args, stdin=""):
    return subprocess.run([sys.executable, "-m", "cdgame.cli", *args],
                          capture_output=True, text=True, input=stdin,
                          timeout=300)


def test_solve_family():
    out = run_cli("solve", "--family", "gn:3", "--variant", "d")
    assert out.returncode == 0
    assert "value = 3" in out.stdout
    assert "D:u3" in out.stdout


def test_solve_predominated_by_label():
    out = run_cli("solve", "--family", "fig3", "--variant", "d",
                  "--predominate", "c")
    assert out.returncode == 0
    assert "value = 8" in out.stdout


def test_solve_never_exit_code():
    out = run_cli("solve", "--family", "path:5", "--variant", "s",
                  "--predominate", "2")
    assert out.returncode == 2
    assert "value = NEVER" in out.stdout


def test_solve_parse_error_exit_code():
    out = run_cli("solve", "--family", "wat:3")
    assert out.returncode == 1
    assert "error" in out.stderr


def test_solve_requires_one_input():
    out = run_cli("solve", "--family", "path:3", "--graph6", "A_")
    assert out.returncode == 1
    out = run_cli("solve")
    assert out.returncode == 1


def test_solve_graph6_literal():
    out = run_cli("solve", "--graph6", "A_")
    assert out.returncode == 0 and "value = 1" in out.stdout


def test_solve_from_file(tmp_path):
    target = tmp_path / "one.g6"
    target.write_text(emit_graph6(cycle(5)) + "\n")
    out = run_cli("solve", "--input", str(target))
    assert out.returncode == 0 and "value = 3" in out.stdout


def test_verify_group_pass():
    out = run_cli("verify", "--only", "hamming")
    assert out.returncode == 0
    assert "4 claims, 0 not passing" in out.stdout


def test_verify_group_with_known_divergence():
    out = run_cli("verify", "--only", "ladders")
    assert out.returncode == 1
    assert "16 claims, 4 not passing" in out.stdout


def test_verify_unknown_group():
    out = run_cli("verify", "--only", "nope")
    assert out.returncode == 1


def test_verify_output_jsonl(tmp_path):
    target = tmp_path / "claims.jsonl"
    out = run_cli("verify", "--only", "paths-cycles", "--output", str(target))
    assert out.returncode == 0
    records = [json.loads(line) for line in target.read_text().splitlines()]
    assert len(records) == 26
    assert all(r["verdict"] == "pass" for r in records)
    assert {"claim", "instance", "expected", "observed", "verdict",
            "elapsed"} == set(records[0])


def test_verify_missing_corpus():
    out = run_cli("verify", "--only", "pass", "--corpus", "/does/not/exist.g6")
    assert out.returncode == 1
    assert "not found" in out.stderr


def test_scan_jsonl(tmp_path):
    corpus = tmp_path / "two.g6"
    corpus.write_text(emit_graph6(cycle(6)) + "\n"
                      + emit_graph6(predomination_penalty_graph()) + "\n")
    out = run_cli("scan", "--corpus", str(corpus))
    assert out.returncode == 0
    records = [json.loads(line) for line in out.stdout.splitlines()]
    assert [r["line"] for r in records] == [1, 2]
    assert records[0]["per_vertex"] == [3] * 6
    assert records[0]["max_decrease"] == 1
    assert records[1]["max_increase"] == 1
    assert "max increase 1" in out.stderr


def test_scan_threads_match_sequential(tmp_path, corpus):
    path_ = tmp_path / "slice.g6"
    path_.write_text("\n".join(emit_graph6(g) for g in corpus[:40]) + "\n")
    seq = run_cli("scan", "--corpus", str(path_), "--threads", "1")
    par = run_cli("scan", "--corpus", str(path_), "--threads", "2")
    assert seq.returncode == par.returncode == 0
    assert seq.stdout == par.stdout


def test_play_engine_opening_and_reprompt():
    # Human is Staller on gn:2: engine must open on u2, the human's only
    # reply is u1; bogus entries are re-prompted, not fatal.
    out = run_cli("play", "--family", "gn:2", "--human", "s",
                  stdin="zzz\n99\nu1\n")
    assert out.returncode == 0
    assert "engine (D) plays u2" in out.stdout
    assert "no vertex labeled 'zzz'" in out.stdout
    assert "out of range" in out.stdout
    assert "game over in 2 moves" in out.stdout


def test_play_complete_graph_ends_immediately():
    out = run_cli("play", "--family", "complete:4", "--human", "s")
    assert out.returncode == 0
    assert "game over in 1 moves" in out.stdout


def test_play_staller_pass():
    out = run_cli("play", "--family", "path:6", "--human", "s", "--passes", "1",
                  stdin="pass\n3\n")
    assert out.returncode == 0
    assert "or 'pass'" in out.stdout
    assert "game over in 4 moves" in out.stdout


def test_predominate_label_forms():
    # underscore form of a family label
    out = run_cli("solve", "--family", "gn:3", "--predominate", "u_1")
    assert out.returncode == 0
    # ladder coordinate label
    out = run_cli("solve", "--family", "cl:5", "--predominate", "(1,1)")
    assert out.returncode == 0 and "value = 5" in out.stdout
    # several vertices, mixed comma list and repeats
    out = run_cli("solve", "--family", "path:5", "--predominate", "1,2",
                  "--predominate", "3")
    assert out.returncode == 2  # interior predomination sticks the d-game
    out = run_cli("solve", "--family", "path:5", "--predominate", "nosuch")
    assert out.returncode == 1


def test_play_illegal_move_reprompted():
    # On path:5 after the engine opens, vertex 4 is not adjacent to the
    # played set, so it is rejected and the prompt repeats.
    out = run_cli("play", "--family", "path:4", "--human", "s",
                  stdin="0\n2\n")
    assert out.returncode == 0
    assert "not a legal move" in out.stdout
    assert "game over in 2 moves" in out.stdout
