"""End-to-end tests of the command line verbs via run(argv)."""

import json

import pytest

from multithreshold import ExplicitGraph, graph_to_json
from multithreshold.cli import (
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_OK,
    run,
)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_construct_then_verify_round_trip(tmp_path, capsys):
    rep_file = tmp_path / "rep.json"
    assert run(["construct", "--family", "nk3", "--n", "4", "--out", str(rep_file)]) == EXIT_OK
    payload = json.loads(rep_file.read_text())
    assert payload["graph"] == {
        "family": "disjoint_cliques", "count": 4, "clique_size": 3,
    }
    assert len(payload["ranks"]) == 12

    code, report = run_json(capsys, ["verify", "--rep", str(rep_file)])
    assert code == EXIT_OK
    assert report["ok"] is True
    assert report["mismatches"] == []


def test_construct_emit_sums(tmp_path):
    rep_file = tmp_path / "rep.json"
    code = run([
        "construct", "--family", "nk3", "--n", "2",
        "--emit-sums", "--out", str(rep_file),
    ])
    assert code == EXIT_OK
    payload = json.loads(rep_file.read_text())
    assert len(payload["edge_sums"]) == 6
    assert len(payload["nonedge_sums"]) == 9
    for entry in payload["edge_sums"] + payload["nonedge_sums"]:
        assert set(entry) == {"basis", "coeffs"}


def test_construct_rejects_bad_n():
    with pytest.raises(SystemExit) as excinfo:
        run(["construct", "--family", "knx3", "--n", "1"])
    assert excinfo.value.code == 2


def test_theta_single_value(capsys):
    code, payload = run_json(capsys, ["theta", "--family", "knx4", "--n", "3"])
    assert code == EXIT_OK
    assert payload["theta"] == 4
    assert payload["family"] == "knx4"
    assert payload["n"] == 3
    assert {"regime", "m"} <= set(payload)


def test_theta_table_tsv(capsys):
    assert run(["theta", "--table", "5"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n\tnk3\tknx3\tnk4\tknx4"
    assert lines[1] == "1\t1\t\t1\t"  # one part is not a multipartite graph
    assert lines[2] == "2\t3\t2\t3\t2"
    assert lines[3] == "3\t5\t4\t5\t4"
    assert lines[4] == "4\t6\t6\t7\t6"
    assert lines[5] == "5\t7\t7\t9\t8"


def test_theta_table_json(capsys):
    code, payload = run_json(capsys, ["theta", "--table", "3", "--format", "json"])
    assert code == EXIT_OK
    assert payload["columns"] == ["n", "nk3", "knx3", "nk4", "knx4"]
    assert payload["rows"][2] == ["3", "5", "4", "5", "4"]


def test_theta_table_plot(tmp_path, capsys):
    figure = tmp_path / "staircase.png"
    assert run(["theta", "--table", "8", "--plot", str(figure)]) == EXIT_OK
    capsys.readouterr()
    assert figure.exists() and figure.stat().st_size > 0


def test_theta_requires_some_work():
    with pytest.raises(SystemExit) as excinfo:
        run(["theta"])
    assert excinfo.value.code == 2


def test_oracle_fixed_k(capsys):
    code, payload = run_json(
        capsys, ["oracle", "--family", "nk3", "--n", "2", "--k", "2"]
    )
    assert code == EXIT_OK
    assert payload["answer"] == "no"
    assert payload["assignments_total"] == 512
    assert payload["assignments_checked"] == 512
    assert "witness" not in payload


def test_oracle_max_k_scan(capsys):
    code, payload = run_json(
        capsys, ["oracle", "--family", "knx3", "--n", "2", "--max-k", "3"]
    )
    assert code == EXIT_OK
    assert payload["answer"] == "yes"
    assert payload["theta"] == 2
    assert "ranks" in payload["witness"]


def test_oracle_max_k_exhausted(capsys):
    code, payload = run_json(
        capsys, ["oracle", "--family", "nk3", "--n", "2", "--max-k", "2"]
    )
    assert code == EXIT_OK
    assert payload["answer"] == "no"
    assert payload["theta"] is None
    assert payload["k_max"] == 2


def test_oracle_budget_exceeded(capsys):
    code, payload = run_json(
        capsys, ["oracle", "--family", "nk4", "--n", "2", "--k", "3"]
    )
    assert code == EXIT_BUDGET
    assert payload["answer"] == "unknown"
    assert "reason" in payload

    code, payload = run_json(
        capsys,
        ["oracle", "--family", "nk3", "--n", "2", "--k", "2", "--budget", "100"],
    )
    assert code == EXIT_BUDGET
    assert payload["answer"] == "unknown"


def test_oracle_reads_graph_file(tmp_path, capsys):
    graph_file = tmp_path / "c4.json"
    c4 = ExplicitGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    graph_file.write_text(json.dumps(graph_to_json(c4)))
    code, payload = run_json(
        capsys, ["oracle", "--graph", str(graph_file), "--max-k", "2"]
    )
    assert code == EXIT_OK
    assert payload["theta"] == 2


def test_oracle_argument_validation(tmp_path):
    for argv in (
        ["oracle", "--graph", "nk3:2", "--family", "nk3", "--n", "2", "--k", "1"],
        ["oracle", "--k", "1"],
        ["oracle", "--family", "nk3", "--n", "2"],
        ["oracle", "--family", "nk3", "--n", "2", "--k", "1", "--max-k", "2"],
        ["oracle", "--graph", "nosuchfamily:3", "--k", "1"],
    ):
        with pytest.raises(SystemExit) as excinfo:
            run(argv)
        assert excinfo.value.code == 2


def test_verify_flags_corruption(tmp_path, capsys):
    rep_file = tmp_path / "rep.json"
    run(["construct", "--family", "nk3", "--n", "2", "--out", str(rep_file)])
    capsys.readouterr()
    payload = json.loads(rep_file.read_text())
    payload["ranks"][0][0] = "987654321/2"  # ranks are coefficient rows
    rep_file.write_text(json.dumps(payload))

    code, report = run_json(capsys, ["verify", "--rep", str(rep_file)])
    assert code == EXIT_FAILED
    assert report["ok"] is False
    first = report["mismatches"][0]
    assert {"u", "v", "expected_edge", "got_edge", "rank_sum"} <= set(first)


def test_verify_against_overridden_graph(tmp_path, capsys):
    rep_file = tmp_path / "rep.json"
    run(["construct", "--family", "nk3", "--n", "2", "--out", str(rep_file)])
    capsys.readouterr()
    code, report = run_json(
        capsys, ["verify", "--rep", str(rep_file), "--graph", "knx3:2"]
    )
    assert code == EXIT_FAILED
    assert report["ok"] is False


def test_certify_constructed_reps_are_clean(tmp_path, capsys):
    rep_file = tmp_path / "rep.json"
    run(["construct", "--family", "nk3", "--n", "4", "--out", str(rep_file)])
    capsys.readouterr()
    assert run(["certify", "--rep", str(rep_file)]) == EXIT_OK
    assert capsys.readouterr().out == ""

    assert run(["certify", "--rep", str(rep_file), "--check", "pairs",
                "--check", "lone"]) == EXIT_OK
    capsys.readouterr()


def test_certify_check_applicability(tmp_path, capsys):
    nk3_even = tmp_path / "nk3_even.json"  # n=4 gets 6 thresholds
    run(["construct", "--family", "nk3", "--n", "4", "--out", str(nk3_even)])
    nk3_odd = tmp_path / "nk3_odd.json"  # n=5 gets 7
    run(["construct", "--family", "nk3", "--n", "5", "--out", str(nk3_odd)])
    nk4 = tmp_path / "nk4.json"
    run(["construct", "--family", "nk4", "--n", "2", "--out", str(nk4)])
    knx3 = tmp_path / "knx3.json"
    run(["construct", "--family", "knx3", "--n", "2", "--out", str(knx3)])
    capsys.readouterr()

    # the extreme-color uniqueness argument needs an odd count on cliques
    with pytest.raises(SystemExit) as excinfo:
        run(["certify", "--rep", str(nk3_even), "--check", "extreme"])
    assert excinfo.value.code == 2
    assert run(["certify", "--rep", str(nk3_odd), "--check", "extreme"]) == EXIT_OK
    # on multipartite graphs it applies at any count
    assert run(["certify", "--rep", str(knx3), "--check", "extreme"]) == EXIT_OK
    # the half-triangle check is specific to 4-cliques
    assert run(["certify", "--rep", str(nk4), "--check", "half"]) == EXIT_OK
    with pytest.raises(SystemExit) as excinfo:
        run(["certify", "--rep", str(knx3), "--check", "half"])
    assert excinfo.value.code == 2
    capsys.readouterr()


def test_certify_needs_a_family_shape(tmp_path, capsys):
    rep_file = tmp_path / "rep.json"
    run(["construct", "--family", "nk3", "--n", "1", "--out", str(rep_file)])
    triangle_file = tmp_path / "triangle.json"
    triangle = ExplicitGraph(3, [(0, 1), (0, 2), (1, 2)])
    triangle_file.write_text(json.dumps(graph_to_json(triangle)))
    capsys.readouterr()
    with pytest.raises(SystemExit) as excinfo:
        run(["certify", "--rep", str(rep_file), "--graph", str(triangle_file)])
    assert excinfo.value.code == 2


def test_out_flag_keeps_stdout_quiet(tmp_path, capsys):
    out_file = tmp_path / "theta.json"
    assert run(["theta", "--family", "nk3", "--n", "3", "--out", str(out_file)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out_file.read_text())["theta"] == 5


def test_verbose_notes_go_to_stderr(capsys):
    code = run(["construct", "--family", "nk3", "--n", "2", "--verbose"])
    assert code == EXIT_OK
    captured = capsys.readouterr()
    json.loads(captured.out)  # machine output stays pure JSON
    assert "verified" in captured.err
