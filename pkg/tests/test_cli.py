import json

from ramsey_k2n.cli import main
from ramsey_k2n.graphs import (
    complete_multipartite,
    cycle_graph,
    encode_graph6,
    from_edges,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_lemma41(capsys):
    code, out, _ = run(capsys, "construct", "lemma41",
                       "--m", "5", "--p", "1", "--t", "2")
    assert code == 0
    assert "claimed=7 measured=7" in out
    assert "result: verified" in out


def test_construct_invalid_params_exit_2(capsys):
    code, _, err = run(capsys, "construct", "lemma42",
                       "--m", "5", "--q", "2", "--t", "0")
    assert code == 2
    assert "m >= 6" in err


def test_construct_json_output(capsys):
    code, out, _ = run(capsys, "construct", "star", "--m", "6",
                       "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] is False
    assert payload["params"] == {"m": 6}


def test_check_cycle_witness(capsys):
    c5 = encode_graph6(cycle_graph(5))
    code, out, _ = run(capsys, "check", c5, "--cycle", "5")
    assert code == 1  # pattern found
    assert "[0, 1, 2, 3, 4]" in out


def test_check_k2n_witness(capsys):
    k23 = encode_graph6(complete_multipartite([2, 3]))
    code, out, _ = run(capsys, "check", k23, "--k2n", "2", "--output", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["k2n"]["found"] is True
    assert len(payload["k2n"]["common"]) >= 2


def test_check_petersen_spectrum(capsys):
    petersen = from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                          + [(i, i + 5) for i in range(5)]
                          + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    g6 = encode_graph6(petersen)
    code, out, _ = run(capsys, "check", g6, "--spectrum", "--girth",
                       "--connectivity", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["spectrum"] == [5, 6, 8, 9]
    assert payload["girth"] == 5
    assert payload["connectivity"] == 3


def test_check_bad_graph6_exit_2(capsys):
    code, _, err = run(capsys, "check", "not-a-graph6-@@@", "--girth")
    assert code == 2
    assert "error" in err


def test_verify_thm13(capsys):
    code, out, _ = run(capsys, "verify", "thm1.3", "--n", "2", "--m", "6",
                       "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["outcome"] == "verified"
    assert payload["hypothesis_count"] == 117


def test_verify_missing_params(capsys):
    code, _, err = run(capsys, "verify", "thm1.3")
    assert code == 2
    assert "--n" in err and "--m" in err


def test_verify_thm14(capsys):
    code, out, _ = run(capsys, "verify", "thm1.4", "--n", "7", "--m", "5")
    assert code == 0
    assert "verified" in out


def test_verify_counterexample_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "thm1.6", "--n", "2", "--m", "4",
                       "--output", "json")
    assert code == 1
    assert json.loads(out)["outcome"] == "counterexample"


def test_ramsey_pair(capsys):
    code, out, _ = run(capsys, "ramsey", "--n", "2", "--pair", "6")
    assert code == 0
    assert "R(K_2,2, C_{6,7}) = 7" in out


def test_ramsey_cannot_bracket_exit_2(capsys):
    code, out, _ = run(capsys, "ramsey", "--n", "2", "--pair", "6",
                       "--max-order", "5")
    assert code == 2


def test_ramsey_requires_exactly_one_target(capsys):
    code, _, err = run(capsys, "ramsey", "--n", "2")
    assert code == 2
    code, _, err = run(capsys, "ramsey", "--n", "2", "--pair", "6",
                       "--cycle", "10")
    assert code == 2


def test_json_output_is_stable(capsys):
    runs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "thm1.3", "--n", "2", "--m", "6",
                        "--output", "json")
        payload = json.loads(out)
        payload.pop("elapsed")
        runs.append(json.dumps(payload, sort_keys=True))
    assert runs[0] == runs[1]


def test_workers_do_not_change_output(capsys):
    outs = []
    for workers in ("1", "4"):
        _, out, _ = run(capsys, "verify", "thm1.3", "--n", "2", "--m", "6",
                        "--output", "json", "--workers", workers)
        payload = json.loads(out)
        payload.pop("elapsed")
        outs.append(payload)
    assert outs[0] == outs[1]


def test_env_var_sets_default_workers(capsys, monkeypatch):
    monkeypatch.setenv("RAMSEY_WORKERS", "2")
    from ramsey_k2n.cli import build_parser

    args = build_parser().parse_args(["verify", "lemma3.1", "--max-order", "5"])
    assert args.workers == 2


def test_check_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(encode_graph6(cycle_graph(4)) + "\n"))
    code, out, _ = run(capsys, "check", "--circumference")
    assert code == 0
    assert "circumference: 4" in out
