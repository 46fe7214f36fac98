import json

import pytest

from ramsey_k2n.canon import canonical_form
from ramsey_k2n.constructions import (
    ParameterError,
    badness_parameter_cover,
    burr_witness,
    lemma41_witness,
    lemma42_witness,
    star_witness,
)
from ramsey_k2n.graphs import (
    complement,
    complete_multipartite,
    decode_graph6,
    induced_subgraph,
)
from ramsey_k2n.invariants import PatternParams, has_cycle_of_length, k2n_free


def test_star_witness_basic():
    r = star_witness(6)
    assert not r.failed
    assert r.claimed["order"] == 6
    assert r.measured["complement_circumference"] == 5
    assert r.checks["k2n_free_n2"]
    r = star_witness(3)
    assert not r.failed and r.measured["complement_circumference"] == 0
    r = star_witness(10)
    assert not r.failed and r.measured["complement_circumference"] == 9
    with pytest.raises(ParameterError):
        star_witness(2)


def test_burr_witness_k2n_matches_star_complement():
    # chi=2, sigma=2 pattern: the red side is K_{m-1} + K_1
    r = burr_witness(6, PatternParams.k2n(3))
    s = star_witness(6)
    assert canonical_form(r.complement_graph) \
        == canonical_form(s.complement_graph)
    assert not r.failed


def test_burr_witness_odd_cycle():
    # C_7 (chi=3, sigma=1) against a connected graph on n+2=10 vertices:
    # red is two K_9 blocks, total order 18, witnessing R > 18 = 2n+2
    r = burr_witness(10, PatternParams.cycle(7))
    assert not r.failed
    assert r.claimed["order"] == 18
    assert r.checks["pattern_absent"]  # blue is bipartite, no C_7


def test_burr_witness_small_even_cycle():
    r = burr_witness(4, PatternParams.cycle(6))
    assert not r.failed
    assert r.claimed["order"] == 5
    assert r.checks["red_components_below_g_order"]


def test_burr_witness_errors():
    with pytest.raises(ParameterError):
        burr_witness(1, PatternParams.k2n(2))  # g_order < sigma
    with pytest.raises(ParameterError):
        burr_witness(40, PatternParams.cycle(7))  # order 78 > 64


def test_lemma41_flagship_parameters():
    r = lemma41_witness(5, 1, 2)
    assert not r.failed
    assert r.claimed["order"] == 13
    assert r.measured["complement_circumference"] == 7
    assert r.measured["max_common_neighborhood"] == 6
    assert r.params["n"] == 7
    assert r.checks["max_common_equals_claim"]
    assert k2n_free(r.graph, 7)
    assert has_cycle_of_length(r.complement_graph, 10) is None


def test_lemma41_second_parameters():
    r = lemma41_witness(4, 2, 3)
    assert not r.failed
    assert r.claimed["order"] == 16
    assert r.measured["complement_circumference"] == 6
    assert r.params["n"] == 11


def test_lemma41_nonapex_structure():
    # removing the apex from G leaves a complete multipartite graph with
    # p parts of size m+1 and one part of size m+t-p
    m, p, t = 5, 1, 2
    r = lemma41_witness(m, p, t)
    apex = next(v for v in range(r.complement_graph.order)
                if r.complement_graph.adj[v].bit_count()
                == r.complement_graph.order - 1)
    rest = [v for v in range(r.graph.order) if v != apex]
    non_apex = induced_subgraph(r.graph, rest)
    expected = complete_multipartite([m + t - p] + [m + 1] * p)
    assert canonical_form(non_apex) == canonical_form(expected)


def test_lemma41_parameter_errors():
    with pytest.raises(ParameterError):
        lemma41_witness(5, 1, 1)  # t >= p+1 violated
    with pytest.raises(ParameterError):
        lemma41_witness(5, 0, 2)  # p >= 1 violated
    with pytest.raises(ParameterError):
        lemma41_witness(5, 1, 5)  # t < m+p-1 violated
    with pytest.raises(ParameterError):
        lemma41_witness(20, 2, 4)  # order 65 > 64


def test_lemma42_flagship_parameters():
    r = lemma42_witness(6, 2, 0)
    assert not r.failed
    assert r.claimed["order"] == 21
    assert r.measured["complement_circumference"] == 11
    assert r.params["n"] == 14
    assert k2n_free(r.graph, 14)
    assert r.checks["max_common_at_most_n_minus_1"]


def test_lemma42_larger_parameters():
    r = lemma42_witness(6, 3, 2)
    assert r.claimed["order"] == 26
    assert r.claimed["complement_circumference"] == 11
    # order 26 exceeds the exact-circumference cutoff
    assert "complement_circumference" in r.skipped
    assert not r.failed
    assert r.checks["k2n_free"]


def test_lemma42_rejects_small_m():
    with pytest.raises(ParameterError, match="m >= 6"):
        lemma42_witness(5, 2, 0)
    with pytest.raises(ParameterError):
        lemma42_witness(6, 1, 0)
    with pytest.raises(ParameterError):
        lemma42_witness(6, 2, 3)


def test_witness_complement_consistency():
    for r in (star_witness(7), lemma41_witness(5, 1, 3), lemma42_witness(6, 2, 1)):
        assert complement(r.graph) == r.complement_graph


def test_badness_parameter_cover():
    assert badness_parameter_cover(7, 5) == {
        "construction": "lemma41", "n": 7, "m": 5, "p": 1, "t": 2}
    assert badness_parameter_cover(14, 6) == {
        "construction": "lemma42", "n": 14, "m": 6, "q": 2, "t": 0}
    assert badness_parameter_cover(6, 6)["construction"] == "unknown"
    assert badness_parameter_cover(7, 6)["construction"] == "unknown"
    assert badness_parameter_cover(3, 6)["construction"] == "uncovered"
    with pytest.raises(ParameterError):
        badness_parameter_cover(0, 5)


def test_cover_is_complete_above_m_plus_1():
    # every n in [m+2, 40] must be covered for m in {6, 7, 8}, and the
    # solved parameters must build a verifying witness of order n+m+1
    for m in (6, 7, 8):
        for n in range(m + 2, 41):
            cover = badness_parameter_cover(n, m)
            assert cover["construction"] in ("lemma41", "lemma42"), (n, m)
            if cover["construction"] == "lemma41":
                r = lemma41_witness(m, cover["p"], cover["t"])
            else:
                r = lemma42_witness(m, cover["q"], cover["t"])
            assert r.params["n"] == n
            assert r.claimed["order"] == n + m + 1
            assert not r.failed


def test_report_json_serialization():
    r = lemma41_witness(5, 1, 2)
    d = r.to_json_dict()
    payload = json.dumps(d, sort_keys=True)
    back = json.loads(payload)
    assert back["failed"] is False
    assert decode_graph6(back["graph6"]) == r.graph
    assert decode_graph6(back["complement_graph6"]) == r.complement_graph
