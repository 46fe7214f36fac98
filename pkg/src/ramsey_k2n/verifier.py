"""Exhaustive machine verification of the Ramsey claims at small order.

Every harness enumerates an isomorph-free stream of graphs, filters to the
claim's hypothesis, and checks the conclusion on each survivor.  Outcomes:

- ``verified``          — hypothesis non-empty, zero violations
- ``verified-vacuous``  — hypothesis empty (reported distinctly, never
                          conflated with a substantive pass)
- ``counterexample``    — some graph satisfies the hypothesis and violates
                          the conclusion; the minimal one (by graph6) is
                          reported and re-validated
- ``infeasible``        — parameters outside desk-scale guidelines

Reports are deterministic for fixed parameters; worker count never changes
any reported value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .constructions import (
    ParameterError,
    badness_parameter_cover,
    lemma41_witness,
    lemma42_witness,
    star_witness,
)
from .enumeration import GenerationFilter, K2nFreeFilter, enumerate_parallel
from .graphs import Graph, bits, complement, encode_graph6
from .invariants import (
    all_longest_cycles,
    circumference,
    connectivity,
    has_cycle_of_length,
    independence_number,
    is_hamiltonian,
    k2n_free,
    longest_cycle,
    min_degree,
    union_neighborhood_excl,
)

UPPER_BOUND_MAX_ORDER = 16
LEMMA_3_1_MAX_ORDER = 9
HAMILTONIAN_LEMMA_MAX_ORDER = 10
RAMSEY_MAX_ORDER = 12
CYCLE_CAP = 10_000


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    params: dict
    outcome: str  # verified | verified-vacuous | counterexample | infeasible
    hypothesis_count: int = 0
    counterexample: dict | None = None
    elapsed: float = 0.0
    notes: tuple[str, ...] = ()
    extra: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if self.outcome in ("verified", "verified-vacuous"):
            return 0
        if self.outcome == "counterexample":
            return 1
        return 2

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "outcome": self.outcome,
            "hypothesis_count": self.hypothesis_count,
            "counterexample": self.counterexample,
            "elapsed": round(self.elapsed, 3),
            "notes": list(self.notes),
            "extra": dict(self.extra),
        }


def _finish(report_args: dict, start: float) -> VerificationReport:
    return VerificationReport(elapsed=time.monotonic() - start, **report_args)


def _pick(current: dict | None, candidate: dict) -> dict:
    """Keep the counterexample minimal by graph6 (worker-order invariant)."""
    if current is None or candidate["graph6"] < current["graph6"]:
        return candidate
    return current


def _complement_has_cycle(g: Graph, length: int) -> bool:
    if length > g.order:
        return False
    return has_cycle_of_length(complement(g), length) is not None


def verify_upper_bound(
    n: int, m: int, variant: str = "pair", workers: int = 1
) -> VerificationReport:
    """Every K_{2,n}-free graph on m+1 vertices has C_m (or C_{m+1}) in its
    complement.

    variant="pair" checks C_m-or-C_{m+1} (claimed for m >= 2n+2, proof
    opens at m >= 2n+1; both thresholds are reported, neither asserted);
    variant="single" checks C_m only (claimed for m >= 3n+4).
    """
    if variant not in ("single", "pair"):
        raise ParameterError(f"variant must be single or pair, got {variant!r}")
    claim = "thm1.3" if variant == "pair" else "thm1.6"
    params = {"n": n, "m": m, "variant": variant, "order": m + 1}
    start = time.monotonic()
    if n < 2 or m < 3:
        return _finish({"claim": claim, "params": params, "outcome": "infeasible",
                        "notes": ("n >= 2 and m >= 3 required",)}, start)
    if m + 1 > UPPER_BOUND_MAX_ORDER:
        return _finish({"claim": claim, "params": params, "outcome": "infeasible",
                        "notes": (f"order {m + 1} beyond guideline "
                                  f"{UPPER_BOUND_MAX_ORDER} for filtered "
                                  "enumeration",)}, start)
    notes = []
    if variant == "pair":
        notes.append(f"stated range m >= 2n+2 = {2 * n + 2}: "
                     f"{'inside' if m >= 2 * n + 2 else 'outside'}")
        notes.append(f"proof range m >= 2n+1 = {2 * n + 1}: "
                     f"{'inside' if m >= 2 * n + 1 else 'outside'}")
    else:
        notes.append(f"stated range m >= 3n+4 = {3 * n + 4}: "
                     f"{'inside' if m >= 3 * n + 4 else 'outside'}")
    count = 0
    cex: dict | None = None
    for g in enumerate_parallel(m + 1, K2nFreeFilter(n), workers):
        count += 1
        ok = _complement_has_cycle(g, m) or (
            variant == "pair" and _complement_has_cycle(g, m + 1)
        )
        if not ok:
            wanted = f"C_{m}" if variant == "single" else f"C_{m} or C_{m + 1}"
            cex = _pick(cex, {
                "graph6": encode_graph6(g),
                "detail": f"K_2,{n}-free graph whose complement has no {wanted}",
            })
    outcome = ("counterexample" if cex
               else "verified" if count else "verified-vacuous")
    return _finish({"claim": claim, "params": params, "outcome": outcome,
                    "hypothesis_count": count, "counterexample": cex,
                    "notes": tuple(notes)}, start)


def verify_lower_bound(n: int, m: int, variant: str = "pair") -> VerificationReport:
    """The star K_{1,m-1} witnesses R(K_{2,n}, target) > m."""
    claim = "thm1.3-lower" if variant == "pair" else "thm1.6-lower"
    params = {"n": n, "m": m, "variant": variant, "order": m}
    start = time.monotonic()
    if n < 2:
        return _finish({"claim": claim, "params": params, "outcome": "infeasible",
                        "notes": ("n >= 2 required: two star leaves share the "
                                  "center, so K_{2,1} is present",)}, start)
    try:
        report = star_witness(m)
    except ParameterError as exc:
        return _finish({"claim": claim, "params": params, "outcome": "infeasible",
                        "notes": (str(exc),)}, start)
    g, gbar = report.graph, report.complement_graph
    problems = []
    if not k2n_free(g, n):
        problems.append(f"witness is not K_2,{n}-free")
    if m <= gbar.order and has_cycle_of_length(gbar, m) is not None:
        problems.append(f"complement contains C_{m}")
    if variant == "pair" and m + 1 <= gbar.order \
            and has_cycle_of_length(gbar, m + 1) is not None:
        problems.append(f"complement contains C_{m + 1}")
    if report.failed:
        problems.append("construction report flagged FAILED")
    if problems:
        cex = {"graph6": encode_graph6(g), "detail": "; ".join(problems)}
        return _finish({"claim": claim, "params": params,
                        "outcome": "counterexample", "hypothesis_count": 1,
                        "counterexample": cex}, start)
    return _finish({"claim": claim, "params": params, "outcome": "verified",
                    "hypothesis_count": 1,
                    "extra": {"witness_graph6": encode_graph6(g)}}, start)


def verify_badness(n: int, m: int) -> VerificationReport:
    """A witness on n+m+1 vertices shows R(K_{2,n}, C_{2m}) > n+m+1."""
    params = {"n": n, "m": m, "order": n + m + 1}
    start = time.monotonic()
    cover = badness_parameter_cover(n, m)
    kind = cover["construction"]
    if kind in ("unknown", "uncovered"):
        return _finish({"claim": "thm1.4", "params": params,
                        "outcome": "infeasible",
                        "notes": (cover.get("reason", kind),),
                        "extra": {"cover": cover}}, start)
    try:
        if kind == "lemma41":
            report = lemma41_witness(m, cover["p"], cover["t"])
        else:
            report = lemma42_witness(m, cover["q"], cover["t"])
    except ParameterError as exc:
        return _finish({"claim": "thm1.4", "params": params,
                        "outcome": "infeasible", "notes": (str(exc),),
                        "extra": {"cover": cover}}, start)
    g, gbar = report.graph, report.complement_graph
    problems = []
    if g.order != n + m + 1:
        problems.append(f"witness order {g.order} != {n + m + 1}")
    if not k2n_free(g, n):
        problems.append(f"witness is not K_2,{n}-free")
    if 2 * m <= gbar.order and has_cycle_of_length(gbar, 2 * m) is not None:
        problems.append(f"complement contains C_{2 * m}")
    if report.failed:
        problems.append("construction report flagged FAILED")
    if problems:
        cex = {"graph6": encode_graph6(g), "detail": "; ".join(problems)}
        return _finish({"claim": "thm1.4", "params": params,
                        "outcome": "counterexample", "hypothesis_count": 1,
                        "counterexample": cex,
                        "extra": {"cover": cover}}, start)
    return _finish({"claim": "thm1.4", "params": params, "outcome": "verified",
                    "hypothesis_count": 1,
                    "extra": {"cover": cover,
                              "witness_graph6": encode_graph6(g)}}, start)


def _check_observations(g: Graph, cycle: tuple[int, ...]) -> tuple[int, str | None]:
    """Check the three longest-cycle adjacency restrictions on one cycle.

    Returns (pairs examined, violation description or None).  Index pairs
    where the implied longer cycle would degenerate (the two target
    vertices coincide) are skipped: obs 3's +1/+2 form needs i != j+1 and
    its -1/-2 mirror needs i != j-1, all mod cycle length.
    """
    l = len(cycle)
    on = 0
    for v in cycle:
        on |= 1 << v
    xset = [v for v in bits(((1 << g.order) - 1) & ~on)]
    if len(xset) < 2:
        return 0, None
    nbr_idx = {x: [i for i in range(l) if g.adj[x] >> cycle[i] & 1] for x in xset}
    pairs = 0
    for x in xset:
        idx = nbr_idx[x]
        for i in idx:
            if (i + 1) % l in idx:
                return pairs, (f"obs1: vertex {x} adjacent to consecutive "
                               f"cycle vertices {cycle[i]},{cycle[(i + 1) % l]}")
    for ai, x in enumerate(xset):
        idx = nbr_idx[x]
        for y in xset[ai + 1:]:
            pairs += 1
            for x_, y_ in ((x, y), (y, x)):
                xi, yrow = nbr_idx[x_], g.adj[y_]
                for i in xi:
                    for j in xi:
                        if i == j:
                            continue
                        for d1, d2 in ((1, 1), (-1, -1), (1, 2), (-1, -2)):
                            if d2 == 2 and (i - j) % l == 1:
                                continue
                            if d2 == -2 and (j - i) % l == 1:
                                continue
                            a = cycle[(i + d1) % l]
                            b = cycle[(j + d2) % l]
                            if yrow >> a & 1 and yrow >> b & 1:
                                obs = "obs2" if abs(d2) == 1 else "obs3"
                                return pairs, (
                                    f"{obs}: x={x_} adjacent to cycle "
                                    f"positions {i},{j}; y={y_} adjacent to "
                                    f"offsets {d1:+},{d2:+} of them")
    return pairs, None


def verify_lemma_3_1(max_order: int, workers: int = 1,
                     cycle_cap: int = CYCLE_CAP) -> VerificationReport:
    """Adjacency restrictions for two vertices off a longest cycle.

    For every graph up to max_order, every maximum-length cycle (dedup up
    to rotation/reflection, capped), every off-cycle pair: no off-cycle
    vertex has two consecutive cycle neighbors, and the paired shift
    patterns (+1,+1), (-1,-1), (+1,+2), (-1,-2) never both land in the
    other vertex's neighborhood.
    """
    params = {"max_order": max_order}
    start = time.monotonic()
    if max_order > LEMMA_3_1_MAX_ORDER:
        return _finish({"claim": "lemma3.1", "params": params,
                        "outcome": "infeasible",
                        "notes": (f"max_order beyond guideline "
                                  f"{LEMMA_3_1_MAX_ORDER}",)}, start)
    triples = 0
    graphs_seen = 0
    cap_hits = 0
    cex: dict | None = None
    for order in range(5, max_order + 1):
        for g in enumerate_parallel(order, workers=workers):
            graphs_seen += 1
            best = longest_cycle(g)
            if best is None or len(best.vertices) > order - 2:
                continue
            cycles, capped = all_longest_cycles(g, cap=cycle_cap)
            if capped:
                cap_hits += 1
            for wit in cycles:
                pairs, violation = _check_observations(g, wit.vertices)
                triples += pairs
                if violation is not None:
                    cex = _pick(cex, {
                        "graph6": encode_graph6(g),
                        "detail": f"cycle {list(wit.vertices)}: {violation}",
                    })
    outcome = ("counterexample" if cex
               else "verified" if triples else "verified-vacuous")
    return _finish({"claim": "lemma3.1", "params": params, "outcome": outcome,
                    "hypothesis_count": triples, "counterexample": cex,
                    "notes": (f"cycle cap hit on {cap_hits} graphs",),
                    "extra": {"graphs_examined": graphs_seen,
                              "cycle_cap": cycle_cap}}, start)


class HamiltonianHypothesisFilter(GenerationFilter):
    """Hereditary relaxation of the Hamiltonicity lemma's hypothesis.

    Both conditions survive vertex deletion: C_m-freeness directly, and
    the pair-union bound with slack m+1-k at order k, since adding one
    vertex grows any pair's neighborhood union by at most one.
    2-connectivity is not hereditary and is checked only at the top.
    """

    hereditary = True

    def __init__(self, m: int, nonadjacent_only: bool = False):
        self.m = m
        self.nonadjacent_only = nonadjacent_only
        self.name = f"hamiltonian_hypothesis({m})"

    def accepts(self, g: Graph) -> bool:
        m = self.m
        slack = m + 1 - g.order
        for u in range(g.order):
            for v in range(u + 1, g.order):
                if self.nonadjacent_only and g.adj[u] >> v & 1:
                    continue
                if 2 * (union_neighborhood_excl(g, u, v) + slack) < m:
                    return False
        if g.order >= m and has_cycle_of_length(g, m) is not None:
            return False
        return True


def verify_hamiltonian_lemma(m: int, workers: int = 1) -> VerificationReport:
    """2-connected, C_m-free, all pair unions >= m/2 on m+1 vertices
    implies Hamiltonian.

    The m/2 bound is compared exactly (2*count >= m), with no rounding.
    The pair condition ranges over all distinct vertex pairs; the count
    under nonadjacent pairs only is reported as supplementary information.
    """
    params = {"m": m, "order": m + 1}
    start = time.monotonic()
    if m + 1 > HAMILTONIAN_LEMMA_MAX_ORDER:
        return _finish({"claim": "thm1.5", "params": params,
                        "outcome": "infeasible",
                        "notes": (f"order beyond guideline "
                                  f"{HAMILTONIAN_LEMMA_MAX_ORDER}",)}, start)
    count = 0
    relaxed = 0
    cex: dict | None = None
    for g in enumerate_parallel(m + 1, HamiltonianHypothesisFilter(m), workers):
        if connectivity(g) < 2:
            continue
        count += 1
        if is_hamiltonian(g) is None:
            cex = _pick(cex, {
                "graph6": encode_graph6(g),
                "detail": "satisfies hypothesis but is not Hamiltonian",
            })
    relaxed_filter = HamiltonianHypothesisFilter(m, nonadjacent_only=True)
    for g in enumerate_parallel(m + 1, relaxed_filter, workers):
        if connectivity(g) >= 2:
            relaxed += 1
    outcome = ("counterexample" if cex
               else "verified" if count else "verified-vacuous")
    return _finish({"claim": "thm1.5", "params": params, "outcome": outcome,
                    "hypothesis_count": count, "counterexample": cex,
                    "notes": ("pair-union bound read over all distinct pairs; "
                              "nonadjacent-pairs-only reading counted in "
                              "extra.relaxed_hypothesis_count",),
                    "extra": {"relaxed_hypothesis_count": relaxed}}, start)


def verify_two_connected_lemma(n: int, m: int, workers: int = 1) -> VerificationReport:
    """K_{2,n}-free G on m+1 vertices with C_m-free complement has
    2-connected complement."""
    params = {"n": n, "m": m, "order": m + 1}
    start = time.monotonic()
    if m + 1 > HAMILTONIAN_LEMMA_MAX_ORDER:
        return _finish({"claim": "lemma2.6", "params": params,
                        "outcome": "infeasible",
                        "notes": (f"order beyond guideline "
                                  f"{HAMILTONIAN_LEMMA_MAX_ORDER}",)}, start)
    in_range = m >= 2 * n + 2
    count = 0
    cex: dict | None = None
    for g in enumerate_parallel(m + 1, K2nFreeFilter(n), workers):
        gbar = complement(g)
        if has_cycle_of_length(gbar, m) is not None:
            continue
        count += 1
        if connectivity(gbar) < 2:
            cex = _pick(cex, {
                "graph6": encode_graph6(g),
                "detail": "complement is C_m-free but not 2-connected",
            })
    outcome = ("counterexample" if cex
               else "verified" if count else "verified-vacuous")
    note = (f"stated range m >= 2n+2 = {2 * n + 2}: "
            f"{'inside' if in_range else 'outside (outcome reported, not asserted)'}")
    return _finish({"claim": "lemma2.6", "params": params, "outcome": outcome,
                    "hypothesis_count": count, "counterexample": cex,
                    "notes": (note,)}, start)


def verify_cited_lemmas(max_order: int, workers: int = 1) -> VerificationReport:
    """Classical cycle lemmas checked exhaustively at small order.

    - degree-sum cycle bound: 2-connected with nonadjacent degree sums
      >= k implies a cycle of length >= min(k, order)
    - minimum-degree Hamiltonicity: 2*delta >= order (order >= 3) implies
      Hamiltonian
    - Nash-Williams: 2-connected with 3*delta >= order+2 and
      delta >= independence number implies Hamiltonian
    - neighborhood-union bound: 2-connected with all pair unions >= k and
      circumference >= order-k implies circumference >= min(2k-2, order-1)
    """
    params = {"max_order": max_order}
    start = time.monotonic()
    counts = {"degree_sum_cycle": 0, "min_degree_hamiltonian": 0,
              "nash_williams": 0, "neighborhood_union_cycle": 0}
    cex: dict | None = None
    for order in range(3, max_order + 1):
        for g in enumerate_parallel(order, workers=workers):
            n_ = g.order
            delta = min_degree(g)
            two_conn = connectivity(g) >= 2
            circ = circumference(g)
            ham = None
            if 2 * delta >= n_:
                counts["min_degree_hamiltonian"] += 1
                ham = is_hamiltonian(g)
                if ham is None:
                    cex = _pick(cex, {"graph6": encode_graph6(g),
                                      "detail": "min_degree_hamiltonian"})
            if two_conn:
                ks = [g.adj[u].bit_count() + g.adj[v].bit_count()
                      for u in range(n_) for v in range(u + 1, n_)
                      if not g.adj[u] >> v & 1]
                k = min(ks) if ks else n_
                counts["degree_sum_cycle"] += 1
                if circ < min(k, n_):
                    cex = _pick(cex, {"graph6": encode_graph6(g),
                                      "detail": "degree_sum_cycle"})
                if 3 * delta >= n_ + 2 and delta >= independence_number(g):
                    counts["nash_williams"] += 1
                    if is_hamiltonian(g) is None:
                        cex = _pick(cex, {"graph6": encode_graph6(g),
                                          "detail": "nash_williams"})
                ku = min(union_neighborhood_excl(g, u, v)
                         for u in range(n_) for v in range(u + 1, n_))
                if circ >= n_ - ku:
                    counts["neighborhood_union_cycle"] += 1
                    if circ < min(2 * ku - 2, n_ - 1):
                        cex = _pick(cex, {"graph6": encode_graph6(g),
                                          "detail": "neighborhood_union_cycle"})
    total = sum(counts.values())
    outcome = ("counterexample" if cex
               else "verified" if total else "verified-vacuous")
    return _finish({"claim": "lemma-props", "params": params,
                    "outcome": outcome, "hypothesis_count": total,
                    "counterexample": cex,
                    "extra": {"per_lemma_hypothesis_counts": counts}}, start)


def compute_ramsey(n: int, kind: str, m: int, max_order: int = RAMSEY_MAX_ORDER,
                   workers: int = 1) -> VerificationReport:
    """Exact R(K_{2,n}, C_m) or R(K_{2,n}, C_{m,m+1}) by brute bracketing.

    Increases N until no graph on N vertices is K_{2,n}-free with a
    target-free complement; reports the value with a maximal witness.
    """
    if kind not in ("cycle", "cycle_pair"):
        raise ParameterError(f"kind must be cycle or cycle_pair, got {kind!r}")
    params = {"n": n, "m": m, "kind": kind, "max_order": max_order}
    start = time.monotonic()
    if n < 1 or m < 3:
        return _finish({"claim": "ramsey-exact", "params": params,
                        "outcome": "infeasible",
                        "notes": ("n >= 1 and m >= 3 required",)}, start)

    def target_free(gbar: Graph) -> bool:
        if m <= gbar.order and has_cycle_of_length(gbar, m) is not None:
            return False
        if kind == "cycle_pair" and m + 1 <= gbar.order \
                and has_cycle_of_length(gbar, m + 1) is not None:
            return False
        return True

    witness: str | None = None
    examined = 0
    for order in range(1, max_order + 1):
        found: str | None = None
        for g in enumerate_parallel(order, K2nFreeFilter(n), workers):
            examined += 1
            if target_free(complement(g)):
                g6 = encode_graph6(g)
                if found is None or g6 < found:
                    found = g6
        if found is None:
            return _finish({"claim": "ramsey-exact", "params": params,
                            "outcome": "verified", "hypothesis_count": examined,
                            "extra": {"value": order,
                                      "witness_graph6": witness}}, start)
        witness = found
    return _finish({"claim": "ramsey-exact", "params": params,
                    "outcome": "infeasible", "hypothesis_count": examined,
                    "notes": (f"no refutation up to order {max_order}; "
                              "cannot bracket the value",),
                    "extra": {"witness_graph6": witness}}, start)
