"""Lovász's (A, B, C, D) decomposition and runtime checks of its lemmas.

The decomposition is always computed from the optimal degree sets of *all*
optimal subgraphs; a single optimum would misclassify vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from factorlab.graph import (
    Graph, _mask, component_masks, components, delete_vertices, induced, is_connected,
)
from factorlab.optimizer import Budget, optimal_degree_sets, solve
from factorlab.prescriptions import Prescription, shift_by_set


@dataclass(frozen=True)
class Decomposition:
    graph: Graph
    prescription: Prescription
    a_set: frozenset[int]
    b_set: frozenset[int]
    c_set: frozenset[int]
    d_set: frozenset[int]
    degree_sets: tuple[frozenset[int], ...]

    def classes(self) -> tuple[frozenset[int], ...]:
        return self.a_set, self.b_set, self.c_set, self.d_set

    def to_json(self, delta_search: int | None = None,
                delta_formula: int | None = None) -> dict:
        out = {
            "A": sorted(self.a_set),
            "B": sorted(self.b_set),
            "C": sorted(self.c_set),
            "D": sorted(self.d_set),
            "degree_sets": [sorted(s) for s in self.degree_sets],
        }
        if delta_search is not None:
            out["delta_search"] = delta_search
        if delta_formula is not None:
            out["delta_formula"] = delta_formula
        return out


def classify(I: frozenset[int], H) -> str:
    if I <= set(H.values):
        return "C"
    if min(I) >= H.max:
        return "A"
    if max(I) <= H.min:
        return "B"
    return "D"


def decompose(G: Graph, P: Prescription, budget: Budget | None = None) -> Decomposition:
    P.check_host(G)
    isets = optimal_degree_sets(G, P, budget)
    parts: dict[str, set[int]] = {"A": set(), "B": set(), "C": set(), "D": set()}
    for v in G.vertices():
        parts[classify(isets[v], P[v])].add(v)
    return Decomposition(
        G, P,
        frozenset(parts["A"]), frozenset(parts["B"]),
        frozenset(parts["C"]), frozenset(parts["D"]),
        isets,
    )


def _check_matches(G: Graph, P: Prescription, D: Decomposition) -> None:
    if D.graph != G or D.prescription != P:
        raise ValueError("decomposition was computed for a different graph or prescription")


def delta_by_formula(G: Graph, P: Prescription, D: Decomposition) -> int:
    """``c(D) + sum_B min H - sum_A max H - sum_B d_{G-A}(v)``."""
    _check_matches(G, P, D)
    full = (1 << G.order) - 1
    c_d = len(component_masks(G, _mask(D.d_set))) if D.d_set else 0
    not_a = full & ~_mask(D.a_set)
    b_degree = sum(bin(G.adjacency[v] & not_a).count("1") for v in D.b_set)
    return (c_d
            + sum(P[v].min for v in D.b_set)
            - sum(P[v].max for v in D.a_set)
            - b_degree)


def is_critical(G: Graph, P: Prescription, budget: Budget | None = None) -> bool:
    """Connected, nonempty, and every vertex lands in ``D``."""
    if G.order == 0 or not is_connected(G):
        return False
    return len(decompose(G, P, budget).d_set) == G.order


# --------------------------------------------------------------------------
# lemma checks
# --------------------------------------------------------------------------

PASS = "pass"
VACUOUS = "vacuous"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check.

    ``vacuous`` means the hypothesis did not apply; ``skipped`` means a
    precondition of the check itself was unmet.  Neither is evidence.
    """

    name: str
    status: str
    detail: str = ""
    witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status,
                "detail": self.detail, "witness": self.witness}


def _require_allowed(P: Prescription) -> None:
    if not P.is_allowed:
        raise ValueError("Lovász's lemmas are stated for allowed prescriptions only")


def verify_no_cd_edges(G: Graph, D: Decomposition) -> CheckResult:
    name = "no-cd-edges"
    if not D.c_set or not D.d_set:
        return CheckResult(name, VACUOUS, "C or D is empty")
    for u, v in G.edges:
        if (u in D.c_set and v in D.d_set) or (v in D.c_set and u in D.d_set):
            return CheckResult(name, FAIL, f"edge {u}-{v} joins C and D", {"edge": [u, v]})
    return CheckResult(name, PASS)


def verify_interval_lemma(D: Decomposition) -> CheckResult:
    name = "interval"
    _require_allowed(D.prescription)
    if not D.d_set:
        return CheckResult(name, VACUOUS, "D is empty")
    for v in sorted(D.d_set):
        I = D.degree_sets[v]
        hits = [h for h in D.prescription[v] if min(I) <= h <= max(I)]
        for a, b in zip(hits, hits[1:]):
            if b == a + 1:
                return CheckResult(
                    name, FAIL,
                    f"vertex {v}: [{min(I)}, {max(I)}] meets H(v) in {a} and {b}",
                    {"vertex": v, "degree_set": sorted(I), "pair": [a, b]})
    return CheckResult(name, PASS)


def verify_component_criticality(G: Graph, P: Prescription, D: Decomposition,
                                 budget: Budget | None = None) -> CheckResult:
    """Every component ``T`` of ``G[D]`` under ``H' = P`` shifted by ``B``:
    ``delta = 1`` and ``T`` is ``H'``-critical.

    With ``delta = 1`` every optimal subgraph has total deviation 1 over
    nonnegative integers, so exactly one vertex deviates, by one.
    """
    name = "component-criticality"
    _check_matches(G, P, D)
    _require_allowed(P)
    if not D.d_set:
        return CheckResult(name, VACUOUS, "D is empty")
    shifted = shift_by_set(P, G, D.b_set)
    sub, label_map = induced(G, D.d_set)
    for comp in components(sub):
        labels = [label_map[i] for i in comp]
        T, tmap = induced(G, labels)
        PT = shifted.restrict(tmap)
        delta = solve(T, PT, budget, count=False).delta
        if delta != 1:
            return CheckResult(name, FAIL, f"component {labels} has delta {delta}",
                               {"component": labels, "delta": delta})
        if not is_critical(T, PT, budget):
            return CheckResult(name, FAIL, f"component {labels} is not critical",
                               {"component": labels})
    return CheckResult(name, PASS)


def verify_vertex_removal(G: Graph, P: Prescription, D: Decomposition,
                          budget: Budget | None = None) -> CheckResult:
    """Deleting any ``a`` in ``A`` leaves ``(A - a, B, C, D)``."""
    name = "vertex-removal"
    _check_matches(G, P, D)
    _require_allowed(P)
    if not D.a_set:
        return CheckResult(name, VACUOUS, "A is empty")
    for a in sorted(D.a_set):
        H, label_map = delete_vertices(G, [a])
        sub = decompose(H, P.restrict(label_map), budget)
        got = [frozenset(label_map[i] for i in part) for part in sub.classes()]
        want = [D.a_set - {a}, D.b_set, D.c_set, D.d_set]
        if got != want:
            return CheckResult(
                name, FAIL, f"removing {a} changes the decomposition",
                {"vertex": a,
                 "expected": [sorted(s) for s in want],
                 "got": [sorted(s) for s in got]})
    return CheckResult(name, PASS)
