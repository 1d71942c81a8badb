"""Tutte-type conditions, certificates, theorem checks and extremal graphs.

Threshold comparisons use :class:`fractions.Fraction`; ties decide whether a
theorem applies, so floating point is never used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from factorlab import _pykernels
from factorlab._backend import COMPILED, kernels
from factorlab.decomposition import (
    FAIL, PASS, SKIPPED, VACUOUS, CheckResult, decompose, is_critical,
)
from factorlab.graph import (
    Graph, _check_vertices, add_edge, bits, complete, complete_bipartite, component_masks,
    copies, delete_vertices, empty, induced, is_connected, is_k_connected, join,
    neighborhood_union, odd_components,
)
from factorlab.optimizer import Budget, BudgetError, has_factor, has_hn_factor
from factorlab.prescriptions import Prescription, h_n_star, h_o, interval_set

DEFAULT_SUBSET_CAP = 20


@dataclass(frozen=True)
class ConditionReport:
    """Result of a subset sweep; ``violator`` is ``None`` iff the condition holds."""

    condition: str
    holds: bool
    violator: tuple[int, ...] | None = None
    lhs: int | None = None
    rhs: Fraction | int | None = None

    def to_json(self) -> dict:
        rhs = self.rhs
        if isinstance(rhs, Fraction):
            rhs = str(rhs) if rhs.denominator != 1 else rhs.numerator
        return {"condition": self.condition, "holds": self.holds,
                "violator": list(self.violator) if self.violator is not None else None,
                "lhs": self.lhs, "rhs": rhs}


def _violator_kernel(order: int):
    return kernels if COMPILED and order <= 63 else _pykernels


def _subset_sweep(G: Graph, name: str, kind: int, coef: int, include_empty: bool,
                  max_vertices: int) -> ConditionReport:
    if G.order > max_vertices:
        raise BudgetError(f"subset sweep over {G.order} vertices exceeds the cap of {max_vertices}")
    S, lhs = _violator_kernel(G.order).first_violator(
        G.order, G.adjacency, kind, coef, include_empty)
    if S < 0:
        return ConditionReport(name, True)
    members = tuple(bits(S))
    return ConditionReport(name, False, members, lhs, coef * len(members))


def check_cui_kano(G: Graph, n: int, max_vertices: int = DEFAULT_SUBSET_CAP) -> ConditionReport:
    """``o(G - S) <= 2n|S|`` for every ``S``, the empty set included."""
    return _subset_sweep(G, "cui-kano", _pykernels.KIND_ODD, 2 * n, True, max_vertices)


def check_cui_kano_nonempty(G: Graph, n: int,
                            max_vertices: int = DEFAULT_SUBSET_CAP) -> ConditionReport:
    return _subset_sweep(G, "cui-kano-nonempty", _pykernels.KIND_ODD, 2 * n, False, max_vertices)


def check_amahashi(G: Graph, n: int, max_vertices: int = DEFAULT_SUBSET_CAP) -> ConditionReport:
    """``o(G - S) <= (2n-1)|S|``; equivalent to an ``h_o(n)``-factor."""
    return _subset_sweep(G, "amahashi", _pykernels.KIND_ODD, 2 * n - 1, True, max_vertices)


def check_las_vergnas(G: Graph, n: int,
                      max_vertices: int = DEFAULT_SUBSET_CAP) -> ConditionReport:
    """At most ``n|S|`` isolated vertices in ``G - S``; equivalent to a ``[1, n]``-factor."""
    return _subset_sweep(G, "las-vergnas", _pykernels.KIND_ISOLATED, n, True, max_vertices)


def neighborhood_threshold(g: int, n: int) -> Fraction:
    return max(Fraction(g - 2, 2 * n) - 1,
               Fraction(2 * g - 4, 4 * n + 1),
               Fraction(g - 1, 2 * n + 1),
               Fraction(4 * n - 3))


def check_neighborhood_condition(G: Graph, n: int) -> ConditionReport:
    """Every non-adjacent pair has ``|N(u) | N(v)|`` strictly above
    :func:`neighborhood_threshold`."""
    t = neighborhood_threshold(G.order, n)
    for u in range(G.order):
        for v in range(u + 1, G.order):
            if G.has_edge(u, v):
                continue
            size = len(neighborhood_union(G, u, v))
            if not size > t:
                return ConditionReport("neighborhood", False, (u, v), size, t)
    return ConditionReport("neighborhood", True, rhs=t)


def threshold_simplifies(g: int, n: int) -> bool:
    """Whether the four-term maximum equals ``(g-2)/(2n) - 1``."""
    if g < 1 or n < 1:
        raise ValueError("g and n must be positive")
    return neighborhood_threshold(g, n) == Fraction(g - 2, 2 * n) - 1


# --------------------------------------------------------------------------
# certificates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """A set ``S`` whose removal leaves at least ``2n|S| + 1`` odd components
    without an H_n-factor.  ``violations`` lists any failed self-check; an
    empty tuple means the certificate is valid."""

    n: int
    s_set: tuple[int, ...]
    odd_comps: tuple[tuple[int, ...], ...]
    factorless_flags: tuple[bool, ...]
    odd_total: int
    violations: tuple[str, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def inequality_rhs(self) -> int:
        return 2 * self.n * len(self.s_set) + 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s_set": list(self.s_set),
            "odd_components": [list(c) for c in self.odd_comps],
            "checks": {
                "inequality_lhs": len(self.odd_comps),
                "inequality_rhs": self.inequality_rhs,
                "odd_components_of_g_minus_s": self.odd_total,
                "per_component_factorless": list(self.factorless_flags),
            },
            "violations": list(self.violations),
        }


def extract_certificate(G: Graph, n: int, budget: Budget | None = None) -> Certificate:
    """``S = A`` of the ``h_n_star(n)`` decomposition, with the components of
    ``G - S`` inside ``D``.  Each listed component is re-solved directly."""
    if odd_components(G)[0]:
        raise ValueError("graph has an odd component")
    if has_hn_factor(G, n, budget):
        raise ValueError("graph has an H_n-factor; there is nothing to certify")
    dec = decompose(G, Prescription.uniform(h_n_star(n), G.order), budget)
    S = tuple(sorted(dec.a_set))
    keep = ((1 << G.order) - 1) & ~sum(1 << v for v in S)
    comps = [tuple(bits(c)) for c in component_masks(G, keep)]
    listed = [c for c in comps if dec.d_set.intersection(c)]
    violations = []
    if dec.b_set:
        violations.append(f"B is nonempty: {sorted(dec.b_set)}")
    if not S:
        violations.append("S = A is empty")
    for c in listed:
        if not dec.d_set.issuperset(c):
            violations.append(f"component {list(c)} of G - S is not inside D")
        if len(c) % 2 == 0:
            violations.append(f"component {list(c)} has even order")
    flags = tuple(not has_hn_factor(induced(G, c)[0], n, budget) for c in listed)
    for c, fl in zip(listed, flags):
        if not fl:
            violations.append(f"component {list(c)} has an H_n-factor")
    if len(listed) < 2 * n * len(S) + 1:
        violations.append(f"{len(listed)} listed components < 2n|S|+1 = {2 * n * len(S) + 1}")
    odd_total = sum(1 for c in comps if len(c) % 2)
    return Certificate(n, S, tuple(listed), flags, odd_total, tuple(violations))


# --------------------------------------------------------------------------
# theorem checks
# --------------------------------------------------------------------------

def verify_certificate(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    name = "certificate"
    if odd_components(G)[0]:
        return CheckResult(name, SKIPPED, "graph has an odd component")
    if has_hn_factor(G, n, budget):
        return CheckResult(name, VACUOUS, "graph has an H_n-factor")
    cert = extract_certificate(G, n, budget)
    if cert.valid:
        return CheckResult(name, PASS, witness=cert.to_json())
    return CheckResult(name, FAIL, "; ".join(cert.violations), cert.to_json())


def verify_corollary_ck(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    name = "corollary-ck"
    report = check_cui_kano(G, n)
    if not report.holds:
        return CheckResult(name, VACUOUS, "condition fails", report.to_json())
    if has_hn_factor(G, n, budget):
        return CheckResult(name, PASS)
    return CheckResult(name, FAIL, "condition holds but no H_n-factor")


def verify_odd_order_theorem(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    name = "odd-order"
    if G.order % 2 == 0 or not is_connected(G):
        return CheckResult(name, SKIPPED, "needs a connected graph of odd order")
    if not check_cui_kano_nonempty(G, n).holds:
        return CheckResult(name, SKIPPED, "condition over nonempty S fails")
    if has_hn_factor(G, n, budget):
        return CheckResult(name, PASS, "has an H_n-factor")
    if is_critical(G, Prescription.uniform(h_n_star(n), G.order), budget):
        return CheckResult(name, PASS, "critical for h_n_star")
    return CheckResult(name, FAIL, "neither an H_n-factor nor h_n_star-critical")


def verify_g_minus_v_theorem(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    name = "g-minus-v"
    if odd_components(G)[0]:
        return CheckResult(name, SKIPPED, "graph has an odd component")
    for v in G.vertices():
        if not has_hn_factor(delete_vertices(G, [v])[0], n, budget):
            return CheckResult(name, VACUOUS, f"G - {v} has no H_n-factor", {"vertex": v})
    if has_hn_factor(G, n, budget):
        return CheckResult(name, PASS)
    return CheckResult(name, FAIL, "every G - v has an H_n-factor but G does not")


def verify_kconnected_theorem(G: Graph, n: int, k: int, u: int, v: int,
                              budget: Budget | None = None) -> CheckResult:
    name = "k-connected"
    _check_vertices(G, (u, v))
    if u == v or G.has_edge(u, v):
        return CheckResult(name, SKIPPED, "u, v must be distinct and non-adjacent")
    if G.order % 2 or not is_k_connected(G, k):
        return CheckResult(name, SKIPPED, "needs an even-order k-connected graph")
    union = len(neighborhood_union(G, u, v))
    if union < G.order - 2 * n * k:
        return CheckResult(name, SKIPPED,
                           f"|N(u) | N(v)| = {union} < g - 2nk = {G.order - 2 * n * k}")
    before = has_hn_factor(G, n, budget)
    after = has_hn_factor(add_edge(G, u, v), n, budget)
    if before == after:
        return CheckResult(name, PASS, witness={"has_factor": before})
    return CheckResult(name, FAIL, "adding uv changes H_n-factor existence",
                       {"G": before, "G+uv": after})


def verify_amahashi(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    cond = check_amahashi(G, n).holds
    fac = has_factor(G, Prescription.uniform(h_o(n), G.order), budget)
    if cond == fac:
        return CheckResult("amahashi", PASS)
    return CheckResult("amahashi", FAIL, f"condition {cond}, factor {fac}")


def verify_las_vergnas(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    cond = check_las_vergnas(G, n).holds
    fac = has_factor(G, Prescription.uniform(interval_set(1, n), G.order), budget)
    if cond == fac:
        return CheckResult("las-vergnas", PASS)
    return CheckResult("las-vergnas", FAIL, f"condition {cond}, factor {fac}")


def verify_neighborhood_theorem(G: Graph, n: int, budget: Budget | None = None) -> CheckResult:
    name = "neighborhood"
    if odd_components(G)[0]:
        return CheckResult(name, SKIPPED, "graph has an odd component")
    if not check_neighborhood_condition(G, n).holds:
        return CheckResult(name, VACUOUS, "neighbourhood condition fails")
    if has_hn_factor(G, n, budget):
        return CheckResult(name, PASS)
    return CheckResult(name, FAIL, "condition holds but no H_n-factor")


# --------------------------------------------------------------------------
# extremal constructions
# --------------------------------------------------------------------------

def gen_apex_cliques(n: int) -> Graph:
    """``K_1 + (2n+1) K_{2n+1}``; vertex 0 is the apex."""
    if n < 1:
        raise ValueError("n must be positive")
    return join(complete(1), copies(complete(2 * n + 1), 2 * n + 1))


def gen_bipartite_sharp(n: int, m: int) -> Graph:
    """``K_{m, 2nm+1}``; vertices ``0..m-1`` form the small side."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return complete_bipartite(m, 2 * n * m + 1)


def gen_clique_independent(n: int, k: int) -> Graph:
    """``K_k + (2nk+1) K_1`` for odd ``k``; vertices ``0..k-1`` form the clique."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k % 2 == 0:
        raise ValueError("k must be odd")
    return join(complete(k), empty(2 * n * k + 1))


def epsilon_witness(n: int, epsilon: Fraction | int | str,
                    budget: Budget | None = None) -> tuple[Graph, tuple[int, ...]]:
    """``K_{m, 2nm+1}`` with ``m`` the least integer above ``1/epsilon`` and
    ``S`` its small side; raises :class:`TheoremViolation` if the graph
    fails to satisfy the strict inequality or has an H_n-factor."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    m = math.floor(1 / eps) + 1
    G = gen_bipartite_sharp(n, m)
    S = tuple(range(m))
    lhs = odd_components(G, S)[0]
    if lhs != 2 * n * m + 1 or not lhs < (2 * n + eps) * m:
        raise TheoremViolation(f"o(G - S) = {lhs} fails the epsilon inequality")
    big = budget or Budget(max_edges=max(25, G.size), max_vertices=max(20, G.order))
    if has_hn_factor(G, n, big):
        raise TheoremViolation(f"K_{{{m},{2 * n * m + 1}}} has an H_n-factor")
    return G, S


class TheoremViolation(AssertionError):
    """A construction or certificate failed a property it must have."""


def verify_sharpness(G: Graph, family: str, n: int, param: int,
                     budget: Budget | None = None) -> CheckResult:
    """Family-specific checks for the three constructions."""
    name = "sharpness"
    if family == "apex-cliques":
        ck = check_cui_kano(G, n, max_vertices=max(DEFAULT_SUBSET_CAP, G.order))
        apex_odd = odd_components(G, [0])[0]
        fac = has_hn_factor(G, n, budget)
        if fac and not ck.holds and apex_odd == 2 * n + 1:
            return CheckResult(name, PASS)
        return CheckResult(name, FAIL, f"factor={fac}, cui-kano={ck.holds}, o(G-apex)={apex_odd}")
    if family == "bipartite-sharp":
        m = param
        lhs = odd_components(G, range(m))[0]
        fac = has_hn_factor(G, n, budget)
        # o(G-S)/|S| exceeds 2n by exactly 1/m, so every epsilon > 1/m works
        if not fac and lhs == 2 * n * m + 1 and Fraction(lhs, m) - 2 * n == Fraction(1, m):
            return CheckResult(name, PASS)
        return CheckResult(name, FAIL, f"factor={fac}, o(G-S)={lhs}")
    if family == "clique-independent":
        k = param
        if has_hn_factor(G, n, budget):
            return CheckResult(name, FAIL, "construction has an H_n-factor")
        for u in range(k, G.order):
            for v in range(u + 1, G.order):
                if not has_hn_factor(add_edge(G, u, v), n, budget):
                    return CheckResult(name, FAIL, f"G + {u}{v} has no H_n-factor",
                                       {"edge": [u, v]})
        return CheckResult(name, PASS)
    raise ValueError(f"unknown family {family!r}")
