"""Exact minimisation of the deviation over all spanning subgraphs.

The search is a depth-first branch and bound over the host's edge index
(see ``_pykernels.solve``).  The lower bound at a node is, summed over
vertices, the smallest deviation reachable by the undecided incident edges.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from factorlab import _pykernels
from factorlab._backend import COMPILED, kernels
from factorlab.graph import Graph, bits
from factorlab.prescriptions import (
    DegreeSet, Prescription, SpanningSubgraph, h_n,
)

MAX_MILLIS_ENV = "FACTORLAB_MAX_MILLIS"


class BudgetError(RuntimeError):
    """The instance is over a size cap or the search ran out of time.

    ``best_bound`` is the smallest deviation seen before stopping (``None``
    if no subgraph was completed) and ``lower_bound`` the root lower bound.
    """

    def __init__(self, message: str, best_bound: int | None = None,
                 lower_bound: int | None = None):
        super().__init__(message)
        self.best_bound = best_bound
        self.lower_bound = lower_bound


@dataclass(frozen=True)
class Budget:
    max_edges: int = 25
    max_vertices: int = 20
    max_millis: int | None = None

    def millis(self) -> int | None:
        env = os.environ.get(MAX_MILLIS_ENV)
        if env:
            return int(env)
        return self.max_millis


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class SolveReport:
    delta: int
    witness: SpanningSubgraph
    degree_sets: tuple[frozenset[int], ...]
    optimum_count: int | None = None
    nodes: int = field(default=0, compare=False)

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "witness": [list(e) for e in self.witness.edges],
            "degree_sets": [sorted(s) for s in self.degree_sets],
            "optimum_count": self.optimum_count,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _kernel_for(G: Graph):
    if COMPILED and G.order <= 64 and G.size <= 63:
        return kernels
    return _pykernels


def _check_edges(G: Graph, budget: Budget) -> None:
    if G.size > budget.max_edges:
        raise BudgetError(
            f"graph has {G.size} edges, over the cap of {budget.max_edges}; "
            "pass a larger Budget(max_edges=...) to override")


def _run(G: Graph, P: Prescription, mode: int, budget: Budget):
    P.check_host(G)
    _check_edges(G, budget)
    eu = [u for u, _ in G.edges]
    ev = [v for _, v in G.edges]
    status, best, witness, isets, count, nodes, root_lb = _kernel_for(G).solve(
        G.order, eu, ev, P.deviation_table(G), mode, budget.millis())
    if status == _pykernels.STATUS_TIMEOUT:
        raise BudgetError(
            f"search timed out after {budget.millis()} ms "
            f"(best deviation found: {best if best >= 0 else 'none'}, lower bound {root_lb})",
            best if best >= 0 else None, root_lb)
    return best, witness, isets, count, nodes


def solve(G: Graph, P: Prescription, budget: Budget | None = None, *,
          count: bool = True) -> SolveReport:
    """Exact ``delta(H)``, a lexicographically smallest optimal subgraph and
    the optimal degree sets ``I_H(v)``.

    With ``count=False`` tied subtrees that cannot add a new degree to any
    ``I_H(v)`` are pruned, which is much faster on dense hosts; the report
    then carries ``optimum_count=None``.
    """
    budget = budget or DEFAULT_BUDGET
    mode = _pykernels.MODE_ALL if count else _pykernels.MODE_ISETS
    best, witness, isets, n_opt, nodes = _run(G, P, mode, budget)
    return SolveReport(
        delta=best,
        witness=SpanningSubgraph(G, witness),
        degree_sets=tuple(frozenset(bits(s)) for s in isets),
        optimum_count=n_opt if count else None,
        nodes=nodes,
    )


def optimal_degree_sets(G: Graph, P: Prescription,
                        budget: Budget | None = None) -> tuple[frozenset[int], ...]:
    return solve(G, P, budget, count=False).degree_sets


def _check_vertices(G: Graph, budget: Budget) -> None:
    if G.order > budget.max_vertices:
        raise BudgetError(
            f"graph has {G.order} vertices, over the cap of {budget.max_vertices}")


def find_factor(G: Graph, P: Prescription,
                budget: Budget | None = None) -> SpanningSubgraph | None:
    """The lexicographically smallest H-factor, or ``None``.

    Stops at the first zero-deviation leaf; leaves are visited in
    lexicographic order so that leaf is the smallest factor.
    """
    budget = budget or DEFAULT_BUDGET
    _check_vertices(G, budget)
    best, witness, _, _, _ = _run(G, P, _pykernels.MODE_EXISTS, budget)
    return SpanningSubgraph(G, witness) if best == 0 else None


def has_factor(G: Graph, P: Prescription, budget: Budget | None = None) -> bool:
    return find_factor(G, P, budget) is not None


def hn_prescription(G: Graph, n: int) -> Prescription:
    return Prescription.uniform(h_n(n), G.order)


def has_hn_factor(G: Graph, n: int, budget: Budget | None = None) -> bool:
    return has_factor(G, hn_prescription(G, n), budget)


def uniform(G: Graph, D: DegreeSet) -> Prescription:
    return Prescription.uniform(D, G.order)
