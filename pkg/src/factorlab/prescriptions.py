"""Degree sets, per-vertex prescriptions and the deviation of a subgraph."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from factorlab.graph import Graph, _check_vertices, _mask, bits


@dataclass(frozen=True)
class DegreeSet:
    """A finite, strictly increasing set of permitted degrees.

    Negative values are legal: the ``-1`` in ``h_n_star`` never matches a
    real degree but changes which vertices count as under-saturated.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a degree set must be nonempty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("degree set values must be strictly increasing")

    @property
    def allowed(self) -> bool:
        """Every gap between consecutive values holds at most one integer."""
        return all(b - a <= 2 for a, b in zip(self.values, self.values[1:]))

    @property
    def min(self) -> int:
        return self.values[0]

    @property
    def max(self) -> int:
        return self.values[-1]

    def __contains__(self, d: object) -> bool:
        return d in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def shifted(self, by: int) -> "DegreeSet":
        return DegreeSet(tuple(h + by for h in self.values))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


def make_degree_set(values: Iterable[int]) -> DegreeSet:
    vals = sorted({int(v) for v in values})
    if not vals:
        raise ValueError("a degree set must be nonempty")
    return DegreeSet(tuple(vals))


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")


def h_o(n: int) -> DegreeSet:
    """The first ``n`` positive odd integers."""
    _check_n(n)
    return DegreeSet(tuple(range(1, 2 * n, 2)))


def h_n(n: int) -> DegreeSet:
    """``{1, 3, ..., 2n-1, 2n}``."""
    _check_n(n)
    return DegreeSet(tuple(range(1, 2 * n, 2)) + (2 * n,))


def h_n_star(n: int) -> DegreeSet:
    """``h_n(n)`` with ``-1`` added."""
    _check_n(n)
    return DegreeSet((-1,) + h_n(n).values)


def interval_set(a: int, b: int) -> DegreeSet:
    """``{a, ..., b}``, the prescription of an ``[a, b]``-factor."""
    return make_degree_set(range(a, b + 1))


def vertex_deviation(d: int, D: DegreeSet) -> int:
    return min(abs(d - h) for h in D.values)


class Prescription:
    """Assignment of a :class:`DegreeSet` to each vertex of a host graph."""

    __slots__ = ("_sets",)

    def __init__(self, sets: Sequence[DegreeSet]):
        self._sets = tuple(sets)

    @classmethod
    def uniform(cls, D: DegreeSet, order: int) -> "Prescription":
        return cls((D,) * order)

    @property
    def order(self) -> int:
        return len(self._sets)

    @property
    def sets(self) -> tuple[DegreeSet, ...]:
        return self._sets

    @property
    def is_allowed(self) -> bool:
        return all(D.allowed for D in self._sets)

    @property
    def is_uniform(self) -> bool:
        return len(set(self._sets)) <= 1

    def __getitem__(self, v: int) -> DegreeSet:
        return self._sets[v]

    def restrict(self, label_map: Sequence[int]) -> "Prescription":
        """Prescription of a relabelled subgraph (``label_map[new] == old``)."""
        return Prescription([self._sets[old] for old in label_map])

    def check_host(self, G: Graph) -> None:
        if self.order != G.order:
            raise ValueError(
                f"prescription covers {self.order} vertices, graph has {G.order}")

    def deviation_table(self, G: Graph) -> list[list[int]]:
        """``table[v][d]`` = vertex deviation of degree ``d`` for ``d <= deg(v)``."""
        degs = G.degrees()
        return [[vertex_deviation(d, self._sets[v]) for d in range(degs[v] + 1)]
                for v in range(G.order)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Prescription):
            return NotImplemented
        return self._sets == other._sets

    def __hash__(self) -> int:
        return hash(self._sets)

    def __repr__(self) -> str:
        if self.is_uniform and self._sets:
            return f"Prescription.uniform({self._sets[0]}, {self.order})"
        return f"Prescription([{', '.join(map(str, self._sets))}])"


def shift_by_set(P: Prescription, G: Graph, X: Iterable[int]) -> Prescription:
    """Translate each ``P(v)`` down by the number of edges from ``v`` into ``X``."""
    P.check_host(G)
    xmask = _mask(_check_vertices(G, X))
    return Prescription([
        D.shifted(-bin(G.adjacency[v] & xmask).count("1")) for v, D in enumerate(P.sets)
    ])


@dataclass(frozen=True)
class SpanningSubgraph:
    """An edge subset of ``host``; bit ``i`` of ``chosen`` selects ``host.edges[i]``."""

    host: Graph
    chosen: int

    def __post_init__(self):
        if self.chosen < 0 or self.chosen >> self.host.size:
            raise ValueError("chosen mask refers to edges outside the host")

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[tuple[int, int]]) -> "SpanningSubgraph":
        return cls(host, sum(1 << host.edge_index(u, v) for u, v in edges))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [self.host.edges[i] for i in bits(self.chosen)]

    @property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.host.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def __len__(self) -> int:
        return bin(self.chosen).count("1")


def deviation(F: SpanningSubgraph, P: Prescription) -> int:
    P.check_host(F.host)
    return sum(vertex_deviation(d, P[v]) for v, d in enumerate(F.degrees))


def is_factor(F: SpanningSubgraph, P: Prescription) -> bool:
    return deviation(F, P) == 0


# --------------------------------------------------------------------------
# literal syntax used by the command line
# --------------------------------------------------------------------------

_FAMILY = re.compile(r"^\s*(Hn\*|Hn|Ho)\s*:\s*(\d+)\s*$")
_SET = re.compile(r"^\s*\{\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\}\s*$")


def parse_degree_set(text: str) -> DegreeSet:
    """Parse ``Hn:2``, ``Ho:2``, ``Hn*:2`` or an explicit ``{1,3,4}``."""
    m = _FAMILY.match(text)
    if m:
        family, n = m.group(1), int(m.group(2))
        return {"Hn": h_n, "Ho": h_o, "Hn*": h_n_star}[family](n)
    m = _SET.match(text)
    if m:
        return make_degree_set(int(x) for x in m.group(1).split(","))
    raise ValueError(f"cannot parse degree set literal {text!r}")


def parse_overrides(text: str) -> dict[int, DegreeSet]:
    """Lines of ``v: {...}`` (or ``v: Hn:2``); blank lines and ``#`` comments ignored."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise ValueError(f"line {lineno}: expected 'v: {{...}}', got {raw!r}")
        out[int(head)] = parse_degree_set(rest)
    return out


def build_prescription(G: Graph, literal: str, overrides: dict[int, DegreeSet] | None = None) -> Prescription:
    sets = [parse_degree_set(literal)] * G.order
    for v, D in (overrides or {}).items():
        if not 0 <= v < G.order:
            raise ValueError(f"override for vertex {v} outside graph of order {G.order}")
        sets[v] = D
    return Prescription(sets)
