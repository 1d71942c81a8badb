"""Immutable simple graphs on dense integer labels.

Vertices are ``0..order-1``.  Edges are stored as a sorted list of pairs
``(u, v)`` with ``u < v`` and, alongside, one neighbour bitset per vertex.
The edge index (position in the sorted list) is what the optimizer branches
on, so it is part of the public contract.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from factorlab._backend import kernels


class GraphFormatError(ValueError):
    """Raised when graph text (graph6 or edge list) cannot be decoded."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """A simple undirected graph with vertices ``0..order-1``."""

    __slots__ = ("_order", "_edges", "_adj", "_index")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            pairs.add((u, v) if u < v else (v, u))
        self._order = order
        self._edges = tuple(sorted(pairs))
        adj = [0] * order
        for u, v in self._edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)
        self._index = {e: i for i, e in enumerate(self._edges)}

    @property
    def order(self) -> int:
        return self._order

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitsets."""
        return self._adj

    def vertices(self) -> range:
        return range(self._order)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def degrees(self) -> tuple[int, ...]:
        return tuple(bin(a).count("1") for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def edges_to(self, v: int, vertices: Iterable[int]) -> int:
        """Number of edges from ``v`` into ``vertices`` (loops never count)."""
        return bin(self._adj[v] & _mask(vertices)).count("1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._order, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={list(self._edges)!r})"


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_vertices(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(int(v) for v in S)
    for v in S:
        if not 0 <= v < G.order:
            raise ValueError(f"vertex {v} not in graph of order {G.order}")
    return S


# --------------------------------------------------------------------------
# graph6 and edge-list text formats
# --------------------------------------------------------------------------

def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(G: Graph) -> str:
    """Encode ``G`` as a graph6 string (no header, no newline)."""
    n = G.order
    adj = G.adjacency
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string.  A leading ``>>graph6<<`` header is accepted."""
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside graph6 range 63..126", base + k)

    def vals(start: int, count: int) -> list[int]:
        if len(s) < start + count:
            raise GraphFormatError("truncated order field", base + len(s))
        return [ord(c) - 63 for c in s[start:start + count]]

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = 0, 8
        for x in vals(2, 6):
            n = (n << 6) | x
    else:
        n, pos = 0, 4
        for x in vals(1, 3):
            n = (n << 6) | x
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit field: need {nbytes} bytes, got {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after bit field", base + pos + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and nbytes:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise GraphFormatError("nonzero padding bits", base + pos + nbytes - 1)
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``g m`` header plus ``m`` lines of ``u v`` format."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1]), lineno))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphFormatError("edge list is empty")
    (g, m, _), body = rows[0], rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    try:
        return Graph(g, [(u, v) for u, v, _ in body])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.order} {G.size}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def parse_graphs(text: str) -> list[Graph]:
    """Auto-detect format: an edge list yields one graph, graph6 one per line."""
    if _looks_like_edge_list(text):
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        graphs = parse_graphs(fh.read())
    if not graphs:
        raise GraphFormatError(f"{path}: no graph found")
    return graphs[0]


# --------------------------------------------------------------------------
# structure queries
# --------------------------------------------------------------------------

def component_masks(G: Graph, keep: int | None = None) -> list[int]:
    if keep is None:
        keep = (1 << G.order) - 1
    return list(kernels.components(G.order, G.adjacency, keep))


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    return [_bits(c) for c in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return len(component_masks(G)) <= 1


def odd_components(G: Graph, S: Iterable[int] = ()) -> tuple[int, list[list[int]]]:
    """Odd components of ``G - S``, in original labels."""
    S = _check_vertices(G, S)
    keep = ((1 << G.order) - 1) & ~_mask(S)
    odd = [_bits(c) for c in component_masks(G, keep) if bin(c).count("1") % 2]
    return len(odd), odd


def induced(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``S``, relabelled; returns ``(H, label_map)`` with
    ``label_map[new] == old``."""
    keep = tuple(sorted(_check_vertices(G, S)))
    new = {old: i for i, old in enumerate(keep)}
    edges = [(new[u], new[v]) for u, v in G.edges if u in new and v in new]
    return Graph(len(keep), edges), keep


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    S = _check_vertices(G, S)
    return induced(G, (v for v in G.vertices() if v not in S))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    return Graph(G.order, G.edges + ((u, v),))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    shift = 0
    for H in graphs:
        edges += [(u + shift, v + shift) for u, v in H.edges]
        shift += H.order
    return Graph(shift, edges)


def join(G1: Graph, G2: Graph) -> Graph:
    """``G1 + G2``: disjoint union plus every edge between the two sides."""
    base = disjoint_union(G1, G2)
    cross = [(u, G1.order + v) for u in range(G1.order) for v in range(G2.order)]
    return Graph(base.order, base.edges + tuple(cross))


def copies(G: Graph, t: int) -> Graph:
    return disjoint_union(*([G] * t)) if t else Graph(0)


def empty(m: int) -> Graph:
    return Graph(m)


def complete(m: int) -> Graph:
    return Graph(m, combinations(range(m), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def path(m: int) -> Graph:
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def is_k_connected(G: Graph, k: int, max_k: int = 8) -> bool:
    """True iff ``order > k`` and deleting any fewer than ``k`` vertices
    leaves a connected graph.  Brute force over vertex subsets."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > max_k:
        from factorlab.optimizer import BudgetError
        raise BudgetError(f"k={k} exceeds the subset-enumeration cap {max_k}")
    if G.order <= k:
        return False
    full = (1 << G.order) - 1
    for size in range(k):
        for S in combinations(range(G.order), size):
            if len(component_masks(G, full & ~_mask(S))) > 1:
                return False
    return True


def neighborhood_union(G: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise ValueError("neighborhood_union needs two distinct vertices")
    _check_vertices(G, (u, v))
    return frozenset(_bits(G.adjacency[u] | G.adjacency[v]))


# --------------------------------------------------------------------------
# labelled-graph masks (pairs in sorted order, bit i <-> i-th pair)
# --------------------------------------------------------------------------

def pair_list(order: int) -> list[tuple[int, int]]:
    return list(combinations(range(order), 2))


def graph_from_mask(order: int, mask: int) -> Graph:
    return Graph(order, [p for i, p in enumerate(pair_list(order)) if mask >> i & 1])


def graph_mask(G: Graph) -> int:
    pairs = {p: i for i, p in enumerate(pair_list(G.order))}
    return sum(1 << pairs[e] for e in G.edges)


def vertex_mask(vertices: Sequence[int]) -> int:
    return _mask(vertices)


bits = _bits
