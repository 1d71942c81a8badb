"""Reference implementations that share no code with the package.

Each works from first principles on plain edge lists so that a bug in
``factorlab`` cannot leak into the expected values.
"""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 16


def deviation_table(order: int, edges, sets) -> np.ndarray:
    """``table[v, d] = min_h |d - h|`` for ``0 <= d <= order``."""
    table = np.zeros((order, order + 1), dtype=np.int64)
    for v in range(order):
        for d in range(order + 1):
            table[v, d] = min(abs(d - h) for h in sets[v])
    return table


def enumerate_optima(order: int, edges, sets):
    """Minimum deviation by visiting all ``2**m`` edge subsets.

    Returns ``(delta, degree_sets, count, witness_edges)`` where the witness
    minimises the choice vector ``(b_0, b_1, ...)`` lexicographically.
    """
    m = len(edges)
    table = deviation_table(order, edges, sets)
    inc = np.zeros((m, order), dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        inc[i, u] = inc[i, v] = 1
    shifts = np.arange(m, dtype=np.int64)
    weights = (np.int64(1) << (m - 1 - shifts)) if m else shifts
    best, count, witness_key = None, 0, None
    seen = [set() for _ in range(order)]
    total_masks = 1 << m
    for start in range(0, total_masks, CHUNK):
        masks = np.arange(start, min(start + CHUNK, total_masks), dtype=np.int64)
        chosen = (masks[:, None] >> shifts) & 1
        deg = chosen @ inc
        dev = np.zeros(len(masks), dtype=np.int64)
        for v in range(order):
            dev += table[v][deg[:, v]]
        low = int(dev.min())
        if best is None or low < best:
            best, count, witness_key = low, 0, None
            seen = [set() for _ in range(order)]
        if low > best:
            continue
        hit = dev == best
        count += int(hit.sum())
        for v in range(order):
            seen[v].update(int(d) for d in np.unique(deg[hit, v]))
        key = int((chosen[hit] @ weights).min()) if m else 0
        witness_key = key if witness_key is None else min(witness_key, key)
    witness = [edges[i] for i in range(m) if witness_key >> (m - 1 - i) & 1]
    return best, [frozenset(s) for s in seen], count, witness


def graph6_encode(order: int, edges) -> str:
    """graph6 written straight from the format definition."""
    if order < 63:
        head = [order]
    elif order < 258048:
        head = [63, (order >> 12) & 63, (order >> 6) & 63, order & 63]
    else:
        head = [63, 63] + [(order >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    es = {(min(u, v), max(u, v)) for u, v in edges}
    stream = [1 if (i, j) in es else 0 for j in range(order) for i in range(j)]
    stream += [0] * (-len(stream) % 6)
    body = [int("".join(map(str, stream[k:k + 6])), 2) for k in range(0, len(stream), 6)]
    return "".join(chr(63 + x) for x in head + body)


def has_perfect_matching(order: int, edges) -> bool:
    adj = [set() for _ in range(order)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def match(free: frozenset) -> bool:
        if not free:
            return True
        u = min(free)
        return any(match(free - {u, w}) for w in adj[u] if w in free)

    return order % 2 == 0 and match(frozenset(range(order)))


def odd_component_count(order: int, edges, removed=()) -> int:
    """Odd components of ``G - removed`` by union-find."""
    parent = list(range(order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gone = set(removed)
    for u, v in edges:
        if u not in gone and v not in gone:
            parent[find(u)] = find(v)
    sizes: dict[int, int] = {}
    for v in range(order):
        if v not in gone:
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
    return sum(1 for s in sizes.values() if s % 2)


def all_pairs(order: int):
    return [(i, j) for i in range(order) for j in range(i + 1, order)]


def edges_of_mask(order: int, mask: int):
    return [e for k, e in enumerate(all_pairs(order)) if mask >> k & 1]
