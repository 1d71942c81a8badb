"""Graph streams for batch verification.

Random graphs come from :class:`random.Random` (Mersenne Twister, MT19937)
seeded with the given integer; each pair ``(u, v)`` in sorted order is kept
when the next ``random()`` draw is below ``p``.
"""

from __future__ import annotations

import random
from typing import Iterator

from factorlab.graph import Graph, graph_from_mask, pair_list

EXHAUSTIVE_CAP = 6


def labeled_graphs(order: int) -> Iterator[Graph]:
    """All ``2**(order*(order-1)/2)`` labelled graphs of one order, by edge mask."""
    npairs = order * (order - 1) // 2
    for mask in range(1 << npairs):
        yield graph_from_mask(order, mask)


def iterate_labeled_graphs(max_vertices: int, min_vertices: int = 1,
                           cap: int = EXHAUSTIVE_CAP) -> Iterator[Graph]:
    if max_vertices > cap:
        raise ValueError(f"exhaustive iteration above {cap} vertices needs an explicit cap")
    for order in range(min_vertices, max_vertices + 1):
        yield from labeled_graphs(order)


def gnp(size: int, p: float, rng: random.Random) -> Graph:
    return Graph(size, [e for e in pair_list(size) if rng.random() < p])


def sample_gnp(count: int, size: int, p: float, seed: int) -> Iterator[Graph]:
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(count):
        yield gnp(size, p, rng)


def planted(size: int, rng: random.Random) -> Graph:
    """A random graph biased towards having no H_1-factor.

    One or two hub vertices are joined (each pair with probability 1/2) to
    the rest, which is cut into parts of random odd size 1, 3 or 5, each
    part an independent G(k, 0.6) with at least one edge to a hub.  Labels
    are shuffled at the end.
    """
    hubs = rng.choice((1, 2)) if size > 2 else 1
    hubs = min(hubs, size)
    parts: list[list[int]] = []
    v = hubs
    while v < size:
        k = min(rng.choice((1, 1, 3, 5)), size - v)
        parts.append(list(range(v, v + k)))
        v += k
    edges = []
    for part in parts:
        edges += [(a, b) for i, a in enumerate(part) for b in part[i + 1:] if rng.random() < 0.6]
    edges += [(a, b) for a in range(hubs) for b in range(a + 1, size) if rng.random() < 0.5]
    for part in parts:
        # tie every part to some hub so G itself has no stray odd components
        edges.append((rng.randrange(hubs), rng.choice(part)))
    edges = sorted(set(edges))
    perm = list(range(size))
    rng.shuffle(perm)
    return Graph(size, [(perm[a], perm[b]) for a, b in edges])


def sample_planted(count: int, sizes: tuple[int, ...], seed: int) -> Iterator[Graph]:
    """``count`` planted graphs, orders cycling through ``sizes``."""
    rng = random.Random(seed)
    for i in range(count):
        yield planted(sizes[i % len(sizes)], rng)


def sample_gnp_sizes(count: int, sizes: tuple[int, ...], p: float, seed: int) -> Iterator[Graph]:
    """Like :func:`sample_gnp` with orders cycling through ``sizes``."""
    rng = random.Random(seed)
    for i in range(count):
        yield gnp(sizes[i % len(sizes)], p, rng)
