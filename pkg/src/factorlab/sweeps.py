"""Exhaustive theorem sweeps over every labelled graph of one order.

The loops run inside the kernel module (compiled when available), so order
8 (2**28 graphs) is practical.  Failing graphs come back as
``(Graph, reason)`` pairs; graph masks use the sorted-pair bit order of
:func:`factorlab.graph.graph_from_mask`.
"""

from __future__ import annotations

from fractions import Fraction

from factorlab import _pykernels
from factorlab._backend import kernels
from factorlab.criteria import neighborhood_threshold
from factorlab.graph import Graph, graph_from_mask
from factorlab.prescriptions import h_o, interval_set


def _wrap(order, result):
    stats, failures = result
    return stats, [(graph_from_mask(order, mask), code) for mask, code in failures]


def certificates(order: int, n: int = 1, backend=kernels) -> tuple[dict, list[tuple[Graph, str]]]:
    """Factorless graphs violate the Cui-Kano condition; factorless graphs
    without odd components yield a valid ``S = A`` certificate."""
    return _wrap(order, backend.sweep_certificates(order, n))


def odd_order(order: int, n: int = 1, backend=kernels):
    return _wrap(order, backend.sweep_odd_order(order, n))


def neighborhood(order: int, n: int = 1, backend=kernels):
    t = Fraction(neighborhood_threshold(order, n)) if order else Fraction(0)
    return _wrap(order, backend.sweep_neighborhood(order, n, t.numerator, t.denominator))


def g_minus_v(order: int, n: int = 1, backend=kernels):
    return _wrap(order, backend.sweep_g_minus_v(order, n))


def amahashi(order: int, n: int = 1, backend=kernels):
    """``o(G - S) <= (2n-1)|S|`` against an ``h_o(n)``-factor on every graph."""
    return _wrap(order, backend.sweep_equivalence(
        order, _pykernels.KIND_ODD, 2 * n - 1, list(h_o(n).values)))


def las_vergnas(order: int, n: int = 1, backend=kernels):
    """At most ``n|S|`` isolated vertices in ``G - S`` against a ``[1, n]``-factor."""
    return _wrap(order, backend.sweep_equivalence(
        order, _pykernels.KIND_ISOLATED, n, list(interval_set(1, n).values)))
