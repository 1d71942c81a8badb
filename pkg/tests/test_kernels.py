import os
import random
import subprocess
import sys

import pytest

from factorlab import _pykernels, sweeps
from factorlab._backend import COMPILED, kernels
from factorlab.corpus import sample_gnp
from factorlab.criteria import neighborhood_threshold
from factorlab.graph import bits, complete
from factorlab.prescriptions import Prescription, h_n, h_n_star, h_o, make_degree_set

import oracles

needs_compiled = pytest.mark.skipif(not COMPILED, reason="compiled kernels not built")

SETS = [h_n(1), h_n_star(1), h_n(2), h_o(2), make_degree_set([0, 3])]


def _instances(count, seed):
    rng = random.Random(seed)
    for i, G in enumerate(sample_gnp(count, 7, 0.45, seed)):
        yield G, Prescription([rng.choice(SETS) for _ in range(G.order)])


@needs_compiled
class TestAgreement:
    @pytest.mark.parametrize("mode", [_pykernels.MODE_ALL, _pykernels.MODE_ISETS,
                                      _pykernels.MODE_EXISTS])
    def test_solve(self, mode):
        for G, P in _instances(80, mode):
            args = (G.order, [u for u, _ in G.edges], [v for _, v in G.edges],
                    P.deviation_table(G), mode, None)
            c, p = kernels.solve(*args), _pykernels.solve(*args)
            # node counts match too: both walk the same tree
            assert c == p

    def test_graph_queries(self):
        for G, _ in _instances(100, 7):
            full = (1 << G.order) - 1
            keep = full & ~1
            assert kernels.components(G.order, G.adjacency, keep) == \
                _pykernels.components(G.order, G.adjacency, keep)
            assert kernels.p23(G.adjacency, full) == _pykernels.p23(G.adjacency, full)
            for n in (1, 2):
                assert kernels.hn_factor(G.order, G.adjacency, full, n) == \
                    _pykernels.hn_factor(G.order, G.adjacency, full, n)
                assert kernels.star_isets(G.order, G.adjacency, n) == \
                    _pykernels.star_isets(G.order, G.adjacency, n)
            for kind in (_pykernels.KIND_ODD, _pykernels.KIND_ISOLATED):
                for coef, empty_ok in ((1, True), (2, False)):
                    assert kernels.first_violator(G.order, G.adjacency, kind, coef, empty_ok) == \
                        _pykernels.first_violator(G.order, G.adjacency, kind, coef, empty_ok)

    @pytest.mark.parametrize("order", range(0, 6))
    def test_sweeps(self, order):
        for fn in (sweeps.certificates, sweeps.odd_order, sweeps.neighborhood, sweeps.g_minus_v):
            assert fn(order, backend=kernels) == fn(order, backend=_pykernels)
        for n in (1, 2):
            assert sweeps.amahashi(order, n, backend=kernels) == \
                sweeps.amahashi(order, n, backend=_pykernels)
            assert sweeps.las_vergnas(order, n, backend=kernels) == \
                sweeps.las_vergnas(order, n, backend=_pykernels)

    def test_neighborhood_predicate(self):
        t = neighborhood_threshold(7, 1)
        for G, _ in _instances(100, 3):
            assert kernels.neighborhood_holds(G.order, G.adjacency, t.numerator, t.denominator) == \
                _pykernels.neighborhood_holds(G.order, G.adjacency, t.numerator, t.denominator)

    def test_limits(self):
        G = complete(12)
        args = (G.order, [u for u, _ in G.edges], [v for _, v in G.edges],
                Prescription.uniform(h_n(1), 12).deviation_table(G), 0, None)
        with pytest.raises(ValueError):
            kernels.solve(*args)
        with pytest.raises(ValueError):
            kernels.sweep_certificates(9, 1)


def test_pure_python_forced_by_environment():
    env = dict(os.environ, FACTORLAB_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from factorlab._backend import COMPILED, kernels; print(COMPILED, kernels.__name__)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "factorlab._pykernels"]


def test_solve_through_both_backends(backend):
    for G, P in _instances(30, 17):
        res = backend.solve(G.order, [u for u, _ in G.edges], [v for _, v in G.edges],
                            P.deviation_table(G), _pykernels.MODE_ALL, None)
        status, best, witness, isets, count, _, _ = res
        delta, want_isets, want_count, want_witness = oracles.enumerate_optima(
            G.order, list(G.edges), P.sets)
        assert status == _pykernels.STATUS_OK
        assert (best, count) == (delta, want_count)
        assert [frozenset(bits(m)) for m in isets] == want_isets
        assert [G.edges[i] for i in bits(witness)] == want_witness


@pytest.mark.parametrize("order", range(1, 7))
def test_sweep_counts_match_library_checks(order):
    from factorlab.corpus import labeled_graphs
    from factorlab.criteria import (
        check_cui_kano, check_neighborhood_condition, verify_certificate,
        verify_g_minus_v_theorem, verify_odd_order_theorem,
    )
    from factorlab.graph import odd_components
    from factorlab.optimizer import has_hn_factor

    graphs = list(labeled_graphs(order))
    stats, _ = sweeps.certificates(order)
    factorless = [G for G in graphs if not has_hn_factor(G, 1)]
    assert stats["factorless"] == len(factorless)
    assert stats["ck_violated"] == sum(not check_cui_kano(G, 1).holds for G in factorless)
    assert stats["certified"] == sum(verify_certificate(G, 1).status == "pass" for G in graphs)

    stats, _ = sweeps.odd_order(order)
    assert stats["hypothesis"] == sum(verify_odd_order_theorem(G, 1).status != "skipped"
                                      for G in graphs)

    stats, _ = sweeps.neighborhood(order)
    no_odd = [G for G in graphs if not odd_components(G)[0]]
    assert stats["no_odd"] == len(no_odd)
    assert stats["hypothesis"] == sum(check_neighborhood_condition(G, 1).holds for G in no_odd)

    stats, _ = sweeps.g_minus_v(order)
    assert stats["hypothesis"] == sum(verify_g_minus_v_theorem(G, 1).status == "pass"
                                      for G in graphs)


def test_path_partition_matches_branch_and_bound(backend):
    from factorlab.corpus import labeled_graphs
    from factorlab.optimizer import has_hn_factor

    graphs = [G for order in range(6) for G in labeled_graphs(order)]
    graphs += list(sample_gnp(300, 9, 0.3, 23))
    for G in graphs:
        full = (1 << G.order) - 1
        assert backend.p23(G.adjacency, full) == has_hn_factor(G, 1), G
        for n in (1, 2):
            assert backend.hn_factor(G.order, G.adjacency, full, n) == (has_hn_factor(G, n), True)
