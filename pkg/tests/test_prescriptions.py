import pytest
from hypothesis import given
from hypothesis import strategies as st

from factorlab.graph import Graph, complete, cycle
from factorlab.prescriptions import (
    DegreeSet, Prescription, SpanningSubgraph, build_prescription, deviation, h_n, h_n_star, h_o,
    interval_set, is_factor, make_degree_set, parse_degree_set, parse_overrides, shift_by_set,
    vertex_deviation,
)

degree_sets = st.lists(st.integers(-3, 12), min_size=1, max_size=6).map(make_degree_set)
allowed_sets = st.tuples(st.integers(-2, 5), st.lists(st.integers(1, 2), max_size=6)).map(
    lambda t: DegreeSet(tuple(t[0] + sum(t[1][:i]) for i in range(len(t[1]) + 1))))


class TestDegreeSet:
    def test_allowed_examples(self):
        assert make_degree_set([1, 3, 5]).allowed
        assert not make_degree_set([1, 4]).allowed
        assert make_degree_set([1, 3, 4]).allowed

    def test_named_families(self):
        assert h_n(1).values == (1, 2)
        assert h_n_star(1).values == (-1, 1, 2)
        assert h_o(2).values == (1, 3)
        assert h_n(2).values == (1, 3, 4)
        assert interval_set(1, 3).values == (1, 2, 3)

    @pytest.mark.parametrize("family", [h_o, h_n, h_n_star])
    def test_n_below_one(self, family):
        with pytest.raises(ValueError):
            family(0)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            make_degree_set([])
        with pytest.raises(ValueError):
            DegreeSet((2, 1))

    @given(st.integers(1, 6))
    def test_named_families_are_allowed(self, n):
        assert h_o(n).allowed and h_n(n).allowed and h_n_star(n).allowed


class TestVertexDeviation:
    def test_examples(self):
        assert vertex_deviation(4, h_n(2)) == 0
        assert vertex_deviation(0, make_degree_set([1, 2])) == 1
        assert vertex_deviation(3, h_n_star(1)) == 1

    @given(st.integers(0, 15), degree_sets)
    def test_zero_iff_member(self, d, D):
        assert (vertex_deviation(d, D) == 0) == (d in D)

    @given(st.integers(0, 15), degree_sets)
    def test_lipschitz(self, d, D):
        assert abs(vertex_deviation(d + 1, D) - vertex_deviation(d, D)) <= 1

    @given(st.integers(0, 15), allowed_sets)
    def test_allowed_gap_holds_one_integer(self, d, D):
        assert D.allowed
        lo, hi = vertex_deviation(d, D), vertex_deviation(d + 1, D)
        if D.min <= d and d + 1 <= D.max:
            assert lo <= 1 and hi <= 1
            assert not (lo and hi)


class TestShift:
    def test_empty_shift(self):
        G = cycle(4)
        P = Prescription.uniform(h_n(1), 4)
        assert shift_by_set(P, G, []) == P

    def test_k2_example(self):
        P = Prescription.uniform(make_degree_set([1, 2]), 2)
        shifted = shift_by_set(P, complete(2), [1])
        assert shifted[0].values == (0, 1)
        assert shifted[1].values == (1, 2)

    @given(st.integers(2, 6), st.data())
    def test_preserves_allowedness(self, order, data):
        pairs = [(i, j) for i in range(order) for j in range(i + 1, order)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True))
        G = Graph(order, edges)
        sets = data.draw(st.lists(degree_sets, min_size=order, max_size=order))
        X = data.draw(st.sets(st.integers(0, order - 1)))
        shifted = shift_by_set(Prescription(sets), G, X)
        for before, after in zip(sets, shifted.sets):
            assert before.allowed == after.allowed
            assert len(before) == len(after)


class TestPrescription:
    def test_uniform_flags(self):
        P = Prescription.uniform(h_n(1), 3)
        assert P.is_uniform and P.is_allowed and P.order == 3
        Q = Prescription([h_n(1), make_degree_set([0, 3])])
        assert not Q.is_uniform and not Q.is_allowed

    def test_host_mismatch(self):
        with pytest.raises(ValueError):
            Prescription.uniform(h_n(1), 3).check_host(complete(4))

    def test_restrict_keeps_labels(self):
        P = Prescription([h_n(1), h_n(2), h_o(3)])
        assert P.restrict((2, 0)).sets == (h_o(3), h_n(1))


class TestDeviation:
    def test_examples(self):
        K2 = complete(2)
        assert deviation(SpanningSubgraph(K2, 1), Prescription.uniform(h_n(1), 2)) == 0
        K1 = Graph(1)
        assert deviation(SpanningSubgraph(K1, 0), Prescription.uniform(h_n_star(1), 1)) == 1
        C5 = cycle(5)
        full = SpanningSubgraph(C5, (1 << 5) - 1)
        assert deviation(full, Prescription.uniform(make_degree_set([1, 2]), 5)) == 0

    @given(st.integers(1, 6), st.data())
    def test_factor_iff_all_degrees_prescribed(self, order, data):
        pairs = [(i, j) for i in range(order) for j in range(i + 1, order)]
        G = Graph(order, data.draw(st.lists(st.sampled_from(pairs) if pairs else st.nothing(),
                                            unique=True)))
        F = SpanningSubgraph(G, data.draw(st.integers(0, (1 << G.size) - 1)))
        P = Prescription(data.draw(st.lists(degree_sets, min_size=order, max_size=order)))
        assert sum(F.degrees) == 2 * len(F)
        assert is_factor(F, P) == all(d in P[v] for v, d in enumerate(F.degrees))

    def test_chosen_outside_host(self):
        with pytest.raises(ValueError):
            SpanningSubgraph(complete(2), 2)


class TestLiterals:
    @pytest.mark.parametrize("text, values", [
        ("Hn:2", (1, 3, 4)), ("Ho:2", (1, 3)), ("Hn*:1", (-1, 1, 2)), ("{1, 3,4}", (1, 3, 4)),
        ("{-1,0}", (-1, 0)),
    ])
    def test_parse(self, text, values):
        assert parse_degree_set(text).values == values

    @pytest.mark.parametrize("text", ["Hx:1", "{}", "Hn:", "1,2", "Hn:0"])
    def test_reject(self, text):
        with pytest.raises(ValueError):
            parse_degree_set(text)

    def test_overrides(self):
        extra = parse_overrides("# comment\n0: {2}\n\n2: Ho:2\n")
        P = build_prescription(cycle(3), "Hn:1", extra)
        assert P.sets == (make_degree_set([2]), h_n(1), h_o(2))
        with pytest.raises(ValueError):
            build_prescription(cycle(3), "Hn:1", {5: h_n(1)})
        with pytest.raises(ValueError):
            parse_overrides("x: {1}")
