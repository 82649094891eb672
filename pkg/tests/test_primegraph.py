from itertools import combinations

from hypothesis import given, strategies as st

from gkspectra.primegraph import PrimeGraph
from gkspectra.spectra import divisor_closure, primes_of


mu_sets = st.lists(st.integers(min_value=1, max_value=400), min_size=1, max_size=8)

# Frozen spectra of the seven automorphism-group targets.
AUT_MU = {
    "aut-m12": [8, 10, 11, 12],
    "aut-m22": [8, 10, 11, 12, 14],
    "aut-j2": [10, 14, 15, 24],
    "aut-he": [16, 17, 20, 24, 28, 30, 42],
    "aut-mcl": [9, 14, 20, 22, 24, 30],
    "aut-suz": [13, 16, 18, 21, 22, 24, 28, 30, 40],
    "aut-on": [16, 20, 22, 24, 30, 31, 38, 56],
}


class TestTargetGraphs:
    def test_component_structure(self):
        expected = {
            "aut-m12": ((2, 3, 5), (11,)),
            "aut-m22": ((2, 3, 5, 7), (11,)),
            "aut-j2": ((2, 3, 5, 7),),
            "aut-he": ((2, 3, 5, 7), (17,)),
            "aut-mcl": ((2, 3, 5, 7, 11),),
            "aut-suz": ((2, 3, 5, 7, 11), (13,)),
            "aut-on": ((2, 3, 5, 7, 11, 19), (31,)),
        }
        for name, mu in AUT_MU.items():
            g = PrimeGraph.from_orders(mu)
            assert g.components() == expected[name], name

    def test_aut_mcl_adjacency(self):
        g = PrimeGraph.from_orders(AUT_MU["aut-mcl"])
        assert g.adjacent(2, 3) and g.adjacent(2, 11) and g.adjacent(3, 5)
        assert not g.adjacent(3, 7) and not g.adjacent(5, 11) and not g.adjacent(7, 11)

    def test_aut_mcl_independent_triples(self):
        g = PrimeGraph.from_orders(AUT_MU["aut-mcl"])
        assert g.independent_triples() == ((3, 7, 11), (5, 7, 11))

    def test_aut_j2_connected_no_triples(self):
        g = PrimeGraph.from_orders(AUT_MU["aut-j2"])
        assert g.component_count() == 1
        assert g.independent_triples() == ()

    def test_isolated_vertices(self):
        assert PrimeGraph.from_orders(AUT_MU["aut-suz"]).isolated_vertices() == (13,)
        assert PrimeGraph.from_orders(AUT_MU["aut-mcl"]).isolated_vertices() == ()


class TestGraphProperties:
    @given(mu_sets)
    def test_edges_match_product_membership(self, values):
        g = PrimeGraph.from_orders(values)
        closure = divisor_closure(values)
        assert g.vertices == primes_of(values)
        for p, q in combinations(g.vertices, 2):
            assert g.adjacent(p, q) == (p * q in closure)

    @given(mu_sets)
    def test_components_partition_vertices(self, values):
        g = PrimeGraph.from_orders(values)
        comps = g.components()
        flat = [p for c in comps for p in c]
        assert sorted(flat) == list(g.vertices)
        assert len(flat) == len(set(flat))
        if any(2 in c for c in comps):
            assert 2 in comps[0]

    @given(mu_sets)
    def test_no_edges_across_components(self, values):
        g = PrimeGraph.from_orders(values)
        for c1, c2 in combinations(g.components(), 2):
            assert not any(g.adjacent(p, q) for p in c1 for q in c2)

    @given(mu_sets)
    def test_triples_are_independent(self, values):
        g = PrimeGraph.from_orders(values)
        for t in g.independent_triples():
            assert not any(g.adjacent(p, q) for p, q in combinations(t, 2))
