import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gkspectra.bsgs import DEFAULT_CAP, PermutationGroup, StabilizerChain
from gkspectra.errors import CapExceededError
from gkspectra.perm import Permutation


def brute_elements(degree, gens):
    """Breadth-first closure; the independent oracle for small groups."""
    idn = tuple(range(degree))
    tables = [tuple(g.images.tolist()) for g in gens]
    seen = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for e in frontier:
            for t in tables:
                f = tuple(t[x] for x in e)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return seen


def brute_orders(elements):
    out = set()
    for e in elements:
        k, f = 1, e
        idn = tuple(range(len(e)))
        while f != idn:
            f = tuple(e[x] for x in f)
            k += 1
        out.add(k)
    return out


def alternating(n):
    cycle = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    return PermutationGroup(
        n, [Permutation.from_cycles(n, [(1, 2, 3)]), Permutation.from_cycles(n, [cycle])]
    )


small_groups = st.integers(min_value=3, max_value=7).flatmap(
    lambda n: st.lists(
        st.permutations(list(range(n))), min_size=1, max_size=3
    ).map(lambda ims: (n, [Permutation(im) for im in ims]))
)


class TestChainAgainstBruteForce:
    @given(small_groups)
    @settings(max_examples=60, deadline=None)
    def test_order_and_spectrum(self, group):
        degree, gens = group
        elements = brute_elements(degree, gens)
        G = PermutationGroup(degree, gens)
        assert G.order() == len(elements)
        assert set(G.spectrum_exhaustive().orders) == brute_orders(elements)

    @given(small_groups, st.integers(min_value=0, max_value=10 ** 9))
    @settings(max_examples=60, deadline=None)
    def test_membership(self, group, salt):
        degree, gens = group
        candidate = list(range(degree))
        random.Random(salt).shuffle(candidate)
        elements = brute_elements(degree, gens)
        chain = StabilizerChain(degree, gens)
        assert (Permutation(candidate) in chain) == (tuple(candidate) in elements)
        for g in gens:
            assert g in chain and g.inverse() in chain

    @given(small_groups, st.randoms(use_true_random=False))
    @settings(max_examples=40, deadline=None)
    def test_generator_order_irrelevant(self, group, rnd):
        degree, gens = group
        shuffled = list(gens)
        rnd.shuffle(shuffled)
        a = PermutationGroup(degree, gens)
        b = PermutationGroup(degree, shuffled)
        assert a.order() == b.order()
        assert a.spectrum_exhaustive().orders == b.spectrum_exhaustive().orders


class TestKnownGroups:
    def test_symmetric_5(self):
        G = PermutationGroup(
            5,
            [Permutation.from_cycles(5, [(1, 2)]), Permutation.from_cycles(5, [(1, 2, 3, 4, 5)])],
        )
        assert G.order() == 120
        assert G.spectrum_exhaustive().mu == (4, 5, 6)

    def test_alternating_orders(self):
        for n in range(4, 10):
            assert alternating(n).order() == math.factorial(n) // 2

    def test_mu_alternating_8(self):
        assert alternating(8).spectrum_exhaustive().mu == (4, 6, 7, 15)

    def test_l2_11_from_moebius_action(self):
        # PSL(2,11) on the projective line: points 0..10 are field elements,
        # point 11 is infinity.  Generated by x -> x+1 and x -> -1/x.
        q = 11
        shift = Permutation([(x + 1) % q for x in range(q)] + [q])
        images = [q] + [(-pow(x, -1, q)) % q for x in range(1, q)] + [0]
        G = PermutationGroup(q + 1, [shift, Permutation(images)])
        assert G.order() == 660
        assert G.spectrum_exhaustive().mu == (5, 6, 11)

    def test_trivial_and_identity_groups(self):
        assert PermutationGroup(5, []).order() == 1
        G = PermutationGroup(5, [Permutation.identity(5)])
        assert G.order() == 1
        assert G.spectrum_exhaustive().orders == (1,)


class TestCap:
    def test_cap_error_reports_true_order(self):
        G = alternating(11)
        with pytest.raises(CapExceededError) as exc:
            G.spectrum_exhaustive()
        assert exc.value.cap == DEFAULT_CAP
        assert exc.value.needed == math.factorial(11) // 2

    def test_explicit_cap_override(self):
        G = alternating(8)
        assert G.spectrum_exhaustive(cap=20160).mu == (4, 6, 7, 15)

    def test_cap_boundary_inclusive(self):
        G = alternating(5)
        assert G.spectrum_exhaustive(cap=60).orders == (1, 2, 3, 5)
        with pytest.raises(CapExceededError):
            G.spectrum_exhaustive(cap=59)
