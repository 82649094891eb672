import pytest
from hypothesis import given, settings, strategies as st

from gkspectra.bsgs import PermutationGroup, StabilizerChain
from gkspectra.errors import ValidationError
from gkspectra.perm import Permutation
from gkspectra.sampling import sample_elements, sample_orders


def alternating(n):
    cycle = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    return [Permutation.from_cycles(n, [(1, 2, 3)]), Permutation.from_cycles(n, [cycle])]


small_groups = st.integers(min_value=3, max_value=7).flatmap(
    lambda n: st.lists(
        st.permutations(list(range(n))), min_size=1, max_size=3
    ).map(lambda ims: (n, [Permutation(im) for im in ims]))
)


class TestSampling:
    @given(small_groups, st.integers(min_value=0, max_value=2 ** 32))
    @settings(max_examples=30, deadline=None)
    def test_samples_lie_in_group(self, group, seed):
        degree, gens = group
        chain = StabilizerChain(degree, gens)
        for p in sample_elements(degree, gens, 30, seed=seed):
            assert p in chain

    @given(small_groups, st.integers(min_value=0, max_value=2 ** 32))
    @settings(max_examples=30, deadline=None)
    def test_sampled_orders_within_spectrum(self, group, seed):
        degree, gens = group
        exhaustive = set(PermutationGroup(degree, gens).spectrum_exhaustive().orders)
        assert set(sample_orders(degree, gens, 50, seed=seed)) <= exhaustive

    def test_seed_determinism(self):
        gens = alternating(9)
        a = sample_orders(9, gens, 200, seed=7)
        b = sample_orders(9, gens, 200, seed=7)
        c = sample_orders(9, gens, 200, seed=8)
        assert a == b
        assert a != c  # one collision over 200 draws would be astonishing

    def test_full_mu_recovered_on_moderate_group(self):
        # 2000 draws from A9 see every maximal order; frozen seed keeps it stable
        gens = alternating(9)
        G = PermutationGroup(9, gens)
        sampled = G.spectrum_sample(2000, seed=1)
        assert sampled.mu == G.spectrum_exhaustive().mu == (7, 9, 10, 12, 15)
        assert sampled.method == "sample" and sampled.group_order is None

    def test_identity_only(self):
        assert sample_orders(4, [], 5, seed=3) == [1] * 5

    def test_count_validation(self):
        with pytest.raises(ValidationError):
            sample_orders(4, alternating(4), -1, seed=0)
