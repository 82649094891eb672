import pytest
from hypothesis import given, strategies as st

from gkspectra.errors import ParseError, ValidationError
from gkspectra import spectra


# Independent oracles, kept deliberately naive.

def closure_oracle(values):
    m = max(values)
    return {n for n in range(1, m + 1) if any(v % n == 0 for v in values)}


def maximal_oracle(values):
    vals = set(values)
    return sorted(v for v in vals if not any(w != v and w % v == 0 for w in vals))


def is_prime_oracle(n):
    return n >= 2 and all(n % d for d in range(2, n))


mu_sets = st.lists(st.integers(min_value=1, max_value=400), min_size=1, max_size=8)


class TestDivisorClosure:
    def test_aut_m12_spectrum(self):
        # mu(Aut(M12)) = {8, 10, 11, 12}
        assert spectra.divisor_closure([8, 10, 11, 12]) == {
            1, 2, 3, 4, 5, 6, 8, 10, 11, 12,
        }

    def test_contains_one(self):
        assert 1 in spectra.divisor_closure([7])

    @given(mu_sets)
    def test_matches_oracle(self, values):
        assert spectra.divisor_closure(values) == closure_oracle(values)

    @given(mu_sets)
    def test_divisor_closed(self, values):
        c = spectra.divisor_closure(values)
        assert all(d in c for n in c for d in spectra.divisors(n))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValidationError):
            spectra.divisor_closure([4, 0])
        with pytest.raises(ValidationError):
            spectra.divisor_closure([])


class TestMaximalElements:
    def test_examples(self):
        assert spectra.maximal_elements([1, 2, 3, 4, 6, 8, 12]) == (8, 12)
        assert spectra.maximal_elements([11]) == (11,)

    @given(mu_sets)
    def test_matches_oracle(self, values):
        assert list(spectra.maximal_elements(values)) == maximal_oracle(values)

    @given(mu_sets)
    def test_round_trip_with_closure(self, values):
        mu = spectra.maximal_elements(values)
        assert spectra.maximal_elements(spectra.divisor_closure(values)) == mu
        assert spectra.divisor_closure(mu) == spectra.divisor_closure(values)

    @given(mu_sets)
    def test_idempotent(self, values):
        mu = spectra.maximal_elements(values)
        assert spectra.maximal_elements(mu) == mu


class TestWitnesses:
    def test_l2_49_against_aut_mcl(self):
        # mu(L2(49)) = {7, 24, 25}; mu(Aut(McL)) = {9, 14, 20, 22, 24, 30}
        assert spectra.witnesses_not_in([7, 24, 25], [9, 14, 20, 22, 24, 30]) == (25,)

    def test_s4_7_against_aut_mcl(self):
        # mu(S4(7)) = {21, 24, 25, 28}: three minimal missing orders, and the
        # headline pick is the prime power 25 rather than the smaller 21.
        ws = spectra.witnesses_not_in([21, 24, 25, 28], [9, 14, 20, 22, 24, 30])
        assert ws == (21, 25, 28)
        assert spectra.preferred_witness(ws) == 25

    def test_alternating_against_aut_mcl(self):
        # mu(A10) = {8, 9, 10, 12, 15, 21}
        ws = spectra.witnesses_not_in([8, 9, 10, 12, 15, 21], [9, 14, 20, 22, 24, 30])
        assert ws == (21,)
        assert spectra.preferred_witness(ws) == 21

    @given(mu_sets, mu_sets)
    def test_empty_iff_contained(self, a, b):
        ws = spectra.witnesses_not_in(a, b)
        contained = spectra.divisor_closure(a) <= spectra.divisor_closure(b)
        assert (ws == ()) == contained

    @given(mu_sets, mu_sets)
    def test_witnesses_are_minimal_missing(self, a, b):
        cb = spectra.divisor_closure(b)
        for w in spectra.witnesses_not_in(a, b):
            assert w in spectra.divisor_closure(a)
            assert w not in cb
            # every proper divisor is present in the other spectrum
            assert all(d in cb for d in spectra.divisors(w) if d != w)

    @given(mu_sets, mu_sets)
    def test_preferred_witness_is_a_witness(self, a, b):
        ws = spectra.witnesses_not_in(a, b)
        if ws:
            w = spectra.preferred_witness(ws)
            assert w in ws
            pps = [x for x in ws if spectra.prime_power(x)]
            assert w == (min(pps) if pps else min(ws))


class TestFactorization:
    @given(st.integers(min_value=1, max_value=10 ** 6))
    def test_reconstructs(self, n):
        f = spectra.factorize(n)
        prod = 1
        for p, k in f.items():
            assert is_prime_oracle(p) or p > 1000  # big primes checked by division
            assert n % p ** k == 0
            prod *= p ** k
        assert prod == n

    def test_prime_power(self):
        assert spectra.prime_power(25) == (5, 2)
        assert spectra.prime_power(2) == (2, 1)
        assert spectra.prime_power(1) is None
        assert spectra.prime_power(21) is None

    def test_primes_of(self):
        # mu(Aut(He)) = {16, 17, 20, 24, 28, 30, 42}
        assert spectra.primes_of([16, 17, 20, 24, 28, 30, 42]) == (2, 3, 5, 7, 17)


class TestParseMu:
    def test_basic(self):
        assert spectra.parse_mu("8,10,11,12") == (8, 10, 11, 12)

    def test_normalizes_to_maximal(self):
        assert spectra.parse_mu("2, 4, 8, 3") == (3, 8)

    def test_rejects_garbage(self):
        for bad in ("", "8,,10", "8,x", "8,-1"):
            with pytest.raises(ParseError):
                spectra.parse_mu(bad)

    @given(mu_sets)
    def test_round_trip(self, values):
        mu = spectra.maximal_elements(values)
        assert spectra.parse_mu(",".join(str(v) for v in mu)) == mu
