import math
import random
import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gkspectra.errors import (
    CapExceededError,
    ParseError,
    PreconditionError,
    SingularError,
    ValidationError,
)
from gkspectra.gfmat import (
    coset_orders_bruteforce,
    coset_uniform_order,
    fixed_space_dim,
    format_matrix,
    identity,
    mat_mul,
    mat_pow,
    matrix_order,
    parse_matrix,
    power_sum,
)

PRIMES = (2, 3, 5, 7)


def gl_order(d, p):
    return math.prod(p ** d - p ** i for i in range(d))


def random_invertible(rng, d, p):
    while True:
        a = np.array([[rng.randrange(p) for _ in range(d)] for _ in range(d)])
        try:
            matrix_order(a, p)
        except SingularError:
            continue
        return a


class TestFrozenExamples:
    def test_identity_line_gf2(self):
        # t of order 3 acting trivially on GF(2): the nonzero vector
        # produces an order-6 element, so the coset is not uniform
        assert coset_orders_bruteforce([[1]], 3, 2) == [3, 6]
        assert not coset_uniform_order([[1]], 3, 2)

    def test_negation_line_gf3(self):
        # t of order 2 acting as -1 on GF(3): every coset element inverts,
        # f(T) = I + T = 0 and all three elements have order 2
        assert coset_orders_bruteforce([[2]], 2, 3) == [2, 2, 2]
        assert coset_uniform_order([[2]], 2, 3)

    def test_zero_dimensional_module(self):
        empty = np.zeros((0, 0), dtype=np.int64)
        assert coset_orders_bruteforce(empty, 5, 2) == [5]
        assert coset_uniform_order(empty, 5, 2)

    def test_fixed_point_free_companion(self):
        # x^2 + x + 1 over GF(2): order 3, no fixed vectors, f(T) = 0
        T = [[0, 1], [1, 1]]
        assert matrix_order(T, 2) == 3
        assert fixed_space_dim(T, 2) == 0
        assert not power_sum(T, 3, 2).any()
        assert coset_orders_bruteforce(T, 3, 2) == [3, 3, 3, 3]

    def test_singer_cycle_gl3_2(self):
        T = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]  # companion of x^3 + x + 1
        assert matrix_order(T, 2) == 7


class TestUniformOrderEquivalence:
    """power_sum criterion vs direct coset enumeration, both directions."""

    def test_bulk_equivalence(self):
        rng = random.Random(20240811)
        cases = uniform = 0
        while cases < 500:
            p = rng.choice(PRIMES)
            d = rng.randrange(0, 4)
            if d == 0:
                T, o = np.zeros((0, 0), dtype=np.int64), 1
            else:
                T = random_invertible(rng, d, p)
                o = matrix_order(T, p)
            if o > 12:
                continue
            m = o * rng.randrange(1, 12 // o + 1)
            orders = coset_orders_bruteforce(T, m, p)
            claim = coset_uniform_order(T, m, p)
            assert claim == (set(orders) == {m})
            assert set(orders) <= {m, p * m}
            assert len(orders) == p ** d
            cases += 1
            uniform += claim
        # both outcomes must actually be exercised
        assert 50 < uniform < 450

    @given(
        st.sampled_from(PRIMES),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=0, max_value=2 ** 32),
    )
    @settings(max_examples=60, deadline=None)
    def test_kernel_of_power_sum_counts_short_orders(self, p, d, salt):
        # v gives an order-m coset element exactly when f(T) v = 0
        rng = random.Random(salt)
        T = random_invertible(rng, d, p)
        o = matrix_order(T, p)
        if o > 12:
            return
        orders = coset_orders_bruteforce(T, o, p)
        f = power_sum(T, o, p)
        kernel = sum(
            1
            for v in np.ndindex(*([p] * d))
            if not (f @ np.array(v) % p).any()
        )
        assert orders.count(o) == kernel


class TestTelescoping:
    def test_thousand_identities_under_a_minute(self):
        rng = random.Random(99)
        start = time.monotonic()
        for _ in range(1000):
            p = rng.choice(PRIMES)
            d = rng.randrange(1, 4)
            m = rng.randrange(1, 13)
            A = np.array([[rng.randrange(p) for _ in range(d)] for _ in range(d)])
            lhs = mat_mul(power_sum(A, m, p), (A - identity(d)) % p, p)
            rhs = (mat_pow(A, m, p) - identity(d)) % p
            assert np.array_equal(lhs, rhs)
        assert time.monotonic() - start < 60


class TestOrdersAndRanks:
    @given(
        st.sampled_from(PRIMES),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=0, max_value=2 ** 32),
    )
    @settings(max_examples=40, deadline=None)
    def test_order_divides_gl_order(self, p, d, salt):
        T = random_invertible(random.Random(salt), d, p)
        assert gl_order(d, p) % matrix_order(T, p) == 0

    def test_identity_fixed_space_is_everything(self):
        for p in PRIMES:
            assert fixed_space_dim(identity(4), p) == 4
            assert matrix_order(identity(4), p) == 1

    def test_diagonal_fixed_space(self):
        assert fixed_space_dim([[1, 0], [0, 2]], 3) == 1
        assert fixed_space_dim([[2, 0], [0, 2]], 3) == 0


class TestValidation:
    def test_singular_rejected(self):
        with pytest.raises(SingularError):
            matrix_order([[1, 1], [1, 1]], 2)

    def test_period_precondition(self):
        with pytest.raises(PreconditionError):
            coset_uniform_order([[2]], 3, 5)  # order 4, m = 3
        with pytest.raises(PreconditionError):
            coset_orders_bruteforce([[2]], 3, 5)

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValidationError):
            power_sum([[1]], 2, 6)

    def test_nonsquare_rejected(self):
        with pytest.raises(ValidationError):
            matrix_order([[1, 0]], 2)

    def test_bad_m_rejected(self):
        with pytest.raises(ValidationError):
            power_sum([[1]], 0, 2)

    def test_enumeration_cap(self):
        with pytest.raises(CapExceededError) as exc:
            coset_orders_bruteforce(identity(2), 2, 2, cap=3)
        assert exc.value.cap == 3 and exc.value.needed == 4


class TestMatrixFiles:
    def test_round_trip(self):
        T = np.array([[0, 1], [1, 1]])
        p, M = parse_matrix(format_matrix(2, T, header="companion"))
        assert p == 2 and np.array_equal(M, T)

    @pytest.mark.parametrize(
        "text",
        [
            "1 0\n0 1",  # missing header
            "gfp 4 2\n1 0\n0 1",  # composite modulus
            "gfp 2 2\n1 0",  # missing row
            "gfp 2 2\n1 0 1\n0 1 0",  # row length
            "gfp 2 2\n1 2\n0 1",  # entry out of range
            "gfp 2 2\n1 x\n0 1",  # non-integer
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_matrix(text)
