import pytest
from hypothesis import given, strategies as st

from gkspectra.errors import ParseError, ValidationError
from gkspectra.perm import (
    Permutation,
    cycle_string,
    format_generators,
    parse_generators,
)


perms = st.integers(min_value=2, max_value=9).flatmap(
    lambda n: st.permutations(list(range(n)))
)


class TestBasics:
    def test_composition_is_left_to_right(self):
        p = Permutation.from_cycles(3, [(1, 2)])
        q = Permutation.from_cycles(3, [(2, 3)])
        # (p * q)(x) = q(p(x)); 0-based point 0 goes 0 -> 1 -> 2
        assert (p * q)(0) == 2
        assert (q * p)(0) == 1

    def test_rejects_non_permutation(self):
        for bad in ([0, 0, 1], [1, 2, 3], [-1, 0, 1], []):
            with pytest.raises(ValidationError):
                Permutation(bad)

    @given(perms)
    def test_inverse(self, images):
        p = Permutation(images)
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()

    @given(perms)
    def test_order_by_iteration(self, images):
        p = Permutation(images)
        k, q = 1, p
        while not q.is_identity():
            q, k = q * p, k + 1
        assert p.order() == k

    @given(perms)
    def test_cycles_round_trip(self, images):
        p = Permutation(images)
        assert Permutation.from_cycles(p.degree, p.cycles()) == p

    def test_from_cycles_validates(self):
        with pytest.raises(ValidationError):
            Permutation.from_cycles(4, [(1, 5)])
        with pytest.raises(ValidationError):
            Permutation.from_cycles(4, [(1, 2), (2, 3)])


class TestGeneratorFiles:
    GOOD = """\
# sample file
degree 6

(1,2,3)(4,5)
()
(2,6)
"""

    def test_parse(self):
        degree, gens = parse_generators(self.GOOD)
        assert degree == 6
        assert gens[0] == Permutation.from_cycles(6, [(1, 2, 3), (4, 5)])
        assert gens[1].is_identity()
        assert gens[2] == Permutation.from_cycles(6, [(2, 6)])

    @given(st.lists(st.permutations(list(range(8))), min_size=1, max_size=4))
    def test_round_trip(self, image_lists):
        ps = [Permutation(im) for im in image_lists]
        degree, parsed = parse_generators(format_generators(8, ps))
        assert degree == 8 and parsed == ps

    def test_identity_formats_as_unit(self):
        assert cycle_string(Permutation.identity(5)) == "()"

    @pytest.mark.parametrize(
        "text",
        [
            "(1,2)",  # missing header
            "degree 0\n(1,2)",
            "degree 4\n(1,2",  # unclosed
            "degree 4\n(1)",  # length-1 cycle
            "degree 4\n(1,2,)(3,4)",  # trailing comma
            "degree 4\n(1,2)(2,3)",  # not disjoint
            "degree 4\n(1,5)",  # out of range
            "degree 4\n1,2",  # digits outside cycle
            "degree 4\n",  # no generators
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_generators(text)

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as exc:
            parse_generators("degree 4\n(1,2)x")
        assert "line 2" in str(exc.value)
        assert exc.value.position == 5
