"""Build the Golay code, M24, the Mathieu-family descents, and the
10-dimensional GF(2) module certificates for M12 and M22.

The [24,12,8] code comes from a degree-11 divisor of x^23 - 1 over GF(2),
found by exhaustive search; its 759 weight-8 words are certified to form a
Steiner system S(5,8,24) by direct counting.  M24 is generated by the
Moebius maps of PSL2(23) together with one extra octad automorphism found
by backtracking, accepted only when the stabilizer chain reports order
244823040.  Subgroups are cut out with Schreier generators on points and
block systems, each with an exact order check.
"""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from gkspectra import gfmat
from gkspectra.perm import Permutation
from gentools import (
    DATA,
    check,
    derived_subgroup,
    group_order,
    object_stabilizer,
    point_stabilizer,
    restrict,
    set_image,
    write_generators,
)


# ---------------------------------------------------------------------------
# the binary Golay code, as an extended cyclic code

def gf2_divmod(a: int, b: int):
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def golay_codewords():
    """All 4096 words of the extended Golay code, as a (4096, 24) 0/1 array."""
    modulus = (1 << 23) | 1  # x^23 - 1 over GF(2)
    divisors = [
        (1 << 11) | (mid << 1) | 1
        for mid in range(1 << 10)
        if gf2_divmod(modulus, (1 << 11) | (mid << 1) | 1)[1] == 0
    ]
    assert len(divisors) == 2, divisors
    g = min(divisors)
    basis = np.zeros((12, 24), dtype=np.int8)
    for i in range(12):
        word = g << i
        for j in range(23):
            basis[i, j] = (word >> j) & 1
        basis[i, 23] = basis[i, :23].sum() % 2  # parity extension
    coeffs = np.array(
        [[(m >> i) & 1 for i in range(12)] for m in range(4096)], dtype=np.int8
    )
    codes = coeffs @ basis % 2
    dist = np.bincount(codes.sum(axis=1), minlength=25)
    expected = np.zeros(25, dtype=np.int64)
    expected[[0, 8, 12, 16, 24]] = [1, 759, 2576, 759, 1]
    assert np.array_equal(dist, expected), dist
    return codes


def steiner_table(octads):
    """5-subset -> octad index; certifies S(5,8,24)."""
    table = {}
    for idx, octad in enumerate(octads):
        for five in combinations(sorted(octad), 5):
            assert five not in table, "5-set in two octads"
            table[five] = idx
    assert len(table) == 42504  # C(24,5): every 5-set covered once
    return table


# ---------------------------------------------------------------------------
# M24 as octad automorphisms

def moebius_m24(octad_set):
    """PSL2(23) on the code coordinates (position 23 is infinity)."""

    def preserves(perm):
        return all(set_image(perm, o) in octad_set for o in octad_set)

    shift = Permutation([(x + 1) % 23 for x in range(23)] + [23])
    mult = Permutation([(2 * x) % 23 for x in range(23)] + [23])
    # x -> -1/x, with the sign convention fixed by the octad test
    for sign in (-1, 1):
        images = [23] + [pow(x, -1, 23) * sign % 23 for x in range(1, 23)] + [0]
        inv = Permutation(images)
        if preserves(inv):
            break
    else:
        raise AssertionError("no inversion map preserves the octads")
    for g in (shift, mult):
        assert preserves(g)
    check("PSL2(23) order", group_order(24, [shift, mult, inv]), 6072)
    return [shift, mult, inv]


def octad_backtrack(octads, table, rng):
    """One octad automorphism, by depth-first search with Steiner pruning."""
    octads_at = [[] for _ in range(24)]
    for idx, octad in enumerate(octads):
        for p in octad:
            octads_at[p].append(idx)
    image = [-1] * 24

    def consistent(k):
        # octads holding >= 5 points of 0..k must map into a single octad
        mapped = range(k + 1)
        for idx in octads_at[k]:
            pts = [p for p in octads[idx] if p in mapped]
            if len(pts) < 5:
                continue
            five = tuple(sorted(image[p] for p in pts[:5]))
            target = octads[table[five]]
            if any(image[p] not in target for p in pts[5:]):
                return False
        return True

    def extend(k):
        if k == 24:
            return True
        pool = [q for q in range(24) if q not in image[:k]]
        rng.shuffle(pool)
        for q in pool:
            image[k] = q
            if consistent(k) and extend(k + 1):
                return True
        image[k] = -1
        return False

    if not extend(0):
        raise AssertionError("octad backtracking found no automorphism")
    perm = Permutation(image)
    octad_set = {frozenset(o) for o in octads}
    assert all(set_image(perm, o) in octad_set for o in octads)
    return perm


def build_m24():
    codes = golay_codewords()
    octads = [frozenset(np.flatnonzero(row)) for row in codes[codes.sum(1) == 8]]
    table = steiner_table(octads)
    psl = moebius_m24({frozenset(o) for o in octads})
    rng = random.Random(2024)
    while True:
        extra = octad_backtrack(octads, table, rng)
        gens = psl + [extra]
        order = group_order(24, gens)
        if order == 244823040:
            break
        assert order == 6072, order  # landed inside PSL2(23); retry
    check("M24 order", order, 244823040)
    return codes, gens


# ---------------------------------------------------------------------------
# descents

def mathieu_families(codes, m24):
    m23 = point_stabilizer(24, m24, 23, expect=10200960)
    m22_24 = point_stabilizer(24, m23, 22, expect=443520)
    m22 = restrict(m22_24, list(range(22)))
    check("M22 order", group_order(22, m22), 443520)
    write_generators(
        "m22", 22, m22,
        "M22: stabilizer of two points in the octad automorphism group M24",
    )

    duad = object_stabilizer(
        24, m24, frozenset({22, 23}), set_image,
        expect=887040, orbit_size=276,
    )
    aut_m22 = restrict(duad, list(range(22)))
    check("M22:2 order", group_order(22, aut_m22), 887040)
    write_generators(
        "aut_m22", 22, aut_m22,
        "Aut(M22) = M22:2: setwise stabilizer of a duad in M24, on the "
        "remaining 22 points",
    )

    dodecads = [frozenset(np.flatnonzero(r)) for r in codes[codes.sum(1) == 12]]
    dodecad_set = set(dodecads)
    D = min(dodecads, key=sorted)
    Dc = frozenset(range(24)) - D
    assert Dc in dodecad_set  # complement of a dodecad is a dodecad
    m12_24 = object_stabilizer(
        24, m24, D, set_image, expect=95040, orbit_size=2576,
    )
    m12 = restrict(m12_24, sorted(D))
    check("M12 order", group_order(12, m12), 95040)
    write_generators(
        "m12", 12, m12,
        "M12: setwise stabilizer of a dodecad of the Golay code, on its "
        "12 points",
    )

    def pair_image(g, pair):
        return frozenset(set_image(g, part) for part in pair)

    aut_m12 = object_stabilizer(
        24, m24, frozenset({D, Dc}), pair_image,
        expect=190080, orbit_size=1288,
    )
    check("M12:2 order", group_order(24, aut_m12), 190080)
    write_generators(
        "aut_m12", 24, aut_m12,
        "Aut(M12) = M12:2: stabilizer of a complementary dodecad pair in "
        "M24, on all 24 points",
    )

    m11_12 = point_stabilizer(12, m12, 11, expect=7920)
    m11 = restrict(m11_12, list(range(11)))
    check("M11 order", group_order(11, m11), 7920)
    write_generators(
        "m11", 11, m11,
        "M11: point stabilizer in M12",
    )
    return m22, m12, sorted(D)


# ---------------------------------------------------------------------------
# 10-dimensional GF(2) modules and order-8 certificates

def rref2(rows):
    """Reduced row echelon form over GF(2); returns (basis, pivots)."""
    a = np.array(rows, dtype=np.int8) % 2
    pivots = []
    r = 0
    for c in range(a.shape[1]):
        hit = next((i for i in range(r, a.shape[0]) if a[i, c]), None)
        if hit is None:
            continue
        a[[r, hit]] = a[[hit, r]]
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def express(basis, pivots, vec):
    """Coefficients of vec in the rref basis; vec must lie in the span."""
    v = vec.copy() % 2
    coeffs = np.zeros(len(basis), dtype=np.int8)
    for i, c in enumerate(pivots):
        if v[c]:
            coeffs[i] = 1
            v ^= basis[i]
    assert not v.any(), "vector outside the module"
    return coeffs


def module_matrix(basis, pivots, perm):
    """Matrix of the coordinate permutation on the row space of `basis`."""
    inv = perm.inverse()
    rows = [express(basis, pivots, b[inv.images]) for b in basis]
    return np.array(rows, dtype=np.int64)


def perm_power(g, n):
    out = Permutation.identity(len(g.images))
    for _ in range(n):
        out = out * g
    return out


def order8_element(gens, to_matrix, seed):
    """Random order-8 element whose module matrix T has I+T+...+T^7 != 0."""
    rng = random.Random(seed)
    g = gens[0]
    for _ in range(500):
        g = g * gens[rng.randrange(len(gens))]
        o = g.order()
        if o % 8 == 0:
            h = perm_power(g, o // 8)
            T = to_matrix(h)
            assert gfmat.matrix_order(T, 2) == 8
            if gfmat.power_sum(T, 8, 2).any():
                return T
    raise AssertionError("no order-8 element with nonzero power sum found")


def write_module(name, group_label, construction, T):
    # the dual module (transpose-inverse action) carries the same
    # certificate: (T-I)^7 and its dual counterpart have equal rank
    dual = np.linalg.matrix_power(T, 7).T % 2
    assert gfmat.power_sum(dual, 8, 2).any()
    path = DATA / "modules" / f"{name}.txt"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        gfmat.format_matrix(
            2, T,
            header=(
                f"order-8 element of {group_label} on its 10-dimensional "
                "GF(2) module\n"
                f"({construction})\n"
                "certificate: I + T + ... + T^7 is nonzero, so a coset of "
                "the module has order 16 in the semidirect product"
            ),
        )
    )
    print(f"  wrote modules/{name}.txt")


def m22_module(codes, m22):
    shortened = codes[(codes[:, 22] == 0) & (codes[:, 23] == 0)][:, :22]
    basis, pivots = rref2(shortened)
    check("M22 shortened code dimension", len(basis), 10)
    for g in m22:  # invariance of the row space
        for b in basis:
            express(basis, pivots, b[g.inverse().images])
    T = order8_element(m22, lambda h: module_matrix(basis, pivots, h), seed=31)
    write_module(
        "m22_10d", "M22",
        "Golay code shortened at the two fixed points", T,
    )


def m12_module(codes, m12, d_points):
    projected = codes[:, d_points]
    full, full_piv = rref2(projected)
    check("M12 projected code dimension", len(full), 11)
    ones = np.ones(12, dtype=np.int8)
    c_ones = express(full, full_piv, ones)  # the dodecad projects to 1...1
    j = int(np.flatnonzero(c_ones)[0])
    keep = [i for i in range(len(full)) if i != j]

    def qexpress(vec):
        # coordinates modulo <1...1>: clear the j-th coefficient by
        # adding the all-ones word, then drop it
        c = express(full, full_piv, vec).astype(np.int8)
        if c[j]:
            c ^= c_ones
        assert not c[j]
        return c[keep]

    def qmatrix(perm):
        inv = perm.inverse()
        return np.array(
            [qexpress(full[i][inv.images]) for i in keep], dtype=np.int64
        )

    T = order8_element(m12, qmatrix, seed=37)
    check("M12 module dimension", T.shape[0], 10)
    write_module(
        "m12_10d", "M12",
        "Golay code projected to a dodecad, modulo the all-ones word", T,
    )


def main():
    codes, m24 = build_m24()
    m22, m12, d_points = mathieu_families(codes, m24)
    m22_module(codes, m22)
    m12_module(codes, m12, d_points)
    print("mathieu generator files written")


if __name__ == "__main__":
    main()
