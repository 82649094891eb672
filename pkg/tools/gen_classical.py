"""Build generator files for the alternating and classical catalog groups.

Linear groups act on projective lines/planes, unitary groups on the
isotropic (U6(2): nonisotropic) points of the hermitian form, symplectic
groups on projective space, O8+(2) on the singular points of the quadric.
Unitary/symplectic groups are generated by random seeded transvections,
O8+(2) by random Siegel transformations; every file is accepted only after
the deterministic stabilizer chain reproduces the published group order.
"""

from __future__ import annotations

import math
import random

import numpy as np

from gkspectra.perm import Permutation
from gentools import (
    GF,
    check,
    gmat_identity,
    gmat_mul,
    group_order,
    orbit_permutations,
    write_generators,
)


def alternating_groups():
    for n in range(5, 13):
        long_cycle = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens = [
            Permutation.from_cycles(n, [(1, 2, 3)]),
            Permutation.from_cycles(n, [long_cycle]),
        ]
        check(f"A{n} order", group_order(n, gens), math.factorial(n) // 2)
        write_generators(
            f"a{n}",
            n,
            gens,
            f"alternating group A{n}: 3-cycle plus {'n' if n % 2 else '(n-1)'}-cycle",
        )


# ---------------------------------------------------------------------------
# PSL2(q) via Moebius maps on the projective line (infinity = q)

def moebius_translation(F, beta):
    images = [int(F.add[x, beta]) for x in range(F.q)] + [F.q]
    return Permutation(images)


def moebius_neg_inverse(F):
    # x -> -1/x, swapping 0 and infinity
    images = [F.q if x == 0 else int(F.neg[F.inv[x]]) for x in range(F.q)]
    return Permutation(images + [0])


def psl2(q, order):
    F = GF(q)
    # translations by a basis of GF(q) over GF(p), then x -> -1/x
    gens = [moebius_translation(F, F.p ** j) for j in range(F.k)]
    gens.append(moebius_neg_inverse(F))
    check(f"L2({q}) order", group_order(q + 1, gens), order)
    write_generators(
        f"l2_{q}",
        q + 1,
        gens,
        f"PSL2({q}) on the projective line (point {q} is infinity): "
        "translations and x -> -1/x",
    )


# ---------------------------------------------------------------------------
# linear groups in dimension 3 over GF(4)

def l3_4():
    F = GF(4)
    omega = 2  # the element x, a generator of GF(4)*
    P = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=np.int64)
    E1 = gmat_identity(3)
    E1[0, 1] = 1
    Ew = gmat_identity(3)
    Ew[0, 1] = omega
    _, perms = orbit_permutations(F, [P, E1, Ew], [(1, 0, 0)])
    check("L3(4) order", group_order(21, perms), 20160)
    write_generators(
        "l3_4", 21, perms,
        "PSL3(4) on the 21 points of PG(2,4): coordinate 3-cycle and "
        "two transvections",
    )
    D = gmat_identity(3)
    D[0, 0] = omega
    _, perms = orbit_permutations(F, [P, E1, Ew, D], [(1, 0, 0)])
    check("PGL3(4) order", group_order(21, perms), 60480)
    write_generators(
        "pgl3_4", 21, perms,
        "PGL3(4) on the 21 points of PG(2,4): PSL3(4) generators plus "
        "diag(w,1,1) with w a generator of GF(4)*",
    )
    return perms


# ---------------------------------------------------------------------------
# unitary groups: GF(q0^2), hermitian form with antidiagonal gram matrix

def hermitian_value(F, half, v, w):
    n = len(v)
    acc = 0
    for i in range(n):
        acc = int(F.add[acc, F.mul[v[i], F.conj(int(w[n - 1 - i]), half)]])
    return acc


def unitary_check(F, half, A):
    n = A.shape[0]
    J = np.fliplr(gmat_identity(n))
    conjA = A.copy()
    for i in range(n):
        for j in range(n):
            conjA[i, j] = F.conj(int(A[i, j]), half)
    lhs = gmat_mul(F, gmat_mul(F, A.T.copy(), J), conjA)
    return np.array_equal(lhs, J)


def unitary_transvections(q0, n, count, seed):
    """Random transvections x -> x + mu f(x,v) v, v isotropic, tr(mu) = 0."""
    F = GF(q0 * q0)
    half = F.k // 2
    rng = random.Random(seed)
    vectors = [
        tuple((idx // F.q ** j) % F.q for j in range(n))
        for idx in range(1, F.q ** n)
    ]
    isotropic = [v for v in vectors if hermitian_value(F, half, v, v) == 0]
    trace_zero = [
        m for m in range(1, F.q) if F.add[m, F.conj(m, half)] == 0
    ]
    mats = []
    while len(mats) < count:
        v = np.array(rng.choice(isotropic), dtype=np.int64)
        mu = rng.choice(trace_zero)
        # f(x, v) = sum_i x_i conj(v_{n-1-i}); column j weight:
        col = [F.conj(int(v[n - 1 - j]), half) for j in range(n)]
        T = gmat_identity(n)
        for i in range(n):
            for j in range(n):
                T[i, j] = F.add[T[i, j], F.mul[mu, F.mul[v[i], col[j]]]]
        if not unitary_check(F, half, T):
            raise AssertionError("transvection failed the unitarity check")
        mats.append(T)
    return F, half, mats, isotropic


def unitary_group(name, q0, n, order, degree, count, seed, nonisotropic=False):
    F, half, mats, isotropic = unitary_transvections(q0, n, count, seed)
    if nonisotropic:
        seed_vec = next(
            tuple((idx // F.q ** j) % F.q for j in range(n))
            for idx in range(1, F.q ** n)
            if hermitian_value(
                F, half, tuple((idx // F.q ** j) % F.q for j in range(n)),
                tuple((idx // F.q ** j) % F.q for j in range(n)),
            )
            != 0
        )
    else:
        seed_vec = isotropic[0]
    points, perms = orbit_permutations(F, mats, [seed_vec])
    check(f"{name} degree", len(points), degree)
    check(f"{name} order", group_order(degree, perms), order)
    return F, half, mats, perms


def u3_3():
    _, _, _, perms = unitary_group("U3(3)", 3, 3, 6048, 28, 4, seed=101)
    write_generators(
        "u3_3", 28, perms,
        "PSU3(3) on the 28 isotropic points of the hermitian form over "
        "GF(9); unitary transvections",
    )


def u3_5_and_pgu():
    F, half, mats, perms = unitary_group("U3(5)", 5, 3, 126000, 126, 4, seed=102)
    write_generators(
        "u3_5", 126, perms,
        "PSU3(5) on the 126 isotropic points of the hermitian form over "
        "GF(25); unitary transvections",
    )
    # adjoin a determinant-6 diagonal to reach PGU3(5)
    zeta = F.primitive()
    a = F.inv[F.conj(zeta, half)]
    D = np.diag([int(a), 1, int(zeta)]).astype(np.int64)
    if not unitary_check(F, half, D):
        raise AssertionError("diagonal is not unitary")
    iso = next(
        v for v in (tuple((i // F.q ** j) % F.q for j in range(3))
                    for i in range(1, F.q ** 3))
        if hermitian_value(F, half, v, v) == 0
    )
    _, perms = orbit_permutations(F, mats + [D], [iso])
    check("PGU3(5) order", group_order(126, perms), 378000)
    write_generators(
        "pgu3_5", 126, perms,
        "PGU3(5) on the 126 isotropic points: PSU3(5) transvections plus a "
        "diagonal of determinant order 6",
    )


def bigger_unitaries():
    _, _, _, perms = unitary_group("U4(3)", 3, 4, 3265920, 280, 6, seed=103)
    write_generators(
        "u4_3", 280, perms,
        "PSU4(3) on the 280 isotropic points of the hermitian form over "
        "GF(9); unitary transvections",
    )
    _, _, _, perms = unitary_group("U5(2)", 2, 5, 13685760, 165, 6, seed=104)
    write_generators(
        "u5_2", 165, perms,
        "PSU5(2) on the 165 isotropic points of the hermitian form over "
        "GF(4); unitary transvections",
    )
    _, _, _, perms = unitary_group(
        "U6(2)", 2, 6, 9196830720, 672, 7, seed=105, nonisotropic=True
    )
    write_generators(
        "u6_2", 672, perms,
        "PSU6(2) on the 672 nonisotropic points of the hermitian form over "
        "GF(4); unitary transvections",
    )


# ---------------------------------------------------------------------------
# symplectic groups on projective space

def symplectic_group(name, q, n2, order, degree, count, seed):
    F = GF(q)
    n = n2
    half_n = n // 2
    J = np.zeros((n, n), dtype=np.int64)
    for i in range(half_n):
        J[i, half_n + i] = 1
        J[half_n + i, i] = int(F.neg[1])
    rng = random.Random(seed)

    def transvection():
        while True:
            v = np.array([rng.randrange(q) for _ in range(n)], dtype=np.int64)
            if v.any():
                break
        lam = rng.randrange(1, q)
        jv = np.zeros(n, dtype=np.int64)
        for i in range(n):
            acc = 0
            for j in range(n):
                acc = F.add[acc, F.mul[J[i, j], v[j]]]
            jv[i] = acc
        T = gmat_identity(n)
        for i in range(n):
            for j in range(n):
                T[i, j] = F.add[T[i, j], F.mul[lam, F.mul[v[i], jv[j]]]]
        lhs = gmat_mul(F, gmat_mul(F, T.T.copy(), J), T)
        if not np.array_equal(lhs, J):
            raise AssertionError("transvection failed the symplectic check")
        return T

    mats = [transvection() for _ in range(count)]
    seed_vec = tuple([1] + [0] * (n - 1))
    for _ in range(8):  # grow until the random transvections generate
        points, perms = orbit_permutations(F, mats, [seed_vec])
        if len(points) == degree:
            got = group_order(degree, perms)
            if got == order:
                check(f"{name} order", got, order)
                return perms
        mats.append(transvection())
    raise AssertionError(f"{name}: transvections did not generate")


def symplectic_groups():
    perms = symplectic_group("U4(2)=PSp4(3)", 3, 4, 25920, 40, 5, seed=106)
    write_generators(
        "u4_2", 40, perms,
        "U4(2) as PSp4(3) on the 40 points of PG(3,3); symplectic "
        "transvections",
    )
    perms = symplectic_group("S6(2)", 2, 6, 1451520, 63, 6, seed=107)
    write_generators(
        "s6_2", 63, perms,
        "Sp6(2) on the 63 points of PG(5,2); symplectic transvections",
    )
    perms = symplectic_group("S4(7)", 7, 4, 138297600, 400, 5, seed=108)
    write_generators(
        "s4_7", 400, perms,
        "PSp4(7) on the 400 points of PG(3,7); symplectic transvections",
    )


# ---------------------------------------------------------------------------
# O8+(2) on the singular points of the plus-type quadric

def o8_plus_2():
    n = 8
    pairs = [(0, 1), (2, 3), (4, 5), (6, 7)]

    def quad(v):
        return sum(int(v[a]) & int(v[b]) for a, b in pairs) & 1

    def bil(x, y):
        return (quad((x + y) % 2) + quad(x) + quad(y)) & 1

    vectors = [
        np.array([(i >> j) & 1 for j in range(n)], dtype=np.int64)
        for i in range(1, 1 << n)
    ]
    singular = [v for v in vectors if quad(v) == 0]
    rng = random.Random(109)
    mats = []
    while len(mats) < 6:
        v = rng.choice(singular)
        w = rng.choice(vectors)
        if bil(v, w) != 0 or np.array_equal(v, w):
            continue
        T = np.zeros((n, n), dtype=np.int64)
        for j, e in enumerate(np.eye(n, dtype=np.int64)):
            img = (e + bil(e, v) * w + bil(e, w) * v + bil(e, v) * quad(w) * v) % 2
            T[:, j] = img
        if any(quad((T @ x) % 2) != quad(x) for x in vectors):
            raise AssertionError("Siegel map failed the quadric check")
        mats.append(T)
    F = GF(2)
    points, perms = orbit_permutations(
        F, mats, [tuple(int(x) for x in singular[0])]
    )
    check("O8+(2) degree", len(points), 135)
    check("O8+(2) order", group_order(135, perms), 174182400)
    write_generators(
        "o8p_2", 135, perms,
        "O8+(2) on the 135 singular points of the plus-type quadric over "
        "GF(2); Siegel transformations",
    )


def main():
    print("alternating groups")
    alternating_groups()
    print("linear groups")
    psl2(7, 168)
    psl2(8, 504)
    psl2(11, 660)
    psl2(49, 58800)
    l3_4()
    print("unitary groups")
    u3_3()
    u3_5_and_pgu()
    bigger_unitaries()
    print("symplectic groups")
    symplectic_groups()
    print("orthogonal group")
    o8_plus_2()
    print("all classical generator files written")


if __name__ == "__main__":
    main()
