"""Shared helpers for the offline data generators.

Everything in tools/ is build-time machinery: it constructs the permutation
generator files and module matrices shipped under src/gkspectra/data/, with
every stage order-checked against the deterministic stabilizer chain.  The
package itself never imports this code.
"""

from __future__ import annotations

import math
import random
from pathlib import Path

import numpy as np

from gkspectra.bsgs import StabilizerChain
from gkspectra.perm import Permutation, format_generators

DATA = Path(__file__).resolve().parent.parent / "src" / "gkspectra" / "data"


# ---------------------------------------------------------------------------
# small finite fields GF(p^k), elements encoded as ints 0..q-1 (base-p digits)

class GF:
    def __init__(self, q: int):
        p, k = _factor_prime_power(q)
        self.q, self.p, self.k = q, p, k
        if k == 1:
            add = (np.add.outer(np.arange(q), np.arange(q)) % p)
            mul = (np.multiply.outer(np.arange(q), np.arange(q)) % p)
        else:
            poly = _find_irreducible(p, k)
            elems = [self._decode(i, p, k) for i in range(q)]
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self._encode(
                        [(x + y) % p for x, y in zip(elems[a], elems[b])], p
                    )
                    mul[a, b] = self._encode(
                        _poly_mulmod(elems[a], elems[b], poly, p), p
                    )
        self.add = add.astype(np.int64)
        self.mul = mul.astype(np.int64)
        self.neg = np.array(
            [next(b for b in range(q) if self.add[a, b] == 0) for a in range(q)]
        )
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if self.mul[a, b] == 1)
        self.inv = inv
        # frobenius x -> x^p as a table, iterated for conjugation on GF(q0^2)
        frob = np.zeros(q, dtype=np.int64)
        for a in range(q):
            frob[a] = self.pow(a, p)
        self.frob = frob
        self.one = 1

    @staticmethod
    def _decode(i, p, k):
        return [(i // p ** j) % p for j in range(k)]

    @staticmethod
    def _encode(coeffs, p):
        return sum(c * p ** j for j, c in enumerate(coeffs))

    def pow(self, a: int, n: int) -> int:
        out = 1
        base = a
        while n:
            if n & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            n >>= 1
        return out

    def element_order(self, a: int) -> int:
        assert a != 0
        k, x = 1, a
        while x != 1:
            x = int(self.mul[x, a])
            k += 1
        return k

    def primitive(self) -> int:
        return next(a for a in range(2, self.q) if self.element_order(a) == self.q - 1)

    def conj(self, a: int, half: int) -> int:
        # x -> x^(p^half); with q = q0^2 and half = k//2 this is the
        # involutory automorphism fixing GF(q0)
        for _ in range(half):
            a = int(self.frob[a])
        return a


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise ValueError("not a prime power")
            return p, k
    raise ValueError("bad q")


def _poly_mulmod(a, b, poly, p):
    k = len(poly) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(k):
                prod[d - k + j] = (prod[d - k + j] - c * poly[j]) % p
    return prod[:k]


def _find_irreducible(p, k):
    # monic x^k + ... ; for k <= 3 rootlessness is equivalent to irreducibility
    assert k in (2, 3)
    for tail in range(p ** k):
        coeffs = [(tail // p ** j) % p for j in range(k)]
        if all(
            (pow(x, k, p) + sum(c * pow(x, j, p) for j, c in enumerate(coeffs))) % p
            for x in range(p)
        ):
            return coeffs + [1]
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------
# matrices over GF(q): numpy int arrays of field indices

def gmat_mul(F: GF, A, B):
    d = A.shape[0]
    out = np.zeros_like(A)
    for i in range(d):
        for j in range(B.shape[1]):
            acc = 0
            for l in range(d):
                acc = F.add[acc, F.mul[A[i, l], B[l, j]]]
            out[i, j] = acc
    return out


def gmat_vec_many(F: GF, A, V):
    """Apply A to every row of V (shape (N, d)); returns (N, d)."""
    n, d = V.shape
    out = np.zeros((n, d), dtype=V.dtype)
    for i in range(d):
        acc = np.zeros(n, dtype=V.dtype)
        for j in range(d):
            acc = F.add[acc, F.mul[A[i, j], V[:, j]]]
        out[:, i] = acc
    return out


def gmat_eq(A, B):
    return np.array_equal(A, B)


def gmat_identity(d):
    return np.eye(d, dtype=np.int64)


def canon_projective(F: GF, v):
    """Scale so the first nonzero coordinate is 1."""
    for x in v:
        if x:
            s = int(F.inv[x])
            return tuple(int(F.mul[s, y]) for y in v)
    raise ValueError("zero vector")


# ---------------------------------------------------------------------------
# orbits and permutation images

def orbit_permutations(F: GF, mats, seeds, canon=None):
    """Close the seed points under the matrices; return (points, perms).

    Points are canonical tuples (projective by default).  perms[i] is the
    permutation induced by mats[i] on the sorted orbit.
    """
    canon = canon or (lambda v: canon_projective(F, v))
    seen = {canon(np.array(s, dtype=np.int64)) for s in seeds}
    frontier = list(seen)
    while frontier:
        batch = np.array(frontier, dtype=np.int64)
        frontier = []
        for A in mats:
            for row in gmat_vec_many(F, A, batch):
                key = canon(row)
                if key not in seen:
                    seen.add(key)
                    frontier.append(key)
    points = sorted(seen)
    index = {pt: i for i, pt in enumerate(points)}
    arr = np.array(points, dtype=np.int64)
    perms = []
    for A in mats:
        images = gmat_vec_many(F, A, arr)
        perms.append(
            Permutation([index[canon(r)] for r in images])
        )
    return points, perms


def group_order(degree, perms):
    return StabilizerChain(degree, perms).order()


def write_generators(name: str, degree: int, perms, header: str):
    DATA.joinpath("generators").mkdir(parents=True, exist_ok=True)
    path = DATA / "generators" / f"{name}.txt"
    path.write_text(format_generators(degree, perms, header=header))
    print(f"  wrote {path.name}: degree {degree}, {len(perms)} generators")
    return path


# ---------------------------------------------------------------------------
# orbit-stabilizer on points for permutation groups

def point_stabilizer(degree, gens, point, expect=None, sample=14, seed=5):
    """Generators of the stabilizer of `point`, by Schreier's lemma.

    Takes a random sample of Schreier generators and, when `expect` is
    given, enlarges the sample until the stabilizer chain confirms the
    expected order.
    """
    trans = {point: Permutation.identity(degree)}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g(p)
                if q not in trans:
                    trans[q] = trans[p] * g
                    nxt.append(q)
        frontier = nxt
    pairs = [(p, g) for p in trans for g in gens]
    rng = random.Random(seed)
    rng.shuffle(pairs)
    out, seen = [], set()
    goal = sample
    for p, g in pairs:
        s = trans[p] * g * trans[g(p)].inverse()
        if not s.is_identity() and s not in seen:
            seen.add(s)
            out.append(s)
        if len(out) >= goal:
            if expect is None or group_order(degree, out) == expect:
                return out
            goal += sample  # undergenerated, take more Schreier elements
    if expect is not None and group_order(degree, out) != expect:
        raise AssertionError("stabilizer generators did not close")
    return out


def object_stabilizer(degree, gens, obj, act, expect=None, orbit_size=None,
                      sample=14, seed=5):
    """Setwise/object stabilizer via Schreier's lemma on an orbit of objects.

    `act(g, obj)` must return the image object (hashable).  Same sampling
    scheme as point_stabilizer; returns degree-`degree` permutations.
    """
    trans = {obj: Permutation.identity(degree)}
    frontier = [obj]
    while frontier:
        nxt = []
        for o in frontier:
            for g in gens:
                q = act(g, o)
                if q not in trans:
                    trans[q] = trans[o] * g
                    nxt.append(q)
        frontier = nxt
    if orbit_size is not None and len(trans) != orbit_size:
        raise AssertionError(
            f"object orbit has size {len(trans)}, expected {orbit_size}"
        )
    pairs = [(o, g) for o in trans for g in gens]
    rng = random.Random(seed)
    rng.shuffle(pairs)
    out, seen = [], set()
    goal = sample
    for o, g in pairs:
        s = trans[o] * g * trans[act(g, o)].inverse()
        if not s.is_identity() and s not in seen:
            seen.add(s)
            out.append(s)
        if len(out) >= goal:
            if expect is None or group_order(degree, out) == expect:
                return out
            goal += sample
    if expect is not None and group_order(degree, out) != expect:
        raise AssertionError("object stabilizer generators did not close")
    return out


def set_image(g, obj):
    """Action on frozensets of points, for object_stabilizer."""
    return frozenset(g(p) for p in obj)


def derived_subgroup(degree, gens, expect, seed=11, batch=8):
    """Random commutators until the chain confirms the expected order."""
    rng = random.Random(seed)
    out = []
    for _ in range(50):
        for _ in range(batch):
            a = _random_word(rng, gens)
            b = _random_word(rng, gens)
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                out.append(c)
        if group_order(degree, out) == expect:
            return out
    raise AssertionError("commutators did not reach the expected order")


def _random_word(rng, gens, length=6):
    w = gens[rng.randrange(len(gens))]
    for _ in range(rng.randrange(1, length)):
        w = w * gens[rng.randrange(len(gens))]
    return w


def restrict(perms, support):
    """Restrict permutations to an invariant support list (new labels 0..)."""
    index = {p: i for i, p in enumerate(support)}
    out = []
    for g in perms:
        out.append(Permutation([index[g(p)] for p in support]))
    return out


def sorted_gens(perms):
    return sorted(perms, key=lambda g: g.images.tobytes())


def check(label, got, want):
    status = "ok" if got == want else "MISMATCH"
    print(f"  {label}: {got} ({status}, want {want})")
    if got != want:
        raise AssertionError(f"{label}: got {got}, want {want}")
