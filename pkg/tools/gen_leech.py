"""Leech-lattice route to the aut_suz / suz / aut_j2 / j2 files.

The lattice is the integer row span of the doubled octad indicators and
(-3,1,...,1), certified by determinant 2^36 of its Hermite normal form.
Isometries are stored as 8x orthogonal integer matrices; candidate
generators (coordinate permutations from M24, a sign change on an octad,
and a sextet block map) are admitted only if they carry the lattice basis
into the lattice.  A fixed-point-free order-3 isometry omega (trace -12)
is found by random search; the conjugation orbit of the pair
{omega, omega^2} has size 1545600, the index of its stabilizer 6.Suz.2.
Schreier generators of that stabilizer (plus omega, which fixes the base
pair) are scanned over the pair orbit for a suborbit of size 5346; its
1782 blocks under <omega>-conjugation are the Suzuki graph vertices
(each vertex amounts to an SL2(3) containing omega, met through its
three other Sylow 3-pairs).  The block image is certified of order
|Suz:2| by the deterministic chain.  J2:2 is the stabilizer of an edge
acting on the 100 common neighbours, with J2 its derived subgroup.
"""

from __future__ import annotations

import os
import random
from hashlib import blake2b

import numpy as np

from gkspectra.perm import Permutation
from gen_mathieu import build_m24, steiner_table
from gentools import (
    check,
    derived_subgroup,
    group_order,
    point_stabilizer,
    restrict,
    write_generators,
)

SCALE = 8
ID8 = SCALE * np.eye(24, dtype=np.int64)
CHUNK = 40000


# ---------------------------------------------------------------------------
# lattice arithmetic

def hermite_form(rows):
    """Row-style Hermite normal form (upper triangular, positive pivots)."""
    a = np.array(rows, dtype=np.int64)
    m, n = a.shape
    r = 0
    for c in range(n):
        while True:
            live = [i for i in range(r, m) if a[i, c]]
            if not live:
                raise AssertionError("rank deficit in lattice generators")
            piv = min(live, key=lambda i: abs(int(a[i, c])))
            a[[r, piv]] = a[[piv, r]]
            if a[r, c] < 0:
                a[r] = -a[r]
            done = True
            for i in range(r + 1, m):
                q = a[i, c] // a[r, c]
                if q:
                    a[i] -= q * a[r]
                if a[i, c]:
                    done = False
            if done:
                break
        r += 1
        if r == n:
            break
    assert not a[n:].any()
    return a[:n]


class Leech:
    def __init__(self, octads):
        rows = []
        for o in octads:
            v = np.zeros(24, dtype=np.int64)
            v[sorted(o)] = 2
            rows.append(v)
        tail = np.ones(24, dtype=np.int64)
        tail[0] = -3
        rows.append(tail)
        self.basis = hermite_form(rows)
        det = 1
        for i in range(24):
            det *= int(self.basis[i, i])
        check("Leech covolume", det, 2 ** 36)

    def contains(self, v):
        w = v.astype(np.int64).copy()
        for i in range(24):
            q, rem = divmod(int(w[i]), int(self.basis[i, i]))
            if rem:
                return False
            w -= q * self.basis[i]
        return not w.any()

    def admits(self, mat8):
        """mat8/8 is orthogonal and carries the lattice into itself."""
        if not np.array_equal(mat8 @ mat8.T, 64 * np.eye(24, dtype=np.int64)):
            return False
        for b in self.basis:
            img = mat8 @ b
            if (img % SCALE).any() or not self.contains(img // SCALE):
                return False
        return True


# ---------------------------------------------------------------------------
# generators of the full isometry group

def co0_generators(m24_gens, octads, table):
    lat = Leech(octads)
    gens = []
    for g in m24_gens:
        P = np.zeros((24, 24), dtype=np.int64)
        for i in range(24):
            P[g(i), i] = SCALE
        assert lat.admits(P)
        gens.append(P)

    E = ID8.copy()
    first = sorted(octads[0])
    E[first, first] = -SCALE
    assert lat.admits(E)
    gens.append(E)

    # sextet through {0,1,2,3}: the other tetrads are cut out by octads
    t0 = (0, 1, 2, 3)
    tetrads = [frozenset(t0)]
    assigned = set(t0)
    for p in range(24):
        if p in assigned:
            continue
        octad = octads[table[tuple(sorted(t0 + (p,)))]]
        tet = octad - frozenset(t0)
        assert len(tet) == 4 and not (tet & assigned)
        tetrads.append(tet)
        assigned |= tet
    assert len(tetrads) == 6

    base = np.zeros((24, 24), dtype=np.int64)
    for tet in tetrads:
        idx = sorted(tet)
        for i in idx:
            for j in idx:
                base[i, j] = 4 - 8 * (i == j)
    for signs in range(64):
        X = base.copy()
        for t, tet in enumerate(tetrads):
            if (signs >> t) & 1:
                X[sorted(tet)] = -X[sorted(tet)]
        if lat.admits(X):
            gens.append(X)
            break
    else:
        raise AssertionError("no sextet map preserves the lattice")
    return gens


def mat_mul8(a, b):
    return (a @ b) // SCALE


def conj(g, m):
    """g m g^-1 for 8x orthogonal integer matrices."""
    return (g @ m @ g.T) // 64


def matrix_order8(m, cap=200):
    p = m
    for k in range(1, cap + 1):
        if np.array_equal(p, ID8):
            return k
        p = mat_mul8(p, m)
    raise AssertionError("order cap hit")


def find_omega(gens, seed):
    """Fixed-point-free order-3 isometry: no eigenvalue 1, so trace -12."""
    rng = random.Random(seed)
    w = gens[0]
    for _ in range(10000):
        w = mat_mul8(w, gens[rng.randrange(len(gens))])
        o = matrix_order8(w)
        if o % 3 == 0:
            c = w
            for _ in range(o // 3 - 1):
                c = mat_mul8(c, w)
            if int(c.trace()) == -12 * SCALE:
                return c
    raise AssertionError("no fixed-point-free order-3 element found")


# ---------------------------------------------------------------------------
# the pair orbit and its stabilizer

def pair_key(m):
    a = np.ascontiguousarray(m, dtype=np.int8).tobytes()
    b = np.ascontiguousarray(m.T, dtype=np.int8).tobytes()
    return blake2b(min(a, b), digest_size=12).digest()


def pair_orbit(omega, gens, expected):
    """BFS over conjugates of {omega, omega^2}, keeping parent pointers."""
    visited = {pair_key(omega): 0}
    parent_node = [-1]
    parent_gen = [-1]
    frontier = [(0, omega.astype(np.int8))]
    total = 1
    gens32 = [g.astype(np.int32) for g in gens]
    while frontier:
        ids = [i for i, _ in frontier]
        mats = np.stack([m for _, m in frontier])
        frontier = []
        for k, g in enumerate(gens32):
            for lo in range(0, len(ids), CHUNK):
                batch = mats[lo:lo + CHUNK].astype(np.int32)
                out = ((g @ batch @ g.T) // 64).astype(np.int8)
                for r in range(len(out)):
                    key = pair_key(out[r])
                    if key not in visited:
                        visited[key] = total
                        parent_node.append(ids[lo + r])
                        parent_gen.append(k)
                        frontier.append((total, out[r]))
                        total += 1
        print(f"    pair orbit: {total}", flush=True)
    check("pair orbit size", total, expected)
    return visited, parent_node, parent_gen


class Transversal:
    """Rebuild coset representatives by walking BFS parent pointers."""

    def __init__(self, omega, gens, visited, parent_node, parent_gen):
        self.omega = omega
        self.gens = gens
        self.visited = visited
        self.parent_node = parent_node
        self.parent_gen = parent_gen

    def rep(self, i):
        path = []
        while i > 0:
            path.append(self.parent_gen[i])
            i = self.parent_node[i]
        u = ID8.copy()
        for k in reversed(path):
            u = mat_mul8(self.gens[k], u)
        return u

    def vertex_matrix(self, i):
        return conj(self.rep(i), self.omega)


def stabilizer_sample(trans, count, rng):
    """Random Schreier generators of the stabilizer of {omega, omega^2}."""
    base_key = pair_key(trans.omega)
    n = len(trans.visited)
    out, seen = [], set()
    while len(out) < count:
        i = rng.randrange(n)
        k = rng.randrange(len(trans.gens))
        u_i = trans.rep(i)
        moved = conj(trans.gens[k], conj(u_i, trans.omega))
        u_j = trans.rep(trans.visited[pair_key(moved)])
        s = mat_mul8(mat_mul8(u_j.T, trans.gens[k]), u_i)
        assert pair_key(conj(s, trans.omega)) == base_key
        b = s.tobytes()
        if b not in seen and not np.array_equal(s, ID8):
            seen.add(b)
            out.append(s)
    return out


def scan_for_suborbit(trans, stab_gens, wanted, bail=30000):
    """Walk stabilizer orbits on the pair set until one has a wanted size.

    Orbits larger than `bail` are abandoned; their visited nodes stay
    marked, and a later re-entry refuses to expand through marked nodes
    (such a tainted walk just burns its fresh pocket and moves on).  A
    clean, completed orbit of a wanted size is therefore genuine.
    """
    n = len(trans.visited)
    state = np.zeros(n, dtype=np.int8)
    gens32 = [g.astype(np.int32) for g in stab_gens]
    sizes = {}
    for start in range(1, n):
        if start % 200000 == 0:
            print(f"    scan at {start}, marked {int((state != 0).sum())}",
                  flush=True)
        if state[start]:
            continue
        m0 = np.ascontiguousarray(trans.vertex_matrix(start), dtype=np.int8)
        local = {pair_key(m0): m0}
        state[start] = 1
        frontier = [m0]
        clean = True
        while frontier and len(local) <= bail:
            mats = np.stack(frontier)
            frontier = []
            for g in gens32:
                for lo in range(0, len(mats), CHUNK):
                    batch = mats[lo:lo + CHUNK].astype(np.int32)
                    out = ((g @ batch @ g.T) // 64).astype(np.int8)
                    for r in range(len(out)):
                        key = pair_key(out[r])
                        if key in local:
                            continue
                        idx = trans.visited[key]
                        if state[idx]:
                            clean = False
                            continue
                        local[key] = out[r]
                        state[idx] = 1
                        frontier.append(out[r])
        if not frontier and clean:
            size = len(local)
            sizes[size] = sizes.get(size, 0) + 1
            if size in wanted:
                print(f"    suborbit of size {size} found from index {start}",
                      flush=True)
                return local
    raise AssertionError(f"no suborbit in {sorted(wanted)}; clean sizes {sizes}")


def block_action(stab_gens, suborbit, omega):
    """Stabilizer action on the <omega>-conjugation blocks of a suborbit.

    Pairs commuting with omega sit in blocks of size 1, the rest in
    blocks of size 3; identity images are dropped from the result.
    """
    om = omega.astype(np.int32)
    block_of = {}
    reps = []
    for k in sorted(suborbit):
        if k in block_of:
            continue
        members = [k]
        cur = suborbit[k]
        while True:
            cur = ((om @ cur.astype(np.int32) @ om.T) // 64).astype(np.int8)
            kk = pair_key(cur)
            if kk == members[0]:
                break
            members.append(kk)
        for kk in members:
            assert kk in suborbit  # omega is among the scanned generators
            block_of[kk] = len(reps)
        reps.append(suborbit[k])
    batch = np.stack(reps).astype(np.int32)
    perms = []
    for g in stab_gens:
        g32 = g.astype(np.int32)
        out = ((g32 @ batch @ g32.T) // 64).astype(np.int8)
        perm = Permutation([block_of[pair_key(r)] for r in out])
        if perm != Permutation.identity(len(reps)):
            perms.append(perm)
    return perms, len(reps)


# ---------------------------------------------------------------------------
# cached BFS state (the pair orbit takes minutes; scans are re-runnable)

CACHE = "/tmp/leech_state.npz"


def save_state(omega, gens, visited, pnode, pgen):
    keys = np.zeros((len(visited), 12), dtype=np.uint8)
    for k, i in visited.items():
        keys[i] = np.frombuffer(k, dtype=np.uint8)
    np.savez_compressed(
        CACHE,
        omega=omega.astype(np.int8),
        gens=np.stack(gens).astype(np.int8),
        keys=keys,
        pnode=np.array(pnode, dtype=np.int32),
        pgen=np.array(pgen, dtype=np.int8),
    )


def load_state():
    z = np.load(CACHE)
    omega = z["omega"].astype(np.int64)
    gens = [g.astype(np.int64) for g in z["gens"]]
    keys = z["keys"]
    visited = {keys[i].tobytes(): i for i in range(len(keys))}
    return omega, gens, visited, z["pnode"].tolist(), z["pgen"].tolist()


# ---------------------------------------------------------------------------

def orbit_of_point(degree, gens, point):
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def transversal_perm(degree, gens, src, dst):
    trans = {src: Permutation.identity(degree)}
    frontier = [src]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g(p)
                if q not in trans:
                    trans[q] = trans[p] * g
                    nxt.append(q)
        frontier = nxt
    return trans[dst]


def main():
    if os.path.exists(CACHE):
        print("  loading cached pair-orbit state", flush=True)
        omega, gens, visited, pnode, pgen = load_state()
        check("cached pair orbit size", len(visited), 1545600)
    else:
        codes, m24_gens = build_m24()
        octads = [frozenset(np.flatnonzero(r))
                  for r in codes[codes.sum(1) == 8]]
        table = steiner_table(octads)
        gens = co0_generators(m24_gens, octads, table)
        print(f"  {len(gens)} lattice generators admitted", flush=True)

        omega = find_omega(gens, seed=71)
        check("omega order", matrix_order8(omega), 3)

        visited, pnode, pgen = pair_orbit(omega, gens, expected=1545600)
        save_state(omega, gens, visited, pnode, pgen)
    trans = Transversal(omega, gens, visited, pnode, pgen)

    rng = random.Random(72)
    stab = [omega] + stabilizer_sample(trans, count=30, rng=rng)
    suborbit = scan_for_suborbit(trans, stab, wanted={1782, 5346})
    suz_perms, nverts = block_action(stab, suborbit, omega)
    check("Suzuki graph vertices", nverts, 1782)

    order = group_order(1782, suz_perms)
    check("Suz:2 order", order, 896690995200)
    for k in (4, 6, 10, len(suz_perms)):
        if group_order(1782, suz_perms[:k]) == order:
            suz_perms = suz_perms[:k]
            break
    write_generators(
        "aut_suz", 1782, suz_perms,
        "Aut(Suz) = Suz:2 on the 1782 vertices of the Suzuki graph "
        "(blocks of conjugate pairs {s, s^2} of fixed-point-free "
        "order-3 isometries of the Leech lattice)",
    )
    suz = derived_subgroup(1782, suz_perms, 448345497600)
    write_generators(
        "suz", 1782, suz,
        "Suz: derived subgroup of the Suzuki graph automorphism action",
    )

    a = 0
    s_a = point_stabilizer(1782, suz_perms, a, expect=503193600)
    blocks = []
    placed = set()
    for p in range(1782):
        if p == a or p in placed:
            continue
        blk = orbit_of_point(1782, s_a, p)
        placed |= blk
        blocks.append(blk)
    check("suborbit sizes", sorted(len(b) for b in blocks), [416, 1365])
    neighbours_a = next(blk for blk in blocks if len(blk) == 416)
    b = min(neighbours_a)
    u = transversal_perm(1782, suz_perms, a, b)
    neighbours_b = {u(x) for x in neighbours_a}
    assert a in neighbours_b  # the 416-valent relation is symmetric
    common = sorted(neighbours_a & neighbours_b)
    check("common neighbours", len(common), 100)

    s_ab = point_stabilizer(1782, s_a, b, expect=1209600)
    aut_j2 = restrict(s_ab, common)
    check("J2:2 order", group_order(100, aut_j2), 1209600)
    write_generators(
        "aut_j2", 100, aut_j2,
        "Aut(J2) = J2:2: stabilizer of a Suzuki graph edge acting on the "
        "100 common neighbours",
    )
    j2 = derived_subgroup(100, aut_j2, 604800)
    write_generators(
        "j2", 100, j2,
        "J2: derived subgroup of the edge stabilizer action above",
    )
    print("leech-chain generator files written", flush=True)


if __name__ == "__main__":
    main()
