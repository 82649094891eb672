"""Build the McLaughlin and Higman-Sims graphs and their group files.

McLaughlin vertices: the 22 points of the derived Steiner system
S(4,7,23) away from a fixed point z, the 77 heptads through z, and the
176 heptads avoiding z; certified strongly regular (275,112,30,56).
Higman-Sims vertices: a new symbol, the 22 points, and the same 77
heptads, certified (100,22,0,6).  M22 acts on both; extra automorphisms
that merge the M22 orbits are found by backtracking with forced
propagation, and the results are accepted only at the full automorphism
group orders (1796256000 = |McL:2|, 88704000 = |HS:2|).  McL and HS are
the derived subgroups.
"""

from __future__ import annotations

import random
import sys

import numpy as np

from gkspectra.perm import Permutation
from gen_mathieu import build_m24
from gentools import (
    check,
    derived_subgroup,
    group_order,
    point_stabilizer,
    write_generators,
)


def steiner_23(codes):
    octads = [frozenset(np.flatnonzero(r)) for r in codes[codes.sum(1) == 8]]
    heptads = [o - {23} for o in octads if 23 in o]
    assert len(heptads) == 253
    z = 22
    b_verts = sorted((h for h in heptads if z in h), key=sorted)
    c_verts = sorted((h for h in heptads if z not in h), key=sorted)
    assert (len(b_verts), len(c_verts)) == (77, 176)
    return b_verts, c_verts


def vertex_action(gens24, vertices, index):
    out = []
    for g in gens24:
        images = []
        for kind, obj in vertices:
            if kind in ("p", "*"):
                images.append(index[(kind, g(obj) if kind == "p" else obj)])
            else:
                images.append(index[(kind, frozenset(g(p) for p in obj))])
        out.append(Permutation(images))
    return out


def mclaughlin_graph(codes, m22_24):
    b_verts, c_verts = steiner_23(codes)
    vertices = [("p", i) for i in range(22)]
    vertices += [("b", h) for h in b_verts]
    vertices += [("c", h) for h in c_verts]
    index = {v: i for i, v in enumerate(vertices)}

    adj = np.zeros((275, 275), dtype=bool)

    def join(u, v):
        adj[index[u], index[v]] = adj[index[v], index[u]] = True

    for i in range(22):
        for h in b_verts:
            if i not in h:
                join(("p", i), ("b", h))
        for h in c_verts:
            if i in h:
                join(("p", i), ("c", h))
    for hs, tag in ((b_verts, "b"), (c_verts, "c")):
        for a in range(len(hs)):
            for b in range(a + 1, len(hs)):
                if len(hs[a] & hs[b]) == 1:
                    join((tag, hs[a]), (tag, hs[b]))
    for hb in b_verts:
        for hc in c_verts:
            if len(hb & hc) == 3:
                join(("b", hb), ("c", hc))

    certify_srg(adj, 112, 30, 56)
    vertex_gens = vertex_action(m22_24, vertices, index)
    check("M22 on the McLaughlin graph", group_order(275, vertex_gens), 443520)
    return adj, vertex_gens


def higman_sims_graph(codes, m22_24):
    b_verts, _ = steiner_23(codes)
    hexads = [h - {22} for h in b_verts]  # S(3,6,22) blocks
    vertices = [("*", 0)] + [("p", i) for i in range(22)]
    vertices += [("h", h) for h in hexads]
    index = {v: i for i, v in enumerate(vertices)}
    adj = np.zeros((100, 100), dtype=bool)

    def join(u, v):
        adj[index[u], index[v]] = adj[index[v], index[u]] = True

    for i in range(22):
        join(("*", 0), ("p", i))
        for h in hexads:
            if i in h:
                join(("p", i), ("h", h))
    for a in range(len(hexads)):
        for b in range(a + 1, len(hexads)):
            if not hexads[a] & hexads[b]:
                join(("h", hexads[a]), ("h", hexads[b]))

    certify_srg(adj, 22, 0, 6)
    vertex_gens = vertex_action(m22_24, vertices, index)
    check("M22 on the Higman-Sims graph", group_order(100, vertex_gens), 443520)
    return adj, vertex_gens


def certify_srg(adj, k, lam, mu):
    n = adj.shape[0]
    assert not adj.diagonal().any()
    assert (adj.sum(1) == k).all()
    common = adj.astype(np.int32) @ adj.astype(np.int32)
    off = ~np.eye(n, dtype=bool)
    assert (common[adj] == lam).all()
    assert (common[~adj & off] == mu).all()


def graph_automorphism(adj, first_image, rng):
    """Backtracking automorphism search with image[0] = first_image.

    Candidate sets are boolean rows, narrowed by adjacency with every
    mapped vertex; most-constrained-vertex ordering with forced moves.
    """
    n = adj.shape[0]
    nonadj = ~adj & ~np.eye(n, dtype=bool)

    def assign(cand, v, q):
        out = cand.copy()
        out[:, q] = False
        out[v] = False
        out[v, q] = True
        rows = np.flatnonzero(adj[v])
        out[rows] &= adj[q]
        rows = np.flatnonzero(nonadj[v])
        out[rows] &= nonadj[q]
        return out

    def solve(cand, todo):
        while True:
            counts = cand[todo].sum(1)
            if (counts == 0).any():
                return None
            forced = np.flatnonzero(counts == 1)
            if not len(forced):
                break
            # one forced vertex at a time: each assignment can invalidate
            # the candidates of the next
            i = int(forced[0])
            v = int(todo[i])
            cand = assign(cand, v, int(cand[v].argmax()))
            todo = np.delete(todo, i)
            if not len(todo):
                return cand
        v = todo[counts.argmin()]
        todo = todo[todo != v]
        options = np.flatnonzero(cand[v])
        rng.shuffle(options)
        for q in options:
            got = solve(assign(cand, v, q), todo)
            if got is not None:
                return got
        return None

    cand = np.ones((n, n), dtype=bool)
    cand = assign(cand, 0, first_image)
    got = solve(cand, np.array([v for v in range(1, n)], dtype=np.int64))
    if got is None:
        return None
    images = got.argmax(1)
    assert (got.sum(1) == 1).all()
    perm = Permutation([int(x) for x in images])
    # full adjacency preservation check
    pi = perm.images
    assert np.array_equal(adj[np.ix_(pi, pi)], adj)
    return perm


def close_up(adj, m22_gens, target, label, rng):
    """Adjoin backtracked graph automorphisms until the order is `target`."""
    n = adj.shape[0]
    gens = list(m22_gens)
    for attempt in range(40):
        t = graph_automorphism(adj, first_image=n - 1 - attempt, rng=rng)
        if t is None:
            continue
        gens.append(t)
        order = group_order(n, gens)
        print(f"  {label} attempt {attempt}: group order {order}")
        if order == target:
            return gens
    raise AssertionError(f"{label}: automorphisms did not close up")


def main():
    codes, m24 = build_m24()
    m23 = point_stabilizer(24, m24, 23, expect=10200960)
    m22_24 = point_stabilizer(24, m23, 22, expect=443520)
    rng = random.Random(61)

    adj, m22_gens = mclaughlin_graph(codes, m22_24)
    gens = close_up(adj, m22_gens, 1796256000, "McL:2", rng)
    check("McL:2 order", group_order(275, gens), 1796256000)
    write_generators(
        "aut_mcl", 275, gens,
        "Aut(McL) = McL:2 as the automorphism group of the strongly "
        "regular McLaughlin graph (275,112,30,56)",
    )
    mcl = derived_subgroup(275, gens, 898128000)
    write_generators(
        "mcl", 275, mcl,
        "McL: derived subgroup of the McLaughlin graph automorphism group",
    )

    adj, m22_gens = higman_sims_graph(codes, m22_24)
    gens = close_up(adj, m22_gens, 88704000, "HS:2", rng)
    hs = derived_subgroup(100, gens, 44352000)
    write_generators(
        "hs", 100, hs,
        "HS: derived subgroup of the automorphism group of the strongly "
        "regular Higman-Sims graph (100,22,0,6)",
    )
    print("mclaughlin and higman-sims generator files written")


if __name__ == "__main__":
    sys.setrecursionlimit(4000)
    main()
