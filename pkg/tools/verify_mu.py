"""One-time verification of the catalog mu literals against the data files.

Three oracles, strongest available per group:
- exhaustive: BSGS enumeration of every element order (groups under the
  2^21 cap with a shipped generator file, plus the three small aut
  targets);
- partitions: exact element orders of A_n as lcms of partitions with
  n - #parts even (no group computation at all);
- sample: product-replacement sampling, 3 seeds x 10^5 draws; checks that
  every sampled order divides a mu literal and every literal is sampled.

Run from tools/: python3 verify_mu.py [name ...]
"""

from __future__ import annotations

import sys
import time
from math import lcm
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gkspectra.bsgs import PermutationGroup
from gkspectra.sampling import sample_orders
from gkspectra.spectra import divisor_closure, maximal_elements

DATA = Path(__file__).resolve().parent.parent / "src" / "gkspectra" / "data" / "generators"

# name -> (generator file, expected mu, oracle)
TABLE = {
    "A5": ("a5", {2, 3, 5}, "exhaustive"),
    "L2(7)": ("l2_7", {3, 4, 7}, "exhaustive"),
    "A6": ("a6", {3, 4, 5}, "exhaustive"),
    "L2(8)": ("l2_8", {2, 7, 9}, "exhaustive"),
    "L2(11)": ("l2_11", {5, 6, 11}, "exhaustive"),
    "A7": ("a7", {4, 5, 6, 7}, "exhaustive"),
    "U3(3)": ("u3_3", {7, 8, 12}, "exhaustive"),
    "M11": ("m11", {5, 6, 8, 11}, "exhaustive"),
    "A8": ("a8", {4, 6, 7, 15}, "exhaustive"),
    "L3(4)": ("l3_4", {3, 4, 5, 7}, "exhaustive"),
    "U4(2)": ("u4_2", {5, 9, 12}, "exhaustive"),
    "L2(49)": ("l2_49", {7, 24, 25}, "exhaustive"),
    "M12": ("m12", {6, 8, 10, 11}, "exhaustive"),
    "U3(5)": ("u3_5", {6, 7, 8, 10}, "exhaustive"),
    "A9": ("a9", {7, 9, 10, 12, 15}, "exhaustive"),
    "M22": ("m22", {5, 6, 7, 8, 11}, "exhaustive"),
    "J2": ("j2", {7, 8, 10, 12, 15}, "exhaustive"),
    "S6(2)": ("s6_2", {7, 8, 9, 10, 12, 15}, "exhaustive"),
    "A10": ("a10", {8, 9, 10, 12, 15, 21}, "exhaustive"),
    "U4(3)": ("u4_3", {5, 7, 8, 9, 12}, "sample"),
    "U5(2)": ("u5_2", {8, 11, 12, 15, 18}, "sample"),
    "A11": ("a11", {8, 9, 11, 12, 14, 15, 20, 21}, "sample"),
    "HS": ("hs", {7, 8, 11, 12, 15, 20}, "sample"),
    "S4(7)": ("s4_7", {24, 25, 42, 56}, "sample"),
    "O8+(2)": ("o8p_2", {7, 8, 9, 10, 12, 15}, "sample"),
    "A12": ("a12", {8, 9, 11, 12, 14, 20, 21, 30, 35}, "sample"),
    "McL": ("mcl", {8, 9, 11, 12, 14, 30}, "sample"),
    "U6(2)": ("u6_2", {7, 8, 10, 11, 12, 15, 18}, "sample"),
    "PGL3(4)": ("pgl3_4", {4, 6, 15, 21}, "exhaustive"),
    "PGU3(5)": ("pgu3_5", {21, 24, 30}, "exhaustive"),
    "Aut(M12)": ("aut_m12", {8, 10, 11, 12}, "exhaustive"),
    "Aut(M22)": ("aut_m22", {8, 10, 11, 12, 14}, "exhaustive"),
    "Aut(J2)": ("aut_j2", {10, 14, 15, 24}, "exhaustive"),
    "Aut(McL)": ("aut_mcl", {9, 14, 20, 22, 24, 30}, "sample"),
    "Aut(Suz)": ("aut_suz", {13, 16, 18, 21, 22, 24, 28, 30, 40}, "sample"),
    "Suz": ("suz", {11, 13, 14, 15, 18, 20, 21, 24}, "sample"),
}

ALTERNATING = {"A5": 5, "A6": 6, "A7": 7, "A8": 8, "A9": 9, "A10": 10,
               "A11": 11, "A12": 12}

SAMPLE_BUDGET = 100000
SEEDS = (1, 2, 3)


def partitions(n, cap=None):
    if n == 0:
        yield ()
        return
    cap = n if cap is None else min(cap, n)
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def alternating_mu(n):
    orders = set()
    for p in partitions(n):
        if (n - len(p)) % 2 == 0:
            orders.add(lcm(*p) if p else 1)
    return set(maximal_elements(orders))


def check(name, file, mu, oracle):
    t0 = time.time()
    if name in ALTERNATING:
        part = alternating_mu(ALTERNATING[name])
        tag = "partitions agree" if part == mu else f"PARTITION MISMATCH {sorted(part)}"
        print(f"  {name}: {tag}", flush=True)
        if part != mu:
            return False
    group = PermutationGroup.from_file(DATA / f"{file}.txt")
    if oracle == "exhaustive":
        got = set(group.spectrum_exhaustive(cap=1 << 22).mu)
        ok = got == mu
        print(f"  {name}: exhaustive mu {sorted(got)} "
              f"{'ok' if ok else 'MISMATCH want ' + str(sorted(mu))} "
              f"[{time.time() - t0:.1f}s]", flush=True)
        return ok
    want = divisor_closure(mu)
    seen = set()
    for seed in SEEDS:
        seen.update(sample_orders(group.degree, group.generators,
                                  SAMPLE_BUDGET, seed=seed))
    extra = {n for n in seen if n not in want}
    missed = {m for m in mu if m not in seen}
    ok = not extra and not missed
    print(f"  {name}: sampled {len(seen)} distinct orders, "
          f"extra={sorted(extra)} missed={sorted(missed)} "
          f"{'ok' if ok else 'MISMATCH'} [{time.time() - t0:.1f}s]", flush=True)
    return ok


def main():
    only = set(sys.argv[1:])
    bad = []
    for name, (file, mu, oracle) in TABLE.items():
        if only and name not in only:
            continue
        if not check(name, file, mu, oracle):
            bad.append(name)
    if bad:
        print(f"FAILED: {bad}", flush=True)
        sys.exit(1)
    print("all mu literals verified", flush=True)


if __name__ == "__main__":
    main()
