"""Deterministic stabilizer chains and capped spectrum enumeration.

The chain construction is the classical deterministic Schreier-Sims
procedure: every Schreier generator at every level is sifted (defining tree
edges skipped), and construction only terminates once all residues vanish,
so a finished chain is self-verifying.  No randomization and no known-order
shortcuts are used here.

Element enumeration streams the transversal factorization in blocks: the
bottom chain levels are expanded once into a matrix, after which each block
of group elements costs a single fancy index, and element orders are found
for a whole block at a time by repeated in-block powering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapExceededError, ValidationError
from .perm import Permutation
from .spectra import maximal_elements

DEFAULT_CAP = 2 ** 21

_BLOCK_TARGET = 1 << 15


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # apply a, then b
    return b[a]


def _inverse(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(a.size, dtype=a.dtype)
    return inv


class _Level:
    __slots__ = ("base", "gens", "transversal", "orbit_order", "tree_edge")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[np.ndarray] = []
        self.transversal: dict[int, np.ndarray] = {}
        self.orbit_order: list[int] = []
        self.tree_edge: dict[int, tuple[int, int]] = {}

    def rebuild_orbit(self, degree: int) -> None:
        idn = np.arange(degree, dtype=np.int32)
        self.transversal = {self.base: idn}
        self.orbit_order = [self.base]
        self.tree_edge = {}
        head = 0
        while head < len(self.orbit_order):
            p = self.orbit_order[head]
            head += 1
            u = self.transversal[p]
            for gi, g in enumerate(self.gens):
                q = int(g[p])
                if q not in self.transversal:
                    self.transversal[q] = _compose(u, g)
                    self.orbit_order.append(q)
                    self.tree_edge[q] = (p, gi)


class StabilizerChain:
    """Verified base and strong generating set for a permutation group."""

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        if degree < 1:
            raise ValidationError("degree must be positive")
        for g in generators:
            if g.degree != degree:
                raise ValidationError("generator degree mismatch")
        self.degree = degree
        self._levels: list[_Level] = []
        for g in generators:
            if not g.is_identity():
                arr = g.images.astype(np.int32)
                self._ensure_level(0, arr)
                self._levels[0].gens.append(arr)
        self._close()

    # -- construction ---------------------------------------------------

    def _ensure_level(self, index: int, mover: np.ndarray) -> None:
        """Create level `index` (based at mover's first moved point) if absent."""
        if index < len(self._levels):
            return
        moved = np.nonzero(mover != np.arange(self.degree, dtype=np.int32))[0]
        self._levels.append(_Level(int(moved[0])))

    def _strip(self, arr: np.ndarray, start: int) -> tuple[np.ndarray | None, int]:
        """Sift from the given level; (residue, sticking level) or (None, -1)."""
        idn = np.arange(self.degree, dtype=np.int32)
        for j in range(start, len(self._levels)):
            lvl = self._levels[j]
            q = int(arr[lvl.base])
            if q not in lvl.transversal:
                return arr, j
            arr = _compose(arr, _inverse(lvl.transversal[q]))
            if (arr == idn).all():
                return None, -1
        if (arr == idn).all():
            return None, -1
        return arr, len(self._levels)

    def _close(self) -> None:
        """Sift all Schreier generators until every residue vanishes."""
        for lvl in self._levels:
            lvl.rebuild_orbit(self.degree)
        changed = bool(self._levels)
        while changed:
            changed = False
            for i, lvl in enumerate(self._levels):
                for p in lvl.orbit_order:
                    u = lvl.transversal[p]
                    for gi, g in enumerate(lvl.gens):
                        q = int(g[p])
                        if lvl.tree_edge.get(q) == (p, gi):
                            continue
                        s = _compose(_compose(u, g), _inverse(lvl.transversal[q]))
                        residue, drop = self._strip(s, i + 1)
                        if residue is None:
                            continue
                        self._ensure_level(drop, residue)
                        drop = min(drop, len(self._levels) - 1)
                        for j in range(i + 1, drop + 1):
                            self._levels[j].gens.append(residue)
                        for j in range(i + 1, len(self._levels)):
                            self._levels[j].rebuild_orbit(self.degree)
                        changed = True
                if changed:
                    break

    # -- queries ---------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.base for lvl in self._levels)

    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.orbit_order)
        return n

    def sift(self, perm: Permutation) -> Permutation | None:
        """Residue of sifting, or None when the element is in the group."""
        if perm.degree != self.degree:
            raise ValidationError("degree mismatch")
        residue, _ = self._strip(perm.images.astype(np.int32), 0)
        return None if residue is None else Permutation(residue, validate=False)

    def __contains__(self, perm: Permutation) -> bool:
        return self.sift(perm) is None

    # -- enumeration -----------------------------------------------------

    def _low_block(self) -> tuple[np.ndarray, int]:
        """Expand bottom chain levels into a matrix of partial products.

        Row set is all products u_{j-1} * ... * u_0 (deeper levels applied
        first) for levels 0..j-1; returns (matrix, j).
        """
        block = np.arange(self.degree, dtype=np.int32)[None, :]
        for j, lvl in enumerate(self._levels):
            size = len(lvl.orbit_order)
            if block.shape[0] * size > _BLOCK_TARGET and block.shape[0] > 1:
                return block, j
            trans = np.stack([lvl.transversal[p] for p in lvl.orbit_order])
            # extend by one level: apply the new (deeper) rep first
            block = block[:, trans].reshape(block.shape[0] * size, self.degree)
        return block, len(self._levels)

    def _iter_high(self, start: int):
        """Products of transversal reps of levels start and above, deepest first."""
        idn = np.arange(self.degree, dtype=np.int32)
        levels = self._levels[start:]

        def rec(i: int, acc: np.ndarray):
            if i < 0:
                yield acc
                return
            for p in levels[i].orbit_order:
                yield from rec(i - 1, _compose(acc, levels[i].transversal[p]))

        if not levels:
            yield idn
        else:
            yield from rec(len(levels) - 1, idn)

    def element_orders(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """The set of element orders of the whole group, sorted ascending.

        Enumerates every group element; raises CapExceededError carrying the
        true group order when that order exceeds the cap.
        """
        n = self.order()
        if n > cap:
            raise CapExceededError(
                f"group order {n} exceeds enumeration cap {cap}", cap=cap, needed=n
            )
        low, start = self._low_block()
        orders: set[int] = set()
        for high in self._iter_high(start):
            orders.update(np.unique(block_orders(low[:, high])).tolist())
        return tuple(sorted(orders))


def block_orders(block: np.ndarray) -> np.ndarray:
    """Element order of each row of a permutation block, by in-block powering."""
    m, n = block.shape
    idn = np.arange(n, dtype=block.dtype)
    orders = np.ones(m, dtype=np.int64)
    pending = np.nonzero(~(block == idn).all(axis=1))[0]
    base = block[pending]
    power = base
    k = 1
    while pending.size:
        k += 1
        if k > 1 << 20:
            raise RuntimeError("element order runaway; corrupted permutation data")
        power = np.take_along_axis(power, base, axis=1)
        done = (power == idn).all(axis=1)
        if done.any():
            orders[pending[done]] = k
            keep = ~done
            pending, power, base = pending[keep], power[keep], base[keep]
    return orders


@dataclass(frozen=True)
class SpectrumResult:
    orders: tuple[int, ...]
    mu: tuple[int, ...]
    group_order: int | None
    method: str


class PermutationGroup:
    """Generator-defined permutation group with a lazily built chain.

    Random sampling needs only the generators, so spectra of groups far
    beyond the enumeration cap can be explored without paying for chain
    construction.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        if degree < 1:
            raise ValidationError("degree must be positive")
        for g in generators:
            if g.degree != degree:
                raise ValidationError("generator degree mismatch")
        self.degree = degree
        self.generators = list(generators)
        self._chain: StabilizerChain | None = None

    @classmethod
    def from_file(cls, path) -> "PermutationGroup":
        from .perm import load_generator_file

        degree, gens = load_generator_file(path)
        return cls(degree, gens)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self.chain

    def spectrum_exhaustive(self, cap: int = DEFAULT_CAP) -> SpectrumResult:
        orders = self.chain.element_orders(cap=cap)
        return SpectrumResult(
            orders=orders,
            mu=maximal_elements(orders),
            group_order=self.chain.order(),
            method="exhaustive",
        )

    def spectrum_sample(self, samples: int, seed: int) -> SpectrumResult:
        from .sampling import sample_orders

        orders = tuple(sorted(set(sample_orders(self.degree, self.generators, samples, seed))))
        return SpectrumResult(
            orders=orders,
            mu=maximal_elements(orders),
            group_order=None,
            method="sample",
        )
