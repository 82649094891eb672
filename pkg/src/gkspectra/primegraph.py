"""Prime graphs (Gruenberg-Kegel graphs) of element-order spectra.

Vertices are the primes dividing some element order; two primes p, q are
adjacent exactly when pq itself is an element order.  Connected components
follow the convention that the component containing 2 is listed first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .spectra import divisor_closure, maximal_elements, primes_of


@dataclass(frozen=True)
class PrimeGraph:
    """Immutable prime graph of a spectrum."""

    mu: tuple[int, ...]
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    @classmethod
    def from_orders(cls, values: Iterable[int]) -> "PrimeGraph":
        mu = maximal_elements(values)
        closure = divisor_closure(mu)
        verts = primes_of(mu)
        edges = frozenset(
            frozenset((p, q))
            for p, q in combinations(verts, 2)
            if p * q in closure
        )
        return cls(mu=mu, vertices=verts, edges=edges)

    def adjacent(self, p: int, q: int) -> bool:
        return frozenset((p, q)) in self.edges

    def neighbors(self, p: int) -> tuple[int, ...]:
        return tuple(sorted(q for q in self.vertices if self.adjacent(p, q)))

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components; the one containing 2 first, rest by minimum."""
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in self.vertices:
            if start in seen:
                continue
            stack, comp = [start], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(q for q in self.vertices if self.adjacent(v, q) and q not in comp)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        comps.sort(key=lambda c: (2 not in c, min(c)))
        return tuple(comps)

    def component_count(self) -> int:
        return len(self.components())

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(p for p in self.vertices if not self.neighbors(p))

    def independent_triples(self) -> tuple[tuple[int, int, int], ...]:
        """All pairwise-nonadjacent prime triples, lexicographically sorted.

        A group whose prime graph contains such a triple has no soluble
        normal subgroup meeting all three primes; see the soluble-graph
        independence bound (cf. Lucido & Moghaddamfar, J. Group Theory 7,
        2004).
        """
        out = [
            t
            for t in combinations(self.vertices, 3)
            if not any(self.adjacent(p, q) for p, q in combinations(t, 2))
        ]
        return tuple(out)
