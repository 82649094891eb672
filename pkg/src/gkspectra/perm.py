"""Permutations on {0, ..., n-1} backed by numpy image arrays.

Composition is left to right: (p * q)(x) = q(p(x)).  Points are 0-based in
code; all text I/O (cycle notation, generator files) is 1-based.

Generator file format:
    degree N
    (1,2,3)(4,5)
    (2,6)(3,5)
First data line declares the degree; each following line is one permutation
in disjoint-cycle notation, with "()" for the identity.  Blank lines and
lines starting with "#" are ignored.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, ValidationError


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int] | np.ndarray, validate: bool = True):
        arr = np.asarray(images, dtype=np.int32)
        if validate:
            if arr.ndim != 1 or arr.size == 0:
                raise ValidationError("a permutation needs a nonempty 1-d image list")
            counts = np.bincount(arr, minlength=arr.size) if arr.min() >= 0 else None
            if counts is None or arr.max() >= arr.size or not (counts == 1).all():
                raise ValidationError("images are not a permutation of 0..n-1")
        arr.setflags(write=False)
        self.images = arr

    @property
    def degree(self) -> int:
        return self.images.size

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValidationError("degree must be positive")
        return cls(np.arange(degree, dtype=np.int32), validate=False)

    @classmethod
    def from_cycles(
        cls, degree: int, cycles: Iterable[Sequence[int]], one_based: bool = True
    ) -> "Permutation":
        """Build from disjoint cycles, given 1-based (default) or 0-based."""
        images = np.arange(degree, dtype=np.int32)
        seen: set[int] = set()
        shift = 1 if one_based else 0
        for cycle in cycles:
            pts = [c - shift for c in cycle]
            if any(p < 0 or p >= degree for p in pts):
                raise ValidationError(f"cycle entry out of range for degree {degree}")
            if len(set(pts)) != len(pts) or seen & set(pts):
                raise ValidationError("cycles must be disjoint without repeats")
            seen.update(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images, validate=False)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValidationError("degree mismatch in composition")
        return Permutation(other.images[self.images], validate=False)

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def inverse(self) -> "Permutation":
        inv = np.empty(self.degree, dtype=np.int32)
        inv[self.images] = np.arange(self.degree, dtype=np.int32)
        return Permutation(inv, validate=False)

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree, dtype=np.int32)).all())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Permutation)
            and self.degree == other.degree
            and bool((self.images == other.images).all())
        )

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical disjoint cycles, 1-based, fixed points omitted."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p + 1)
                p = int(self.images[p])
            out.append(tuple(cyc))
        return tuple(out)

    def order(self) -> int:
        return int(math.lcm(*(len(c) for c in self.cycles()), 1))

    def __repr__(self) -> str:
        return f"Permutation({cycle_string(self)!r}, degree={self.degree})"


def cycle_string(perm: Permutation) -> str:
    cycs = perm.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycs)


def _parse_cycle_line(line: str, lineno: int, degree: int) -> Permutation:
    cycles: list[list[int]] = []
    current: list[int] | None = None
    num: str = ""
    for col, ch in enumerate(line):
        if ch.isspace():
            continue
        if ch == "(":
            if current is not None:
                raise ParseError(f"line {lineno}: nested '('", position=col)
            current = []
        elif ch == ")":
            if current is None:
                raise ParseError(f"line {lineno}: unmatched ')'", position=col)
            if num:
                current.append(int(num))
                num = ""
            elif current:
                raise ParseError(f"line {lineno}: trailing comma in cycle", position=col)
            if len(current) == 1:
                raise ParseError(f"line {lineno}: cycle of length 1", position=col)
            cycles.append(current)
            current = None
        elif ch == ",":
            if current is None or not num:
                raise ParseError(f"line {lineno}: misplaced ','", position=col)
            current.append(int(num))
            num = ""
        elif ch.isdigit():
            if current is None:
                raise ParseError(f"line {lineno}: digit outside cycle", position=col)
            num += ch
        else:
            raise ParseError(f"line {lineno}: unexpected character {ch!r}", position=col)
    if current is not None:
        raise ParseError(f"line {lineno}: unclosed cycle", position=len(line))
    try:
        return Permutation.from_cycles(degree, cycles, one_based=True)
    except ValidationError as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc


def parse_generators(text: str) -> tuple[int, list[Permutation]]:
    """Parse a generator file; returns (degree, generators)."""
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'degree N' header")
            degree = int(parts[1])
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be positive")
            continue
        gens.append(_parse_cycle_line(line, lineno, degree))
    if degree is None:
        raise ParseError("missing 'degree N' header")
    if not gens:
        raise ParseError("no generators in file")
    return degree, gens


def format_generators(degree: int, perms: Iterable[Permutation], header: str = "") -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(f"degree {degree}")
    for p in perms:
        if p.degree != degree:
            raise ValidationError("generator degree mismatch")
        lines.append(cycle_string(p))
    return "\n".join(lines) + "\n"


def load_generator_file(path) -> tuple[int, list[Permutation]]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_generators(fh.read())
