"""Element-order spectra as divisor-closed sets.

A spectrum is stored by its set of divisibility-maximal members (the "mu
set"); the full spectrum is recovered as the set of all divisors of those
members.  All functions accept any iterable of positive integers and do not
require the input to be maximal already.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ParseError, ValidationError


def _check_values(values: Iterable[int]) -> list[int]:
    out = []
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValidationError(f"spectrum members must be positive integers, got {v!r}")
        out.append(v)
    if not out:
        raise ValidationError("a spectrum must contain at least one value")
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_closure(values: Iterable[int]) -> frozenset[int]:
    """The divisor-closed spectrum generated by the given orders."""
    vals = _check_values(values)
    out: set[int] = set()
    for v in set(vals):
        out.update(divisors(v))
    return frozenset(out)


def maximal_elements(values: Iterable[int]) -> tuple[int, ...]:
    """Divisibility-maximal members, sorted ascending.

    Idempotent, and inverse to divisor_closure: recovering the maximal
    members of a closure gives back the canonical mu set.
    """
    vals = sorted(set(_check_values(values)))
    out = [v for v in vals if not any(w % v == 0 for w in vals if w != v)]
    return tuple(out)


def spectrum_contains(values: Iterable[int], n: int) -> bool:
    """Whether n lies in the divisor closure of the given orders."""
    if n < 1:
        raise ValidationError(f"element orders are positive, got {n}")
    return any(v % n == 0 for v in set(_check_values(values)))


def witnesses_not_in(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    """Divisibility-minimal members of closure(a) that are missing from closure(b).

    Empty exactly when closure(a) is contained in closure(b).  Every proper
    divisor of a returned witness lies in closure(b), which makes each
    witness a sharpest possible order-based distinction between a and b.
    """
    b_vals = set(_check_values(b))
    missing = sorted(
        n for n in divisor_closure(a) if not any(v % n == 0 for v in b_vals)
    )
    minimal = [
        n
        for n in missing
        if not any(n % m == 0 for m in missing if m != n and m <= n)
    ]
    return tuple(minimal)


def preferred_witness(witnesses: Iterable[int]) -> int:
    """Deterministic headline witness: smallest prime power, else smallest.

    Prime-power witnesses pin the failure on a single prime and are quoted
    first in reports even when a smaller composite witness exists.
    """
    ws = sorted(set(_check_values(witnesses)))
    for w in ws:
        if prime_power(w) is not None:
            return w
    return ws[0]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValidationError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n == p**k and k >= 1, or None when n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) == 1:
        [(p, k)] = f.items()
        return p, k
    return None


def primes_of(values: Iterable[int]) -> tuple[int, ...]:
    """Primes dividing at least one member, ascending."""
    ps: set[int] = set()
    for v in set(_check_values(values)):
        ps.update(factorize(v))
    return tuple(sorted(ps))


def parse_mu(text: str) -> tuple[int, ...]:
    """Parse a comma-separated order list like "8,10,11,12" to a mu set.

    Input values need not be maximal; the canonical maximal form is
    returned.  Whitespace around entries is tolerated.
    """
    parts = text.split(",")
    values = []
    pos = 0
    for part in parts:
        stripped = part.strip()
        if not stripped or not stripped.isdigit():
            raise ParseError(f"expected a positive integer, got {part!r}", position=pos)
        values.append(int(stripped))
        pos += len(part) + 1
    if not values:
        raise ParseError("empty order list")
    return maximal_elements(values)


def iter_closure(values: Iterable[int]) -> Iterator[int]:
    """Ascending iteration over the divisor closure."""
    return iter(sorted(divisor_closure(values)))
