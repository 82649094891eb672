"""Small dense matrices over GF(p).

Everything here serves one question about extensions: given an order-m
element acting on an elementary abelian p-group V as a matrix T, which
orders occur among the coset elements (v, t) of the semidirect product
V : <t>?  The power sum f(T) = I + T + ... + T^(m-1) decides it, because
(v, t)^m = (f(T) v, 1); the brute-force enumerator below is the
independent check of that equivalence used by the tests.

Matrices are plain numpy int64 arrays with entries reduced mod p.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from .errors import (
    CapExceededError,
    ParseError,
    PreconditionError,
    SingularError,
    ValidationError,
)

BRUTE_FORCE_CAP = 1 << 20  # largest p**dim the coset enumerator will touch
ORDER_CAP = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _as_matrix(mat, p: int) -> np.ndarray:
    if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
        raise ValidationError(f"modulus must be a prime, got {p!r}")
    arr = np.asarray(mat)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise ValidationError("matrix entries must be integers")
    return arr.astype(np.int64) % p


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def mat_pow(mat, k: int, p: int) -> np.ndarray:
    """T**k mod p by repeated squaring; k must be nonnegative."""
    if k < 0:
        raise ValidationError("negative matrix powers are not supported")
    arr = _as_matrix(mat, p)
    out = identity(arr.shape[0])
    base = arr
    while k:
        if k & 1:
            out = mat_mul(out, base, p)
        base = mat_mul(base, base, p)
        k >>= 1
    return out


def power_sum(mat, m: int, p: int) -> np.ndarray:
    """f(T) = I + T + ... + T**(m-1) over GF(p)."""
    if m < 1:
        raise ValidationError(f"power sum needs m >= 1, got {m}")
    arr = _as_matrix(mat, p)
    out = identity(arr.shape[0])
    term = identity(arr.shape[0])
    for _ in range(m - 1):
        term = mat_mul(term, arr, p)
        out = (out + term) % p
    return out


def _rank(mat: np.ndarray, p: int) -> int:
    a = mat.copy()
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r, col]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        for r in range(rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def fixed_space_dim(mat, p: int) -> int:
    """Dimension of the fixed space ker(T - I)."""
    arr = _as_matrix(mat, p)
    dim = arr.shape[0]
    return dim - _rank((arr - identity(dim)) % p, p)


def matrix_order(mat, p: int, cap: int = ORDER_CAP) -> int:
    """Multiplicative order of an invertible matrix over GF(p)."""
    arr = _as_matrix(mat, p)
    dim = arr.shape[0]
    if _rank(arr, p) != dim:
        raise SingularError(f"matrix is singular over GF({p})")
    idn = identity(dim)
    power = arr
    k = 1
    while not np.array_equal(power, idn):
        power = mat_mul(power, arr, p)
        k += 1
        if k > cap:
            raise CapExceededError(
                f"matrix order exceeds {cap}", cap=cap, needed=k
            )
    return k


def _check_acts_with_period(arr: np.ndarray, m: int, p: int) -> None:
    if m < 1:
        raise ValidationError(f"coset length must be >= 1, got {m}")
    if not np.array_equal(mat_pow(arr, m, p), identity(arr.shape[0])):
        raise PreconditionError(
            f"T**{m} != I over GF({p}); the semidirect product V:C_{m} "
            "is not defined for this action"
        )


def coset_uniform_order(mat, m: int, p: int) -> bool:
    """True iff every element of the coset Vt has order exactly m.

    t is the order-m generator acting as T; requires T**m = I.  The test
    is f(T) = 0, since (v, t)^m = (f(T) v, 1).
    """
    arr = _as_matrix(mat, p)
    _check_acts_with_period(arr, m, p)
    return not power_sum(arr, m, p).any()


def coset_orders_bruteforce(mat, m: int, p: int, cap: int = BRUTE_FORCE_CAP) -> list[int]:
    """Orders of all p**dim coset elements (v, t), by direct simulation.

    Oracle counterpart of coset_uniform_order: walks the actual group law
    (w, t^a)(v, t) = (w + T^a v, t^(a+1)) until the identity, never
    consulting the power-sum criterion.  Sorted list, one entry per v.
    """
    arr = _as_matrix(mat, p)
    _check_acts_with_period(arr, m, p)
    dim = arr.shape[0]
    count = p ** dim
    if count > cap:
        raise CapExceededError(
            f"coset has {count} elements, cap is {cap}", cap=cap, needed=count
        )

    powers = [identity(dim)]
    for _ in range(m - 1):
        powers.append(mat_mul(powers[-1], arr, p))

    grids = np.meshgrid(*([np.arange(p)] * dim), indexing="ij")
    vs = (
        np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
        if dim
        else np.zeros((1, 0), dtype=np.int64)
    )
    orders = np.zeros(count, dtype=np.int64)
    w = vs.copy()
    a = 1 % m
    k = 1
    while True:
        at_identity = (a == 0) & ~w.any(axis=1)
        orders = np.where((orders == 0) & at_identity, k, orders)
        if orders.all():
            break
        if k > m * count:
            raise AssertionError("coset walk failed to close; group law bug")
        w = (w + vs @ powers[a].T) % p
        a = (a + 1) % m
        k += 1
    return sorted(int(x) for x in orders)


def parse_matrix(text: str) -> tuple[int, np.ndarray]:
    """Read one matrix from the "gfp <p> <dim>" text format.

    Header line, then dim whitespace-separated rows; '#' starts a comment.
    """
    rows: list[list[int]] = []
    p = dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if p is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "gfp":
                raise ParseError(f"expected 'gfp <p> <dim>' header, got {line!r}", lineno)
            try:
                p, dim = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"bad header numbers in {line!r}", lineno) from None
            if not _is_prime(p):
                raise ParseError(f"header modulus {p} is not prime", lineno)
            if dim < 0:
                raise ParseError(f"header dimension {dim} is negative", lineno)
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer matrix entry in {line!r}", lineno) from None
        if len(row) != dim:
            raise ParseError(f"row has {len(row)} entries, expected {dim}", lineno)
        if any(not 0 <= x < p for x in row):
            raise ParseError(f"entry out of range [0, {p}) in {line!r}", lineno)
        rows.append(row)
    if p is None:
        raise ParseError("missing 'gfp <p> <dim>' header", 1)
    if len(rows) != dim:
        raise ParseError(f"expected {dim} rows, found {len(rows)}", 1)
    mat = np.array(rows, dtype=np.int64).reshape(dim, dim)
    return p, mat


def format_matrix(p: int, mat, header: str = "") -> str:
    arr = _as_matrix(mat, p)
    lines = [f"# {line}" for line in header.splitlines() if line]
    lines.append(f"gfp {p} {arr.shape[0]}")
    for row in arr:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def load_matrix_file(path: str | os.PathLike) -> tuple[int, np.ndarray]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix(fh.read())
