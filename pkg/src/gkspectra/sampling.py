"""Seeded random element sampling via product replacement.

The walk keeps a fixed number of slots primed with the generators plus an
accumulator; each step multiplies a random slot by another (or its inverse)
and folds the result into the accumulator, which is returned as the sample.
Seeds are mandatory so every run is reproducible; there is no default.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

import numpy as np

from .bsgs import block_orders
from .errors import ValidationError
from .perm import Permutation

SLOTS = 15
BURN_IN = 50


def _raw_samples(
    degree: int,
    generators: Sequence[Permutation],
    count: int,
    seed: int,
) -> Iterator[np.ndarray]:
    if count < 0:
        raise ValidationError("sample count must be nonnegative")
    if seed is None:
        raise ValidationError("a seed is required for sampling")
    gens = [g.images.astype(np.int32) for g in generators if not g.is_identity()]
    idn = np.arange(degree, dtype=np.int32)
    if not gens:
        for _ in range(count):
            yield idn
        return
    rng = random.Random(seed)
    # every generator must occupy a slot, or the walk is confined to the
    # subgroup the seeded ones generate
    nslots = max(SLOTS, len(gens))
    slots = [gens[i % len(gens)].copy() for i in range(nslots)]
    acc = idn.copy()

    def step() -> np.ndarray:
        nonlocal acc
        i = rng.randrange(nslots)
        j = rng.randrange(nslots - 1)
        if j >= i:
            j += 1
        other = slots[j]
        if rng.random() < 0.5:
            inv = np.empty_like(other)
            inv[other] = idn
            other = inv
        slots[i] = other[slots[i]]
        acc = slots[i][acc]
        return acc

    for _ in range(BURN_IN):
        step()
    for _ in range(count):
        yield step()


def sample_elements(
    degree: int,
    generators: Sequence[Permutation],
    count: int,
    seed: int,
) -> Iterator[Permutation]:
    """Stream `count` pseudo-random group elements."""
    for arr in _raw_samples(degree, generators, count, seed):
        yield Permutation(arr.copy(), validate=False)


def sample_orders(
    degree: int,
    generators: Sequence[Permutation],
    count: int,
    seed: int,
    block: int = 512,
) -> list[int]:
    """Element orders of `count` sampled elements, in sampling sequence."""
    out: list[int] = []
    buf: list[np.ndarray] = []
    for arr in _raw_samples(degree, generators, count, seed):
        buf.append(arr.copy())
        if len(buf) == block:
            out.extend(block_orders(np.stack(buf)).tolist())
            buf.clear()
    if buf:
        out.extend(block_orders(np.stack(buf)).tolist())
    return out
