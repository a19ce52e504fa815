"""Linear algebra over GF(2) with vectors packed into Python ints."""

from __future__ import annotations

import random
from typing import Sequence


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int, n: int) -> list[int]:
    return [(x >> i) & 1 for i in range(n)]


def from_bits(bs: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(bs):
        if b & 1:
            out |= 1 << i
    return out


def row_reduce(rows: Sequence[int]) -> list[int]:
    """Reduced echelon basis of the row span, pivots on the highest bit."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis = sorted([min(b, b ^ r) for b in basis] + [r], reverse=True)
    return basis


def rank(rows: Sequence[int]) -> int:
    return len(row_reduce(rows))


def span(vectors: Sequence[int]) -> set[int]:
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


def coordinates(basis: Sequence[int], x: int) -> int | None:
    """Mask ``c`` with ``x == XOR of basis[i] for i in c``, or None if x is outside the span."""
    piv: list[tuple[int, int]] = []  # (reduced vector, combination mask)
    for i, v in enumerate(basis):
        c = 1 << i
        for pv, pc in piv:
            if v ^ pv < v:
                v ^= pv
                c ^= pc
        if v:
            piv.append((v, c))
            piv.sort(reverse=True)
    comb = 0
    for pv, pc in piv:
        if x ^ pv < x:
            x ^= pv
            comb ^= pc
    return comb if x == 0 else None


def solve(rows: Sequence[int], rhs: Sequence[int], nvars: int, rng: random.Random | None = None) -> int | None:
    """A solution of ``rows[k] . x = rhs[k]`` over GF(2), or None.

    Free variables are drawn from ``rng`` when given, otherwise set to zero.
    """
    aug = [(r & ((1 << nvars) - 1)) | ((rhs[k] & 1) << nvars) for k, r in enumerate(rows)]
    pivots: list[tuple[int, int]] = []  # (pivot column, row)
    for r in aug:
        for col, pr in pivots:
            if (r >> col) & 1:
                r ^= pr
        low = r & ((1 << nvars) - 1)
        if low == 0:
            if r:
                return None
            continue
        col = low.bit_length() - 1
        pivots = [(c, pr ^ r if (pr >> col) & 1 else pr) for c, pr in pivots]
        pivots.append((col, r))
    pivot_cols = {c for c, _ in pivots}
    x = 0
    for v in range(nvars):
        if v not in pivot_cols and rng is not None and rng.random() < 0.5:
            x |= 1 << v
    for col, r in pivots:
        val = (r >> nvars) & 1
        val ^= parity(r & x & ~(1 << col) & ((1 << nvars) - 1))
        if val:
            x |= 1 << col
        else:
            x &= ~(1 << col)
    return x


def kernel_basis(rows: Sequence[int], nvars: int) -> list[int]:
    """Basis of ``{x : rows[k] . x = 0 for all k}``."""
    red = row_reduce(rows)
    pivots = {r.bit_length() - 1: r for r in red}
    out = []
    for free in range(nvars):
        if free in pivots:
            continue
        x = 1 << free
        for col, r in pivots.items():
            if (r >> free) & 1:
                x |= 1 << col
        out.append(x)
    return out
