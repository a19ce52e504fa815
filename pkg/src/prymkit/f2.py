"""Symplectic spaces and quadratic forms over F_2, descent along isotropic
vectors, and the T/Q/C labelings of the Fano plane.

Vectors are ints whose bit ``i`` is the coordinate on basis vector ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .gf2 import coordinates, kernel_basis, parity, rank, row_reduce, span


@dataclass(frozen=True)
class SymplecticF2:
    """``F_2^dim`` with a nondegenerate alternating form, Gram rows packed as ints."""

    gram: tuple[int, ...]

    def __post_init__(self):
        n = len(self.gram)
        if n % 2:
            raise ValueError("a symplectic space has even dimension")
        for i, row in enumerate(self.gram):
            if row >> n:
                raise ValueError(f"Gram row {i} is wider than the space")
            if (row >> i) & 1:
                raise ValueError("the form must be alternating (zero diagonal)")
            for j in range(n):
                if ((row >> j) & 1) != ((self.gram[j] >> i) & 1):
                    raise ValueError("the Gram matrix must be symmetric")
        if rank(self.gram) != n:
            raise ValueError("the form is degenerate")

    @classmethod
    def standard(cls, g: int) -> "SymplecticF2":
        """Basis ``e_1..e_g, f_1..f_g`` with ``<e_i, f_i> = 1``."""
        rows = [1 << (i + g) for i in range(g)] + [1 << i for i in range(g)]
        return cls(tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def genus(self) -> int:
        return self.dim // 2

    @property
    def size(self) -> int:
        return 1 << self.dim

    def vectors(self) -> range:
        return range(self.size)

    def dual(self, y: int) -> int:
        """The functional ``<., y>`` as a vector: XOR of the Gram rows picked by ``y``."""
        out = 0
        i = 0
        while y:
            if y & 1:
                out ^= self.gram[i]
            y >>= 1
            i += 1
        return out

    def pair(self, x: int, y: int) -> int:
        if (x | y) >> self.dim:
            raise ValueError("vector outside the space")
        return parity(x & self.dual(y))

    def perp(self, vectors: Sequence[int]) -> list[int]:
        """Basis of the orthogonal complement."""
        return kernel_basis([self.dual(v) for v in vectors], self.dim)

    def is_isotropic(self, vectors: Sequence[int]) -> bool:
        return all(self.pair(a, b) == 0 for a, b in itertools.combinations(vectors, 2))

    def symplectic_basis(self) -> list[tuple[int, int]]:
        """Pairs ``(e_i, f_i)`` with ``<e_i, f_j> = delta_ij`` and all other pairings zero."""
        remaining = [1 << i for i in range(self.dim)]
        out = []
        while remaining:
            e = remaining.pop(0)
            k = next(k for k, v in enumerate(remaining) if self.pair(e, v))
            f = remaining.pop(k)
            # project the rest away from span(e, f)
            remaining = [v ^ (e if self.pair(v, f) else 0) ^ (f if self.pair(v, e) else 0) for v in remaining]
            out.append((e, f))
        return out


@dataclass(frozen=True)
class QuadraticFormF2:
    """``q(x) = sum x_i q(b_i) + sum_{i<j} x_i x_j <b_i, b_j>``, so ``q`` polarizes the pairing."""

    space: SymplecticF2
    basis_values: int

    def __post_init__(self):
        if self.basis_values >> self.space.dim:
            raise ValueError("basis values wider than the space")

    def __call__(self, x: int) -> int:
        return q_eval(self, x)

    @cached_property
    def _upper(self) -> tuple[int, ...]:
        return tuple(row & ~((2 << i) - 1) for i, row in enumerate(self.space.gram))

    @cached_property
    def zeros(self) -> int:
        return sum(1 for x in self.space.vectors() if not q_eval(self, x))


def q_eval(q: QuadraticFormF2, x: int) -> int:
    if x >> q.space.dim:
        raise ValueError("vector outside the space")
    v = parity(x & q.basis_values)
    upper = q._upper
    y, i = x, 0
    while y:
        if y & 1:
            v ^= parity(upper[i] & x)
        y >>= 1
        i += 1
    return v


def arf_by_count(q: QuadraticFormF2) -> int:
    g = q.space.genus
    even = (1 << (2 * g - 1)) + (1 << (g - 1)) if g else 1
    return 0 if q.zeros == even else 1


def arf_by_basis(q: QuadraticFormF2) -> int:
    return sum(q_eval(q, e) & q_eval(q, f) for e, f in q.space.symplectic_basis()) & 1


def arf(q: QuadraticFormF2) -> int:
    """0 for even forms (more zeros), 1 for odd ones."""
    return arf_by_count(q) if q.space.dim <= 12 else arf_by_basis(q)


def translate_form(q: QuadraticFormF2, v: int) -> QuadraticFormF2:
    """``x -> q(x) + <x, v>``."""
    return QuadraticFormF2(q.space, q.basis_values ^ q.space.dual(v))


def all_forms(space: SymplecticF2) -> Iterator[QuadraticFormF2]:
    for values in range(space.size):
        yield QuadraticFormF2(space, values)


def form_counts(g: int) -> tuple[int, int]:
    """(even, odd) counts of the forms polarizing the standard space of genus ``g``."""
    out = [0, 0]
    for q in all_forms(SymplecticF2.standard(g)):
        out[arf(q)] += 1
    return out[0], out[1]


# ----------------------------------------------------------------------------
# descent
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Descent:
    """``mu^perp / (mu)`` with a fixed section ``lift`` of the projection."""

    space: SymplecticF2
    mu: int
    quotient: SymplecticF2
    section: tuple[int, ...]
    """Vectors of ``mu^perp`` lifting the quotient basis."""

    def contains(self, x: int) -> bool:
        return self.space.pair(x, self.mu) == 0

    def project(self, x: int) -> int:
        if not self.contains(x):
            raise ValueError("vector not orthogonal to mu")
        c = coordinates(list(self.section) + [self.mu], x)
        return c & ((1 << len(self.section)) - 1)

    def lift(self, y: int) -> int:
        out = 0
        for k, w in enumerate(self.section):
            if (y >> k) & 1:
                out ^= w
        return out


def descend_space(space: SymplecticF2, mu: int) -> Descent:
    if mu == 0:
        raise ValueError("cannot descend along the zero vector")
    perp = space.perp([mu])
    section: list[int] = []
    for v in perp:
        if rank(section + [mu, v]) == len(section) + 2:
            section.append(v)
    gram = tuple(
        sum(space.pair(a, b) << j for j, b in enumerate(section)) for a in section
    )
    return Descent(space, mu, SymplecticF2(gram), tuple(section))


def descend_form(q: QuadraticFormF2, mu: int, descent: Descent | None = None) -> QuadraticFormF2:
    """The form induced on ``mu^perp / (mu)``; needs ``q(mu) = 0``."""
    if q_eval(q, mu):
        raise ValueError("q(mu) = 1: the form does not descend")
    d = descent or descend_space(q.space, mu)
    values = sum(q_eval(q, w) << k for k, w in enumerate(d.section))
    return QuadraticFormF2(d.quotient, values)


# ----------------------------------------------------------------------------
# isotropic subspaces
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class IsotropicSubspace:
    space: SymplecticF2
    basis: tuple[int, ...]

    def __post_init__(self):
        if rank(self.basis) != len(self.basis):
            raise ValueError("basis vectors are dependent")
        if not self.space.is_isotropic(self.basis):
            raise ValueError("subspace is not isotropic")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def elements(self) -> set[int]:
        return span(self.basis)


def isotropic_count(g: int, r: int) -> int:
    """Number of isotropic subspaces of rank ``r`` in a symplectic space of genus ``g``."""
    if r > g:
        return 0
    num = den = 1
    for i in range(r):
        num *= (1 << (2 * (g - i))) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def enumerate_isotropic(space: SymplecticF2, r: int) -> list[IsotropicSubspace]:
    """Every isotropic subspace of rank ``r``, each given by its reduced echelon basis."""
    if space.dim > 10:
        raise ValueError("enumeration is limited to dimension 10")
    if r < 0:
        raise ValueError("negative rank")
    level: set[tuple[int, ...]] = {()}
    for _ in range(r):
        nxt: set[tuple[int, ...]] = set()
        for basis in level:
            members = span(basis)
            for v in span(space.perp(list(basis))) if basis else range(1, space.size):
                if v not in members:
                    nxt.add(tuple(row_reduce(list(basis) + [v])))
        level = nxt
    return [IsotropicSubspace(space, b) for b in sorted(level)]


# ----------------------------------------------------------------------------
# Fano plane diagrams
# ----------------------------------------------------------------------------

FANO_POINTS: tuple[int, ...] = tuple(range(1, 8))
FANO_LINES: tuple[frozenset[int], ...] = tuple(sorted(
    {frozenset((a, b, a ^ b)) for a in FANO_POINTS for b in FANO_POINTS if a != b},
    key=sorted,
))


@dataclass(frozen=True)
class FanoDiagram:
    """Vertex labels (True for T, False for Q) on the points of ``P(F_2^3)`` and
    edge labels (True for C) on its lines."""

    vertex_t: tuple[bool, ...]
    edge_c: tuple[bool, ...]

    @property
    def t_points(self) -> list[int]:
        return [p for p, t in zip(FANO_POINTS, self.vertex_t) if t]

    @property
    def q_points(self) -> list[int]:
        return [p for p, t in zip(FANO_POINTS, self.vertex_t) if not t]

    @property
    def c_lines(self) -> list[frozenset[int]]:
        return [ln for ln, c in zip(FANO_LINES, self.edge_c) if c]

    def census(self) -> str:
        return f"{sum(self.vertex_t)}T/{7 - sum(self.vertex_t)}Q/{sum(self.edge_c)}C"

    def __str__(self) -> str:
        verts = " ".join(f"{p:03b}:{'T' if t else 'Q'}" for p, t in zip(FANO_POINTS, self.vertex_t))
        lines = " ".join("{" + ",".join(f"{p:03b}" for p in sorted(ln)) + "}" for ln in self.c_lines)
        return f"{verts} | C-edges {lines or '-'}"


def _satisfies(d: FanoDiagram) -> bool:
    t = dict(zip(FANO_POINTS, d.vertex_t))
    for ln, c in zip(FANO_LINES, d.edge_c):
        # edges through a T vertex are C edges
        if any(t[p] for p in ln) and not c:
            return False
        # a C edge carries exactly two T vertices and one Q vertex
        if c and sum(t[p] for p in ln) != 2:
            return False
    return True


def fano_solve(require_t: bool = True) -> list[FanoDiagram]:
    """All labelings satisfying both rules, by exhaustive search over 2^7 x 2^7."""
    out = []
    for vmask in range(1 << 7):
        vt = tuple(bool(vmask >> k & 1) for k in range(7))
        if require_t and not any(vt):
            continue
        for emask in range(1 << 7):
            d = FanoDiagram(vt, tuple(bool(emask >> k & 1) for k in range(7)))
            if _satisfies(d):
                out.append(d)
    return out


def gl3_f2() -> list[tuple[int, int, int]]:
    """Invertible 3x3 matrices over F_2 as images of the three basis vectors."""
    return [cols for cols in itertools.product(range(1, 8), repeat=3) if rank(list(cols)) == 3]


def _apply_matrix(cols: tuple[int, int, int], p: int) -> int:
    out = 0
    for k in range(3):
        if (p >> k) & 1:
            out ^= cols[k]
    return out


def act_on_diagram(cols: tuple[int, int, int], d: FanoDiagram) -> FanoDiagram:
    t = dict(zip(FANO_POINTS, d.vertex_t))
    c = dict(zip(FANO_LINES, d.edge_c))
    inv_t = {_apply_matrix(cols, p): t[p] for p in FANO_POINTS}
    inv_c = {frozenset(_apply_matrix(cols, p) for p in ln): c[ln] for ln in FANO_LINES}
    return FanoDiagram(tuple(inv_t[p] for p in FANO_POINTS), tuple(inv_c[ln] for ln in FANO_LINES))


def fano_orbits(diagrams: Sequence[FanoDiagram]) -> list[list[FanoDiagram]]:
    """Partition of ``diagrams`` into orbits of the 168 collineations."""
    group = gl3_f2()
    left = list(diagrams)
    orbits = []
    while left:
        d = left[0]
        orbit = {act_on_diagram(m, d) for m in group}
        orbits.append([x for x in left if x in orbit])
        left = [x for x in left if x not in orbit]
    return orbits


def is_collinear(points: Sequence[int]) -> bool:
    return len(points) == 3 and frozenset(points) in FANO_LINES


__all__ = [
    "SymplecticF2", "QuadraticFormF2", "q_eval", "arf", "arf_by_count", "arf_by_basis",
    "translate_form", "all_forms", "form_counts", "Descent", "descend_space", "descend_form",
    "IsotropicSubspace", "isotropic_count", "enumerate_isotropic", "FANO_POINTS", "FANO_LINES",
    "FanoDiagram", "fano_solve", "gl3_f2", "act_on_diagram", "fano_orbits", "is_collinear",
]
