"""Signed permutations: the hyperoctahedral group WC_n and its index-2 subgroup WD_n.

An element is a pair ``(sigma, eps)`` acting on the ``2n`` points ``(i, s)`` by
``(i, s) -> (sigma(i), s ^ eps[i])``. Point ``(i, s)`` has index ``2i + s``.

Composition follows :func:`prymkit.perm.compose`: the right factor acts first,
``(s2, e2)(s1, e1) = (s2 s1, e1 ^ (e2 o s1))``.

Sections are ``n``-bit integers with bit ``i`` the chosen sheet over letter ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .gf2 import popcount
from .perm import Perm, PermTuple, compose, group_elements


@dataclass(frozen=True)
class SignedPerm:
    sigma: Perm
    eps: tuple[int, ...]
    _hash: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        if len(self.eps) != self.sigma.degree:
            raise ValueError("sign vector length must equal the degree")
        if any(e not in (0, 1) for e in self.eps):
            raise ValueError("signs must be 0 or 1")
        object.__setattr__(self, "_hash", hash((self.sigma.images, self.eps)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(Perm.identity(n), (0,) * n)

    @classmethod
    def flips(cls, eps: Sequence[int]) -> "SignedPerm":
        return cls(Perm.identity(len(eps)), tuple(eps))

    @classmethod
    def parse(cls, perm_text: str, signs: str | None, n: int) -> "SignedPerm":
        """From 1-based cycle notation and a bitstring (letter 1 first)."""
        sigma = Perm.parse(perm_text, n)
        if signs is None:
            return cls(sigma, (0,) * n)
        if len(signs) != n or set(signs) - {"0", "1"}:
            raise ValueError(f"sign string must be {n} characters of 0/1: {signs!r}")
        return cls(sigma, tuple(int(c) for c in signs))

    @property
    def degree(self) -> int:
        return self.sigma.degree

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return sp_compose(self, other)

    def inverse(self) -> "SignedPerm":
        inv = self.sigma.inverse()
        return SignedPerm(inv, tuple(self.eps[inv.images[i]] for i in range(self.degree)))

    def is_identity(self) -> bool:
        return self.sigma.is_identity() and not any(self.eps)

    def sign_string(self) -> str:
        return "".join(str(e) for e in self.eps)

    def cycle_sums(self) -> list[int]:
        """Parity of the signs along each cycle of ``sigma`` (cycles in canonical order)."""
        return [sum(self.eps[i] for i in c) & 1 for c in self.sigma.cycles()]

    def __str__(self) -> str:
        return f"{self.sigma} signs {self.sign_string()}"


def sp_compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """Product ``a*b`` with ``b`` acting first."""
    bs = b.sigma.images
    return SignedPerm(compose(a.sigma, b.sigma), tuple(b.eps[i] ^ a.eps[bs[i]] for i in range(len(bs))))


def sp_product(elems: Iterable[SignedPerm], n: int) -> SignedPerm:
    out = SignedPerm.identity(n)
    for e in elems:
        out = sp_compose(out, e)
    return out


def sp_commutator(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    return sp_product((a, b, a.inverse(), b.inverse()), a.degree)


def embed_2n(g: SignedPerm) -> Perm:
    """The action on the ``2n`` points ``2i + s``."""
    n = g.degree
    imgs = [0] * (2 * n)
    for i in range(n):
        j = g.sigma.images[i]
        e = g.eps[i]
        imgs[2 * i] = 2 * j + e
        imgs[2 * i + 1] = 2 * j + (1 - e)
    return Perm._raw(tuple(imgs))


def from_embedded(p: Perm) -> SignedPerm:
    """Inverse of :func:`embed_2n` for permutations commuting with ``i``."""
    if p.degree % 2:
        raise ValueError("odd degree")
    n = p.degree // 2
    sigma, eps = [], []
    for i in range(n):
        a, b = p.images[2 * i], p.images[2 * i + 1]
        if a // 2 != b // 2 or a == b:
            raise ValueError("permutation does not commute with the sheet involution")
        sigma.append(a // 2)
        eps.append(a % 2)
    return SignedPerm(Perm(sigma), tuple(eps))


def orientation_char(g: SignedPerm) -> int:
    """``sum(eps) mod 2``; zero exactly on WD_n."""
    return sum(g.eps) & 1


def tower_involution(n: int) -> Perm:
    """The sheet swap ``(i, s) -> (i, 1 - s)`` on ``2n`` points."""
    return Perm._raw(tuple(x ^ 1 for x in range(2 * n)))


def section_action(g: SignedPerm) -> Perm:
    """Action on the ``2^n`` sections: ``(g.t)(sigma(j)) = t(j) ^ eps[j]``."""
    n = g.degree
    sig = g.sigma.images
    flip = 0
    for j in range(n):
        if g.eps[j]:
            flip |= 1 << sig[j]
    imgs = []
    for t in range(1 << n):
        moved = 0
        for j in range(n):
            if (t >> j) & 1:
                moved |= 1 << sig[j]
        imgs.append(moved ^ flip)
    return Perm._raw(tuple(imgs))


def section_involution(n: int) -> Perm:
    """Complementation of sections."""
    full = (1 << n) - 1
    return Perm._raw(tuple(t ^ full for t in range(1 << n)))


def class_representatives(n: int) -> list[int]:
    """One section per complementary pair ``{t, ~t}``: the smaller integer."""
    full = (1 << n) - 1
    return [t for t in range(1 << n) if t < t ^ full]


def class_action(g: SignedPerm) -> Perm:
    """Action on the ``2^(n-1)`` complementary pairs of sections.

    Class ``k`` is the pair whose smaller member is ``class_representatives(n)[k]``.
    """
    n = g.degree
    full = (1 << n) - 1
    reps = class_representatives(n)
    index = {}
    for k, t in enumerate(reps):
        index[t] = k
        index[t ^ full] = k
    sec = section_action(g)
    return Perm._raw(tuple(index[sec.images[t]] for t in reps))


def weight_blocks(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    even = tuple(t for t in range(1 << n) if popcount(t) % 2 == 0)
    odd = tuple(t for t in range(1 << n) if popcount(t) % 2 == 1)
    return even, odd


@lru_cache(maxsize=None)
def wc_elements(n: int) -> tuple[SignedPerm, ...]:
    """All ``2^n n!`` elements of WC_n in a fixed order."""
    out = []
    for sig in itertools.permutations(range(n)):
        p = Perm(sig)
        for eps in itertools.product((0, 1), repeat=n):
            out.append(SignedPerm(p, eps))
    return tuple(out)


def wd_elements(n: int) -> tuple[SignedPerm, ...]:
    return tuple(g for g in wc_elements(n) if orientation_char(g) == 0)


def wc_generators(n: int) -> tuple[SignedPerm, ...]:
    gens = [SignedPerm.flips((1,) + (0,) * (n - 1))]
    for i in range(n - 1):
        gens.append(SignedPerm(Perm.from_cycles([(i, i + 1)], n), (0,) * n))
    return tuple(gens)


# ----------------------------------------------------------------------------
# The WD_4 subgroup lattice on eight points
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupRecord:
    name: str
    generators: tuple[Perm, ...]
    order: int
    index: int
    elements: frozenset[Perm] = field(repr=False, compare=False)


def _pt(letter: int, sign: str) -> int:
    """Point ``x_letter^sign`` (letters 1-based) on eight points."""
    return 2 * (letter - 1) + (0 if sign == "+" else 1)


def _setwise(elements: Iterable[Perm], blocks: Sequence[Sequence[int]]) -> list[Perm]:
    """Elements mapping the family of blocks to itself (blocks may be permuted)."""
    fam = {frozenset(b) for b in blocks}
    return [g for g in elements if {frozenset(g.images[x] for x in b) for b in fam} == fam]


def _small_generating_set(elements: Sequence[Perm]) -> tuple[Perm, ...]:
    gens: list[Perm] = []
    have: set[Perm] = {elements[0]} if elements else set()
    target = len(elements)
    for g in sorted(elements, key=lambda p: (-p.order(), p.images)):
        if len(have) == target:
            break
        if g in have:
            continue
        gens.append(g)
        have = set(group_elements(PermTuple(g.degree, tuple(gens))))
    return tuple(gens)


def wd4_lattice() -> dict[str, SubgroupRecord]:
    """Named subgroups of WD_4 acting on the points ``x_i^+ -> 2(i-1)``, ``x_i^- -> 2(i-1)+1``."""
    wd4 = [embed_2n(g) for g in wd_elements(4)]
    P = _pt
    specs: dict[str, list[list[int]]] = {
        "WD4": [],
        "H~0": [[P(1, "+")]],
        "H0": [[P(1, "+"), P(1, "-")]],
        "G": [[P(1, "+"), P(2, "+")], [P(1, "-"), P(2, "-")]],
        "N(G)": [[P(1, "+"), P(1, "-"), P(2, "+"), P(2, "-")], [P(3, "+"), P(3, "-"), P(4, "+"), P(4, "-")]],
        "G~0": [[P(1, "+"), P(1, "-"), P(2, "+"), P(2, "-")]],
        "G~1": [[P(1, "+"), P(2, "+")], [P(1, "-"), P(2, "-")], [P(3, "+"), P(4, "+")], [P(3, "-"), P(4, "-")]],
        "G~2": [[P(1, "+"), P(2, "+")], [P(1, "-"), P(2, "-")], [P(3, "+"), P(4, "-")], [P(3, "-"), P(4, "+")]],
        "H1": [[P(i, "+") for i in range(1, 5)], [P(i, "-") for i in range(1, 5)]],
        "H2": [[P(1, "+"), P(2, "+"), P(3, "+"), P(4, "-")], [P(1, "-"), P(2, "-"), P(3, "-"), P(4, "+")]],
        "H~1": [[P(i, "+") for i in range(1, 5)]],
        "H~2": [[P(1, "+"), P(2, "+"), P(3, "+"), P(4, "-")]],
    }
    out = {}
    for name, blocks in specs.items():
        elems = _setwise(wd4, blocks) if blocks else wd4
        out[name] = SubgroupRecord(
            name=name,
            generators=_small_generating_set(elems),
            order=len(elems),
            index=len(wd4) // len(elems),
            elements=frozenset(elems),
        )
    return out


def conjugacy_class_of_subgroup(elements: frozenset[Perm], ambient: Iterable[Perm]) -> set[frozenset[Perm]]:
    out = set()
    for c in ambient:
        ci = c.inverse()
        out.add(frozenset(compose(compose(c, h), ci) for h in elements))
    return out


def coset_action(ambient: Sequence[Perm], subgroup: frozenset[Perm], gens: Sequence[Perm]) -> PermTuple:
    """Left multiplication action of ``gens`` on the left cosets ``aH``."""
    cosets: list[frozenset[Perm]] = []
    index: dict[Perm, int] = {}
    for a in ambient:
        if a in index:
            continue
        coset = frozenset(compose(a, h) for h in subgroup)
        for x in coset:
            index[x] = len(cosets)
        cosets.append(coset)
    reps = [next(iter(sorted(c))) for c in cosets]
    out = []
    for g in gens:
        out.append(Perm([index[compose(g, r)] for r in reps]))
    return PermTuple(len(cosets), tuple(out))


def klein_map(p: Perm) -> Perm:
    """S_4 -> S_3 through the action on the three pair-partitions of four points."""
    parts = pair_partitions(4)
    index = {pp: k for k, pp in enumerate(parts)}
    imgs = []
    for pp in parts:
        moved = frozenset(frozenset(p.images[x] for x in pair) for pair in pp)
        imgs.append(index[moved])
    return Perm(imgs)


def pair_partitions(m: int = 4) -> list[frozenset[frozenset[int]]]:
    """The three splittings of ``{0,1,2,3}`` into two pairs, ordered by the partner of 0."""
    if m != 4:
        raise ValueError("only four points are supported")
    out = []
    for partner in (1, 2, 3):
        rest = [x for x in range(4) if x not in (0, partner)]
        out.append(frozenset({frozenset({0, partner}), frozenset(rest)}))
    return out
