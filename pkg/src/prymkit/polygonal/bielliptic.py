"""Cartesian double covers, hyperelliptic factorizations and the bigonal diagram."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..cover import FiberPoint, GluedCover, MonodromyCover, SignedTower, as_glued, covers_isomorphic
from ..perm import Perm, PermTuple, block_action, block_systems, compose
from ..weyl import SignedPerm, embed_2n, orientation_char, sp_compose, wc_elements
from .constructions import bigonal


def fiber_product(a: MonodromyCover, b: MonodromyCover) -> MonodromyCover:
    """``A x_K B`` with sheet ``(i, j)`` at index ``i * deg(B) + j``."""
    if a.base != b.base:
        raise ValueError("covers of different bases")
    m = b.degree

    def pair(p: Perm, q: Perm) -> Perm:
        return Perm(p.images[i] * m + q.images[j] for i in range(a.degree) for j in range(m))

    return MonodromyCover(a.base, a.degree * m,
                          tuple(map(pair, a.handles, b.handles)), tuple(map(pair, a.branches, b.branches)))


@dataclass(frozen=True)
class CartesianResult:
    cartesian: bool
    factors: tuple[MonodromyCover, MonodromyCover] | None = None


def is_cartesian(t: SignedTower) -> CartesianResult:
    """Whether ``C~ = C0 x_K C1`` for double covers ``C0, C1`` of ``K``.

    This holds exactly when the orientation character vanishes. The factors are
    the two components of the bigonal partner, and the fiber product is checked
    against ``C~`` up to relabeling.
    """
    if t.degree != 2:
        raise ValueError("needs a degree-2 tower")
    if any(orientation_char(g) for g in t.generators()):
        return CartesianResult(False)
    partner = as_glued(bigonal(t)).smooth
    swap, ident = Perm((1, 0)), Perm((0, 1))
    factors = []
    for letter in (0, 1):
        pick = lambda g: swap if g.eps[letter] else ident
        factors.append(MonodromyCover(t.base, 2, tuple(map(pick, partner.handles)), tuple(map(pick, partner.branches))))
    if covers_isomorphic(fiber_product(*factors), t.tilde) is None:
        raise AssertionError("fiber product of the factors differs from the top curve")
    return CartesianResult(True, (factors[0], factors[1]))


@dataclass(frozen=True)
class HyperellipticFactorization:
    blocks: tuple[tuple[int, ...], ...]
    """Pairs of sheets of ``C`` over the same sheet of ``H``."""
    quotient: MonodromyCover
    """``H`` as a degree-2 cover of the base."""

    def sheet_of(self, sheet: int) -> int:
        return next(k for k, b in enumerate(self.blocks) if sheet in b)


def hyperelliptic_factorizations(c: MonodromyCover) -> list[HyperellipticFactorization]:
    """All factorizations of a degree-4 cover through a degree-2 cover."""
    if c.degree != 4:
        raise ValueError("needs a degree-4 cover")
    gens = PermTuple(4, c.generators())
    out = []
    if c.is_connected():
        systems = [s for s in block_systems(gens) if len(s) == 2]
    else:
        # pairings of the four sheets invariant under the monodromy
        systems = []
        for partner in (1, 2, 3):
            rest = tuple(x for x in range(4) if x not in (0, partner))
            part = ((0, partner), rest)
            try:
                block_action(gens, part)
            except ValueError:
                continue
            systems.append(part)
    for part in systems:
        act = block_action(gens, part)
        h = len(c.handles)
        quotient = MonodromyCover(c.base, 2, act.entries[:h], act.entries[h:])
        out.append(HyperellipticFactorization(tuple(part), quotient))
    return out


def factors_through_hyperelliptic(c: MonodromyCover) -> HyperellipticFactorization | None:
    found = hyperelliptic_factorizations(c)
    return found[0] if found else None


def is_cartesian_over(t: SignedTower, fac: HyperellipticFactorization) -> bool:
    """Whether ``C~ -> C -> H`` is Cartesian over ``H``: two further monodromy-invariant
    pairings of ``C~`` lie over the sheets of ``H`` and together with the pairing over ``C``
    exhaust the three pairings on each fiber of ``C~ -> H``."""
    if t.degree != 4:
        raise ValueError("needs a degree-4 tower")
    gens = [embed_2n(g) for g in t.generators()]
    h_fibers = [tuple(sorted(2 * i + s for i in blk for s in (0, 1))) for blk in fac.blocks]

    def pairings(pts):
        a = pts[0]
        return [((a, b), tuple(x for x in pts if x not in (a, b))) for b in pts[1:]]

    invariant = []
    for choice in itertools.product(*(pairings(f) for f in h_fibers)):
        part = [blk for ch in choice for blk in ch]
        index = {x: k for k, blk in enumerate(part) for x in blk}
        if all(len({index[g.images[x]] for x in blk}) == 1 for g in gens for blk in part):
            invariant.append(choice)
    c_pairing = tuple(((2 * i, 2 * i + 1)) for blk in fac.blocks for i in blk)
    others = [ch for ch in invariant if {b for pr in ch for b in pr} != set(c_pairing)]
    if len(others) < 2:
        return False
    for a, b in itertools.combinations(others, 2):
        if all(x != y for x, y in zip(a, b)):
            return True
    return False


def extra_identifications(x: SignedTower | GluedCover, fac: HyperellipticFactorization) -> list[tuple[str, int, int]]:
    """Nodes of ``C`` whose branches lie over different sheets of ``H``.

    Each such node forces the two points of ``H`` below it to be identified for
    ``C -> H`` to stay a morphism. Returns ``(label, sheet, sheet)`` of ``H``.
    """
    g = as_glued(x)
    cover = g.smooth.cover if isinstance(g.smooth, SignedTower) else g.smooth
    out = []
    for nd in g.nodes:
        sp = cover.fiber(nd.p.label)[nd.p.index][0]
        sq = cover.fiber(nd.q.label)[nd.q.index][0]
        hp, hq = fac.sheet_of(sp), fac.sheet_of(sq)
        if hp != hq:
            out.append((nd.p.label, min(hp, hq), max(hp, hq)))
    return out


# ----------------------------------------------------------------------------
# the bigonal diagram
# ----------------------------------------------------------------------------


def _subgroups_wc2() -> list[frozenset[SignedPerm]]:
    elems = wc_elements(2)
    subs = []
    for mask in range(1, 1 << len(elems)):
        s = frozenset(e for k, e in enumerate(elems) if mask >> k & 1)
        if SignedPerm.identity(2) not in s:
            continue
        if all(sp_compose(a, b) in s for a in s for b in s):
            subs.append(s)
    return subs


def wc2_subgroup_classes() -> list[list[frozenset[SignedPerm]]]:
    """Conjugacy classes of subgroups of WC_2, smallest first."""
    elems = wc_elements(2)
    classes: list[list[frozenset[SignedPerm]]] = []
    seen: set[frozenset[SignedPerm]] = set()
    for s in sorted(_subgroups_wc2(), key=lambda s: (len(s), sorted(str(x) for x in s))):
        if s in seen:
            continue
        cls = {frozenset(sp_compose(sp_compose(c, x), c.inverse()) for x in s) for c in elems}
        seen |= cls
        classes.append(sorted(cls, key=lambda s: sorted(str(x) for x in s)))
    return classes


def _sp(text: str, signs: str) -> SignedPerm:
    return SignedPerm.parse(text, signs, 2)


DIAGRAM_SUBGROUPS: dict[str, tuple[SignedPerm, ...]] = {
    "C~~": (),
    "C~": (_sp("()", "01"),),
    "CxC'": (_sp("()", "11"),),
    "C~'": (_sp("(1 2)", "00"),),
    "C": (_sp("()", "10"), _sp("()", "01")),
    "C''": (_sp("(1 2)", "10"),),
    "C'": (_sp("(1 2)", "00"), _sp("()", "11")),
    "K": (_sp("(1 2)", "00"), _sp("()", "10")),
}


def _generated(gens: Sequence[SignedPerm]) -> frozenset[SignedPerm]:
    out = {SignedPerm.identity(2)}
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = sp_compose(g, x)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def bigonal_diagram(t: SignedTower) -> dict[str, MonodromyCover]:
    """The eight quotients of the Galois closure of a degree-2 tower, one per
    conjugacy class of subgroups of WC_2, as covers of the base."""
    if t.degree != 2:
        raise ValueError("needs a degree-2 tower")
    elems = wc_elements(2)
    out = {}
    for name, gens in DIAGRAM_SUBGROUPS.items():
        sub = _generated(gens)
        cosets: list[frozenset[SignedPerm]] = []
        index: dict[SignedPerm, int] = {}
        for a in elems:
            if a in index:
                continue
            coset = frozenset(sp_compose(a, h) for h in sub)
            for x in coset:
                index[x] = len(cosets)
            cosets.append(coset)
        reps = [min(c, key=lambda s: (s.sigma.images, s.eps)) for c in cosets]
        act = lambda g: Perm([index[sp_compose(g, r)] for r in reps])
        out[name] = MonodromyCover(t.base, len(cosets), tuple(map(act, t.handles)), tuple(map(act, t.branches)))
    return out
