"""Element-level maps behind the constructions, and their behaviour at nodes.

Every construction is induced by a group homomorphism applied to each local
monodromy element. At a node lying over a base point the node is first
smoothed into two nearby branch points ``h1`` (a transposition joining the two
glued points) and ``h2 = g h1^-1``; the construction is applied to both and the
limit is read off from the connected pieces of the output over a small disc.
A piece with two boundary points and arithmetic genus 0 becomes a node.

When an output over an ordinary point has exactly two branch points of its
double cover lying over the same base point, its two sheets meet there and the
two branch points are glued.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence, Union

from ..perm import Perm
from ..weyl import (
    SignedPerm,
    embed_2n,
    from_embedded,
    orientation_char,
    pair_partitions,
    section_action,
    sp_compose,
    weight_blocks,
)

Element = Union[SignedPerm, Perm]


class NotNodal(ValueError):
    """The construction does not produce a nodal curve at this point."""


@dataclass(frozen=True)
class LocalNode:
    """Two glued points over one base point, as cycle indices of the local element."""

    p: int
    q: int
    cross: bool = False


@dataclass(frozen=True)
class LocalResult:
    element: Element
    nodes: tuple[LocalNode, ...] = ()


# ----------------------------------------------------------------------------
# element maps
# ----------------------------------------------------------------------------


def _relabel_sections(sec: Perm, points: Sequence[int]) -> Perm:
    """Restrict a section permutation to ``points`` and renumber them ``0..len-1``."""
    pos = {t: k for k, t in enumerate(points)}
    return Perm._raw(tuple(pos[sec.images[t]] for t in points))


@lru_cache(maxsize=None)
def block_points(n: int, odd: bool) -> tuple[int, ...]:
    """Sections of one weight-parity block, ordered ``t_0, ~t_0, t_1, ~t_1, ...``
    with ``t_j`` the smaller member of each complementary pair."""
    full = (1 << n) - 1
    block = weight_blocks(n)[1 if odd else 0]
    reps = sorted(t for t in block if t < t ^ full)
    out = []
    for t in reps:
        out += [t, t ^ full]
    return tuple(out)


def _require_even(g: SignedPerm) -> None:
    if orientation_char(g):
        raise ValueError(f"element {g} has odd orientation character: the orientation cover does not split")


def bigonal_map(g: SignedPerm) -> SignedPerm:
    """WC_2 -> WC_2: the sections of ``C~`` over ``K`` as a double cover of ``K~``."""
    if g.degree != 2:
        raise ValueError("bigonal map needs degree 2")
    return from_embedded(_relabel_sections(section_action(g), block_points(2, False) + block_points(2, True)))


def tetragonal_map(g: SignedPerm, odd: bool) -> SignedPerm:
    """WD_4 -> WD_4: the action on one weight-parity block of sections."""
    if g.degree != 4:
        raise ValueError("tetragonal map needs degree 4")
    _require_even(g)
    return from_embedded(_relabel_sections(section_action(g), block_points(4, odd)))


def trigonal_map(g: SignedPerm) -> Perm:
    """WD_3 -> S_4: the action on the even-weight sections ``000, 110, 101, 011``."""
    if g.degree != 3:
        raise ValueError("trigonal map needs degree 3")
    _require_even(g)
    return _relabel_sections(section_action(g), weight_blocks(3)[0])


@lru_cache(maxsize=None)
def _pairs_layout() -> tuple[tuple[frozenset[int], ...], dict[frozenset[int], int]]:
    """Unordered pairs of four points, laid out as ``2j + s`` over the pair partitions."""
    layout = []
    for pp in pair_partitions(4):
        first = next(p for p in pp if 0 in p)
        second = next(p for p in pp if 0 not in p)
        layout += [first, second]
    return tuple(layout), {p: k for k, p in enumerate(layout)}


def trigonal_inverse_map(p: Perm) -> SignedPerm:
    """S_4 -> WD_3: pairs of sheets over the three pair-partitions."""
    if p.degree != 4:
        raise ValueError("inverse trigonal map needs degree 4")
    layout, index = _pairs_layout()
    imgs = tuple(index[frozenset(p.images[x] for x in pair)] for pair in layout)
    return from_embedded(Perm._raw(imgs))


# ----------------------------------------------------------------------------
# local behaviour
# ----------------------------------------------------------------------------


def _is_tower(x: Element) -> bool:
    return isinstance(x, SignedPerm)


def _sigma(x: Element) -> Perm:
    return x.sigma if _is_tower(x) else x


def _lifts(g: SignedPerm, idx: int) -> list[int]:
    cyc = g.sigma.cycles()[idx]
    emb = embed_2n(g)
    a, b = emb.cycle_of(2 * cyc[0]), emb.cycle_of(2 * cyc[0] + 1)
    return [a] if a == b else [a, b]


def _tilde_pairs(g: SignedPerm, nodes: Sequence[LocalNode]) -> list[tuple[int, int]]:
    out = []
    for nd in nodes:
        lp, lq = _lifts(g, nd.p), _lifts(g, nd.q)
        if len(lp) != len(lq):
            raise NotNodal("a branch point of the double cover meets an unbranched point")
        if len(lp) == 1:
            out.append((lp[0], lq[0]))
        elif nd.cross:
            out += [(lp[0], lq[1]), (lp[1], lq[0])]
        else:
            out += [(lp[0], lq[0]), (lp[1], lq[1])]
    return out


def smooth_rule(out: Element) -> LocalResult:
    """Output over a point where the input is smooth."""
    if not _is_tower(out):
        return LocalResult(out)
    ram = [k for k, s in enumerate(out.cycle_sums()) if s]
    if len(ram) == 2:
        return LocalResult(out, (LocalNode(ram[0], ram[1]),))
    if len(ram) > 2:
        raise NotNodal(f"{len(ram)} branch points of the double cover over one point")
    return LocalResult(out)


def _pieces(points: int, out_perm: Perm, subs: Sequence[tuple[Perm, list[tuple[int, int]]]]) -> list[tuple[int, int]]:
    """Pairs of cycles of ``out_perm`` that collapse to nodes in the limit.

    ``subs`` holds the two nearby local permutations together with the nodes
    (as pairs of their own cycle indices) they already carry.
    """
    parent = list(range(points))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for perm, nodes in subs:
        cycles = perm.cycles()
        for cyc in cycles:
            for x in cyc[1:]:
                union(cyc[0], x)
        for a, b in nodes:
            union(cycles[a][0], cycles[b][0])
    chi: dict[int, int] = {}
    for x in range(points):
        r = find(x)
        chi[r] = chi.get(r, 0) + 1
    for perm, nodes in subs:
        cycles = perm.cycles()
        for cyc in cycles:
            chi[find(cyc[0])] -= len(cyc) - 1
        for a, _ in nodes:
            chi[find(cycles[a][0])] -= 2
    boundary: dict[int, list[int]] = {}
    for k, cyc in enumerate(out_perm.cycles()):
        boundary.setdefault(find(cyc[0]), []).append(k)
    out = []
    for r, b in boundary.items():
        twice_genus = 2 - len(b) - chi[r]
        if twice_genus != 0 or len(b) > 2:
            raise NotNodal("the limit over this point is not a node")
        if len(b) == 2:
            out.append((b[0], b[1]))
    return out


def smoothing(g: Element, node: LocalNode) -> tuple[Element, Element]:
    """Nearby elements ``(h1, h2)`` with ``g = h2 h1`` joining the glued points."""
    cycles = _sigma(g).cycles()
    a, b = cycles[node.p][0], cycles[node.q][0]
    n = _sigma(g).degree
    tau = Perm.from_cycles([(a, b)], n)
    if _is_tower(g):
        x = 1 if node.cross and len(_lifts(g, node.p)) == 2 else 0
        eps = [0] * n
        eps[a] = eps[b] = x
        h1 = SignedPerm(tau, tuple(eps))
        return h1, sp_compose(g, h1.inverse())
    return tau, g * tau.inverse()


def apply_local(phi: Callable[[Element], Element], g: Element, node: LocalNode | None = None) -> LocalResult:
    """The output of ``phi`` over one base point, with its nodes."""
    out = phi(g)
    if node is None:
        return smooth_rule(out)
    h1, h2 = smoothing(g, node)
    r1, r2 = apply_local(phi, h1), apply_local(phi, h2)
    n_out = _sigma(out).degree
    pairs = _pieces(n_out, _sigma(out), [
        (_sigma(r1.element), [(nd.p, nd.q) for nd in r1.nodes]),
        (_sigma(r2.element), [(nd.p, nd.q) for nd in r2.nodes]),
    ])
    if not _is_tower(out):
        return LocalResult(out, tuple(LocalNode(p, q) for p, q in pairs))
    tpairs = _pieces(2 * n_out, embed_2n(out), [
        (embed_2n(r1.element), _tilde_pairs(r1.element, r1.nodes)),
        (embed_2n(r2.element), _tilde_pairs(r2.element, r2.nodes)),
    ])
    nodes = []
    for p, q in pairs:
        lp, lq = _lifts(out, p), _lifts(out, q)
        if len(lp) != len(lq):
            raise NotNodal("a branch point of the double cover meets an unbranched point")
        if len(lp) == 1:
            if (lp[0], lq[0]) not in tpairs and (lq[0], lp[0]) not in tpairs:
                raise NotNodal("inconsistent gluing of the double cover")
            nodes.append(LocalNode(p, q))
            continue
        straight = {frozenset((lp[0], lq[0])), frozenset((lp[1], lq[1]))}
        crossed = {frozenset((lp[0], lq[1])), frozenset((lp[1], lq[0]))}
        found = {frozenset(t) for t in tpairs if set(t) & (set(lp) | set(lq))}
        if found == straight:
            nodes.append(LocalNode(p, q, False))
        elif found == crossed:
            nodes.append(LocalNode(p, q, True))
        else:
            raise NotNodal("inconsistent gluing of the double cover")
    return LocalResult(out, tuple(nodes))
