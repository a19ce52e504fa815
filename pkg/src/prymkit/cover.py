"""Branched covers of curves by monodromy, double covers on top of them, and nodal gluings.

A cover of degree ``n`` of a base curve of genus ``h`` is a tuple of handle
permutations ``a_1, b_1, ..., a_h, b_h`` and one permutation per branch label,
subject to ``prod [a_i, b_i] * prod sigma_b = id`` (left-to-right products,
``[a, b] = a b a^-1 b^-1``). A label whose permutation is the identity is a
marked, unbranched point.

A point of a cover over label ``b`` is a cycle of ``sigma_b``; cycles are
indexed by their smallest sheet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

from .perm import (
    Perm,
    PermTuple,
    commutator,
    compose,
    conjugates_to,
    cycle_type_and_sign,
    orbits,
    product,
)
from .weyl import (
    SignedPerm,
    embed_2n,
    from_embedded,
    sp_commutator,
    sp_compose,
    sp_product,
    wc_elements,
)


class RelationError(ValueError):
    """The monodromy data violates the product relation."""


@dataclass(frozen=True)
class BaseCurve:
    genus: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("base genus must be non-negative")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("branch labels must be distinct")


@dataclass(frozen=True)
class FiberPoint:
    """A point over a branch label: the ``index``-th cycle of that label's monodromy."""

    label: str
    index: int

    def __str__(self) -> str:
        return f"{self.label}[{self.index + 1}]"


def _relation(handles: Sequence, branches: Sequence, comm, prod, n: int):
    parts = [comm(handles[2 * i], handles[2 * i + 1]) for i in range(len(handles) // 2)]
    return prod(list(parts) + list(branches), n)


@dataclass(frozen=True)
class MonodromyCover:
    base: BaseCurve
    degree: int
    handles: tuple[Perm, ...]
    branches: tuple[Perm, ...]

    def __post_init__(self):
        if len(self.handles) != 2 * self.base.genus:
            raise ValueError(f"expected {2 * self.base.genus} handle permutations, got {len(self.handles)}")
        if len(self.branches) != len(self.base.labels):
            raise ValueError("one permutation per branch label is required")
        for p in self.handles + self.branches:
            if p.degree != self.degree:
                raise ValueError("permutation degree does not match the cover degree")
        rel = _relation(self.handles, self.branches, commutator, product, self.degree)
        if not rel.is_identity():
            raise RelationError(f"product relation fails: residual permutation {rel}")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.base.labels

    def generators(self) -> tuple[Perm, ...]:
        return self.handles + self.branches

    def branch(self, label: str) -> Perm:
        return self.branches[self.base.labels.index(label)]

    def fiber(self, label: str) -> list[tuple[int, ...]]:
        return self.branch(label).cycles()

    def fiber_points(self) -> list[FiberPoint]:
        return [FiberPoint(lab, k) for lab in self.labels for k in range(len(self.fiber(lab)))]

    def components(self) -> list[list[int]]:
        return orbits(PermTuple(self.degree, self.generators()))

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def restrict(self, sheets: Sequence[int]) -> "MonodromyCover":
        """The sub-cover on an invariant set of sheets, renumbered in increasing order."""
        sheets = sorted(sheets)
        pos = {s: k for k, s in enumerate(sheets)}

        def r(p: Perm) -> Perm:
            return Perm(pos[p.images[s]] for s in sheets)

        return MonodromyCover(self.base, len(sheets), tuple(map(r, self.handles)), tuple(map(r, self.branches)))

    def ramification(self, sheets: Iterable[int] | None = None) -> int:
        pts = set(range(self.degree) if sheets is None else sheets)
        return sum(len(c) - 1 for p in self.branches for c in p.cycles() if c[0] in pts)

    def genus(self) -> list[int]:
        """Genus of each connected component, in :meth:`components` order."""
        out = []
        for comp in self.components():
            m = len(comp)
            twice = self.ramification(comp) - m * (2 - 2 * self.base.genus) + 2
            if twice % 2:
                raise ValueError("Riemann-Hurwitz parity failure")
            out.append(twice // 2)
        return out

    def arithmetic_genus(self) -> int:
        g = self.genus()
        return sum(g) - len(g) + 1

    def relabel(self, c: Perm) -> "MonodromyCover":
        ci = c.inverse()
        conj = lambda p: compose(compose(c, p), ci)
        return MonodromyCover(self.base, self.degree, tuple(map(conj, self.handles)), tuple(map(conj, self.branches)))


@dataclass(frozen=True)
class SignedTower:
    """A double cover ``C~ -> C`` over a cover ``C -> base`` given by WC_n monodromy."""

    base: BaseCurve
    degree: int
    handles: tuple[SignedPerm, ...]
    branches: tuple[SignedPerm, ...]

    def __post_init__(self):
        if len(self.handles) != 2 * self.base.genus:
            raise ValueError(f"expected {2 * self.base.genus} handle elements, got {len(self.handles)}")
        if len(self.branches) != len(self.base.labels):
            raise ValueError("one element per branch label is required")
        for g in self.handles + self.branches:
            if g.degree != self.degree:
                raise ValueError("element degree does not match the tower degree")
        rel = _relation(self.handles, self.branches, sp_commutator, sp_product, self.degree)
        if not rel.is_identity():
            raise RelationError(f"product relation fails: residual {rel.sigma} signs {rel.sign_string()} "
                                f"(on 2n points {embed_2n(rel)})")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.base.labels

    def generators(self) -> tuple[SignedPerm, ...]:
        return self.handles + self.branches

    def branch(self, label: str) -> SignedPerm:
        return self.branches[self.base.labels.index(label)]

    @cached_property
    def cover(self) -> MonodromyCover:
        """The middle curve ``C``."""
        return MonodromyCover(self.base, self.degree,
                              tuple(g.sigma for g in self.handles), tuple(g.sigma for g in self.branches))

    @cached_property
    def tilde(self) -> MonodromyCover:
        """The top curve ``C~`` as a cover of degree ``2n`` of the base."""
        return MonodromyCover(self.base, 2 * self.degree,
                              tuple(map(embed_2n, self.handles)), tuple(map(embed_2n, self.branches)))

    def ramified_points(self, label: str) -> list[int]:
        """Indices of the points of ``C`` over ``label`` where ``C~ -> C`` is branched."""
        return [k for k, s in enumerate(self.branch(label).cycle_sums()) if s]

    def is_etale_double(self) -> bool:
        return not any(any(g.cycle_sums()) for g in self.branches)

    def branch_count(self) -> int:
        return sum(sum(g.cycle_sums()) for g in self.branches)

    def lifts(self, p: FiberPoint) -> list[int]:
        """Indices of the points of ``C~`` over ``p``; the first contains sheet ``(min p, 0)``."""
        g = self.branch(p.label)
        cyc = g.sigma.cycles()[p.index]
        emb = embed_2n(g)
        first = emb.cycle_of(2 * cyc[0])
        second = emb.cycle_of(2 * cyc[0] + 1)
        return [first] if first == second else [first, second]

    def relabel(self, c: SignedPerm) -> "SignedTower":
        ci = c.inverse()
        conj = lambda g: sp_compose(sp_compose(c, g), ci)
        return SignedTower(self.base, self.degree, tuple(map(conj, self.handles)), tuple(map(conj, self.branches)))


@dataclass(frozen=True)
class Node:
    """Two points of the normalization glued together.

    For a double tower the gluing upstairs is determined by ``p`` and ``q``
    when both are branch points of ``C~ -> C``; when both are unbranched,
    ``cross`` selects ``p_0 ~ q_1, p_1 ~ q_0`` instead of ``p_0 ~ q_0, p_1 ~ q_1``.
    """

    p: FiberPoint
    q: FiberPoint
    cross: bool = False


Smooth = Union[MonodromyCover, SignedTower]


@dataclass(frozen=True)
class GluedCover:
    smooth: Smooth
    nodes: tuple[Node, ...] = ()

    def __post_init__(self):
        used: set[FiberPoint] = set()
        for nd in self.nodes:
            for pt in (nd.p, nd.q):
                if pt.label not in self.smooth.labels:
                    raise ValueError(f"unknown label {pt.label!r} in gluing")
                fib = self._base_cover().fiber(pt.label)
                if not 0 <= pt.index < len(fib):
                    raise ValueError(f"no point {pt} in the fiber")
                if pt in used:
                    raise ValueError(f"point {pt} is glued twice")
                used.add(pt)
            if nd.p == nd.q:
                raise ValueError("a node needs two distinct points")
            if isinstance(self.smooth, SignedTower):
                rp = len(self.smooth.lifts(nd.p)) == 1
                rq = len(self.smooth.lifts(nd.q)) == 1
                if rp != rq:
                    raise ValueError(f"cannot glue a branch point of the double cover to an unbranched one ({nd.p}, {nd.q})")

    def _base_cover(self) -> MonodromyCover:
        return self.smooth.cover if isinstance(self.smooth, SignedTower) else self.smooth

    @property
    def is_tower(self) -> bool:
        return isinstance(self.smooth, SignedTower)

    @property
    def base(self) -> BaseCurve:
        return self.smooth.base

    @property
    def labels(self) -> tuple[str, ...]:
        return self.smooth.labels

    def arithmetic_genus(self) -> int:
        """``p_a = sum of component genera + #nodes - #components + 1``."""
        return self._base_cover().arithmetic_genus() + len(self.nodes)

    def tilde_nodes(self) -> list[tuple[tuple[str, int], tuple[str, int]]]:
        """Nodes of ``C~`` as pairs of (label, point index of ``C~`` over that label)."""
        if not self.is_tower:
            raise TypeError("not a double tower")
        t: SignedTower = self.smooth
        out = []
        for nd in self.nodes:
            lp, lq = t.lifts(nd.p), t.lifts(nd.q)
            if len(lp) == 1:
                out.append(((nd.p.label, lp[0]), (nd.q.label, lq[0])))
            elif nd.cross:
                out.append(((nd.p.label, lp[0]), (nd.q.label, lq[1])))
                out.append(((nd.p.label, lp[1]), (nd.q.label, lq[0])))
            else:
                out.append(((nd.p.label, lp[0]), (nd.q.label, lq[0])))
                out.append(((nd.p.label, lp[1]), (nd.q.label, lq[1])))
        return out

    def tilde_arithmetic_genus(self) -> int:
        return self.smooth.tilde.arithmetic_genus() + len(self.tilde_nodes())

    def prym_dimension(self) -> int:
        return self.tilde_arithmetic_genus() - self.arithmetic_genus()

    # -- connectivity -------------------------------------------------------

    def _glued_components(self, cover: MonodromyCover, pairs) -> int:
        comps = cover.components()
        where = {}
        for k, comp in enumerate(comps):
            for s in comp:
                where[s] = k
        parent = list(range(len(comps)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for (la, ia), (lb, ib) in pairs:
            sa = cover.fiber(la)[ia][0]
            sb = cover.fiber(lb)[ib][0]
            ra, rb = find(where[sa]), find(where[sb])
            if ra != rb:
                parent[ra] = rb
        return len({find(k) for k in range(len(comps))})

    def connected_components(self) -> int:
        pairs = [((n.p.label, n.p.index), (n.q.label, n.q.index)) for n in self.nodes]
        return self._glued_components(self._base_cover(), pairs)

    def tilde_connected_components(self) -> int:
        return self._glued_components(self.smooth.tilde, self.tilde_nodes())

    # -- the involution upstairs -------------------------------------------

    def _iota_point(self, label: str, idx: int) -> tuple[str, int]:
        emb = embed_2n(self.smooth.branch(label))
        cyc = emb.cycles()[idx]
        return label, emb.cycle_of(cyc[0] ^ 1)

    def involution_report(self) -> dict:
        """Fixed points, exchanged nodes and exchanged components of ``i`` on ``C~``."""
        t: SignedTower = self.smooth
        tnodes = self.tilde_nodes()
        on_node = {pt for nd in tnodes for pt in nd}
        fixed_smooth = []
        for lab in t.labels:
            emb = embed_2n(t.branch(lab))
            for k, cyc in enumerate(emb.cycles()):
                if (lab, k) in on_node:
                    continue
                if emb.cycle_of(cyc[0] ^ 1) == k:
                    fixed_smooth.append((lab, k))
        node_set = {frozenset(nd) for nd in tnodes}
        fixed_nodes, swapped_branches, moved_nodes = [], [], []
        for nd in tnodes:
            a, b = nd
            ia, ib = self._iota_point(*a), self._iota_point(*b)
            if ia == b and ib == a:
                swapped_branches.append(nd)
            elif ia == a and ib == b:
                fixed_nodes.append(nd)
            else:
                if frozenset((ia, ib)) not in node_set:
                    raise ValueError("gluing is not invariant under the sheet involution")
                moved_nodes.append(nd)
        tilde = t.tilde
        comps = tilde.components()
        moved_comps = [c for c in comps if sorted(x ^ 1 for x in c) != c]
        return {
            "fixed_smooth_points": fixed_smooth,
            "fixed_nodes": fixed_nodes,
            "fixed_nodes_exchanged_branches": swapped_branches,
            "exchanged_nodes": len(moved_nodes),
            "exchanged_components": len(moved_comps),
        }

    def is_allowable(self) -> bool:
        """Fixed points of ``i`` are nodes with unexchanged branches, and exchanged nodes
        are as many as exchanged components."""
        if not self.is_tower:
            raise TypeError("allowability is defined for double towers")
        rep = self.involution_report()
        return (not rep["fixed_smooth_points"] and not rep["fixed_nodes_exchanged_branches"]
                and rep["exchanged_nodes"] == rep["exchanged_components"])

    def node_types(self) -> list[str]:
        """Local type of each node: ``∂III`` when the double cover branches at both
        preimages, ``∂I`` when the normalization double cover is split along the node
        and the node joins its two sheets, ``∂II`` otherwise."""
        t: SignedTower = self.smooth
        tilde = t.tilde
        comp_of = {}
        for k, comp in enumerate(tilde.components()):
            for x in comp:
                comp_of[x] = k
        out = []
        for nd in self.nodes:
            if len(t.lifts(nd.p)) == 1:
                out.append("∂III")
                continue
            sp = t.cover.fiber(nd.p.label)[nd.p.index][0]
            sq = t.cover.fiber(nd.q.label)[nd.q.index][0]
            split = comp_of[2 * sp] != comp_of[2 * sp + 1] and comp_of[2 * sq] != comp_of[2 * sq + 1]
            if not split:
                out.append("∂II")
                continue
            # component of the q-branch glued to the sheet-0 branch at p
            emb_q = embed_2n(t.branch(nd.q.label)).cycles()
            q_lifts = t.lifts(nd.q)
            target = emb_q[q_lifts[1] if nd.cross else q_lifts[0]][0]
            out.append("∂I" if comp_of[2 * sp] != comp_of[target] else "∂II")
        return out

    def degeneration_type(self) -> str:
        if not self.nodes:
            return "smooth"
        types = self.node_types()
        if len(types) == 1:
            if types[0] == "∂I" and self.tilde_connected_components() > self.connected_components():
                raise ValueError("the double cover is trivial")
            return types[0]
        return "+".join(types)


def as_glued(x: Smooth | GluedCover) -> GluedCover:
    return x if isinstance(x, GluedCover) else GluedCover(x, ())


def strip(x: GluedCover) -> Smooth | GluedCover:
    """A glued cover without nodes is returned as its smooth part."""
    return x.smooth if isinstance(x, GluedCover) and not x.nodes else x


# ----------------------------------------------------------------------------
# boundary examples
# ----------------------------------------------------------------------------


def build_boundary_example(kind: str, cover: Smooth, p: FiberPoint, q: FiberPoint) -> GluedCover:
    """One-node degenerations of the three boundary types.

    ``I``: ``cover`` is a :class:`MonodromyCover` ``X``; two copies of ``X`` are
    glued crosswise at ``p`` and ``q``. ``II``: ``cover`` is an unbranched
    connected double tower glued straight at ``p`` and ``q``. ``III``: ``cover``
    is a double tower branched exactly at ``p`` and ``q``, which are glued.
    """
    if p == q:
        raise ValueError("the two points to glue must be distinct")
    if kind == "I":
        if not isinstance(cover, MonodromyCover):
            raise TypeError("type I needs the normalization X as a MonodromyCover")
        n = cover.degree
        tower = SignedTower(cover.base, n,
                            tuple(SignedPerm(h, (0,) * n) for h in cover.handles),
                            tuple(SignedPerm(b, (0,) * n) for b in cover.branches))
        return GluedCover(tower, (Node(p, q, cross=True),))
    if not isinstance(cover, SignedTower):
        raise TypeError(f"type {kind} needs a SignedTower")
    if kind == "II":
        if not cover.is_etale_double():
            raise ValueError("type II needs an unbranched double cover")
        if len(cover.tilde.components()) != len(cover.cover.components()):
            raise ValueError("type II needs a non-split double cover")
        return GluedCover(cover, (Node(p, q, cross=False),))
    if kind == "III":
        ram = {FiberPoint(lab, k) for lab in cover.labels for k in cover.ramified_points(lab)}
        if ram != {p, q}:
            raise ValueError(f"type III needs the double cover branched exactly at {p} and {q}")
        return GluedCover(cover, (Node(p, q),))
    raise ValueError(f"unknown boundary type {kind!r}")


# ----------------------------------------------------------------------------
# isomorphism
# ----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _embedded_wc(n: int) -> tuple[Perm, ...]:
    return tuple(embed_2n(g) for g in wc_elements(n))


@lru_cache(maxsize=None)
def _symmetric(n: int) -> tuple[Perm, ...]:
    return tuple(Perm(p) for p in itertools.permutations(range(n)))


def _node_sets(cover: MonodromyCover, pairs) -> set[frozenset[frozenset[int]]]:
    """Nodes as unordered pairs of sheet sets (one sheet set per branch)."""
    out = set()
    for (la, ia), (lb, ib) in pairs:
        out.add(frozenset({(la, frozenset(cover.fiber(la)[ia])), (lb, frozenset(cover.fiber(lb)[ib]))}))
    return out


def _map_nodes(c: Perm, nodes) -> set:
    return {frozenset((lab, frozenset(c.images[x] for x in pts)) for lab, pts in nd) for nd in nodes}


def _glued_pairs(g: GluedCover):
    return [((n.p.label, n.p.index), (n.q.label, n.q.index)) for n in g.nodes]


def towers_isomorphic(a: SignedTower | GluedCover, b: SignedTower | GluedCover) -> SignedPerm | None:
    """A relabeling in WC_n carrying ``a`` to ``b`` (nodes included), or None."""
    ga, gb = as_glued(a), as_glued(b)
    ta, tb = ga.smooth, gb.smooth
    if not (isinstance(ta, SignedTower) and isinstance(tb, SignedTower)):
        raise TypeError("towers_isomorphic compares double towers")
    if ta.base != tb.base or ta.degree != tb.degree or len(ga.nodes) != len(gb.nodes):
        return None
    ea = [embed_2n(x) for x in ta.generators()]
    eb = [embed_2n(x) for x in tb.generators()]
    if any(cycle_type_and_sign(x) != cycle_type_and_sign(y) for x, y in zip(ea, eb)):
        return None
    na = _node_sets(ta.tilde, ga.tilde_nodes()) if ga.nodes else set()
    nb = _node_sets(tb.tilde, gb.tilde_nodes()) if gb.nodes else set()
    for c in _embedded_wc(ta.degree):
        if conjugates_to(c, ea, eb) and _map_nodes(c, na) == nb:
            return from_embedded(c)
    return None


def covers_isomorphic(a: MonodromyCover | GluedCover, b: MonodromyCover | GluedCover) -> Perm | None:
    """A sheet relabeling carrying ``a`` to ``b`` (nodes included), or None."""
    ga, gb = as_glued(a), as_glued(b)
    ca = ga.smooth.cover if isinstance(ga.smooth, SignedTower) else ga.smooth
    cb = gb.smooth.cover if isinstance(gb.smooth, SignedTower) else gb.smooth
    if ca.base != cb.base or ca.degree != cb.degree or len(ga.nodes) != len(gb.nodes):
        return None
    xa, xb = ca.generators(), cb.generators()
    if any(cycle_type_and_sign(x) != cycle_type_and_sign(y) for x, y in zip(xa, xb)):
        return None
    na = _node_sets(ca, _glued_pairs(ga))
    nb = _node_sets(cb, _glued_pairs(gb))
    if ca.degree > 8:
        raise ValueError("exhaustive cover isomorphism limited to degree 8")
    for c in _symmetric(ca.degree):
        if conjugates_to(c, xa, xb) and _map_nodes(c, na) == nb:
            return c
    return None
