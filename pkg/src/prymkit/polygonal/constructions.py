"""The bigonal, trigonal and tetragonal constructions on monodromy data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from ..cover import (
    FiberPoint,
    GluedCover,
    MonodromyCover,
    Node,
    SignedTower,
    as_glued,
    strip,
)
from ..perm import Perm, cycle_type_and_sign
from ..weyl import SignedPerm
from .local import (
    Element,
    LocalNode,
    LocalResult,
    apply_local,
    bigonal_map,
    tetragonal_map,
    trigonal_inverse_map,
    trigonal_map,
)

TowerLike = Union[SignedTower, GluedCover]
CoverLike = Union[MonodromyCover, GluedCover]


def _local_nodes(g: GluedCover) -> dict[str, LocalNode]:
    out: dict[str, LocalNode] = {}
    for nd in g.nodes:
        if nd.p.label != nd.q.label:
            raise ValueError(f"node {nd.p} ~ {nd.q} does not lie over a single base point")
        if nd.p.label in out:
            raise ValueError(f"more than one node over {nd.p.label} is not supported")
        out[nd.p.label] = LocalNode(nd.p.index, nd.q.index, nd.cross)
    return out


def _require_glued_branching(g: GluedCover) -> None:
    """Every branch point of the double cover must sit on a node."""
    t: SignedTower = g.smooth
    on_node = {pt for nd in g.nodes for pt in (nd.p, nd.q)}
    for lab in t.labels:
        for k in t.ramified_points(lab):
            if FiberPoint(lab, k) not in on_node:
                raise ValueError(
                    f"double cover branched at {FiberPoint(lab, k)}: input must be unbranched or glued there")


def _apply(x: TowerLike | CoverLike, phi: Callable[[Element], Element]) -> SignedTower | MonodromyCover | GluedCover:
    g = as_glued(x)
    local = _local_nodes(g)
    smooth = g.smooth
    results: list[LocalResult] = [apply_local(phi, e, local.get(lab)) for lab, e in zip(smooth.labels, smooth.branches)]
    handles = tuple(phi(h) for h in smooth.handles)
    branches = tuple(r.element for r in results)
    sample = (branches + handles)[0]
    kind = SignedTower if isinstance(sample, SignedPerm) else MonodromyCover
    out = kind(smooth.base, sample.degree, handles, branches)
    nodes = tuple(
        Node(FiberPoint(lab, nd.p), FiberPoint(lab, nd.q), nd.cross)
        for lab, r in zip(smooth.labels, results)
        for nd in r.nodes
    )
    return strip(GluedCover(out, nodes))


def _degree(x: TowerLike | CoverLike) -> int:
    return as_glued(x).smooth.degree


def bigonal(t: TowerLike) -> SignedTower | GluedCover:
    """Degree-2 tower ``C~ -> C -> K`` to ``C~' -> C' -> K`` with ``C' = K~``."""
    if _degree(t) != 2:
        raise ValueError("the bigonal construction needs a degree-2 tower")
    return _apply(t, bigonal_map)


def trigonal_forward(t: TowerLike) -> MonodromyCover | GluedCover:
    """Unbranched (or ∂III-glued) degree-3 tower over P^1 to the tetragonal curve ``X``."""
    g = as_glued(t)
    if _degree(t) != 3:
        raise ValueError("the trigonal construction needs a degree-3 tower")
    if g.base.genus != 0:
        raise ValueError("the trigonal construction needs a rational base")
    _require_glued_branching(g)
    return _apply(g, trigonal_map)


def trigonal_inverse(x: CoverLike) -> SignedTower | GluedCover:
    """Degree-4 cover ``X`` of P^1 to the tower of pairs of sheets over pair-partitions."""
    g = as_glued(x)
    if isinstance(g.smooth, SignedTower):
        raise TypeError("the inverse construction takes a plain degree-4 cover")
    if g.smooth.degree != 4:
        raise ValueError("the inverse trigonal construction needs a degree-4 cover")
    if g.base.genus != 0:
        raise ValueError("the inverse trigonal construction needs a rational base")
    if g.nodes:
        raise ValueError("singular tetragonal curves are not supported")
    return _apply(g, trigonal_inverse_map)


def tetragonal(t: TowerLike) -> tuple[SignedTower | GluedCover, SignedTower | GluedCover]:
    """The two other members of the triple of a degree-4 tower.

    The first output is built on even-weight sections, the second on odd-weight ones.
    """
    g = as_glued(t)
    if _degree(t) != 4:
        raise ValueError("the tetragonal construction needs a degree-4 tower")
    _require_glued_branching(g)
    return _apply(g, lambda e: tetragonal_map(e, False)), _apply(g, lambda e: tetragonal_map(e, True))


def branch_counts(t: TowerLike) -> tuple[dict[str, int], dict[str, int]]:
    """Local degrees of ``Branch(f)`` and ``Branch(g)`` over each label of a degree-2 tower.

    A node over a label adds 2 to ``Branch(f)``; branch points of ``g`` sitting on
    a node are not counted in ``Branch(g)``.
    """
    g = as_glued(t)
    if _degree(t) != 2 or not g.is_tower:
        raise ValueError("branch counts are defined for degree-2 towers")
    glued = {pt for nd in g.nodes for pt in (nd.p, nd.q)}
    br_f, br_g = {}, {}
    for lab, e in zip(g.labels, g.smooth.branches):
        br_f[lab] = (0 if e.sigma.is_identity() else 1) + 2 * sum(1 for nd in g.nodes if nd.p.label == lab)
        br_g[lab] = sum(1 for k in g.smooth.ramified_points(lab) if FiberPoint(lab, k) not in glued)
    return br_f, br_g


# ----------------------------------------------------------------------------
# local pictures
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class LocalPictureTag:
    construction: str
    case: str
    element: Element
    node: LocalNode | None
    outputs: tuple[LocalResult, ...]

    def describe(self) -> str:
        outs = "; ".join(_describe_result(r) for r in self.outputs)
        return f"{self.construction} case {self.case}: {_describe_element(self.element, self.node)} -> {outs}"


def _describe_element(e: Element, node: LocalNode | None) -> str:
    s = f"{e}" if isinstance(e, SignedPerm) else f"{e}"
    if node is not None:
        s += f" glued {node.p + 1}~{node.q + 1}" + (" crossed" if node.cross else "")
    return s


def _describe_result(r: LocalResult) -> str:
    return _describe_element(r.element, r.nodes[0] if r.nodes else None) + (
        f" (+{len(r.nodes) - 1} nodes)" if len(r.nodes) > 1 else "")


def _shape(e: Element, node: LocalNode | None):
    sigma = e.sigma if isinstance(e, SignedPerm) else e
    cycles = sigma.cycles()
    lengths = tuple(sorted((len(c) for c in cycles if len(c) > 1), reverse=True))
    ram = [k for k, s in enumerate(e.cycle_sums()) if s] if isinstance(e, SignedPerm) else []
    glued = None if node is None else tuple(sorted(len(cycles[i]) for i in (node.p, node.q)))
    return lengths, ram, glued, cycles


def classify(construction: str, e: Element, node: LocalNode | None = None) -> str:
    lengths, ram, glued, cycles = _shape(e, node)
    nram = len(ram)
    node_ram = node is not None and set(ram) == {node.p, node.q}
    if construction == "bigonal":
        if node is None:
            table = {((), 0): "i", ((), 1): "ii", ((2,), 0): "iii", ((2,), 1): "iv", ((), 2): "v"}
            return table.get((lengths, nram), "other")
        return "vi" if lengths == () and node_ram else "other"
    if construction == "trigonal":
        if node is None and nram == 0:
            return {(): "i", (2,): "ii", (3,): "iii"}.get(lengths, "other")
        if node_ram and lengths == () and glued == (1, 1):
            return "iv"
        if node_ram and lengths == (2,) and glued == (1, 2):
            return "v"
        return "other"
    if construction == "trigonal-inverse":
        return {(): "i", (2,): "ii", (3,): "iii", (2, 2): "iv", (4,): "v"}.get(lengths, "other")
    if construction == "tetragonal":
        if node is None and nram == 0:
            return {(): "1", (2,): "2", (2, 2): "3", (3,): "6", (4,): "7"}.get(lengths, "other")
        if node_ram and glued == (1, 1) and lengths == ():
            return "4"
        if node_ram and glued == (1, 1) and lengths == (2,):
            return "5"
        if node_ram and glued == (1, 2) and lengths == (2,):
            # simple ramification point glued to an unramified point
            return "7'"
        return "other"
    raise ValueError(f"unknown construction {construction!r}")


def local_picture(construction: str, element: Element, node: LocalNode | None = None) -> LocalPictureTag:
    """Classify one local monodromy datum and compute the outputs over that point."""
    if construction == "bigonal":
        outs = (apply_local(bigonal_map, element, node),)
    elif construction == "trigonal":
        outs = (apply_local(trigonal_map, element, node),)
    elif construction == "trigonal-inverse":
        outs = (apply_local(trigonal_inverse_map, element, node),)
    elif construction == "tetragonal":
        outs = (apply_local(lambda e: tetragonal_map(e, False), element, node),
                apply_local(lambda e: tetragonal_map(e, True), element, node))
    else:
        raise ValueError(f"unknown construction {construction!r}")
    return LocalPictureTag(construction, classify(construction, element, node), element, node, outs)


def local_pictures(construction: str, x: TowerLike | CoverLike) -> dict[str, LocalPictureTag]:
    """Local picture tag for every branch label of an input."""
    g = as_glued(x)
    local = _local_nodes(g)
    return {lab: local_picture(construction, e, local.get(lab)) for lab, e in zip(g.labels, g.smooth.branches)}
