"""Picard lattices of the plane blown up in ``r <= 6`` points.

A class is a tuple ``(d, c_1, ..., c_r)`` standing for ``d h + sum c_i e_i``
with ``h^2 = 1``, ``e_i^2 = -1`` and all other products zero. Lines are the
classes with ``D^2 = D.K = -1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cover import BaseCurve, FiberPoint, GluedCover, MonodromyCover, Node
from .perm import Perm, group_order, orbits, stabilizer_order

Divisor = tuple[int, ...]


@dataclass(frozen=True)
class PicLattice:
    r: int

    def __post_init__(self):
        if not 0 <= self.r <= 6:
            raise ValueError(f"number of blown-up points must be in 0..6, got {self.r}")

    @property
    def rank(self) -> int:
        return self.r + 1

    @property
    def h(self) -> Divisor:
        return (1,) + (0,) * self.r

    def e(self, i: int) -> Divisor:
        """Exceptional class ``e_i`` for ``1 <= i <= r``."""
        if not 1 <= i <= self.r:
            raise ValueError(f"no exceptional class e_{i}")
        return tuple(1 if k == i else 0 for k in range(self.r + 1))

    @property
    def canonical(self) -> Divisor:
        return (-3,) + (1,) * self.r

    def dot(self, a: Sequence[int], b: Sequence[int]) -> int:
        return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))

    def is_line(self, d: Sequence[int]) -> bool:
        return self.dot(d, d) == -1 and self.dot(d, self.canonical) == -1

    def reflect(self, x: Sequence[int], alpha: Sequence[int]) -> Divisor:
        """``s_alpha(x) = x + (x.alpha) alpha`` for a root ``alpha`` (``alpha^2 = -2``)."""
        k = self.dot(x, alpha)
        return tuple(a + k * b for a, b in zip(x, alpha))

    def simple_roots(self) -> list[Divisor]:
        roots = []
        if self.r >= 3:
            roots.append(tuple([1, -1, -1, -1] + [0] * (self.r - 3)))
        for i in range(1, self.r):
            v = [0] * (self.r + 1)
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        return roots


def format_class(d: Sequence[int]) -> str:
    terms = []
    if d[0]:
        terms.append("h" if d[0] == 1 else "-h" if d[0] == -1 else f"{d[0]}h")
    for i, c in enumerate(d[1:], 1):
        if c:
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "+" if c > 0 else "-"
            terms.append(f"{sign}{mag}e{i}")
    if not terms:
        return "0"
    s = "".join(t if t[0] in "+-" else "+" + t for t in terms)
    return s[1:] if s[0] == "+" else s


def _lines_by_bounds(lat: PicLattice, degrees: Iterable[int], coeff: Sequence[int]) -> list[Divisor]:
    out = []
    for d in degrees:
        for cs in itertools.product(coeff, repeat=lat.r):
            cls = (d,) + cs
            if lat.is_line(cls):
                out.append(cls)
    return out


@lru_cache(maxsize=None)
def lines(r: int) -> tuple[Divisor, ...]:
    """All lines, sorted by degree then coefficients (``e_i`` first)."""
    lat = PicLattice(r)
    return tuple(sorted(_lines_by_bounds(lat, (0, 1, 2), (-1, 0, 1)), key=_line_key))


def _line_key(d: Divisor):
    return (d[0], [-c for c in d[1:]])


def lines_wide_search(r: int) -> list[Divisor]:
    """Lines found with bounds derived from the two defining equations.

    ``sum c_i = 1 - 3d`` and ``sum c_i^2 = d^2 + 1`` force
    ``(3d - 1)^2 <= r (d^2 + 1)`` and ``|c_i| <= sqrt(d^2 + 1)``.
    """
    lat = PicLattice(r)
    out = []
    for d in range(-1, 8):
        if (3 * d - 1) ** 2 > r * (d * d + 1):
            continue
        bound = math.isqrt(d * d + 1)
        out += _lines_by_bounds(lat, (d,), range(-bound, bound + 1))
    return sorted(out, key=_line_key)


@dataclass(frozen=True)
class IncidenceGraph:
    nodes: tuple[Divisor, ...]
    edges: frozenset[tuple[int, int]]

    def degree(self, k: int) -> int:
        return sum(1 for e in self.edges if k in e)

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def srg_parameters(self) -> tuple[int, int, int, int] | None:
        """``(v, k, lambda, mu)`` if strongly regular, else None."""
        n = len(self.nodes)
        nbrs = [{b for b in range(n) if b != a and self.adjacent(a, b)} for a in range(n)]
        ks = {len(s) for s in nbrs}
        lam, mu = set(), set()
        for a, b in itertools.combinations(range(n), 2):
            common = len(nbrs[a] & nbrs[b])
            (lam if b in nbrs[a] else mu).add(common)
        if len(ks) != 1 or len(lam) > 1 or len(mu) > 1:
            return None
        return n, ks.pop(), lam.pop() if lam else 0, mu.pop() if mu else 0

    def to_dot(self, name: str = "lines") -> str:
        out = [f"graph {name} {{"]
        for k, d in enumerate(self.nodes):
            out.append(f'  n{k} [label="{format_class(d)}"];')
        for a, b in sorted(self.edges):
            out.append(f"  n{a} -- n{b};")
        out.append("}")
        return "\n".join(out) + "\n"


def incidence_graph(r: int) -> IncidenceGraph:
    if r not in (5, 6):
        raise ValueError("incidence graphs are built for r = 5 or 6")
    lat = PicLattice(r)
    ls = lines(r)
    edges = frozenset((a, b) for a, b in itertools.combinations(range(len(ls)), 2) if lat.dot(ls[a], ls[b]) == 1)
    return IncidenceGraph(ls, edges)


def tritangents(r: int = 6) -> list[tuple[int, int, int]]:
    """Triples of pairwise meeting lines summing to ``-K``, as indices into ``lines(6)``."""
    if r != 6:
        raise ValueError("tritangent triples are defined for r = 6")
    lat = PicLattice(6)
    ls = lines(6)
    minus_k = tuple(-c for c in lat.canonical)
    out = []
    for a, b, c in itertools.combinations(range(len(ls)), 3):
        if lat.dot(ls[a], ls[b]) == lat.dot(ls[a], ls[c]) == lat.dot(ls[b], ls[c]) == 1:
            if tuple(x + y + z for x, y, z in zip(ls[a], ls[b], ls[c])) == minus_k:
                out.append((a, b, c))
    return out


DoubleSix = tuple[tuple[int, ...], tuple[int, ...]]


def double_sixes() -> list[DoubleSix]:
    """Pairs of sextuples of skew lines, each line of one meeting exactly five of the other.

    Each double-six appears once, as ``(A, B)`` with ``A`` holding the smaller index;
    ``A[i]`` and ``B[i]`` are the two lines of the double-six that do not meet.
    """
    lat = PicLattice(6)
    ls = lines(6)
    n = len(ls)
    meet = [[lat.dot(ls[a], ls[b]) for b in range(n)] for a in range(n)]

    def skew_sixes(chosen):
        if len(chosen) == 6:
            yield tuple(chosen)
            return
        start = chosen[-1] + 1 if chosen else 0
        for x in range(start, n):
            if all(meet[x][y] == 0 for y in chosen):
                yield from skew_sixes(chosen + [x])

    sixes = list(skew_sixes([]))
    out = []
    for a in sixes:
        rest = [x for x in range(n) if x not in a and sum(meet[x][y] for y in a) == 5]
        if len(rest) != 6 or any(meet[x][y] for x, y in itertools.combinations(rest, 2)):
            continue
        # order B so that B[i] is the one line missing A[i]
        b = tuple(next(x for x in rest if meet[x][ai] == 0) for ai in a)
        if a < tuple(sorted(b)):
            out.append((a, b))
    return out


def weyl_generators(r: int) -> list[Perm]:
    """Simple reflections acting on the lines."""
    lat = PicLattice(r)
    ls = lines(r)
    index = {d: k for k, d in enumerate(ls)}
    return [Perm([index[lat.reflect(d, a)] for d in ls]) for a in lat.simple_roots()]


def weyl_orders(r: int) -> tuple[int, int]:
    """(group order, line-stabilizer order) for the reflection group acting on lines."""
    if r not in (5, 6):
        raise ValueError("Weyl orders are computed for r = 5 or 6")
    gens = weyl_generators(r)
    return group_order(gens), stabilizer_order(gens, 0)


def line_orbits(r: int) -> list[list[int]]:
    return orbits(weyl_generators(r))


def double_six_orbit() -> int:
    """Size of the orbit of one double-six (as an unordered pair of sextuples)."""
    gens = weyl_generators(6)
    ds = double_sixes()[0]
    key = lambda a, b: frozenset((frozenset(a), frozenset(b)))
    start = key(*ds)
    seen = {start}
    frontier = [start]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            img = frozenset(frozenset(g.images[x] for x in half) for half in cur)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return len(seen)


@dataclass(frozen=True)
class MarkedClassification:
    mark: Divisor
    meeting: tuple[Divisor, ...]
    disjoint: tuple[Divisor, ...]

    @property
    def sizes(self) -> tuple[int, int, int]:
        return 1, len(self.meeting), len(self.disjoint)


def mark_and_classify(mark: Divisor | None = None) -> MarkedClassification:
    """Split the 27 lines by their intersection with a marked line (default ``e_6``)."""
    lat = PicLattice(6)
    mark = lat.e(6) if mark is None else tuple(mark)
    if not lat.is_line(mark):
        raise ValueError(f"{format_class(mark)} is not a line")
    ls = lines(6)
    return MarkedClassification(
        mark,
        tuple(d for d in ls if lat.dot(d, mark) == 1),
        tuple(d for d in ls if d != mark and lat.dot(d, mark) == 0),
    )


def mark_stabilizer_generators(mark_index: int = 5) -> list[Perm]:
    """Generators of the stabilizer of a line, from the reflections fixing it."""
    lat = PicLattice(6)
    ls = lines(6)
    index = {d: k for k, d in enumerate(ls)}
    mark = ls[mark_index]
    roots = [a for a in _roots(6) if lat.dot(a, mark) == 0]
    return [Perm([index[lat.reflect(d, a)] for d in ls]) for a in roots]


@lru_cache(maxsize=None)
def _roots(r: int) -> tuple[Divisor, ...]:
    lat = PicLattice(r)
    out = []
    for d in range(-3, 4):
        for cs in itertools.product(range(-2, 3), repeat=r):
            a = (d,) + cs
            if lat.dot(a, a) == -2 and lat.dot(a, lat.canonical) == 0:
                out.append(a)
    return tuple(out)


# ----------------------------------------------------------------------------
# degenerations
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class NodalStructure:
    """Images of the 27 lines when a double-six collapses pairwise.

    Objects ``("l", i)`` (the doubled lines through the node) and ``("l", i, j)``.
    ``incidence`` holds pairs of objects meeting away from the node.
    """

    objects: tuple[tuple, ...]
    multiplicity: dict
    incidence: frozenset[frozenset]
    through_node: tuple[tuple, ...]
    conflicts: tuple[tuple, ...]

    def meets(self, a: tuple, b: tuple) -> bool:
        return frozenset((a, b)) in self.incidence


def nodal_specialize() -> NodalStructure:
    """Quotient of the 27-line incidence identifying ``a_i = e_i`` with
    ``b_i = 2h - sum_{k != i} e_k``; the classes ``h - e_i - e_j`` stay put."""
    lat = PicLattice(6)
    ls = lines(6)
    obj_of: dict[Divisor, tuple] = {}
    for i in range(1, 7):
        obj_of[lat.e(i)] = ("l", i - 1)
        obj_of[tuple([2] + [0 if k == i else -1 for k in range(1, 7)])] = ("l", i - 1)
    for i, j in itertools.combinations(range(1, 7), 2):
        obj_of[tuple([1] + [-1 if k in (i, j) else 0 for k in range(1, 7)])] = ("l", i - 1, j - 1)
    if set(obj_of) != set(ls):
        raise AssertionError("double-six quotient does not cover the 27 lines")
    objects = tuple(sorted(set(obj_of.values()), key=lambda o: (len(o), o)))
    mult = {o: sum(1 for v in obj_of.values() if v == o) for o in objects}
    meets: dict[frozenset, set[int]] = {}
    for a, b in itertools.combinations(ls, 2):
        oa, ob = obj_of[a], obj_of[b]
        if oa == ob:
            continue
        meets.setdefault(frozenset((oa, ob)), set()).add(lat.dot(a, b))
    doubled = tuple(o for o in objects if mult[o] == 2)
    incidence, conflicts = set(), []
    for pair, vals in meets.items():
        if len(vals) == 1:
            if vals == {1}:
                incidence.add(pair)
        elif all(o in doubled for o in pair):
            # two doubled lines: one preimage pair meets, the other does not; they meet at the node
            continue
        else:
            conflicts.append(tuple(sorted(pair)))
    return NodalStructure(objects, mult, frozenset(incidence), doubled, tuple(conflicts))


def nodal_rule(a: tuple, b: tuple) -> bool:
    """Incidence away from the node, predicted from the indices alone."""
    if len(a) == 2 and len(b) == 2:
        return False
    if len(a) == 2:
        a, b = b, a
    if len(b) == 2:
        return b[1] in a[1:]
    return not set(a[1:]) & set(b[1:])


def permute_object(perm: Sequence[int], o: tuple) -> tuple:
    if len(o) == 2:
        return ("l", perm[o[1]])
    i, j = sorted((perm[o[1]], perm[o[2]]))
    return ("l", i, j)


@dataclass(frozen=True)
class SegreStructure:
    rulings: tuple[int, ...]
    planes: tuple[tuple[int, int], ...]
    incidence: frozenset[tuple[int, tuple[int, int]]]
    """``(i, (j, k))`` when ruling ``R_i`` meets plane ``Pi_jk``."""
    ruling_triples: tuple[tuple, ...]
    """``(R_i, R_j, Pi_ij)``."""
    plane_triples: tuple[tuple, ...]
    """Three planes indexed by a partition of ``{0..5}`` into pairs."""


def segre_structure() -> SegreStructure:
    rulings = tuple(range(6))
    planes = tuple(itertools.combinations(range(6), 2))
    inc = frozenset((i, p) for i in rulings for p in planes if i in p)
    rt = tuple((i, j, (i, j)) for i, j in planes)
    pt = tuple(sorted(
        {tuple(sorted(part)) for part in _pair_partitions(tuple(range(6)))}
    ))
    return SegreStructure(rulings, planes, inc, rt, pt)


def _pair_partitions(items: tuple[int, ...]):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, x in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _pair_partitions(remaining):
            yield ((first, x),) + tail


def pentagon(components: int = 5) -> GluedCover:
    """``components`` general lines as a trivial cover of P^1, every two glued once."""
    pairs = list(itertools.combinations(range(components), 2))
    labels = tuple(f"b{k + 1}" for k in range(len(pairs)))
    ident = Perm.identity(components)
    cover = MonodromyCover(BaseCurve(0, labels), components, (), (ident,) * len(pairs))
    nodes = tuple(Node(FiberPoint(lab, i), FiberPoint(lab, j)) for lab, (i, j) in zip(labels, pairs))
    return GluedCover(cover, nodes)


def plane_curve_genus(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


@dataclass(frozen=True)
class DualGraph:
    components: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    """One entry per intersection point between two components (with repeats)."""
    special_points: tuple[tuple[str, ...], ...] = ()
    """Points shared by three or more components, kept apart from the edges."""


def wheel() -> DualGraph:
    """A conic with three concurrent lines."""
    comps = ("Q", "L1", "L2", "L3")
    edges = tuple((("Q", f"L{k}")) for k in (1, 2, 3) for _ in range(2))
    return DualGraph(comps, edges, (("L1", "L2", "L3"),))


__all__ = [
    "PicLattice", "Divisor", "format_class", "lines", "lines_wide_search", "IncidenceGraph",
    "incidence_graph", "tritangents", "double_sixes", "weyl_generators", "weyl_orders",
    "line_orbits", "double_six_orbit", "MarkedClassification", "mark_and_classify",
    "mark_stabilizer_generators", "NodalStructure", "nodal_specialize", "nodal_rule",
    "permute_object", "SegreStructure", "segre_structure", "pentagon", "plane_curve_genus",
    "DualGraph", "wheel",
]
