"""Permutations on {0, ..., n-1}, permutation tuples and small group algorithms.

Points are 0-based internally. Text uses disjoint-cycle notation with 1-based
labels, fixed points omitted and the identity written ``()``.

``compose(a, b)`` applies ``b`` first, so ``compose((0 1), (1 2)) == (0 1 2)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Sequence


class Perm:
    """A permutation stored as its tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs}")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Perm":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Perm":
        """Build from 0-based cycles; points not mentioned are fixed."""
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < n:
                    raise ValueError(f"point {x} out of range for degree {n}")
                if x in seen:
                    raise ValueError(f"point {x} repeated in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a] = b
        return cls._raw(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> "Perm":
        """Parse 1-based cycle notation such as ``(1 2)(3 4 5)`` or ``(1,2)``."""
        s = text.strip()
        if s in ("", "()", "id", "e"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", s):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(tok) - 1 for tok in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^)]*)\)", s)
        ]
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles (fixed points included), ordered by smallest element."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_of(self, x: int) -> int:
        """Index of the cycle containing ``x`` in :meth:`cycles` order."""
        for k, cyc in enumerate(self.cycles()):
            if x in cyc:
                return k
        raise ValueError(x)

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def __str__(self) -> str:
        parts = ["(" + " ".join(str(x + 1) for x in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Perm({str(self)}, n={self.degree})"


def compose(a: Perm, b: Perm) -> Perm:
    """The product ``a*b``: apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    ai = a.images
    return Perm._raw(tuple(ai[j] for j in b.images))


def product(perms: Iterable[Perm], n: int) -> Perm:
    """Left-to-right product ``p1*p2*...*pk`` (``pk`` acts first)."""
    return reduce(compose, perms, Perm.identity(n))


def commutator(a: Perm, b: Perm) -> Perm:
    return product((a, b, a.inverse(), b.inverse()), a.degree)


def conjugate(c: Perm, a: Perm) -> Perm:
    """``c a c^-1``."""
    return compose(compose(c, a), c.inverse())


def cycle_type_and_sign(p: Perm) -> tuple[tuple[int, ...], int]:
    """Cycle lengths in decreasing order and the sign ``(-1)^(n - #cycles)``."""
    cyc = p.cycles()
    lengths = tuple(sorted((len(c) for c in cyc), reverse=True))
    return lengths, (-1) ** ((p.degree - len(cyc)) % 2)


@dataclass(frozen=True)
class PermTuple:
    """An ordered tuple of permutations of a common degree."""

    degree: int
    entries: tuple[Perm, ...]

    def __post_init__(self):
        for p in self.entries:
            if p.degree != self.degree:
                raise ValueError("degree mismatch in PermTuple")

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _entries(t: PermTuple | Sequence[Perm]) -> tuple[tuple[Perm, ...], int]:
    if isinstance(t, PermTuple):
        return t.entries, t.degree
    t = tuple(t)
    if not t:
        raise ValueError("empty permutation tuple needs an explicit degree (use PermTuple)")
    return t, t[0].degree


def orbits(t: PermTuple | Sequence[Perm], points: Iterable[int] | None = None) -> list[list[int]]:
    """Orbits of the group generated by ``t``, each sorted, ordered by minimum."""
    gens, n = _entries(t)
    pts = range(n) if points is None else points
    seen: set[int] = set()
    out = []
    for start in pts:
        if start in seen:
            continue
        orb = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for g in gens:
                y = g.images[x]
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        seen |= orb
        out.append(sorted(orb))
    return out


def is_transitive(t: PermTuple | Sequence[Perm]) -> bool:
    return len(orbits(t)) == 1


def _minimal_block(gens: Sequence[Perm], seed: Iterable[int], n: int) -> list[int]:
    """Smallest block containing ``seed`` (union-find closure)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    seed = list(seed)
    pending = []
    for x in seed[1:]:
        if union(seed[0], x):
            pending.append((seed[0], x))
    while pending:
        x, y = pending.pop()
        for g in gens:
            gx, gy = g.images[x], g.images[y]
            if union(gx, gy):
                pending.append((gx, gy))
    root = find(seed[0])
    return [x for x in range(n) if find(x) == root]


def _partition_from_block(gens: Sequence[Perm], block: list[int], orbit: list[int]) -> tuple[tuple[int, ...], ...]:
    blocks = {tuple(block)}
    queue = [tuple(block)]
    while queue:
        b = queue.pop()
        for g in gens:
            nb = tuple(sorted(g.images[x] for x in b))
            if nb not in blocks:
                blocks.add(nb)
                queue.append(nb)
    return tuple(sorted(blocks))


def block_systems(t: PermTuple | Sequence[Perm]) -> list[tuple[tuple[int, ...], ...]]:
    """All nontrivial block systems.

    For a transitive tuple this returns every system of imprimitivity other than
    the singletons and the whole set, each as a sorted tuple of sorted blocks.
    For an intransitive tuple the systems of each orbit restriction are
    returned, each covering only its own orbit.

    Blocks containing a base point are joins of the minimal blocks generated by
    pairs, so closing the pair blocks under joins reaches all of them.
    """
    gens, n = _entries(t)
    result = []
    for orb in orbits(PermTuple(n, gens)):
        if len(orb) < 3:
            continue
        base = orb[0]
        found: set[tuple[int, ...]] = set()
        frontier = []
        for b in orb[1:]:
            blk = tuple(_minimal_block(gens, (base, b), n))
            if blk not in found:
                found.add(blk)
                frontier.append(blk)
        atoms = list(found)
        while frontier:
            blk = frontier.pop()
            for other in atoms:
                if set(other) <= set(blk):
                    continue
                joined = tuple(_minimal_block(gens, sorted(set(blk) | set(other)), n))
                if joined not in found:
                    found.add(joined)
                    frontier.append(joined)
        for blk in sorted(found, key=lambda b: (len(b), b)):
            if 1 < len(blk) < len(orb):
                result.append(_partition_from_block(gens, list(blk), orb))
    return result


def block_action(t: PermTuple | Sequence[Perm], partition: Sequence[Sequence[int]]) -> PermTuple:
    """Induced action of ``t`` on the blocks of an invariant partition."""
    gens, n = _entries(t)
    index = {}
    for k, blk in enumerate(partition):
        for x in blk:
            index[x] = k
    out = []
    for g in gens:
        imgs = []
        for blk in partition:
            targets = {index[g.images[x]] for x in blk}
            if len(targets) != 1:
                raise ValueError("partition is not invariant")
            imgs.append(targets.pop())
        out.append(Perm(imgs))
    return PermTuple(len(partition), tuple(out))


# ----------------------------------------------------------------------------
# Schreier-Sims
# ----------------------------------------------------------------------------


@dataclass
class StabilizerChain:
    """Base, strong generators and transversals of a permutation group."""

    degree: int
    base: list[int]
    strong: list[list[Perm]]
    transversals: list[dict[int, Perm]]

    def order(self) -> int:
        out = 1
        for tr in self.transversals:
            out *= len(tr)
        return out

    def contains(self, g: Perm) -> bool:
        h, level = _sift(self, g, 0)
        return level == len(self.base) and h.is_identity()


def _orbit_transversal(point: int, gens: Sequence[Perm], n: int) -> dict[int, Perm]:
    trans = {point: Perm.identity(n)}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        tx = trans[x]
        for s in gens:
            y = s.images[x]
            if y not in trans:
                trans[y] = compose(s, tx)
                queue.append(y)
    return trans


def _sift(chain: StabilizerChain, g: Perm, start: int) -> tuple[Perm, int]:
    for level in range(start, len(chain.base)):
        b = chain.base[level]
        img = g.images[b]
        u = chain.transversals[level].get(img)
        if u is None:
            return g, level
        g = compose(u.inverse(), g)
    return g, len(chain.base)


def stabilizer_chain(gens: Sequence[Perm], n: int, base_prefix: Sequence[int] = ()) -> StabilizerChain:
    """Deterministic Schreier-Sims.

    ``base_prefix`` fixes the first base points, so that e.g. the stabilizer
    of ``base_prefix[0]`` is described by levels 1 onward.
    """
    gens = [g for g in gens if not g.is_identity()]
    chain = StabilizerChain(n, list(base_prefix), [], [])
    for _ in chain.base:
        chain.strong.append([])
        chain.transversals.append({})
    if not gens:
        for k, b in enumerate(chain.base):
            chain.transversals[k] = {b: Perm.identity(n)}
        return chain

    def fixes_prefix(g: Perm, upto: int) -> bool:
        return all(g.images[chain.base[j]] == chain.base[j] for j in range(upto))

    for g in gens:
        if fixes_prefix(g, len(chain.base)):
            chain.base.append(g.moved_points()[0])
            chain.strong.append([])
            chain.transversals.append({})
            break
    for level in range(len(chain.base)):
        chain.strong[level] = [g for g in gens if fixes_prefix(g, level)]
        chain.transversals[level] = _orbit_transversal(chain.base[level], chain.strong[level], n)

    level = len(chain.base) - 1
    while level >= 0:
        restart = None
        trans = chain.transversals[level]
        for x, ux in list(trans.items()):
            for s in chain.strong[level]:
                y = s.images[x]
                schreier = compose(trans[y].inverse(), compose(s, ux))
                h, j = _sift(chain, schreier, level + 1)
                if j == len(chain.base) and h.is_identity():
                    continue
                if j == len(chain.base):
                    chain.base.append(h.moved_points()[0])
                    chain.strong.append([])
                    chain.transversals.append({})
                for m in range(level + 1, j + 1):
                    chain.strong[m].append(h)
                    chain.transversals[m] = _orbit_transversal(chain.base[m], chain.strong[m], n)
                restart = j
                break
            if restart is not None:
                break
        if restart is not None:
            level = restart
        else:
            level -= 1
    return chain


def group_order(t: PermTuple | Sequence[Perm]) -> int:
    """Order of the group generated by ``t`` (Schreier-Sims, degree <= 32)."""
    gens, n = _entries(t)
    if n > 32:
        raise ValueError("group_order supports degree <= 32")
    return stabilizer_chain(gens, n).order()


def stabilizer_order(t: PermTuple | Sequence[Perm], point: int) -> int:
    gens, n = _entries(t)
    chain = stabilizer_chain(gens, n, (point,))
    return chain.order() // len(chain.transversals[0])


def group_elements(t: PermTuple | Sequence[Perm], limit: int = 100_000) -> list[Perm]:
    """All elements of the generated group by breadth-first closure."""
    gens, n = _entries(t)
    ident = Perm.identity(n)
    seen = {ident}
    out = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > limit:
                    raise ValueError(f"group exceeds enumeration limit {limit}")
                queue.append(y)
    return out


def conjugates_to(c: Perm, a: Sequence[Perm], b: Sequence[Perm]) -> bool:
    """True iff ``c a_i c^-1 == b_i`` for every i (checked as ``c a_i = b_i c``)."""
    ci = c.images
    for x, y in zip(a, b):
        xi, yi = x.images, y.images
        for p in range(len(ci)):
            if ci[xi[p]] != yi[ci[p]]:
                return False
    return True


def simultaneous_conjugacy(
    a: PermTuple | Sequence[Perm],
    b: PermTuple | Sequence[Perm],
    g: PermTuple | Sequence[Perm],
    limit: int = 100_000,
) -> Perm | None:
    """Some ``c`` in the group generated by ``g`` with ``c a_i c^-1 = b_i``, or None."""
    ea, n = _entries(a) if len(a) else ((), None)
    eb = tuple(b)
    if len(ea) != len(eb):
        return None
    if any(cycle_type_and_sign(x) != cycle_type_and_sign(y) for x, y in zip(ea, eb)):
        return None
    for c in group_elements(g, limit):
        if conjugates_to(c, ea, eb):
            return c
    return None


def symmetric_group_generators(n: int) -> tuple[Perm, ...]:
    if n < 2:
        return (Perm.identity(max(n, 0)),)
    return (Perm.from_cycles([(0, 1)], n), Perm.from_cycles([tuple(range(n))], n))
