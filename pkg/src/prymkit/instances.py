"""Seeded random covers and double towers.

Permutations are drawn freely for all labels but the last, which is set to the
inverse of the prefix product. Signs are then found by solving the product
relation together with the prescribed branching as a linear system over GF(2):
with the permutations fixed, the sign part of the relation is linear in the
signs.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence

from . import gf2
from .cover import BaseCurve, FiberPoint, GluedCover, MonodromyCover, Node, SignedTower
from .perm import Perm, commutator, product
from .weyl import SignedPerm, sp_commutator, sp_product, wc_elements

PermSampler = Callable[[random.Random], Perm]
Pattern = Callable[[random.Random, str, Perm], Sequence[int]]


def labels_for(k: int) -> tuple[str, ...]:
    return tuple(f"b{i + 1}" for i in range(k))


def uniform_sampler(n: int) -> PermSampler:
    def draw(rng: random.Random) -> Perm:
        imgs = list(range(n))
        rng.shuffle(imgs)
        return Perm(imgs)

    return draw


def choice_sampler(perms: Sequence[Perm]) -> PermSampler:
    perms = list(perms)
    return lambda rng: rng.choice(perms)


def random_cover(
    rng: random.Random,
    degree: int,
    n_labels: int,
    base_genus: int = 0,
    sampler: PermSampler | None = None,
    handle_sampler: PermSampler | None = None,
    connected: bool = True,
    max_tries: int = 2000,
) -> MonodromyCover:
    sampler = sampler or uniform_sampler(degree)
    handle_sampler = handle_sampler or uniform_sampler(degree)
    base = BaseCurve(base_genus, labels_for(n_labels))
    for _ in range(max_tries):
        handles = [handle_sampler(rng) for _ in range(2 * base_genus)]
        prefix = [sampler(rng) for _ in range(n_labels - 1)]
        comms = [commutator(handles[2 * i], handles[2 * i + 1]) for i in range(base_genus)]
        last = product(comms + prefix, degree).inverse()
        cov = MonodromyCover(base, degree, tuple(handles), tuple(prefix + [last]))
        if not connected or cov.is_connected():
            return cov
    raise RuntimeError("could not draw a connected cover")


def etale_pattern(rng: random.Random, label: str, perm: Perm) -> list[int]:
    return [0] * len(perm.cycles())


def _relation_eps(cover: MonodromyCover, eps: list[tuple[int, ...]]) -> tuple[int, ...]:
    n = cover.degree
    gens = [SignedPerm(p, e) for p, e in zip(cover.generators(), eps)]
    h = cover.base.genus
    parts = [sp_commutator(gens[2 * i], gens[2 * i + 1]) for i in range(h)] + gens[2 * h:]
    rel = sp_product(parts, n)
    return rel.eps


def solve_signs(
    cover: MonodromyCover,
    rng: random.Random | None,
    pattern: Pattern = etale_pattern,
) -> SignedTower | None:
    """Signs on ``cover`` satisfying the relation, with branching of the double cover
    at exactly the points where ``pattern`` asks for odd cycle sums."""
    n = cover.degree
    gens = cover.generators()
    nvars = n * len(gens)
    zero = [(0,) * n for _ in gens]
    columns = []
    for v in range(nvars):
        eps = list(zero)
        j, i = divmod(v, n)
        e = [0] * n
        e[i] = 1
        eps[j] = tuple(e)
        columns.append(_relation_eps(cover, eps))
    rows, rhs = [], []
    for i in range(n):
        rows.append(sum(1 << v for v in range(nvars) if columns[v][i]))
        rhs.append(0)
    offset = 2 * cover.base.genus
    for b, (lab, p) in enumerate(zip(cover.labels, cover.branches)):
        want = list(pattern(rng, lab, p)) if rng is not None else pattern(random.Random(0), lab, p)
        for cyc, bit in zip(p.cycles(), want):
            rows.append(sum(1 << ((offset + b) * n + i) for i in cyc))
            rhs.append(bit)
    x = gf2.solve(rows, rhs, nvars, rng)
    if x is None:
        return None
    elems = []
    for j, p in enumerate(gens):
        elems.append(SignedPerm(p, tuple((x >> (j * n + i)) & 1 for i in range(n))))
    h2 = 2 * cover.base.genus
    return SignedTower(cover.base, n, tuple(elems[:h2]), tuple(elems[h2:]))


def random_tower(
    rng: random.Random,
    degree: int,
    n_labels: int,
    base_genus: int = 0,
    sampler: PermSampler | None = None,
    pattern: Pattern = etale_pattern,
    connected: bool = True,
    nonsplit: bool = True,
    accept: Callable[[SignedTower], bool] | None = None,
    max_tries: int = 2000,
) -> SignedTower:
    """A random double tower whose middle curve is connected and, if ``nonsplit``,
    whose top curve is connected too."""
    for _ in range(max_tries):
        cov = random_cover(rng, degree, n_labels, base_genus, sampler, connected=connected)
        t = solve_signs(cov, rng, pattern)
        if t is None:
            continue
        if nonsplit and len(t.tilde.components()) != len(cov.components()):
            continue
        if accept is not None and not accept(t):
            continue
        return t
    raise RuntimeError("could not draw a tower with the requested properties")


def trivial_tower(cover: MonodromyCover) -> SignedTower:
    n = cover.degree
    return SignedTower(cover.base, n,
                       tuple(SignedPerm(p, (0,) * n) for p in cover.handles),
                       tuple(SignedPerm(p, (0,) * n) for p in cover.branches))


def random_bigonal_input(
    rng: random.Random,
    n_labels: int,
    base_genus: int = 0,
    glue_prob: float = 0.5,
) -> SignedTower | GluedCover:
    """A random degree-2 tower with uniform WC_2 monodromy, the last label fixing the
    relation. Labels where ``C`` is unbranched and ``C~`` branches at both points are
    glued with probability ``glue_prob``."""
    elems = wc_elements(2)
    base = BaseCurve(base_genus, labels_for(n_labels))
    handles = [rng.choice(elems) for _ in range(2 * base_genus)]
    prefix = [rng.choice(elems) for _ in range(n_labels - 1)]
    comms = [sp_commutator(handles[2 * i], handles[2 * i + 1]) for i in range(base_genus)]
    last = sp_product(comms + prefix, 2).inverse()
    t = SignedTower(base, 2, tuple(handles), tuple(prefix + [last]))
    nodes = tuple(
        Node(FiberPoint(lab, 0), FiberPoint(lab, 1))
        for lab, e in zip(base.labels, t.branches)
        if e.sigma.is_identity() and e.eps == (1, 1) and rng.random() < glue_prob
    )
    return GluedCover(t, nodes) if nodes else t
