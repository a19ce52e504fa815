"""Random double towers over bihyperelliptic curves ``C -> H -> P^1``.

Sheets of ``C`` are numbered ``2h + c`` with ``h`` a sheet of ``H``, so the
pairs ``{0, 1}`` and ``{2, 3}`` lie over the two sheets of ``H``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .cover import BaseCurve, MonodromyCover, SignedTower
from .instances import labels_for, solve_signs
from .perm import Perm, product
from .polygonal.bielliptic import HyperellipticFactorization, hyperelliptic_factorizations, is_cartesian_over
from .weyl import SignedPerm

H_BLOCKS = ((0, 1), (2, 3))


def _random_h(rng: random.Random, n_labels: int, h_branch: int) -> MonodromyCover:
    """A double cover of P^1 swapping sheets over exactly ``h_branch`` of the labels."""
    if h_branch % 2 or h_branch > n_labels:
        raise ValueError("need an even number of branch points not exceeding the labels")
    swap, ident = Perm((1, 0)), Perm((0, 1))
    chosen = set(rng.sample(range(n_labels), h_branch))
    perms = tuple(swap if k in chosen else ident for k in range(n_labels))
    return MonodromyCover(BaseCurve(0, labels_for(n_labels)), 2, (), perms)


@dataclass(frozen=True)
class CartesianInstance:
    tower: SignedTower
    h: MonodromyCover
    factors: tuple[SignedTower, SignedTower]
    """The double covers ``C^0 -> H`` and ``C^1 -> H`` as degree-2 towers over P^1."""


def cartesian_instance(rng: random.Random, h_branch: int = 4, b0: int = 2, b1: int = 2,
                       extra: int = 2, max_tries: int = 200) -> CartesianInstance:
    """``C~ = C^0 x_H C^1`` over ``C = C~ / (t0 t1)``.

    ``H`` has ``h_branch`` branch points; ``C^0`` and ``C^1`` are branched over
    ``b0`` and ``b1`` points of ``H`` lying over distinct base points where ``H``
    is unbranched, so ``C~ -> C`` is unbranched. ``extra`` further labels are
    unbranched everywhere.
    """
    if b0 % 2 or b1 % 2 or b0 < 2 or b1 < 2:
        raise ValueError("each factor needs a positive even number of branch points")
    n_labels = h_branch + b0 + b1 + extra
    for _ in range(max_tries):
        h = _random_h(rng, n_labels, h_branch)
        free = [lab for lab, p in zip(h.labels, h.branches) if p.is_identity()]
        rng.shuffle(free)
        where = [set(free[:b0]), set(free[b0:b0 + b1])]
        side = {lab: rng.randrange(2) for lab in free}

        def pattern(which):
            return lambda r, lab, p: [int(lab in where[which] and k == side[lab]) for k in range(len(p.cycles()))]

        c0 = solve_signs(h, rng, pattern(0))
        c1 = solve_signs(h, rng, pattern(1))
        if c0 is None or c1 is None:
            raise AssertionError("even branch sets always admit signs")
        elems = []
        for g0, g1 in zip(c0.branches, c1.branches):
            sig = g0.sigma
            imgs, eps = [0] * 4, [0] * 4
            for hs in (0, 1):
                for c in (0, 1):
                    imgs[2 * hs + c] = 2 * sig.images[hs] + (c ^ g0.eps[hs] ^ g1.eps[hs])
                    eps[2 * hs + c] = g0.eps[hs]
            elems.append(SignedPerm(Perm(imgs), tuple(eps)))
        t = SignedTower(h.base, 4, (), tuple(elems))
        if not t.cover.is_connected() or not t.tilde.is_connected():
            continue
        return CartesianInstance(t, h, (c0, c1))
    raise RuntimeError("could not draw a Cartesian bihyperelliptic tower")


def _block_preserving() -> list[Perm]:
    out = []
    for p in itertools.permutations(range(4)):
        perm = Perm(p)
        if {frozenset(perm.images[x] for x in b) for b in H_BLOCKS} == {frozenset(b) for b in H_BLOCKS}:
            out.append(perm)
    return out


def h_image(p: Perm) -> Perm:
    return Perm((1, 0)) if p.images[0] in (2, 3) else Perm((0, 1))


def bielliptic_noncartesian_instance(rng: random.Random, n_labels: int = 7, max_tries: int = 5000) -> SignedTower:
    """A connected unbranched double cover of a connected ``C -> E -> P^1`` with ``E`` of
    genus 1 (four branch points) that is not Cartesian over ``E``.

    Branching is generic: no base point carries two branch points of ``C -> E``,
    and ``C -> E`` branches somewhere.
    """
    both = Perm((1, 0, 3, 2))
    dihedral = [p for p in _block_preserving() if p != both]
    base = BaseCurve(0, labels_for(n_labels))
    fac_blocks = H_BLOCKS
    for _ in range(max_tries):
        prefix = [rng.choice(dihedral) for _ in range(n_labels - 1)]
        last = product(prefix, 4).inverse()
        perms = prefix + [last]
        if last == both:
            continue
        if sum(1 for p in perms if h_image(p).images[0] == 1) != 4:
            continue
        cov = MonodromyCover(base, 4, (), tuple(perms))
        # C -> E must branch somewhere, so genus(C) >= 2
        if not cov.is_connected() or cov.genus()[0] < 2:
            continue
        t = solve_signs(cov, rng)
        if t is None or not t.tilde.is_connected():
            continue
        facs = [f for f in hyperelliptic_factorizations(t.cover) if tuple(f.blocks) == fac_blocks]
        if not facs or is_cartesian_over(t, facs[0]):
            continue
        return t
    raise RuntimeError("could not draw a non-Cartesian bielliptic tower")


def e_factorization(t: SignedTower) -> HyperellipticFactorization:
    return next(f for f in hyperelliptic_factorizations(t.cover) if tuple(f.blocks) == H_BLOCKS)
