"""Direct images of double towers: the cover of sections and its quotients."""

from __future__ import annotations

from dataclasses import dataclass

from ..cover import MonodromyCover, SignedTower
from ..perm import Perm
from ..weyl import (
    class_action,
    orientation_char,
    section_action,
    section_involution,
)


@dataclass(frozen=True)
class DirectImage:
    cover: MonodromyCover
    """Sections of ``C~ -> C`` over the base, degree ``2^n``."""
    involution: Perm
    """Complementation of sections."""
    class_quotient: MonodromyCover
    """Complementary pairs of sections, degree ``2^(n-1)``."""
    orientation: MonodromyCover
    """Degree-2 cover swapping its sheets wherever the orientation character is odd."""


def orientation_cover(t: SignedTower) -> MonodromyCover:
    swap = Perm((1, 0))
    ident = Perm((0, 1))
    pick = lambda g: swap if orientation_char(g) else ident
    return MonodromyCover(t.base, 2, tuple(map(pick, t.handles)), tuple(map(pick, t.branches)))


def orientation_splits(t: SignedTower) -> bool:
    return not any(orientation_char(g) for g in t.generators())


def direct_image(t: SignedTower) -> DirectImage:
    n = t.degree
    cov = MonodromyCover(t.base, 1 << n, tuple(map(section_action, t.handles)), tuple(map(section_action, t.branches)))
    cls = MonodromyCover(t.base, 1 << (n - 1), tuple(map(class_action, t.handles)), tuple(map(class_action, t.branches)))
    return DirectImage(cov, section_involution(n), cls, orientation_cover(t))
