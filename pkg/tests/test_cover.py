import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymkit.cover import (
    BaseCurve,
    FiberPoint,
    GluedCover,
    MonodromyCover,
    Node,
    RelationError,
    SignedTower,
    build_boundary_example,
    covers_isomorphic,
    towers_isomorphic,
)
from prymkit.instances import labels_for, random_cover, random_tower, solve_signs
from prymkit.perm import Perm
from prymkit.weyl import SignedPerm, wc_elements


def euler_genus(cover: MonodromyCover) -> int:
    """Genus of a connected cover from a cell count: the punctured base lifts to
    ``n`` copies, then one point is added per cycle over each label."""
    h, k, n = cover.base.genus, len(cover.labels), cover.degree
    chi = n * (2 - 2 * h - k) + sum(len(p.cycles()) for p in cover.branches)
    assert chi % 2 == 0
    return (2 - chi) // 2


seeds = st.integers(0, 10 ** 9)


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(2, 6), st.integers(2, 8), st.integers(0, 2))
def test_genus_matches_cell_count(seed, n, k, h):
    cov = random_cover(random.Random(seed), n, k, base_genus=h)
    assert cov.genus() == [euler_genus(cov)]


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(2, 5), st.integers(5, 8))
def test_unbranched_double_cover_genus(seed, n, k):
    t = random_tower(random.Random(seed), n, k)
    (g,) = t.cover.genus()
    assert t.is_etale_double()
    assert t.tilde.genus() == [2 * g - 1]


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 4), st.integers(5, 7))
def test_relabelled_tower_is_isomorphic(seed, n, k):
    rng = random.Random(seed)
    t = random_tower(rng, n, k)
    c = rng.choice(wc_elements(n))
    w = towers_isomorphic(t, t.relabel(c))
    assert w is not None
    assert t.relabel(w) == t.relabel(c)
    assert covers_isomorphic(t.cover, t.cover.relabel(c.sigma)) is not None


def test_relation_is_enforced():
    base = BaseCurve(0, labels_for(3))
    ps = tuple(Perm.parse(s, 3) for s in ("(1 2)", "(2 3)", "(1 2)"))
    with pytest.raises(RelationError, match=r"residual permutation \(1 3\)"):
        MonodromyCover(base, 3, (), ps)


def test_signed_relation_is_enforced():
    base = BaseCurve(0, labels_for(2))
    a = SignedPerm.parse("(1 2)", "10", 2)
    b = SignedPerm.parse("(1 2)", "00", 2)
    with pytest.raises(RelationError):
        SignedTower(base, 2, (), (a, b))


@pytest.mark.parametrize("bad", [dict(genus=-1, labels=()), dict(genus=0, labels=("a", "a"))])
def test_base_curve_validation(bad):
    with pytest.raises(ValueError):
        BaseCurve(**bad)


def _hyperelliptic(signs):
    base = BaseCurve(0, labels_for(len(signs)))
    return SignedTower(base, 2, (), tuple(SignedPerm.parse("(1 2)", s, 2) for s in signs))


def test_genus_two_etale_tower():
    t = _hyperelliptic(["11", "00", "11", "00", "00", "00"])
    assert t.cover.genus() == [2]
    assert t.tilde.genus() == [3]
    assert t.is_etale_double()


def test_ramified_tower():
    with pytest.raises(RelationError):
        _hyperelliptic(["10", "00", "00", "00"])
    t = solve_signs(_elliptic_with_point(), None, lambda r, lab, p: [int(lab in ("b1", "b2"))] * len(p.cycles()))
    assert t.branch_count() == 2
    assert t.ramified_points("b1") == [0] and t.ramified_points("p") == []
    # 2g~ - 2 = 2(2g - 2) + b with g = 1, b = 2
    assert t.tilde.genus() == [2]


def _elliptic_with_point():
    base = BaseCurve(0, ("b1", "b2", "b3", "b4", "p"))
    sw = Perm.parse("(1 2)", 2)
    return MonodromyCover(base, 2, (), (sw, sw, sw, sw, Perm.identity(2)))


def test_wirtinger_type():
    x = _elliptic_with_point()
    g = build_boundary_example("I", x, FiberPoint("p", 0), FiberPoint("p", 1))
    assert g.is_allowable()
    assert g.degeneration_type() == "∂I"
    assert g.arithmetic_genus() == 2
    assert g.tilde_arithmetic_genus() == 3
    assert g.connected_components() == 1 and g.tilde_connected_components() == 1


def test_type_two_is_not_allowable():
    base = BaseCurve(0, ("b1", "b2", "b3", "b4", "p"))
    sw = SignedPerm.parse("(1 2)", "11", 2)
    fl = SignedPerm.parse("(1 2)", "00", 2)
    t = SignedTower(base, 2, (), (sw, sw, fl, fl, SignedPerm.identity(2)))
    g = build_boundary_example("II", t, FiberPoint("p", 0), FiberPoint("p", 1))
    assert g.degeneration_type() == "∂II"
    assert not g.is_allowable()


def test_type_three_is_allowable():
    t = solve_signs(_elliptic_with_point(), None, lambda r, lab, p: [int(lab == "p")] * len(p.cycles()))
    assert t.branch_count() == 2
    g = build_boundary_example("III", t, FiberPoint("p", 0), FiberPoint("p", 1))
    assert g.degeneration_type() == "∂III"
    assert g.is_allowable()


def test_glue_validation():
    x = _elliptic_with_point()
    p0, p1 = FiberPoint("p", 0), FiberPoint("p", 1)
    with pytest.raises(ValueError):
        GluedCover(x, (Node(p0, p0),))
    with pytest.raises(ValueError):
        GluedCover(x, (Node(p0, FiberPoint("p", 5)),))
    with pytest.raises(ValueError):
        GluedCover(x, (Node(p0, p1), Node(p1, FiberPoint("b1", 0))))
