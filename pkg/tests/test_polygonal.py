import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymkit.cover import BaseCurve, MonodromyCover, as_glued, covers_isomorphic, towers_isomorphic
from prymkit.instances import random_bigonal_input, random_cover, random_tower, trivial_tower
from prymkit.perm import Perm, group_order
from prymkit.polygonal import (
    LocalNode,
    bigonal,
    branch_counts,
    classify,
    direct_image,
    local_picture,
    local_pictures,
    orientation_splits,
    tetragonal,
    trigonal_forward,
    trigonal_inverse,
)
from prymkit.weyl import SignedPerm, embed_2n, wc_elements

seeds = st.integers(0, 10 ** 9)


def section_orbit_sizes(t):
    """Orbits of the monodromy on sets of ``n`` points of ``C~`` taking one point over each sheet of ``C``."""
    n = t.degree
    gens = [embed_2n(g) for g in t.generators()]
    sections = [frozenset(2 * j + (s >> j & 1) for j in range(n)) for s in range(1 << n)]
    left, sizes = set(sections), []
    while left:
        start = left.pop()
        orbit, frontier = {start}, [start]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                img = frozenset(g(x) for x in cur)
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        left -= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 5), st.integers(3, 7))
def test_direct_image_matches_section_orbits(seed, n, k):
    t = random_tower(random.Random(seed), n, k, nonsplit=False)
    di = direct_image(t)
    assert di.cover.degree == 2 ** n
    assert sorted(map(len, di.cover.components())) == section_orbit_sizes(t)
    assert di.class_quotient.degree == 2 ** (n - 1)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_split_direct_image_degrees(seed):
    rng = random.Random(seed)
    cov = random_cover(rng, 4, rng.randint(3, 8))
    degrees = sorted(map(len, direct_image(trivial_tower(cov)).cover.components()))
    if group_order(cov.generators()) == 24:
        assert degrees == [1, 1, 4, 4, 6]
    # subsets of each size are permuted among themselves whatever the monodromy
    assert sum(degrees) == 16


def test_split_direct_image_needs_full_monodromy():
    # a 4-cycle alone generates a cyclic group, under which the 2-subsets split as 4 + 2
    c = Perm.parse("(1 2 3 4)", 4)
    cov = MonodromyCover(BaseCurve(0, ("b1", "b2")), 4, (), (c, c.inverse()))
    assert sorted(map(len, direct_image(trivial_tower(cov)).cover.components())) == [1, 1, 2, 4, 4, 4]


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_orientation_cover_splits_on_even_monodromy(seed):
    rng = random.Random(seed)
    t = random_tower(rng, 3, rng.randint(3, 6), nonsplit=False,
                     pattern=lambda r, lab, p: [r.randrange(2) for _ in p.cycles()])
    di = direct_image(t)
    assert orientation_splits(t) == (len(di.orientation.components()) == 2)
    assert orientation_splits(t) == all(sum(g.eps) % 2 == 0 for g in t.generators())


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_recillas_genus_and_bijection(seed):
    rng = random.Random(seed)
    t = random_tower(rng, 3, rng.randint(3, 9))
    x = trigonal_forward(t)
    assert isinstance(x, MonodromyCover)
    assert x.degree == 4
    assert x.genus() == [t.cover.genus()[0] - 1]
    assert towers_isomorphic(t, trigonal_inverse(x)) is not None


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_trigonal_inverse_then_forward(seed):
    rng = random.Random(seed)
    x = random_cover(rng, 4, rng.randint(2, 8))
    assert covers_isomorphic(x, trigonal_forward(trigonal_inverse(x))) is not None


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_bigonal_is_an_involution_exchanging_branching(seed):
    rng = random.Random(seed)
    x = random_bigonal_input(rng, rng.randint(2, 8), rng.choice((0, 1)))
    y = bigonal(x)
    assert towers_isomorphic(x, bigonal(y)) is not None
    bf, bg = branch_counts(x)
    bf2, bg2 = branch_counts(y)
    assert bf2 == bg and bf == bg2
    assert as_glued(x).prym_dimension() == as_glued(y).prym_dimension()


def _same_pair(outs, expect):
    a, b = outs
    c, d = expect
    iso = lambda u, v: towers_isomorphic(u, v) is not None
    return (iso(a, c) and iso(b, d)) or (iso(a, d) and iso(b, c))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_tetragonal_triality(seed):
    rng = random.Random(seed)
    t = random_tower(rng, 4, rng.randint(3, 7), accept=lambda t: t.cover.is_connected())
    c0, c1 = tetragonal(t)
    assert _same_pair(tetragonal(c0), (t, c1))
    assert _same_pair(tetragonal(c1), (t, c0))
    genera = {as_glued(x).arithmetic_genus() for x in (t, c0, c1)}
    assert len(genera) == 1


def _sp(perm, signs):
    return SignedPerm.parse(perm, signs, len(signs))


@pytest.mark.parametrize("element,node,case,out", [
    (_sp("()", "00"), None, "i", "i"),
    (_sp("()", "10"), None, "ii", "iii"),
    (_sp("(1 2)", "00"), None, "iii", "ii"),
    (_sp("(1 2)", "10"), None, "iv", "iv"),
    (_sp("()", "11"), None, "v", "vi"),
])
def test_bigonal_local_cases(element, node, case, out):
    tag = local_picture("bigonal", element, node)
    assert tag.case == case
    (r,) = tag.outputs
    assert classify("bigonal", r.element, r.nodes[0] if r.nodes else None) == out


def test_bigonal_case_vi_unglues():
    tag = local_picture("bigonal", _sp("()", "11"), LocalNode(0, 1, False))
    assert tag.case == "vi"
    (r,) = tag.outputs
    assert not r.nodes
    assert classify("bigonal", r.element) == "v"


def test_tetragonal_local_cases_cover_every_element():
    seen = set()
    for e in wc_elements(4):
        case = classify("tetragonal", e)
        if case == "other":
            continue
        seen.add(case)
        a, b = local_picture("tetragonal", e).outputs
        if case in ("1", "2", "6"):
            assert classify("tetragonal", a.element) == classify("tetragonal", b.element) == case
    assert {"1", "2", "3", "6", "7"} <= seen


def test_local_pictures_are_reported_per_label():
    rng = random.Random(5)
    t = random_tower(rng, 3, 6)
    tags = local_pictures("trigonal", t)
    assert list(tags) == list(t.labels)
    assert all(tag.case in {"i", "ii", "iii"} for tag in tags.values())


def test_construction_type_errors():
    rng = random.Random(3)
    with pytest.raises((TypeError, ValueError)):
        bigonal(random_tower(rng, 3, 5))
    with pytest.raises((TypeError, ValueError)):
        trigonal_forward(random_tower(rng, 4, 5))
