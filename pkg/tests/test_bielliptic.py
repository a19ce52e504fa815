import random

from hypothesis import given, settings
from hypothesis import strategies as st

from prymkit.bihyperelliptic import (
    H_BLOCKS,
    bielliptic_noncartesian_instance,
    cartesian_instance,
    e_factorization,
)
from prymkit.cover import as_glued, covers_isomorphic
from prymkit.instances import random_tower
from prymkit.polygonal import tetragonal
from prymkit.polygonal.bielliptic import (
    bigonal_diagram,
    fiber_product,
    hyperelliptic_factorizations,
    is_cartesian,
    is_cartesian_over,
)
from prymkit.weyl import embed_2n

seeds = st.integers(0, 10 ** 9)
PAIRINGS = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]


def invariant_pairings(gens):
    out = []
    for part in PAIRINGS:
        fam = {frozenset(b) for b in part}
        if all({frozenset(g(x) for x in b) for b in fam} == fam for g in gens):
            out.append(part)
    return out


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_cartesian_iff_three_invariant_pairings(seed):
    rng = random.Random(seed)
    t = random_tower(rng, 2, rng.randint(2, 7), nonsplit=False,
                     pattern=lambda r, lab, p: [r.randrange(2) for _ in p.cycles()])
    gens = [embed_2n(g) for g in t.generators()]
    res = is_cartesian(t)
    assert res.cartesian == (len(invariant_pairings(gens)) == 3)
    if res.cartesian:
        assert covers_isomorphic(fiber_product(*res.factors), t.tilde) is not None


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_bigonal_diagram_degrees(seed):
    rng = random.Random(seed)
    t = random_tower(rng, 2, rng.randint(3, 7), nonsplit=False,
                     pattern=lambda r, lab, p: [r.randrange(2) for _ in p.cycles()])
    d = bigonal_diagram(t)
    assert {k: c.degree for k, c in d.items()} == {
        "C~~": 8, "C~": 4, "CxC'": 4, "C~'": 4, "C": 2, "C''": 2, "C'": 2, "K": 1}


@settings(max_examples=15, deadline=None)
@given(seeds, st.sampled_from([2, 4, 6]))
def test_cartesian_instance_outputs(seed, h_branch):
    inst = cartesian_instance(random.Random(seed), h_branch=h_branch)
    t = inst.tower
    assert t.is_etale_double() and t.cover.is_connected() and t.tilde.is_connected()
    assert is_cartesian_over(t, e_factorization(t))
    outs = [as_glued(o) for o in tetragonal(t)]
    reducible = [o for o in outs if not o.smooth.cover.is_connected()]
    (r,) = reducible
    assert len(r.nodes) == h_branch
    g_h = inst.h.genus()[0]
    assert sorted(r.smooth.cover.genus()) == sorted(f.tilde.genus()[0] - 2 * g_h for f in inst.factors)
    assert r.is_allowable()


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_noncartesian_bielliptic_outputs(seed):
    t = bielliptic_noncartesian_instance(random.Random(seed))
    fac = e_factorization(t)
    assert fac.blocks == H_BLOCKS
    assert fac.quotient.genus() == [1]
    assert not is_cartesian_over(t, fac)
    for o in map(as_glued, tetragonal(t)):
        assert o.smooth.cover.is_connected()
        assert len(o.nodes) == 2
        branch_counts = [sum(not p.is_identity() for p in f.quotient.branches)
                         for f in hyperelliptic_factorizations(o.smooth.cover)]
        assert 2 in branch_counts
