import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import closure, perm_lists, perms
from prymkit.perm import (
    Perm,
    block_systems,
    commutator,
    compose,
    conjugate,
    cycle_type_and_sign,
    group_order,
    is_transitive,
    orbits,
    product,
    simultaneous_conjugacy,
    stabilizer_order,
    symmetric_group_generators,
)


def test_compose_applies_right_factor_first():
    a = Perm.parse("(1 2)", 3)
    b = Perm.parse("(2 3)", 3)
    assert compose(a, b) == Perm.parse("(1 2 3)", 3)
    assert compose(a, b)(1) == 2


@pytest.mark.parametrize("text,n", [("()", 4), ("(1 2)(3 4 5)", 5), ("(1 4 2)", 6)])
def test_parse_and_format(text, n):
    assert str(Perm.parse(text, n)) == text


@pytest.mark.parametrize("bad", ["(1 2", "(0 1)", "(1 1)", "(1 9)", "x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Perm.parse(bad, 3)


@given(perms(7))
def test_string_round_trip(p):
    assert Perm.parse(str(p), 7) == p


@given(perms(6), perms(6))
def test_inverse_and_order(a, b):
    assert a * a.inverse() == Perm.identity(6)
    assert compose(a, b).inverse() == compose(b.inverse(), a.inverse())
    x = Perm.identity(6)
    for _ in range(a.order()):
        x = x * a
    assert x.is_identity()


@given(perms(6), perms(6))
def test_commutator_and_conjugate(a, b):
    assert commutator(a, b) == a * b * a.inverse() * b.inverse()
    c = conjugate(b, a)
    assert sorted(map(len, c.cycles())) == sorted(map(len, a.cycles()))


@given(perms(6))
def test_sign_matches_inversion_count(p):
    inversions = sum(1 for i, j in itertools.combinations(range(6), 2) if p(i) > p(j))
    _, sign = cycle_type_and_sign(p)
    assert sign == (-1) ** inversions


@settings(max_examples=60, deadline=None)
@given(perm_lists())
def test_group_order_matches_closure(data):
    n, gens = data
    assert group_order(gens) == len(closure(gens, n))


@settings(max_examples=60, deadline=None)
@given(perm_lists(), st.data())
def test_stabilizer_order_matches_closure(data, draw):
    n, gens = data
    x = draw.draw(st.integers(0, n - 1))
    g = closure(gens, n)
    assert stabilizer_order(gens, x) == sum(1 for h in g if h(x) == x)


@settings(max_examples=60)
@given(perm_lists())
def test_orbits_match_closure(data):
    n, gens = data
    g = closure(gens, n)
    want = sorted({tuple(sorted({h(x) for h in g})) for x in range(n)})
    assert [tuple(o) for o in orbits(gens)] == want
    assert is_transitive(gens) == (len(want) == 1)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def _brute_blocks(gens, n):
    out = []
    for part in _set_partitions(list(range(n))):
        if len(part) in (1, n):
            continue
        sizes = {len(b) for b in part}
        if len(sizes) != 1:
            continue
        fam = {frozenset(b) for b in part}
        if all({frozenset(g(x) for x in b) for b in fam} == fam for g in gens):
            out.append(tuple(sorted(tuple(sorted(b)) for b in part)))
    return sorted(out)


@settings(max_examples=40, deadline=None)
@given(perm_lists(n_min=3, n_max=6, k_min=1, k_max=3))
def test_block_systems_match_brute_force(data):
    n, gens = data
    if not is_transitive(gens):
        return
    assert sorted(block_systems(gens)) == _brute_blocks(gens, n)


def test_dihedral_blocks():
    r = Perm.parse("(1 2 3 4)", 4)
    s = Perm.parse("(2 4)", 4)
    assert sorted(block_systems([r, s])) == [((0, 2), (1, 3))]


@given(perms(5), perms(5), perms(5))
def test_simultaneous_conjugacy_finds_witness(a, b, c):
    ci = c.inverse()
    xs = [a, b]
    ys = [c * x * ci for x in xs]
    w = simultaneous_conjugacy(xs, ys, symmetric_group_generators(5))
    assert w is not None
    assert [w * x * w.inverse() for x in xs] == ys


def test_product_relation():
    ps = [Perm.parse(s, 3) for s in ("(1 2)", "(2 3)", "(1 2)", "(1 3)")]
    assert product(ps, 3) == ps[0] * ps[1] * ps[2] * ps[3]
