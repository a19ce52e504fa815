import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prymkit import f2


def brute_q(space: f2.SymplecticF2, values: int, x: int) -> int:
    n = space.dim
    xs = [x >> i & 1 for i in range(n)]
    v = sum(xs[i] & (values >> i & 1) for i in range(n))
    v += sum(xs[i] & xs[j] & (space.gram[i] >> j & 1) for i, j in itertools.combinations(range(n), 2))
    return v & 1


def brute_arf(space, values):
    ones = sum(brute_q(space, values, x) for x in range(space.size))
    return int(ones > space.size // 2)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_evaluation_and_arf_match_brute_force(g):
    space = f2.SymplecticF2.standard(g)
    for q in f2.all_forms(space):
        assert all(q(x) == brute_q(space, q.basis_values, x) for x in space.vectors())
        assert f2.arf(q) == f2.arf_by_basis(q) == brute_arf(space, q.basis_values)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_even_count(g):
    even, odd = f2.form_counts(g)
    assert even == 2 ** (g - 1) * (2 ** g + 1)
    assert odd == 2 ** (g - 1) * (2 ** g - 1)


@pytest.mark.parametrize("g", [1, 2])
def test_arf_sum_identity(g):
    space = f2.SymplecticF2.standard(g)
    for values in range(space.size):
        a = {v: brute_arf(space, values ^ space.dual(v)) for v in space.vectors()}
        for nu, sigma in itertools.product(space.vectors(), repeat=2):
            assert space.pair(nu, sigma) == a[0] ^ a[nu] ^ a[sigma] ^ a[nu ^ sigma]


@given(st.integers(1, 4), st.data())
def test_translation_changes_arf_by_value(g, data):
    space = f2.SymplecticF2.standard(g)
    q = f2.QuadraticFormF2(space, data.draw(st.integers(0, space.size - 1)))
    v = data.draw(st.integers(0, space.size - 1))
    t = f2.translate_form(q, v)
    assert all(t(x) == q(x) ^ space.pair(x, v) for x in space.vectors())
    assert f2.arf(t) == f2.arf(q) ^ q(v)


@pytest.mark.parametrize("g", [2, 3])
def test_descent_preserves_arf(g):
    space = f2.SymplecticF2.standard(g)
    for mu in range(1, space.size):
        d = f2.descend_space(space, mu)
        assert d.quotient.genus == g - 1
        for y, z in itertools.product(d.quotient.vectors(), repeat=2):
            assert d.quotient.pair(y, z) == space.pair(d.lift(y), d.lift(z))
        for q in f2.all_forms(space):
            if q(mu):
                with pytest.raises(ValueError):
                    f2.descend_form(q, mu, d)
                continue
            qd = f2.descend_form(q, mu, d)
            for x in space.perp([mu]):
                assert qd(d.project(x)) == q(x)
            assert f2.arf(qd) == f2.arf(q)


def test_descend_rejects_zero():
    with pytest.raises(ValueError):
        f2.descend_space(f2.SymplecticF2.standard(2), 0)


def test_degenerate_gram_rejected():
    with pytest.raises(ValueError):
        f2.SymplecticF2((0b10, 0b00))


def _brute_isotropic(space, r):
    seen = set()
    for vs in itertools.combinations(range(1, space.size), r):
        if f2.rank(list(vs)) == r and space.is_isotropic(vs):
            seen.add(frozenset(f2.span(list(vs))))
    return len(seen)


@pytest.mark.parametrize("g", [1, 2])
def test_isotropic_counts(g):
    space = f2.SymplecticF2.standard(g)
    for r in range(g + 2):
        want = _brute_isotropic(space, r)
        assert f2.isotropic_count(g, r) == want
        assert len(f2.enumerate_isotropic(space, r)) == want


def test_lagrangians_in_genus_three():
    assert len(f2.enumerate_isotropic(f2.SymplecticF2.standard(3), 3)) == 135


def _fano_brute(require_t):
    points = range(1, 8)
    lines = [ln for ln in itertools.combinations(points, 3) if ln[0] ^ ln[1] == ln[2]]
    out = []
    for ts in itertools.product((0, 1), repeat=7):
        if require_t and not any(ts):
            continue
        t = dict(zip(points, ts))
        for cs in itertools.product((0, 1), repeat=7):
            ok = True
            for ln, c in zip(lines, cs):
                k = sum(t[p] for p in ln)
                if (k and not c) or (c and k != 2):
                    ok = False
                    break
            if ok:
                out.append((ts, cs))
    return out


def test_fano_solutions():
    sols = f2.fano_solve(require_t=True)
    assert len(sols) == len(_fano_brute(True)) == 7
    assert {d.census() for d in sols} == {"4T/3Q/6C"}
    assert all(f2.is_collinear(d.q_points) for d in sols)
    assert len(f2.fano_solve(require_t=False)) == len(_fano_brute(False)) == 8


def test_fano_single_orbit():
    assert len(f2.gl3_f2()) == 168
    sols = f2.fano_solve()
    orbits = f2.fano_orbits(sols)
    assert [len(o) for o in orbits] == [7]
    # each solution is fixed by a subgroup of order 168 / 7
    d = sols[0]
    assert sum(1 for m in f2.gl3_f2() if f2.act_on_diagram(m, d) == d) == 24
