import itertools
import random

from hypothesis import given
from hypothesis import strategies as st

from prymkit import gf2

vectors = st.lists(st.integers(0, 63), max_size=7)


def brute_span(vs):
    out = set()
    for mask in range(1 << len(vs)):
        x = 0
        for k, v in enumerate(vs):
            if mask >> k & 1:
                x ^= v
        out.add(x)
    return out


@given(vectors)
def test_rank_and_span(vs):
    sp = brute_span(vs)
    assert gf2.span(vs) == sp
    assert 1 << gf2.rank(vs) == len(sp)


@given(vectors, st.integers(0, 63))
def test_coordinates(vs, x):
    basis = gf2.row_reduce(vs)
    c = gf2.coordinates(basis, x)
    if x in brute_span(vs):
        assert c is not None
        y = 0
        for k, b in enumerate(basis):
            if c >> k & 1:
                y ^= b
        assert y == x
    else:
        assert c is None


def _dot(a, b):
    return gf2.parity(a & b)


@given(st.lists(st.integers(0, 31), min_size=1, max_size=6), st.integers(0, 31), st.integers(0, 1 << 30))
def test_solve_agrees_with_exhaustive_search(rows, target, seed):
    rhs = [_dot(r, target) ^ (k == 0 and seed % 3 == 0) for k, r in enumerate(rows)]
    found = gf2.solve(rows, rhs, 5, random.Random(seed))
    solvable = any(all(_dot(r, x) == b for r, b in zip(rows, rhs)) for x in range(32))
    assert (found is not None) == solvable
    if found is not None:
        assert all(_dot(r, found) == b for r, b in zip(rows, rhs))


@given(st.lists(st.integers(0, 31), max_size=6))
def test_kernel_basis(rows):
    ker = gf2.kernel_basis(rows, 5)
    brute = {x for x in range(32) if all(_dot(r, x) == 0 for r in rows)}
    assert brute_span(ker) == brute
    assert len(ker) == gf2.rank(ker)


def test_bits_round_trip():
    for x, n in itertools.product(range(16), (4, 6)):
        assert gf2.from_bits(gf2.bits(x, n)) == x
