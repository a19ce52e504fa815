import random
import sys

import pytest
from hypothesis import strategies as st

from prymkit.perm import Perm


def perms(n: int):
    return st.permutations(range(n)).map(Perm)


@st.composite
def perm_lists(draw, n_min=2, n_max=6, k_min=1, k_max=4):
    n = draw(st.integers(n_min, n_max))
    k = draw(st.integers(k_min, k_max))
    return n, [draw(perms(n)) for _ in range(k)]


def closure(gens, n):
    """Brute-force group generated by ``gens``."""
    ident = Perm.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


@pytest.fixture
def rng():
    return random.Random(20240517)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[num])
