import random
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymkit.cover import GluedCover, MonodromyCover, SignedTower
from prymkit.instances import random_bigonal_input, random_cover, random_tower
from prymkit.towerio import TowerFormatError, dumps, load, loads

SAMPLES = resources.files("prymkit") / "samples"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(1, 5), st.integers(0, 2))
def test_round_trip_covers(seed, n, h):
    cov = random_cover(random.Random(seed), n, 4, base_genus=h, connected=False)
    assert loads(dumps(cov)) == cov


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(2, 4), st.integers(0, 1))
def test_round_trip_towers(seed, n, h):
    t = random_tower(random.Random(seed), n, 5, base_genus=h, nonsplit=False)
    assert loads(dumps(t)) == t


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_round_trip_glued(seed):
    x = random_bigonal_input(random.Random(seed), 6, glue_prob=0.8)
    assert loads(dumps(x)) == x


def test_samples_load():
    assert isinstance(load(SAMPLES / "etale_genus2.tower"), SignedTower)
    assert isinstance(load(SAMPLES / "wirtinger.tower"), GluedCover)


def test_bad_product_names_residual():
    with pytest.raises(TowerFormatError, match=r"residual permutation \(1 3\)"):
        load(SAMPLES / "bad_product.tower")


def test_comments_and_unsigned_defaults():
    x = loads("# header\ntower v1\nbase_genus 0\ndegree 2\nbranch a (1 2)  # swap\nbranch b (1 2)\n")
    assert isinstance(x, MonodromyCover)
    y = loads("tower v1\nbase_genus 0\ndegree 2\nbranch a (1 2) signs 11\nbranch b (1 2) signs 11\nbranch c ()\n")
    assert isinstance(y, SignedTower)
    assert y.branch("c").eps == (0, 0)


@pytest.mark.parametrize("text,line", [
    ("tower v2\n", 1),
    ("tower v1\nbase_genus x\n", 2),
    ("tower v1\nbase_genus 0\ndegree 2\nbranch a (1 3)\n", 4),
    ("tower v1\nbase_genus 0\ndegree 2\nfrobnicate\n", 4),
    ("tower v1\nbase_genus 0\ndegree 2\nbranch a (1 2) signs 1\n", 4),
    ("tower v1\nbase_genus 0\ndegree 2\nbranch a () \nglue a 1 zz 1\n", 5),
    ("tower v1\nbase_genus 0\ndegree 2\nhandle a 1 ()\n", 4),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(TowerFormatError) as exc:
        loads(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


@pytest.mark.parametrize("text", [
    "tower v1\ndegree 2\n",
    "tower v1\nbase_genus 1\ndegree 2\nhandle a 1 ()\n",
    "tower v1\nbase_genus 0\ndegree 2\nbranch a ()\nbranch a ()\n",
])
def test_whole_file_errors(text):
    with pytest.raises(TowerFormatError):
        loads(text)
