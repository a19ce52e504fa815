"""Acceptance criteria, each with its time budget.

Every test records one ``PASS``/``FAIL`` line; the lines are printed in the
terminal summary, and also when this file is run as a script.
"""

import os
import random
import subprocess
import sys
import time

import pytest

from prymkit import delpezzo as dp
from prymkit import f2
from prymkit.cover import MonodromyCover
from prymkit.instances import random_cover, random_tower, trivial_tower
from prymkit.perm import group_order
from prymkit.polygonal import direct_image, trigonal_forward
from prymkit.suites import SUITES, SuiteConfig, run_suite
from prymkit.weyl import wd4_lattice

SEED = 7
RESULTS: dict[int, str] = {}


def record(num: int, title: str, ok: bool, elapsed: float, budget: float | None, detail: str = "") -> None:
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (budget {budget:g}s)" if budget is not None else ""
    RESULTS[num] = f"{status} criterion {num:2d} {title}: {detail} [{elapsed:.2f}s{limit}]"
    assert ok, RESULTS[num]
    assert within, RESULTS[num]


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def suite(name: str, cases: int | None = None):
    return timed(lambda: run_suite(name, SuiteConfig(SEED, cases)))


def check_of(report, name):
    return next((c for c in report.checks if c[0] == name), (name, False, "missing"))


def test_01_recillas_genus():
    def run():
        bad = 0
        for k in range(200):
            rng = random.Random(f"acceptance/recillas/{k}")
            t = random_tower(rng, 3, rng.randint(3, 12),
                             accept=lambda t: t.cover.genus()[0] <= 12)
            x = trigonal_forward(t)
            bad += not (isinstance(x, MonodromyCover) and x.genus() == [t.cover.genus()[0] - 1])
        return bad

    bad, elapsed = timed(run)
    record(1, "Recillas genus relation", bad == 0, elapsed, 10, f"instances=200 failures={bad}")


def test_02_recillas_bijection():
    report, elapsed = suite("recillas", 200)
    checks = [check_of(report, n) for n in ("forward-inverse", "inverse-forward")]
    ok = all(c[1] for c in checks)
    record(2, "Recillas bijection", ok, elapsed, 30, "; ".join(f"{c[0]} {c[2]}" for c in checks))


def test_03_bigonal_symmetry_and_branch_exchange():
    sym, t1 = suite("bigonal-symmetry", 200)
    exch, t2 = suite("branch-exchange", 200)
    ok = sym.failures == 0 and exch.failures == 0
    detail = f"{check_of(sym, 'involution')[2]}; {check_of(sym, 'local-cases')[2]}; " \
             f"branch exchange failures={exch.failures}"
    record(3, "bigonal involution and branch exchange", ok, t1 + t2, 30, detail)


def test_04_tetragonal_triality():
    report, elapsed = suite("triality", 100)
    record(4, "tetragonal triality", report.failures == 0, elapsed, 60, check_of(report, "triality")[2])


def test_05_split_direct_image():
    def run():
        out = []
        rng = random.Random("acceptance/split")
        while len(out) < 10:
            cov = random_cover(rng, 4, rng.randint(3, 8))
            if group_order(cov.generators()) != 24:
                continue
            out.append(sorted(map(len, direct_image(trivial_tower(cov)).cover.components())))
        return out

    degrees, elapsed = timed(run)
    ok = all(d == [1, 1, 4, 4, 6] for d in degrees)
    record(5, "split direct image degrees", ok, elapsed, 1, f"degrees={sorted(degrees)[0]} over {len(degrees)} covers")


def test_06_genus_shadows():
    report, elapsed = suite("genus-shadows", 200)
    detail = "; ".join(f"{n} {check_of(report, n)[2]}" for n in ("tetragonal-genus", "bigonal-prym"))
    record(6, "genus shadows", report.failures == 0, elapsed, 30, detail)


def test_07_bielliptic_structure():
    report, elapsed = suite("bielliptic", 50)
    fails = [c[0] for c in report.checks if not c[1]]
    record(7, "bielliptic output shapes", report.failures == 0, elapsed, 60,
           f"checks={len(report.checks)} failing={fails or 'none'}")


def test_08_f2_identities():
    report, elapsed = suite("f2-identities")
    counts = [f2.form_counts(g) for g in (1, 2, 3)]
    ok = report.failures == 0 and all(e == 2 ** (g - 1) * (2 ** g + 1) for g, (e, _) in zip((1, 2, 3), counts))
    record(8, "F2 identities and descent", ok, elapsed, 60,
           f"checks={len(report.checks)} failures={report.failures} even={[e for e, _ in counts]}")


def test_09_fano_diagram():
    def run():
        sols = f2.fano_solve(require_t=True)
        return sols, f2.fano_orbits(sols)

    (sols, orbits), elapsed = timed(run)
    labels = {d.census() for d in sols}
    ok = len(sols) == 7 and len(orbits) == 1 and labels == {"4T/3Q/6C"} and all(
        f2.is_collinear(d.q_points) for d in sols)
    record(9, "Fano diagram", ok, elapsed, 5, f"solutions={len(sols)} orbits={len(orbits)} labels={'/'.join(labels)}")


def test_10_wd4_lattice():
    lat, elapsed = timed(wd4_lattice)
    orders = tuple(lat[k].order for k in ("WD4", "H0", "H~0", "N(G)", "G", "G~0"))
    indices = (lat["G"].index, lat["N(G)"].index)
    ok = orders == (192, 48, 24, 64, 16, 32) and indices == (12, 3)
    record(10, "WD4 lattice", ok, elapsed, 5, f"orders={orders} indices={indices}")


def test_11_delpezzo_census():
    def run():
        ls6, ls5 = dp.lines(6), dp.lines(5)
        g6 = dp.incidence_graph(6)
        weyl, stab = dp.weyl_orders(6)
        ns = dp.nodal_specialize()
        return dict(
            lines6=len(ls6), lines5=len(ls5),
            degrees=sorted({g6.degree(k) for k in range(27)}),
            tritangents=len(dp.tritangents()), double_sixes=len(dp.double_sixes()),
            weyl=weyl, stab=stab, index=weyl // stab,
            marks=dp.mark_and_classify().sizes,
            nodal=(len(ns.through_node), len(ns.objects) - len(ns.through_node)),
        )

    got, elapsed = timed(run)
    want = dict(lines6=27, lines5=16, degrees=[10], tritangents=45, double_sixes=36, weyl=51840,
                stab=1920, index=27, marks=(1, 10, 16), nodal=(6, 15))
    report, t2 = suite("delpezzo-census")
    ok = got == want and report.failures == 0
    record(11, "del Pezzo census", ok, elapsed + t2, 60,
           " ".join(f"{k}={v}" for k, v in got.items()) + f" suite_failures={report.failures}")


def test_12_allowability():
    report, elapsed = suite("allowability", 50)
    detail = "; ".join(f"{c[0]} {c[2]}" for c in sorted(report.checks))
    record(12, "allowability of boundary constructions", report.failures == 0, elapsed, 10, detail)


def _verify_output(name: str, hash_seed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    proc = subprocess.run([sys.executable, "-m", "prymkit.cli", "verify", "--suite", name, "--seed", str(SEED)],
                          capture_output=True, env=env, check=False)
    return proc.stdout


def test_13_determinism():
    def run():
        differing, empty = [], []
        for name in sorted(SUITES):
            first, second = _verify_output(name, "1"), _verify_output(name, "2")
            if not first.startswith(b"# suite "):
                empty.append(name)
            if first != second:
                differing.append(name)
        return differing, empty

    (differing, empty), elapsed = timed(run)
    record(13, "deterministic verify output", not differing and not empty, elapsed, None,
           f"suites={len(SUITES)} differing={differing or 'none'} missing_reports={empty or 'none'}")


if __name__ == "__main__":
    code = pytest.main([__file__, "-q"])
    sys.exit(code)
