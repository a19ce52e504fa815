"""Named verification suites.

Each suite yields checks ``(name, ok, detail)``. Random cases draw from their
own generator seeded by ``(seed, suite, case)``, so a report depends only on
the seed and the case count. Report lines are sorted by check name.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import delpezzo as dp
from . import f2
from .bihyperelliptic import bielliptic_noncartesian_instance, cartesian_instance
from .cover import (
    BaseCurve,
    FiberPoint,
    GluedCover,
    MonodromyCover,
    SignedTower,
    as_glued,
    build_boundary_example,
    covers_isomorphic,
    towers_isomorphic,
)
from .instances import random_bigonal_input, random_cover, random_tower, solve_signs, trivial_tower
from .perm import Perm, group_order
from .polygonal import (
    NotNodal,
    bigonal,
    branch_counts,
    classify,
    direct_image,
    local_picture,
    local_pictures,
    tetragonal,
    trigonal_forward,
    trigonal_inverse,
)
from .polygonal.bielliptic import (
    bigonal_diagram,
    fiber_product,
    hyperelliptic_factorizations,
    is_cartesian,
    is_cartesian_over,
)
from .polygonal.direct import orientation_cover, orientation_splits
from .polygonal.local import LocalNode
from .weyl import SignedPerm, conjugacy_class_of_subgroup, wc_elements, wd4_lattice

Check = tuple[str, bool, str]


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    cases: int | None = None
    """Random cases per property; None uses the suite default."""

    def __post_init__(self):
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.cases is not None and self.cases < 1:
            raise ValueError("cases must be positive")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for _, ok, _ in self.checks if not ok)

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {self.suite}/{name} {detail}".rstrip()
                for name, ok, detail in sorted(self.checks)]

    def render(self) -> str:
        head = f"# suite {self.suite} seed {self.seed} cases {self.cases}"
        tail = f"# {len(self.checks) - self.failures} passed, {self.failures} failed"
        return "\n".join([head, *self.lines(), tail]) + "\n"


def case_rng(seed: int, suite: str, case: int) -> random.Random:
    return random.Random(f"{seed}/{suite}/{case}")


class _Tally:
    """Counts failures of one property over many cases, keeping the first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failed = 0
        self.first: str | None = None

    def record(self, ok: bool, case: int, why: str = "") -> None:
        self.cases += 1
        if not ok:
            self.failed += 1
            if self.first is None:
                self.first = f"case {case}" + (f": {why}" if why else "")

    def check(self, extra: str = "") -> Check:
        detail = f"cases={self.cases} failures={self.failed}" + (f" {extra}" if extra else "")
        if self.first:
            detail += f" first={self.first}"
        return self.name, self.failed == 0 and self.cases > 0, detail


def _eq(name: str, got, want) -> Check:
    return name, got == want, f"{got}" if got == want else f"got {got} want {want}"


# ----------------------------------------------------------------------------
# polygonal suites
# ----------------------------------------------------------------------------


def _etale_trigonal(rng: random.Random) -> SignedTower:
    return random_tower(rng, 3, rng.randint(3, 12),
                        accept=lambda t: t.cover.is_connected() and t.cover.genus()[0] <= 12)


def suite_recillas(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 200
    genus = _Tally("genus")
    inv_fwd = _Tally("inverse-forward")
    fwd_inv = _Tally("forward-inverse")
    for k in range(n):
        rng = case_rng(cfg.seed, "recillas", k)
        t = _etale_trigonal(rng)
        x = trigonal_forward(t)
        gx = as_glued(x).arithmetic_genus()
        genus.record(isinstance(x, MonodromyCover) and x.genus() == [t.cover.genus()[0] - 1], k,
                     f"g(C)={t.cover.genus()} g(X)={gx}")
        inv_fwd.record(towers_isomorphic(t, trigonal_inverse(x)) is not None, k)
        xc = random_cover(rng, 4, rng.randint(2, 10))
        fwd_inv.record(covers_isomorphic(xc, trigonal_forward(trigonal_inverse(xc))) is not None, k)
    yield genus.check()
    yield inv_fwd.check()
    yield fwd_inv.check()


def suite_bigonal_symmetry(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 200
    sym = _Tally("involution")
    seen: Counter[str] = Counter()
    for k in range(n):
        rng = case_rng(cfg.seed, "bigonal-symmetry", k)
        x = random_bigonal_input(rng, rng.randint(2, 8), rng.choice((0, 0, 1, 2)))
        for tag in local_pictures("bigonal", x).values():
            seen[tag.case] += 1
        sym.record(towers_isomorphic(x, bigonal(bigonal(x))) is not None, k)
    yield sym.check()
    cases = ("i", "ii", "iii", "iv", "v", "vi")
    yield ("local-cases", all(seen[c] for c in cases),
           " ".join(f"{c}={seen[c]}" for c in cases))


def suite_branch_exchange(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 200
    fwd = _Tally("branch-g-prime")
    back = _Tally("branch-f")
    prym = _Tally("prym-dimension")
    for k in range(n):
        rng = case_rng(cfg.seed, "branch-exchange", k)
        x = random_bigonal_input(rng, rng.randint(2, 8), rng.choice((0, 0, 1, 2)))
        y = bigonal(x)
        bf, bg = branch_counts(x)
        bf2, bg2 = branch_counts(y)
        # the partner's double cover branches where g does; f branches where the partner's g does
        fwd.record(bf2 == bg, k, f"{bf2} vs {bg}")
        back.record(bf == bg2, k, f"{bf} vs {bg2}")
        prym.record(as_glued(x).prym_dimension() == as_glued(y).prym_dimension(), k)
    yield fwd.check()
    yield back.check()
    yield prym.check()


def _triple_matches(outs, expect) -> bool:
    """Whether the two towers ``outs`` are the two towers ``expect`` in some order."""
    a, b = outs
    c, d = expect
    iso = lambda u, v: towers_isomorphic(u, v) is not None
    return (iso(a, c) and iso(b, d)) or (iso(a, d) and iso(b, c))


def suite_triality(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 100
    tri = _Tally("triality")
    glued = 0
    for k in range(n):
        rng = case_rng(cfg.seed, "triality", k)
        t = random_tower(rng, 4, rng.randint(3, 8), accept=lambda t: t.cover.is_connected())
        c0, c1 = tetragonal(t)
        glued += isinstance(c0, GluedCover) + isinstance(c1, GluedCover)
        ok = _triple_matches(tetragonal(c0), (t, c1)) and _triple_matches(tetragonal(c1), (t, c0))
        tri.record(ok, k)
    yield tri.check(f"glued_outputs={glued}")


_EXPECTED_LOCAL = {
    "bigonal": {"i": {("i",)}, "ii": {("iii",)}, "iii": {("ii",)}, "iv": {("iv",)},
                "v": {("vi",)}, "vi": {("v",)}},
    "trigonal": {"i": {("i",)}, "ii": {("ii",)}, "iii": {("iii",)}, "iv": {("iv",)}, "v": {("v",)}},
    "trigonal-inverse": {"i": {("i",)}, "ii": {("ii",)}, "iii": {("iii",)}, "iv": {("iv",)}, "v": {("v",)}},
    "tetragonal": {"1": {("1", "1")}, "2": {("2", "2")}, "3": {("3", "4"), ("4", "3")},
                   "4": {("3", "3")}, "5": {("5", "5")}, "6": {("6", "6")},
                   "7": {("7", "7'"), ("7'", "7")}},
}

# the construction whose case names describe the outputs
_OUTPUT_KIND = {"bigonal": "bigonal", "trigonal": "trigonal-inverse",
                "trigonal-inverse": "trigonal", "tetragonal": "tetragonal"}


def _local_inputs(construction: str):
    if construction == "trigonal-inverse":
        for p in itertools.permutations(range(4)):
            yield Perm(p), None
        return
    n = {"bigonal": 2, "trigonal": 3, "tetragonal": 4}[construction]
    for e in wc_elements(n):
        yield e, None
        ncyc = len(e.sigma.cycles())
        for p, q in itertools.combinations(range(ncyc), 2):
            for cross in (False, True):
                yield e, LocalNode(p, q, cross)


def local_picture_table(construction: str) -> dict[str, set[tuple[str, ...]]]:
    """For every input case, the set of output case tuples observed over all local data."""
    out: dict[str, set[tuple[str, ...]]] = {}
    for e, node in _local_inputs(construction):
        try:
            case = classify(construction, e, node)
            if case == "other":
                continue
            tag = local_picture(construction, e, node)
        except (NotNodal, ValueError):
            continue
        outs = []
        for r in tag.outputs:
            if len(r.nodes) > 1:
                outs.append("other")
            else:
                outs.append(classify(_OUTPUT_KIND[construction], r.element, r.nodes[0] if r.nodes else None))
        out.setdefault(case, set()).add(tuple(outs))
    return out


def _full_s4_cover(rng: random.Random) -> MonodromyCover:
    while True:
        cov = random_cover(rng, 4, rng.randint(3, 8))
        if group_order(cov.generators()) == 24:
            return cov


def suite_local_pictures(cfg: SuiteConfig) -> Iterator[Check]:
    for construction, expected in _EXPECTED_LOCAL.items():
        table = local_picture_table(construction)
        for case, want in expected.items():
            got = table.get(case, set())
            ok = bool(got) and got <= want
            detail = " ".join(sorted("/".join(t) for t in got)) or "unseen"
            yield f"{construction}-{case}", ok, f"-> {detail}"
    # direct image of a split double cover of a connected degree-4 cover
    rng = case_rng(cfg.seed, "local-pictures", 0)
    tally = _Tally("split-direct-image")
    for k in range(cfg.cases or 20):
        cov = _full_s4_cover(rng)
        degs = sorted(len(c) for c in direct_image(trivial_tower(cov)).cover.components())
        tally.record(degs == [1, 1, 4, 4, 6], k, str(degs))
    yield tally.check("degrees=1,4,6,4,1")


def suite_genus_shadows(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 200
    tet = _Tally("tetragonal-genus")
    big = _Tally("bigonal-prym")
    for k in range(n):
        rng = case_rng(cfg.seed, "genus-shadows", k)
        t = random_tower(rng, 4, rng.randint(3, 8), accept=lambda t: t.cover.is_connected())
        genera = [as_glued(x).arithmetic_genus() for x in (t, *tetragonal(t))]
        tet.record(len(set(genera)) == 1, k, str(genera))
        x = random_bigonal_input(rng, rng.randint(2, 8), rng.choice((0, 1, 2)))
        dims = [as_glued(x).prym_dimension(), as_glued(bigonal(x)).prym_dimension()]
        big.record(dims[0] == dims[1], k, str(dims))
    yield tet.check()
    yield big.check()


# ----------------------------------------------------------------------------
# Cartesian and bielliptic suites
# ----------------------------------------------------------------------------


def suite_cartesian(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 100
    detect = _Tally("orientation-criterion")
    diagram = _Tally("diagram")
    over_h = _Tally("cartesian-over-h")
    for k in range(n):
        rng = case_rng(cfg.seed, "cartesian", k)
        t = random_tower(rng, 2, rng.randint(2, 8), rng.choice((0, 1)), nonsplit=False,
                         pattern=lambda r, lab, p: [r.randrange(2) for _ in p.cycles()])
        res = is_cartesian(t)
        ok = res.cartesian == orientation_splits(t)
        if res.cartesian:
            ok = ok and covers_isomorphic(fiber_product(*res.factors), t.tilde) is not None
        detect.record(ok, k)
        d = bigonal_diagram(t)
        degs = {name: c.degree for name, c in d.items()}
        partner = as_glued(bigonal(t)).smooth
        ok = (degs == {"C~~": 8, "C~": 4, "CxC'": 4, "C~'": 4, "C": 2, "C''": 2, "C'": 2, "K": 1}
              and covers_isomorphic(d["C~"], t.tilde) is not None
              and covers_isomorphic(d["C"], t.cover) is not None
              and covers_isomorphic(d["C~'"], partner.tilde) is not None
              and covers_isomorphic(d["C'"], orientation_cover(t)) is not None
              and covers_isomorphic(d["CxC'"], fiber_product(t.cover, orientation_cover(t))) is not None)
        diagram.record(ok, k)
        inst = cartesian_instance(rng, h_branch=rng.choice((2, 4, 6)), b0=rng.choice((2, 4)), b1=rng.choice((2, 4)))
        facs = [f for f in hyperelliptic_factorizations(inst.tower.cover) if f.blocks == ((0, 1), (2, 3))]
        over_h.record(bool(facs) and is_cartesian_over(inst.tower, facs[0]), k)
    yield detect.check()
    yield diagram.check()
    yield over_h.check()


def _h_branch_count(h: MonodromyCover) -> int:
    return sum(1 for p in h.branches if not p.is_identity())


def suite_bielliptic(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 50
    cart_out = _Tally("cartesian-input-cartesian-output")
    red_out = _Tally("cartesian-input-reducible-output")
    red_genus = _Tally("cartesian-input-genus-relation")
    red_allow = _Tally("cartesian-input-allowable")
    non_cart = _Tally("noncartesian-two-branch-points")
    non_nodes = _Tally("noncartesian-two-nodes")
    for k in range(n):
        rng = case_rng(cfg.seed, "bielliptic", k)
        inst = cartesian_instance(rng, h_branch=4, b0=rng.choice((2, 4)), b1=rng.choice((2, 4, 6)),
                                  extra=rng.randint(0, 2))
        g_h = inst.h.genus()[0]
        outs = [as_glued(o) for o in tetragonal(inst.tower)]
        conn = [o for o in outs if o.smooth.cover.is_connected()]
        red = [o for o in outs if not o.smooth.cover.is_connected()]
        ok = len(conn) == 1 and any(
            is_cartesian_over(conn[0].smooth, f) and covers_isomorphic(f.quotient, inst.h) is not None
            for f in hyperelliptic_factorizations(conn[0].smooth.cover))
        cart_out.record(ok, k)
        if len(red) != 1:
            for tally in (red_out, red_genus, red_allow):
                tally.record(False, k, "no reducible output")
        else:
            r = red[0]
            comps = r.smooth.cover.components()
            red_out.record(len(comps) == 2 and all(len(c) == 2 for c in comps) and len(r.nodes) == 4, k,
                           f"components={len(comps)} nodes={len(r.nodes)}")
            want = sorted(c.tilde.genus()[0] - 2 * g_h for c in inst.factors)
            red_genus.record(sorted(r.smooth.cover.genus()) == want, k)
            red_allow.record(r.is_allowable(), k)
        t = bielliptic_noncartesian_instance(rng, n_labels=rng.randint(5, 9))
        for o in map(as_glued, tetragonal(t)):
            facs = hyperelliptic_factorizations(o.smooth.cover)
            non_cart.record(o.smooth.cover.is_connected() and any(
                _h_branch_count(f.quotient) == 2 for f in facs), k)
            non_nodes.record(len(o.nodes) == 2, k, f"nodes={len(o.nodes)}")
    for tally in (cart_out, red_out, red_genus, red_allow, non_cart, non_nodes):
        yield tally.check()


def suite_allowability(cfg: SuiteConfig) -> Iterator[Check]:
    n = cfg.cases or 50
    kinds = {"I": (True, "∂I"), "II": (False, "∂II"), "III": (True, "∂III")}
    tallies = {k: _Tally(f"type-{k}") for k in kinds}
    for k in range(n):
        rng = case_rng(cfg.seed, "allowability", k)
        deg = rng.randint(2, 4)
        # I: normalization with a marked unbranched point to glue
        x = random_cover(rng, deg, rng.randint(2, 6))
        x = MonodromyCover(BaseCurve(0, x.labels + ("p",)), deg, (), x.branches + (Perm.identity(deg),))
        g = build_boundary_example("I", x, FiberPoint("p", 0), FiberPoint("p", 1))
        tallies["I"].record((g.is_allowable(), g.degeneration_type()) == kinds["I"], k)
        # II: connected unbranched double cover glued straight
        t = random_tower(rng, deg, rng.randint(4, 7), accept=lambda t: t.cover.is_connected())
        t = SignedTower(BaseCurve(0, t.labels + ("p",)), deg, (), t.branches + (SignedPerm.identity(deg),))
        g = build_boundary_example("II", t, FiberPoint("p", 0), FiberPoint("p", 1))
        tallies["II"].record((g.is_allowable(), g.degeneration_type()) == kinds["II"], k)
        # III: double cover branched at exactly two points over one base point, glued there
        cov = random_cover(rng, deg, rng.randint(2, 6))
        cov = MonodromyCover(BaseCurve(0, cov.labels + ("p",)), deg, (), cov.branches + (Perm.identity(deg),))
        t3 = solve_signs(cov, rng, lambda r, lab, p: [int(lab == "p" and i < 2) for i in range(len(p.cycles()))])
        g = build_boundary_example("III", t3, FiberPoint("p", 0), FiberPoint("p", 1))
        tallies["III"].record((g.is_allowable(), g.degeneration_type()) == kinds["III"], k)
    for kind, tally in tallies.items():
        allow, tag = kinds[kind]
        yield tally.check(f"allowable={'yes' if allow else 'no'} type={tag}")


# ----------------------------------------------------------------------------
# lattice and F_2 suites
# ----------------------------------------------------------------------------


def suite_wd4_lattice(cfg: SuiteConfig) -> Iterator[Check]:
    lat = wd4_lattice()
    for name, order in (("WD4", 192), ("H0", 48), ("H~0", 24), ("N(G)", 64), ("G", 16), ("G~0", 32),
                        ("G~1", 32), ("G~2", 32), ("H1", 48), ("H2", 48), ("H~1", 24), ("H~2", 24)):
        yield _eq(f"order-{name}", lat[name].order, order)
    yield _eq("index-G", lat["G"].index, 12)
    yield _eq("index-N(G)", lat["N(G)"].index, 3)
    wd4 = lat["WD4"].elements
    g = lat["G"].elements
    normalizer = frozenset(x for x in wd4 if frozenset(x * h * x.inverse() for h in g) == g)
    yield _eq("normalizer-of-G", len(normalizer), 64)
    yield "normalizer-matches", normalizer == lat["N(G)"].elements, ""
    classes = [conjugacy_class_of_subgroup(lat[nm].elements, wd4) for nm in ("H~0", "H~1", "H~2")]
    distinct = all(lat[b].elements not in classes[i] for i, a in enumerate(("H~0", "H~1", "H~2"))
                   for b in ("H~0", "H~1", "H~2") if a != b)
    yield "h-tilde-nonconjugate", distinct, ""


def _iterated_descent_ok(space: f2.SymplecticF2, m1: int, m2: int) -> bool:
    """Descending along ``m1`` then ``m2`` agrees with the other order on ``{m1, m2}^perp``."""
    d1 = f2.descend_space(space, m1)
    d12 = f2.descend_space(d1.quotient, d1.project(m2))
    d2 = f2.descend_space(space, m2)
    d21 = f2.descend_space(d2.quotient, d2.project(m1))
    perp = [x for x in space.vectors() if space.pair(x, m1) == 0 and space.pair(x, m2) == 0]
    a = {x: d12.project(d1.project(x)) for x in perp}
    b = {x: d21.project(d2.project(x)) for x in perp}
    mapping: dict[int, int] = {}
    for x in perp:
        if mapping.setdefault(a[x], b[x]) != b[x]:
            return False
    if len(mapping) != d12.quotient.size or len(set(mapping.values())) != d21.quotient.size:
        return False
    return all(d12.quotient.pair(u, v) == d21.quotient.pair(mapping[u], mapping[v]) for u in mapping for v in mapping)


def suite_f2_identities(cfg: SuiteConfig) -> Iterator[Check]:
    pol = _Tally("polarization")
    ident = _Tally("arf-sum-identity")
    trans = _Tally("translation-arf")
    simple = _Tally("translation-simply-transitive")
    sympl = _Tally("descent-symplectic")
    coset = _Tally("descendable-coset")
    commute = _Tally("descent-evaluation")
    iterated = _Tally("iterated-descent")
    arf_table: Counter[tuple[int, int]] = Counter()
    for g in (1, 2, 3):
        space = f2.SymplecticF2.standard(g)
        forms = list(f2.all_forms(space))
        arf_of = [f2.arf(q) for q in forms]  # indexed by basis values
        duals = [space.dual(v) for v in space.vectors()]
        for q in forms:
            pol.record(all(q(x ^ y) ^ q(x) ^ q(y) == space.pair(x, y) for x in space.vectors() for y in space.vectors()), g)
            b = q.basis_values
            for nu, sigma in itertools.product(space.vectors(), repeat=2):
                rhs = arf_of[b] ^ arf_of[b ^ duals[nu]] ^ arf_of[b ^ duals[sigma]] ^ arf_of[b ^ duals[nu ^ sigma]]
                ident.record(space.pair(nu, sigma) == rhs, g)
            for v in space.vectors():
                trans.record(f2.arf(f2.translate_form(q, v)) == arf_of[b] ^ q(v), g)
        if g <= 2:
            for q in forms:
                images = {f2.translate_form(q, v).basis_values for v in space.vectors()}
                simple.record(len(images) == len(forms), g)
        for mu in range(1, space.size):
            d = f2.descend_space(space, mu)
            perp = [x for x in space.vectors() if d.contains(x)]
            sympl.record(d.quotient.dim == 2 * g - 2 and all(
                d.quotient.pair(d.project(x), d.project(y)) == space.pair(x, y) for x in perp for y in perp), g)
            good = [q for q in forms if q(mu) == 0]
            orbit = {f2.translate_form(good[0], v).basis_values for v in perp}
            coset.record(len(good) == 1 << (2 * g - 1) and orbit == {q.basis_values for q in good}, g)
            for q in good:
                qd = f2.descend_form(q, mu, d)
                commute.record(all(qd(d.project(x)) == q(x) for x in perp), g)
                arf_table[(f2.arf(q), f2.arf(qd))] += 1
        for m1, m2 in itertools.combinations(range(1, space.size), 2):
            if space.pair(m1, m2) == 0:
                iterated.record(_iterated_descent_ok(space, m1, m2), g)
    rng = case_rng(cfg.seed, "f2-identities", 0)
    for g in (4, 5, 6):
        space = f2.SymplecticF2.standard(g)
        for _ in range(cfg.cases or 50):
            q = f2.QuadraticFormF2(space, rng.randrange(space.size))
            x, y = rng.randrange(space.size), rng.randrange(space.size)
            pol.record(q(x ^ y) ^ q(x) ^ q(y) == space.pair(x, y), g)
    for tally in (pol, ident, trans, simple, sympl, coset, commute, iterated):
        yield tally.check()
    for g in (1, 2, 3):
        even, odd = f2.form_counts(g)
        want = ((1 << (g - 1)) * ((1 << g) + 1), (1 << (g - 1)) * ((1 << g) - 1))
        yield _eq(f"form-counts-g{g}", (even, odd), want)
    yield ("arf-under-descent", set(arf_table) <= {(0, 0), (1, 1)},
           " ".join(f"{a}->{b}:{c}" for (a, b), c in sorted(arf_table.items())))
    for g in (1, 2, 3):
        space = f2.SymplecticF2.standard(g)
        got = tuple(len(f2.enumerate_isotropic(space, r)) for r in range(g + 2))
        yield _eq(f"isotropic-g{g}", got, tuple(f2.isotropic_count(g, r) for r in range(g + 2)))


def suite_fano_diagram(cfg: SuiteConfig) -> Iterator[Check]:
    sols = f2.fano_solve(require_t=True)
    orbits = f2.fano_orbits(sols)
    labels = sorted({d.census() for d in sols})
    ok = (len(sols) == 7 and len(orbits) == 1 and labels == ["4T/3Q/6C"]
          and all(f2.is_collinear(d.q_points) for d in sols))
    yield "solutions", ok, f"solutions={len(sols)} orbit={len(orbits)} labels={'/'.join(labels) or '-'}"
    everything = f2.fano_solve(require_t=False)
    extra = [d for d in everything if d not in sols]
    yield ("without-t", len(extra) == 1 and not any(extra[0].vertex_t) and not any(extra[0].edge_c),
           f"extra={len(extra)}")


def suite_delpezzo_census(cfg: SuiteConfig) -> Iterator[Check]:
    n27 = len(dp.lines(6))
    tri = dp.tritangents()
    ds = dp.double_sixes()
    weyl, stab = dp.weyl_orders(6)
    ok = (n27, len(tri), len(ds), weyl, stab) == (27, 45, 36, 51840, 1920)
    yield "census", ok, f"lines27={n27} tritangent={len(tri)} doublesix={len(ds)} weyl={weyl} stab={stab}"
    yield _eq("line-counts", tuple(len(dp.lines(r)) for r in range(7)), (0, 1, 3, 6, 10, 16, 27))
    yield "wide-search", all(list(dp.lines(r)) == dp.lines_wide_search(r) for r in range(7)), ""
    g6 = dp.incidence_graph(6)
    yield _eq("regular-10", {g6.degree(k) for k in range(27)}, {10})
    yield _eq("strongly-regular", g6.srg_parameters(), (27, 10, 1, 5))
    g5 = dp.incidence_graph(5)
    yield "r5-degrees", True, f"degrees={sorted({g5.degree(k) for k in range(16)})} srg={g5.srg_parameters()}"
    yield _eq("line-index", weyl // stab, 27)
    yield _eq("line-orbits", [len(o) for o in dp.line_orbits(6)], [27])
    yield _eq("weyl-r5", dp.weyl_orders(5)[0], stab)
    yield _eq("tritangents-per-line", Counter(Counter(x for t in tri for x in t).values()), Counter({5: 27}))
    yield _eq("double-six-stabilizer", weyl // dp.double_six_orbit(), 1440)
    m = dp.mark_and_classify()
    yield _eq("mark-classes", m.sizes, (1, 10, 16))
    yield ("mark-disjoint-are-r5", sorted(m.disjoint) == sorted(d + (0,) for d in dp.lines(5)), "")
    yield _eq("mark-stabilizer", group_order(dp.mark_stabilizer_generators()), 1920)
    ns = dp.nodal_specialize()
    yield _eq("nodal-objects", (len(ns.through_node), len(ns.objects) - len(ns.through_node)), (6, 15))
    yield _eq("nodal-conflicts", len(ns.conflicts), 0)
    rules = all(ns.meets(a, b) == dp.nodal_rule(a, b) for a, b in itertools.combinations(ns.objects, 2))
    yield "nodal-rules", rules, ""
    equivariant = all(
        ns.meets(dp.permute_object(p, a), dp.permute_object(p, b)) == ns.meets(a, b)
        for p in itertools.permutations(range(6)) for a, b in itertools.combinations(ns.objects, 2)
    )
    yield "nodal-s6", equivariant, "perms=720"
    seg = dp.segre_structure()
    yield _eq("segre-counts", (len(seg.rulings), len(seg.planes), len(seg.ruling_triples), len(seg.plane_triples)),
              (6, 15, 15, 15))
    pent = dp.pentagon()
    yield _eq("pentagon", (pent.arithmetic_genus(), len(pent.nodes), dp.plane_curve_genus(5)), (6, 10, 6))


SUITES: dict[str, Callable[[SuiteConfig], Iterator[Check]]] = {
    "bigonal-symmetry": suite_bigonal_symmetry,
    "branch-exchange": suite_branch_exchange,
    "recillas": suite_recillas,
    "triality": suite_triality,
    "local-pictures": suite_local_pictures,
    "genus-shadows": suite_genus_shadows,
    "bielliptic": suite_bielliptic,
    "cartesian": suite_cartesian,
    "f2-identities": suite_f2_identities,
    "fano-diagram": suite_fano_diagram,
    "delpezzo-census": suite_delpezzo_census,
    "wd4-lattice": suite_wd4_lattice,
    "allowability": suite_allowability,
}

DEFAULT_CASES = {
    "bigonal-symmetry": 200, "branch-exchange": 200, "recillas": 200, "triality": 100,
    "local-pictures": 20, "genus-shadows": 200, "bielliptic": 50, "cartesian": 100,
    "f2-identities": 50, "fano-diagram": 1, "delpezzo-census": 1, "wd4-lattice": 1, "allowability": 50,
}


def run_suite(name: str, cfg: SuiteConfig) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    report = SuiteReport(name, cfg.seed, cfg.cases or DEFAULT_CASES[name])
    report.checks = list(SUITES[name](cfg))
    return report
