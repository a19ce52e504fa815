"""Command-line entry point.

Exit status is 0 on success, 1 when a verification check fails and 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from . import delpezzo as dp
from . import f2
from .cover import GluedCover, MonodromyCover, SignedTower, strip
from .polygonal import NotNodal, bigonal, local_pictures, tetragonal, trigonal_forward, trigonal_inverse
from .suites import SUITES, SuiteConfig, run_suite
from .towerio import TowerFormatError, dump, load

OK, CHECK_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _genera(cover: MonodromyCover) -> str:
    return ",".join(str(g) for g in cover.genus())


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def info_lines(x) -> list[str]:
    g = x if isinstance(x, GluedCover) else GluedCover(x, ())
    smooth = g.smooth
    out = [f"degree {smooth.degree}", f"base genus {smooth.base.genus}", f"branch labels {len(smooth.labels)}"]
    if isinstance(smooth, SignedTower):
        c, ct = smooth.cover, smooth.tilde
        out.append(f"connected: C {_yes(c.is_connected())}, C~ {_yes(ct.is_connected())}")
        out.append(f"genus C={_genera(c)}, genus C~={_genera(ct)}, etale: {_yes(smooth.is_etale_double())}")
    else:
        out.append(f"connected: {_yes(smooth.is_connected())}")
        out.append(f"genus {_genera(smooth)}")
    if not g.nodes:
        out.append("degeneration tags: smooth")
    else:
        out.append(f"nodes {len(g.nodes)}, arithmetic genus {g.arithmetic_genus()}")
        if g.is_tower:
            out.append("degeneration tags: " + " ".join(g.node_types()))
            kind = "+".join(g.node_types())
            out.append(f"allowable: {_yes(g.is_allowable())}, type: {kind}")
    return out


def cmd_info(args) -> int:
    x = load(args.file)
    print("\n".join(info_lines(x)))
    return OK


def _write(x, path: Path) -> None:
    dump(strip(x), path)
    print(f"wrote {path}")


def cmd_construct(args) -> int:
    x = load(args.input)
    smooth = x.smooth if isinstance(x, GluedCover) else x
    kind = args.kind
    tower_input = isinstance(smooth, SignedTower)
    if kind == "trigonal-inverse":
        if tower_input or smooth.degree != 4:
            raise UsageError("trigonal-inverse needs an unsigned degree-4 cover")
    else:
        want = {"bigonal": 2, "trigonal": 3, "tetragonal": 4}[kind]
        if not tower_input or smooth.degree != want:
            raise UsageError(f"{kind} needs a double tower over a degree-{want} cover")
    if kind == "bigonal":
        outs = [bigonal(x)]
    elif kind == "trigonal":
        outs = [trigonal_forward(x)]
    elif kind == "trigonal-inverse":
        outs = [trigonal_inverse(x)]
    else:
        outs = list(tetragonal(x))
    prefix = Path(args.output)
    if len(outs) == 1:
        _write(outs[0], prefix.with_name(prefix.name + ".tower"))
    else:
        for k, out in enumerate(outs, 1):
            _write(out, prefix.with_name(f"{prefix.name}-{k}.tower"))
    tags = local_pictures(kind, x)
    report = "".join(f"{lab}: {tag.describe()}\n" for lab, tag in tags.items())
    report_path = prefix.with_name(prefix.name + ".report.txt")
    report_path.write_text(report, encoding="utf-8")
    print(f"wrote {report_path}")
    sys.stdout.write(report)
    return OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    report = run_suite(args.suite, SuiteConfig(args.seed, args.cases))
    sys.stdout.write(report.render())
    print(f"wall time {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return CHECK_FAILED if report.failures else OK


def cmd_lines(args) -> int:
    r = args.blowups
    if not 0 <= r <= 6:
        raise UsageError("--blowups must lie between 0 and 6")
    ls = dp.lines(r)
    print(f"blowups {r}: {len(ls)} lines")
    for d in ls:
        print(f"  {dp.format_class(d)}")
    if r in (5, 6):
        graph = dp.incidence_graph(r)
        degrees = sorted({graph.degree(k) for k in range(len(ls))})
        print(f"incidence degrees {degrees}, strongly regular {graph.srg_parameters()}")
        order, stab = dp.weyl_orders(r)
        print(f"weyl order {order}, line stabilizer {stab}")
        if args.dot:
            Path(args.dot).write_text(graph.to_dot(f"lines{r}"), encoding="utf-8")
            print(f"wrote {args.dot}")
    elif args.dot:
        raise UsageError("--dot needs --blowups 5 or 6")
    if r == 6:
        print(f"tritangents {len(dp.tritangents())}, double-sixes {len(dp.double_sixes())}")
    if args.nodal:
        ns = dp.nodal_specialize()
        print(f"nodal: {len(ns.through_node)} doubled lines through the node, "
              f"{len(ns.objects) - len(ns.through_node)} other lines, {len(ns.incidence)} incidences")
    if args.segre:
        seg = dp.segre_structure()
        print(f"segre: {len(seg.rulings)} rulings, {len(seg.planes)} planes, "
              f"{len(seg.ruling_triples)} ruling triples, {len(seg.plane_triples)} plane triples")
    return OK


def cmd_f2(args) -> int:
    g = args.genus
    if not 1 <= g <= 6:
        raise UsageError("--genus must lie between 1 and 6")
    even, odd = f2.form_counts(g)
    print(f"genus {g}: {even + odd} forms, even {even}, odd {odd}")
    if args.enumerate_theta:
        space = f2.SymplecticF2.standard(g)
        width = 2 * g
        for q in f2.all_forms(space):
            print(f"  {q.basis_values:0{width}b} arf={f2.arf(q)} zeros={q.zeros}")
    return OK


def cmd_diagram(args) -> int:
    if not args.fano_solve:
        raise UsageError("diagram needs --fano-solve")
    sols = f2.fano_solve(require_t=args.require_t)
    print(f"solutions {len(sols)}")
    for d in sols:
        print(f"  {d.census()}  {d}")
    orbits = f2.fano_orbits(sols)
    print(f"orbits {len(orbits)}: sizes {[len(o) for o in orbits]}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prymkit", description="Monodromy models of double covers of curves.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    cover = sub.add_parser("cover", help="inspect tower files")
    cover_sub = cover.add_subparsers(dest="cover_command", required=True)
    info = cover_sub.add_parser("info", help="summarize a tower file")
    info.add_argument("file")
    info.set_defaults(func=cmd_info)

    con = sub.add_parser("construct", help="run a polygonal construction on a tower file")
    con.add_argument("--kind", required=True, choices=["bigonal", "trigonal", "trigonal-inverse", "tetragonal"])
    con.add_argument("input")
    con.add_argument("-o", "--output", required=True, help="output prefix")
    con.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="run a named verification suite")
    ver.add_argument("--suite", required=True, choices=sorted(SUITES))
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cases", type=int, default=None)
    ver.set_defaults(func=cmd_verify)

    ln = sub.add_parser("lines", help="lines on a blown-up plane")
    ln.add_argument("--blowups", type=int, required=True)
    ln.add_argument("--nodal", action="store_true")
    ln.add_argument("--segre", action="store_true")
    ln.add_argument("--dot", metavar="FILE")
    ln.set_defaults(func=cmd_lines)

    fp = sub.add_parser("f2", help="quadratic forms on a symplectic F2 space")
    fp.add_argument("--genus", type=int, required=True)
    fp.add_argument("--enumerate-theta", action="store_true")
    fp.set_defaults(func=cmd_f2)

    dg = sub.add_parser("diagram", help="Fano-plane labelings")
    dg.add_argument("--fano-solve", action="store_true")
    dg.add_argument("--require-t", action="store_true")
    dg.set_defaults(func=cmd_diagram)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TowerFormatError, UsageError, NotNodal, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
