"""Command-line front end.

Every fact goes to stdout on its own line as ``key=value``.  Domain errors
print ``error[<code>]: ...`` on stderr and exit 1; usage errors exit 2.
A bare ``--`` separating parameter groups is accepted and ignored, so
negative coordinates never get mistaken for flags.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import cycles, lattice, net as netmod, semantics, transforms
from .errors import CycloidError
from .lattice import CycloidParams, Point
from .verify import sweep


def _params(values) -> CycloidParams:
    return CycloidParams.of(values)


def _take(parser, args, count, what):
    if len(args.numbers) != count:
        parser.error(f"{args.command} expects {count} integers ({what}), got {len(args.numbers)}")
    return args.numbers


def _witness_lines(prefix: str, w: cycles.CycleWitness) -> list[str]:
    return [f"{prefix}i={w.i}", f"{prefix}j={w.j}", f"{prefix}u={w.u}", f"{prefix}v={w.v}"]


def _opt(value) -> str:
    return "n/a" if value is None else str(value)


def cmd_info(parser, args, out):
    p = _params(_take(parser, args, 4, "A B G D"))
    w = cycles.cyc(p)
    out.append(f"params={','.join(map(str, p.as_tuple()))}")
    out.append(f"area={p.area}")
    out.append(f"cyc={w.length}")
    out.extend(_witness_lines("witness_", w))
    out.append(f"regular={str(p.is_regular).lower()}")
    out.append(f"coregular={str(p.is_coregular).lower()}")
    out.append(f"case_c={_opt(cycles.cyc_case_c(p))}")
    out.append(f"case_d={_opt(cycles.cyc_case_d(p))}")
    out.append(f"case_e={_opt(cycles.cyc_case_e(p))}")
    for name, corner in zip("OPRQ", lattice.corners(p)):
        out.append(f"corner_{name}={corner}")


def cmd_net(parser, args, out):
    p = _params(_take(parser, args, 4, "A B G D"))
    built = netmod.build_net(p)
    text = netmod.export_dot(built) if args.format == "dot" else netmod.export_json(built)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        out.append(f"written={args.out}")
    else:
        out.append(text.rstrip("\n"))


def cmd_equiv(parser, args, out):
    a, b, g, d, x1, y1, x2, y2 = _take(parser, args, 8, "A B G D -- X1 Y1 X2 Y2")
    w = lattice.equivalence_witness(_params((a, b, g, d)), (x1, y1), (x2, y2))
    out.append("not equivalent" if w is None else f"equivalent ({w.m},{w.n})")


def cmd_canonical(parser, args, out):
    a, b, g, d, x, y = _take(parser, args, 6, "A B G D -- X Y")
    out.append(f"canonical={lattice.canonical(_params((a, b, g, d)), (x, y))}")


def cmd_cyc(parser, args, out):
    p = _params(_take(parser, args, 4, "A B G D"))
    if args.method == "formula":
        w = cycles.cyc(p)
        out.append(f"cyc={w.length}")
        out.extend(_witness_lines("witness_", w))
    elif args.method == "lattice":
        w = cycles.cyc_lattice_min(p)
        out.append(f"cyc={w.length}")
        out.extend(_witness_lines("witness_", w))
    elif args.method == "graph":
        g = cycles.shortest_cycle_graph(netmod.build_net(p))
        out.append(f"cyc={g.length}")
        out.append("cycle=" + " ".join(f"T:{t}" for t in g.cycle))
    else:
        report = cycles.compare_methods(p)
        w = cycles.cyc(p, verify=True)
        out.append(f"formula={report['formula'].length}")
        out.append(f"lattice={report['lattice'].length}")
        out.append(f"graph={report['graph'].length}")
        out.append("agreement=ok")
        out.append(f"cyc={w.length}")
        out.extend(_witness_lines("witness_", w))


def cmd_iso(parser, args, out):
    nums = _take(parser, args, 8, "A1 B1 G1 D1 -- A2 B2 G2 D2")
    p1, p2 = _params(nums[:4]), _params(nums[4:])
    out.append(f"area1={p1.area}")
    out.append(f"area2={p2.area}")
    verdict = transforms.are_isomorphic_by_closure(p1, p2, args.steps)
    out.append("closure=" + ("isomorphic" if verdict else "not-shown"))
    if args.oracle:
        n1, n2 = netmod.build_net(p1), netmod.build_net(p2)
        if transforms.net_isomorphic_oracle(n1, n2):
            out.append("oracle=isomorphic")
            out.append("oracle_kinds=preserved")
        elif transforms.net_isomorphic_oracle(n1, n2, allow_kind_swap=True):
            out.append("oracle=isomorphic")
            out.append("oracle_kinds=swapped")
        else:
            out.append("oracle=not-isomorphic")


def cmd_sim(parser, args, out):
    p = _params(_take(parser, args, 4, "A B G D"))
    built = netmod.build_net(p)
    try:
        marking = semantics.parse_marking(built, args.marking)
    except ValueError as exc:
        if isinstance(exc, CycloidError):
            raise
        parser.error(str(exc))
    rng = random.Random(args.seed)
    out.append(f"seed={args.seed}")
    out.append(f"initial={semantics.format_marking(marking)}")
    for step in range(1, args.steps + 1):
        ready = sorted(semantics.enabled_set(built, marking))
        if not ready:
            out.append(f"deadlock={step - 1}")
            break
        t = rng.choice(ready)
        marking = semantics.fire(built, marking, t)
        out.append(f"step={step} fire=T:{t} marking={semantics.format_marking(marking)}")
    out.append(f"final={semantics.format_marking(marking)}")


def cmd_verify(parser, args, out):
    if args.max < 1:
        parser.error("--max must be >= 1")
    report = sweep(args.max)
    out.extend(report.lines())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycloids", description="Cycloid Petri nets C(alpha,beta,gamma,delta).")
    sub = parser.add_subparsers(dest="command", required=True)

    def numbered(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("numbers", nargs="*", type=int, metavar="N")
        return sp

    numbered("info", "area, minimal cycle, regularity and corners")
    sp = numbered("net", "export the built net")
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    sp.add_argument("--out", metavar="PATH")
    numbered("equiv", "decide equivalence of two points")
    numbered("canonical", "canonical representative of a point")
    sp = numbered("cyc", "minimal cycle length")
    sp.add_argument("--method", choices=("formula", "lattice", "graph", "all"), default="formula")
    sp = numbered("iso", "isomorphism by parameter moves")
    sp.add_argument("--steps", type=int, default=8)
    sp.add_argument("--oracle", action="store_true", help="also run the exhaustive net isomorphism search")
    sp = numbered("sim", "random token game")
    sp.add_argument("--marking", required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("verify", help="invariant sweep over [1,N]^4")
    sp.add_argument("--max", type=int, required=True)
    return parser


COMMANDS = {
    "info": cmd_info,
    "net": cmd_net,
    "equiv": cmd_equiv,
    "canonical": cmd_canonical,
    "cyc": cmd_cyc,
    "iso": cmd_iso,
    "sim": cmd_sim,
    "verify": cmd_verify,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = [a for a in (sys.argv[1:] if argv is None else argv) if a != "--"]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        status = COMMANDS[args.command](parser, args, out) or 0
    except SystemExit as exc:
        return int(exc.code or 0)
    except CycloidError as exc:
        for line in out:
            print(line, file=stdout)
        print(f"error[{exc.code}]: {exc}", file=stderr)
        return 1
    for line in out:
        print(line, file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
