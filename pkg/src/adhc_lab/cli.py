"""Command-line front end.

    adhc-lab gen --family c --s 3 --out c3.txt
    adhc-lab gen --random n=10,p=0.4,seed=7
    adhc-lab solve --in c3.txt --budget-states 10000000
    adhc-lab solve --in g.txt --path 0 5 --pattern bwd
    adhc-lab analyze --in c3.txt --op expander --params nu=0.1,tau=0.1
    adhc-lab verify-sharpness --family c --s 1-4
    adhc-lab crosscheck --n 8 --count 500 --p-grid 0.2,0.5,0.8
    adhc-lab sweep --n-range 4-20 --p-grid 0.3,0.5,0.7 --seeds 50

Graphs travel in the line-oriented edge-list format; every other result is a
report (JSON Lines by default, ``--format csv`` for a flat projection).
``gen`` records a family's partition in a ``# partition:`` comment, which
``analyze`` picks up when ``--partition`` is not given.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import harness
from .generators import ExtremalSpec, RandomModel, generate_extremal, random_oriented
from .graph import ArcError, OrientedGraph, degree_profile, exact
from .harness import ExperimentConfig, Kind, Report, Status
from .io import read_graph, write_graph
from .partition import Partition4, PartitionError
from .solver import BudgetExceeded, find_adhc, find_adhp_between
from .structure import (
    ExpanderParams,
    ExpanderTooLarge,
    ExtensionFailed,
    Mode,
    TargetUnreachable,
    build_bd_path,
    check_nice_partition,
    classify_good_bad,
    derive_nice_partition,
    extend_to_proper_path,
    find_special_arcs,
    is_robust_outexpander,
)

log = logging.getLogger("adhc_lab")

ANALYZE_OPS = ("sigma", "expander", "nice-partition", "classify", "special-arcs", "proper-path", "bd-path")
_PARTITION_RE = re.compile(r"^#\s*partition:\s*(.+)$", re.M)


class UsageError(Exception):
    pass


def parse_kv(text: str | None) -> dict[str, str]:
    """``"a=1,b=x"`` -> ``{"a": "1", "b": "x"}``."""
    out: dict[str, str] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise UsageError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def parse_int_range(text: str) -> list[int]:
    """``"1-4"``, ``"2,3,5"`` or a mix such as ``"4-8,12"``."""
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "-" in chunk[1:]:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            out.append(int(chunk))
    return out


def parse_floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def format_partition(p: Partition4) -> str:
    return "/".join(",".join(map(str, part.to_list())) for part in (p.a, p.b, p.c, p.d))


def parse_partition(text: str, n: int) -> Partition4:
    parts = text.strip().split("/")
    if len(parts) != 4:
        raise UsageError("partition needs four '/'-separated parts A/B/C/D")
    lists = [[int(x) for x in re.split(r"[,\s]+", s.strip()) if x] for s in parts]
    return Partition4.from_lists(n, *lists)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _single_report(kind: Kind, params: dict, row: dict, out: str | None, t0: float) -> Report:
    config = ExperimentConfig(kind, params, out)
    return Report(config, [row], {}, {"elapsed_s": round(time.perf_counter() - t0, 3)})


# -- subcommands --------------------------------------------------------------


def cmd_gen(args) -> int:
    if bool(args.family) == bool(args.random):
        raise UsageError("give exactly one of --family or --random")
    if args.family:
        if args.s is None:
            raise UsageError("--family needs --s")
        inst = generate_extremal(ExtremalSpec(args.family, args.s), seed=args.seed)
        g = inst.graph
        comment = (
            f"family: {inst.spec.family} s={inst.spec.s} seed={args.seed}\n"
            f"partition: {format_partition(inst.partition)}"
        )
    else:
        kv = parse_kv(args.random)
        try:
            n = int(kv["n"])
            p = float(kv.get("p", 0.5))
        except KeyError:
            raise UsageError("--random needs at least n=<N>") from None
        seed = int(kv.get("seed", args.seed if args.seed is not None else 0))
        g = random_oriented(RandomModel(n, p, seed))
        comment = f"random: n={n} p={p} seed={seed}"
        inst = None

    if args.format == "json":
        row = {"n": g.n, "arcs": [list(a) for a in g.arcs()], "status": Status.INFO.value}
        if inst is not None:
            row.update(family=inst.spec.family, s=inst.spec.s, partition=inst.partition.to_json())
        cfg = ExperimentConfig(Kind.ANALYZE, {"op": "gen", "comment": comment}, args.out)
        _emit(Report(cfg, [row]).to_jsonl(), args.out)
    elif args.format == "csv":
        _emit("tail,head\n" + "".join(f"{u},{v}\n" for u, v in g.arcs()), args.out)
    else:
        _emit(write_graph(g, comment), args.out)
    return 0


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    g = read_graph(_read_input(args.input))
    params = {"input": args.input, "budget_states": args.budget_states, "time_limit": args.time_limit}
    if args.path:
        x, y = args.path
        params.update(path=[x, y], pattern=args.pattern)
    row: dict = {"n": g.n}
    try:
        if args.path:
            res = find_adhp_between(g, x, y, args.pattern, args.budget_states, args.time_limit)
        else:
            res = find_adhc(g, args.budget_states, args.time_limit)
        row.update(verdict=res.verdict.value, states=res.states,
                   witness=list(res.witness.vertices) if res.witness else None,
                   directions=[d.value for d in res.witness.directions] if res.witness else None,
                   status=Status.INFO.value)
    except BudgetExceeded as e:
        row.update(verdict=Status.INCONCLUSIVE.value, states=e.states, witness=None, directions=None,
                   status=Status.INCONCLUSIVE.value)
    rep = _single_report(Kind.ANALYZE, {"op": "solve", **params}, row, args.out, t0)
    _emit(rep.render(args.format or "json"), args.out)
    return rep.exit_code


def _partition_for(args, text: str, g: OrientedGraph) -> Partition4:
    if args.partition:
        return parse_partition(args.partition, g.n)
    m = _PARTITION_RE.search(text)
    if m:
        return parse_partition(m.group(1), g.n)
    raise UsageError("this op needs a partition: pass --partition A/B/C/D or use a file written by 'gen --family'")


def _expander_params(kv: dict) -> ExpanderParams:
    return ExpanderParams(exact(kv.get("nu", "0.1")), exact(kv.get("tau", kv.get("nu", "0.1"))))


def _analyze_row(op: str, g: OrientedGraph, kv: dict, args, text: str) -> dict:
    if op == "sigma":
        prof = degree_profile(g)
        return {"sigma_pm": prof.sigma_pm, "delta0": prof.delta0,
                "threshold": harness.ore_threshold(g.n),
                "out_degrees": [o for o, _ in prof.per_vertex], "in_degrees": [i for _, i in prof.per_vertex]}
    if op in ("expander", "nice-partition"):
        params = _expander_params(kv)
        mode = Mode(kv.get("mode", "exact"))
        rep = is_robust_outexpander(g, params, mode, samples=int(kv.get("samples", 2000)), seed=args.seed or 0)
        row = rep.to_json()
        if op == "nice-partition":
            if rep.verdict:
                row["derived"] = None
            else:
                dp = derive_nice_partition(g, rep)
                nice = check_nice_partition(dp.graph, dp.partition, exact(kv.get("epsilon", str(params.nu))))
                row["derived"] = {"partition": dp.partition.to_json(), "reversed": dp.reversed,
                                  "cross_arcs": nice.cross_arcs, "np1": nice.np1, "np2": nice.np2, "np3": nice.np3}
        return row
    p = _partition_for(args, text, g)
    delta = exact(kv.get("delta", "0.1"))
    if op == "classify":
        labels = classify_good_bad(g, p, delta)
        return {"delta": delta, "good": labels.good.to_list(), "bad": labels.bad.to_list()}
    if op == "special-arcs":
        return {"special_arcs": [list(a) for a in find_special_arcs(g, p)]}
    labels = classify_good_bad(g, p, delta)
    if op == "proper-path":
        out = []
        for arc in find_special_arcs(g, p):
            try:
                pp = extend_to_proper_path(g, p, labels, arc)
                out.append({"arc": list(arc), "path": list(pp.vertices)})
            except ExtensionFailed as e:
                out.append({"arc": list(arc), "path": None, "failed_at": e.choice_point})
        return {"delta": delta, "proper_paths": out}
    order = int(kv.get("order", 3))
    try:
        walk = build_bd_path(g, p, labels, order)
        return {"delta": delta, "order": order, "path": list(walk.vertices)}
    except TargetUnreachable as e:
        return {"delta": delta, "order": order, "path": None, "reason": str(e)}


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    text = _read_input(args.input)
    g = read_graph(text)
    kv = parse_kv(args.params)
    row = {"op": args.op, "n": g.n, **_analyze_row(args.op, g, kv, args, text), "status": Status.INFO.value}
    params = {"op": args.op, "input": args.input, "params": kv, "partition": args.partition, "seed": args.seed}
    rep = _single_report(Kind.ANALYZE, params, row, args.out, t0)
    _emit(rep.render(args.format or "json"), args.out)
    return rep.exit_code


def _finish(rep: Report, args) -> int:
    text = rep.render(args.format or "json")
    _emit(text, args.out)
    c = rep.counts()
    log.info("%s: %d pass, %d fail, %d inconclusive", rep.config.kind.value, c["PASS"], c["FAIL"], c["INCONCLUSIVE"])
    return rep.exit_code


def cmd_verify_sharpness(args) -> int:
    families = [f.strip() for f in args.family.split(",")]
    if args.s:
        plan = {f: parse_int_range(args.s) for f in families}
    else:
        default = {"a": [1], "b": [2, 3, 4, 5], "c": [1, 2, 3, 4]}
        plan = {f: default[f.lower()] for f in families}
    rep = harness.run_sharpness(plan, budget=args.budget_states, time_limit=args.time_limit,
                                seed=args.seed, output_path=args.out)
    return _finish(rep, args)


def cmd_crosscheck(args) -> int:
    count = None if args.count is None else args.count
    rep = harness.run_crosscheck(args.n, count, parse_floats(args.p_grid), args.seed or 0, output_path=args.out)
    return _finish(rep, args)


def cmd_sweep(args) -> int:
    gammas = [Fraction(x) for x in args.gammas.split(",")] if args.gammas else harness.DEFAULT_GAMMAS
    extremal = []
    for item in (args.extremal or "").split(","):
        if item.strip():
            fam, s = item.strip().split(":")
            extremal.append((fam, int(s)))
    rep = harness.run_sweep(
        parse_int_range(args.n_range), parse_floats(args.p_grid), args.seeds, gammas,
        seed=args.seed or 0, extremal=extremal, near_regular=not args.no_near_regular,
        solve_max_n=args.solve_max_n, budget_states=args.budget_states, output_path=args.out,
    )
    return _finish(rep, args)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--budget-states", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="adhc-lab", description="Antidirected Hamilton cycle lab for oriented graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write an extremal or random graph")
    g.add_argument("--family", choices=("a", "b", "c", "A", "B", "C"))
    g.add_argument("--s", type=int)
    g.add_argument("--random", metavar="n=N,p=P,seed=S")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="exact ADHC / fixed-endpoint ADHP search")
    s.add_argument("--in", dest="input", required=True, help="graph file, or - for stdin")
    s.add_argument("--path", nargs=2, type=int, metavar=("X", "Y"))
    s.add_argument("--pattern", choices=("fwd", "bwd"), default="fwd")
    s.add_argument("--time-limit", type=float, default=None)
    s.set_defaults(func=cmd_solve)

    a = sub.add_parser("analyze", parents=[common], help="structural checks on one graph")
    a.add_argument("--in", dest="input", required=True)
    a.add_argument("--op", choices=ANALYZE_OPS, required=True)
    a.add_argument("--params", default="", metavar="k=v,...")
    a.add_argument("--partition", default=None, metavar="A/B/C/D")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-sharpness", parents=[common], help="sigma+- and solver on the extremal families")
    v.add_argument("--family", default="a,b,c")
    v.add_argument("--s", default=None, help="e.g. 1-4 or 2,3")
    v.add_argument("--time-limit", type=float, default=None)
    v.set_defaults(func=cmd_verify_sharpness)

    c = sub.add_parser("crosscheck", parents=[common], help="solver against the permutation oracle")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--count", type=int, default=None, help="omit for exhaustive enumeration (n <= 5)")
    c.add_argument("--p-grid", default="0.2,0.5,0.8")
    c.set_defaults(func=cmd_crosscheck)

    w = sub.add_parser("sweep", parents=[common], help="degree statistics and solver over a random corpus")
    w.add_argument("--n-range", default="4-12")
    w.add_argument("--p-grid", default="0.3,0.5,0.7,0.9")
    w.add_argument("--seeds", type=int, default=10)
    w.add_argument("--gammas", default=None, help="comma list of fractions, e.g. 1/20,1/10")
    w.add_argument("--extremal", default=None, help="e.g. c:3,b:4")
    w.add_argument("--no-near-regular", action="store_true")
    w.add_argument("--solve-max-n", type=int, default=20)
    w.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ArcError, PartitionError, ExpanderTooLarge, ValueError) as e:
        print(f"adhc-lab {args.command}: error: {e}", file=sys.stderr)
        return 64
    except FileNotFoundError as e:
        print(f"adhc-lab {args.command}: error: {e}", file=sys.stderr)
        return 66


if __name__ == "__main__":
    sys.exit(main())
