"""``percolate`` command line.

Exit codes: 0 success / YES, 1 NO / nothing found, 2 usage or precondition
error, 3 internal assertion failure. Vertex ids on the command line and in
every output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from bootperc.constructors import (InternalAssertionFailed, WitnessReplayFailed, extend,
                                   find_small_certificate)
from bootperc.deciders import NotConnected, Witness, decide
from bootperc.engine import NEVER, percolate
from bootperc.families import NotBipartite, gamma_family, representative_t0u
from bootperc.graph import GraphFormatError, is_bipartite, is_connected, parse_graph
from bootperc.oracle import DEFAULT_LIMIT, TooLarge, brute_force
from bootperc.reduction import (BadK, CnfFormatError, NotSatisfying, build_reduction,
                                parse_assignment, parse_dimacs, verify_reduction)

SCHEMA = "percolate/1"


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        print(text)


def _ids(vs) -> str:
    return ",".join(str(v + 1) for v in sorted(vs)) or "-"


def _load_graph(path: str):
    return parse_graph(Path(path).read_text())


def _vertex(g, one_based: int) -> int:
    if not 1 <= one_based <= g.n:
        raise UsageError(f"vertex {one_based} out of range 1..{g.n}")
    return one_based - 1


def _seed(args, g) -> list[int]:
    if args.seed is not None and args.seed_file is not None:
        raise UsageError("give --seed or --seed-file, not both")
    if args.seed_file is not None:
        tokens = Path(args.seed_file).read_text().split()
    elif args.seed is not None:
        tokens = [t for t in args.seed.split(",") if t.strip()]
    else:
        tokens = []
    try:
        return [_vertex(g, int(t)) for t in tokens]
    except ValueError as exc:
        raise UsageError(f"bad seed id: {exc}") from None


def cmd_simulate(args) -> int:
    g = _load_graph(args.graph)
    trace = percolate(g, _seed(args, g))
    times = " ".join("never" if t == NEVER else str(int(t)) for t in trace.times)
    t = "never" if trace.t == NEVER else str(int(trace.t))
    _emit(args, trace.to_json(), f"times: {times}\nt={t}")
    return 0


def cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    ok, w = decide(g, args.k, args.mode, prune=not args.no_prune, threads=args.threads)
    payload = {"answer": "YES" if ok else "NO", "k": args.k, "mode": args.mode,
               "witness": w.to_json() if w else None}
    text = "YES\n" + json.dumps(w.to_json()) if ok else "NO"
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    t, seed = brute_force(g, args.limit, threads=args.threads)
    _emit(args, {"t": t, "seed": sorted(v + 1 for v in seed)}, f"t={t}\nseed: {_ids(seed)}")
    return 0


def cmd_families(args) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise NotConnected("graph must be connected")
    u = _vertex(g, args.u)
    t0 = sorted(v + 1 for v in representative_t0u(g, u))
    gamma = None
    if is_bipartite(g) is not None:
        gamma = [{**m.describe(), "members": sorted(v + 1 for v in m.members)}
                 for m in gamma_family(g, u)]
    payload = {"u": args.u, "t0u": t0, "gamma": gamma}
    if args.json:
        _emit(args, payload, "")
    else:
        lines = [f"T0(u={args.u}): {','.join(map(str, t0)) or '-'}"]
        if gamma is None:
            lines.append("gamma: graph is not bipartite")
        for m in gamma or []:
            tag = m["kind"] + "".join(f" {key}={m[key]}" for key in ("v", "i") if key in m)
            lines.append(f"{tag}: {','.join(map(str, m['members'])) or '-'}")
        print("\n".join(lines))
    return 0


def cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    data = json.loads(Path(args.witness).read_text())
    w = Witness.from_json(data.get("witness", data))
    hull = extend(g, w)
    trace = percolate(g, hull)
    payload = {"hull_set": sorted(v + 1 for v in hull), "t": int(trace.t), "kind": w.kind}
    _emit(args, payload, f"hull set: {_ids(hull)}\nt={int(trace.t)}")
    return 0


def cmd_certificate(args) -> int:
    g = _load_graph(args.graph)
    cap = args.cap if args.cap is not None else {3: 4, 4: 8}[args.k]
    f = find_small_certificate(g, _vertex(g, args.vertex), args.k, cap)
    payload = {"vertex": args.vertex, "k": args.k, "cap": cap,
               "f": None if f is None else sorted(v + 1 for v in f)}
    _emit(args, payload, "NONE" if f is None else _ids(f))
    return 1 if f is None else 0


def cmd_reduce(args) -> int:
    cnf = parse_dimacs(Path(args.cnf).read_text())
    g, gm = build_reduction(cnf, args.k, intra_clause=not args.no_intra_clause)
    if not gm.Y:
        print("warning: no complementary literal pair; z and z' form their own component",
              file=sys.stderr)
    comment = f"gadget graph, k={args.k}, {len(cnf.clauses)} clauses"
    text = g.to_text(comment)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.map:
        Path(args.map).write_text(json.dumps({"schema": SCHEMA, **gm.to_json()}) + "\n")
    if args.out:
        _emit(args, {"n": g.n, "m": g.m, "Y": len(gm.Y)}, f"n={g.n} m={g.m} |Y|={len(gm.Y)}")
    return 0


def cmd_verify_reduction(args) -> int:
    cnf = parse_dimacs(Path(args.cnf).read_text())
    assignment = parse_assignment(Path(args.assignment).read_text())
    report = verify_reduction(cnf, assignment, args.k, intra_clause=not args.no_intra_clause)
    lines = [f"n={report.n} t={report.to_json()['t']} bipartite={report.bipartite} "
             f"percolates={report.percolates}",
             f"schedule: {'ok' if report.schedule_ok else 'FAILED'}",
             f"figure labels: {'ok' if not report.failures('figure') else 'FAILED'}"]
    lines += [f"  {c.source}: {c.describe()}" for c in report.failures()]
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="percolate", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, graph=True):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if graph:
            sp.add_argument("--graph", required=True, help="graph file ('p edge' format)")
        sp.set_defaults(func=func)
        return sp

    sp = add("simulate", cmd_simulate, "infection times for a seed set")
    sp.add_argument("--seed", help="comma-separated vertex ids")
    sp.add_argument("--seed-file", help="file with one vertex id per line")

    sp = add("decide", cmd_decide, "polynomial test for t(G) >= k")
    sp.add_argument("--k", type=int, choices=(3, 4), required=True)
    sp.add_argument("--mode", choices=("general", "bipartite"), required=True)
    sp.add_argument("--no-prune", action="store_true", help="enumerate F over every vertex")
    sp.add_argument("--threads", type=int, default=1)

    sp = add("oracle", cmd_oracle, "exhaustive maximum percolation time")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    sp.add_argument("--threads", type=int, default=1)

    sp = add("families", cmd_families, "dump the forced seed families of a vertex")
    sp.add_argument("--u", type=int, required=True)

    sp = add("construct", cmd_construct, "extend a decider witness into a hull set")
    sp.add_argument("--witness", required=True, help="witness JSON from 'decide --json'")

    sp = add("certificate", cmd_certificate, "smallest F infecting a vertex at time k")
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--k", type=int, choices=(3, 4), required=True)
    sp.add_argument("--cap", type=int)

    sp = add("reduce", cmd_reduce, "3-SAT gadget graph", graph=False)
    sp.add_argument("--cnf", required=True)
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("--out", help="graph file (stdout if omitted)")
    sp.add_argument("--map", help="gadget map JSON file")
    sp.add_argument("--no-intra-clause", action="store_true",
                    help="skip conflict vertices between slots of one clause")

    sp = add("verify-reduction", cmd_verify_reduction, "check the gadget schedule", graph=False)
    sp.add_argument("--cnf", required=True)
    sp.add_argument("--assignment", required=True, help="one signed variable per line")
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("--no-intra-clause", action="store_true")
    return p


PRECONDITION = (UsageError, GraphFormatError, CnfFormatError, NotConnected, NotBipartite,
                TooLarge, BadK, NotSatisfying, WitnessReplayFailed, OSError,
                json.JSONDecodeError, KeyError, ValueError, IndexError)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except InternalAssertionFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except PRECONDITION as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
