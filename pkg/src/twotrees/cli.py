"""Command-line front end.  Every command writes JSON lines (or DOT) to
stdout; exit status 2 flags bad input, 1 a falsification, 0 otherwise."""

from __future__ import annotations

import argparse
import json
import sys

from .degseq import SequenceError, erdos_gallai_violation, is_graphic, layoff, parse_sequence
from .graphs import DEFAULT_REALIZATION_CAP, GraphError, SimpleGraph, canonical_key, subgraph_contains
from .hosts import universal_host
from .potential import Falsification, HypothesisError, build_construction
from .twotree import catalog_record, enumerate_two_trees
from .verify import extremal_example, strong_witness, verify_theorem, weak_missing


def _emit(out, obj):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _sequence(text: str) -> tuple:
    try:
        return parse_sequence(text)
    except SequenceError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_check(args, out):
    seq = args.sequence
    bad = erdos_gallai_violation(seq) if sum(seq) % 2 == 0 else None
    _emit(out, {"sequence": list(seq), "n": len(seq), "sigma": sum(seq), "graphic": is_graphic(seq),
                "even": sum(seq) % 2 == 0, "erdos_gallai_t": bad})
    return 0


def cmd_layoff(args, out):
    _emit(out, {"sequence": list(args.sequence), "k": args.k, "residual": list(layoff(args.sequence, args.k))})
    return 0


def cmd_enumerate(args, out):
    for t in enumerate_two_trees(args.k, cap=args.cap):
        _emit(out, catalog_record(t))
    return 0


def cmd_hosts(args, out):
    host = universal_host(args.k)
    if args.dot:
        out.write(host.graph.to_dot() + "\n")
    else:
        _emit(out, {"k": host.k, "family": host.family, "graph": host.graph.to_json(),
                    "degrees": host.graph.degrees()})
    return 0


def cmd_pipeline(args, out):
    c = build_construction(args.sequence, args.k, seed=args.seed)
    top = c.graph.induced(list(c.witness))
    emb = subgraph_contains(top, universal_host(args.k).graph)
    _emit(out, {
        "sequence": list(c.sequence), "k": c.k, "realization": c.graph.to_json(),
        "witness": list(c.witness), "on_top": c.on_top, "route": c.route,
        "host_embedding": None if emb is None else {str(h): c.witness[v] for h, v in sorted(emb.items())},
    })
    return 0


def cmd_verify(args, out):
    mode = "exhaustive" if args.exhaustive else "sampled"
    report = verify_theorem(args.k, args.n, mode=mode, samples=args.samples, seed=args.seed)
    for line in report.lines():
        out.write(line + "\n")
    return 1 if report.falsifications else 0


def cmd_extremal(args, out):
    ex = extremal_example(args.k, args.n)
    rec = {"k": args.k, "n": args.n, "sequence": list(ex.sequence), "sigma": ex.sigma, "bound": ex.bound,
           "adjusted": ex.adjusted, "graphic": ex.graphic}
    if ex.graphic and args.n <= DEFAULT_REALIZATION_CAP:
        missing = weak_missing(ex.sequence, args.k)
        rec["refutation"] = {
            "strong": strong_witness(ex.sequence, args.k) is not None,
            "weak": not missing,
            "missing": [canonical_key(t).hex() for t in missing],
        }
    _emit(out, rec)
    return 0


def cmd_dot(args, out):
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    if "graph" in data and "edges" not in data:
        data = data["graph"]
    elif "realization" in data:
        data = data["realization"]
    out.write(SimpleGraph.from_json(data).to_dot() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twotrees", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="graphicality of a sequence")
    s.add_argument("sequence", type=_sequence)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("layoff", help="residual after laying off d_K")
    s.add_argument("sequence", type=_sequence)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_layoff)

    s = sub.add_parser("enumerate", help="catalog of 2-trees on K vertices")
    s.add_argument("k", type=int)
    s.add_argument("--cap", type=int, default=10)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("hosts", help="universal host on K vertices")
    s.add_argument("k", type=int)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_hosts)

    s = sub.add_parser("pipeline", help="realization containing every 2-tree on K vertices")
    s.add_argument("sequence", type=_sequence)
    s.add_argument("k", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("verify", help="check the threshold statement for (K, N)")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("extremal", help="sharpness example for (K, N)")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("dot", help="DOT rendering of a graph JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_dot)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except Falsification as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        return 1
    except (SequenceError, HypothesisError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
