"""Command-line interface.

Subcommands: dist, realize, embed-sub1, embed-beta1, expander, walkprod,
solve, verify.  Exit codes: 0 success, 1 verification failure, 2 usage or
input errors.  Identical invocations (same flags, same seeds) produce
byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import _jsonio
from .errors import InputError, ResourceLimitError, UnsupportedCaseError
from .graph import read_graph, write_graph
from .model import (
    PowerLawParams,
    degree_counts,
    interval_size_bounds,
    interval_volume_bounds,
    totals,
)
from .realizer import interval_degree_sequence, realize
from .report import SCHEMA

_COUNTS_LIMIT = 100_000


def _cmd_dist(args) -> int:
    p = PowerLawParams(args.alpha, args.beta)
    t = totals(p)
    record = {
        "schema": SCHEMA,
        "alpha": args.alpha,
        "beta": args.beta,
        "delta": p.delta,
        "n_exact": t.n_exact,
        "edge_half_sum_exact": t.edge_half_sum_exact,
        "estimates": {"n": t.n_estimate, "m": t.m_estimate},
    }
    if p.delta <= _COUNTS_LIMIT:
        record["counts"] = degree_counts(p)
    if args.interval:
        x, y = args.interval
        size = interval_size_bounds(p, x, y)
        record["bounds"] = {
            "x": x,
            "y": y,
            "size": {"lower": size.lower, "upper": size.upper, "exact": size.exact},
        }
        if p.beta == 1 or y == 1.0:
            vol = interval_volume_bounds(p, x, y)
            record["bounds"]["volume"] = {
                "lower": vol.lower,
                "upper": vol.upper,
                "exact": vol.exact,
            }
    sys.stdout.write(_jsonio.dumps(record))
    return 0


def _cmd_realize(args) -> int:
    p = PowerLawParams(args.alpha, args.beta)
    d = interval_degree_sequence(p, args.from_degree, args.to_degree)
    if len(d) == 0:
        raise InputError("interval contains no vertices after flooring")
    graph, cert = realize(d)
    Path(args.out).write_text(write_graph(graph))
    record = {"schema": SCHEMA, **cert.to_json_dict()}
    text = _jsonio.dumps(record)
    if args.cert:
        Path(args.cert).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_embed_sub1(args) -> int:
    from .embed_sub1 import embed_sub1

    g = read_graph(Path(args.infile).read_text())
    graph, report = embed_sub1(g, args.beta)
    Path(args.out).write_text(write_graph(graph))
    Path(args.report).write_text(_jsonio.dumps(report.to_dict()))
    return 0


def _cmd_embed_beta1(args) -> int:
    from .embed_beta1 import embed_beta1

    g = read_graph(Path(args.infile).read_text())
    graph, report = embed_beta1(g, args.d, args.seed, args.k)
    Path(args.out).write_text(write_graph(graph))
    Path(args.report).write_text(_jsonio.dumps(report.to_dict()))
    return 0


def _cmd_expander(args) -> int:
    from .embed_beta1 import random_regular_expander

    cert = random_regular_expander(args.n, args.d, args.seed)
    if args.out:
        Path(args.out).write_text(write_graph(cert.graph))
    sys.stdout.write(_jsonio.dumps({"schema": SCHEMA, **cert.to_dict()}))
    return 0


def _cmd_walkprod(args) -> int:
    from .embed_beta1 import random_regular_expander, walk_product

    g = read_graph(Path(args.infile).read_text())
    h = random_regular_expander(g.vertex_count, args.d, args.seed)
    wp = walk_product(g, h, args.k)
    if args.out:
        Path(args.out).write_text(write_graph(wp.product))
    sys.stdout.write(
        _jsonio.dumps(
            {
                "schema": SCHEMA,
                "n_d": wp.n_d,
                "k": args.k,
                "d": args.d,
                "lambda": h.lam,
                "max_degree": int(wp.product.degrees().max()) if wp.n_d else 0,
                "self_loops": sum(1 for v in range(wp.n_d) if wp.product.has_loop(v)),
            }
        )
    )
    return 0


def _cmd_solve(args) -> int:
    from .solver import exact_mis

    g = read_graph(Path(args.infile).read_text())
    res = exact_mis(g, budget=args.budget)
    sys.stdout.write(
        _jsonio.dumps(
            {
                "size": res.size,
                "optimal": res.optimal,
                "witness": res.witness,
                "nodes_explored": res.nodes_explored,
            }
        )
    )
    return 0


def _cmd_verify(args) -> int:
    import json

    from .verify import verify_embedding

    plg = read_graph(Path(args.plg).read_text())
    report = json.loads(Path(args.report).read_text())
    original = read_graph(Path(args.infile).read_text())
    result = verify_embedding(plg, report, original)
    sys.stdout.write(_jsonio.dumps(result.to_dict()))
    return 0 if result.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plg")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="degree distribution calculators")
    d.add_argument("--alpha", type=float, required=True)
    d.add_argument("--beta", type=float, required=True)
    d.add_argument("--interval", nargs=2, type=float, metavar=("X", "Y"))
    d.set_defaults(fn=_cmd_dist)

    r = sub.add_parser("realize", help="realize a degree interval as a multigraph")
    r.add_argument("--alpha", type=float, required=True)
    r.add_argument("--beta", type=float, required=True)
    r.add_argument("--from", dest="from_degree", type=int, required=True)
    r.add_argument("--to", dest="to_degree", type=int, required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--cert")
    r.set_defaults(fn=_cmd_realize)

    e1 = sub.add_parser("embed-sub1", help="embed a graph into a PLG, beta < 1")
    e1.add_argument("--beta", type=float, required=True)
    e1.add_argument("--in", dest="infile", required=True)
    e1.add_argument("--out", required=True)
    e1.add_argument("--report", required=True)
    e1.set_defaults(fn=_cmd_embed_sub1)

    e2 = sub.add_parser("embed-beta1", help="embed a walk product into a PLG, beta = 1")
    e2.add_argument("--in", dest="infile", required=True)
    e2.add_argument("--d", type=int, required=True)
    e2.add_argument("--k", type=int, default=None)
    e2.add_argument("--seed", type=int, required=True)
    e2.add_argument("--out", required=True)
    e2.add_argument("--report", required=True)
    e2.set_defaults(fn=_cmd_embed_beta1)

    x = sub.add_parser("expander", help="random regular graph with spectral certificate")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--d", type=int, required=True)
    x.add_argument("--seed", type=int, required=True)
    x.add_argument("--out")
    x.set_defaults(fn=_cmd_expander)

    w = sub.add_parser("walkprod", help="k-walk product over a seeded expander")
    w.add_argument("--in", dest="infile", required=True)
    w.add_argument("--d", type=int, required=True)
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--seed", type=int, required=True)
    w.add_argument("--out")
    w.set_defaults(fn=_cmd_walkprod)

    s = sub.add_parser("solve", help="exact maximum independent set")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--budget", type=int, default=100_000_000)
    s.set_defaults(fn=_cmd_solve)

    v = sub.add_parser("verify", help="re-verify an embedding report")
    v.add_argument("--plg", required=True)
    v.add_argument("--report", required=True)
    v.add_argument("--in", dest="infile", required=True)
    v.set_defaults(fn=_cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (InputError, UnsupportedCaseError, ResourceLimitError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
