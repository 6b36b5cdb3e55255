"""Command-line front end.  Exit codes: 0 ok, 1 domain error (JSON on stderr), 2 usage."""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import anngraph, groups, lattice, partitions
from .anngraph import build_graph, laplacian_multiplicity_exact, laplacian_spectrum
from .groups import PGroup
from .homsearch import verify_group_homs_are_graph_homs

_MAX_SAFE_INT = 2**53 - 1


def jsonable(obj):
    """Big integers above 2^53 - 1 become decimal strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _MAX_SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=False, separators=(", ", ": "))


# argument types


def prime(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not groups.is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def nonneg(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"{n} is negative")
    return n


def positive(text):
    n = nonneg(text)
    if n == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def int_list(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list") from None


def pair(text):
    vals = int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return tuple(vals)


def prime_list(text):
    vals = int_list(text)
    for p in vals:
        if not groups.is_prime(p):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
    if not vals:
        raise argparse.ArgumentTypeError("need at least one prime")
    return vals


def exponent_list(text):
    vals = int_list(text)
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("exponents must be positive")
    return vals


# subcommands


def cmd_orbits(args, out):
    G = PGroup.cyclic(args.p, args.k)
    rows = [
        {"i": o.i, "k": o.k, "size": groups.orbit_size(o.k, o.i, G.p), "elements": [g.coords[0] for g in els]}
        for o, els in groups.all_orbits(G)
    ]
    if args.json:
        out.write(dumps(rows) + "\n")
    else:
        for r in rows:
            out.write(f"O({r['k']},{args.p}^{r['i']}) size={r['size']} elements={','.join(map(str, r['elements']))}\n")


def cmd_graph(args, out):
    g = build_graph(PGroup(args.p, args.exponents), max_vertices=args.max_vertices)
    if args.format == "dot":
        out.write(anngraph.to_dot(g))
    else:
        out.write(anngraph.to_json(g) + "\n")


def cmd_spectrum(args, out):
    g = build_graph(PGroup.cyclic(args.p, args.k), max_vertices=args.max_vertices)
    spec = laplacian_spectrum(g)
    if not args.verify_exact:
        out.write(str(spec) + "\n")
        return
    rows = []
    for lam, m in spec.multiplicities().items():
        exact = laplacian_multiplicity_exact(g, lam)
        rows.append({"eigenvalue": lam, "combinatorial": m, "exact": exact})
    out.write(dumps({"spectrum": list(spec.values), "multiplicities": rows,
                     "agree": all(r["combinatorial"] == r["exact"] for r in rows)}) + "\n")


def cmd_degenerate_orbit(args, out):
    (r, k), (s, l) = args.from_, args.to
    res = {"from": [r, k], "to": [s, l], "degenerates": groups.degenerates_cyclic(r, k, s, l)}
    if args.oracle:
        a = PGroup.cyclic(args.p, k).element(args.p**r)
        b = PGroup.cyclic(args.p, l).element(args.p**s)
        res["oracle"] = groups.exists_hom_mapping(a, b, budget=args.max_homs)
    out.write(dumps(res) + "\n")


def cmd_degenerate_element(args, out):
    G, H = PGroup(args.p, args.lam), PGroup(args.p, args.mu)
    a, b = G.element(args.a), H.element(args.b)
    res = {
        "a": list(a.coords),
        "b": list(b.coords),
        "ideal_a": sorted([x.r, x.k] for x in groups.ideal_of(a).generators),
        "ideal_b": sorted([x.r, x.k] for x in groups.ideal_of(b).generators),
        "degenerates": groups.degenerates_general(a, b),
    }
    if args.oracle:
        res["oracle"] = groups.exists_hom_mapping(a, b, budget=args.max_homs)
    out.write(dumps(res) + "\n")


def cmd_homs(args, out):
    if args.check_graph_hom:
        out.write(dumps(verify_group_homs_are_graph_homs(args.p, args.k, args.l, budget=args.max_homs)) + "\n")
        return
    homs = groups.enumerate_homs(PGroup.cyclic(args.p, args.k), PGroup.cyclic(args.p, args.l), args.max_homs)
    out.write(dumps({"count": len(homs), "images_of_1": [f.images[0][0] for f in homs]}) + "\n")


def cmd_lattice(args, out):
    L = lattice.build_lattice(args.primes, args.max_order)
    if args.format == "dot":
        out.write(lattice.export_hasse(L))
    else:
        out.write(lattice.to_json(L) + "\n")


def cmd_chains(args, out):
    if args.strict is not None:
        lam = partitions.StrictPartition(args.strict)
        res = {"strict": list(lam)}
        if args.method in ("formula", "both"):
            res["formula"] = lattice.schur_chain_count(lam)
        if args.method in ("dfs", "both"):
            res["dfs"] = lattice.count_chains_shifted_dfs(lam, bound=args.dfs_bound)
        if args.method == "both":
            res["agree"] = res["formula"] == res["dfs"]
    else:
        p, k = args.node
        pi = lattice.threshold_partition(p, k)
        conv = lattice.CONVENTIONS[args.convention]
        lam = partitions.strict_from_threshold(pi, conv)
        res = {"node": [p, k], "partition": list(pi), "convention": args.convention,
               "strict": list(lam), "chains": lattice.schur_chain_count(lam)}
    out.write(dumps(res) + "\n")


def cmd_gf(args, out):
    res = {"coefficients": [partitions.distinct_part_count(q) for q in range(args.max_q + 1)]}
    if args.lattice_check:
        res["lattice_check"] = lattice.rank_gf_check(lattice.full_threshold_lattice(args.max_q), args.max_q)
    out.write(dumps(res) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anngraphs", description=__doc__)
    parser.add_argument("--max-vertices", type=positive, default=anngraph.DEFAULT_MAX_VERTICES)
    parser.add_argument("--max-homs", type=positive, default=groups.DEFAULT_HOM_BUDGET)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbits", help="orbits of Z/p^k under its automorphisms")
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--k", type=positive, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("graph", help="annihilator graph as DOT or JSON")
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--exponents", type=exponent_list, required=True)
    s.add_argument("--format", choices=["dot", "json"], required=True)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("spectrum", help="Laplacian spectrum of Gamma(Z/p^k)")
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--k", type=positive, required=True)
    s.add_argument("--verify-exact", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("degenerate-orbit", help="degeneration between cyclic orbits")
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--from", dest="from_", type=pair, required=True, metavar="r,k")
    s.add_argument("--to", type=pair, required=True, metavar="s,l")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_degenerate_orbit)

    s = sub.add_parser("degenerate-element", help="degeneration between elements of p-groups")
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--lambda", dest="lam", type=exponent_list, required=True)
    s.add_argument("--a", type=int_list, required=True)
    s.add_argument("--mu", type=exponent_list, required=True)
    s.add_argument("--b", type=int_list, required=True)
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_degenerate_element)

    s = sub.add_parser("homs", help="group homomorphisms Z/p^k -> Z/p^l")
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--k", type=positive, required=True)
    s.add_argument("--l", type=positive, required=True)
    s.add_argument("--check-graph-hom", action="store_true")
    s.set_defaults(func=cmd_homs)

    s = sub.add_parser("lattice", help="Hasse diagram of realized threshold partitions")
    s.add_argument("--primes", type=prime_list, required=True)
    s.add_argument("--max-order", type=positive, required=True)
    s.add_argument("--format", choices=["dot", "json"], required=True)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("chains", help="saturated-chain counts")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--strict", type=int_list)
    g.add_argument("--node", type=pair, metavar="p,k")
    s.add_argument("--method", choices=["formula", "dfs", "both"], default="both")
    s.add_argument("--convention", choices=sorted(lattice.CONVENTIONS), default="minus-i")
    s.add_argument("--dfs-bound", type=positive, default=lattice.SHIFTED_DFS_BOUND)
    s.set_defaults(func=cmd_chains)

    s = sub.add_parser("gf", help="coefficients of prod(1 + z^t)")
    s.add_argument("--max-q", type=nonneg, required=True)
    s.add_argument("--lattice-check", action="store_true")
    s.set_defaults(func=cmd_gf)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "chains" and args.node is not None and not groups.is_prime(args.node[0]):
        parser.print_usage(err)
        err.write(f"anngraphs chains: error: argument --node: {args.node[0]} is not prime\n")
        return 2
    try:
        args.func(args, out)
    except (ValueError, ArithmeticError, groups.BudgetExceeded) as exc:
        err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    return 0


def main():
    sys.exit(run())
