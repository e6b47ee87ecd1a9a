"""Command-line front end.

Negative entries must be attached to their flag: ``--mu=-3,-1,1``.
Exit status is 0 on success, 1 on a domain error (or a failed ``verify``),
2 on a usage error.  Output never uses color, so ``NO_COLOR`` is always
honoured.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms, poset, tableaux, tropical
from .core_partition import check_modulus, rho_k
from .errors import DomainError
from .splitting import SplittingType, c_vector_of_mu, lambda_of_mu, magnitude


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _mu(text: str) -> SplittingType:
    try:
        return SplittingType.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _add_mu(p, required=True):
    p.add_argument("--mu", type=_mu, required=required, help="splitting type, e.g. --mu=-3,-1,1")


def _add_target(p):
    p.add_argument("--mu", type=_mu, help="splitting type, e.g. --mu=-3,-1,1")
    p.add_argument("--cvec", type=_ints, help="C-vector, e.g. --cvec 4,1,0 (needs --k)")
    p.add_argument("--k", type=int, help="modulus matching --cvec")


def _target_cvec(args, parser) -> tuple[int, ...]:
    if (args.mu is None) == (args.cvec is None):
        parser.error("give exactly one of --mu or --cvec")
    if args.mu is not None:
        if args.k is not None and args.k != args.mu.k:
            raise DomainError(f"--k {args.k} disagrees with the {args.mu.k} entries of --mu")
        return c_vector_of_mu(args.mu)
    if args.k is None:
        parser.error("--cvec needs --k")
    check_modulus(args.k)
    if len(args.cvec) != args.k:
        raise DomainError(f"C-vector {args.cvec} has {len(args.cvec)} entries, expected k = {args.k}")
    return poset.as_cvector(args.cvec)


def cmd_lambda(args, parser, out):
    mu = args.mu
    lam = lambda_of_mu(mu)
    c = c_vector_of_mu(mu)
    if args.format == "json":
        doc = {"mu": list(mu), "lambda": list(lam.rows), "cvec": list(c), "rho": rho_k(lam, mu.k), "magnitude": magnitude(mu)}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"lambda {lam}\ncvec {','.join(map(str, c))}\nrho {rho_k(lam, mu.k)}\nmagnitude {magnitude(mu)}\n")


def cmd_count(args, parser, out):
    out.write(f"{poset.count_maximal_chains(_target_cvec(args, parser))}\n")


def cmd_hasse(args, parser, out):
    d = poset.build_hasse(_target_cvec(args, parser), max_nodes=args.max_nodes)
    if args.format == "dot":
        out.write(d.to_dot())
    elif args.format == "json":
        out.write(d.to_json())
    else:
        counts = d.chain_counts()
        for v in d.nodes:
            out.write(f"{','.join(map(str, v))}\t{sum(v)}\t{counts[v]}\n")


def cmd_chains(args, parser, out):
    for chain in poset.enumerate_maximal_chains(_target_cvec(args, parser), max_chains=args.max_chains):
        out.write(" ".join(map(str, chain.residues)) + "\n")


def cmd_tableaux(args, parser, out):
    mu, g = args.mu, args.g
    if args.saturated:
        graph = tropical.ChainOfLoops(g, mu.k)
        total = tropical.expected_torus_count(mu, g)
        if total > args.max_tori:
            raise DomainError(f"{total} saturated tableaux exceed the guard of {args.max_tori}")
        it = (t for t, _ in tropical.iter_tori(mu, graph))
    else:
        it = tableaux.enumerate_k_uniform(lambda_of_mu(mu), mu.k, g, max_boxes=args.max_boxes)
    first = True
    for t in it:
        if not first:
            out.write("\n")
        out.write(t.to_text() or "(empty)\n")
        first = False


def cmd_saturate(args, parser, out):
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    t = tableaux.Tableau.parse(text, args.g)
    out.write(tableaux.saturate(t, args.k).to_text())


def cmd_locus(args, parser, out):
    locus = tropical.splitting_locus(args.mu, tropical.ChainOfLoops(args.g, args.mu.k), max_tori=args.max_tori)
    if args.format == "json":
        out.write(tropical.locus_to_json(locus))
        return
    dim = tropical.locus_dimension(locus)
    out.write(f"dimension {'empty' if dim is None else dim}\n")
    if args.g == magnitude(args.mu):
        out.write(f"cardinality {tropical.locus_cardinality(locus)}\n")
    out.write(f"tori {len(locus.tori)}\n")
    for t, torus in locus.tori:
        cons = " ".join(f"{j}:{r}" for j, r in torus.constraints)
        out.write(f"{t.to_text().strip().replace(chr(10), ' / ') or '(empty)'}\t{cons}\n")


def cmd_connect(args, parser, out):
    locus = tropical.splitting_locus(args.mu, tropical.ChainOfLoops(args.g, args.mu.k), max_tori=args.max_tori)
    out.write(f"{'connected' if tropical.connectivity_check(locus) else 'disconnected'}\n")


def cmd_verify(args, parser, out):
    fam = args.family
    rows = closed_forms.family_grid(fam, args.z_max)
    bad = 0
    keys = [k for k in rows[0] if k != "variant"] if rows else []
    variant = bool(rows) and "variant" in rows[0]
    out.write("\t".join(keys + (["variant"] if variant else []) + ["closed", "recurrence", "status"]) + "\n")
    for p in rows:
        cf = closed_forms.closed_form_alpha(fam, **p)
        rec = closed_forms.recurrence_alpha(fam, **p)
        ok = cf == rec
        bad += not ok
        cells = [",".join(map(str, p[k])) if k == "mu" else str(p[k]) for k in keys]
        if variant:
            cells.append(p["variant"])
        out.write("\t".join(cells + [str(cf), str(rec), "ok" if ok else "MISMATCH"]) + "\n")
    out.write(f"{len(rows) - bad}/{len(rows)} agree\n")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splitloci", description="k-cores, splitting types and their tropical loci")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="staircase, C-vector, rank and magnitude of mu")
    _add_mu(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("count", help="number of maximal chains")
    _add_target(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hasse", help="Hasse diagram of the order ideal")
    _add_target(p)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--max-nodes", type=int, default=poset.DEFAULT_MAX_NODES)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("chains", help="maximal chains as bottom-up residue sequences")
    _add_target(p)
    p.add_argument("--max-chains", type=int, default=poset.DEFAULT_MAX_CHAINS)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("tableaux", help="k-uniform (or k-saturated) tableaux on the staircase")
    _add_mu(p)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--saturated", action="store_true")
    p.add_argument("--max-boxes", type=int, default=tableaux.DEFAULT_MAX_BOXES)
    p.add_argument("--max-tori", type=int, default=tropical.DEFAULT_MAX_TORI)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("saturate", help="saturate a tableau read from a file or stdin")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, help="alphabet bound (default: largest symbol)")
    p.set_defaults(func=cmd_saturate)

    for name, func, hint in (
        ("locus", cmd_locus, "tori of the splitting locus"),
        ("connect", cmd_connect, "codimension-one connectivity of the locus"),
    ):
        p = sub.add_parser(name, help=hint)
        _add_mu(p)
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--max-tori", type=int, default=tropical.DEFAULT_MAX_TORI)
        if name == "locus":
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="closed form vs recurrence over a family grid")
    p.add_argument("--family", choices=closed_forms.FAMILIES, required=True)
    p.add_argument("--z-max", type=int, default=5, help="grid size (z, |mu_i| or k depending on family)")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser, out) or 0
    except (DomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except RecursionError:
        print("error: input too deep for recursive enumeration; lower the size", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
