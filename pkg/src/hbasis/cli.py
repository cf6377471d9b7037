"""Single entry point: construct, verify, sidon, complement, bounds, search, table.

Data payloads go to stdout or --emit FILE and are byte-identical across
reruns with identical inputs; wall time and other diagnostics go to
stderr.  Exit codes: 0 success/verified, 1 verification or optimality
failure, 2 infeasible or invalid parameters, 3 internal guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time

from . import __version__
from .arith import GuardError
from .basisfile import (format_document, read_basis_document,
                        read_residue_document, render_value)
from .bounds import bound_reports, rohrbach
from .construct import (InfeasibleParameters, build_theorem1, plan_params)
from .cover import complement_size_bound, k_complement
from .search import BudgetExhausted, extremal_n, oracle_exhaustive
from .sidon import bose_chowla, build_field, is_bk
from .sumset import BasisSet, ResidueSet, verify_basis


def _manifest(subcommand: str, params: dict) -> list[tuple[str, object]]:
    fields = [("manifest.tool", f"hbasis {__version__}"),
              ("manifest.subcommand", subcommand)]
    fields += [(f"manifest.{k}", v) for k, v in params.items() if v is not None]
    return fields


def _write_payload(args, text: str):
    if getattr(args, "emit", None):
        with open(args.emit, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_table(rows, columns=None) -> str:
    """Homogeneous result rows to CSV with a stable column order.

    An empty result set yields a header-only document (columns required).
    """
    rows = list(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if not rows:
        writer.writerow(columns or [])
        return buf.getvalue()
    if columns is None:
        columns = list(rows[0].keys())
    for row in rows:
        if list(row.keys()) != columns:
            raise ValueError("mixed row kinds rejected; rows must be homogeneous")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([render_value(v) for v in row.values()])
    return buf.getvalue()


def _cmd_verify(args) -> int:
    with open(args.set) as fh:
        file_h, file_n, elements = read_basis_document(fh.read())
    h = args.h if args.h is not None else file_h
    n = args.n if args.n is not None else file_n
    if h is None or n is None:
        raise ValueError("h and n must come from flags or the basis file")
    basis = BasisSet.from_iterable(elements)
    cert = verify_basis(basis, h, n)
    fields = _manifest("verify", {"h": h, "n": n, "set": args.set})
    fields += [("manifest.outcome", 0 if cert.ok else 1),
               ("h", h), ("n", n), ("elements", basis.elements),
               ("ok", cert.ok)]
    if cert.first_gap is not None:
        fields.append(("first_gap", cert.first_gap))
    _write_payload(args, format_document(fields))
    return 0 if cert.ok else 1


def _cmd_construct(args) -> int:
    try:
        plan = plan_params(args.n, args.h, args.k, args.a)
    except InfeasibleParameters as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    result = build_theorem1(plan)
    outcome = 0 if result.verified else 1
    fields = _manifest("construct", {"n": args.n, "h": args.h,
                                     "k": plan.k, "a": plan.a,
                                     "mode": plan.feasibility})
    fields += [("manifest.outcome", outcome)]
    for name in ("p", "k", "a", "m", "q", "p_prime"):
        fields.append((f"plan.{name}", getattr(plan, name)))
    fields.append(("plan.tau", plan.tau))
    fields.append(("plan.feasibility", plan.feasibility))
    for comp, size in result.sizes.items():
        fields.append((f"sizes.{comp}", size))
    fields += [("ledger.size_ratio", result.size_ratio),
               ("ledger.complement_over_budget", result.complement.over_budget),
               ("verified", result.verified)]
    if result.first_gap is not None:
        fields.append(("first_gap", result.first_gap))
    fields += [("h", args.h), ("n", args.n), ("elements", result.basis.elements)]
    _write_payload(args, format_document(fields))
    return outcome


def _cmd_sidon(args) -> int:
    spec = build_field(args.p, args.k)
    sidon = bose_chowla(args.p, args.k)
    ok_mod = is_bk(sidon.elements, args.k, sidon.order_modulus)
    ok_int = is_bk(sidon.elements, args.k)
    fields = _manifest("sidon", {"p": args.p, "k": args.k})
    ok = ok_mod and ok_int
    fields += [("manifest.outcome", 0 if ok else 1),
               ("provenance.p", spec.p), ("provenance.k", spec.k),
               ("provenance.modulus", spec.modulus),
               ("k", args.k), ("order_modulus", sidon.order_modulus),
               ("elements", sidon.elements),
               ("bk_ok_mod", ok_mod), ("bk_ok_int", ok_int)]
    _write_payload(args, format_document(fields))
    return 0 if ok else 1


def _cmd_complement(args) -> int:
    with open(args.set) as fh:
        q, members = read_residue_document(fh.read())
    if args.q is not None and args.q != q:
        raise ValueError("--q disagrees with the residue-set file")
    base = ResidueSet.from_iterable(q, members)
    family = k_complement(base, args.k)
    fields = _manifest("complement", {"q": q, "k": args.k, "set": args.set})
    fields += [("manifest.outcome", 0 if family.complete else 1),
               ("q", q), ("k", args.k), ("base", base.members)]
    for i, X in enumerate(family.families, start=1):
        fields.append((f"family.{i}", X.members))
    fields += [("family_sizes", family.family_sizes),
               ("total_shifts", family.total_shifts),
               ("union_size", family.union_size),
               ("bound", complement_size_bound(q, len(base), args.k) if q >= 2 else 0),
               ("complete", family.complete),
               ("over_budget", family.over_budget)]
    _write_payload(args, format_document(fields))
    return 0 if family.complete else 1


def _cmd_bounds(args) -> int:
    if (args.k is None) == (args.n is None):
        raise ValueError("give exactly one of --k, --n")
    reports = bound_reports(args.h, k=args.k, n=args.n)
    if args.format == "csv":
        rows = [{"name": r.name, "direction": r.direction,
                 "value": r.value,
                 "dropped": r.asymptotic_terms_dropped or "",
                 "note": r.note or ""} for r in reports]
        _write_payload(args, emit_table(rows))
    else:
        fields = _manifest("bounds", {"h": args.h, "k": args.k, "n": args.n})
        fields.append(("manifest.outcome", 0))
        for r in reports:
            fields.append((f"bound.{r.name}.value", r.value))
            fields.append((f"bound.{r.name}.direction", r.direction))
            if r.asymptotic_terms_dropped:
                fields.append((f"bound.{r.name}.dropped", r.asymptotic_terms_dropped))
            if r.note:
                fields.append((f"bound.{r.name}.note", r.note))
        _write_payload(args, format_document(fields))
    return 0


def _cmd_search(args) -> int:
    if args.oracle:
        res = oracle_exhaustive(args.h, args.k)
    else:
        res = extremal_n(args.h, args.k, args.budget)
    outcome = 0 if res.proof_of_optimality else 1
    fields = _manifest("search", {"h": args.h, "k": args.k,
                                  "budget": args.budget, "oracle": args.oracle})
    fields += [("manifest.outcome", outcome),
               ("h", args.h), ("k", args.k),
               ("value", res.value), ("elements", res.witness),
               ("nodes_explored", res.nodes_explored),
               ("optimal", res.proof_of_optimality)]
    _write_payload(args, format_document(fields))
    return outcome


def _cmd_table(args) -> int:
    rows = []
    all_optimal = True
    for k in range(args.k_min, args.k_max + 1):
        res = extremal_n(args.h, k, args.budget)
        all_optimal = all_optimal and res.proof_of_optimality
        lo, hi = rohrbach(args.h, k)
        rows.append({"h": args.h, "k": k, "value": res.value,
                     "rohrbach_lower": lo, "rohrbach_upper": hi,
                     "witness": " ".join(str(x) for x in res.witness)})
    columns = ["h", "k", "value", "rohrbach_lower", "rohrbach_upper", "witness"]
    _write_payload(args, emit_table(rows, columns))
    return 0 if all_optimal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hbasis",
                                     description="additive h-basis toolkit")
    parser.add_argument("--version", action="version", version=f"hbasis {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--emit", metavar="FILE", help="write the payload to FILE")
        p.add_argument("--threads", type=int, default=1,
                       help="cap internal parallelism (results are identical at any value)")
        p.add_argument("--seed", type=int, default=0,
                       help="seeds randomized test-instance generation only")

    p = sub.add_parser("construct", help="build and verify a composite h-basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--auto", action="store_true",
                   help="pick (k, a) automatically (the default when no override)")
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a claimed h-basis file")
    p.add_argument("--h", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--set", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sidon", help="Bose-Chowla B_k set with verification")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_sidon)

    p = sub.add_parser("complement", help="greedy k-complement in Z_q")
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", required=True, metavar="FILE",
                   help="residue-set file (q = ..., members = ...)")
    common(p)
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("bounds", help="closed-form bound table")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("search", help="exact n(h,k) by branch-and-bound")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--oracle", action="store_true",
                   help="use the exhaustive oracle instead")
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("table", help="CSV of search results over a k range")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    common(p)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = args.func(args)
    except (GuardError, BudgetExhausted, OverflowError) as exc:
        print(f"guard tripped: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        elapsed = time.monotonic() - start
        print(f"wall_time_s = {elapsed:.3f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
