"""Command line front end.

Subcommands: feasible, count, construct, verify, search, scan, conic.
Output is tsv (default) or jsonl; jsonl records are self-contained and
carry the inputs, a provenance tag for each result, and informational
timing. Exit codes: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import json
import os
import sys
import time

from . import arith, cayley, charsums, golden, graphs, primesearch
from .feasibility import NeumaierParams, enumerate_feasible
from .graphs import CLIQUE, VertexSubset

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


def _emit_tsv(out, row):
    out.write("\t".join(str(c) for c in row) + "\n")


def _emit_jsonl(out, record):
    out.write(json.dumps(record, sort_keys=True) + "\n")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NEUMAIER_JOBS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# subcommands

def cmd_feasible(args, out) -> int:
    started = time.perf_counter()
    rows = enumerate_feasible(args.max_v)
    produced = []
    for r in rows:
        v, k, lam, e, s = r.params.as_tuple()
        reasons = ",".join(r.verdict.reason_codes()) or "-"
        produced.append([str(v), str(k), str(lam), str(e), str(s),
                         r.verdict.status, reasons, r.known_construction])
    if args.format == "tsv":
        for row in produced:
            _emit_tsv(out, row)
    else:
        for r, row in zip(rows, produced):
            _emit_jsonl(out, {
                "inputs": {"max_v": args.max_v},
                "v": r.params.v, "k": r.params.k, "lambda": r.params.lam,
                "e": r.params.e, "s": r.params.s,
                "status": r.verdict.status,
                "reasons": [{"code": c, "detail": d} for c, d in r.verdict.reasons],
                "known_construction": r.known_construction,
                "provenance": "parameter-conditions",
                "time_ms": round((time.perf_counter() - started) * 1000, 3),
            })
    if args.golden:
        diff = golden.compare(produced, golden.load_rows(args.golden))
        for line in diff:
            print(line, file=sys.stderr)
        return EXIT_VERIFY if diff else EXIT_OK
    return EXIT_OK


def cmd_count(args, out) -> int:
    p, q, a = args.p, args.q, args.a
    arith.validate_cayley_triple(p, q, a)
    methods = ["direct", "jacobi", "closed"] if args.method == "all" else [args.method]
    results = {}
    timings = {}
    for method in methods:
        t0 = time.perf_counter()
        if method == "direct":
            results["direct"] = charsums.count_direct(p, q, a)
        elif method == "jacobi":
            results["jacobi"] = charsums.count_jacobi(p, q, a)
        else:
            closed = charsums.count_closed(p, q, a)
            if closed is None:
                if args.method == "closed":
                    print(f"no closed form applies to (p,q,a) = ({p},{q},{a})",
                          file=sys.stderr)
                    return EXIT_INPUT
            else:
                results[f"closed[{closed.branch}]"] = closed.value
        timings[method] = round((time.perf_counter() - t0) * 1000, 3)
    agree = len(set(results.values())) == 1
    if args.format == "tsv":
        for name, value in results.items():
            _emit_tsv(out, [p, q, a, name, value])
        if args.method == "all":
            _emit_tsv(out, [p, q, a, "agree", str(agree).lower()])
    else:
        _emit_jsonl(out, {
            "inputs": {"p": p, "q": q, "a": a, "method": args.method},
            "counts": results, "agree": agree, "time_ms": timings,
            "provenance": "count",
        })
    return EXIT_OK if agree else EXIT_VERIFY


def _parse_perms(path, expected, blocks):
    perms = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            perms.append(_parse_one_perm(line, blocks))
    if len(perms) != expected:
        raise ValueError(f"permutation file has {len(perms)} rows, need {expected}")
    return perms


def _parse_one_perm(line, blocks):
    """Image notation `0 2 1 ...` or cycle notation `(0 1 2)(3 4)`."""
    if "(" in line:
        perm = list(range(blocks))
        for cyc in line.replace(")", ")|").split("|"):
            cyc = cyc.strip().strip("()")
            if not cyc:
                continue
            idx = [int(tok) for tok in cyc.replace(",", " ").split()]
            for i, v in enumerate(idx):
                perm[v] = idx[(i + 1) % len(idx)]
        return perm
    perm = [int(tok) for tok in line.replace(",", " ").split()]
    if sorted(perm) != list(range(blocks)):
        raise ValueError(f"line {line!r} is not a permutation of 0..{blocks - 1}")
    return perm


def cmd_construct(args, out) -> int:
    started = time.perf_counter()
    lam = charsums.count_direct(args.p, args.q, args.a)
    if (lam + 2) % args.q:
        print(f"rejected: |S cap (S+1)| = {lam} has residue {lam % args.q} "
              f"mod q = {args.q}, need q - 2", file=sys.stderr)
        return EXIT_VERIFY
    t = (lam + 2) // args.q
    perms = None
    if args.perms:
        perms = _parse_perms(args.perms, t - 1, args.p)
    built = cayley.construct_neumaier(args.q, args.p, args.a, perms)
    strict = cayley.strictness_check(built.fusion, built.graph)
    verified = graphs.verify_neumaier(built.graph, built.params, built.witness)
    if args.out:
        graphs.save(built.graph, args.out)
    record = {
        "inputs": {"q": args.q, "p": args.p, "a": args.a,
                   "perms": "explicit" if args.perms else "identity"},
        "v": built.params.v, "k": built.params.k, "lambda": built.lam,
        "e": 1, "s": built.params.s, "t": built.t,
        "witness_clique": sorted(built.witness.members),
        "verified": verified,
        "strict": strict.strict,
        "strictness_method": strict.method,
        "provenance": "coclique-spread fusion",
        "time_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    if args.format == "tsv":
        _emit_tsv(out, [args.q, args.p, args.a, built.t, built.params.v,
                        built.params.k, built.lam, built.params.s,
                        str(verified).lower(), str(strict.strict).lower()])
    else:
        _emit_jsonl(out, record)
    return EXIT_OK if verified else EXIT_VERIFY


def cmd_verify(args, out) -> int:
    g = graphs.load(args.graph)
    claimed = NeumaierParams(args.v, args.k, getattr(args, "lambda"), args.e, args.s)
    witness = VertexSubset(frozenset(int(tok) for tok in args.witness.replace(",", " ").split()),
                           CLIQUE)
    ok = graphs.verify_neumaier(g, claimed, witness)
    strict = ok and graphs.is_strictly_neumaier(g, claimed, witness)
    if args.format == "tsv":
        _emit_tsv(out, [args.graph, str(ok).lower(), str(strict).lower()])
    else:
        _emit_jsonl(out, {
            "inputs": {"graph": args.graph, "params": claimed.as_tuple(),
                       "witness": sorted(witness.members)},
            "verified": ok, "strict": strict, "provenance": "exhaustive verification",
        })
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_search(args, out) -> int:
    started = time.perf_counter()
    result = primesearch.search_triples(args.q, args.max_p, jobs=args.jobs)
    if result.note:
        print(f"note: {result.note}", file=sys.stderr)
    failures = 0
    produced = []
    for row in result.rows:
        cells = [str(c) for c in row.table_tuple()]
        record = {
            "inputs": {"q": args.q, "max_p": args.max_p},
            "q": row.q, "p": row.p, "a": row.a, "t": row.t,
            "v": row.params.v, "k": row.params.k, "lambda": row.lam,
            "s": row.params.s, "provenance": "subgroup search",
        }
        if args.verify_graphs and row.params.v <= args.verify_graphs:
            built = cayley.construct_neumaier(row.q, row.p, row.a)
            ok = graphs.verify_neumaier(built.graph, built.params, built.witness)
            strict = graphs.is_strictly_neumaier(built.graph, built.params, built.witness)
            failures += 0 if (ok and strict) else 1
            cells += [str(ok).lower(), str(strict).lower()]
            record.update(verified=ok, strict=strict)
        produced.append(cells)
        if args.format == "tsv":
            _emit_tsv(out, cells)
        else:
            record["time_ms"] = round((time.perf_counter() - started) * 1000, 3)
            _emit_jsonl(out, record)
    if args.golden:
        diff = golden.compare(produced, golden.load_rows(args.golden),
                              subgroup_a_column=True)
        for line in diff:
            print(line, file=sys.stderr)
        if diff:
            return EXIT_VERIFY
    return EXIT_VERIFY if failures else EXIT_OK


def _parse_ring_class(text: str, ring: str) -> primesearch.QuadraticRingElt:
    """Accept `c+di`, `c-di`, `c+dz`, or `c,d`."""
    token = text.strip().lower().replace(" ", "")
    for suffix in ("i", "z"):
        token = token.removesuffix(suffix)
    if "," in token:
        c, d = token.split(",")
    else:
        for pos in range(1, len(token)):
            if token[pos] in "+-":
                c, d = token[:pos], token[pos:]
                break
        else:
            raise ValueError(f"cannot parse ring class {text!r}")
    return primesearch.QuadraticRingElt(ring, int(c), int(d))


def cmd_scan(args, out) -> int:
    ring = {"gauss": primesearch.RING_GAUSSIAN,
            "eisen": primesearch.RING_EISENSTEIN}[args.ring]
    z = _parse_ring_class(getattr(args, "class"), ring)
    hits = primesearch.scan_quadratic_primes(ring, z, args.mod, args.max_norm)
    for elt, p in hits:
        if args.format == "tsv":
            _emit_tsv(out, [args.ring, elt.c, elt.d, p])
        else:
            _emit_jsonl(out, {
                "inputs": {"ring": args.ring, "class": str(z), "mod": args.mod,
                           "max_norm": args.max_norm},
                "c": elt.c, "d": elt.d, "p": p,
                "provenance": "congruence-class prime scan",
            })
    return EXIT_OK


def cmd_conic(args, out) -> int:
    sol = primesearch.conic_solve(args.q)
    failed = primesearch.conic_conditions(sol.q, sol.z1, sol.z2)
    if args.format == "tsv":
        _emit_tsv(out, [sol.q, sol.z1, sol.z2, "ok" if not failed else "fail"])
    else:
        _emit_jsonl(out, {
            "inputs": {"q": args.q}, "z1": sol.z1, "z2": sol.z2,
            "conditions_failed": failed, "provenance": "conic solver",
        })
    return EXIT_OK if not failed else EXIT_VERIFY


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neumaier",
        description="Feasibility, construction, and counting tools for "
                    "(strictly) Neumaier graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")

    p = sub.add_parser("feasible", help="enumerate feasible parameter tuples")
    p.add_argument("--max-v", type=int, required=True)
    p.add_argument("--golden", help="compare against a golden tsv file")
    add_format(p)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("count", help="count |S cap (S+1)| for (p, q, a)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--method", choices=("direct", "jacobi", "closed", "all"),
                   default="all")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", help="build and verify the fused graph")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--perms", help="file with t-1 permutations (image or cycle notation)")
    p.add_argument("--out", help="write the graph file here")
    add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a graph file against claimed parameters")
    p.add_argument("--graph", required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", type=int, required=True, dest="lambda")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--witness", required=True,
                   help="comma or space separated clique vertices")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search admissible (p, a) up to a prime bound")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--verify-graphs", type=int, default=0, metavar="SIZE_CAP",
                   help="construct and verify rows with v <= SIZE_CAP")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes (default: NEUMAIER_JOBS or 1)")
    p.add_argument("--golden", help="compare against a golden tsv file")
    add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", help="scan a quadratic-ring congruence class for prime norms")
    p.add_argument("--ring", choices=("gauss", "eisen"), required=True)
    p.add_argument("--class", required=True, dest="class",
                   help="congruence class, e.g. '5+6i' or '3+10z'")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--max-norm", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("conic", help="solve the order-6 congruence-class conic for q")
    p.add_argument("--q", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_conic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, sys.stdout)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    raise SystemExit(main())
