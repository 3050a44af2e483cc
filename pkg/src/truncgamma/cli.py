"""Command-line front end.

Exit status: 0 success, 1 usage error (bad arguments, n < 2, oracle budget),
2 when a verification suite reports a failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .exactalg import BiPoly, RatFn, format_canonical
from .homology import OracleBudgetExceeded
from .ideal import min_gens, min_gens_brute
from .series import (
    betti_numbers_ideal,
    check_conjecture,
    ek_poincare_ideal,
    ek_poincare_ideal_graded,
    golod_poincare,
    golod_poincare_graded,
    hilbert_bigraded,
)
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _level(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return n


def _poly_json(p: BiPoly) -> list[list[int]]:
    """[[t_degree, u_degree, coefficient], ...] in canonical order."""
    return [[i, j, c] for (i, j), c in p.terms()]


def _payload_json(x):
    if isinstance(x, RatFn):
        return {"text": format_canonical(x), "num": _poly_json(x.num), "den": _poly_json(x.den)}
    if isinstance(x, BiPoly):
        return {"text": format_canonical(x), "coeffs": _poly_json(x)}
    return x


def _record(args, lo: int, hi: int, payload) -> str:
    rec = {
        "command": " ".join(args.argv),
        "n_range": [lo, hi],
        "format": "json",
        "version": __version__,
        "payload": payload,
    }
    return json.dumps(rec, sort_keys=False) + "\n"


def cmd_gens(args) -> str:
    table = min_gens_brute(args.n) if args.brute else min_gens(args.n)
    if args.format == "json":
        return _record(args, args.n, args.n, [str(g) for g in table.gens])
    return "".join(f"{g}\n" for g in table.gens)


def counts_csv(nmax: int) -> str:
    tables = [min_gens(n) for n in range(2, nmax + 1)]
    width = max(t.r for t in tables)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "C_n"] + [f"C_n_{i}" for i in range(1, width + 1)])
    for t in tables:
        w.writerow([t.n, t.total, *t.by_min] + [""] * (width - t.r))
    return buf.getvalue()


def graded_csv(nmax: int) -> str:
    tables = [min_gens(n) for n in range(2, nmax + 1)]
    rows = [[t.n, v, *t.graded_list(v)] for t in tables for v in range(1, t.r + 1)]
    width = max(len(r) for r in rows) - 2
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "v"] + [f"C_n_v_{d}" for d in range(2, width + 2)])
    for r in rows:
        w.writerow(r + [""] * (width + 2 - len(r)))
    return buf.getvalue()


def cmd_counts(args) -> str:
    nmax = args.nmax
    if args.graded:
        fmt = args.format or "json"
        if fmt == "csv":
            return graded_csv(nmax)
        rows = []
        for n in range(2, nmax + 1):
            t = min_gens(n)
            rows.append({"n": n, "graded": [t.graded_list(v) for v in range(1, t.r + 1)]})
        if fmt == "json":
            return _record(args, 2, nmax, rows)
        return "".join(f"{r['n']:>4}  " + "  ".join(json.dumps(g) for g in r["graded"]) + "\n" for r in rows)
    fmt = args.format or "csv"
    if fmt == "csv":
        return counts_csv(nmax)
    rows = []
    for n in range(2, nmax + 1):
        t = min_gens(n)
        rows.append({"n": n, "C_n": t.total, "C_n_v": list(t.by_min)})
    if fmt == "json":
        return _record(args, 2, nmax, rows)
    return "".join(
        f"{r['n']:>4} {r['C_n']:>6}  " + " ".join(f"{c:>4}" for c in r["C_n_v"]) + "\n" for r in rows
    )


def _emit(args, value) -> str:
    if args.format == "json":
        return _record(args, args.n, args.n, _payload_json(value))
    if isinstance(value, (BiPoly, RatFn)):
        return format_canonical(value) + "\n"
    return f"{value}\n"


def cmd_hilbert(args) -> str:
    h = hilbert_bigraded(args.n).poly
    return _emit(args, h if args.bigraded else h.specialize_u(1))


def cmd_betti(args) -> str:
    return _emit(args, betti_numbers_ideal(args.n))


def cmd_poincare(args) -> str:
    if args.ideal:
        value = ek_poincare_ideal_graded(args.n) if args.graded else ek_poincare_ideal(args.n)
    else:
        value = golod_poincare_graded(args.n) if args.graded else golod_poincare(args.n)
    return _emit(args, value)


def cmd_conjecture(args) -> str:
    reports = [check_conjecture(n) for n in range(2, args.nmax + 1)]
    failures = sum(len(r.failures()) for r in reports)
    if args.format == "json":
        payload = {
            "rows": [
                {"n": r.n, "l1": r.l1, "l2": r.l2, "h": r.h, "q(-1)": r.q_at_minus_one, "flags": r.flags}
                for r in reports
            ],
            "clause_failures": failures,
        }
        return _record(args, 2, args.nmax, payload)
    lines = [f"{'n':>4} {'l1':>3} {'l2':>3} {'q(-1)':>7}  status  h_0..h_l2"]
    for r in reports:
        status = "ok" if r.passed else "FAIL:" + ";".join(r.failures())
        l1 = "-" if r.l1 is None else r.l1
        lines.append(f"{r.n:>4} {l1:>3} {r.l2:>3} {r.q_at_minus_one:>7}  {status:<6}  {r.h}")
    lines.append(f"clause failures: {failures}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    kw = {"modular": args.modular, "seed": args.seed}
    if args.nmax is not None:
        kw["nmax"] = args.nmax
    if args.qmax is not None:
        kw["qmax"] = args.qmax
    checks = run_suite(args.suite, **kw)
    for c in checks:
        print(f"{c.seconds:8.3f}s  {c.name}", file=sys.stderr)
    failed = sum(not c.passed for c in checks)
    out = "".join(c.line() + "\n" for c in checks)
    out += f"suite {args.suite}: {len(checks) - failed} passed, {failed} failed\n"
    return out, (2 if failed else 0)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="truncgamma", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gens", help="minimal generators of I_n")
    s.add_argument("n", type=_level)
    s.add_argument("--brute", action="store_true", help="use the brute-force enumeration")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_gens)

    s = sub.add_parser("counts", help="C_n and C_{n,v} (or C_{n,v,d}) for n = 2..nmax")
    s.add_argument("--nmax", type=_level, required=True)
    s.add_argument("--graded", action="store_true")
    s.add_argument("--format", choices=["csv", "json", "text"])
    s.set_defaults(func=cmd_counts)

    s = sub.add_parser("hilbert", help="Hilbert series of A_n")
    s.add_argument("n", type=_level)
    s.add_argument("--bigraded", action="store_true")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("betti", help="Betti numbers of I_n over S")
    s.add_argument("n", type=_level)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("poincare", help="Poincare-Betti series")
    s.add_argument("n", type=_level)
    s.add_argument("--graded", action="store_true")
    which = s.add_mutually_exclusive_group()
    which.add_argument("--ideal", action="store_true", help="P(Tor^S(I_n, K))")
    which.add_argument("--residue", action="store_true", help="P(Tor^{A_n}(K, K)) (default)")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_poincare)

    s = sub.add_parser("conjecture", help="check the conjectured shape of the series for n = 2..nmax")
    s.add_argument("--nmax", type=_level, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--nmax", type=_level)
    s.add_argument("--qmax", type=int)
    s.add_argument("--modular", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv) -> tuple[int, str]:
    """Execute argv; returns (exit status, stdout text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = list(argv)
    try:
        result = args.func(args)
    except (OracleBudgetExceeded, UsageError, ValueError) as exc:
        print(f"truncgamma: error: {exc}", file=sys.stderr)
        return 1, ""
    if isinstance(result, tuple):
        text, status = result
        return status, text
    return 0, result


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        status, text = run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    sys.stdout.write(text)
    return status
