"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 inadmissible parameters,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import golden
from .distribution import WeightDistribution
from .enumerator import DEFAULT_BUDGET, BudgetExceeded, NihoCode, VerificationError
from .fields import build_tower
from .params import (CodeSpec, ConsistencyError, InadmissibleParameters, check_conditions,
                     derive, dimension)
from .theory import corollary_tables, griesmer_check, solve_distribution

EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_spec_args(p: argparse.ArgumentParser):
    g = p.add_argument_group("code parameters")
    g.add_argument("--family", type=int, choices=(1, 2), required=True)
    for name in ("p", "l", "m", "h", "f", "t"):
        g.add_argument(f"--{name}", type=int, required=True)


def _add_output_args(p: argparse.ArgumentParser):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.set_defaults(fmt="text")
    p.add_argument("--out", type=Path, help="also write the JSON artifact here")


def _add_run_args(p: argparse.ArgumentParser, methods):
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--long-run", action="store_true",
                   help=f"allow enumerations beyond {DEFAULT_BUDGET} tuples")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="seed for sampled cross-checks")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nihocodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("derive", help="derived parameters and condition report")
    _add_spec_args(p)
    _add_output_args(p)

    p = sub.add_parser("dist", help="weight distribution by one method")
    _add_spec_args(p)
    _add_output_args(p)
    _add_run_args(p, ("auto", "vandermonde", "brute", "accel", "table"))

    p = sub.add_parser("verify", help="closed form against exhaustive enumeration")
    _add_spec_args(p)
    _add_output_args(p)
    _add_run_args(p, ("auto", "brute", "accel"))

    p = sub.add_parser("tables", help="reproduce every reference example and table row")
    _add_output_args(p)
    _add_run_args(p, ("auto", "brute", "accel"))

    p = sub.add_parser("tower", help="dump the field modulus and primitive element")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    return parser


def _spec(args) -> CodeSpec:
    try:
        return CodeSpec(args.family, args.p, args.l, args.m, args.h, args.f, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, payload: dict, text: str):
    if args.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if getattr(args, "out", None):
        args.out.write_text(json.dumps(payload, indent=2) + "\n")


def _require_admissible(spec: CodeSpec):
    report = check_conditions(spec)
    if not report.passed:
        print(report.format(), file=sys.stderr)
        raise InadmissibleParameters(f"conditions fail: {', '.join(report.failures)}")
    return report


def cmd_derive(args) -> int:
    spec = _spec(args)
    report = check_conditions(spec)
    payload = {"spec": spec.to_dict(), "q": spec.q, "r": spec.r, "conditions": report.to_dict()}
    lines = [f"q={spec.q} r={spec.r}"]
    try:
        d = derive(spec)
    except InadmissibleParameters as exc:
        lines.append(f"exponents undefined: {exc}")
    else:
        raw = [s * (d.r - 1) + dl for s, dl in d.decomposition]
        payload.update(e=d.e, delta=d.delta, n=d.n, exponents=list(d.exponents),
                       raw_exponents=raw, k=d.dimension)
        lines.append(f"e={d.e} delta={d.delta} n={d.n} k={d.dimension}")
        line = "exponents " + ",".join(map(str, d.exponents))
        if raw != list(d.exponents):
            line += f" (unreduced {','.join(map(str, raw))}, mod {d.modulus})"
        lines.append(line)
        if report.passed:
            dimension(d)
    lines.append(report.format())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_INADMISSIBLE


def _enumerate(code: NihoCode, method: str, args) -> WeightDistribution:
    kw = dict(long_run=args.long_run, workers=args.workers)
    if method == "brute":
        return code.brute_force_distribution(**kw)
    return code.accelerated_distribution(seed=args.seed, **kw)


def _pick_enumeration(code: NihoCode, args) -> str | None:
    """Enumeration method for verify/tables, or None when it must be skipped."""
    if args.method != "auto":
        return args.method
    if code.num_codewords <= DEFAULT_BUDGET:
        return "brute"
    return "accel" if args.long_run else None


def cmd_dist(args) -> int:
    spec = _spec(args)
    _require_admissible(spec)
    method = "vandermonde" if args.method == "auto" else args.method
    if method == "vandermonde":
        dist = solve_distribution(spec)
    elif method == "table":
        try:
            dist = corollary_tables(spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        dist = _enumerate(NihoCode(spec), method, args)
    _emit(args, dist.to_dict(), dist.format_table())
    return EXIT_OK


def _verify(spec: CodeSpec, args, expected: dict[int, int] | None = None) -> tuple[bool, list[str], dict]:
    """Compare every available path; returns (ok, log lines, payload)."""
    closed = solve_distribution(spec)
    log = [closed.format_table()]
    results = {"vandermonde": closed}
    ok = True
    if expected is not None and closed.frequencies != expected:
        ok = False
        log.append("closed form differs from the reference enumerator")
    try:
        results["corollary-table"] = corollary_tables(spec)
    except ValueError:
        pass
    code = NihoCode(spec)
    method = _pick_enumeration(code, args)
    if method is None:
        log.append(f"enumeration skipped: {code.num_codewords} tuples exceed {DEFAULT_BUDGET} "
                   "(use --long-run)")
    else:
        results[{"brute": "brute-force", "accel": "accelerated"}[method]] = _enumerate(code, method, args)
    for name, dist in results.items():
        if name == "vandermonde":
            continue
        w = closed.first_difference(dist)
        if w is None:
            log.append(f"{name}: equal")
        else:
            ok = False
            log.append(f"{name}: MISMATCH at weight {w}: "
                       f"{closed.frequencies.get(w, 0)} vs {dist.frequencies.get(w, 0)}")
    payload = closed.to_dict()
    payload["verified"] = {name: closed == dist for name, dist in results.items()}
    payload["ok"] = ok
    return ok, log, payload


def cmd_verify(args) -> int:
    spec = _spec(args)
    _require_admissible(spec)
    ok, log, payload = _verify(spec, args)
    _emit(args, payload, "\n".join(log))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_tables(args) -> int:
    rows = []
    all_ok = True
    for ex in golden.EXAMPLES:
        ok, log, payload = _verify(ex.spec, args, ex.frequencies)
        d = derive(ex.spec)
        ok = ok and d.exponents == tuple(x % d.modulus for x in ex.exponents)
        ok = ok and tuple(payload[k] for k in ("n", "k", "d")) == ex.nkd
        checks = ",".join(k for k, v in payload["verified"].items() if v and k != "vandermonde")
        rows.append({"name": f"Example {ex.name}", "nkd": list(ex.nkd), "ok": ok,
                     "checked": checks or "closed form only"})
        all_ok &= ok
    for row in golden.TABLE_ROWS:
        dist = solve_distribution(row.spec)
        ok = dist.nkd == row.nkd
        checks = []
        code = NihoCode(row.spec)
        if code.num_codewords <= DEFAULT_BUDGET:
            ok = ok and code.brute_force_distribution(workers=args.workers) == dist
            checks.append("brute-force")
        g = griesmer_check(*dist.nkd, dist.q)
        s = row.spec
        rows.append({"name": f"Table {row.table} q={s.q} r={s.r} (t,h,f)=({s.t},{s.h},{s.f})",
                     "nkd": list(dist.nkd), "ok": ok,
                     "checked": ",".join(checks) or "closed form only",
                     "griesmer": {"bound": g.bound, "meets": g.meets}})
        all_ok &= ok
    width = max(len(r["name"]) for r in rows)
    lines = []
    for r in rows:
        extra = ""
        if "griesmer" in r:
            extra = f" griesmer n>={r['griesmer']['bound']}" + (" (meets)" if r["griesmer"]["meets"] else "")
        lines.append(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name'].ljust(width)}  "
                     f"[{', '.join(map(str, r['nkd']))}]  {r['checked']}{extra}")
    _emit(args, {"ok": all_ok, "rows": rows}, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_tower(args) -> int:
    try:
        tower = build_tower(args.p, args.l, args.m, tables=False)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(tower.to_json())
    return EXIT_OK


COMMANDS = {"derive": cmd_derive, "dist": cmd_dist, "verify": cmd_verify,
            "tables": cmd_tables, "tower": cmd_tower}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InadmissibleParameters as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (VerificationError, ConsistencyError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
