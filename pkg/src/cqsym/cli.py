"""``cqsym`` command line.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on a
usage error (bad flags, or parameters outside an identity's hypotheses).
Parallelism for ``verify`` and ``sweep`` comes from ``CQSYM_JOBS``.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import nonabelian as na
from .oracle import x_lambda_oracle
from .partition import Partition, fits_staircase
from .rectlemma import big_f, e_expansion_abelian, rect_decompose_check
from .report import COUNTEREXAMPLE, FAIL, MATCH, Report
from .rook import hit_numbers
from .sweeps import SWEEP, VERIFY, jobs_from_env, run_sweep, run_tasks

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(args) -> str:
    return "json" if getattr(args, "json", False) else args.format


def _need_staircase(lam: Partition, n: int) -> None:
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")
    if not fits_staircase(lam, n):
        raise UsageError(f"lambda={lam} does not fit in the staircase delta_{n}: need lambda_j <= n - j")


def _abelian_rows(lam: Partition, n: int) -> int | None:
    """Smallest ``ell <= n/2`` with ``lam`` inside ``ell x (n - ell)``, if any."""
    for ell in range(max(lam.length, 1), n // 2 + 1):
        if lam.fits_rectangle(ell, n - ell):
            return ell
    return None


# -- commands ------------------------------------------------------------------


def cmd_eexpand(args, out) -> int:
    lam, n = args.lam, args.n
    _need_staircase(lam, n)
    X = x_lambda_oracle(lam, n)
    fmt = _fmt(args)
    if fmt == "json":
        print(_dump(X.to_json()), file=out)
        return EXIT_OK
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["mu", "coeffs"])
        for mu, c in X.items():
            w.writerow([str(mu), " ".join(map(str, c.to_list()))])
        return EXIT_OK
    print(f"X_({lam}) on n={n}, e-basis:", file=out)
    print(X.pretty(), file=out)
    ell = _abelian_rows(lam, n)
    if ell is None:
        print("closed form: not abelian, oracle only", file=out)
        return EXIT_OK
    closed = e_expansion_abelian(lam, ell, n)
    rep = Report.compare("theorem-e", {"lambda": list(lam), "ell": ell, "n": n}, X, closed)
    print(rep.line(), file=out)
    if not rep.ok:
        print("closed form:", file=out)
        print(closed.pretty(), file=out)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    lam, n, ell, s = args.lam, args.n, args.ell, args.s
    if not 1 <= ell <= min(s, n - s):
        raise UsageError(f"need 1 <= ell <= min(s, n - s); got ell={ell}, s={s}, n={n}")
    if not lam.fits_rectangle(ell, n - s):
        raise UsageError(f"lambda={lam} does not fit in {ell} x {n - s}")
    rep = rect_decompose_check(lam, ell, n, s)
    fmt = _fmt(args)
    F = [big_f(lam, ell, n, s, r) for r in range(ell + 1)]
    if fmt == "json":
        print(_dump(rep.to_json()), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["r", "coeffs"])
        for r, f in enumerate(F):
            w.writerow([r, " ".join(map(str, f.to_list()))])
    else:
        for r, f in enumerate(F):
            print(f"F_{r} = {f.pretty()}", file=out)
        print(rep.line(), file=out)
        if not rep.ok:
            print("lhs:", rep.lhs.pretty(), "\nrhs:", rep.rhs.pretty(), sep="\n", file=out)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_hit(args, out) -> int:
    lam, m1, m2 = args.lam, args.rows, args.cols
    if not 1 <= m1 <= m2:
        raise UsageError(f"need 1 <= rows <= cols, got rows={m1}, cols={m2}")
    if not lam.fits_rectangle(m1, m2):
        raise UsageError(f"lambda={lam} does not fit in {m1} x {m2}")
    H = hit_numbers(lam, m1, m2)
    fmt = _fmt(args)
    if fmt == "json":
        print(_dump({"lambda": list(lam), "rows": m1, "cols": m2, "H": [h.to_list() for h in H]}), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["j", "coeffs"])
        for j, h in enumerate(H):
            w.writerow([j, " ".join(map(str, h.to_list()))])
    else:
        for j, h in enumerate(H):
            print(f"H_{j} = {h.pretty()}", file=out)
    return EXIT_OK


def _display_for(which: str, fam: na.HookFamily) -> str:
    if which == "e-n11":
        return "hook-e-n11" if not fam.p else "general-e-n11"
    if which == "e-n22":
        if fam.p:
            raise UsageError("--which e-n22 is only available without --b; use --which conjecture for constant b")
        return "hook-e-n22"
    if not fam.p or not fam.constant_b:
        raise UsageError("--which conjecture needs a nonempty constant --b list")
    return "conjecture-e-n22"


def cmd_nonabelian(args, out) -> int:
    try:
        fam = na.HookFamily(args.i, args.a, args.ell, args.n, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    name = _display_for(args.which, fam)
    display, which, (r,) = na._DISPLAYS[name]
    if not na.admissible(fam, which):
        msg = (
            f"{fam.params()} is outside the hypotheses of {name}: need ell >= 2, "
            "1 <= a <= n - ell <= i <= n - 1, b_j <= a, the shape inside delta_n"
        )
        if name == "general-e-n11":
            msg += ", and a <= n - ell - p"
        if not args.outside:
            raise UsageError(msg + " (pass --outside to evaluate anyway)")
        if not fits_staircase(fam.partition(), fam.n):
            raise UsageError(f"{fam.partition()} does not fit in delta_{fam.n}")
    ev = na.evaluate_with_fallback(display, fam)
    want = na.oracle_coefficient(fam, (fam.n - r, r))
    if ev.value is None:
        status = na.UNDEFINED
    elif ev.value == want:
        status = MATCH if name.startswith("conjecture") else "pass"
    else:
        status = COUNTEREXAMPLE if name.startswith("conjecture") else FAIL
    record = {
        "display": name,
        "params": fam.params(),
        "lambda": list(fam.partition()),
        "mu": [fam.n - r, r],
        "closed_form": ev.value.to_list() if ev.value is not None else None,
        "evaluation": ev.how,
        "oracle": want.to_list(),
        "status": status,
    }
    fmt = _fmt(args)
    if fmt == "json":
        print(_dump(record), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(record))
        w.writerow([_dump(v) if isinstance(v, (list, dict)) else v for v in record.values()])
    else:
        print(f"lambda = {fam.partition()}  n = {fam.n}  coefficient of e_({fam.n - r},{r})", file=out)
        shown = ev.value.pretty() if ev.value is not None else f"undefined ({ev.how})"
        print(f"closed form [{name}, {ev.how if ev.value is not None else '-'}]: {shown}", file=out)
        print(f"oracle: {want.pretty()}", file=out)
        print(f"verdict: {status}", file=out)
    # a conjecture mismatch is a finding, not a failed verification
    return EXIT_MISMATCH if status == FAIL else EXIT_OK


def _emit_reports(reports, fmt: str, out, quiet: bool = False) -> dict:
    counts: dict[str, int] = {}
    writer = None
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["kind", "params", "status", "mismatch"])
    for rep in reports:
        counts[rep.status] = counts.get(rep.status, 0) + 1
        if quiet and rep.ok:
            continue
        if fmt == "json":
            print(_dump(rep.to_json()), file=out)
        elif fmt == "csv":
            js = rep.to_json()
            writer.writerow([rep.kind, _dump(js["params"]), rep.status, _dump(js.get("mismatch"))])
        else:
            print(rep.line(), file=out)
            if rep.status == FAIL and rep.lhs is not None:
                for side, val in (("lhs", rep.lhs), ("rhs", rep.rhs)):
                    text = val.pretty() if hasattr(val, "pretty") else str(val)
                    print(f"  {side}: " + text.replace("\n", "\n        "), file=out)
    return counts


def _ns(args) -> list[int]:
    if args.n is not None and args.max_n is not None:
        raise UsageError("give either --n or --max-n, not both")
    if args.n is not None:
        return [args.n]
    top = args.max_n if args.max_n is not None else args.default_n
    return list(range(args.min_n, top + 1))


def cmd_verify(args, out) -> int:
    jobs = jobs_from_env()
    if args.kind == "c-lemma":
        if args.n is not None or args.max_n is not None:
            raise UsageError("c-lemma takes --ell-max, not --n")
        if args.ell_max < 1:
            raise UsageError("--ell-max must be positive")
        tasks = VERIFY["c-lemma"](args.ell_max)
    else:
        ns = _ns(args)
        if any(n < 1 for n in ns):
            raise UsageError("n must be positive")
        tasks = [t for n in ns for t in VERIFY[args.kind](n)]
    fmt = _fmt(args)
    counts = _emit_reports(run_tasks(tasks, jobs), fmt, out, args.failures_only)
    summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    if fmt == "pretty":
        print(f"# verify {args.kind}: {summary or 'no instances'}", file=out)
    else:
        print(f"verify {args.kind}: {summary or 'no instances'}", file=sys.stderr)
    return EXIT_MISMATCH if counts.get(FAIL) else EXIT_OK


def cmd_sweep(args, out) -> int:
    jobs = jobs_from_env()
    ns = _ns(args)
    path = Path(args.out) if args.out else None
    fmt = _fmt(args)
    counts = _emit_reports(run_sweep(args.kind, ns, path, jobs), fmt, out, args.failures_only)
    summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    where = f" -> {path}" if path else ""
    print(f"# sweep {args.kind}: {summary or 'nothing new'}{where}", file=out if fmt == "pretty" else sys.stderr)
    # violations in a sweep are findings about open statements; they are
    # recorded, and the exit status stays 0 unless something crashed
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    fmt.add_argument("--json", action="store_true", help="shorthand for --format json")

    p = argparse.ArgumentParser(prog="cqsym", description="Chromatic quasisymmetric functions of natural unit interval orders.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eexpand", parents=[fmt], help="e-expansion of X_lambda")
    e.add_argument("--lambda", dest="lam", type=_partition, required=True, help="e.g. 2,1 (empty: 0)")
    e.add_argument("--n", type=int, required=True)
    e.set_defaults(func=cmd_eexpand)

    d = sub.add_parser("decompose", parents=[fmt], help="rectangle decomposition F_0..F_ell")
    d.add_argument("--lambda", dest="lam", type=_partition, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--ell", type=int, required=True)
    d.add_argument("--s", type=int, required=True)
    d.set_defaults(func=cmd_decompose)

    h = sub.add_parser("hit", parents=[fmt], help="q-hit numbers H_0..H_rows")
    h.add_argument("--lambda", dest="lam", type=_partition, required=True)
    h.add_argument("--rows", type=int, required=True)
    h.add_argument("--cols", type=int, required=True)
    h.set_defaults(func=cmd_hit)

    a = sub.add_parser("nonabelian", parents=[fmt], help="closed forms for (i, a^(ell-1), b)")
    a.add_argument("--i", type=int, required=True)
    a.add_argument("--a", type=int, required=True)
    a.add_argument("--ell", type=int, required=True)
    a.add_argument("--b", type=_int_list, default=())
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--which", choices=["e-n11", "e-n22", "conjecture"], default="e-n11")
    a.add_argument("--outside", action="store_true", help="evaluate even outside the display's hypotheses")
    a.set_defaults(func=cmd_nonabelian)

    rng = argparse.ArgumentParser(add_help=False)
    rng.add_argument("--n", type=int, default=None, help="a single n")
    rng.add_argument("--max-n", type=int, default=None, help="every n from --min-n up to this")
    rng.add_argument("--min-n", type=int, default=2)
    rng.add_argument("--failures-only", action="store_true")

    v = sub.add_parser("verify", parents=[fmt, rng], help="check an identity on every instance")
    v.add_argument("kind", choices=list(VERIFY))
    v.add_argument("--ell-max", type=int, default=8, help="c-lemma only")
    v.set_defaults(func=cmd_verify, default_n=6)

    s = sub.add_parser("sweep", parents=[fmt, rng], help="resumable sweeps over open statements")
    s.add_argument("kind", choices=list(SWEEP))
    s.add_argument("--out", help="append-only JSON-lines checkpoint file")
    s.set_defaults(func=cmd_sweep, default_n=6)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, na.NotApplicable, ValueError) as exc:
        print(f"cqsym {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
