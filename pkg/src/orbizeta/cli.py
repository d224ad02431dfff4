"""Command-line front end: suite orchestration and report emission.

Subcommands:
  count   -- count points of a polynomial model over F_{q^r}
  verify  -- run a verification suite and emit a report (text/json/csv)

Exit status of verify is 0 iff every comparison in the run matched.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time
from dataclasses import dataclass, field

from .counting import count_sequence, default_budget
from .ff import FieldError, is_prime, make_field
from .models import (
    DEFAULT_KLEINIAN_GRID,
    kleinian_catalog,
    kleinian_orbifold_model,
    kleinian_resolution_count,
    threefold_catalog,
    threefold_orbifold_model,
    threefold_resolution_count,
)
from .orbifold import coarse_count, mckay_verify, orbifold_count
from .parsing import parse_polynomial
from .polynomials import AffineModel
from .symprod import surface_zeta, symprod_counts, verify_symprod_mckay
from .zeta import (
    PowerSeries,
    RationalFunction,
    counts_from_zeta,
    recognize_rational,
    weil_check,
    zeta_from_counts,
)

SUITES = ("kleinian", "threefold", "symprod", "weil", "all")


class CliError(ValueError):
    pass


def factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise CliError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
        if p * p > q:
            p = q
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1 or not is_prime(p):
        raise CliError("not a prime power")
    return p, e


@dataclass(frozen=True)
class ReportRow:
    r: int
    n_coarse: int
    n_orb: int
    n_resolution: int
    match: bool


@dataclass(frozen=True)
class VerificationReport:
    model: str
    q: int
    rows: tuple[ReportRow, ...]
    zeta: tuple[tuple[int, ...], tuple[int, ...]] | None
    timing: float = field(default=0.0, compare=False)
    engines: tuple[str, ...] = field(default=(), compare=False)

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)


def exit_code(reports) -> int:
    return 0 if all(rep.all_match for rep in reports) else 1


# ---------------------------------------------------------------------------
# suites


def _field_for(q: int):
    p, e = factor_prime_power(q)
    return make_field(p, e)


def _recognized_zeta(counts, max_den_deg):
    series = zeta_from_counts(counts)
    z = recognize_rational(series, max_den_deg)
    return (z.num, z.den) if z is not None else None


def _suite_kleinian(qs, rmax, budget):
    reports = []
    for name in DEFAULT_KLEINIAN_GRID:
        fam = kleinian_catalog(name)
        for q in qs:
            if _gcd(q, fam.group_order) != 1:
                continue
            start = time.perf_counter()
            f = _field_for(q)
            model = kleinian_orbifold_model(fam)
            rep = mckay_verify(
                model, lambda fl, r: kleinian_resolution_count(fam, fl, r, budget), f, rmax
            )
            rows = []
            for row in rep.rows:
                f_r = make_field(f.p, f.e * row.r)
                n_coarse = coarse_count(fam.affine_model(), f_r, budget)
                rows.append(
                    ReportRow(row.r, n_coarse, row.n_orb, row.n_resolution, row.match)
                )
            terms = 2 * (fam.k + 1) + 2
            counts = tuple(q ** (2 * r) + fam.k * q**r for r in range(1, terms + 1))
            reports.append(
                VerificationReport(
                    model=name,
                    q=q,
                    rows=tuple(rows),
                    zeta=_recognized_zeta(counts, fam.k + 1),
                    timing=time.perf_counter() - start,
                    engines=("charsum",) * rmax,
                )
            )
    return reports


def _suite_threefold(qs, rmax, budget):
    reports = []
    for name in ("mu3", "mu5"):
        tm = threefold_catalog(name)
        model = threefold_orbifold_model(tm)
        ages = [int(c.age) for c in model.twisted]
        for q in qs:
            if _gcd(q, tm.n_order) != 1:
                continue
            start = time.perf_counter()
            f = _field_for(q)
            rep = mckay_verify(
                model, lambda fl, r: threefold_resolution_count(tm, fl, r, budget), f, rmax
            )
            rows = tuple(
                ReportRow(
                    row.r,
                    q ** (3 * row.r),
                    row.n_orb,
                    row.n_resolution,
                    row.match,
                )
                for row in rep.rows
            )
            deg = 2 + len(ages)
            terms = 2 * deg + 2
            counts = tuple(
                q ** (3 * r) + sum(q ** (a * r) for a in ages)
                for r in range(1, terms + 1)
            )
            reports.append(
                VerificationReport(
                    model=name,
                    q=q,
                    rows=rows,
                    zeta=_recognized_zeta(counts, deg),
                    timing=time.perf_counter() - start,
                    engines=("burnside",) * rmax,
                )
            )
    return reports


def _suite_symprod(qs, nmax, budget):
    reports = []
    for name in ("P2", "P1xP1"):
        for q in qs:
            start = time.perf_counter()
            z = surface_zeta(name, q)
            rep = verify_symprod_mckay(z, q, nmax)
            counts = symprod_counts(z, q, nmax)
            rows = tuple(
                ReportRow(row.n, counts[row.n], row.n_orb, row.n_hilbert, row.match)
                for row in rep.rows
            )
            reports.append(
                VerificationReport(
                    model=f"symprod:{name}",
                    q=q,
                    rows=rows,
                    zeta=(z.zeta.num, z.zeta.den),
                    timing=time.perf_counter() - start,
                    engines=("series",) * (nmax + 1),
                )
            )
    return reports


_WEIL_SURFACES = {
    # name -> (dimension, closed-form count, expected Betti numbers)
    "P1": (1, lambda q, r: q**r + 1, {0: 1, 2: 1}),
    "P2": (2, lambda q, r: 1 + q**r + q ** (2 * r), {0: 1, 2: 1, 4: 1}),
    "P1xP1": (2, lambda q, r: (1 + q**r) ** 2, {0: 1, 2: 2, 4: 1}),
    "Hirz3": (2, lambda q, r: (1 + q**r) ** 2, {0: 1, 2: 2, 4: 1}),
}


def _suite_weil(qs, rmax, budget):
    reports = []
    for name, (dim, count_fn, betti) in _WEIL_SURFACES.items():
        for q in qs:
            start = time.perf_counter()
            counts = tuple(count_fn(q, r) for r in range(1, 13))
            z = recognize_rational(zeta_from_counts(counts), 5)
            ok = z is not None
            recovered = None
            if ok:
                report = weil_check(z, dim, q)
                recovered = counts_from_zeta(z, rmax)
                ok = (
                    report.functional_sign is not None
                    and report.riemann_ok
                    and report.factor_degrees == betti
                )
            rows = tuple(
                ReportRow(
                    r,
                    counts[r - 1],
                    recovered[r - 1] if recovered else -1,
                    counts[r - 1],
                    bool(ok and recovered and recovered[r - 1] == counts[r - 1]),
                )
                for r in range(1, rmax + 1)
            )
            reports.append(
                VerificationReport(
                    model=f"weil:{name}",
                    q=q,
                    rows=rows,
                    zeta=(z.num, z.den) if z is not None else None,
                    timing=time.perf_counter() - start,
                    engines=("closed-form",) * rmax,
                )
            )
    return reports


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def run_suite(selector: str, qs, rmax: int, nmax: int, budget: int) -> list[VerificationReport]:
    if selector not in SUITES:
        raise CliError(f"unknown suite {selector!r}; choose from {', '.join(SUITES)}")
    reports = []
    if selector in ("kleinian", "all"):
        reports += _suite_kleinian(qs, rmax, budget)
    if selector in ("threefold", "all"):
        reports += _suite_threefold(qs, rmax, budget)
    if selector in ("symprod", "all"):
        reports += _suite_symprod(qs, nmax, budget)
    if selector in ("weil", "all"):
        reports += _suite_weil(qs, rmax, budget)
    reports.sort(key=lambda rep: (rep.model, rep.q))
    return reports


# ---------------------------------------------------------------------------
# emission


def report_to_obj(rep: VerificationReport) -> dict:
    return {
        "model": rep.model,
        "q": rep.q,
        "rows": [
            {
                "r": row.r,
                "n_coarse": row.n_coarse,
                "n_orb": row.n_orb,
                "n_resolution": row.n_resolution,
                "match": row.match,
            }
            for row in rep.rows
        ],
        "zeta": None
        if rep.zeta is None
        else {"num": list(rep.zeta[0]), "den": list(rep.zeta[1])},
    }


def report_from_obj(obj: dict) -> VerificationReport:
    return VerificationReport(
        model=obj["model"],
        q=obj["q"],
        rows=tuple(
            ReportRow(
                row["r"], row["n_coarse"], row["n_orb"], row["n_resolution"], row["match"]
            )
            for row in obj["rows"]
        ),
        zeta=None
        if obj["zeta"] is None
        else (tuple(obj["zeta"]["num"]), tuple(obj["zeta"]["den"])),
    )


CSV_HEADER = "model,q,r,n_coarse,n_orb,n_resolution,match"


def emit_report(reports, format: str = "text") -> bytes:
    """Serialize reports; byte-stable across runs for identical inputs."""
    if format == "json":
        text = json.dumps([report_to_obj(rep) for rep in reports], indent=2)
        return (text + "\n").encode()
    if format == "csv":
        lines = [CSV_HEADER]
        for rep in reports:
            for row in rep.rows:
                lines.append(
                    f"{rep.model},{rep.q},{row.r},{row.n_coarse},"
                    f"{row.n_orb},{row.n_resolution},{str(row.match).lower()}"
                )
        return ("\n".join(lines) + "\n").encode()
    if format == "text":
        out = io.StringIO()
        for rep in reports:
            verdict = "ok" if rep.all_match else "MISMATCH"
            out.write(f"{rep.model} q={rep.q} [{verdict}]\n")
            out.write("  r   n_coarse      n_orb  n_resolution  match\n")
            for row in rep.rows:
                out.write(
                    f"  {row.r:<3}{row.n_coarse:>9}{row.n_orb:>11}"
                    f"{row.n_resolution:>14}  {'ok' if row.match else 'FAIL'}\n"
                )
            if rep.zeta is not None:
                num, den = rep.zeta
                out.write(f"  zeta: num={list(num)} den={list(den)}\n")
        return out.getvalue().encode()
    raise CliError(f"unknown format {format!r}")


# ---------------------------------------------------------------------------
# argument handling


def _parse_q_list(text: str) -> list[int]:
    try:
        qs = [int(chunk) for chunk in text.split(",") if chunk.strip()]
    except ValueError:
        raise CliError(f"bad q list {text!r}") from None
    if not qs:
        raise CliError("empty q list")
    for q in qs:
        factor_prime_power(q)  # validation only
    return qs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbizeta",
        description="Point counts and arithmetic McKay correspondence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", help="count points of a polynomial model")
    pc.add_argument("--poly", required=True, action="append",
                    help="polynomial equation (repeatable; simultaneous vanishing)")
    pc.add_argument("--p", type=int, help="field characteristic")
    pc.add_argument("--e", type=int, default=1, help="extension degree")
    pc.add_argument("--q", type=int, help="prime power (alternative to --p/--e)")
    pc.add_argument("--rmax", type=int, default=1)
    pc.add_argument("--budget", type=int, default=None)
    pc.add_argument("--quiet", action="store_true")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", default="all", choices=SUITES)
    pv.add_argument("--q", default="2,3,4,5,7", help="comma-separated prime powers")
    pv.add_argument("--rmax", type=int, default=2)
    pv.add_argument("--nmax", type=int, default=8)
    pv.add_argument("--budget", type=int, default=None)
    pv.add_argument("--json", metavar="PATH", help="write JSON report")
    pv.add_argument("--csv", metavar="PATH", help="write CSV report")
    pv.add_argument("--quiet", action="store_true")
    return parser


def _cmd_count(args) -> int:
    if args.q is not None:
        if args.p is not None:
            raise CliError("give either --q or --p/--e, not both")
        p, e = factor_prime_power(args.q)
    elif args.p is not None:
        p, e = args.p, args.e
    else:
        raise CliError("need --p or --q")
    equations = [parse_polynomial(text) for text in args.poly]
    model = AffineModel.from_equations(equations)
    budget = args.budget if args.budget is not None else default_budget()
    seq = count_sequence(model, p, e, args.rmax, budget)
    print(", ".join(str(v) for v in seq.values))
    if seq.incomplete and not args.quiet:
        print(f"incomplete: {seq.incomplete}", file=sys.stderr)
    return 0 if not seq.incomplete else 1


def _cmd_verify(args) -> int:
    qs = _parse_q_list(args.q)
    budget = args.budget if args.budget is not None else default_budget()
    start = time.perf_counter()
    reports = run_suite(args.suite, qs, args.rmax, args.nmax, budget)
    elapsed = time.perf_counter() - start
    if args.json:
        with open(args.json, "wb") as fh:
            fh.write(emit_report(reports, "json"))
    if args.csv:
        with open(args.csv, "wb") as fh:
            fh.write(emit_report(reports, "csv"))
    if not args.quiet:
        sys.stdout.write(emit_report(reports, "text").decode())
        print(f"{len(reports)} reports in {elapsed:.2f}s", file=sys.stderr)
    return exit_code(reports)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args)
        return _cmd_verify(args)
    except (CliError, FieldError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
