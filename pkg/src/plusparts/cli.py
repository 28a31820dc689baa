"""plusparts command line.

Exit codes: 0 verified, 1 verification failed, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import csv
import functools
import io
import os
import sys

import click

from . import arith
from .analytic import class_number_analytic
from .arith import BudgetExceeded
from .contfrac import CriterionInapplicable, fundamental_unit, represents
from .cubic import CertificateError, certify_3_divisibility
from .families import certify_nontrivial, get_family, table
from .forms import CapExceeded, class_number

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
THREADS_ENV = "PLUSPARTS_THREADS"
TABLE_COLUMNS = ("n", "m", "squarefree", "h", "claim", "method")

FORMATS = click.Choice(["tsv", "csv", "text"])


def _flag(v) -> str:
    return {True: "true", False: "false", None: "unknown"}[v]


def _reg(x: float) -> str:
    return f"{x:.12g}"


def render_records(header, rows, fmt: str) -> str:
    """Header row first, then one line per record."""
    rows = [[str(v) for v in r] for r in rows]
    if fmt == "text":
        widths = [max(len(str(h)), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
        lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def parse_records(text: str, fmt: str) -> list[dict]:
    """Inverse of render_records for tsv/csv."""
    reader = csv.DictReader(io.StringIO(text), delimiter="\t" if fmt == "tsv" else ",")
    return list(reader)


def render_kv(pairs, fmt: str) -> str:
    if fmt == "text":
        width = max(len(k) for k, _ in pairs)
        return "".join(f"{k.ljust(width)} : {v}\n" for k, v in pairs)
    return render_records(("key", "value"), pairs, fmt)


def row_record(row) -> list:
    return [
        row.n,
        row.m,
        _flag(row.squarefree),
        "" if row.h is None else row.h,
        row.claim,
        row.h_method if not row.error else f"error: {row.error}",
    ]


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (CapExceeded, BudgetExceeded) as exc:
            click.echo(f"resource cap exceeded: {exc}", err=True)
            sys.exit(EXIT_CAP)
        except CertificateError as exc:
            click.echo(f"VERIFICATION FAILED: {exc}", err=True)
            sys.exit(EXIT_FAILED)
        except (ValueError, CriterionInapplicable) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise click.BadParameter(f"expected A:B, got {text!r}") from None
    return a, b


@click.group(context_settings={"ignore_unknown_options": True})
@click.option("--time-budget", type=float, default=arith.DEFAULT_TIME_BUDGET, show_default=True,
              help="Seconds allowed for each factorization.")
@click.option("--threads", type=int, default=lambda: int(os.environ.get(THREADS_ENV, "1")),
              help=f"Worker threads for table rows (default ${THREADS_ENV} or 1).")
@click.pass_context
def cli(ctx, time_budget, threads):
    """Class numbers of real quadratic fields and plus-part certificates."""
    ctx.obj = {"time_budget": time_budget, "threads": max(1, threads)}


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("m", type=int)
@click.option("--analytic", is_flag=True, help="Use the analytic estimate instead of form cycles.")
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.pass_obj
@handle_errors
def classno(obj, m, analytic, fmt):
    """Class number h of Q(sqrt M), M squarefree."""
    if m < 2 or not arith.is_squarefree(m, obj["time_budget"]):
        raise ValueError(f"m={m} must be squarefree and >= 2")
    if analytic:
        est = class_number_analytic(m)
        pairs = [("m", m), ("D", est.D), ("h", est.h_rounded), ("h_est", f"{est.h_est:.6f}"),
                 ("regulator", _reg(est.regulator)), ("method", "analytic_estimate"),
                 ("ambiguous", _flag(est.ambiguous))]
        click.echo(render_kv(pairs, fmt), nl=False)
        sys.exit(EXIT_CAP if est.ambiguous else EXIT_OK)
    res = class_number(m)
    pairs = [("m", m), ("D", res.D), ("h", res.h), ("h_narrow", res.h_narrow),
             ("unit_norm", f"{res.unit_norm:+d}"), ("method", res.method)]
    click.echo(render_kv(pairs, fmt), nl=False)


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("m", type=int)
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def unit(m, fmt):
    """Fundamental unit (x + y sqrt M)[/2] of Q(sqrt M)."""
    u = fundamental_unit(m)
    pairs = [("x", u.x), ("y", u.y), ("norm", f"{u.unit_norm:+d}"), ("regulator", _reg(u.regulator)),
             ("half_integral", _flag(u.half_integral))]
    click.echo(render_kv(pairs, fmt), nl=False)


@cli.command("represents", context_settings={"ignore_unknown_options": True})
@click.argument("m", type=int)
@click.argument("n", type=int)
@handle_errors
def represents_cmd(m, n):
    """Solve x^2 - M y^2 = N for 0 < |N| < sqrt M."""
    rep = represents(m, n)
    click.echo("NONE" if rep.witness is None else f"{rep.witness[0]} {rep.witness[1]}")
    click.echo("signed Q-cycle: " + " ".join(map(str, rep.signed_q)))


@cli.command("table")
@click.argument("family")
@click.option("--n", "n_range", required=True, help="Range A:B of the family parameter.")
@click.option("--format", "fmt", type=FORMATS, default="tsv")
@click.option("--analytic", is_flag=True, help="Force the analytic estimate (labelled in output).")
@click.pass_obj
@handle_errors
def table_cmd(obj, family, n_range, fmt, analytic):
    """Rows (n, m, squarefree, h, claim, method) of a family."""
    fam = get_family(family)
    lo, hi = _parse_range(n_range)
    rows = table(fam, lo, hi, threads=obj["threads"], analytic=analytic, time_budget=obj["time_budget"])
    click.echo(render_records(TABLE_COLUMNS, [row_record(r) for r in rows], fmt), nl=False)
    if any(r.claim == "false" for r in rows):
        sys.exit(EXIT_FAILED)
    if any(r.error or r.h is None for r in rows):
        sys.exit(EXIT_CAP)


def nontrivial_pairs(cert) -> list:
    p = cert.split_prime
    return [
        ("certificate", "nontrivial"),
        ("family", cert.family),
        ("n", cert.n),
        ("m", cert.m),
        ("split_prime", p),
        (f"jacobi(m,{p})", cert.split_symbol),
        ("fundamental_unit", f"{cert.unit[0]} + {cert.unit[1]}*sqrt(m)"),
        (f"x^2-my^2=+{p}", "NONE" if not cert.nonrep_plus.solvable else cert.nonrep_plus.witness),
        (f"x^2-my^2=-{p}", "NONE" if not cert.nonrep_minus.solvable else cert.nonrep_minus.witness),
        ("signed_q_cycle", " ".join(map(str, cert.nonrep_plus.signed_q))),
        *[("note", s) for s in cert.notes],
        ("verdict", "valid" if cert.valid else "INVALID"),
    ]


def threediv_pairs(cert) -> list:
    ln1, ln2, ln3 = cert.ln_conditions
    return [
        ("certificate", "threediv"),
        ("n", cert.n),
        ("m", cert.m),
        ("d_prime", cert.d_prime),
        ("f_alpha", str(cert.poly)),
        ("irreducible", f"{_flag(cert.irreducible)} ({cert.irreducible_method})"),
        ("ln_applicable", _flag(cert.applicable)),
        ("LN-1", _flag(ln1)),
        ("LN-2", _flag(ln2)),
        ("LN-3", _flag(ln3)),
        ("squarefree", _flag(cert.squarefree)),
        ("h", "not computed" if cert.h is None else cert.h),
        *[("note", s) for s in cert.notes],
        ("verdict", "valid" if cert.verdict else "INVALID"),
    ]


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("kind", type=click.Choice(["nontrivial", "threediv"]))
@click.argument("args", nargs=-1, required=True)
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.pass_obj
@handle_errors
def certify(obj, kind, args, fmt):
    """certify nontrivial FAMILY N  |  certify threediv N"""
    expected = 2 if kind == "nontrivial" else 1
    if len(args) != expected or not args[-1].lstrip("-").isdigit():
        raise click.UsageError("expected 'certify nontrivial FAMILY N' or 'certify threediv N'")
    n = int(args[-1])
    if kind == "nontrivial":
        cert = certify_nontrivial(args[0], n, obj["time_budget"])
        ok, pairs = cert.valid, nontrivial_pairs(cert)
    else:
        cert = certify_3_divisibility(n, time_budget=obj["time_budget"])
        ok, pairs = cert.verdict, threediv_pairs(cert)
    click.echo(render_kv(pairs, fmt), nl=False)
    sys.exit(EXIT_OK if ok else EXIT_FAILED)


def main():
    cli(prog_name="plusparts")


if __name__ == "__main__":
    main()
