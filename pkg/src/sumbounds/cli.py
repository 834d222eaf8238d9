"""Command-line front end.

Exit codes: 0 success / no violations; 1 proven-theorem violation (or
tightness mismatch); 2 usage error; 3 conjecture counterexample found.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

import click

from . import engine
from .core import IntSequence, IntSet
from .errors import SumboundsError
from .registry import TheoremId, catalog, spec_for
from .verifier import (ALL_APPLICABLE, VerificationReport, conjecture1_tightness,
                       verify_range)

EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_FINDING = 3


def _parse_range(text: str, flag: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise click.UsageError(f"{flag} expects N or LO-HI, got {text!r}")


@click.group()
def main() -> None:
    """Compute sum sets and verify cardinality lower bounds."""


@main.command()
@click.option("--set", "set_text", default=None,
              help="Set literal, e.g. 0,1,3.")
@click.option("--values", default=None, help="Sequence values, e.g. 1,2,4.")
@click.option("--mult", default=None, help="Sequence multiplicities, e.g. 2,1,3.")
@click.option("--h", "h", type=int, default=None,
              help="h-fold sumset (with --restricted: distinct elements).")
@click.option("--restricted", is_flag=True, help="Pairwise-distinct summands.")
@click.option("--subset-sums", "subset", is_flag=True, help="Nonempty subset sums.")
@click.option("--subseq-sums", "subseq", is_flag=True, help="Subsequence sums.")
@click.option("--alpha", type=int, default=None,
              help="Cardinality threshold for --subset-sums/--subseq-sums.")
@click.option("--bounded", is_flag=True,
              help="Use sizes in [1, total−α] instead of ≥ α.")
def compute(set_text, values, mult, h, restricted, subset, subseq, alpha,
            bounded) -> None:
    """Compute one sum set and print its elements and cardinality."""
    if (set_text is None) == (values is None):
        raise click.UsageError("give exactly one of --set or --values/--mult")
    try:
        if set_text is not None:
            a = IntSet.parse(set_text)
            if h is not None:
                result = (engine.restricted_h_fold_sumset(a, h) if restricted
                          else engine.h_fold_sumset(a, h))
            elif subset:
                if alpha is None:
                    result = engine.subset_sums(a)
                elif bounded:
                    result = engine.subset_sums_bounded_card(a, alpha)
                else:
                    result = engine.subset_sums_min_card(a, alpha)
            else:
                raise click.UsageError("--set needs --h or --subset-sums")
        else:
            if mult is None:
                raise click.UsageError("--values needs --mult")
            s = IntSequence.parse(values, mult)
            if not subseq:
                raise click.UsageError("--values/--mult needs --subseq-sums")
            if alpha is None:
                result = engine.subsequence_sums(s)
            elif bounded:
                result = engine.subsequence_sums_bounded_card(s, alpha)
            else:
                result = engine.subsequence_sums_min_card(s, alpha)
    except SumboundsError as exc:
        raise click.UsageError(str(exc))
    click.echo(" ".join(str(x) for x in result.sums) + f" (|·|={len(result)})")


def _report_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n"


def _report_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["theorem", "k_min", "k_max", "max_elem", "mult_max",
                "alpha_policy", "pass", "equality", "violation",
                "inapplicable", "structure_confirmed", "structure_failed",
                "equality_witnesses", "violations", "cursor", "version"])
    p, c, s = report.params, report.counts, report.structure
    w.writerow([report.theorem, p["k_min"], p["k_max"], p["max_elem"],
                p["mult_max"], p["alpha_policy"], c["pass"], c["equality"],
                c["violation"], c["inapplicable"], s["confirmed"], s["failed"],
                ";".join(report.equality_witnesses),
                ";".join(report.violations), report.cursor, report.version])
    return buf.getvalue()


def _report_plain(report: VerificationReport) -> str:
    c = report.counts
    lines = [
        f"theorem {report.theorem}: pass={c['pass']} equality={c['equality']} "
        f"violation={c['violation']} inapplicable={c['inapplicable']}",
        f"structure: confirmed={report.structure['confirmed']} "
        f"failed={report.structure['failed']}",
    ]
    if report.equality_witnesses:
        lines.append("equality witnesses: "
                     + " ".join(report.equality_witnesses[:50]))
    if report.violations:
        lines.append("violations: " + " ".join(report.violations[:50]))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--theorem", required=True, help="Theorem tag (case-insensitive).")
@click.option("--k", "k_text", required=True, help="Cardinality N or LO-HI.")
@click.option("--max-elem", type=int, required=True)
@click.option("--mult-max", type=int, default=1, show_default=True)
@click.option("--alpha-policy", default=ALL_APPLICABLE, show_default=True,
              help="ALL_APPLICABLE or a comma list of α values.")
@click.option("--h", "h_text", default=None, help="h value N or LO-HI.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--after", default=None, help="Resume after this instance literal.")
@click.option("--format", "fmt", default="json", show_default=True,
              type=click.Choice(["json", "csv", "plain"]))
@click.option("--out", default=None, help="Write the report here instead of stdout.")
def verify(theorem, k_text, max_elem, mult_max, alpha_policy, h_text, jobs,
           after, fmt, out) -> None:
    """Sweep a theorem over enumerated instances and report outcomes."""
    try:
        t = TheoremId(theorem.upper())
    except ValueError:
        raise click.UsageError(
            f"unknown theorem {theorem!r}; valid tags: "
            + ", ".join(x.value for x in TheoremId))
    if jobs < 1:
        raise click.UsageError("--jobs must be ≥ 1")
    ks = _parse_range(k_text, "--k")
    hs = _parse_range(h_text, "--h") if h_text else None
    if alpha_policy != ALL_APPLICABLE:
        try:
            policy = [int(x) for x in alpha_policy.split(",")]
        except ValueError:
            raise click.UsageError("--alpha-policy expects ALL_APPLICABLE "
                                   "or a comma list of integers")
    else:
        policy = ALL_APPLICABLE
    try:
        report = verify_range(t, ks, max_elem, mult_max=mult_max,
                              alpha_policy=policy, jobs=jobs, h_values=hs,
                              after=after)
    except SumboundsError as exc:
        raise click.UsageError(str(exc))
    render = {"json": _report_json, "csv": _report_csv,
              "plain": _report_plain}[fmt]
    _emit(render(report), out)
    if report.has_violations:
        sys.exit(EXIT_FINDING if spec_for(t).conjecture else EXIT_VIOLATION)


@main.command("catalog")
@click.option("--format", "fmt", default="plain", show_default=True,
              type=click.Choice(["json", "csv", "plain"]))
@click.option("--out", default=None)
def catalog_cmd(fmt, out) -> None:
    """List every encoded theorem with hypotheses and measured object."""
    entries = catalog()
    if fmt == "json":
        payload = [{"id": e.id.value, "statement": e.statement,
                    "hypotheses": e.hypotheses, "measures": e.measures,
                    "conjecture": e.conjecture, "auxiliary": e.auxiliary,
                    "note": e.note} for e in entries]
        text = json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "statement", "hypotheses", "measures", "conjecture"])
        for e in entries:
            w.writerow([e.id.value, e.statement, e.hypotheses, e.measures,
                        e.conjecture])
        text = buf.getvalue()
    else:
        lines = []
        for e in entries:
            flag = " [conjecture]" if e.conjecture else ""
            lines.append(f"{e.id.value}{flag}")
            lines.append(f"  measures {e.measures}; hypotheses: {e.hypotheses}")
            lines.append(f"  {e.statement}")
            if e.note:
                lines.append(f"  note: {e.note}")
        text = "\n".join(lines) + "\n"
    _emit(text, out)


@main.command()
@click.option("--k", type=int, required=True)
@click.option("--a-last", type=int, required=True)
def tightness(k, a_last) -> None:
    """Reproduce the pair-sum tightness construction and check it."""
    try:
        a, expected, measured = conjecture1_tightness(k, a_last)
    except SumboundsError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"A = {{{a.literal()}}} expected {expected} measured {measured}")
    if measured != expected:
        sys.exit(EXIT_VIOLATION)


if __name__ == "__main__":
    main()
