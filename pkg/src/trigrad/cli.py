"""Command-line entry point.

Subcommands: homology, homfly, euler-check, invariance, hom-dim,
graph-homology.  Exit codes: 0 success / check passed; 1 check failed;
2 braid parse error; 3 configuration violation; 4 inconclusive comparison
window.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import catalog
from .algebra import Bidegree, QSeries, qt_expand
from .braid import (
    BraidWord,
    InvalidMoveError,
    MarkovMove,
    apply_markov,
    closure_components,
    conjugate_by,
    parse_braid,
    render_braid,
)
from .cube import braid_homology
from .homfly import homfly_F, homfly_F_tilde
from .homology import (
    InconclusiveComparison,
    TriGradedDims,
    compare_up_to_shift,
    default_workers,
    euler_characteristic,
    hom_space_dim,
    matrix_homology,
)

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_CONFIG = 3
EXIT_INCONCLUSIVE = 4


def _parse(text: str, strands: int | None) -> BraidWord:
    try:
        return parse_braid(text, strands)
    except ValueError as exc:
        click.echo(f"braid parse error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _check_config(qmax: int, workers: int) -> None:
    if qmax < 1 or workers < 1:
        click.echo("config violation: qmax and workers must be >= 1", err=True)
        sys.exit(EXIT_CONFIG)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def dims_to_json(h: TriGradedDims) -> list:
    return [[j, k, l, d] for (j, k, l), d in h.items_sorted()]


def series_to_json(s: QSeries) -> list:
    return [
        [qe, [[te, str(c)] for te, c in sorted(s.coeffs[qe].items())]]
        for qe in sorted(s.coeffs)
    ]


def emit_result(
    braid: BraidWord, reduced: bool, h: TriGradedDims
) -> str:
    payload = {
        "braid": render_braid(braid),
        "reduced": reduced,
        "qmax": h.qmax,
        "dims": dims_to_json(h),
        "euler": series_to_json(euler_characteristic(h)),
    }
    return json.dumps(payload, separators=(",", ":"))


def parse_result(text: str) -> dict:
    payload = json.loads(text)
    payload["dims"] = [
        [int(j), int(k), int(l), int(d)] for j, k, l, d in payload["dims"]
    ]
    payload["euler"] = [
        [int(qe), [[int(te), Fraction(c)] for te, c in row]]
        for qe, row in payload["euler"]
    ]
    return payload


def poincare_text(h: TriGradedDims) -> str:
    """sum of dim * t^k q^l s^j, s marking the cube degree."""
    if not h.dims:
        return "0"
    parts = []
    for (j, k, l), d in h.items_sorted():
        factors = []
        if d != 1:
            factors.append(str(d))
        for sym, e in (("t", k), ("q", l), ("s", j)):
            if e == 1:
                factors.append(sym)
            elif e != 0:
                factors.append(f"{sym}^{e}")
        parts.append("*".join(factors) if factors else "1")
    return " + ".join(parts)


@click.group()
def main():
    """Triply-graded link homology of braid closures, exactly."""


_common = [
    click.option("--strands", type=int, default=None, help="strand count override"),
    click.option("--qmax", type=int, default=12, show_default=True),
    click.option("--reduced", is_flag=True, default=False),
    click.option("--basepoint", type=str, default=None),
    click.option("--marks", type=int, default=1, show_default=True,
                 help="marks per strand segment"),
    click.option("--json", "as_json", is_flag=True, default=False),
    click.option("--out", type=str, default=None),
    click.option("--workers", type=int, default=None,
                 help="worker processes (default: TRIGRAD_WORKERS or 1)"),
]


def common_options(fn):
    for opt in reversed(_common):
        fn = opt(fn)
    return fn


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("braid")
@common_options
def homology(braid, strands, qmax, reduced, basepoint, marks, as_json, out, workers):
    """Trigraded homology dims of the closure of BRAID."""
    workers = workers or default_workers()
    _check_config(qmax, workers)
    b = _parse(braid, strands)
    h = braid_homology(
        b, qmax, reduced=reduced, basepoint=basepoint,
        marks_per_segment=marks, workers=workers,
    )
    if as_json:
        _emit(emit_result(b, reduced, h), out)
        return
    lines = [
        f"braid: {render_braid(b)}  (strands {b.strands}, "
        f"components {closure_components(b)}, qmax {qmax}"
        + (", reduced" if reduced else "")
        + ")"
    ]
    lines.append(" j   k   l  dim")
    for (j, k, l), d in h.items_sorted():
        lines.append(f"{j:2d} {k:3d} {l:3d}  {d}")
    lines.append("poincare: " + poincare_text(h))
    _emit("\n".join(lines), out)


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("braid")
@click.option("--strands", type=int, default=None)
@click.option("--qmax", type=int, default=12, show_default=True,
              help="cutoff for the q-series form")
@click.option("--json", "as_json", is_flag=True, default=False)
@click.option("--out", type=str, default=None)
def homfly(braid, strands, qmax, as_json, out):
    """The oracle values F and F-tilde of the closure of BRAID."""
    _check_config(qmax, 1)
    b = _parse(braid, strands)
    f = homfly_F(b)
    ft = homfly_F_tilde(b)
    ft_desc = f"({ft.value})" + (" * A" if ft.odd else "")
    if as_json:
        payload = {
            "braid": render_braid(b),
            "F": str(f),
            "F_series": series_to_json(qt_expand(f, qmax)),
            "F_tilde": ft_desc,
        }
        _emit(json.dumps(payload, separators=(",", ":")), out)
        return
    _emit(
        f"F = {f}\nF as q-series: {qt_expand(f, qmax)}\nF~ = {ft_desc}",
        out,
    )


@main.command("euler-check", context_settings={"ignore_unknown_options": True})
@click.argument("braid")
@common_options
def euler_check(braid, strands, qmax, reduced, basepoint, marks, as_json, out, workers):
    """Compare the homology Euler characteristic against the trace oracle."""
    workers = workers or default_workers()
    _check_config(qmax, workers)
    b = _parse(braid, strands)
    h = braid_homology(b, qmax, marks_per_segment=marks, workers=workers)
    left = euler_characteristic(h)
    right = qt_expand(homfly_F(b), qmax)
    bad = left.first_difference(right)
    if bad is None:
        _emit(f"euler-check PASS: <D> = F(D) for {render_braid(b)!r} "
              f"up to q^{qmax}", out)
        return
    lines = [
        f"euler-check FAIL at q^{bad}:",
        f"  homology: {sorted(left.coefficient(bad).items())}",
        f"  oracle:   {sorted(right.coefficient(bad).items())}",
    ]
    _emit("\n".join(lines), out)
    sys.exit(EXIT_FAIL)


def parse_move(text: str) -> tuple[str, list]:
    parts = text.split(":")
    head, args = parts[0], [int(x) for x in parts[1:]]
    return head, args


def apply_move_text(b: BraidWord, text: str) -> BraidWord:
    head, args = parse_move(text)
    try:
        if head == "conj":
            return apply_markov(b, MarkovMove("conjugate", pos=args[0]))
        if head == "conjlet":
            return conjugate_by(b, args[0])
        if head == "far":
            return apply_markov(b, MarkovMove("far-commute", pos=args[0]))
        if head == "cancel":
            return apply_markov(b, MarkovMove("cancel-pair", pos=args[0]))
        if head == "insert":
            return apply_markov(
                b, MarkovMove("cancel-pair", pos=args[0], letter=args[1])
            )
        if head == "braid":
            return apply_markov(b, MarkovMove("braid-relation", pos=args[0]))
        if head == "stab+":
            return apply_markov(b, MarkovMove("stabilize-positive"))
        if head == "stab-":
            return apply_markov(b, MarkovMove("stabilize-negative"))
        if head == "destab":
            return apply_markov(b, MarkovMove("destabilize"))
    except InvalidMoveError as exc:
        click.echo(f"invalid move {text!r}: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    click.echo(f"unknown move {text!r}", err=True)
    sys.exit(EXIT_CONFIG)


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("braid")
@click.option("--move", "moves", multiple=True, required=True,
              help="conj:K | conjlet:G | far:P | cancel:P | insert:P:G | "
                   "braid:P | stab+ | stab- | destab")
@common_options
def invariance(braid, moves, strands, qmax, reduced, basepoint, marks,
               as_json, out, workers):
    """Compare homology before/after Markov moves, up to an overall shift."""
    workers = workers or default_workers()
    _check_config(qmax, workers)
    b = _parse(braid, strands)
    b2 = b
    for mv in moves:
        b2 = apply_move_text(b2, mv)
    h1 = braid_homology(b, qmax, marks_per_segment=marks, workers=workers)
    h2 = braid_homology(b2, qmax, marks_per_segment=marks, workers=workers)
    try:
        shift = compare_up_to_shift(h1, h2)
    except InconclusiveComparison as exc:
        _emit(f"invariance INCONCLUSIVE: {exc}", out)
        sys.exit(EXIT_INCONCLUSIVE)
    if shift is None:
        _emit(
            f"invariance FAIL: {render_braid(b)!r} vs {render_braid(b2)!r}",
            out,
        )
        sys.exit(EXIT_FAIL)
    _emit(
        f"invariance PASS: {render_braid(b)!r} -> {render_braid(b2)!r} "
        f"with shift (dj,dk,dl) = {shift}",
        out,
    )


@main.command("hom-dim")
@click.argument("src")
@click.argument("tgt")
@click.option("--bidegree", nargs=2, type=int, default=(0, 0), show_default=True)
@click.option("--json", "as_json", is_flag=True, default=False)
@click.option("--out", type=str, default=None)
def hom_dim(src, tgt, bidegree, as_json, out):
    """dim Hom(SRC, TGT) among the named factorizations.

    Names: gamma000..gamma111, gamma1..gamma4, upsilon, s2, s3.
    """
    try:
        m, n = catalog.hom_pair(src, tgt)
    except KeyError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_CONFIG)
    d = hom_space_dim(m, n, Bidegree(*bidegree))
    if as_json:
        _emit(json.dumps({"src": src, "tgt": tgt,
                          "bidegree": list(bidegree), "dim": d}), out)
    else:
        _emit(f"dim Hom({src}, {tgt}) at {tuple(bidegree)} = {d}", out)


@main.command("graph-homology")
@click.argument("name")
@click.option("--qmax", type=int, default=12, show_default=True)
@click.option("--json", "as_json", is_flag=True, default=False)
@click.option("--out", type=str, default=None)
def graph_homology_cmd(name, qmax, as_json, out):
    """Bigraded homology of a named closed graph.

    Names: circle, theta, upsilon-closure, gamma1-closure..gamma4-closure.
    """
    _check_config(qmax, 1)
    try:
        m = catalog.closed_matrix(name)
    except KeyError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_CONFIG)
    h = matrix_homology(m, qmax)
    if as_json:
        payload = {"graph": name, "qmax": qmax, "dims": dims_to_json(h)}
        _emit(json.dumps(payload, separators=(",", ":")), out)
        return
    lines = [f"graph: {name} (qmax {qmax})", " k   l  dim"]
    for (_, k, l), d in h.items_sorted():
        lines.append(f"{k:3d} {l:3d}  {d}")
    _emit("\n".join(lines), out)


if __name__ == "__main__":
    main()
