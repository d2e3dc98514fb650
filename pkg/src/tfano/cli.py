"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

import click

from .fixtures import theorem1_fixtures
from .polyfile import PolytopeFileError, load_polytope, save_polytope
from .polytope import DegenerateInputError, classify
from .report import (
    build_report,
    degree_string,
    render_figures,
    report_json_dict,
    report_row,
    write_report_csv,
)
from .search import EnumConfig, enumerate_empty_polygons, enumerate_terminal_fano
from .symmetry import automorphism_group, normal_form
from .toric import lattice_quotient, wps_polytope

EXIT_MISMATCH = 1
EXIT_INPUT = 2


def _load(path):
    try:
        return load_polytope(path)
    except FileNotFoundError:
        click.echo(f"error: no such file: {path}", err=True)
        sys.exit(EXIT_INPUT)
    except PolytopeFileError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    except DegenerateInputError as exc:
        click.echo(f"error: {path}: degenerate polytope: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    except ValueError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _emit_polytope(p, out, comment):
    if out:
        save_polytope(out, p.vertices, comment)
        click.echo(f"wrote {out}")
    else:
        click.echo(f"# {comment}")
        click.echo(f"{p.n_vertices} {p.ambient_dim}")
        for v in p.vertices:
            click.echo(" ".join(str(x) for x in v))


@click.group()
@click.version_option(package_name="tfano")
def main():
    """Classify terminal Fano lattice polytopes and toric G-Fano threefolds."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def props(file, as_json):
    """Print the predicate flags of a polytope."""
    p = _load(file)
    flags = classify(p)
    if as_json:
        click.echo(
            json.dumps(
                {
                    "is_fano": flags.is_fano,
                    "is_terminal": flags.is_terminal,
                    "is_canonical": flags.is_canonical,
                    "is_reflexive": flags.is_reflexive,
                    "is_simplicial": flags.is_simplicial,
                    "is_regular": flags.is_regular,
                },
                indent=2,
            )
        )
    else:
        for name in ("is_fano", "is_terminal", "is_canonical", "is_reflexive", "is_simplicial", "is_regular"):
            click.echo(f"{name}: {getattr(flags, name)}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def invariants(file, as_json):
    """Print the full invariant report of a Fano polytope."""
    p = _load(file)
    try:
        rep = build_report(p)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if as_json:
        click.echo(json.dumps(report_json_dict(rep, p), indent=2))
    else:
        click.echo(f"vertices:      {rep.n_vertices}")
        click.echo(f"rk Cl:         {rep.rk_cl}")
        click.echo(f"rk Pic:        {rep.rk_pic}")
        click.echo(f"degree:        {degree_string(rep.degree)}")
        click.echo(f"genus:         {rep.genus}")
        click.echo(f"aut order:     {rep.aut_order}")
        click.echo(f"vertex orbits: {rep.n_orbits}")
        click.echo(f"fixed dim:     {rep.fixed_dim}")
        click.echo(f"invariant rank:{rep.inv_cl_rank}")
        click.echo(f"G-Fano:        {rep.is_gfano}")


@main.command()
@click.argument("weights", nargs=4, type=int)
@click.option("-o", "--out", type=click.Path(), help="write the polytope to a file")
def wps(weights, out):
    """Polytope of the weighted projective space P(w0,w1,w2,w3)."""
    try:
        p = wps_polytope(*weights)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    _emit_polytope(p, out, f"P({','.join(str(w) for w in weights)})")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--gen", "generator", required=True, help="superlattice generator, e.g. 1/2,1/2,1/2")
@click.option("-o", "--out", type=click.Path(), help="write the polytope to a file")
def quotient(file, generator, out):
    """Quotient of a Fano polytope by a cyclic superlattice generator."""
    p = _load(file)
    try:
        g = tuple(Fraction(part) for part in generator.split(","))
        if len(g) != 3:
            raise ValueError("generator needs three coordinates")
        k = math.lcm(*(x.denominator for x in g))
        q = lattice_quotient(p, g, k)
    except (ValueError, ZeroDivisionError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    _emit_polytope(q, out, f"quotient by {generator}")


@main.command(name="normal-form")
@click.argument("file", type=click.Path())
def normal_form_cmd(file):
    """Print the canonical vertex matrix of the polytope's class."""
    p = _load(file)
    for row in normal_form(p):
        click.echo(" ".join(str(x) for x in row))


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def aut(file, as_json):
    """Lattice automorphism group of a polytope."""
    p = _load(file)
    group = automorphism_group(p)
    if as_json:
        click.echo(json.dumps({"order": group.order, "elements": [[list(r) for r in m] for m in group]}))
    else:
        click.echo(f"order {group.order}")
        for m in group:
            click.echo("; ".join(" ".join(str(x) for x in row) for row in m))


@main.command(name="enumerate")
@click.option("--box", required=True, type=int, help="vertex coordinate bound B")
@click.option("--dim", required=True, type=click.Choice(["2", "3"]), help="ambient dimension")
@click.option("--jobs", default=1, type=int, show_default=True, help="parallel workers")
@click.option("--max-vertices", default=14, type=int, show_default=True)
def enumerate_cmd(box, dim, jobs, max_vertices):
    """Enumerate terminal Fano polytopes (3D) or empty polygons (2D)."""
    try:
        cfg = EnumConfig(box_bound=box, dim=int(dim), max_vertices=max_vertices)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if cfg.dim == 3:
        classes = enumerate_terminal_fano(cfg, jobs=jobs)
    else:
        classes = enumerate_empty_polygons(cfg, jobs=jobs)
    click.echo(f"{len(classes)} classes")
    for nf in sorted(classes):
        click.echo(" | ".join(" ".join(str(x) for x in v) for v in nf))


def _fixture_entries(fixture_dir):
    entries = theorem1_fixtures()
    if fixture_dir is None:
        fixture_dir = os.environ.get("TFANO_FIXTURES") or None
    if fixture_dir is None:
        return [(e, e.polytope()) for e in entries]
    d = Path(fixture_dir)
    loaded = []
    for e in entries:
        path = d / f"{e.id}.poly"
        if not path.exists():
            click.echo(f"error: missing fixture file {path}", err=True)
            sys.exit(EXIT_INPUT)
        loaded.append((e, _load(path)))
    return loaded


@main.command(name="write-fixtures")
@click.argument("directory", type=click.Path())
def write_fixtures(directory):
    """Materialise the thirteen fixture polytopes as .poly files."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for e in theorem1_fixtures():
        save_polytope(d / f"{e.id}.poly", e.vertices, f"{e.id}: {e.label}")
    click.echo(f"wrote 13 fixtures to {d}")


@main.command(name="verify-theorem1")
@click.argument("fixture_dir", required=False, type=click.Path())
@click.option("--report-dir", type=click.Path(), help="write CSV table and figures here")
def verify_theorem1(fixture_dir, report_dir):
    """Recompute the classification table and check every entry."""
    pairs = _fixture_entries(fixture_dir)
    rows = []
    failures = []
    for entry, p in sorted(pairs, key=lambda t: int(t[0].id)):
        rep = build_report(p)
        checks = {
            "rk_cl": (rep.rk_cl, entry.rk_cl),
            "rk_pic": (rep.rk_pic, entry.rk_pic),
            "degree": (rep.degree, entry.degree),
            "genus": (rep.genus, entry.genus),
            "is_gfano": (rep.is_gfano, True),
            "rk_pic in {1,3}": (rep.rk_pic in (1, 3), True),
            "rk_pic == 3 iff 47/62": (rep.rk_pic == 3, entry.id in ("47", "62")),
        }
        bad = {k: v for k, v in checks.items() if v[0] != v[1]}
        status = "ok" if not bad else "MISMATCH"
        click.echo(
            f"{entry.id:>3} {entry.label:<28} deg {degree_string(rep.degree):>9} "
            f"g {rep.genus:>2} rkCl {rep.rk_cl} rkPic {rep.rk_pic} "
            f"gfano {str(rep.is_gfano):<5} {status}"
        )
        for k, (got, want) in bad.items():
            failures.append((entry.id, k, got, want))
            click.echo(f"      {k}: got {got}, expected {want}")
        rows.append(report_row(entry.id, entry.label, rep))
    if report_dir:
        outdir = Path(report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        write_report_csv(rows, outdir / "theorem1.csv")
        figures = render_figures(rows, outdir)
        click.echo(f"wrote {outdir / 'theorem1.csv'} and {len(figures)} figures")
    if failures:
        click.echo(f"{len(failures)} mismatches in {len({f[0] for f in failures})} fixtures", err=True)
        sys.exit(EXIT_MISMATCH)
    click.echo("13/13 fixtures verified")


if __name__ == "__main__":
    main()
