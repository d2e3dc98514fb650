"""Invariant reports: assembly, JSON/CSV serialisation, summary figures.

The report path renders two matplotlib figures (degree vs genus, and the
rank profile of the classified varieties) next to the delimited table.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .polytope import LatticePolytope, PropertyFlags, classify
from .symmetry import (
    automorphism_group,
    fixed_subspace_dim,
    invariant_class_rank,
    vertex_orbits,
)
from .toric import anticanonical_degree, class_group_rank, genus, picard_rank


@dataclass(frozen=True)
class InvariantReport:
    n_vertices: int
    rk_cl: int
    rk_pic: int
    degree: Fraction
    genus: int
    flags: PropertyFlags
    aut_order: int
    n_orbits: int
    fixed_dim: int
    inv_cl_rank: int
    is_gfano: bool


def degree_string(d: Fraction) -> str:
    return str(d.numerator) if d.denominator == 1 else f"{d.numerator}/{d.denominator}"


def build_report(p: LatticePolytope) -> InvariantReport:
    """Full invariant report of a Fano polytope.

    Raises ValueError for non-Fano input (origin not strictly interior or
    a non-primitive vertex).
    """
    flags = classify(p)
    if not flags.is_fano:
        raise ValueError("not a Fano polytope")
    group = automorphism_group(p)
    orbits = vertex_orbits(p, group)
    fixed = fixed_subspace_dim(group)
    inv_rank = orbits.n_orbits - fixed
    return InvariantReport(
        n_vertices=p.n_vertices,
        rk_cl=class_group_rank(p),
        rk_pic=picard_rank(p),
        degree=anticanonical_degree(p),
        genus=genus(p),
        flags=flags,
        aut_order=group.order,
        n_orbits=orbits.n_orbits,
        fixed_dim=fixed,
        inv_cl_rank=inv_rank,
        is_gfano=inv_rank == 1,
    )


def report_json_dict(report: InvariantReport, p: LatticePolytope, fid: str | None = None) -> dict:
    return {
        "id": fid,
        "vertices": [list(v) for v in p.vertices],
        "flags": {
            "is_fano": report.flags.is_fano,
            "is_terminal": report.flags.is_terminal,
            "is_canonical": report.flags.is_canonical,
            "is_reflexive": report.flags.is_reflexive,
            "is_simplicial": report.flags.is_simplicial,
            "is_regular": report.flags.is_regular,
        },
        "rk_cl": report.rk_cl,
        "rk_pic": report.rk_pic,
        "degree": degree_string(report.degree),
        "genus": report.genus,
        "aut_order": report.aut_order,
        "n_orbits": report.n_orbits,
        "fixed_dim": report.fixed_dim,
        "inv_cl_rank": report.inv_cl_rank,
        "is_gfano": report.is_gfano,
    }


CSV_COLUMNS = [
    "id", "label", "n_vertices", "rk_cl", "rk_pic", "degree", "genus",
    "aut_order", "n_orbits", "fixed_dim", "inv_cl_rank", "is_gfano",
    "is_terminal", "is_reflexive", "is_simplicial", "is_regular",
]


def write_report_csv(rows: list[dict], path) -> None:
    """Write one delimited row per variety; `rows` come from report_row."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)


def report_row(fid: str, label: str, report: InvariantReport) -> dict:
    return {
        "id": fid,
        "label": label,
        "n_vertices": report.n_vertices,
        "rk_cl": report.rk_cl,
        "rk_pic": report.rk_pic,
        "degree": degree_string(report.degree),
        "genus": report.genus,
        "aut_order": report.aut_order,
        "n_orbits": report.n_orbits,
        "fixed_dim": report.fixed_dim,
        "inv_cl_rank": report.inv_cl_rank,
        "is_gfano": report.is_gfano,
        "is_terminal": report.flags.is_terminal,
        "is_reflexive": report.flags.is_reflexive,
        "is_simplicial": report.flags.is_simplicial,
        "is_regular": report.flags.is_regular,
    }


def render_figures(rows: list[dict], outdir) -> list[Path]:
    """Render the summary figures next to the delimited output.

    Returns the paths written: a degree/genus scatter and a grouped bar
    chart of class vs Picard ranks.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    degrees = [Fraction(r["degree"]) for r in rows]
    genera = [r["genus"] for r in rows]
    labels = [r["id"] for r in rows]

    fig, ax = plt.subplots(figsize=(7, 5))
    ax.scatter([float(d) for d in degrees], genera, c="tab:blue", zorder=3)
    for x, y, lab in zip(degrees, genera, labels):
        ax.annotate(lab, (float(x), y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_xlabel("anticanonical degree")
    ax.set_ylabel("genus")
    ax.set_title("Toric G-Fano threefolds: degree vs genus")
    ax.grid(True, alpha=0.3)
    path = outdir / "degree_genus.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(8, 4))
    xs = range(len(rows))
    width = 0.4
    ax.bar([x - width / 2 for x in xs], [r["rk_cl"] for r in rows], width, label="rk Cl")
    ax.bar([x + width / 2 for x in xs], [r["rk_pic"] for r in rows], width, label="rk Pic")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("rank")
    ax.set_title("class group vs Picard rank")
    ax.legend()
    path = outdir / "ranks.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)
    return written
