"""Report rendering: delimited output plus figures.

`write_report_files` drops a machine-readable JSON report, a flat CSV of the
same rows, and (unless disabled) PNG figures summarizing the axiom matrix,
the width-versus-depth comparison across the corpus, and the transform
preservation matrix.
"""

from __future__ import annotations

import csv
import json
import os

from .harness import VerificationReport

STATUS_COLORS = {"pass": "#2e7d32", "fail": "#c62828", "inconclusive": "#f9a825", "info": "#90a4ae"}


def write_report_files(report: VerificationReport, outdir: str, figures: bool = True) -> list[str]:
    """Write report.json, report.csv and figures/*.png; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []

    json_path = os.path.join(outdir, "report.json")
    with open(json_path, "w") as f:
        json.dump(report.to_json_dict(), f, indent=2, sort_keys=True)
        f.write("\n")
    written.append(json_path)

    csv_path = os.path.join(outdir, "report.csv")
    with open(csv_path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["section", "name", "status", "detail"])
        for row in report.rows:
            writer.writerow([row.section, row.name, row.status, row.detail])
    written.append(csv_path)

    if figures:
        written.extend(render_figures(report, os.path.join(outdir, "figures")))
    return written


def render_figures(report: VerificationReport, outdir: str) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    written = []
    written.append(_axiom_matrix_figure(report, outdir, plt))
    written.append(_order_figure(report, outdir, plt))
    written.append(_transform_figure(report, outdir, plt))
    return [p for p in written if p]


def _axiom_matrix_figure(report: VerificationReport, outdir: str, plt) -> str | None:
    rows = [r for r in report.rows if r.section == "algebra-axioms" and r.data]
    if not rows:
        return None
    algebras = [r.data["algebra"] for r in rows]
    families = sorted({f for r in rows for f in r.data["profile"]})
    fig, ax = plt.subplots(figsize=(1.0 + 0.8 * len(families), 0.6 + 0.45 * len(algebras)))
    for i, row in enumerate(rows):
        for j, family in enumerate(families):
            value = row.data["profile"].get(family)
            if value is None:
                color, text = "#eceff1", "–"
            else:
                color = "#a5d6a7" if value else "#ef9a9a"
                text = "yes" if value else "no"
            ax.add_patch(plt.Rectangle((j, len(rows) - 1 - i), 1, 1, color=color))
            ax.text(j + 0.5, len(rows) - 0.5 - i, text, ha="center", va="center", fontsize=8)
    ax.set_xlim(0, len(families))
    ax.set_ylim(0, len(rows))
    ax.set_xticks([j + 0.5 for j in range(len(families))])
    ax.set_xticklabels(families, rotation=45, ha="right", fontsize=8)
    ax.set_yticks([len(rows) - 0.5 - i for i in range(len(rows))])
    ax.set_yticklabels(algebras, fontsize=8)
    ax.set_title("Axiom families by algebra")
    ax.set_aspect("equal")
    fig.tight_layout()
    path = os.path.join(outdir, "axiom_matrix.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _order_figure(report: VerificationReport, outdir: str, plt) -> str | None:
    rows = [r for r in report.rows if r.section == "order-check" and r.data]
    if not rows:
        return None
    fig, ax = plt.subplots(figsize=(5.5, 5.0))
    xs = [r.data["depth_index"] for r in rows]
    ys = [r.data["width_index"] for r in rows]
    colors = [STATUS_COLORS.get(r.status, "#90a4ae") for r in rows]
    top = max(xs + ys + [1])
    ax.plot([0, top], [0, top], color="#b0bec5", linewidth=1, zorder=1)
    ax.scatter(xs, ys, c=colors, s=36, zorder=2, alpha=0.8)
    ax.set_xlabel("depth value (carrier position)")
    ax.set_ylabel("width value (carrier position)")
    ax.set_title("Width-first vs depth-first across the corpus")
    ax.set_xlim(-0.5, top + 0.5)
    ax.set_ylim(-0.5, top + 0.5)
    fig.tight_layout()
    path = os.path.join(outdir, "width_vs_depth.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _transform_figure(report: VerificationReport, outdir: str, plt) -> str | None:
    rows = [r for r in report.rows if r.section == "transform-equivalence" and r.data]
    if not rows:
        return None
    fixtures = sorted({r.data["fixture"] for r in rows})
    kinds = sorted({f"{r.data['kind']}[{r.data['mode']}]" for r in rows})
    cell = {}
    for r in rows:
        cell[(r.data["fixture"], f"{r.data['kind']}[{r.data['mode']}]")] = r.status
    fig, ax = plt.subplots(figsize=(1.5 + 0.85 * len(kinds), 0.8 + 0.45 * len(fixtures)))
    for i, fixture in enumerate(fixtures):
        for j, kind in enumerate(kinds):
            status = cell.get((fixture, kind))
            if status is None:
                color, text = "#eceff1", ""
            else:
                color = {"pass": "#a5d6a7", "fail": "#ef9a9a"}.get(status, "#fff59d")
                text = {"pass": "=", "fail": "≠"}.get(status, "?")
            ax.add_patch(plt.Rectangle((j, len(fixtures) - 1 - i), 1, 1, color=color))
            ax.text(j + 0.5, len(fixtures) - 0.5 - i, text, ha="center", va="center", fontsize=9)
    ax.set_xlim(0, len(kinds))
    ax.set_ylim(0, len(fixtures))
    ax.set_xticks([j + 0.5 for j in range(len(kinds))])
    ax.set_xticklabels(kinds, rotation=45, ha="right", fontsize=8)
    ax.set_yticks([len(fixtures) - 0.5 - i for i in range(len(fixtures))])
    ax.set_yticklabels(fixtures, fontsize=8)
    ax.set_title("Value preservation by transform")
    ax.set_aspect("equal")
    fig.tight_layout()
    path = os.path.join(outdir, "transform_preservation.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
