"""Figure and CSV rendering for the report-producing commands.

Each renderer writes a delimited data file next to one or more PNG figures in
the requested directory and returns the list of paths it created. matplotlib
runs on the Agg backend so rendering works headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bounds import Lemma22Report, SweepReport
from .casetrees import CertifyReport
from .graphio import parse_graph6

_BOUND = 6 / 5


def _ensure_dir(outdir) -> Path:
    path = Path(outdir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def render_sweep(report: SweepReport, outdir) -> list[Path]:
    out = _ensure_dir(outdir)
    csv_path = out / "sweep.csv"
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["graph", "n", "e", "kappa3", "five_e", "six_n", "tight", "m_prime", "note"])
        for r in report.rows:
            w.writerow(
                [
                    r.name,
                    r.n,
                    r.e,
                    "" if r.kappa3 is None else r.kappa3,
                    5 * r.e,
                    6 * r.n,
                    int(r.audit.equality),
                    r.audit.m_prime,
                    r.note or "",
                ]
            )
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    k2 = [(r.n, r.e / r.n) for r in report.rows if r.kappa3 == 2]
    other = [(r.n, r.e / r.n) for r in report.rows if r.kappa3 is not None and r.kappa3 != 2]
    if other:
        ax.scatter(*zip(*other), s=12, color="0.75", label="other graphs")
    if k2:
        ax.scatter(*zip(*k2), s=18, color="tab:blue", label="3-connectivity 2")
    ns = sorted({r.n for r in report.rows if r.kappa3 is not None})
    if ns:
        ax.plot([min(ns) - 0.5, max(ns) + 0.5], [_BOUND, _BOUND], "r--", lw=1, label="e/n = 6/5")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("edge density e/n")
    ax.set_title("edge density against the 6/5 lower bound")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = out / "sweep_density.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def render_certify(report: CertifyReport, outdir) -> list[Path]:
    out = _ensure_dir(outdir)
    csv_path = out / f"certify_k{report.k}_cases.csv"
    items = sorted(report.by_case.items())
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["case", "count"])
        w.writerows(items)
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    tags = [t for t, _ in items]
    counts = [c for _, c in items]
    ax.bar(range(len(tags)), counts, color="tab:blue")
    ax.set_xticks(range(len(tags)))
    ax.set_xticklabels(tags, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("certificates")
    ax.set_title(f"H({report.k}): {report.total} certified 3-sets by construction case")
    fig.tight_layout()
    png_path = out / f"certify_k{report.k}_cases.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def render_lemma22(report: Lemma22Report, outdir) -> list[Path]:
    out = _ensure_dir(outdir)
    csv_path = out / "order10_candidates.csv"
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["index", "graph6", "kappa3", "witness_triple"])
        for c in report.candidates:
            w.writerow([c["index"], c["graph6"], c["kappa3"], " ".join(map(str, c["witness_triple"]))])
    cands = report.candidates
    fig, axes = plt.subplots(1, max(len(cands), 1), figsize=(4.0 * max(len(cands), 1), 3.6))
    if len(cands) == 1:
        axes = [axes]
    for ax, cand in zip(axes, cands):
        g = parse_graph6(cand["graph6"])
        xs = [v for v in range(g.n) if len(g.adj[v]) == 2]
        ys = [v for v in range(g.n) if len(g.adj[v]) == 3]
        pos = {v: (i, 1.0) for i, v in enumerate(xs)}
        pos.update({v: (1.0 + 1.2 * i, 0.0) for i, v in enumerate(ys)})
        for u, v in g.edges():
            ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], color="0.6", lw=1, zorder=1)
        witness = set(cand["witness_triple"])
        for v, (x, y) in pos.items():
            hot = v in witness
            ax.scatter([x], [y], s=90 if hot else 50, zorder=2,
                       color="tab:red" if hot else "tab:blue")
        ax.set_title(f"candidate {cand['index']}: 3-connectivity {cand['kappa3']}", fontsize=9)
        ax.set_axis_off()
    fig.tight_layout()
    png_path = out / "order10_candidates.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]
