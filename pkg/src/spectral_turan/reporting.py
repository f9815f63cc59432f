"""Report serialization: JSON (fixed schema), CSV summary, and figures."""

from __future__ import annotations

import csv
import json
import os

from .harness import Report


def report_to_dict(report: Report) -> dict:
    """Schema-exact dictionary: config, results, elapsed_seconds, version."""
    return {
        "config": report.config,
        "results": [
            {
                "theorem": res.theorem,
                "instances": res.instances,
                "holds": res.holds,
                "vacuous": res.vacuous,
                "degenerate": res.degenerate,
                "violations": res.violations,
            }
            for res in report.results
        ],
        "elapsed_seconds": report.elapsed_seconds,
        "version": report.version,
    }


def write_report_json(report: Report, path: str) -> str:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report_to_dict(report), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def write_summary_csv(report: Report, path: str) -> str:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theorem", "instances", "holds", "vacuous", "degenerate", "violations"])
        for res in report.results:
            writer.writerow(
                [res.theorem, res.instances, res.holds, res.vacuous, res.degenerate, len(res.violations)]
            )
    return path


def render_report_figures(report: Report, outdir: str) -> list[str]:
    """Render outcome and slack-margin figures as PNG files in outdir."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    paths = []

    names = [res.theorem for res in report.results]
    holds = [res.holds for res in report.results]
    vacuous = [res.vacuous for res in report.results]
    degenerate = [res.degenerate for res in report.results]
    violations = [len(res.violations) for res in report.results]

    fig, ax = plt.subplots(figsize=(9, 0.5 * max(len(names), 4) + 1.5))
    ypos = range(len(names))
    left = [0] * len(names)
    for counts, label, color in (
        (holds, "holds", "#2a9d8f"),
        (vacuous, "vacuous", "#bdbdbd"),
        (degenerate, "degenerate", "#8ab6d6"),
        (violations, "violations", "#d62828"),
    ):
        ax.barh(ypos, counts, left=left, label=label, color=color)
        left = [a + b for a, b in zip(left, counts)]
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("instances")
    ax.set_title("verification outcomes")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    outcome_path = os.path.join(outdir, "outcomes.png")
    fig.savefig(outcome_path, dpi=150)
    plt.close(fig)
    paths.append(outcome_path)

    labels = []
    margins = []
    for res in report.results:
        for name, value in sorted(res.min_residuals.items()):
            labels.append(f"{res.theorem}\n{name}")
            margins.append(value)
    if margins:
        fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(labels)), 4.5))
        colors = ["#d62828" if m < 0 else "#2a9d8f" for m in margins]
        ax.bar(range(len(margins)), margins, color=colors)
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=6)
        ax.set_yscale("symlog", linthresh=1e-12)
        ax.axhline(0.0, color="black", linewidth=0.8)
        ax.set_ylabel("minimum residual slack")
        ax.set_title("worst slack per check (negative would mean a violation)")
        fig.tight_layout()
        margin_path = os.path.join(outdir, "residual_margins.png")
        fig.savefig(margin_path, dpi=150)
        plt.close(fig)
        paths.append(margin_path)
    return paths


def write_report_bundle(report: Report, outdir: str) -> list[str]:
    """JSON report, CSV summary, and figures side by side in one directory."""
    os.makedirs(outdir, exist_ok=True)
    paths = [
        write_report_json(report, os.path.join(outdir, "report.json")),
        write_summary_csv(report, os.path.join(outdir, "summary.csv")),
    ]
    paths.extend(render_report_figures(report, outdir))
    return paths
