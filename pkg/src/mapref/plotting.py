"""Report rendering: delimited check tables plus summary figures.

The verify report path writes one CSV and one PNG per suite into the
chosen directory.  Figures are simple pass/fail bars; matplotlib runs on
the Agg backend so this works headless.
"""
from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .record import VerificationRecord

_FIG_PARAMS = {
    "figure.dpi": 150,
    "font.size": 8,
    "axes.titlesize": 9,
    "axes.labelsize": 8,
}


def write_csv(record: VerificationRecord, path: Path) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "ok", "got", "want", "note"])
        for c in record.checks:
            writer.writerow([c.name, "pass" if c.ok else "fail",
                             "" if c.got is None else repr(c.got),
                             "" if c.want is None else repr(c.want),
                             c.note])
        for w in record.warnings:
            writer.writerow(["warning", "", "", "", w])


def render_figure(record: VerificationRecord, path: Path,
                  suite_name: str) -> None:
    checks = record.checks
    n = max(len(checks), 1)
    with plt.rc_context(_FIG_PARAMS):
        height = min(0.25 * n + 1.2, 28.0)
        fig, ax = plt.subplots(figsize=(7.0, height))
        ys = range(len(checks))
        colors = ["#2b8cbe" if c.ok else "#d7301f" for c in checks]
        ax.barh(list(ys), [1] * len(checks), color=colors, height=0.7)
        ax.set_yticks(list(ys))
        ax.set_yticklabels([c.name for c in checks], fontsize=6)
        ax.invert_yaxis()
        ax.set_xticks([])
        npass = sum(c.ok for c in checks)
        ax.set_title(f"{suite_name}: {npass}/{len(checks)} checks pass"
                     + (f", {len(record.warnings)} warning(s)"
                        if record.warnings else ""))
        for spine in ("top", "right", "bottom"):
            ax.spines[spine].set_visible(False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def write_report(record: VerificationRecord, outdir: str | Path,
                 suite_name: str) -> tuple[Path, Path]:
    """Write <suite>.csv and <suite>.png under outdir; returns the paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{suite_name}.csv"
    png_path = out / f"{suite_name}.png"
    write_csv(record, csv_path)
    render_figure(record, png_path, suite_name)
    return csv_path, png_path
