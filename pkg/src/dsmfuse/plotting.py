"""Bar chart of a fused mass function."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_masses(report: dict, path: str | Path) -> Path:
    """Draw one bar per focal element from a fusion report and save it to ``path``."""
    labels = list(report["decimal"])
    values = [float(v) for v in report["decimal"].values()]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.8 * len(labels) + 2), 3.2))
    bars = ax.bar(range(len(labels)), values, color="#4c72b0")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30 if len(labels) > 6 else 0)
    ax.set_ylabel("mass")
    ax.set_ylim(0, max(values + [0.0]) * 1.15 or 1)
    ax.set_title(f"{report['rule']} ({report['mode']})")
    ax.bar_label(bars, labels=[f"{v:.3f}" for v in values], fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path
