"""Log-scale plot of figure rows; a convenience view of the CSV."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_figure(rows, k: int, path) -> None:
    ns = [r.n for r in rows]
    # values outgrow int64 quickly; floats are plenty for a log axis
    col = lambda name: [float(getattr(r, name)) for r in rows]  # noqa: E731
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.fill_between(ns, col("nlb"), col("mms_floor"),
                    color="0.85", step="mid", label="NLB to floor(MMS)")
    ax.fill_between(ns, col("best_lower"), col("best_upper"),
                    color="tab:blue", alpha=0.6, step="mid", label="best known bounds")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel(f"SP(n, {k})")
    ax.set_title(f"Bounds on SP(n, {k})")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
