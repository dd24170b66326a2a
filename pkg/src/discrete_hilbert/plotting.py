"""Figures written next to the delimited sweep / scan output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": (7.0, 2.8),
    "savefig.dpi": 150,
    # fixed metadata keeps repeated runs byte-identical
    "svg.hashsalt": "discrete-hilbert",
}


def _save(fig, path):
    meta = {"Software": None} if str(path).endswith(".png") else None
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    plt.close(fig)


def sweep_figure(rows, path) -> None:
    """Left: errors against p with the 1/p and 4/p guides. Right: undefined fraction."""
    ps = [r.p for r in rows]
    with plt.rc_context(RC):
        fig, (ax1, ax2) = plt.subplots(1, 2)
        ax1.loglog(ps, [r.s_error for r in rows], "o-", label="| |S| - 2√2 |")
        ax1.loglog(ps, [r.correlation_max_error for r in rows], "s-", label="max correlation error")
        ax1.loglog(ps, [4 / p for p in ps], "k--", lw=0.8, label="4/p")
        ax1.loglog(ps, [1 / p for p in ps], "k:", lw=0.8, label="1/p")
        ax1.set_xlabel("p")
        ax1.legend(frameon=False)
        ax2.semilogx(ps, [float(r.undefined_cell_fraction) for r in rows], "o-")
        ax2.set_ylim(0, 0.5)
        ax2.axhline(0.25, color="k", lw=0.8, ls="--")
        ax2.set_xlabel("p")
        ax2.set_ylabel("undefined cell fraction")
        fig.tight_layout()
        _save(fig, path)


def uncertainty_figure(states, checks, path) -> None:
    """Gap lhs - rhs over the grid, coloured by whether the bound is tight."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(4.0, 3.0))
        xs = [q.m for q in states]
        ys = [q.n for q in states]
        gaps = [float(c.lhs - c.rhs) for c in checks]
        sc = ax.scatter(xs, ys, c=gaps, s=12, cmap="viridis")
        tight = [(q.m, q.n) for q, c in zip(states, checks) if c.tight]
        if tight:
            tx, ty = zip(*tight)
            ax.scatter(tx, ty, s=30, facecolors="none", edgecolors="r", label="equality")
            ax.legend(frameon=False, loc="upper right")
        ax.set_xlabel("m")
        ax.set_ylabel("n")
        fig.colorbar(sc, ax=ax, label="lhs - rhs")
        fig.tight_layout()
        _save(fig, path)
