"""Figure rendering for the CLI report paths.

Figures are written to files next to the delimited output; matplotlib is
imported lazily with the Agg backend so headless runs work and non-plotting
invocations pay nothing.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_sweep(rows, path: str, title: str = "") -> None:
    """rows: (p, mean, dmean_dp, total_influence) tuples."""
    plt = _pyplot()
    ps = [r[0] for r in rows]
    fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True, figsize=(6, 6))
    ax1.plot(ps, [r[1] for r in rows], marker="o", color="tab:blue")
    ax1.set_ylabel("E(f)")
    ax2.plot(ps, [r[2] for r in rows], marker="o", label="dE/dp (analytic)",
             color="tab:orange")
    ax2.plot(ps, [r[3] for r in rows], marker="x", linestyle="--",
             label="total influence", color="tab:green")
    ax2.set_xlabel("p")
    ax2.set_ylabel("derivative / influence")
    ax2.legend()
    if title:
        ax1.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_tail(rows, path: str, title: str = "") -> None:
    """rows: (u, exact, bound_stated, bound_proved) tuples."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    us = [r[0] for r in rows]
    ax.plot(us, [r[1] for r in rows], marker="o", label="exact tail")
    ax.plot(us, [min(1.0, r[2]) for r in rows], marker="x", linestyle="--",
            label="bound (stated)")
    ax.plot(us, [min(1.0, r[3]) for r in rows], marker="+", linestyle=":",
            label="bound (proved)")
    ax.set_yscale("log")
    ax.set_xlabel("u")
    ax.set_ylabel("P(|S_n| >= u)")
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_profile(per_coord, path: str, title: str = "") -> None:
    """Bar chart of per-coordinate influences."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(1, len(per_coord) + 1), per_coord, color="tab:blue")
    ax.set_xlabel("coordinate")
    ax.set_ylabel("influence")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
