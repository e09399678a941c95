"""Figure rendering for the CLI report paths.

Every subcommand that writes a delimited output file also renders a PNG
next to it (same stem).  Rendering is best-effort presentation, not data:
the delimited file is the artifact of record.  The PNG metadata is
stripped so identical runs produce identical bytes.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_SAVE_KW = {"dpi": 150, "metadata": {"Software": None}}


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def _series(rows, key):
    return np.array(
        [row[key] if row.get(key) is not None else np.nan for row in rows], dtype=float
    )


def render_scan_k(rows, path):
    ks = _series(rows, "k")
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
    for key in ("p0", "p1", "p2", "p3"):
        ax1.plot(ks, _series(rows, key), label=key.replace("p", "P"))
    ax1.plot(ks, _series(rows, "f2"), "k--", label="F2")
    ax1.plot(ks, _series(rows, "f3"), "k:", label="F3")
    ax1.plot(ks, _series(rows, "fano"), color="gray", label="Fano")
    ax1.set_ylabel("probability / Fano")
    ax1.legend(loc="upper right", fontsize=8, ncol=2)
    ax1.grid(alpha=0.3)
    for key, label in (
        ("purity", "purity"),
        ("vn_entropy", "S"),
        ("coherence", "C"),
        ("thermalization", "T"),
    ):
        ax2.plot(ks, _series(rows, key), label=label)
    ax2.set_xlabel("tuning parameter k")
    ax2.set_ylabel("coherence measures")
    ax2.legend(loc="upper right", fontsize=8)
    ax2.grid(alpha=0.3)
    _finish(fig, path)


def render_scan_eps(rows, path, fidelity_key):
    eps = _series(rows, "eps")
    fig, ax = plt.subplots(figsize=(7, 5))
    for key in ("p0", "p1", "p2", "p3"):
        ax.plot(eps, _series(rows, key), label=key.replace("p", "P"))
    ax.plot(eps, _series(rows, fidelity_key), "k--", label=fidelity_key.upper())
    ax.set_xlabel("driving strength eps")
    ax.set_ylabel("probability")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    _finish(fig, path)


def render_evolve(rows, path, fidelity_key):
    ts = _series(rows, "t")
    fig, ax = plt.subplots(figsize=(7, 5))
    for key in ("p0", "p1", "p2", "p3", "p4"):
        ax.plot(ts, _series(rows, key), label=key.replace("p", "P"))
    ax.plot(ts, _series(rows, fidelity_key), "k--", label=fidelity_key.upper())
    ax.set_xlabel("time (1/gamma)")
    ax.set_ylabel("probability")
    ax.legend(fontsize=8, ncol=2)
    ax.grid(alpha=0.3)
    _finish(fig, path)


def render_wigner(grid, path):
    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.pcolormesh(grid.xs, grid.ps, grid.values.T, shading="auto", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="W(x + ip)")
    ax.set_xlabel("x")
    ax.set_ylabel("p")
    ax.set_aspect("equal")
    _finish(fig, path)


def render_spectrum(omegas, spectra, path):
    fig, ax = plt.subplots(figsize=(7, 5))
    for theta, values in spectra:
        ax.plot(omegas, values, label=f"theta = {theta:g}")
    ax.axhline(0.0, color="k", lw=0.5)
    ax.set_xlabel("omega (gamma)")
    ax.set_ylabel("S_theta(omega)")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    _finish(fig, path)


def render_compare(rows, path):
    names = [row["check"] for row in rows]
    measured = _series(rows, "measured")
    bounds = _series(rows, "bound")
    y = np.arange(len(names))
    fig, ax = plt.subplots(figsize=(7, 0.6 * len(names) + 2))
    ax.barh(y - 0.15, measured, height=0.3, label="measured")
    ax.barh(y + 0.15, bounds, height=0.3, label="bound")
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xscale("log")
    ax.set_xlabel("residual")
    ax.legend(fontsize=8)
    _finish(fig, path)
