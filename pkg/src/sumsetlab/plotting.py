"""Figures written next to CLI reports. Headless backend only."""

from math import log10

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_STYLE = {
    "figure.figsize": (5.5, 4.0),
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.dpi": 120,
}


def _save(fig, path):
    # drop the Software/date metadata so reruns give identical bytes
    fig.savefig(path, metadata={"Software": None}, bbox_inches="tight")
    plt.close(fig)
    return path


def growth_figure(path, sizes, polynomial=None, onset=None, title=""):
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ns = list(range(1, len(sizes) + 1))
        ax.plot(ns, sizes, "o", ms=4, label="|NA| enumerated")
        if polynomial is not None:
            ax.plot(ns, [float(polynomial(n)) for n in ns], "-", lw=1, label="polynomial")
        if onset is not None:
            ax.axvline(onset, ls="--", c="grey", lw=0.8, label=f"onset {onset}")
        ax.set_xlabel("N")
        ax.set_ylabel("|NA|")
        ax.set_title(title)
        ax.legend(frameon=False)
        return _save(fig, path)


def sumset_figure(path, A, NA, removed=(), title=""):
    """Scatter of a planar (or one-dimensional) sumset; ``removed`` points drawn as crosses."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        dim = len(A[0]) if len(A) else 1

        def xy(pts):
            pts = list(pts)
            if dim == 1:
                return [p[0] for p in pts], [0] * len(pts)
            return [p[0] for p in pts], [p[1] for p in pts]

        ax.scatter(*xy(NA), s=10, label="NA")
        ax.scatter(*xy(A), s=30, marker="s", facecolors="none", edgecolors="k", label="A")
        if removed:
            ax.scatter(*xy(removed), s=20, marker="x", c="tab:red", label="exceptional")
        ax.set_aspect("equal", adjustable="datalim")
        ax.set_title(title)
        ax.legend(frameon=False, fontsize=7)
        return _save(fig, path)


def verdict_figure(path, verdicts, title=""):
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ns = [v.N for v in verdicts]
        ax.bar(ns, [v.size for v in verdicts], color=["tab:green" if v.equal else "tab:red"
                                                       for v in verdicts])
        ax.plot(ns, [v.rhs_size for v in verdicts], "k.", label="right-hand side size")
        ax.set_xlabel("N")
        ax.set_ylabel("|NA|")
        ax.set_title(title)
        ax.legend(frameon=False)
        return _save(fig, path)


def threshold_figure(path, rows, empirical=None, title=""):
    """Horizontal bars of log10 threshold values; inapplicable rows are skipped."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        rows = [r for r in rows if r.applicable and r.value > 0]
        names = [r.name for r in rows]
        logs = [log10(r.value) for r in rows]
        ax.barh(names, logs)
        if empirical:
            ax.axvline(log10(empirical), c="tab:red", ls="--", lw=0.8,
                       label=f"empirical {empirical}")
            ax.legend(frameon=False)
        ax.set_xlabel("log10(threshold)")
        ax.set_title(title)
        return _save(fig, path)


def speculate_figure(path, rows):
    """One marker per instance: empirical onsets against the normalized volume."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        vols = [r["nvol"] for r in rows]
        ax.plot(vols, [r["n_kh"] or 0 for r in rows], "o", ms=4, label="Khovanskii onset")
        ax.plot(vols, [r["n_str"] or 0 for r in rows], "x", ms=4, label="structure onset")
        top = max(vols + [1])
        ax.plot([0, top], [0, top], "k-", lw=0.6, label="normalized volume")
        ax.set_xlabel("normalized volume")
        ax.set_ylabel("onset")
        ax.legend(frameon=False)
        return _save(fig, path)


def bar_figure(path, labels, values, xlabel="", title=""):
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.bar([str(x) for x in labels], values)
        ax.set_xlabel(xlabel)
        ax.set_title(title)
        return _save(fig, path)
