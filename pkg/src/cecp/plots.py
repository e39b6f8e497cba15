"""Figure rendering for the report bundle.

Each function draws one figure straight to a file through the Agg canvas,
without touching pyplot or any global matplotlib state, so rendering is
deterministic and safe inside library code.
"""

from __future__ import annotations

from matplotlib.figure import Figure

from .bounds import BoundsCurve
from .windows import Trajectory

_COLORS = (
    "tab:blue",
    "tab:orange",
    "tab:green",
    "tab:red",
    "tab:purple",
    "tab:brown",
    "tab:pink",
    "tab:gray",
    "tab:olive",
    "tab:cyan",
)


def _color(i: int) -> str:
    return _COLORS[i % len(_COLORS)]


def _new_axes():
    fig = Figure(figsize=(6.4, 4.8), dpi=150)
    return fig, fig.subplots()


def _draw_envelopes(ax, curve: BoundsCurve) -> None:
    ax.plot(curve.h, curve.c_max, "k-", lw=1.0, label="bounds")
    ax.plot(curve.h, curve.c_min, "k-", lw=1.0)


def _finish_plane(fig, ax, path) -> None:
    ax.set_xlabel("normalized permutation entropy $H$")
    ax.set_ylabel("statistical complexity $C$")
    ax.set_xlim(0.0, 1.0)
    ax.legend(fontsize=8)
    fig.savefig(path, format="png")


def plot_cecp_plane(path, curve: BoundsCurve, trajectories: list[Trajectory]) -> None:
    """All series scattered on the causality plane between the envelopes."""
    fig, ax = _new_axes()
    _draw_envelopes(ax, curve)
    for i, traj in enumerate(trajectories):
        ax.plot(
            traj.entropies, traj.complexities, "o",
            ms=3, color=_color(i), label=traj.series_name,
        )
    _finish_plane(fig, ax, path)


def plot_surrogate_plane(
    path, curve: BoundsCurve, original: Trajectory, surrogates: dict[int, Trajectory]
) -> None:
    """Original trajectory against its shuffled surrogates."""
    fig, ax = _new_axes()
    _draw_envelopes(ax, curve)
    ax.plot(
        original.entropies, original.complexities, "o",
        ms=3, color="tab:blue", label=original.series_name,
    )
    for i, (seed, traj) in enumerate(sorted(surrogates.items())):
        ax.plot(
            traj.entropies, traj.complexities, "^",
            ms=3, color=_color(i + 1), label=f"shuffled (seed {seed})",
        )
    _finish_plane(fig, ax, path)


def plot_scheme(path, curve: BoundsCurve, thinned: Trajectory) -> None:
    """Movement scheme: thinned trajectory with windows linked and numbered."""
    fig, ax = _new_axes()
    _draw_envelopes(ax, curve)
    h, c = thinned.entropies, thinned.complexities
    ax.plot(h, c, "-o", ms=4, lw=0.8, color="tab:blue", label=thinned.series_name)
    for r, hi, ci in zip(thinned.results, h, c):
        ax.annotate(str(r.index), (hi, ci), fontsize=6,
                    textcoords="offset points", xytext=(3, 3))
    _finish_plane(fig, ax, path)


def plot_entropy_evolution(path, trajectories: list[Trajectory]) -> None:
    """Per-window normalized entropy against window index for every series."""
    fig, ax = _new_axes()
    for i, traj in enumerate(trajectories):
        indices = [r.index for r in traj.results]
        ax.plot(indices, traj.entropies, "-", lw=1.2,
                color=_color(i), label=traj.series_name)
    ax.set_xlabel("window index")
    ax.set_ylabel("normalized permutation entropy $H$")
    ax.set_ylim(0.0, 1.05)
    ax.legend(fontsize=8)
    fig.savefig(path, format="png")
