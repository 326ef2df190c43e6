"""Figure rendering for projected curves and density grids.

Optional reporting layer: the CSV/PLY/JSON outputs are the canonical
artifacts, these helpers render quick-look figures next to them.
Matplotlib is imported lazily so the rest of the package never needs it.
"""

from __future__ import annotations

import numpy as np


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_projection_figure(points, path, title: str | None = None) -> None:
    """Render a projected curve as a 3-D scatter colored by the 4th coordinate."""
    plt = _pyplot()
    ys = np.array([[p.y1, p.y2, p.y3] for p in points])
    cs = np.array([p.x4_color for p in points])
    fig = plt.figure(figsize=(7, 6))
    ax = fig.add_subplot(projection="3d")
    sc = ax.scatter(ys[:, 0], ys[:, 1], ys[:, 2], c=cs, cmap="viridis",
                    s=2, vmin=-1.0, vmax=1.0)
    fig.colorbar(sc, ax=ax, shrink=0.7, label="4th ambient coordinate")
    ax.set_xlabel("y1")
    ax.set_ylabel("y2")
    ax.set_zlabel("y3")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_density_figure(report, path, title: str | None = None) -> None:
    """Render the occupied-cell grid of a density report."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5.5, 5))
    extent = (0.0, 2.0 * np.pi, 0.0, 2.0 * np.pi)
    ax.imshow(report.occupied.T, origin="lower", extent=extent,
              cmap="Greys", vmin=0, vmax=1, interpolation="nearest")
    ax.set_xlabel("slow angle")
    ax.set_ylabel("fast angle")
    ax.set_title(
        title
        or f"occupancy {report.occupancy:.3f}, largest gap {report.largest_gap:.3f} rad"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
