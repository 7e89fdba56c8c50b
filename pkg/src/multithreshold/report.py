"""Tabular and graphical summaries of the closed-form threshold numbers.

The table lists, for each n, the threshold numbers of the four supported
families side by side.  The figure draws the same data as staircases, which
makes the boundary jumps visible: each family sits at a constant value for a
stretch of n and steps up by one exactly when n crosses a boundary count.
"""

from __future__ import annotations

import io
from typing import Sequence, TextIO

from .theta import theta_nk3, theta_knx3, theta_nk4, theta_knx4

TABLE_COLUMNS = ("n", "nk3", "knx3", "nk4", "knx4")

# Families indexed by column name: (theta function, smallest valid n).
_FAMILY_COLUMNS = (
    ("nk3", theta_nk3, 1),
    ("knx3", theta_knx3, 2),
    ("nk4", theta_nk4, 1),
    ("knx4", theta_knx4, 2),
)


def theta_table_rows(n_max: int) -> list[tuple[str, ...]]:
    """Rows of the threshold-number table for n = 1 .. n_max.

    Every entry is a string; families that are undefined for a given n
    (the multipartite ones need at least two parts) get an empty cell.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows = []
    for n in range(1, n_max + 1):
        row = [str(n)]
        for _, theta, n_min in _FAMILY_COLUMNS:
            row.append(str(theta(n).theta) if n >= n_min else "")
        rows.append(tuple(row))
    return rows


def write_theta_table(out: TextIO, n_max: int) -> None:
    """Write the table as tab-separated values with a header row."""
    out.write("\t".join(TABLE_COLUMNS) + "\n")
    for row in theta_table_rows(n_max):
        out.write("\t".join(row) + "\n")


def theta_table_text(n_max: int) -> str:
    buf = io.StringIO()
    write_theta_table(buf, n_max)
    return buf.getvalue()


def render_theta_figure(path: str, n_max: int, families: Sequence[str] | None = None) -> None:
    """Render the threshold-number staircases to an image file.

    `families` restricts the plot to a subset of the table columns; the
    default draws all four.  The file format follows the path suffix.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    wanted = set(families) if families is not None else {name for name, _, _ in _FAMILY_COLUMNS}
    unknown = wanted - {name for name, _, _ in _FAMILY_COLUMNS}
    if unknown:
        raise ValueError("unknown families: %s" % ", ".join(sorted(unknown)))

    labels = {
        "nk3": "disjoint triangles",
        "knx3": "multipartite, parts of 3",
        "nk4": "disjoint 4-cliques",
        "knx4": "multipartite, parts of 4",
    }
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, theta, n_min in _FAMILY_COLUMNS:
        if name not in wanted:
            continue
        xs = list(range(n_min, n_max + 1))
        if not xs:
            continue
        ys = [theta(n).theta for n in xs]
        ax.step(xs, ys, where="post", label=labels[name])
    ax.set_xlabel("n")
    ax.set_ylabel("threshold number")
    ax.legend(loc="upper left", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
