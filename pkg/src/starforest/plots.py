"""Figure rendering for benchmark runs."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_bench_figures(rows: list[dict], out_prefix: str | Path) -> list[Path]:
    """Render min-star-size and runtime figures next to the delimited output.

    `rows` are the bench table rows; files are written as
    <prefix>_minstar.png and <prefix>_runtime.png.
    """
    prefix = Path(out_prefix)
    written: list[Path] = []
    if not rows:
        return written

    sizes = sorted({r["size"] for r in rows})

    def series(key: str) -> tuple[list[float], list[float]]:
        means = []
        for s in sizes:
            vals = [float(r[key]) for r in rows if r["size"] == s]
            means.append(sum(vals) / len(vals))
        return [float(s) for s in sizes], means

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter([r["size"] for r in rows], [r["min_star"] for r in rows],
               s=12, alpha=0.4, label="per seed")
    xs, ys = series("min_star")
    ax.plot(xs, ys, "o-", color="C1", label="mean")
    ax.set_xlabel("instance size")
    ax.set_ylabel("min star size")
    ax.legend()
    fig.tight_layout()
    path = prefix.with_name(prefix.name + "_minstar.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter([r["size"] for r in rows], [r["elapsed_ms"] for r in rows],
               s=12, alpha=0.4, label="per seed")
    xs, ys = series("elapsed_ms")
    ax.plot(xs, ys, "o-", color="C1", label="mean")
    ax.set_xlabel("instance size")
    ax.set_ylabel("solve time (ms)")
    ax.legend()
    fig.tight_layout()
    path = prefix.with_name(prefix.name + "_runtime.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    return written
