"""Render report figures to files.

Grid scans over two parameters become categorical heatmaps; other
per-point checks become status strips; Hilbert-series checks become bar
charts; a multi-check document gets a summary bar.  Everything uses the
Agg backend and writes PNG files, returning the written paths.
"""

from __future__ import annotations

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

STATUS_COLORS = {"pass": "#2a9d3a", "fail": "#d62728", "skipped": "#e0a800",
                 "error": "#7f3fbf"}


def _point_entries(details: dict):
    pts = details.get("points")
    if isinstance(pts, list) and pts and isinstance(pts[0], dict) and "point" in pts[0]:
        return pts
    return None


def _fig_pair_heatmap(check: dict, path: str):
    entries = _point_entries(check["details"])
    xs = sorted({e["point"][0] for e in entries})
    ys = sorted({e["point"][1] for e in entries})
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    grid = np.full((len(ys), len(xs)), np.nan)
    for e in entries:
        grid[yi[e["point"][1]], xi[e["point"][0]]] = 1.0 if e.get("ok") else 0.0
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(xs)), max(3.5, 0.5 * len(ys))))
    ax.imshow(grid, origin="lower", cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_xticks(range(len(xs)), [str(v) for v in xs], rotation=45, fontsize=7)
    ax.set_yticks(range(len(ys)), [str(v) for v in ys], fontsize=7)
    ax.set_xlabel("alpha1")
    ax.set_ylabel("alpha2")
    ax.set_title(f"{check['check_id']}: agreement per grid point")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _fig_strip(check: dict, path: str):
    details = check["details"]
    entries = _point_entries(details) or []
    skipped = details.get("skipped_points", [])
    labels, colors = [], []
    for e in entries:
        labels.append(",".join(str(v) for v in e["point"]))
        colors.append(STATUS_COLORS["pass" if e.get("ok") else "fail"])
    for s in skipped:
        labels.append(",".join(str(v) for v in s["point"]))
        colors.append(STATUS_COLORS["skipped"])
    if not labels:
        return False
    fig, ax = plt.subplots(figsize=(max(5, 0.14 * len(labels)), 2.6))
    ax.bar(range(len(labels)), [1] * len(labels), color=colors, width=0.9)
    ax.set_yticks([])
    step = max(1, len(labels) // 40)
    ax.set_xticks(range(0, len(labels), step),
                  [labels[i] for i in range(0, len(labels), step)],
                  rotation=90, fontsize=5)
    ax.set_title(f"{check['check_id']}: per-point status "
                 f"({len(entries)} checked, {len(skipped)} skipped)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return True


def _fig_hilbert(check: dict, path: str):
    series = check["details"].get("hilbert")
    if not series:
        return False
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(range(len(series)), series, color="#3465a4")
    for i, v in enumerate(series):
        ax.text(i, v + 0.15, str(v), ha="center", fontsize=8)
    ax.set_xlabel("degree")
    ax.set_ylabel("normal words")
    ax.set_title(f"{check['check_id']}: graded dimensions")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return True


def _fig_summary(document: dict, path: str):
    checks = document["checks"]
    fig, ax = plt.subplots(figsize=(7, 0.34 * len(checks) + 1.2))
    names = [c["check_id"] for c in checks]
    colors = [STATUS_COLORS[c["status"]] for c in checks]
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)), names, fontsize=8)
    ax.set_xticks([])
    ax.invert_yaxis()
    s = document["summary"]
    ax.set_title(f"ncforge checks: {s['pass']} pass, {s['fail']} fail, "
                 f"{s['skipped']} skipped, {s['error']} error")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_document(document: dict, outdir: str) -> list[str]:
    """Write one figure per renderable check plus a summary; return paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    for check in document["checks"]:
        name = check["check_id"].replace("/", "_")
        path = os.path.join(outdir, f"{name}.png")
        entries = _point_entries(check["details"])
        if check["details"].get("hilbert"):
            if _fig_hilbert(check, path):
                written.append(path)
        elif entries and all(len(e["point"]) == 2 for e in entries) \
                and not check["details"].get("skipped_points"):
            _fig_pair_heatmap(check, path)
            written.append(path)
        elif entries or check["details"].get("skipped_points"):
            if _fig_strip(check, path):
                written.append(path)
    if len(document["checks"]) > 1:
        path = os.path.join(outdir, "summary.png")
        _fig_summary(document, path)
        written.append(path)
    return written
