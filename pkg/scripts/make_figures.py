#!/usr/bin/env python3
"""Render the concurrence curves and sudden-death surfaces from the CSV data.

Generates the CSVs first if they are missing, then plots:
  figures/concurrence_curves.png  -- 2x3 panel grid, concurrence vs P
  figures/death_surfaces.png      -- boundary alpha over the (r, P) plane
"""

import argparse
import csv
import subprocess
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

PANELS = [("theta1", "r0", "r = 0"), ("theta1", "rpi6", "r = pi/6"), ("theta1", "rpi4", "r = pi/4"),
          ("theta2", "r0", "r = 0"), ("theta2", "rpi6", "r = pi/6"), ("theta2", "rpi4", "r = pi/4")]


def ensure_data(data_dir: Path) -> None:
    if not (data_dir / "fig1_theta1_r0.csv").exists():
        subprocess.run([sys.executable, "-m", "qesd", "fig1", "--out", str(data_dir)], check=True)
    if not (data_dir / "fig2_theta1.csv").exists():
        subprocess.run([sys.executable, "-m", "qesd", "fig2", "--out", str(data_dir)], check=True)


def plot_curves(data_dir: Path, out: Path) -> None:
    fig, axes = plt.subplots(2, 3, figsize=(13, 7), sharex=True, sharey=True)
    for ax, (family, tag, title) in zip(axes.flat, PANELS):
        with open(data_dir / f"fig1_{family}_{tag}.csv") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            data = np.array([[float(x) for x in row] for row in reader])
        for k, name in enumerate(header[1:], start=1):
            alpha = float(name.removeprefix("c_alpha_"))
            ax.plot(data[:, 0], data[:, k], label=f"alpha = {alpha:.3g}")
        ax.set_title(f"{family}, {title}")
        ax.grid(alpha=0.3)
    axes[1, 1].set_xlabel("decay probability P")
    axes[0, 0].set_ylabel("concurrence")
    axes[1, 0].set_ylabel("concurrence")
    axes[0, 2].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


def plot_surfaces(data_dir: Path, out: Path) -> None:
    fig, axes = plt.subplots(1, 2, figsize=(12, 5), subplot_kw={"projection": "3d"})
    for ax, family in zip(axes, ("theta1", "theta2")):
        with open(data_dir / f"fig2_{family}.csv") as fh:
            reader = csv.reader(fh)
            next(reader)
            data = np.array([[float(x) for x in row] for row in reader])
        n = int(np.sqrt(len(data)))
        r = data[:, 0].reshape(n, n)
        p = data[:, 1].reshape(n, n)
        a = data[:, 2].reshape(n, n)
        ax.plot_surface(r, p, a, cmap="viridis", linewidth=0)
        ax.set_xlabel("r")
        ax.set_ylabel("P")
        ax.set_zlabel("boundary alpha")
        ax.set_title(family)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default="figure_data", help="CSV directory")
    parser.add_argument("--out", default="figures", help="PNG output directory")
    args = parser.parse_args()
    data_dir = Path(args.data)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    ensure_data(data_dir)
    plot_curves(data_dir, out_dir / "concurrence_curves.png")
    plot_surfaces(data_dir, out_dir / "death_surfaces.png")
    return 0


if __name__ == "__main__":
    sys.exit(main())
