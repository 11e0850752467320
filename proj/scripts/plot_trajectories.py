#!/usr/bin/env python3
# Copyright 2026 The se2track Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Renders trajectory and error figures from a se2track CSV log.

Usage:
    plot_trajectories.py run.csv [-o figure.png]

Left panel: x-y paths per robot with heading ticks every half second.
Right panel: pose error norm over time per follower.
"""

import argparse
import csv
import math
import sys
from collections import defaultdict


def load(path):
    nodes = defaultdict(lambda: defaultdict(list))
    with open(path, newline="") as f:
        for row in csv.DictReader(f):
            node = int(row["node"])
            for key in ("t", "theta", "x", "y", "err_pose"):
                nodes[node][key].append(float(row[key]))
    return dict(sorted(nodes.items()))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv", help="trajectory log written by 'se2track run'")
    parser.add_argument("-o", "--out", default=None,
                        help="output image (default: <csv>.png)")
    parser.add_argument("--tick-every", type=float, default=0.5,
                        help="seconds between heading ticks")
    args = parser.parse_args()

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required to render figures")

    nodes = load(args.csv)
    if not nodes:
        sys.exit("no rows in " + args.csv)

    fig, (ax_path, ax_err) = plt.subplots(1, 2, figsize=(12, 5))

    for node, data in nodes.items():
        label = "leader" if node == 0 else f"robot {node}"
        style = "-" if node == 0 else "--"
        ax_path.plot(data["x"], data["y"], style, linewidth=1.2, label=label)

        t, x, y, theta = data["t"], data["x"], data["y"], data["theta"]
        span = max(max(x) - min(x), max(y) - min(y), 1.0)
        tick = 0.02 * span
        next_tick = 0.0
        for i in range(len(t)):
            if t[i] + 1e-12 >= next_tick:
                ax_path.plot([x[i], x[i] + tick * math.cos(theta[i])],
                             [y[i], y[i] + tick * math.sin(theta[i])],
                             "-", color="gray", linewidth=0.6)
                next_tick += args.tick_every

        if node != 0:
            ax_err.plot(t, data["err_pose"], label=label)

    ax_path.set_xlabel("x [m]")
    ax_path.set_ylabel("y [m]")
    ax_path.set_title("trajectories")
    ax_path.axis("equal")
    ax_path.legend(fontsize=8)

    ax_err.set_xlabel("t [s]")
    ax_err.set_ylabel("pose error norm")
    ax_err.set_title("tracking error")
    ax_err.set_yscale("log")
    ax_err.legend(fontsize=8)

    out = args.out or args.csv.rsplit(".", 1)[0] + ".png"
    fig.tight_layout()
    fig.savefig(out, dpi=140)
    print("wrote", out)


if __name__ == "__main__":
    main()
