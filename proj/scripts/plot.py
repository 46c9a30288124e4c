# Copyright 2026 The onc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Plots CSV written by `onc region` and `onc sweep`.

    python3 scripts/plot.py region curves.csv region.png
    python3 scripts/plot.py sweep sweep.csv sweep.png
"""

import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

STYLE = {
    "orbit_boundary": dict(color="black", lw=1.5),
    "positivity_boundary": dict(color="tab:blue", lw=1.5),
    "inner_circle": dict(color="gray", lw=1, ls="--"),
    "outer_circle": dict(color="gray", lw=1, ls="--"),
}


def region(src, dst):
    df = pd.read_csv(src)
    fig, ax = plt.subplots(figsize=(5, 4))
    for curve, rows in df.groupby("curve_id", sort=False):
        ax.plot(rows.x, rows.y, label=curve, **STYLE.get(curve, {}))
    ax.set_aspect("equal")
    ax.set_xlabel("x = r cos(phi)")
    ax.set_ylabel("y = r sin(phi)")
    ax.legend(fontsize=7)
    fig.savefig(dst, dpi=150, bbox_inches="tight")


def sweep(src, dst):
    df = pd.read_csv(src)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(df.zeta, df.q_closed, label="closed form")
    ax.plot(df.zeta, df.q_quadrature, ls=":", label="quadrature")
    ax.set_xlabel("zeta")
    ax.set_ylabel("Q_3")
    ax.legend()
    fig.savefig(dst, dpi=150, bbox_inches="tight")


if __name__ == "__main__":
    if len(sys.argv) != 4 or sys.argv[1] not in ("region", "sweep"):
        sys.exit(__doc__)
    {"region": region, "sweep": sweep}[sys.argv[1]](sys.argv[2], sys.argv[3])
