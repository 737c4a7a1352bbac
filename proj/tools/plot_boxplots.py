#!/usr/bin/env python3
# Copyright 2026 The ratlab Authors
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

"""Render boxplot_<target>_<key>.csv files in a directory as PNGs."""

import argparse
import csv
import pathlib
import sys
from collections import OrderedDict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def load(path):
    groups = OrderedDict()
    keys = {}
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            name = row["group"]
            groups.setdefault(name, []).append(float(row["run_best"]))
            keys[name] = row["key_value"]
    return groups, keys


def render(path):
    groups, keys = load(path)
    if not groups:
        return None
    labels = [g if keys[g] == "" else f"{g}\n({keys[g]})" for g in groups]
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(groups)), 4.5))
    box = ax.boxplot(list(groups.values()), patch_artist=True, medianprops={"color": "black"})
    # first group is the forward-anneal control
    for i, patch in enumerate(box["boxes"]):
        patch.set_facecolor("tab:blue" if i == 0 else "tab:orange")
    ax.set_xticks(range(1, len(labels) + 1), labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("best energy per run")
    ax.set_title(path.stem)
    fig.tight_layout()
    out = path.with_suffix(".png")
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def main(argv):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("dir", type=pathlib.Path)
    args = parser.parse_args(argv)
    files = sorted(args.dir.glob("boxplot_*.csv"))
    if not files:
        print(f"no boxplot csv files in {args.dir}", file=sys.stderr)
        return 2
    for f in files:
        out = render(f)
        if out is not None:
            print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
