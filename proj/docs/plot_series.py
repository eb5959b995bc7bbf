#!/usr/bin/env python3
"""Plot the series CSVs produced by `effvel run`.

Usage: python3 docs/plot_series.py <run-dir> [out.png]
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

run_dir = Path(sys.argv[1])
out = sys.argv[2] if len(sys.argv) > 2 else "series.png"

series = sorted(run_dir.glob("series_*.csv"))
fig, axes = plt.subplots(len(series), 1, figsize=(7, 2.2 * len(series)), sharex=True)
if len(series) == 1:
    axes = [axes]
for ax, path in zip(axes, series):
    df = pd.read_csv(path)
    for col in df.columns[1:]:
        ax.plot(df["t"], df[col], label=col)
    ax.set_title(path.stem, fontsize=9)
    ax.legend(fontsize=7)
axes[-1].set_xlabel("t")
fig.tight_layout()
fig.savefig(out, dpi=150)
print(f"wrote {out}")
