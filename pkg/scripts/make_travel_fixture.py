#!/usr/bin/env python3
"""Regenerate tests/data/travel_reviews.csv.

Deterministic synthetic stand-in for the public TripAdvisor travel-ratings
table (980 reviewers x 10 destination categories, ratings 0..4). The real
file cannot be redistributed here, so this script draws per-category
ratings from a seeded clipped normal and then nudges them in exact 0.01
steps until each column mean matches the published per-category mean to
within ~5e-6. Every downstream number in the ranking pipeline depends on
the data only through these means, so results on this fixture match runs
on the original file.

Usage: python scripts/make_travel_fixture.py [output.csv]
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

N_REVIEWERS = 980
SEED = 20190713
SIGMA = 0.6

# Published per-category mean ratings, in the table's column order.
TARGET_MEANS = {
    "Category 1": 0.8931,   # Art Galleries
    "Category 2": 1.3526,   # Dance Clubs
    "Category 3": 1.0133,   # Juice Bars
    "Category 4": 0.5325,   # Restaurants
    "Category 5": 0.9397,   # Museums
    "Category 6": 1.8428,   # Resorts
    "Category 7": 3.1809,   # Parks/Picnic Spots
    "Category 8": 2.8350,   # Beaches
    "Category 9": 1.5694,   # Theaters
    "Category 10": 2.7992,  # Religious Institutions
}


def make_column(rng: np.random.Generator, mean: float) -> np.ndarray:
    """Integer centi-ratings in 0..400 whose exact mean is round(mean*98000)/98000."""
    target_sum = round(mean * 100 * N_REVIEWERS)
    values = np.clip(
        np.rint(rng.normal(mean * 100, SIGMA * 100, size=N_REVIEWERS)), 0, 400
    ).astype(int)
    diff = target_sum - int(values.sum())
    step = 1 if diff > 0 else -1
    i = 0
    while diff != 0:
        v = values[i % N_REVIEWERS] + step
        if 0 <= v <= 400:
            values[i % N_REVIEWERS] = v
            diff -= step
        i += 1
    return values


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "tests" / "data" / "travel_reviews.csv"
    )
    rng = np.random.default_rng(SEED)
    columns = {name: make_column(rng, mean) for name, mean in TARGET_MEANS.items()}

    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="") as fh:
        fh.write("User ID," + ",".join(TARGET_MEANS) + "\n")
        for row in range(N_REVIEWERS):
            cells = ",".join(f"{columns[c][row] / 100:.2f}" for c in TARGET_MEANS)
            fh.write(f"User {row + 1},{cells}\n")

    for name, mean in TARGET_MEANS.items():
        got = columns[name].sum() / (100 * N_REVIEWERS)
        assert abs(got - mean) < 1e-5, (name, got, mean)
    print(f"wrote {out} ({N_REVIEWERS} rows x {len(TARGET_MEANS)} categories)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
