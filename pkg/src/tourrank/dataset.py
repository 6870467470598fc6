"""Review-matrix ingestion, rating categories, means, and SAW normalization."""

from __future__ import annotations

import csv
import re
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    DegenerateColumnWarning,
    InputError,
    ParseError,
    RatingRangeError,
    StructureError,
)

RATING_MIN = 0.0
RATING_MAX = 4.0

#: Display names substituted when a file carries generic "Category N" headers
#: for exactly these ten rating columns (the layout of the public travel
#: ratings table). A names config overrides them.
CANONICAL_CATEGORY_NAMES = (
    "Art Galleries",
    "Dance Clubs",
    "Juice Bars",
    "Restaurants",
    "Museums",
    "Resorts",
    "Parks/Picnic Spots",
    "Beaches",
    "Theaters",
    "Religious Institutions",
)

_GENERIC_HEADER = re.compile(r"^category\s*\d+$", re.IGNORECASE)


class RatingCategory(Enum):
    """Rating bands: {0}, (0,1], (1,2], (2,3], (3,4]."""

    TERRIBLE = "Terrible"
    POOR = "Poor"
    AVERAGE = "Average"
    VERY_GOOD = "Very Good"
    EXCELLENT = "Excellent"


def classify_rating(value: float) -> RatingCategory:
    """Map a rating in [0, 4] to its band.

    0 is Terrible; the remaining bands are the half-open intervals
    (0,1], (1,2], (2,3], (3,4].
    """
    if not np.isfinite(value) or value < RATING_MIN or value > RATING_MAX:
        raise RatingRangeError(f"rating {value!r} outside [{RATING_MIN}, {RATING_MAX}]")
    if value == 0:
        return RatingCategory.TERRIBLE
    if value <= 1:
        return RatingCategory.POOR
    if value <= 2:
        return RatingCategory.AVERAGE
    if value <= 3:
        return RatingCategory.VERY_GOOD
    return RatingCategory.EXCELLENT


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class ReviewMatrix:
    """Ratings with one row per alternative and one column per reviewer."""

    alternatives: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        names = tuple(self.alternatives)
        vals = _readonly(self.values)
        if vals.ndim != 2:
            raise InputError("values must be a 2-D matrix")
        n, r = vals.shape
        if n < 2:
            raise InputError(f"need at least 2 alternatives, got {n}")
        if r < 1:
            raise InputError("need at least 1 reviewer column")
        if len(names) != n:
            raise InputError(f"{len(names)} names for {n} rows")
        if any(not name for name in names):
            raise InputError("alternative names must be non-empty")
        if len(set(names)) != len(names):
            raise InputError("alternative names must be unique")
        if not np.all(np.isfinite(vals)):
            raise InputError("ratings must be finite")
        if vals.min() < RATING_MIN or vals.max() > RATING_MAX:
            raise RatingRangeError(
                f"ratings must lie in [{RATING_MIN}, {RATING_MAX}]"
            )
        object.__setattr__(self, "alternatives", names)
        object.__setattr__(self, "values", vals)

    @property
    def n_alternatives(self) -> int:
        return self.values.shape[0]

    @property
    def n_reviewers(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class ScoreVector:
    """One non-negative score per alternative, in alternative order."""

    alternatives: tuple[str, ...]
    scores: np.ndarray

    def __post_init__(self):
        names = tuple(self.alternatives)
        scores = _readonly(self.scores)
        if scores.ndim != 1 or scores.shape[0] != len(names):
            raise InputError("scores must be 1-D with one entry per alternative")
        if not np.all(np.isfinite(scores)) or np.any(scores < 0):
            raise InputError("scores must be finite and non-negative")
        object.__setattr__(self, "alternatives", names)
        object.__setattr__(self, "scores", scores)


def load_reviews(
    source: Iterable[str],
    *,
    delimiter: str = ",",
    names: Mapping[int, str] | None = None,
) -> ReviewMatrix:
    """Parse delimiter-separated ratings into a ReviewMatrix.

    Expected layout: a header row, then one row per reviewer whose first
    field is a reviewer id (ignored) followed by numeric ratings in [0, 4],
    one column per alternative. The matrix is transposed on load so
    alternatives index rows.

    Alternative names come from the header; a file with exactly ten
    "Category N" headers gets :data:`CANONICAL_CATEGORY_NAMES` instead.
    ``names`` maps 1-based rating-column indices to replacement names and
    wins over both.

    Args:
        source: text stream or iterable of lines.
        delimiter: field separator, a single character.
        names: optional column-index -> display-name overrides.

    Raises:
        StructureError: header missing, fewer than 2 rating columns,
            ragged rows, or no data rows.
        ParseError: non-numeric cell, with its 1-based row/column.
        RatingRangeError: rating outside [0, 4].
    """
    reader = csv.reader(source, delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise StructureError("empty input: expected a header row") from None
    n_cols = len(header)
    if n_cols < 3:
        raise StructureError(
            "need a reviewer-id column plus at least 2 rating columns, "
            f"got {n_cols} column(s)"
        )

    rows: list[list[float]] = []
    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != n_cols:
            raise StructureError(
                f"row {row_no}: expected {n_cols} fields, got {len(row)}"
            )
        parsed = []
        for col_no, cell in enumerate(row[1:], start=2):
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(
                    f"not a number: {cell.strip()!r}", row=row_no, column=col_no
                ) from None
            if not np.isfinite(value):
                raise ParseError(
                    f"not a finite number: {cell.strip()!r}",
                    row=row_no,
                    column=col_no,
                )
            if value < RATING_MIN or value > RATING_MAX:
                raise RatingRangeError(
                    f"row {row_no}, column {col_no}: rating {value} "
                    f"outside [{RATING_MIN}, {RATING_MAX}]"
                )
            parsed.append(value)
        rows.append(parsed)

    if not rows:
        raise StructureError("no data rows after the header")

    values = np.asarray(rows, dtype=float).T
    return ReviewMatrix(_resolve_names(header[1:], names), values)


def _resolve_names(
    raw: list[str], overrides: Mapping[int, str] | None
) -> tuple[str, ...]:
    names = [h.strip() for h in raw]
    if len(names) == len(CANONICAL_CATEGORY_NAMES) and all(
        _GENERIC_HEADER.match(h) for h in names
    ):
        names = list(CANONICAL_CATEGORY_NAMES)
    if overrides:
        for index, name in overrides.items():
            if not 1 <= index <= len(names):
                raise InputError(
                    f"names config index {index} outside 1..{len(names)}"
                )
            names[index - 1] = name
    return tuple(names)


def category_means(m: ReviewMatrix) -> ScoreVector:
    """Per-alternative arithmetic mean rating across reviewers."""
    return ScoreVector(m.alternatives, m.values.mean(axis=1))


def normalize(m: np.ndarray) -> np.ndarray:
    """SAW-normalize: divide every column by its maximum.

    Accepts a matrix or a single vector (treated as one column). Columns
    whose maximum is 0 come back all-zero, with one
    :class:`DegenerateColumnWarning` naming them.
    """
    arr = np.asarray(m, dtype=float)
    if arr.size == 0:
        raise InputError("cannot normalize an empty matrix")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise InputError("entries must be finite and non-negative")
    is_vector = arr.ndim == 1
    cols = arr.reshape(-1, 1) if is_vector else arr
    if cols.ndim != 2:
        raise InputError("expected a vector or 2-D matrix")
    maxes = cols.max(axis=0)
    zero = maxes == 0
    out = cols / np.where(zero, 1.0, maxes)
    if zero.any():
        dead = ", ".join(str(i) for i in np.flatnonzero(zero))
        warnings.warn(
            f"all-zero column(s) {dead} normalized to zeros",
            DegenerateColumnWarning,
            stacklevel=2,
        )
    return out[:, 0] if is_vector else out
