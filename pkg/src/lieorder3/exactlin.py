"""Exact rational arithmetic and deterministic linear algebra.

Every scalar in the library is a :class:`fractions.Fraction` (arbitrary
precision, always in lowest terms, positive denominator).  On top of that
this module provides dense rational matrices with rank and right-null-space
computation.  Null spaces are returned in reduced echelon form, so for a
given matrix the answer is canonical: two runs (or two assembly orders of
the same row set) produce byte-for-byte identical bases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


def rational_from_string(text: str) -> Fraction:
    """Parse ``"num"`` or ``"num/den"`` with den > 0; anything else is rejected."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def rational_to_string(value: Fraction) -> str:
    """Inverse of :func:`rational_from_string` (``str`` of Fraction already is)."""
    return str(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"expected {self.cols} entries per row")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "RationalMatrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n_rows = len(data)
        n_cols = len(data[0]) if data else 0
        return cls(n_rows, n_cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    def row_dicts(self) -> list[dict[int, Fraction]]:
        """Rows as sparse column->value dicts (zeros dropped)."""
        return [{c: v for c, v in enumerate(row) if v} for row in self.entries]

    def matvec(self, vector: Sequence[Fraction]) -> list[Fraction]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((row[c] * vector[c] for c in range(self.cols)), ZERO)
                for row in self.entries]


def reduced_pivot_rows(rows: Iterable[dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form of a sparse row collection.

    Returns a map pivot-column -> row, each row normalized to a unit pivot
    and fully reduced against every other pivot row.  The result is the
    RREF of the span, hence independent of input order.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for incoming in rows:
        row = dict(incoming)
        while row:
            col = min(row)
            pivot_row = pivots.get(col)
            if pivot_row is None:
                lead = row.pop(col)
                if lead != 1:
                    row = {c: v / lead for c, v in row.items()}
                row[col] = ONE
                for other in pivots.values():
                    factor = other.get(col)
                    if factor:
                        del other[col]
                        for c, v in row.items():
                            if c == col:
                                continue
                            nv = other.get(c, ZERO) - factor * v
                            if nv:
                                other[c] = nv
                            else:
                                other.pop(c, None)
                pivots[col] = row
                break
            factor = row.pop(col)
            for c, v in pivot_row.items():
                if c == col:
                    continue
                nv = row.get(c, ZERO) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return pivots


def rank_of_rows(rows: Iterable[dict[int, Fraction]]) -> int:
    return len(reduced_pivot_rows(rows))


def kernel_basis_of_rows(rows: Iterable[dict[int, Fraction]], cols: int) -> list[list[Fraction]]:
    """Reduced-echelon basis of the right null space of a sparse system.

    Basis vectors are indexed by the free columns in ascending order; each
    vector carries 1 in its free column and the negated reduced-echelon
    coefficients in the pivot columns.
    """
    pivots = reduced_pivot_rows(rows)
    if any(col >= cols or col < 0 for col in pivots):
        raise ValueError("row entry outside the declared column range")
    basis: list[list[Fraction]] = []
    pivot_cols = sorted(pivots)
    for free in range(cols):
        if free in pivots:
            continue
        vector = [ZERO] * cols
        vector[free] = ONE
        for col in pivot_cols:
            coeff = pivots[col].get(free)
            if coeff:
                vector[col] = -coeff
        basis.append(vector)
    return basis


def rank(matrix: RationalMatrix) -> int:
    """Rank over the rationals; rank + kernel dimension = cols."""
    return rank_of_rows(matrix.row_dicts())


def kernel_basis(matrix: RationalMatrix) -> list[list[Fraction]]:
    """Basis of the right null space in reduced echelon form.

    Deterministic for identical input; ``matrix @ v == 0`` exactly for every
    returned ``v``; an empty list means the matrix has full column rank.
    """
    return kernel_basis_of_rows(matrix.row_dicts(), matrix.cols)
