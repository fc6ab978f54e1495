"""Exact rank and span membership over radical scalars.

Incremental reduced row echelon form with pivot normalization through the
exact inverse.  Matrices are flattened row-major into vectors of length
total**2 so graded components can be treated as subspaces of the full
matrix space.
"""

from __future__ import annotations

from typing import Sequence

from .radicals import RadElement
from .supermatrix import SuperMatrix

__all__ = ["RadRowEchelon", "matrix_row", "rank_of_rows", "rank_of_matrices"]


class RadRowEchelon:
    """Grows a reduced row basis; insert returns whether the rank increased."""

    def __init__(self, width: int) -> None:
        if width < 1:
            raise ValueError("width must be positive")
        self.width = width
        self._rows: list[tuple[int, list[RadElement]]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduced(self, row: Sequence[RadElement]) -> list[RadElement]:
        if len(row) != self.width:
            raise ValueError(f"row length {len(row)} does not match width {self.width}")
        out = list(row)
        for pivot_col, basis_row in self._rows:
            c = out[pivot_col]
            if c:
                out = [x - c * y for x, y in zip(out, basis_row)]
        return out

    def insert(self, row: Sequence[RadElement]) -> bool:
        reduced = self._reduced(row)
        pivot_col = next((k for k, v in enumerate(reduced) if v), None)
        if pivot_col is None:
            return False
        inv = reduced[pivot_col].inverse()
        normalized = [v * inv for v in reduced]
        # keep the stored basis mutually reduced so later residuals are canonical
        for idx, (pc, existing) in enumerate(self._rows):
            c = existing[pivot_col]
            if c:
                self._rows[idx] = (pc, [x - c * y for x, y in zip(existing, normalized)])
        self._rows.append((pivot_col, normalized))
        self._rows.sort(key=lambda item: item[0])
        return True

    def contains(self, row: Sequence[RadElement]) -> bool:
        return not any(self._reduced(row))


def matrix_row(mat: SuperMatrix) -> list[RadElement]:
    """Flatten a matrix row-major into a coordinate vector."""
    size = mat.dim.total
    zero = RadElement.zero()
    out = [zero] * (size * size)
    for (i, j), value in mat.entries.items():
        out[(i - 1) * size + (j - 1)] = value
    return out


def rank_of_rows(rows: Sequence[Sequence[RadElement]], width: int) -> int:
    ech = RadRowEchelon(width)
    for row in rows:
        ech.insert(row)
    return ech.rank


def rank_of_matrices(mats: Sequence[SuperMatrix]) -> int:
    if not mats:
        return 0
    width = mats[0].dim.total ** 2
    return rank_of_rows([matrix_row(m) for m in mats], width)
