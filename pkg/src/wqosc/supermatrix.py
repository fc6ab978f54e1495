"""Sparse exact matrices with a two-block Z2 grading.

Rows and columns are indexed 1..p+q; positions 1..p are even, the remaining
q positions odd.  A matrix is even when every nonzero entry connects equal
sides of the split, odd when every entry crosses it, and inhomogeneous
otherwise (the zero matrix is tagged even by convention).  The super-bracket
is the anticommutator when both operands are odd and the commutator
otherwise; it rejects inhomogeneous operands.

Matrices are immutable values: all operations return new instances and the
entry map is never mutated after construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .radicals import RadElement

__all__ = [
    "GradedDim",
    "Parity",
    "ParityError",
    "SuperMatrix",
    "unit_matrix",
    "mat_mul",
    "anticommutator",
    "commutator",
    "superbracket",
    "dagger",
]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    INHOMOGENEOUS = "inhomogeneous"


class ParityError(ValueError):
    """Raised when a super-bracket operand is inhomogeneous."""


@dataclass(frozen=True)
class GradedDim:
    """Block sizes (even|odd) of the graded space."""

    even: int
    odd: int

    def __post_init__(self) -> None:
        if self.even < 0 or self.odd < 0 or self.even + self.odd < 1:
            raise ValueError(
                f"graded dimension needs p, q >= 0 with p + q >= 1, got ({self.even}|{self.odd})"
            )

    @property
    def total(self) -> int:
        return self.even + self.odd

    def is_even_position(self, i: int) -> bool:
        return i <= self.even


def _as_rad(value) -> RadElement:
    if isinstance(value, RadElement):
        return value
    if isinstance(value, (int, Fraction)):
        return RadElement({1: value})
    raise TypeError(f"matrix entries must be exact scalars, got {type(value).__name__}")


def _parity_of(dim: GradedDim, entries: dict[tuple[int, int], RadElement]) -> Parity:
    if not entries:
        return Parity.EVEN
    saw_same = saw_cross = False
    for i, j in entries:
        if dim.is_even_position(i) == dim.is_even_position(j):
            saw_same = True
        else:
            saw_cross = True
    if saw_same and saw_cross:
        return Parity.INHOMOGENEOUS
    return Parity.ODD if saw_cross else Parity.EVEN


class SuperMatrix:
    """Sparse square matrix over exact radical scalars, 1-indexed."""

    __slots__ = ("dim", "entries", "parity")

    def __init__(self, dim: GradedDim, entries: Mapping[tuple[int, int], object] | None = None) -> None:
        size = dim.total
        stored: dict[tuple[int, int], RadElement] = {}
        if entries:
            for (i, j), raw in entries.items():
                if not (1 <= i <= size and 1 <= j <= size):
                    raise IndexError(f"entry position ({i},{j}) outside 1..{size}")
                value = _as_rad(raw)
                if value:
                    stored[(i, j)] = value
        self.dim = dim
        self.entries = stored
        self.parity = _parity_of(dim, stored)

    @classmethod
    def zero(cls, dim: GradedDim) -> SuperMatrix:
        return cls(dim, {})

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def degree(self) -> int:
        """Z2 degree: 0 for even, 1 for odd; inhomogeneous has none."""
        if self.parity is Parity.EVEN:
            return 0
        if self.parity is Parity.ODD:
            return 1
        raise ParityError("inhomogeneous matrix has no Z2 degree")

    def entry(self, i: int, j: int) -> RadElement:
        return self.entries.get((i, j), RadElement.zero())

    def _same_dim(self, other: SuperMatrix) -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: ({self.dim.even}|{self.dim.odd}) vs ({other.dim.even}|{other.dim.odd})")

    def __add__(self, other) -> SuperMatrix:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._same_dim(other)
        out = dict(self.entries)
        for pos, value in other.entries.items():
            acc = out.get(pos)
            total = value if acc is None else acc + value
            if total:
                out[pos] = total
            elif pos in out:
                del out[pos]
        return self._wrap(out)

    def __sub__(self, other) -> SuperMatrix:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> SuperMatrix:
        return self._wrap({pos: -value for pos, value in self.entries.items()})

    def __mul__(self, scalar) -> SuperMatrix:
        if not isinstance(scalar, (int, Fraction, RadElement)):
            return NotImplemented
        factor = _as_rad(scalar)
        if not factor:
            return SuperMatrix.zero(self.dim)
        return self._wrap({pos: value * factor for pos, value in self.entries.items()})

    __rmul__ = __mul__

    def __matmul__(self, other) -> SuperMatrix:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._same_dim(other)
        rows: dict[int, list[tuple[int, RadElement]]] = {}
        for (k, j), value in other.entries.items():
            rows.setdefault(k, []).append((j, value))
        out: dict[tuple[int, int], RadElement] = {}
        for (i, k), left in self.entries.items():
            for j, right in rows.get(k, ()):
                pos = (i, j)
                term = left * right
                acc = out.get(pos)
                total = term if acc is None else acc + term
                if total:
                    out[pos] = total
                elif pos in out:
                    del out[pos]
        return self._wrap(out)

    def dagger(self) -> SuperMatrix:
        """Transpose; entries are exact real values so no conjugation happens."""
        return self._wrap({(j, i): value for (i, j), value in self.entries.items()})

    def _wrap(self, entries: dict[tuple[int, int], RadElement]) -> SuperMatrix:
        # entries already validated and zero-free
        result = SuperMatrix.__new__(SuperMatrix)
        result.dim = self.dim
        result.entries = entries
        result.parity = _parity_of(self.dim, entries)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.entries.items())))

    def to_json_obj(self) -> dict:
        ordered = sorted(self.entries)
        return {
            "dim": [self.dim.even, self.dim.odd],
            "entries": [[i, j, str(self.entries[(i, j)])] for i, j in ordered],
        }

    def to_dense(self) -> list[list[RadElement]]:
        size = self.dim.total
        zero = RadElement.zero()
        grid = [[zero] * size for _ in range(size)]
        for (i, j), value in self.entries.items():
            grid[i - 1][j - 1] = value
        return grid

    def to_float_rows(self) -> list[list[float]]:
        size = self.dim.total
        grid = [[0.0] * size for _ in range(size)]
        for (i, j), value in self.entries.items():
            grid[i - 1][j - 1] = value.to_float()
        return grid

    def __repr__(self) -> str:
        return (
            f"SuperMatrix(({self.dim.even}|{self.dim.odd}), "
            f"{len(self.entries)} entries, {self.parity.value})"
        )


def unit_matrix(i: int, j: int, dim: GradedDim) -> SuperMatrix:
    """e_ij: single 1 at row i, column j (1-indexed)."""
    return SuperMatrix(dim, {(i, j): 1})


def mat_mul(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Matrix product; e_ij e_kl = delta_jk e_il."""
    return a @ b


def anticommutator(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """{a, b} = ab + ba."""
    return (a @ b) + (b @ a)


def commutator(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """[a, b] = ab - ba."""
    return (a @ b) - (b @ a)


def superbracket(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Graded bracket: {a, b} when both operands are odd, [a, b] otherwise."""
    if a.parity is Parity.INHOMOGENEOUS or b.parity is Parity.INHOMOGENEOUS:
        raise ParityError("super-bracket needs homogeneous operands")
    if a.parity is Parity.ODD and b.parity is Parity.ODD:
        return anticommutator(a, b)
    return commutator(a, b)


def dagger(a: SuperMatrix) -> SuperMatrix:
    """Transpose of an exact real matrix."""
    return a.dagger()
