"""Creation/annihilation operator families of the basic classical superalgebras.

Each family realizes M labelled pairs (x+_{rk}, x-_{rk}) of odd matrices in
the defining representation, built from unit matrices e_ij with exact radical
scalings.  Six families are covered:

* sl3  : sl(m|n), one unit entry per operator, grading of length 3.
* sl5a : sl(m|n) scaled pairs split on the column label k at a threshold l.
* sl5b : sl(m|n) scaled pairs split on the row label r at a threshold l.
* ospB : osp(2m+1|2n), labels k = -m..m including a k = 0 column.
* ospD1: osp(2m|2n), first system, labels k = -m..m without 0.
* ospD2: osp(2m|2n), second system, labels r = 1..m, k = -n..n without 0.

Label order is deterministic (r outermost, k ascending), which fixes the
default single-index assignment used by the physics layer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .radicals import RadBasis, RadElement
from .supermatrix import GradedDim, SuperMatrix, unit_matrix

__all__ = [
    "FamilyId",
    "FamilyParams",
    "CaoPair",
    "CaoSet",
    "label_sign",
    "validate_params",
    "build",
    "build_sl3",
    "build_sl5a",
    "build_sl5b",
    "build_ospB",
    "build_ospD1",
    "build_ospD2",
    "parabose_ops",
]


class FamilyId(enum.Enum):
    """Family tags; the values double as the CLI/JSON spellings."""

    SL3 = "sl3"
    SL5A = "sl5a"
    SL5B = "sl5b"
    OSPB = "ospB"
    OSPD1 = "ospD1"
    OSPD2 = "ospD2"


SL_FAMILIES = frozenset({FamilyId.SL3, FamilyId.SL5A, FamilyId.SL5B})
OSP_FAMILIES = frozenset({FamilyId.OSPB, FamilyId.OSPD1, FamilyId.OSPD2})


@dataclass(frozen=True)
class FamilyParams:
    """Rank parameters; l is the split threshold used only by sl5a/sl5b."""

    m: int
    n: int
    l: int | None = None


class CaoPair(NamedTuple):
    label: tuple[int, int]
    plus: SuperMatrix
    minus: SuperMatrix


def label_sign(j: int) -> int:
    """Sign of an orthosymplectic column label: +1, -1, or 0 for j = 0."""
    return (j > 0) - (j < 0)


def _int_sign(v: int) -> int:
    return (v > 0) - (v < 0)


def validate_params(family: FamilyId, params: FamilyParams) -> None:
    """Raise ValueError on out-of-range parameters, naming any vanishing factor."""
    m, n, l = params.m, params.n, params.l
    if family in SL_FAMILIES:
        if m < 1 or n < 1:
            raise ValueError(f"family {family.value} needs m >= 1 and n >= 1, got m={m}, n={n}")
    if family is FamilyId.SL3:
        if l is not None:
            raise ValueError("family sl3 takes no split parameter l")
        return
    if family is FamilyId.SL5A:
        if l is None:
            raise ValueError("family sl5a requires the split parameter l")
        if not 1 <= l <= m - 1:
            raise ValueError(f"family sl5a needs 1 <= l <= m-1, got l={l}, m={m}")
        if n - 2 * l == 0:
            raise ValueError(f"factor (n-2l) vanishes for n={n}, l={l}")
        if 2 * m - n - 2 * l == 0:
            raise ValueError(f"factor (2m-n-2l) vanishes for m={m}, n={n}, l={l}")
        return
    if family is FamilyId.SL5B:
        if l is None:
            raise ValueError("family sl5b requires the split parameter l")
        if not 1 <= l <= n - 1:
            raise ValueError(f"family sl5b needs 1 <= l <= n-1, got l={l}, n={n}")
        if m - 2 * l == 0:
            raise ValueError(f"factor (m-2l) vanishes for m={m}, l={l}")
        if 2 * n - m - 2 * l == 0:
            raise ValueError(f"factor (2n-m-2l) vanishes for m={m}, n={n}, l={l}")
        return
    if l is not None:
        raise ValueError(f"family {family.value} takes no split parameter l")
    if family is FamilyId.OSPB:
        if m < 0 or n < 1:
            raise ValueError(f"family ospB needs m >= 0 and n >= 1, got m={m}, n={n}")
        return
    if m < 1 or n < 1:
        raise ValueError(f"family {family.value} needs m >= 1 and n >= 1, got m={m}, n={n}")


@dataclass(frozen=True)
class CaoSet:
    """A labelled family of creation/annihilation pairs in one representation."""

    family: FamilyId
    params: FamilyParams
    dim: GradedDim
    pairs: tuple[CaoPair, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[CaoPair]:
        return iter(self.pairs)

    @property
    def labels(self) -> tuple[tuple[int, int], ...]:
        return tuple(pair.label for pair in self.pairs)

    def pair_map(self) -> dict[tuple[int, int], CaoPair]:
        return {pair.label: pair for pair in self.pairs}

    @property
    def algebra_name(self) -> str:
        m, n = self.params.m, self.params.n
        if self.family in SL_FAMILIES:
            return f"sl({m}|{n})"
        if self.family is FamilyId.OSPB:
            return f"osp({2 * m + 1}|{2 * n})"
        if m == 1:
            # osp(2|2n) is the one-parameter C series
            return f"C({n + 1})"
        return f"osp({2 * m}|{2 * n})"

    def rad_basis(self) -> RadBasis:
        rads: set[int] = set()
        for pair in self.pairs:
            for mat in (pair.plus, pair.minus):
                for value in mat.entries.values():
                    rads.update(value.radicands())
        return RadBasis(tuple(sorted(rads)))

    def permuted(self, order: Sequence[int]) -> CaoSet:
        """Same family with the pair list reordered; order permutes range(M)."""
        if sorted(order) != list(range(len(self.pairs))):
            raise ValueError("order must be a permutation of range(M)")
        return CaoSet(self.family, self.params, self.dim, tuple(self.pairs[i] for i in order))

    def to_json_obj(self) -> dict:
        return {
            "family": self.family.value,
            "params": {"m": self.params.m, "n": self.params.n, "l": self.params.l},
            "dim": [self.dim.even, self.dim.odd],
            "pairs": [
                {
                    "label": list(pair.label),
                    "plus": pair.plus.to_json_obj(),
                    "minus": pair.minus.to_json_obj(),
                }
                for pair in self.pairs
            ],
        }


def build_sl3(m: int, n: int) -> CaoSet:
    """sl(m|n) family with one unit entry per operator and grading length 3.

    x+_{rk} = e_{m+r,k} and x-_{rk} = e_{k,m+r} for r = 1..n, k = 1..m: the
    row index of x+ is chosen so every operator stays inside the
    (m+n)-dimensional representation; this is the unique choice under which
    the triple relations close (checked mechanically by check_sl_triple).
    """
    params = FamilyParams(m, n)
    validate_params(FamilyId.SL3, params)
    dim = GradedDim(m, n)
    pairs = []
    for r in range(1, n + 1):
        for k in range(1, m + 1):
            plus = unit_matrix(m + r, k, dim)
            minus = unit_matrix(k, m + r, dim)
            pairs.append(CaoPair((r, k), plus, minus))
    return CaoSet(FamilyId.SL3, params, dim, tuple(pairs))


def build_sl5a(m: int, n: int, l: int) -> CaoSet:
    """sl(m|n) scaled family split on the column label k at threshold l.

    Scalings sqrt|2m-n-2l| (k <= l) and sqrt|n-2l| (k > l), with the
    relative sign eps = sgn((n-2l)(2m-n-2l)) on the annihilation side of the
    k > l block.  Both factors must be nonzero.
    """
    params = FamilyParams(m, n, l)
    validate_params(FamilyId.SL5A, params)
    a_val = 2 * m - n - 2 * l
    b_val = n - 2 * l
    low = RadElement.sqrt(abs(a_val))
    high = RadElement.sqrt(abs(b_val))
    eps = _int_sign(b_val * a_val)
    dim = GradedDim(m, n)
    pairs = []
    for r in range(1, n + 1):
        for k in range(1, m + 1):
            if k <= l:
                plus = low * unit_matrix(m + r, k, dim)
                minus = low * unit_matrix(k, m + r, dim)
            else:
                plus = high * unit_matrix(k, m + r, dim)
                minus = (eps * high) * unit_matrix(m + r, k, dim)
            pairs.append(CaoPair((r, k), plus, minus))
    return CaoSet(FamilyId.SL5A, params, dim, tuple(pairs))


def build_sl5b(m: int, n: int, l: int) -> CaoSet:
    """sl(m|n) scaled family split on the row label r at threshold l.

    Scalings sqrt|2n-m-2l| (r <= l) and sqrt|m-2l| (r > l), with
    eps = sgn((m-2l)(2n-m-2l)) on the r > l block.  The two matrix shapes are
    assigned to the creation/annihilation roles so that the summed triple
    relation holds with coefficient -nu*m*(n-m), nu = sgn(2n-m-2l); the
    opposite assignment satisfies the same identity with the sign flipped
    (the two presentations are exchanged by swapping every pair).
    """
    params = FamilyParams(m, n, l)
    validate_params(FamilyId.SL5B, params)
    a_val = 2 * n - m - 2 * l
    b_val = m - 2 * l
    low = RadElement.sqrt(abs(a_val))
    high = RadElement.sqrt(abs(b_val))
    eps = _int_sign(b_val * a_val)
    dim = GradedDim(m, n)
    pairs = []
    for r in range(1, n + 1):
        for k in range(1, m + 1):
            if r <= l:
                plus = low * unit_matrix(k, m + r, dim)
                minus = low * unit_matrix(m + r, k, dim)
            else:
                plus = (eps * high) * unit_matrix(m + r, k, dim)
                minus = high * unit_matrix(k, m + r, dim)
            pairs.append(CaoPair((r, k), plus, minus))
    return CaoSet(FamilyId.SL5B, params, dim, tuple(pairs))


def build_ospB(m: int, n: int) -> CaoSet:
    """osp(2m+1|2n) family; labels (r, k) with r = 1..n and k = -m..m.

    Every operator has exactly two unit entries.  The k = 0 column couples
    the middle even basis vector (position 2m+1) to the symplectic side; for
    m = 0 it is the only column and the plain entries span osp(1|2n).
    """
    params = FamilyParams(m, n)
    validate_params(FamilyId.OSPB, params)
    dim = GradedDim(2 * m + 1, 2 * n)
    base = 2 * m + 1
    pairs = []
    for r in range(1, n + 1):
        for k in range(-m, m + 1):
            if k > 0:
                i = k
                plus = SuperMatrix(dim, {(m + i, base + r): 1, (base + n + r, i): -1})
                minus = SuperMatrix(dim, {(i, base + n + r): 1, (base + r, m + i): 1})
            elif k < 0:
                i = -k
                plus = SuperMatrix(dim, {(i, base + r): 1, (base + n + r, i + m): -1})
                minus = SuperMatrix(dim, {(m + i, base + n + r): 1, (base + r, i): 1})
            else:
                plus = SuperMatrix(dim, {(base, base + r): 1, (base + n + r, base): -1})
                minus = SuperMatrix(dim, {(base, base + n + r): 1, (base + r, base): 1})
            pairs.append(CaoPair((r, k), plus, minus))
    return CaoSet(FamilyId.OSPB, params, dim, tuple(pairs))


def build_ospD1(m: int, n: int) -> CaoSet:
    """osp(2m|2n) first system; labels (r, k), r = 1..n, k = -m..m without 0."""
    params = FamilyParams(m, n)
    validate_params(FamilyId.OSPD1, params)
    dim = GradedDim(2 * m, 2 * n)
    base = 2 * m
    pairs = []
    for r in range(1, n + 1):
        for k in [*range(-m, 0), *range(1, m + 1)]:
            if k > 0:
                i = k
                plus = SuperMatrix(dim, {(m + i, base + r): 1, (base + n + r, i): -1})
                minus = SuperMatrix(dim, {(i, base + n + r): 1, (base + r, m + i): 1})
            else:
                i = -k
                plus = SuperMatrix(dim, {(i, base + r): 1, (base + n + r, i + m): -1})
                minus = SuperMatrix(dim, {(m + i, base + n + r): 1, (base + r, i): 1})
            pairs.append(CaoPair((r, k), plus, minus))
    return CaoSet(FamilyId.OSPD1, params, dim, tuple(pairs))


def build_ospD2(m: int, n: int) -> CaoSet:
    """osp(2m|2n) second system; labels (r, k), r = 1..m, k = -n..n without 0."""
    params = FamilyParams(m, n)
    validate_params(FamilyId.OSPD2, params)
    dim = GradedDim(2 * m, 2 * n)
    base = 2 * m
    pairs = []
    for r in range(1, m + 1):
        for k in [*range(-n, 0), *range(1, n + 1)]:
            if k > 0:
                i = k
                plus = SuperMatrix(dim, {(base + n + i, r): 1, (m + r, base + i): -1})
                minus = SuperMatrix(dim, {(r, base + n + i): 1, (base + i, m + r): 1})
            else:
                i = -k
                plus = SuperMatrix(dim, {(m + r, base + n + i): 1, (base + i, r): 1})
                minus = SuperMatrix(dim, {(r, base + i): 1, (base + n + i, m + r): -1})
            pairs.append(CaoPair((r, k), plus, minus))
    return CaoSet(FamilyId.OSPD2, params, dim, tuple(pairs))


_BUILDERS = {
    FamilyId.SL3: lambda p: build_sl3(p.m, p.n),
    FamilyId.SL5A: lambda p: build_sl5a(p.m, p.n, p.l),
    FamilyId.SL5B: lambda p: build_sl5b(p.m, p.n, p.l),
    FamilyId.OSPB: lambda p: build_ospB(p.m, p.n),
    FamilyId.OSPD1: lambda p: build_ospD1(p.m, p.n),
    FamilyId.OSPD2: lambda p: build_ospD2(p.m, p.n),
}


def build(family: FamilyId, params: FamilyParams) -> CaoSet:
    """Dispatch to the family constructor after validating parameters."""
    validate_params(family, params)
    return _BUILDERS[family](params)


def parabose_ops(caos: CaoSet) -> list[tuple[SuperMatrix, SuperMatrix]]:
    """Para-Bose pairs (b+_r, b-_r) = (sqrt(2) x+_{r0}, -sqrt(2) x-_{r0}).

    Defined on the ospB family with m = 0, whose only column label is k = 0;
    entries are exact in Q(sqrt(2)).
    """
    if caos.family is not FamilyId.OSPB or caos.params.m != 0:
        raise ValueError("para-Bose operators come from the ospB family with m = 0")
    root2 = RadElement.sqrt(2)
    return [(root2 * pair.plus, (-1 * root2) * pair.minus) for pair in caos.pairs]
