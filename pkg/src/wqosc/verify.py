"""Exact verification of triple relations, compatibility scalars and grading.

Every check works in exact arithmetic and returns a CheckReport; a failed
report always carries a serialized witness (offending labels plus the
matrices involved).  The compatibility-condition scalar lambda is discovered
on the first pair and then verified across every label, with the minus
branch required to carry -lambda.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .families import CaoSet, FamilyId, FamilyParams, OSP_FAMILIES, label_sign, validate_params
from .linalg import RadRowEchelon, matrix_row
from .radicals import RadElement
from .supermatrix import Parity, SuperMatrix, anticommutator, commutator, superbracket

__all__ = [
    "CheckReport",
    "GradingReport",
    "check_sl_triple",
    "check_osp_triple",
    "check_parabose",
    "cc_scalar",
    "expected_lambda",
    "derive_mu_c",
    "grading_analysis",
    "superjacobi_sample",
]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification; witness is present exactly on failure."""

    check_name: str
    passed: bool
    witness: str | None
    details: str

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError("failed check must carry a witness")


def _passed(name: str, details: str) -> CheckReport:
    return CheckReport(name, True, None, details)


def _failed(name: str, witness: str, details: str) -> CheckReport:
    return CheckReport(name, False, witness, details)


def _matrix_witness(kind: str, labels: Sequence[tuple[int, int]], got: SuperMatrix, expected: SuperMatrix) -> str:
    return json.dumps(
        {
            "relation": kind,
            "labels": [list(lbl) for lbl in labels],
            "got": got.to_json_obj(),
            "expected": expected.to_json_obj(),
        },
        sort_keys=True,
    )


def check_sl_triple(caos: CaoSet) -> CheckReport:
    """Both sl triple relations over all index tuples of an sl3 family.

    [{x+_{ri}, x-_{sj}}, x+_{tk}] = d_ij d_st x+_{rk} - d_jk d_rs x+_{ti}
    [{x+_{ri}, x-_{sj}}, x-_{tk}] = -d_ij d_rt x-_{sk} + d_ik d_rs x-_{tj}
    """
    if caos.family is not FamilyId.SL3:
        raise ValueError("check_sl_triple applies to the sl3 family only")
    by_label = caos.pair_map()
    zero = SuperMatrix.zero(caos.dim)
    checked = 0
    for (r, i), x_ri in ((p.label, p.plus) for p in caos.pairs):
        for (s, j), y_sj in ((p.label, p.minus) for p in caos.pairs):
            middle = anticommutator(x_ri, y_sj)
            for t, k in caos.labels:
                plus_tk = by_label[(t, k)].plus
                minus_tk = by_label[(t, k)].minus
                rhs_plus = zero
                if i == j and s == t:
                    rhs_plus = rhs_plus + by_label[(r, k)].plus
                if j == k and r == s:
                    rhs_plus = rhs_plus - by_label[(t, i)].plus
                rhs_minus = zero
                if i == j and r == t:
                    rhs_minus = rhs_minus - by_label[(s, k)].minus
                if i == k and r == s:
                    rhs_minus = rhs_minus + by_label[(t, j)].minus
                lhs_plus = commutator(middle, plus_tk) if not middle.is_zero else zero
                lhs_minus = commutator(middle, minus_tk) if not middle.is_zero else zero
                if lhs_plus != rhs_plus:
                    return _failed(
                        "sl_triple",
                        _matrix_witness("plus", [(r, i), (s, j), (t, k)], lhs_plus, rhs_plus),
                        "triple relation on the creation branch failed",
                    )
                if lhs_minus != rhs_minus:
                    return _failed(
                        "sl_triple",
                        _matrix_witness("minus", [(r, i), (s, j), (t, k)], lhs_minus, rhs_minus),
                        "triple relation on the annihilation branch failed",
                    )
                checked += 2
    return _passed("sl_triple", f"{checked} bracket identities hold exactly")


def check_osp_triple(caos: CaoSet) -> CheckReport:
    """Diagonal-pair triple relations of the orthosymplectic families.

    [{x+_{rk}, x-_{rk}}, x(+/-)_{sj}] = (+/-)(<k><j> d_{|k||j|} - d_rs) x(+/-)_{sj}
    for all labels (r, k), (s, j), with <.> the column-label sign.
    """
    if caos.family not in OSP_FAMILIES:
        raise ValueError("check_osp_triple applies to the ospB/ospD1/ospD2 families only")
    checked = 0
    for (r, k), plus_rk, minus_rk in caos.pairs:
        middle = anticommutator(plus_rk, minus_rk)
        for (s, j), plus_sj, minus_sj in caos.pairs:
            coeff = label_sign(k) * label_sign(j) * (abs(k) == abs(j)) - (r == s)
            lhs_plus = commutator(middle, plus_sj)
            rhs_plus = coeff * plus_sj
            if lhs_plus != rhs_plus:
                return _failed(
                    "osp_triple",
                    _matrix_witness("plus", [(r, k), (s, j)], lhs_plus, rhs_plus),
                    "triple relation on the creation branch failed",
                )
            lhs_minus = commutator(middle, minus_sj)
            rhs_minus = (-coeff) * minus_sj
            if lhs_minus != rhs_minus:
                return _failed(
                    "osp_triple",
                    _matrix_witness("minus", [(r, k), (s, j)], lhs_minus, rhs_minus),
                    "triple relation on the annihilation branch failed",
                )
            checked += 2
    return _passed("osp_triple", f"{checked} bracket identities hold exactly")


def check_parabose(bops: Sequence[tuple[SuperMatrix, SuperMatrix]]) -> CheckReport:
    """Para-Bose defining relations over all triples and sign choices.

    [{b^xi_r, b^eta_s}, b^eps_t] = (eps - xi) d_rt b^eta_s + (eps - eta) d_st b^xi_r
    with xi, eta, eps in {+1, -1}.
    """
    if not bops:
        raise ValueError("need at least one para-Bose pair")
    n = len(bops)

    def pick(r: int, sign: int) -> SuperMatrix:
        return bops[r][0] if sign > 0 else bops[r][1]

    zero = SuperMatrix.zero(bops[0][0].dim)
    checked = 0
    for r in range(n):
        for s in range(n):
            for t in range(n):
                for xi in (1, -1):
                    for eta in (1, -1):
                        middle = anticommutator(pick(r, xi), pick(s, eta))
                        for eps in (1, -1):
                            lhs = commutator(middle, pick(t, eps))
                            rhs = zero
                            if r == t and eps != xi:
                                rhs = rhs + (eps - xi) * pick(s, eta)
                            if s == t and eps != eta:
                                rhs = rhs + (eps - eta) * pick(r, xi)
                            if lhs != rhs:
                                return _failed(
                                    "para_bose",
                                    _matrix_witness(
                                        f"xi={xi},eta={eta},eps={eps}",
                                        [(r + 1, 0), (s + 1, 0), (t + 1, 0)],
                                        lhs,
                                        rhs,
                                    ),
                                    "para-Bose relation failed",
                                )
                            checked += 1
    return _passed("para_bose", f"{checked} para-Bose brackets hold exactly")


def _scalar_ratio(s: SuperMatrix, x: SuperMatrix) -> RadElement | None:
    """lambda with s = lambda*x, or None when no such scalar exists."""
    if x.is_zero:
        return None
    pos, value = next(iter(sorted(x.entries.items())))
    candidate = s.entries.get(pos, RadElement.zero()) / value
    return candidate if s == candidate * x else None


def cc_scalar(caos: CaoSet) -> tuple[RadElement, CheckReport]:
    """Scalar of the summed compatibility bracket, verified on every label.

    With T = sum_{rk} {x+_{rk}, x-_{rk}}, demands [T, x+_{sj}] = lambda x+_{sj}
    and [T, x-_{sj}] = -lambda x-_{sj} for a single lambda across all labels
    (summing first is exact by bilinearity of the bracket).  Returns the
    scalar and a report; mu = -sgn(lambda) and c = |lambda| are usable only
    when lambda is nonzero.
    """
    total = SuperMatrix.zero(caos.dim)
    for pair in caos.pairs:
        total = total + anticommutator(pair.plus, pair.minus)
    lam: RadElement | None = None
    for (s, j), plus_sj, minus_sj in caos.pairs:
        sum_plus = commutator(total, plus_sj)
        if lam is None:
            lam = _scalar_ratio(sum_plus, plus_sj)
            if lam is None:
                return RadElement.zero(), _failed(
                    "cc_scalar",
                    _matrix_witness("plus", [(s, j)], sum_plus, plus_sj),
                    "summed bracket is not proportional to the creation operator",
                )
        if sum_plus != lam * plus_sj:
            return lam, _failed(
                "cc_scalar",
                _matrix_witness("plus", [(s, j)], sum_plus, lam * plus_sj),
                f"creation branch disagrees with lambda={lam}",
            )
        sum_minus = commutator(total, minus_sj)
        if sum_minus != (-lam) * minus_sj:
            return lam, _failed(
                "cc_scalar",
                _matrix_witness("minus", [(s, j)], sum_minus, (-lam) * minus_sj),
                f"annihilation branch disagrees with -lambda, lambda={lam}",
            )
    assert lam is not None
    sign = lam.sign()
    if sign == 0:
        details = "lambda = 0; CC usable: false (c must be positive)"
    else:
        mu = -sign
        details = f"lambda = {lam}; mu = {mu}, c = {abs(lam)}; CC usable: true"
        if sign < 0:
            details += "; swapping every (x+, x-) pair flips lambda and mu"
    return lam, _passed("cc_scalar", details)


def expected_lambda(family: FamilyId, params: FamilyParams) -> RadElement:
    """Closed-form compatibility scalar for each family."""
    validate_params(family, params)
    m, n, l = params.m, params.n, params.l
    if family is FamilyId.SL3:
        value = m - n
    elif family is FamilyId.SL5A:
        nu = (2 * m - n - 2 * l > 0) - (2 * m - n - 2 * l < 0)
        value = -nu * n * (m - n)
    elif family is FamilyId.SL5B:
        nu = (2 * n - m - 2 * l > 0) - (2 * n - m - 2 * l < 0)
        value = -nu * m * (n - m)
    elif family is FamilyId.OSPB:
        value = -(2 * m + 1)
    elif family is FamilyId.OSPD1:
        value = -2 * m
    else:
        value = -2 * n
    return RadElement.from_rational(value)


def derive_mu_c(lam: RadElement) -> tuple[int, RadElement]:
    """mu = -sgn(lambda), c = |lambda|; rejects the unusable lambda = 0."""
    sign = lam.sign()
    if sign == 0:
        raise ValueError("lambda = 0 gives no usable compatibility constant (c must be positive)")
    return -sign, abs(lam)


@dataclass(frozen=True)
class GradingReport:
    """Dimensions of G_{-2}..G_{+2} plus closure and parity outcomes."""

    dims: tuple[int, int, int, int, int]
    length: int
    closure_ok: bool
    parity_consistent: bool

    def to_json_obj(self) -> dict:
        return {
            "dims": list(self.dims),
            "length": self.length,
            "closure_ok": self.closure_ok,
            "parity_consistent": self.parity_consistent,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> GradingReport:
        return cls(
            dims=tuple(obj["dims"]),
            length=obj["length"],
            closure_ok=obj["closure_ok"],
            parity_consistent=obj["parity_consistent"],
        )


def grading_analysis(caos: CaoSet) -> GradingReport:
    """Short grading generated by the family, with exact rank computations.

    G_{+1} and G_{-1} are the spans of the creation and annihilation
    operators, G_0 = [[G_{-1}, G_{+1}]], G_{+/-2} = [[G_{+/-1}, G_{+/-1}]].
    Closure [[G_i, G_j]] inside G_{i+j} (zero when |i+j| > 2) is checked on
    span bases, which suffices for all generator pairs by bilinearity.
    """
    width = caos.dim.total ** 2
    plus_gens = [pair.plus for pair in caos.pairs]
    minus_gens = [pair.minus for pair in caos.pairs]
    generators: dict[int, list[SuperMatrix]] = {1: plus_gens, -1: minus_gens}
    generators[0] = [
        br
        for p in plus_gens
        for m_ in minus_gens
        if not (br := superbracket(p, m_)).is_zero
    ]
    generators[2] = [
        br
        for a_idx, a in enumerate(plus_gens)
        for b in plus_gens[a_idx:]
        if not (br := superbracket(a, b)).is_zero
    ]
    generators[-2] = [
        br
        for a_idx, a in enumerate(minus_gens)
        for b in minus_gens[a_idx:]
        if not (br := superbracket(a, b)).is_zero
    ]
    spans: dict[int, RadRowEchelon] = {}
    bases: dict[int, list[SuperMatrix]] = {}
    for degree_idx in (-2, -1, 0, 1, 2):
        ech = RadRowEchelon(width)
        basis = [g for g in generators[degree_idx] if ech.insert(matrix_row(g))]
        spans[degree_idx] = ech
        bases[degree_idx] = basis

    parity_consistent = all(g.parity is Parity.ODD for g in generators[1] + generators[-1]) and all(
        g.parity is Parity.EVEN for g in generators[0] + generators[2] + generators[-2]
    )

    closure_ok = True
    for gi in (-2, -1, 0, 1, 2):
        for gj in (-2, -1, 0, 1, 2):
            if not closure_ok:
                break
            for a in bases[gi]:
                for b in bases[gj]:
                    br = superbracket(a, b)
                    if br.is_zero:
                        continue
                    target = gi + gj
                    if abs(target) > 2 or not spans[target].contains(matrix_row(br)):
                        closure_ok = False
                        break
                if not closure_ok:
                    break

    dims = (
        spans[-2].rank,
        spans[-1].rank,
        spans[0].rank,
        spans[1].rank,
        spans[2].rank,
    )
    length = 3 if dims[0] == 0 and dims[4] == 0 else 5
    return GradingReport(dims=dims, length=length, closure_ok=closure_ok, parity_consistent=parity_consistent)


def superjacobi_sample(caos: CaoSet, seed: int, count: int) -> CheckReport:
    """Graded Jacobi identity on count random homogeneous triples.

    The pool mixes the family operators with a deterministic selection of
    their pairwise brackets, so all five grading components are represented.
    Sampling uses random.Random(seed); identical arguments give identical
    reports.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    pool: list[SuperMatrix] = []
    for pair in caos.pairs:
        pool.append(pair.plus)
        pool.append(pair.minus)
    cap = min(len(caos.pairs), 4)
    for i in range(cap):
        for j in range(cap):
            g0 = superbracket(caos.pairs[i].plus, caos.pairs[j].minus)
            if not g0.is_zero:
                pool.append(g0)
    for i in range(cap):
        for j in range(i, cap):
            g2 = superbracket(caos.pairs[i].plus, caos.pairs[j].plus)
            if not g2.is_zero:
                pool.append(g2)
            g2m = superbracket(caos.pairs[i].minus, caos.pairs[j].minus)
            if not g2m.is_zero:
                pool.append(g2m)
    rng = random.Random(seed)
    for trial in range(count):
        a = pool[rng.randrange(len(pool))]
        b = pool[rng.randrange(len(pool))]
        c = pool[rng.randrange(len(pool))]
        lhs = superbracket(a, superbracket(b, c))
        rhs = superbracket(superbracket(a, b), c)
        tail = superbracket(b, superbracket(a, c))
        if a.degree() * b.degree() % 2:
            rhs = rhs - tail
        else:
            rhs = rhs + tail
        if lhs != rhs:
            return _failed(
                "super_jacobi",
                _matrix_witness(f"trial={trial}", [], lhs, rhs),
                "graded Jacobi identity failed on a sampled triple",
            )
    return _passed("super_jacobi", f"{count} sampled triples satisfy the graded Jacobi identity")
