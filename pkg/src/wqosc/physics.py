"""Float realization of an N-particle, D-dimensional oscillator.

The exact operators are mapped to complex double matrices a+_{alpha j} and
a-_{alpha j}, inverted to position and momentum through

    R_{alpha j} = sqrt(hbar / (c m omega)) (a+ + a-)
    P_{alpha j} = -i mu sqrt(m omega hbar / c) (a+ - a-)

and assembled into H = (omega hbar / c) sum {a+, a-}, which agrees with the
quadratic form sum_alpha (P_alpha^2 / 2m + m omega^2 R_alpha^2 / 2)
identically; build_H asserts that agreement at relative 1e-10.  The
Hamilton/Heisenberg compatibility check then passes exactly when (mu, c)
match the verified scalar through -mu c = lambda.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .families import CaoSet
from .radicals import RadElement
from .supermatrix import dagger as exact_dagger
from .verify import CheckReport, derive_mu_c

__all__ = [
    "PhysParams",
    "AssignedOperators",
    "HFormError",
    "assign_ND",
    "build_RP",
    "build_H",
    "max_cc_residual",
    "check_hamilton_heisenberg",
    "dagger_report",
    "params_from_scalar",
    "eigenvalue_note",
]


@dataclass(frozen=True)
class PhysParams:
    """Oscillator constants; mu is the +/-1 branch picked for the map to R, P."""

    mass: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0
    c: float = 1.0
    mu: int = -1

    def __post_init__(self) -> None:
        for name in ("mass", "omega", "hbar", "c"):
            value = getattr(self, name)
            if not (value > 0):
                raise ValueError(f"{name} must be positive, got {value}")
        if self.mu not in (-1, 1):
            raise ValueError(f"mu must be +1 or -1, got {self.mu}")


@dataclass
class AssignedOperators:
    """Operator arrays indexed (alpha-1, j-1, row, col), complex double."""

    N: int
    D: int
    a_plus: np.ndarray
    a_minus: np.ndarray
    R: np.ndarray | None = None
    P: np.ndarray | None = None
    H: np.ndarray | None = None


class HFormError(ValueError):
    """Bracket and quadratic Hamiltonians disagree; carries both matrices."""

    def __init__(self, message: str, h_bracket: np.ndarray, h_quadratic: np.ndarray) -> None:
        super().__init__(message)
        self.h_bracket = h_bracket
        self.h_quadratic = h_quadratic


def assign_ND(
    caos: CaoSet,
    N: int,
    D: int,
    bijection: Sequence[tuple[int, int]] | None = None,
) -> AssignedOperators:
    """Relabel the M pairs as a+/-_{alpha j}, alpha = 1..N, j = 1..D.

    Position (alpha, j) takes the pair at index (alpha-1)*D + (j-1) of the
    family's label order, or of the explicit bijection (a permutation of the
    labels).  Requires N*D = M.
    """
    if N < 1 or D < 1:
        raise ValueError(f"need N >= 1 and D >= 1, got N={N}, D={D}")
    m_count = len(caos.pairs)
    if N * D != m_count:
        raise ValueError(f"N*D = {N * D} must equal the number of pairs M = {m_count}")
    pair_by_label = caos.pair_map()
    if bijection is None:
        ordered = list(caos.pairs)
    else:
        labels = [tuple(lbl) for lbl in bijection]
        if sorted(labels) != sorted(caos.labels):
            raise ValueError("bijection must be a permutation of the family labels")
        ordered = [pair_by_label[lbl] for lbl in labels]
    size = caos.dim.total
    a_plus = np.zeros((N, D, size, size), dtype=complex)
    a_minus = np.zeros((N, D, size, size), dtype=complex)
    for alpha in range(N):
        for j in range(D):
            pair = ordered[alpha * D + j]
            a_plus[alpha, j] = np.array(pair.plus.to_float_rows(), dtype=complex)
            a_minus[alpha, j] = np.array(pair.minus.to_float_rows(), dtype=complex)
    return AssignedOperators(N=N, D=D, a_plus=a_plus, a_minus=a_minus)


def build_RP(ops: AssignedOperators, params: PhysParams) -> AssignedOperators:
    """Position and momentum solved from the creation/annihilation map."""
    r_coef = math.sqrt(params.hbar / (params.c * params.mass * params.omega))
    p_coef = -1j * params.mu * math.sqrt(params.mass * params.omega * params.hbar / params.c)
    return replace(
        ops,
        R=r_coef * (ops.a_plus + ops.a_minus),
        P=p_coef * (ops.a_plus - ops.a_minus),
    )


def build_H(ops: AssignedOperators, params: PhysParams) -> AssignedOperators:
    """Hamiltonian from the bracket form, cross-checked against the quadratic form."""
    if ops.R is None or ops.P is None:
        ops = build_RP(ops, params)
    size = ops.a_plus.shape[-1]
    h_bracket = np.zeros((size, size), dtype=complex)
    for alpha in range(ops.N):
        for j in range(ops.D):
            ap = ops.a_plus[alpha, j]
            am = ops.a_minus[alpha, j]
            h_bracket += ap @ am + am @ ap
    h_bracket *= params.omega * params.hbar / params.c
    h_quadratic = np.zeros((size, size), dtype=complex)
    for alpha in range(ops.N):
        p_sq = np.zeros((size, size), dtype=complex)
        r_sq = np.zeros((size, size), dtype=complex)
        for j in range(ops.D):
            p_sq += ops.P[alpha, j] @ ops.P[alpha, j]
            r_sq += ops.R[alpha, j] @ ops.R[alpha, j]
        h_quadratic += p_sq / (2.0 * params.mass) + 0.5 * params.mass * params.omega**2 * r_sq
    scale = np.max(np.abs(h_bracket))
    gap = np.max(np.abs(h_bracket - h_quadratic))
    bound = 1e-10 * scale if scale > 0 else 1e-10
    if gap > bound:
        raise HFormError(
            f"Hamiltonian forms disagree: max |difference| = {gap:.3e} > {bound:.3e}",
            h_bracket,
            h_quadratic,
        )
    return replace(ops, H=h_bracket)


def max_cc_residual(ops: AssignedOperators, params: PhysParams) -> tuple[float, tuple[int, int]]:
    """Worst max-entry residual of the two compatibility identities and its (alpha, j)."""
    if ops.H is None or ops.R is None or ops.P is None:
        raise ValueError("operators must carry R, P and H; run build_RP and build_H first")
    h = ops.H
    worst = -1.0
    worst_label = (1, 1)
    for alpha in range(ops.N):
        for j in range(ops.D):
            r_mat = ops.R[alpha, j]
            p_mat = ops.P[alpha, j]
            res_p = np.max(
                np.abs((h @ p_mat - p_mat @ h) - 1j * params.hbar * params.mass * params.omega**2 * r_mat)
            )
            res_r = np.max(np.abs((h @ r_mat - r_mat @ h) + (1j * params.hbar / params.mass) * p_mat))
            local = max(res_p, res_r)
            if local > worst:
                worst = local
                worst_label = (alpha + 1, j + 1)
    return worst, worst_label


def check_hamilton_heisenberg(ops: AssignedOperators, params: PhysParams, tol: float = 1e-10) -> CheckReport:
    """Compatibility of Hamilton's equations with the Heisenberg ones.

    [H, P_{alpha j}] = i hbar m omega^2 R_{alpha j} and
    [H, R_{alpha j}] = -(i hbar / m) P_{alpha j}, max-entry residual <= tol.
    """
    if not (tol > 0):
        raise ValueError(f"tolerance must be positive, got {tol}")
    worst, worst_label = max_cc_residual(ops, params)
    if worst <= tol:
        return CheckReport(
            "hamilton_heisenberg",
            True,
            None,
            f"max residual {worst:.3e} <= tol {tol:.1e}",
        )
    return CheckReport(
        "hamilton_heisenberg",
        False,
        f"worst (alpha, j) = {worst_label}, residual {worst:.3e}",
        f"max residual {worst:.3e} exceeds tol {tol:.1e}",
    )


def dagger_report(caos: CaoSet) -> CheckReport:
    """Whether (x+)^dagger = x- holds pairwise; informational, exact.

    Failure is an expected outcome for some families and never an error
    condition.  The details list every label so the report is label-complete
    and deterministic.
    """
    outcomes = []
    failing = []
    for label, plus, minus in caos.pairs:
        ok = exact_dagger(plus) == minus
        outcomes.append(f"{label}:{'ok' if ok else 'mismatch'}")
        if not ok:
            failing.append(label)
    details = "informational adjoint survey; " + ", ".join(outcomes)
    if not failing:
        return CheckReport("dagger_defining", True, None, details)
    return CheckReport(
        "dagger_defining",
        False,
        f"adjoint mismatch at labels {failing}",
        details,
    )


def params_from_scalar(
    lam: RadElement,
    mass: float = 1.0,
    omega: float = 1.0,
    hbar: float = 1.0,
) -> PhysParams:
    """PhysParams with (mu, c) derived from the verified scalar lambda."""
    mu, c = derive_mu_c(lam)
    return PhysParams(mass=mass, omega=omega, hbar=hbar, c=c.to_float(), mu=mu)


def eigenvalue_note(ops: AssignedOperators) -> str:
    """One-line summary of the Hamiltonian spectrum in this representation."""
    if ops.H is None:
        raise ValueError("H is not built; run build_H first")
    values = sorted(np.linalg.eigvals(ops.H).real)
    return "H eigenvalues (defining representation): " + ", ".join(f"{v:.6g}" for v in values)
