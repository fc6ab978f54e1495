"""Solution catalog for the N-particle, D-dimensional oscillator.

Enumerates every family whose pair count matches M = N*D within a rank
bound, runs the full verifier battery on each, and serializes the results
as deterministic JSON.  Divisor conditions per family:

    sl3, sl5a, sl5b   m*n = M, m != n (else the scalar vanishes),
                      sl5a/sl5b additionally every admissible split l
    ospB              (2m+1)*n = M, m >= 0
    ospD1, ospD2      2*m*n = M, m >= 1

Both (m, n) and (n, m) presentations of the sl families are emitted and
cross-linked through iso_partner, since the two are isomorphic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._version import __version__ as TOOL_VERSION
from .families import (
    OSP_FAMILIES,
    SL_FAMILIES,
    CaoSet,
    FamilyId,
    FamilyParams,
    build,
    parabose_ops,
    validate_params,
)
from .physics import dagger_report
from .radicals import RadElement
from .verify import (
    GradingReport,
    cc_scalar,
    check_osp_triple,
    check_parabose,
    check_sl_triple,
    derive_mu_c,
    grading_analysis,
    superjacobi_sample,
)

__all__ = [
    "TOOL_VERSION",
    "SolutionRecord",
    "Catalog",
    "family_parameter_sets",
    "build_record",
    "enumerate_solutions",
    "catalog_json",
]

_FAMILY_ORDER = {fam: pos for pos, fam in enumerate(FamilyId)}

_JACOBI_SAMPLES = 100


def _sort_key(family: FamilyId, params: FamilyParams) -> tuple[int, int, int, int]:
    return (_FAMILY_ORDER[family], params.m, params.n, params.l or 0)


@dataclass(frozen=True)
class SolutionRecord:
    """One verified family instance solving the (N, D) oscillator."""

    family: FamilyId
    params: FamilyParams
    algebra_name: str
    M: int
    N: int
    D: int
    lam: str
    mu: int
    c: str
    grading: GradingReport
    checks: dict[str, bool]
    iso_partner: str | None = None

    def to_json_obj(self) -> dict:
        return {
            "family": self.family.value,
            "params": {"m": self.params.m, "n": self.params.n, "l": self.params.l},
            "algebra_name": self.algebra_name,
            "M": self.M,
            "N": self.N,
            "D": self.D,
            "lambda": self.lam,
            "mu": self.mu,
            "c": self.c,
            "grading": self.grading.to_json_obj(),
            "checks": dict(sorted(self.checks.items())),
            "iso_partner": self.iso_partner,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> SolutionRecord:
        return cls(
            family=FamilyId(obj["family"]),
            params=FamilyParams(obj["params"]["m"], obj["params"]["n"], obj["params"]["l"]),
            algebra_name=obj["algebra_name"],
            M=obj["M"],
            N=obj["N"],
            D=obj["D"],
            lam=obj["lambda"],
            mu=obj["mu"],
            c=obj["c"],
            grading=GradingReport.from_json_obj(obj["grading"]),
            checks=dict(obj["checks"]),
            iso_partner=obj["iso_partner"],
        )


@dataclass(frozen=True)
class Catalog:
    """All solution records for one (N, D) query, sorted and duplicate-free."""

    N: int
    D: int
    max_rank: int
    records: tuple[SolutionRecord, ...]
    tool_version: str = TOOL_VERSION

    def to_json_obj(self) -> dict:
        return {
            "N": self.N,
            "D": self.D,
            "max_rank": self.max_rank,
            "records": [rec.to_json_obj() for rec in self.records],
            "tool_version": self.tool_version,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> Catalog:
        return cls(
            N=obj["N"],
            D=obj["D"],
            max_rank=obj["max_rank"],
            records=tuple(SolutionRecord.from_json_obj(rec) for rec in obj["records"]),
            tool_version=obj["tool_version"],
        )


def family_parameter_sets(N: int, D: int, max_rank: int) -> list[tuple[FamilyId, FamilyParams]]:
    """All (family, params) tuples whose pair count equals N*D, ranks <= max_rank."""
    if N < 1 or D < 1:
        raise ValueError(f"need N >= 1 and D >= 1, got N={N}, D={D}")
    if max_rank < 1:
        raise ValueError(f"need max_rank >= 1, got {max_rank}")
    target = N * D
    found: list[tuple[FamilyId, FamilyParams]] = []

    sl_pairs = [
        (m, target // m)
        for m in range(1, max_rank + 1)
        if target % m == 0 and target // m <= max_rank and m != target // m
    ]
    for m, n in sl_pairs:
        found.append((FamilyId.SL3, FamilyParams(m, n)))
        for family, top in ((FamilyId.SL5A, m), (FamilyId.SL5B, n)):
            for l in range(1, top):
                params = FamilyParams(m, n, l)
                try:
                    validate_params(family, params)
                except ValueError:
                    continue
                found.append((family, params))

    for m in range(0, max_rank + 1):
        if target % (2 * m + 1) == 0:
            n = target // (2 * m + 1)
            if 1 <= n <= max_rank:
                found.append((FamilyId.OSPB, FamilyParams(m, n)))

    if target % 2 == 0:
        half = target // 2
        for m in range(1, max_rank + 1):
            if half % m == 0:
                n = half // m
                if 1 <= n <= max_rank:
                    found.append((FamilyId.OSPD1, FamilyParams(m, n)))
                    found.append((FamilyId.OSPD2, FamilyParams(m, n)))

    found.sort(key=lambda item: _sort_key(*item))
    return found


def run_checks(caos: CaoSet, seed: int = 0) -> tuple[dict[str, bool], GradingReport, RadElement]:
    """Family-appropriate verifier battery; returns (checks, grading, lambda).

    The triple-relations check applies to sl3 and the osp families; the
    split sl families carry no such closed relation set, their verified
    content is the summed scalar identity.  The adjoint survey is recorded
    but informational: it may be false on a perfectly valid record.
    """
    checks: dict[str, bool] = {}
    if caos.family is FamilyId.SL3:
        checks["triple_relations"] = check_sl_triple(caos).passed
    elif caos.family in OSP_FAMILIES:
        checks["triple_relations"] = check_osp_triple(caos).passed
    lam, cc_report = cc_scalar(caos)
    checks["cc_scalar"] = cc_report.passed
    checks["cc_usable"] = bool(lam)
    grading = grading_analysis(caos)
    checks["grading_closure"] = grading.closure_ok
    checks["parity_consistent"] = grading.parity_consistent
    checks["super_jacobi"] = superjacobi_sample(caos, seed, _JACOBI_SAMPLES).passed
    checks["dagger_defining"] = dagger_report(caos).passed
    if caos.family is FamilyId.OSPB and caos.params.m == 0:
        checks["para_bose"] = check_parabose(parabose_ops(caos)).passed
    return checks, grading, lam


def build_record(
    family: FamilyId,
    params: FamilyParams,
    N: int,
    D: int,
    seed: int = 0,
) -> SolutionRecord:
    """Construct, verify and package one catalog entry."""
    caos = build(family, params)
    if len(caos) != N * D:
        raise ValueError(f"family pair count {len(caos)} does not match N*D = {N * D}")
    checks, grading, lam = run_checks(caos, seed)
    mu, c = derive_mu_c(lam)
    iso_partner = None
    if family in SL_FAMILIES:
        iso_partner = f"sl({params.n}|{params.m})"
    return SolutionRecord(
        family=family,
        params=params,
        algebra_name=caos.algebra_name,
        M=len(caos),
        N=N,
        D=D,
        lam=str(lam),
        mu=mu,
        c=str(c),
        grading=grading,
        checks=checks,
        iso_partner=iso_partner,
    )


def enumerate_solutions(N: int, D: int, max_rank: int = 8, seed: int = 0) -> Catalog:
    """Verified records for every family instance with pair count N*D."""
    records = tuple(
        build_record(family, params, N, D, seed)
        for family, params in family_parameter_sets(N, D, max_rank)
    )
    return Catalog(N=N, D=D, max_rank=max_rank, records=records)


def catalog_json(catalog: Catalog) -> str:
    """Byte-deterministic serialization: sorted keys, two-space indent, one trailing newline."""
    return json.dumps(catalog.to_json_obj(), indent=2, sort_keys=True) + "\n"
