"""Cross-validation sweeps: route agreement, operator commutativity and
positivity certification over families of multiset specs.

Specs are enumerated up to permutation of the multiplicity sequence (the
descent polynomial is invariant under reordering), canonicalized to
non-increasing order.  Results are merged in canonical spec order, so output
is byte-identical regardless of the worker count.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .enumeration import (
    BudgetExceeded,
    MultisetSpec,
    bivariate_brute,
    default_budget,
    descent_polynomial_brute,
)
from .gamma import (
    ExpansionType,
    ExpansionTypeMismatch,
    PositivityReport,
    classify_expansion_type,
    positivity_report,
)
from .macmahon import macmahon_polynomial, polynomiality_check
from .operators import commutator_is_zero, polynomial_via_operators
from .polys import BiPoly, UniPoly


def canonical_specs(max_m: int, multiplicity_set: Iterable[int]) -> list[MultisetSpec]:
    """All non-increasing multiplicity sequences with parts from the given
    set and total between 1 and max_m, in deterministic order."""
    parts = sorted(set(int(v) for v in multiplicity_set), reverse=True)
    if any(v < 1 for v in parts):
        raise ValueError("multiplicities must be positive")
    found: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], total: int, max_part: int):
        if prefix:
            found.append(prefix)
        for part in parts:
            if part <= max_part and total + part <= max_m:
                extend(prefix + (part,), total + part, part)

    extend((), 0, max(parts) if parts else 0)
    found.sort(key=lambda t: (sum(t), t))
    return [MultisetSpec(t) for t in found]


@dataclass
class SpecCheck:
    """Everything verified for a single spec."""

    spec: MultisetSpec
    word_count: int
    routes: list[str]
    routes_agree: bool
    polynomial: UniPoly
    bivariate: Optional[BiPoly]
    commutator_ok: Optional[bool]
    expansion_type: Optional[ExpansionType]
    report: PositivityReport
    mode_in_middle: bool
    bi_asserted: bool
    violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "spec": list(self.spec.multiplicities),
            "word_count": str(self.word_count),
            "routes": self.routes,
            "routes_agree": self.routes_agree,
            "polynomial": self.polynomial.to_json(),
            "bivariate": self.bivariate.to_json() if self.bivariate is not None else None,
            "commutator_ok": self.commutator_ok,
            "expansion_type": self.expansion_type.value if self.expansion_type else None,
            "report": self.report.to_json(),
            "mode_in_middle": self.mode_in_middle,
            "bi_asserted": self.bi_asserted,
            "violations": self.violations,
        }


def middle_modes(m: int) -> frozenset[int]:
    return frozenset({(m + 1) // 2, (m + 2) // 2, m // 2, (m + 1) // 2})


def check_spec(spec: MultisetSpec, budget: Optional[int] = None) -> SpecCheck:
    """Run every applicable route and structural check on one spec."""
    spec = spec.canonical()
    m = spec.m
    count = spec.word_count()
    violations: list[str] = []

    routes = ["macmahon"]
    by_route: dict[str, UniPoly] = {"macmahon": macmahon_polynomial(spec)}
    bivariate: Optional[BiPoly] = None
    bivariate_by_route: dict[str, BiPoly] = {}

    operator_eligible = m > 0 and all(v in (1, 2) for v in spec.multiplicities)
    if operator_eligible:
        poly_ops = polynomial_via_operators(spec)
        routes.append("operators")
        by_route["operators"] = poly_ops.set_y_to_one()
        bivariate_by_route["operators"] = poly_ops
        bivariate = poly_ops

    if m > 0:
        try:
            bivariate_by_route["enum"] = bivariate_brute(spec, budget)
            by_route["enum"] = bivariate_by_route["enum"].set_y_to_one()
            routes.append("enum")
            if bivariate is None:
                bivariate = bivariate_by_route["enum"]
        except BudgetExceeded:
            pass

    routes_agree = len(set(by_route.values())) == 1 and len(set(bivariate_by_route.values())) <= 1
    if not routes_agree:
        violations.append(f"routes disagree: { {r: repr(p) for r, p in by_route.items()} }")

    commutator_ok: Optional[bool] = None
    expansion_type: Optional[ExpansionType] = None
    if operator_eligible:
        commutator_ok = commutator_is_zero(bivariate_by_route["operators"])
        if not commutator_ok:
            violations.append("T and G fail to commute on A(x, y)")
        try:
            expansion_type = classify_expansion_type(spec, bivariate_by_route["operators"])
        except ExpansionTypeMismatch as exc:
            violations.append(str(exc))

    univariate = by_route["macmahon"]
    report = positivity_report(univariate, max(m, univariate.degree or 0))
    mode_ok = report.modes <= middle_modes(m)

    bi_asserted = operator_eligible
    if bi_asserted:
        if not report.bi_gamma_positive:
            violations.append("not bi-gamma-positive")
        if not report.alternatingly_increasing:
            violations.append("not alternatingly increasing")
        if not report.unimodal:
            violations.append("not unimodal")
        if not mode_ok:
            violations.append(f"modes {sorted(report.modes)} not in the middle")
        if expansion_type is ExpansionType.TYPE_I and report.decomposition.a:
            violations.append("all-1 spec should have a = 0 in the n=m decomposition")
        if expansion_type is ExpansionType.TYPE_II and report.decomposition.b:
            violations.append("all-2 spec should have b = 0 in the n=m decomposition")

    return SpecCheck(
        spec=spec,
        word_count=count,
        routes=sorted(routes),
        routes_agree=routes_agree,
        polynomial=univariate,
        bivariate=bivariate,
        commutator_ok=commutator_ok,
        expansion_type=expansion_type,
        report=report,
        mode_in_middle=mode_ok,
        bi_asserted=bi_asserted,
        violations=violations,
    )


def check_macmahon_vs_brute(spec: MultisetSpec, budget: Optional[int] = None) -> dict:
    """Worker for the wide-multiplicity agreement sweep: compares the
    generating-function route against full enumeration when affordable, and
    always validates series truncation with 8 extra terms."""
    result = {
        "spec": spec.multiplicities,
        "word_count": spec.word_count(),
        "enumerated": False,
        "agree": None,
        "polynomiality": polynomiality_check(spec, extra=8),
    }
    if spec.m == 0:
        return result
    try:
        brute = descent_polynomial_brute(spec, budget)
    except BudgetExceeded:
        return result
    result["enumerated"] = True
    result["agree"] = brute == macmahon_polynomial(spec)
    return result


@dataclass
class VerifySummary:
    max_m: int
    multiplicities: tuple[int, ...]
    budget: int
    results: list[SpecCheck]

    @property
    def violation_count(self) -> int:
        return sum(len(r.violations) for r in self.results)

    @property
    def first_violation(self) -> Optional[SpecCheck]:
        for r in self.results:
            if r.violations:
                return r
        return None

    def to_json(self) -> dict:
        first = self.first_violation
        return {
            "max_m": self.max_m,
            "multiplicities": list(self.multiplicities),
            "budget": str(self.budget),
            "spec_count": len(self.results),
            "violation_count": self.violation_count,
            "first_violation": first.to_json() if first else None,
            "results": [r.to_json() for r in self.results],
        }


def run_verify(
    max_m: int,
    multiplicities: Iterable[int] = (1, 2),
    budget: Optional[int] = None,
    jobs: int = 1,
) -> VerifySummary:
    """Sweep all canonical specs with total <= max_m and run check_spec on
    each, optionally sharded over a process pool."""
    multiplicities = tuple(sorted(set(int(v) for v in multiplicities)))
    if budget is None:
        budget = default_budget()
    specs = canonical_specs(max_m, multiplicities) if max_m >= 1 and multiplicities else []
    if jobs > 1 and len(specs) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_spec, specs, [budget] * len(specs)))
    else:
        results = [check_spec(spec, budget) for spec in specs]
    return VerifySummary(max_m, multiplicities, budget, results)
