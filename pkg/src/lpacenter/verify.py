"""Self-verification suite: machine-checks the emitted center elements and
the combinatorial characterizations against one graph.

Each check returns a named pass/fail result; the union of failures drives
the CLI exit status and the service response.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import lattice
from .boundary import sample_boundary_paths
from .center import (
    center_bruteforce,
    center_component_basis,
    center_zero_basis,
    center_zero_generators,
    nonzero_center_degrees,
)
from .cycles import cycles_without_exits, has_finite_entries
from .graphs import Graph, InfinitePathFamilyError, is_omega, simple_cycles
from .reports import VERIFY_SCHEMA
from .rings import QQ, Ring
from .steinberg import equals, indicator_of_pair, is_central
from .algebra import zero_element

DEFAULT_VERIFY_DEGREE = 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def run_property_suite(g: Graph, ring: Ring, max_degree: int = DEFAULT_VERIFY_DEGREE,
                       cap: Optional[int] = None) -> list[CheckResult]:
    checks = [
        _check_centrality(g, ring, max_degree, cap),
        _check_cycle_entry_equivalence(g),
        _check_decomposition_disjointness(g, cap),
        _check_orthogonality(g, ring, cap),
    ]
    if not simple_cycles(g) and not any(is_omega(b.multiplicity) for b in g.bundles):
        checks.append(_check_bruteforce_rank(g, cap))
    return checks


def _check_centrality(g, ring, max_degree, cap) -> CheckResult:
    bad = []
    for a in center_zero_generators(g, ring, cap) + center_zero_basis(g, ring, cap):
        if not is_central(a):
            bad.append(a.to_text())
    lengths = nonzero_center_degrees(g)
    for n in range(1, max_degree + 1):
        if not any(n % l == 0 for l in lengths):
            continue
        for a in center_component_basis(g, ring, n) + center_component_basis(g, ring, -n):
            if not is_central(a):
                bad.append(a.to_text())
    if bad:
        return CheckResult("centrality", False,
                           f"non-central elements: {'; '.join(bad)}")
    return CheckResult("centrality", True, "all emitted elements commute with "
                       "the generator cover")


def _check_cycle_entry_equivalence(g) -> CheckResult:
    for cc in cycles_without_exits(g):
        closure = lattice.saturated_hereditary_closure(g, cc.vertex_set(g))
        combinatorial = (lattice.satisfies_condition_f(g, closure)
                         and not lattice.breaking_vertices(g, closure))
        if has_finite_entries(g, cc) != combinatorial:
            return CheckResult(
                "cycle-entry-equivalence", False,
                f"class [{g.render_path(cc.representative)}] disagrees: "
                f"finite entries {has_finite_entries(g, cc)}, "
                f"closure verdict {combinatorial}")
    return CheckResult("cycle-entry-equivalence", True,
                       "finite entries match the closure criterion on every class")


def _check_decomposition_disjointness(g, cap) -> CheckResult:
    samples = sample_boundary_paths(g)
    for pair in lattice.enumerate_compact_pairs(g, cap):
        try:
            dec = lattice.decompose(g, pair.h, pair.s)
        except InfinitePathFamilyError as exc:
            return CheckResult("decomposition-disjointness", False,
                               f"compact pair failed to decompose: {exc}")
        if not dec.pairwise_disjoint(g):
            return CheckResult("decomposition-disjointness", False,
                               f"pieces overlap for H = {sorted(pair.h)}")
        for x in samples:
            if dec.contains(g, x) != lattice.invariant_set_contains(g, pair, x):
                return CheckResult(
                    "decomposition-disjointness", False,
                    f"membership mismatch at a sample point for H = {sorted(pair.h)}")
    return CheckResult("decomposition-disjointness", True,
                       "decompositions are disjoint and match direct membership")


def _check_orthogonality(g, ring, cap) -> CheckResult:
    minimal = lattice.minimal_compact_pairs(g, cap)
    indicators = [indicator_of_pair(g, ring, p.h, p.s) for p in minimal]
    for i, a in enumerate(indicators):
        if not equals(a * a, a):
            return CheckResult("orthogonality", False,
                               f"indicator {a.to_text()} is not idempotent")
        for j, b in enumerate(indicators):
            if i != j and not equals(a * b, zero_element(g, ring)):
                return CheckResult(
                    "orthogonality", False,
                    f"minimal indicators {a.to_text()} and {b.to_text()} "
                    "do not multiply to zero")
    for pair in lattice.enumerate_compact_pairs(g, cap):
        total = zero_element(g, ring)
        for q, ind in zip(minimal, indicators):
            if q.h <= pair.h:
                total = total + ind
        target = (indicator_of_pair(g, ring, pair.h, pair.s) if pair.h
                  else zero_element(g, ring))
        if not equals(target, total):
            return CheckResult(
                "orthogonality", False,
                f"indicator of H = {sorted(pair.h)} is not the sum of the "
                "minimal indicators below it")
    return CheckResult("orthogonality", True,
                       "minimal indicators are orthogonal idempotents summing "
                       "to each compact indicator")


def _check_bruteforce_rank(g, cap) -> CheckResult:
    result = center_bruteforce(g, QQ)
    expected = len(lattice.minimal_compact_pairs(g, cap))
    if result.rank0 != expected:
        return CheckResult("bruteforce-rank", False,
                           f"linear-algebra center rank {result.rank0} != "
                           f"{expected} minimal compact pairs")
    stray = {n: d for n, d in result.degree_dims.items() if n != 0 and d != 0}
    if stray:
        return CheckResult("bruteforce-rank", False,
                           f"unexpected central components in degrees {sorted(stray)}")
    return CheckResult("bruteforce-rank", True,
                       f"rank {result.rank0} matches the minimal compact pairs; "
                       "no component outside degree zero")


def build_verify_report(g: Graph, ring: Ring,
                        max_degree: int = DEFAULT_VERIFY_DEGREE,
                        cap: Optional[int] = None) -> dict:
    checks = run_property_suite(g, ring, max_degree, cap)
    failures = [c.name for c in checks if not c.passed]
    return {
        "schema_version": VERIFY_SCHEMA,
        "ring": ring.name,
        "passed": not failures,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in checks],
        "failures": failures,
    }


def render_verify_text(report: dict) -> str:
    lines = []
    for c in report["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"{mark}  {c['name']}: {c['detail']}")
    lines.append("all checks passed" if report["passed"]
                 else f"failed: {', '.join(report['failures'])}")
    return "\n".join(lines) + "\n"
