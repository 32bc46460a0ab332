"""
Brute-force verification of the optimal-design results.

For each (n, utility) cell every graph on n nodes is solved exactly, the best
hider value is compared with the closed form, and the argmax graphs are run
through named structural checks.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from datetime import datetime
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from math import ceil
from typing import Callable, Iterable, Sequence

from django.conf import settings
from django.db import transaction
from django.utils import timezone

from closed_form.formulas import optimal_singletons, threshold_T
from designer.services import design_optimal
from graph_core.canonical import CanonicalKey, canonical_form
from graph_core.graphs import Graph, components, is_two_connected
from graph_core.structure import is_maximal_core_periphery, non_singleton_part
from matrix_game.services import MixedStrategy, max_row_weight
from payoff_engine.rationals import format_rational
from payoff_engine.services import payoff_matrix, residual_sizes
from payoff_engine.utilities import UtilitySpec

from .enumeration import enumerate_graphs
from .models import VerificationCell, VerificationRun
from .workers import CatalogueEntry, merge_chunks, solve_chunk

logger = logging.getLogger(__name__)

# Added to the closed-form value in mutation mode; any exact comparison must then fail.
MUTATION_OFFSET = Fraction(1, 997)

# Node count at which small components tie the optimal design.
TIED_SMALL_COMPONENT_N = 4


@dataclass(frozen=True)
class StructuralCheck:
    """
    A named pass/fail result. `known_tie` marks a pass whose detail lists
    graphs that break the claim but only tie a graph that satisfies it.
    """

    name: str
    passed: bool
    detail: str = ""
    known_tie: bool = False

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "known_tie": self.known_tie}


@dataclass(frozen=True)
class OptimalGraph:
    key: CanonicalKey
    hider: MixedStrategy

    @property
    def graph(self) -> Graph:
        n, edges = self.key
        return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    utility: UtilitySpec
    graph_count: int
    best_value: Fraction
    argmax: tuple[OptimalGraph, ...]
    closed_form_value: Fraction
    solved: int = 0
    pruned: int = 0
    structural_checks: tuple[StructuralCheck, ...] = ()

    @property
    def argmax_graphs(self) -> list[Graph]:
        return [item.graph for item in self.argmax]

    @property
    def argmax_keys(self) -> frozenset[CanonicalKey]:
        return frozenset(item.key for item in self.argmax)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.structural_checks)

    def failed_checks(self) -> list[StructuralCheck]:
        return [check for check in self.structural_checks if not check.passed]

    def known_ties(self) -> list[StructuralCheck]:
        return [check for check in self.structural_checks if check.known_tie]

    def to_dict(self) -> dict:
        exact = self.utility.exact
        data = {
            "n": self.n,
            "utility": self.utility.to_dict(),
            "graph_count": self.graph_count,
            "best_value": format_rational(self.best_value, exact),
            "closed_form_value": format_rational(self.closed_form_value, exact),
            "argmax_graphs": [sorted([i, j] for i, j in item.key[1]) for item in self.argmax],
            "solved": self.solved,
            "pruned": self.pruned,
            "structural_checks": [check.to_dict() for check in self.structural_checks],
            "passed": self.passed,
        }
        if not exact:
            data["float"] = True
        return data


@dataclass(frozen=True)
class VerificationSummary:
    reports: tuple[EnumerationReport, ...]
    grid_checks: tuple[StructuralCheck, ...] = ()
    mutated: bool = False

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports) and all(c.passed for c in self.grid_checks)

    @property
    def n_max(self) -> int:
        return max((r.n for r in self.reports), default=0)


# ----------------------------------------------------------------------------
# Exhaustive search
# ----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def catalogue(n: int) -> tuple[CatalogueEntry, ...]:
    """Every graph on n nodes with its utility-independent residual sizes."""
    entries = tuple(CatalogueEntry(canonical_form(g), g, residual_sizes(g)) for g in enumerate_graphs(n))
    logger.debug("catalogued %d graphs on %d nodes", len(entries), n)
    return entries


def worker_count(requested: int | None = None) -> int:
    """Requested workers, capped by HSNET_THREADS."""
    cap = settings.HSNET_THREADS
    return max(1, min(requested or cap, cap))


def closed_form_optimum(n: int, u: UtilitySpec, mutate: bool = False) -> Fraction:
    """-min_s Qbar(n, s); shifted by MUTATION_OFFSET in mutation mode."""
    _, q = optimal_singletons(n, u)
    if mutate:
        logger.warning("mutation mode: closed-form value for n=%d is deliberately wrong", n)
        return -q + MUTATION_OFFSET
    return -q


def exhaustive_optimum(
    n: int,
    u: UtilitySpec,
    workers: int | None = None,
    mutate: bool = False,
    checks: bool = True,
) -> EnumerationReport:
    """
    Best hider value over all graphs on n nodes and every graph attaining it.

    Graphs are split across worker processes; each worker prunes against its
    own best value and the chunk results are merged, so the report does not
    depend on the number of workers.

    Raises:
        ValidationError: if n exceeds the enumeration bound
    """
    entries = catalogue(n)
    count = worker_count(workers)
    if count == 1 or len(entries) < 2 * count:
        merged = solve_chunk(entries, u)
    else:
        chunks = [entries[i::count] for i in range(count)]
        with ProcessPoolExecutor(max_workers=count) as pool:
            merged = merge_chunks(list(pool.map(solve_chunk, chunks, [u] * count)))

    report = EnumerationReport(
        n=n,
        utility=u,
        graph_count=len(entries),
        best_value=merged.best_value,
        argmax=tuple(OptimalGraph(key, hider) for key, hider in merged.argmax),
        closed_form_value=closed_form_optimum(n, u, mutate),
        solved=merged.solved,
        pruned=merged.pruned,
    )
    logger.info(
        "n=%d %s: %d graphs, %d solved, best %s (closed form %s), %d optimal",
        n, u.label, report.graph_count, report.solved, report.best_value, report.closed_form_value, len(report.argmax),
    )
    if checks:
        report = run_structural_checks(report)
    return report


# ----------------------------------------------------------------------------
# Structural checks
# ----------------------------------------------------------------------------


def _singleton_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 0)


def _threshold_side(n: int, s: int, u: UtilitySpec) -> int | None:
    """Sign of T(n, s) - beta, or None when the component has fewer than four nodes."""
    if n - s < 4:
        return None
    t = threshold_T(n, s, u)
    return (t > u.beta) - (t < u.beta)


def _check_value(report: EnumerationReport) -> tuple[bool, str]:
    ok = report.best_value == report.closed_form_value
    return ok, "" if ok else f"best {report.best_value} != closed form {report.closed_form_value}"


def _check_design(report: EnumerationReport) -> tuple[bool, str]:
    design = design_optimal(report.n, report.utility, verify=False)
    ok = canonical_form(design.graph) in report.argmax_keys
    return ok, "" if ok else f"{design.topology} with s={design.s_star} is not optimal"


def _has_small_component(g: Graph) -> bool:
    return bool({2, 3} & set(components(g).sizes()))


def _check_small_components(report: EnumerationReport) -> tuple[bool, str, bool]:
    """
    No optimal graph has a component of 2 or 3 nodes.

    On four nodes the optimal path always ties two disjoint edges (both give
    (f(2) - beta) / 2), and an edge plus two singletons can tie as well. Such
    graphs are reported as a known tie as long as some optimal graph has no
    small component; anywhere else they fail the check.
    """
    bad = [g for g in report.argmax_graphs if _has_small_component(g)]
    detail = "; ".join(str(g) for g in bad)
    if bad and report.n == TIED_SMALL_COMPONENT_N and len(bad) < len(report.argmax):
        return True, f"known tie on {report.n} nodes: {detail}", True
    return not bad, detail, False


def _check_core_periphery(report: EnumerationReport) -> tuple[bool, str]:
    bad = []
    for g in report.argmax_graphs:
        s = _singleton_count(g)
        if _has_small_component(g):
            continue
        if _threshold_side(report.n, s, report.utility) == -1:
            if is_maximal_core_periphery(non_singleton_part(g).graph) is None:
                bad.append(g)
    return not bad, "; ".join(str(g) for g in bad)


def _check_two_connected(report: EnumerationReport) -> tuple[bool, str]:
    bad = []
    for g in report.argmax_graphs:
        s = _singleton_count(g)
        if _has_small_component(g):
            continue
        if _threshold_side(report.n, s, report.utility) == 1:
            part = non_singleton_part(g).graph
            degree_two = sum(1 for d in part.degrees() if d == 2)
            if not is_two_connected(part) or degree_two < ceil(part.node_count / 3):
                bad.append(g)
    return not bad, "; ".join(str(g) for g in bad)


def _check_hider_support(report: EnumerationReport) -> tuple[bool, str]:
    """
    Above the threshold the hider never uses nodes of degree > 2. The solver's
    strategy is always checked; every optimal strategy only for small n.
    """
    all_optima = report.n <= settings.HSNET_SUPPORT_CHECK_MAX_N
    bad = []
    for item in report.argmax:
        g = item.graph
        if _threshold_side(report.n, _singleton_count(g), report.utility) != 1:
            continue
        high = [i for i in g.nodes if g.degree(i) > 2]
        if any(item.hider[i] > 0 for i in high):
            bad.append(f"{g}: solver strategy uses a node of degree > 2")
        elif all_optima and high:
            matrix = payoff_matrix(g, report.utility)
            if any(max_row_weight(matrix, report.best_value, i) > 0 for i in high):
                bad.append(f"{g}: some optimal strategy uses a node of degree > 2")
    return not bad, "; ".join(bad)


# (passed, detail) or (passed, detail, known_tie)
CheckOutcome = tuple[bool, str] | tuple[bool, str, bool]

STRUCTURAL_CHECKS: dict[str, Callable[[EnumerationReport], CheckOutcome]] = {
    "closed_form_value": _check_value,
    "design_in_argmax": _check_design,
    "no_small_components": _check_small_components,
    "core_periphery_below_threshold": _check_core_periphery,
    "two_connected_above_threshold": _check_two_connected,
    "hider_avoids_high_degree": _check_hider_support,
}


def check_structure(
    report: EnumerationReport, predicate: str | Callable[[EnumerationReport], CheckOutcome]
) -> StructuralCheck:
    """Run one named check (or a custom predicate) against a report."""
    if isinstance(predicate, str):
        name, func = predicate, STRUCTURAL_CHECKS[predicate]
    else:
        name, func = predicate.__name__, predicate
    passed, detail, *tie = func(report)
    known_tie = bool(tie and tie[0])
    if not passed:
        logger.warning("n=%d %s: check %s failed: %s", report.n, report.utility.label, name, detail)
    elif known_tie:
        logger.info("n=%d %s: check %s: %s", report.n, report.utility.label, name, detail)
    return StructuralCheck(name, passed, detail, known_tie)


def run_structural_checks(report: EnumerationReport) -> EnumerationReport:
    checks = tuple(check_structure(report, name) for name in STRUCTURAL_CHECKS)
    return replace(report, structural_checks=checks)


def check_monotone_in_beta(reports: Iterable[EnumerationReport]) -> StructuralCheck:
    """A larger capture penalty never raises the best hider value."""

    def cell(r: EnumerationReport):
        return (r.n, r.utility.family, tuple(sorted(r.utility.params().items())))

    bad = []
    for key, group in groupby(sorted(reports, key=lambda r: (cell(r), r.utility.beta)), key=cell):
        values = [(r.utility.beta, r.best_value) for r in group]
        for (b1, v1), (b2, v2) in zip(values, values[1:]):
            if v2 > v1:
                bad.append(f"n={key[0]} {key[1]}: beta {b1} -> {b2} raised {v1} to {v2}")
    return StructuralCheck("monotone_in_beta", not bad, "; ".join(bad))


# ----------------------------------------------------------------------------
# Grid driver and run history
# ----------------------------------------------------------------------------


def verify_grid(
    n_values: Sequence[int],
    utilities: Sequence[UtilitySpec],
    workers: int | None = None,
    mutate: bool = False,
) -> VerificationSummary:
    reports = tuple(
        exhaustive_optimum(n, u, workers=workers, mutate=mutate) for n in n_values for u in utilities
    )
    summary = VerificationSummary(reports, (check_monotone_in_beta(reports),), mutated=mutate)
    failed = sum(1 for r in reports if not r.passed)
    logger.info("verified %d cells, %d failed", len(reports), failed)
    return summary


@transaction.atomic
def record_run(summary: VerificationSummary, grid: str, started_at: datetime | None = None) -> VerificationRun:
    """Store a verification run and one row per cell."""
    run = VerificationRun.objects.create(
        started_at=started_at or timezone.now(),
        finished_at=timezone.now(),
        n_max=summary.n_max,
        grid=grid,
        mutated=summary.mutated,
        passed=summary.passed,
    )
    VerificationCell.objects.bulk_create(
        VerificationCell(
            run=run,
            n=report.n,
            utility=report.utility.to_dict(),
            beta=format_rational(report.utility.beta),
            best_value=format_rational(report.best_value, report.utility.exact),
            closed_form_value=format_rational(report.closed_form_value, report.utility.exact),
            graph_count=report.graph_count,
            passed=report.passed,
            report=report.to_dict(),
        )
        for report in summary.reports
    )
    return run
