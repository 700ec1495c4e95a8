"""Exhaustive-search oracles for minimum total covers and dominating sets.

These are deliberately plain: candidate sets are enumerated by increasing
cardinality, in lexicographic order, and tested one by one.  Their value
is obvious correctness and independence from the approximation code, not
speed; guards keep accidental blowups in check.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .graph import (
    BudgetExceededError,
    ElementSet,
    Graph,
    TooLargeError,
    first_uncovered,
    total_graph,
)


@dataclass(frozen=True)
class SearchLimits:
    """Guards for the exhaustive searches.

    ``start_size`` defaults to 0 so the search is independent of any
    lower-bound reasoning; callers may raise it (e.g. to a certified
    lower bound) to save time at the cost of that independence.
    """

    max_elements: int = 32
    max_candidates: int = 100_000_000
    start_size: int = 0

    def __post_init__(self):
        if self.max_elements < 0 or self.max_candidates < 0 or self.start_size < 0:
            raise ValueError("search limits must be non-negative")


@dataclass(frozen=True)
class ExactResult:
    """A provably minimum set, with search statistics."""

    optimum: ElementSet
    size: int
    candidates_checked: int
    elapsed: float


@dataclass(frozen=True)
class TotalGraphCrossCheck:
    """Minimum total cover size vs. minimum dominating set size of the
    total graph, computed through two independent code paths."""

    total_cover_size: int
    total_graph_domination_size: int
    agree: bool


def exact_total_cover(g: Graph, limits: SearchLimits | None = None) -> ExactResult:
    """Minimum total cover by staged exhaustive search.

    Enumerates candidate subsets of V + E (vertices first, then edges) at
    cardinality start_size, start_size + 1, ... and returns the first one
    that covers everything, so the returned set is the lexicographically
    first optimum.
    """
    limits = limits or SearchLimits()
    n = g.n
    total = n + len(g.edges)
    if total > limits.max_elements:
        raise TooLargeError(
            f"{total} elements exceeds max_elements={limits.max_elements}"
        )
    start = time.perf_counter()
    checked = 0
    for s in range(limits.start_size, total + 1):
        for combo in itertools.combinations(range(total), s):
            checked += 1
            if checked > limits.max_candidates:
                raise BudgetExceededError(
                    f"exceeded max_candidates={limits.max_candidates} at cardinality {s}",
                    cardinality_reached=s,
                )
            vertex_ids = {i for i in combo if i < n}
            edge_ids = {i - n for i in combo if i >= n}
            if first_uncovered(g, vertex_ids, edge_ids) is None:
                optimum = ElementSet.of(g, vertices=sorted(vertex_ids), edges=sorted(edge_ids))
                return ExactResult(optimum, s, checked, time.perf_counter() - start)
    raise AssertionError("search exhausted; the full element set always covers")


def exact_dominating_set(g: Graph, limits: SearchLimits | None = None) -> ExactResult:
    """Minimum dominating set by the same staged search over vertex subsets.

    A set dominates when every vertex is a member or adjacent to one.
    The domination test is coded here directly, sharing nothing with the
    covering predicate, so cross-checks between the two oracles are
    meaningful.
    """
    limits = limits or SearchLimits()
    n = g.n
    if n > limits.max_elements:
        raise TooLargeError(f"{n} vertices exceeds max_elements={limits.max_elements}")
    adj = g.adj
    start = time.perf_counter()
    checked = 0
    for s in range(limits.start_size, n + 1):
        for combo in itertools.combinations(range(n), s):
            checked += 1
            if checked > limits.max_candidates:
                raise BudgetExceededError(
                    f"exceeded max_candidates={limits.max_candidates} at cardinality {s}",
                    cardinality_reached=s,
                )
            members = set(combo)
            if all(
                w in members or any(u in members for u in adj[w])
                for w in range(n)
            ):
                return ExactResult(
                    ElementSet.of(g, vertices=combo), s, checked, time.perf_counter() - start
                )
    raise AssertionError("search exhausted; the full vertex set always dominates")


def cross_check_total_graph(g: Graph, limits: SearchLimits | None = None) -> TotalGraphCrossCheck:
    """Check that the minimum total cover of ``g`` has the same size as a
    minimum dominating set of the total graph of ``g``."""
    cover_size = exact_total_cover(g, limits).size
    tg, _ = total_graph(g)
    domination_size = exact_dominating_set(tg, limits).size
    return TotalGraphCrossCheck(cover_size, domination_size, cover_size == domination_size)
