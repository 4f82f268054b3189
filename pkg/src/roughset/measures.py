"""Partition measures: nonnegative valuations that grow strictly under coarsening.

All logarithms are base 2, and ``0 log 0 = 0``.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable
from dataclasses import dataclass

from .partitions import (
    Partition,
    Universe,
    discrete_partition,
    enumerate_partitions,
    isomorphic_pairs,
    isomorphism_witness,
    is_isomorphism,
    strict_refinement_pairs,
    trivial_partition,
)
from .report import AxiomReport, epsilon


class InvalidMeasureError(ValueError):
    """Raised when a measure cannot be evaluated or normalised."""


def _xlog2x(x: int) -> float:
    return x * math.log2(x) if x > 0 else 0.0


@dataclass(frozen=True)
class PartitionMeasureSpec:
    """A named valuation of partitions.

    ``max_on`` gives the value on the trivial partition of a universe; when
    omitted it is obtained by evaluating the trivial partition, which keeps
    ``evaluate(trivial) == max_on(u)`` exact.
    """

    name: str
    evaluate: Callable[[Partition], float]
    max_formula: Callable[[Universe], float] | None = None
    description: str = ""

    def __call__(self, p: Partition) -> float:
        return self.evaluate(p)

    def max_on(self, u: Universe) -> float:
        return self.evaluate(trivial_partition(u))


def granulation(p: Partition) -> float:
    """Sum of squared block sizes (knowledge granulation times ``|U|^2``)."""
    return float(sum(c * c for c in p.sizes()))


def co_entropy(p: Partition) -> float:
    """``(1/|U|) sum |C| log|C|``."""
    return sum(_xlog2x(c) for c in p.sizes()) / p.n


def entropy(p: Partition) -> float:
    """Shannon entropy of the block-size distribution."""
    n = p.n
    return -sum((c / n) * math.log2(c / n) for c in p.sizes())


def pseudo_co_entropy(p: Partition) -> float:
    """``(1/|U|) sum |C|^2 log|C|``."""
    return sum(c * _xlog2x(c) for c in p.sizes()) / p.n


def combination_granulation(p: Partition) -> float:
    n = p.n
    if n < 2:
        raise InvalidMeasureError("combination granulation needs a universe of at least two elements")
    return sum(c * c * (c - 1) for c in p.sizes()) / (n * n * (n - 1))


def graph_connectivity(p: Partition) -> float:
    """Connectivity ``con(G(p))`` of the equivalence-relation graph.

    The graph has the relation pairs (loops included) as directed edges and a
    binary vertex-by-edge incidence matrix.  All rows of the full matrix are
    distinct, so its description length is ``n log n``.  The subgraph kept for
    a vertex ``v`` in a block of size ``k`` has ``k`` distinct nonzero rows and
    ``n - k`` zero rows, giving ``n log n - (n - k) log(n - k)``.  Summing over
    vertices and subtracting the full-graph length collapses to::

        n (n - 1) log n - sum_C |C| (n - |C|) log(n - |C|)

    Growth is strict under every merge only for ``n >= 3``: on two elements
    both partitions score exactly 2.
    """
    n = p.n
    if n < 2:
        raise InvalidMeasureError("graph connectivity needs a universe of at least two elements")
    return n * (n - 1) * math.log2(n) - sum(c * _xlog2x(n - c) for c in p.sizes())


CATALOG: dict[str, PartitionMeasureSpec] = {
    spec.name: spec
    for spec in (
        PartitionMeasureSpec("granulation", granulation, lambda u: float(u.n**2), "sum of squared block sizes"),
        PartitionMeasureSpec("co-entropy", co_entropy, lambda u: math.log2(u.n), "co-entropy E"),
        PartitionMeasureSpec(
            "pseudo-co-entropy", pseudo_co_entropy, lambda u: u.n * math.log2(u.n), "pseudo co-entropy E'"
        ),
        PartitionMeasureSpec("combination-granulation", combination_granulation, lambda u: 1.0, "combination granulation CG"),
        PartitionMeasureSpec(
            "graph-connectivity",
            graph_connectivity,
            lambda u: u.n * (u.n - 1) * math.log2(u.n),
            "connectivity of the equivalence-relation graph",
        ),
    )
}


def get_measure(name: str) -> PartitionMeasureSpec:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown partition measure {name!r}; choose from {', '.join(CATALOG)}") from None


def verify_partition_measure(h: PartitionMeasureSpec, u: Universe) -> AxiomReport:
    """Exhaustively check that ``h`` is a partition measure on ``u``.

    Checked: nonnegativity, strict growth along every strictly comparable pair,
    equal values across each explicit isomorphism between same-signature
    partitions, and the endpoint bounds ``h(discrete) <= h <= h(trivial)``.
    """
    start = time.perf_counter()
    eps = epsilon()
    parts = list(enumerate_partitions(u))
    values = [h.evaluate(p) for p in parts]
    report = AxiomReport(h.name, u.n, "partition-measure")

    nonneg = report.axiom("range", "h(pi) >= 0")
    for p, v in zip(parts, values):
        if not v >= -eps:
            nonneg.record({"kind": "negative", "partition_a": p.render(), "partition_b": None, "values": [v]})

    monotone = report.axiom("D4.1", "pi < sigma implies h(pi) < h(sigma)")
    for i, j in strict_refinement_pairs(parts):
        if not values[j] - values[i] > eps:
            monotone.record(
                {
                    "kind": "not-strictly-increasing",
                    "partition_a": parts[i].render(),
                    "partition_b": parts[j].render(),
                    "values": [values[i], values[j]],
                }
            )

    invariant = report.axiom("D4.2", "isomorphic partitions have equal measure")
    for i, j in isomorphic_pairs(parts):
        f = isomorphism_witness(parts[i], parts[j])
        assert is_isomorphism(f, parts[i], parts[j])
        if abs(values[i] - values[j]) > eps:
            invariant.record(
                {
                    "kind": "isomorphism-variant",
                    "partition_a": parts[i].render(),
                    "partition_b": parts[j].render(),
                    "values": [values[i], values[j]],
                }
            )

    bounds = report.axiom("C1.2", "h(discrete) <= h(pi) <= h(trivial)")
    low = h.evaluate(discrete_partition(u))
    high = h.evaluate(trivial_partition(u))
    for p, v in zip(parts, values):
        if v < low - eps or v > high + eps:
            bounds.record({"kind": "outside-endpoints", "partition_a": p.render(), "partition_b": None, "values": [low, v, high]})

    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
