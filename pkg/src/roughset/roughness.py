"""Roughness measures, the strong Pawlak composition, and exhaustive axiom checks.

A roughness measure assigns every (partition, subset) pair a value in
``[0, 1]``.  :func:`strong_pawlak` scales Pawlak roughness by a normalised
partition measure; the verifiers below sweep every partition and every subset
of a small universe and collect counterexamples to each axiom.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from .approximation import lower_upper_masks, pawlak_roughness
from .measures import CATALOG as PARTITION_MEASURES
from .measures import InvalidMeasureError, PartitionMeasureSpec
from .partitions import (
    Partition,
    Subset,
    Universe,
    enumerate_partitions,
    isomorphic_pairs,
    isomorphism_witness,
    is_isomorphism,
    is_strict_monomorphism,
    signature,
    strict_refinement_pairs,
)
from .report import AxiomReport, epsilon


@dataclass(frozen=True)
class RoughnessMeasureSpec:
    name: str
    evaluate: Callable[[Partition, Subset], float]
    partition_measure: PartitionMeasureSpec | None = None
    description: str = ""

    def __call__(self, p: Partition, a: Subset) -> float:
        return self.evaluate(p, a)


def pawlak(p: Partition, a: Subset) -> float:
    return float(pawlak_roughness(p, a))


def indicator(p: Partition, a: Subset) -> float:
    """0 on exact sets, 1 on every other set."""
    lower, upper = lower_upper_masks(p.blocks, a.mask)
    return 0.0 if lower == upper else 1.0


def strong_pawlak(h: PartitionMeasureSpec, name: str | None = None) -> RoughnessMeasureSpec:
    """Pawlak roughness scaled by ``h(p) / h(trivial)``."""

    @lru_cache(maxsize=None)
    def normaliser(u: Universe) -> float:
        top = h.max_on(u)
        if not top > 0:
            raise InvalidMeasureError(f"{h.name} vanishes on the trivial partition of a {u.n}-element universe")
        return top

    def evaluate(p: Partition, a: Subset) -> float:
        return float(pawlak_roughness(p, a)) * h.evaluate(p) / normaliser(p.universe)

    return RoughnessMeasureSpec(name or f"strong-pawlak[{h.name}]", evaluate, h, f"Pawlak roughness scaled by {h.name}")


def named_measures() -> dict[str, RoughnessMeasureSpec]:
    """The seven roughness measures exposed by name."""
    catalog = {
        "beta_P": RoughnessMeasureSpec("beta_P", pawlak, description="Pawlak roughness 1 - |lower|/|upper|"),
        "indicator": RoughnessMeasureSpec("indicator", indicator, description="0 on exact sets, 1 otherwise"),
    }
    for name, measure in (
        ("beta_X", "graph-connectivity"),
        ("beta_L", "granulation"),
        ("beta_E", "co-entropy"),
        ("beta_Eprime", "pseudo-co-entropy"),
        ("beta_CG", "combination-granulation"),
    ):
        catalog[name] = strong_pawlak(PARTITION_MEASURES[measure], name)
    return catalog


STRONG_PAWLAK_NAMES = ("beta_X", "beta_L", "beta_E", "beta_Eprime", "beta_CG")


def get_roughness(name: str) -> RoughnessMeasureSpec:
    catalog = named_measures()
    try:
        return catalog[name]
    except KeyError:
        raise KeyError(f"unknown roughness measure {name!r}; choose from {', '.join(catalog)}") from None


class _Sweep:
    """Every partition of a universe with the measure tabulated on every subset."""

    def __init__(self, b: RoughnessMeasureSpec, u: Universe):
        self.u = u
        self.parts = list(enumerate_partitions(u))
        subsets = list(u.subsets())
        self.masks = range(1 << u.n)
        self.values = [[b.evaluate(p, a) for a in subsets] for p in self.parts]
        self.approx = [[lower_upper_masks(p.blocks, m) for m in self.masks] for p in self.parts]

    def exact(self, i: int, mask: int) -> bool:
        lower, upper = self.approx[i][mask]
        return lower == upper

    def labels(self, mask: int) -> str:
        return Subset(self.u, mask).render()

    def entry(self, kind: str, i: int, j: int | None, masks: list[int], values: list[float]) -> dict:
        return {
            "kind": kind,
            "partition_a": self.parts[i].render(),
            "partition_b": None if j is None else self.parts[j].render(),
            "subsets": [self.labels(m) for m in masks],
            "values": values,
        }


def _check_range(sweep: _Sweep, result, eps: float) -> None:
    for i, row in enumerate(sweep.values):
        for m, v in enumerate(row):
            if v < -eps or v > 1 + eps:
                result.record(sweep.entry("out-of-unit-interval", i, None, [m], [v]))


def _check_zero_iff_exact(sweep: _Sweep, result, eps: float) -> None:
    for i, row in enumerate(sweep.values):
        for m, v in enumerate(row):
            zero = abs(v) <= eps
            if zero != sweep.exact(i, m):
                kind = "zero-on-inexact-set" if zero else "nonzero-on-exact-set"
                result.record(sweep.entry(kind, i, None, [m], [v]))


def _check_isomorphism_invariance(sweep: _Sweep, result, eps: float) -> None:
    for i, j in isomorphic_pairs(sweep.parts):
        f = isomorphism_witness(sweep.parts[i], sweep.parts[j])
        assert is_isomorphism(f, sweep.parts[i], sweep.parts[j])
        for m in sweep.masks:
            fm = f.image_mask(m)
            a, b = sweep.values[i][m], sweep.values[j][fm]
            if abs(a - b) > eps:
                result.record(sweep.entry("isomorphism-variant", i, j, [m, fm], [a, b]))


def _check_zero_only_on_discrete(sweep: _Sweep, result, eps: float) -> None:
    for i, p in enumerate(sweep.parts):
        all_zero = all(abs(v) <= eps for v in sweep.values[i])
        is_discrete = len(p.blocks) == p.n
        if all_zero != is_discrete:
            kind = "identically-zero-off-discrete" if all_zero else "nonzero-on-discrete"
            result.record(sweep.entry(kind, i, None, [], []))


def verify_roughness_axioms(b: RoughnessMeasureSpec, u: Universe) -> AxiomReport:
    """Check the three roughness-measure axioms on every partition and subset of ``u``.

    D2.1: value 0 exactly on exact sets.  D2.2: for ``pi < sigma`` the value
    never decreases and strictly increases on some subset.  D2.3: values are
    preserved by an explicit block-matching isomorphism for every pair of
    same-signature partitions.  ``range`` checks the unit interval.
    """
    start = time.perf_counter()
    eps = epsilon()
    sweep = _Sweep(b, u)
    report = AxiomReport(b.name, u.n, "roughness")

    _check_range(sweep, report.axiom("range", "0 <= beta <= 1"), eps)
    _check_zero_iff_exact(sweep, report.axiom("D2.1", "beta(pi, A) = 0 iff A is pi-exact"), eps)

    monotone = report.axiom("D2.2", "pi < sigma implies beta(pi, .) <= beta(sigma, .) and differs somewhere")
    for i, j in strict_refinement_pairs(sweep.parts):
        lo, hi = sweep.values[i], sweep.values[j]
        bad = [m for m in sweep.masks if lo[m] > hi[m] + eps]
        for m in bad:
            monotone.record(sweep.entry("decrease-under-coarsening", i, j, [m], [lo[m], hi[m]]))
        if not bad and not any(hi[m] - lo[m] > eps for m in sweep.masks):
            monotone.record(sweep.entry("no-strict-increase", i, j, [], []))

    _check_isomorphism_invariance(sweep, report.axiom("D2.3", "isomorphisms preserve roughness"), eps)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_weak_roughness_axioms(b: RoughnessMeasureSpec, u: Universe) -> AxiomReport:
    """Check the weak roughness-measure axioms.

    Monotonicity (D3.2) is pointwise ``<=`` for every ``pi <= sigma``.  D3.4
    requires the measure to vanish identically exactly on the discrete
    partition.
    """
    start = time.perf_counter()
    eps = epsilon()
    sweep = _Sweep(b, u)
    report = AxiomReport(b.name, u.n, "weak")

    _check_range(sweep, report.axiom("range", "0 <= beta <= 1"), eps)
    _check_zero_iff_exact(sweep, report.axiom("D3.1", "beta(pi, A) = 0 iff A is pi-exact"), eps)

    monotone = report.axiom("D3.2", "pi <= sigma implies beta(pi, A) <= beta(sigma, A)")
    for i, j in strict_refinement_pairs(sweep.parts):
        lo, hi = sweep.values[i], sweep.values[j]
        for m in sweep.masks:
            if lo[m] > hi[m] + eps:
                monotone.record(sweep.entry("decrease-under-coarsening", i, j, [m], [lo[m], hi[m]]))

    _check_isomorphism_invariance(sweep, report.axiom("D3.3", "isomorphisms preserve roughness"), eps)
    _check_zero_only_on_discrete(sweep, report.axiom("D3.4", "beta(pi, .) = 0 iff pi is discrete"), eps)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def check_propositions(b: RoughnessMeasureSpec, u: Universe) -> AxiomReport:
    """Check the derived properties that hold for strong Pawlak measures.

    P5 bounds, P6 vanishing exactly on the discrete partition, P7 maximal value
    only on the trivial partition (checked on nonempty proper subsets, the
    empty set being exact), P8.1/P8.2 intersection and union bounds, C3.3
    strict growth on sets inexact for the coarser partition, and P3 along
    strict monomorphisms built from every strict refinement.
    """
    start = time.perf_counter()
    eps = epsilon()
    sweep = _Sweep(b, u)
    full = u.full_mask
    report = AxiomReport(b.name, u.n, "propositions")

    _check_range(sweep, report.axiom("P5", "0 <= beta <= 1"), eps)
    _check_zero_only_on_discrete(sweep, report.axiom("P6", "beta(pi, .) = 0 iff pi is discrete"), eps)

    p7 = report.axiom("P7", "beta = 1 only on the trivial partition; trivial: 0 on U, 1 on nonempty proper A")
    for i, p in enumerate(sweep.parts):
        trivial = len(p.blocks) == 1
        for m in sweep.masks:
            v = sweep.values[i][m]
            if trivial:
                if m == full and abs(v) > eps:
                    p7.record(sweep.entry("nonzero-on-universe", i, None, [m], [v]))
                elif 0 < m < full and abs(v - 1) > eps:
                    p7.record(sweep.entry("not-one-on-proper-subset", i, None, [m], [v]))
            elif abs(v - 1) <= eps:
                p7.record(sweep.entry("one-off-trivial", i, None, [m], [v]))

    for axiom_id, side, combine, desc in (
        ("P8.1", 0, int.__and__, "equal lower approximations: beta(A & B) <= min"),
        ("P8.2", 1, int.__or__, "equal upper approximations: beta(A | B) <= min"),
    ):
        result = report.axiom(axiom_id, desc)
        for i in range(len(sweep.parts)):
            groups: dict[int, list[int]] = {}
            for m in sweep.masks:
                groups.setdefault(sweep.approx[i][m][side], []).append(m)
            row = sweep.values[i]
            for group in groups.values():
                for x in group:
                    for y in group:
                        if y < x:
                            continue
                        z = combine(x, y)
                        if row[z] > min(row[x], row[y]) + eps:
                            result.record(sweep.entry("bound-exceeded", i, None, [x, y, z], [row[x], row[y], row[z]]))

    pairs = strict_refinement_pairs(sweep.parts)
    c33 = report.axiom("C3.3", "pi < sigma and A not sigma-exact implies beta(pi, A) < beta(sigma, A)")
    for i, j in pairs:
        for m in sweep.masks:
            if not sweep.exact(j, m) and not sweep.values[j][m] - sweep.values[i][m] > eps:
                c33.record(sweep.entry("not-strict", i, j, [m], [sweep.values[i][m], sweep.values[j][m]]))

    p3 = report.axiom("P3", "strict monomorphism f: beta(pi, A) <= beta(sigma, f(A)), strict for some A")
    classes: dict[tuple[int, ...], list[int]] = {}
    for k, p in enumerate(sweep.parts):
        classes.setdefault(signature(p), []).append(k)
    for t, j in pairs:
        # any pi isomorphic to tau maps onto tau and then strictly into sigma
        for i in classes[signature(sweep.parts[t])]:
            f = isomorphism_witness(sweep.parts[i], sweep.parts[t])
            if not is_strict_monomorphism(f, sweep.parts[i], sweep.parts[j]):
                p3.record(sweep.entry("not-a-strict-monomorphism", i, j, [], []))
                continue
            strict = False
            for m in sweep.masks:
                fm = f.image_mask(m)
                a, c = sweep.values[i][m], sweep.values[j][fm]
                if a > c + eps:
                    p3.record(sweep.entry("decrease-along-monomorphism", i, j, [m, fm], [a, c]))
                strict = strict or c - a > eps
            if not strict:
                p3.record(sweep.entry("no-strict-increase", i, j, [], []))

    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
