"""Pawlak lower and upper approximations and the accuracy/roughness pair."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, Subset, _same_universe, popcount


@dataclass(frozen=True)
class ApproximationResult:
    lower: Subset
    upper: Subset

    @property
    def boundary(self) -> Subset:
        return self.upper - self.lower

    @property
    def exact(self) -> bool:
        return self.lower.mask == self.upper.mask

    def to_dict(self) -> dict:
        accuracy = accuracy_ratio(self.lower.mask, self.upper.mask)
        return {
            "lower": self.lower.labels,
            "upper": self.upper.labels,
            "boundary": self.boundary.labels,
            "exact": self.exact,
            "accuracy": float(accuracy),
            "roughness": float(1 - accuracy),
            "accuracy_exact": str(accuracy),
            "roughness_exact": str(1 - accuracy),
        }


def lower_upper_masks(blocks: tuple[int, ...], mask: int) -> tuple[int, int]:
    """Lower and upper approximation bitmasks of ``mask`` under ``blocks``."""
    lower = upper = 0
    for c in blocks:
        if c & mask:
            upper |= c
            if c & ~mask == 0:
                lower |= c
    return lower, upper


def accuracy_ratio(lower: int, upper: int) -> Fraction:
    if upper == 0:
        return Fraction(1)
    return Fraction(popcount(lower), popcount(upper))


def approximate(p: Partition, a: Subset) -> ApproximationResult:
    """Union of blocks inside ``a`` and union of blocks meeting ``a``."""
    _same_universe(p.universe, a.universe)
    lower, upper = lower_upper_masks(p.blocks, a.mask)
    return ApproximationResult(Subset(p.universe, lower), Subset(p.universe, upper))


def is_exact(p: Partition, a: Subset) -> bool:
    """True iff ``a`` is a (possibly empty) union of blocks of ``p``."""
    _same_universe(p.universe, a.universe)
    lower, upper = lower_upper_masks(p.blocks, a.mask)
    return lower == upper


def pawlak_accuracy(p: Partition, a: Subset) -> Fraction:
    """``|lower| / |upper|`` as an exact fraction, with accuracy 1 on the empty set."""
    _same_universe(p.universe, a.universe)
    return accuracy_ratio(*lower_upper_masks(p.blocks, a.mask))


def pawlak_roughness(p: Partition, a: Subset) -> Fraction:
    return 1 - pawlak_accuracy(p, a)
