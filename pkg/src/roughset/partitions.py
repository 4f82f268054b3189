"""Finite universes, partitions, the refinement order and structure-preserving maps.

Elements of a :class:`Universe` are addressed by dense indices ``0..n-1``.
Subsets and partition blocks are stored as integer bitmasks over those
indices, so containment and intersection tests are single integer ops.

Isomorphism of approximation spaces
-----------------------------------
Two partitions of universes of equal size are isomorphic exactly when their
block-size multisets agree.  A bijection ``f`` with ``f`` and ``f^-1`` both
homomorphisms sends every block into a block and, applied backwards, every
block back into a block; because ``f`` is injective and blocks are disjoint
and covering, each block is mapped *onto* a block, which yields a
size-preserving bijection between blocks.  Conversely, when the multisets
agree, pairing blocks of equal size and matching their elements in any order
gives a bijection whose forward and inverse images both keep blocks intact.
:func:`exists_isomorphism` therefore compares signatures, and
:func:`isomorphism_witness` builds one explicit such bijection.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field

MAX_ENUMERATION_SIZE = 12


class UniverseMismatchError(ValueError):
    """Raised when operands live on different universes."""


class CapacityError(ValueError):
    """Raised when an exhaustive enumeration would exceed the supported size."""


class LiteralError(ValueError):
    """Raised for malformed partition or subset literals."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Universe:
    """An ordered, finite, nonempty set of distinctly labelled elements."""

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        if not labels:
            raise ValueError("a universe must contain at least one element")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            seen: set[str] = set()
            dupes = sorted({x for x in labels if x in seen or seen.add(x)})
            raise ValueError(f"duplicate element labels: {', '.join(dupes)}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @classmethod
    def of_size(cls, n: int) -> Universe:
        """The universe ``{1, ..., n}``."""
        return cls(tuple(str(i) for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LiteralError(f"unknown element label {label!r}") from None

    def subset(self, labels: Iterable[str]) -> Subset:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(self, mask)

    def subsets(self) -> Iterator[Subset]:
        """All ``2^n`` subsets, ordered by bitmask value."""
        for mask in range(1 << self.n):
            yield Subset(self, mask)


@dataclass(frozen=True)
class Subset:
    """A subset of a universe, held as a bitmask over element indices."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.universe.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside the universe")

    @property
    def members(self) -> frozenset[int]:
        return frozenset(bits(self.mask))

    @property
    def labels(self) -> list[str]:
        return [self.universe.labels[i] for i in bits(self.mask)]

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index and bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def issubset(self, other: Subset) -> bool:
        _same_universe(self.universe, other.universe)
        return self.mask & ~other.mask == 0

    def __and__(self, other: Subset) -> Subset:
        _same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask & other.mask)

    def __or__(self, other: Subset) -> Subset:
        _same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask | other.mask)

    def __sub__(self, other: Subset) -> Subset:
        _same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask & ~other.mask)

    def complement(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def render(self) -> str:
        return ",".join(self.labels)

    def __str__(self) -> str:
        return "{" + self.render() + "}"


def _same_universe(a: Universe, b: Universe) -> None:
    if a is not b and a != b:
        raise UniverseMismatchError("operands are defined on different universes")


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length()


@dataclass(frozen=True)
class Partition:
    """A partition of a universe into nonempty, disjoint, covering blocks.

    Blocks are bitmasks kept in canonical order (ascending smallest member),
    so two partitions are equal iff they have the same blocks.
    """

    universe: Universe
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = 0
        for block in self.blocks:
            if block <= 0:
                raise ValueError("partition blocks must be nonempty")
            if block & seen:
                raise ValueError("partition blocks must be pairwise disjoint")
            seen |= block
        if seen != self.universe.full_mask:
            missing = Subset(self.universe, self.universe.full_mask & ~seen)
            raise ValueError(f"blocks do not cover the universe; missing {missing}")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=_lowest_bit)))

    @classmethod
    def from_blocks(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> Partition:
        """Build a partition from blocks given as element labels."""
        return cls(universe, tuple(universe.subset(block).mask for block in blocks))

    @property
    def n(self) -> int:
        return self.universe.n

    def __len__(self) -> int:
        return len(self.blocks)

    def block_sets(self) -> list[frozenset[int]]:
        return [frozenset(bits(b)) for b in self.blocks]

    def block_of(self, index: int) -> int:
        for block in self.blocks:
            if block >> index & 1:
                return block
        raise IndexError(index)

    def sizes(self) -> list[int]:
        return [popcount(b) for b in self.blocks]

    def render(self) -> str:
        """Render as a partition literal, e.g. ``a1|a2,a3|a4,a5``."""
        labels = self.universe.labels
        return "|".join(",".join(labels[i] for i in bits(b)) for b in self.blocks)

    def __str__(self) -> str:
        return self.render()

    def __le__(self, other: Partition) -> bool:
        return refines(self, other)

    def __lt__(self, other: Partition) -> bool:
        return strictly_refines(self, other)


def trivial_partition(u: Universe) -> Partition:
    """The coarsest partition ``{U}``."""
    return Partition(u, (u.full_mask,))


def discrete_partition(u: Universe) -> Partition:
    """The finest partition, all singletons."""
    return Partition(u, tuple(1 << i for i in range(u.n)))


def partition_from_labeling(u: Universe, label: Callable[[int], Hashable] | Sequence[Hashable]) -> Partition:
    """Group elements by label; each preimage becomes one block."""
    get = label.__getitem__ if isinstance(label, Sequence) else label
    groups: dict[Hashable, int] = {}
    for i in range(u.n):
        key = get(i)
        groups[key] = groups.get(key, 0) | (1 << i)
    return Partition(u, tuple(groups.values()))


def refines(p: Partition, s: Partition) -> bool:
    """True iff every block of ``p`` lies inside some block of ``s``."""
    _same_universe(p.universe, s.universe)
    for c in p.blocks:
        # c meets exactly one block of s when it is contained in it
        d = s.block_of(_lowest_bit(c) - 1)
        if c & ~d:
            return False
    return True


def strictly_refines(p: Partition, s: Partition) -> bool:
    return refines(p, s) and p.blocks != s.blocks


def block_size_multiset(p: Partition) -> list[int]:
    """Block cardinalities, largest first."""
    return sorted(p.sizes(), reverse=True)


def signature(p: Partition) -> tuple[int, ...]:
    return tuple(block_size_multiset(p))


def bell_number(n: int) -> int:
    """Bell number via ``B_{k+1} = sum_j C(k, j) B_j`` with ``B_0 = 1``."""
    from math import comb

    if n < 0:
        raise ValueError("n must be nonnegative")
    bell = [1]
    for k in range(n):
        bell.append(sum(comb(k, j) * bell[j] for j in range(k + 1)))
    return bell[n]


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``n`` in lexicographic order.

    The yielded list is reused between iterations; copy it to keep it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = [0] * n
    b = [0] * n  # b[i] = max(a[0..i-1])
    while True:
        yield a
        j = n - 1
        while j > 0 and a[j] > b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        top = max(b[j], a[j])
        for k in range(j + 1, n):
            a[k] = 0
            b[k] = top


def enumerate_partitions(u: Universe) -> Iterator[Partition]:
    """Every partition of ``u`` exactly once, in restricted-growth-string order."""
    n = u.n
    if n > MAX_ENUMERATION_SIZE:
        raise CapacityError(
            f"partition enumeration supports universes of at most {MAX_ENUMERATION_SIZE} elements, got {n}"
        )

    def generate() -> Iterator[Partition]:
        for rgs in restricted_growth_strings(n):
            blocks = [0] * (max(rgs) + 1)
            for i, label in enumerate(rgs):
                blocks[label] |= 1 << i
            # RGS labels already order blocks by smallest member
            yield Partition(u, tuple(blocks))

    return generate()


def parse_partition(text: str, universe: Universe | None = None) -> Partition:
    """Parse a literal such as ``a1|a2,a3|a4,a5``.

    Without ``universe`` the element order is taken from the literal itself.
    """
    blocks = [[m.strip() for m in part.split(",")] for part in text.split("|")]
    for block in blocks:
        if any(m == "" for m in block):
            raise LiteralError(f"empty member or block in partition literal {text!r}")
    flat = [m for block in blocks for m in block]
    dupes = sorted({m for m in flat if flat.count(m) > 1})
    if dupes:
        raise LiteralError(f"duplicate labels in partition literal: {', '.join(dupes)}")
    if universe is None:
        universe = Universe(tuple(flat))
    elif len(flat) != universe.n:
        missing = [x for x in universe.labels if x not in set(flat)]
        for m in flat:
            universe.index(m)
        raise LiteralError(f"partition literal does not cover the universe; missing {', '.join(missing)}")
    return Partition(universe, tuple(universe.subset(b).mask for b in blocks))


def parse_subset(text: str, universe: Universe) -> Subset:
    """Parse a literal such as ``a1,a2,a3``; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return Subset(universe, 0)
    members = [m.strip() for m in text.split(",")]
    if any(m == "" for m in members):
        raise LiteralError(f"empty member in subset literal {text!r}")
    dupes = sorted({m for m in members if members.count(m) > 1})
    if dupes:
        raise LiteralError(f"duplicate labels in subset literal: {', '.join(dupes)}")
    return universe.subset(members)


@dataclass(frozen=True)
class ElementMap:
    """A total map between the elements of two universes."""

    source: Universe
    target: Universe
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        assignment = tuple(self.assignment)
        if len(assignment) != self.source.n:
            raise ValueError("element map must be total on its source universe")
        if any(not 0 <= j < self.target.n for j in assignment):
            raise ValueError("element map sends an element outside the target universe")
        object.__setattr__(self, "assignment", assignment)

    @classmethod
    def from_labels(cls, source: Universe, target: Universe, mapping: dict[str, str]) -> ElementMap:
        missing = [x for x in source.labels if x not in mapping]
        if missing:
            raise ValueError(f"element map is not total; unmapped: {', '.join(missing)}")
        return cls(source, target, tuple(target.index(mapping[x]) for x in source.labels))

    @classmethod
    def identity(cls, u: Universe) -> ElementMap:
        return cls(u, u, tuple(range(u.n)))

    @property
    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.source.n == self.target.n

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.assignment[i]
        return out

    def image(self, a: Subset) -> Subset:
        _same_universe(a.universe, self.source)
        return Subset(self.target, self.image_mask(a.mask))

    def image_partition(self, p: Partition) -> Partition:
        """``f(p)``; requires a bijection so the image is again a partition."""
        _same_universe(p.universe, self.source)
        if not self.is_bijective:
            raise ValueError("the image of a partition is a partition only under a bijection")
        return Partition(self.target, tuple(self.image_mask(b) for b in p.blocks))

    def inverse(self) -> ElementMap:
        if not self.is_bijective:
            raise ValueError("only bijections have an inverse")
        inv = [0] * self.target.n
        for i, j in enumerate(self.assignment):
            inv[j] = i
        return ElementMap(self.target, self.source, tuple(inv))


def _check_map(f: ElementMap, p: Partition, s: Partition) -> None:
    _same_universe(f.source, p.universe)
    _same_universe(f.target, s.universe)


def is_homomorphism(f: ElementMap, p: Partition, s: Partition) -> bool:
    """Every block of ``p`` is mapped into a single block of ``s``."""
    _check_map(f, p, s)
    for c in p.blocks:
        image = f.image_mask(c)
        d = s.block_of(_lowest_bit(image) - 1)
        if image & ~d:
            return False
    return True


def is_monomorphism(f: ElementMap, p: Partition, s: Partition) -> bool:
    return f.is_injective and is_homomorphism(f, p, s)


def is_strict_monomorphism(f: ElementMap, p: Partition, s: Partition) -> bool:
    """A monomorphism where some block's image is a proper subset of a block."""
    if not is_monomorphism(f, p, s):
        return False
    for c in p.blocks:
        image = f.image_mask(c)
        if image != s.block_of(_lowest_bit(image) - 1):
            return True
    return False


def is_isomorphism(f: ElementMap, p: Partition, s: Partition) -> bool:
    if not f.is_bijective or not is_homomorphism(f, p, s):
        return False
    return is_homomorphism(f.inverse(), s, p)


def exists_isomorphism(p: Partition, s: Partition) -> bool:
    """Decide isomorphism by comparing block-size multisets."""
    if p.n != s.n:
        return False
    return block_size_multiset(p) == block_size_multiset(s)


def isomorphism_witness(p: Partition, s: Partition) -> ElementMap:
    """One explicit isomorphism from ``p`` to ``s``.

    Blocks are matched in order of (size descending, smallest member) and
    elements inside matched blocks in index order.
    """
    if not exists_isomorphism(p, s):
        raise ValueError(f"{p} and {s} are not isomorphic")
    order = lambda b: (-popcount(b), _lowest_bit(b))  # noqa: E731
    assignment = [0] * p.n
    for c, d in zip(sorted(p.blocks, key=order), sorted(s.blocks, key=order)):
        for i, j in zip(bits(c), bits(d)):
            assignment[i] = j
    return ElementMap(p.universe, s.universe, tuple(assignment))


def strict_refinement_pairs(parts: Sequence[Partition]) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` with ``parts[i] < parts[j]``."""
    return [
        (i, j)
        for i, p in enumerate(parts)
        for j, s in enumerate(parts)
        if i != j and refines(p, s) and p.blocks != s.blocks
    ]


def isomorphic_pairs(parts: Sequence[Partition]) -> list[tuple[int, int]]:
    """Ordered index pairs ``(i, j)``, ``i != j``, of isomorphic partitions."""
    classes: dict[tuple[int, ...], list[int]] = {}
    for i, p in enumerate(parts):
        classes.setdefault(signature(p), []).append(i)
    return [(i, j) for members in classes.values() for i in members for j in members if i != j]
