"""Subsets of {1..n} as fixed-width bit vectors, and explicit families of them.

A squarefree monomial in n variables is identified with its support, a
subset of {1, .., n}.  ``VarSet`` stores one such subset as an integer
bitmask (bit i-1 <-> variable position i) together with the ambient width
n, and ``SubsetFamily`` stores an explicit collection of equal-width
subsets.  Everything is immutable and hashable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import AmbientMismatchError, LatticeLimitError

#: Hard default for "enumerate all of 2^[n]" style operations; can be
#: overridden per call or via the STANLEY_MAX_N environment variable.
DEFAULT_MAX_N = 24


def lattice_limit(max_n: int | None = None) -> int:
    """Resolve the effective lattice-size guard."""
    if max_n is not None:
        return max_n
    env = os.environ.get("STANLEY_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def check_lattice_guard(n: int, max_n: int | None = None) -> None:
    limit = lattice_limit(max_n)
    if n > limit:
        raise LatticeLimitError(
            f"refusing to enumerate a 2^{n} lattice (guard is {limit}); "
            f"raise max_n or STANLEY_MAX_N to override"
        )


@dataclass(frozen=True, slots=True)
class VarSet:
    """A subset of {1..n}, i.e. the support of a squarefree monomial.

    ``mask`` has bit i-1 set iff position i is in the set.
    """

    mask: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"ambient width must be >= 0, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(
                f"mask {bin(self.mask)} has bits outside positions 1..{self.n}"
            )

    @classmethod
    def from_positions(cls, positions: Iterable[int], n: int) -> "VarSet":
        mask = 0
        for p in positions:
            if not 1 <= p <= n:
                raise ValueError(f"position {p} outside 1..{n}")
            mask |= 1 << (p - 1)
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "VarSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VarSet":
        return cls((1 << n) - 1, n)

    def positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def cardinality(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, position: int) -> bool:
        return 1 <= position <= self.n and bool(self.mask >> (position - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions())

    def issubset(self, other: "VarSet") -> bool:
        self._check_ambient(other)
        return self.mask & ~other.mask == 0

    def union(self, other: "VarSet") -> "VarSet":
        self._check_ambient(other)
        return VarSet(self.mask | other.mask, self.n)

    def intersection(self, other: "VarSet") -> "VarSet":
        self._check_ambient(other)
        return VarSet(self.mask & other.mask, self.n)

    def difference(self, other: "VarSet") -> "VarSet":
        self._check_ambient(other)
        return VarSet(self.mask & ~other.mask, self.n)

    def with_position(self, position: int) -> "VarSet":
        if not 1 <= position <= self.n:
            raise ValueError(f"position {position} outside 1..{self.n}")
        return VarSet(self.mask | 1 << (position - 1), self.n)

    def complement(self) -> "VarSet":
        return VarSet(~self.mask & (1 << self.n) - 1, self.n)

    def _check_ambient(self, other: "VarSet") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(
                f"ambient widths differ: {self.n} vs {other.n}"
            )

    def __repr__(self) -> str:
        return f"VarSet({{{', '.join(map(str, self.positions()))}}}, n={self.n})"


@dataclass(frozen=True)
class SubsetFamily:
    """An explicit family of equal-width subsets of {1..n}."""

    n: int
    members: frozenset[VarSet]

    def __post_init__(self):
        for m in self.members:
            if m.n != self.n:
                raise AmbientMismatchError(
                    f"member {m!r} does not live in ambient width {self.n}"
                )

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SubsetFamily":
        return cls(n, frozenset(VarSet(m, n) for m in masks))

    @classmethod
    def empty(cls, n: int) -> "SubsetFamily":
        return cls(n, frozenset())

    @classmethod
    def full_lattice(cls, n: int, max_n: int | None = None) -> "SubsetFamily":
        check_lattice_guard(n, max_n)
        return cls.from_masks(n, range(1 << n))

    def masks(self) -> tuple[int, ...]:
        """Members as raw bitmasks, in (cardinality, numeric) order."""
        return tuple(sorted((m.mask for m in self.members),
                            key=lambda b: (b.bit_count(), b)))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: VarSet) -> bool:
        return item in self.members

    def __iter__(self) -> Iterator[VarSet]:
        return iter(sorted(self.members, key=lambda v: (len(v), v.mask)))

    def max_cardinality(self) -> int:
        """Largest member size; -1 for the empty family."""
        return max((len(m) for m in self.members), default=-1)

    def union(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check_ambient(other)
        return SubsetFamily(self.n, self.members | other.members)

    def intersection(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check_ambient(other)
        return SubsetFamily(self.n, self.members & other.members)

    def difference(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check_ambient(other)
        return SubsetFamily(self.n, self.members - other.members)

    def isdisjoint(self, other: "SubsetFamily") -> bool:
        self._check_ambient(other)
        return self.members.isdisjoint(other.members)

    def is_downward_closed(self) -> bool:
        masks = frozenset(m.mask for m in self.members)
        for b in masks:
            x = b
            while x:
                low = x & -x
                if b ^ low not in masks:
                    return False
                x ^= low
        return True

    def is_upward_closed(self) -> bool:
        masks = frozenset(m.mask for m in self.members)
        full = (1 << self.n) - 1
        for b in masks:
            x = full & ~b
            while x:
                low = x & -x
                if b | low not in masks:
                    return False
                x ^= low
        return True

    def _check_ambient(self, other: "SubsetFamily") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(
                f"ambient widths differ: {self.n} vs {other.n}"
            )


@dataclass(frozen=True)
class AlphaVector:
    """Member counts of a family by cardinality: counts[k] = #{A : |A| = k}."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts:
            raise ValueError("counts must have length n+1 >= 1")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative count in {self.counts}")

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)


def alpha_vector(family: SubsetFamily) -> AlphaVector:
    """Count family members by cardinality into a length-(n+1) vector."""
    counts = [0] * (family.n + 1)
    for m in family.members:
        counts[len(m)] += 1
    return AlphaVector(tuple(counts))
