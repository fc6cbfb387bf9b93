"""Squarefree monomial ideals and the subset-lattice posets attached to them.

An ideal is stored by its minimal generating supports.  For squarefree
monomials, divisibility is support containment, so minimality means the
generator supports form an antichain under inclusion.

The three posets implemented here encode an ideal I, a quotient S/I and a
subquotient J/I inside the subset lattice 2^[n]:

* ``poset_of_ideal(I)``       -- all sets containing some generator support,
* ``poset_of_quotient(I)``    -- the complement of the above,
* ``poset_of_subquotient(J, I)`` -- sets in J's poset but not in I's.

``hilbert_alpha_oracle`` recounts the subquotient's level sizes degree by
degree via direct enumeration; it shares no code with the poset pipeline
and serves as its independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import AmbientMismatchError, LatticeLimitError, NotASubidealError
from .subsets import SubsetFamily, VarSet, check_lattice_guard

#: Guard for the degree-wise oracle: refuse to walk more than this many
#: candidate supports in a single degree.
DEFAULT_MAX_ENUMERATION = 2_000_000


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal given by its minimal generator supports.

    ``generators`` is always an inclusion-antichain: build instances through
    :func:`minimalize` unless the input is known to be minimal already.
    The zero ideal has no generators; the unit ideal is generated by the
    empty support.
    """

    n: int
    generators: frozenset[VarSet]

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.n:
                raise AmbientMismatchError(
                    f"generator {g!r} does not live in ambient width {self.n}"
                )
        gens = sorted(self.generators, key=lambda g: (len(g), g.mask))
        for i, g in enumerate(gens):
            for h in gens[:i]:
                if h.issubset(g):
                    raise ValueError(
                        f"generators are not minimal: {h!r} divides {g!r}"
                    )

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.mask == 0 for g in self.generators)

    def generator_masks(self) -> tuple[int, ...]:
        return tuple(sorted((g.mask for g in self.generators),
                            key=lambda b: (b.bit_count(), b)))

    def divides(self, support: VarSet) -> bool:
        """True iff some generator's support is contained in ``support``."""
        if support.n != self.n:
            raise AmbientMismatchError(
                f"support {support!r} does not live in ambient width {self.n}"
            )
        s = support.mask
        return any(g.mask & ~s == 0 for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff ``other`` is contained in this ideal."""
        if other.n != self.n:
            raise AmbientMismatchError(
                f"ambient widths differ: {self.n} vs {other.n}"
            )
        return all(self.divides(g) for g in other.generators)


def minimalize(gens: Iterable[VarSet], n: int, allow_unit: bool = True) -> MonomialIdeal:
    """Reduce a generating set to its inclusion-minimal antichain.

    Idempotent and independent of input order.  With ``allow_unit=False``
    the unit ideal (empty support among the generators) is rejected.
    """
    masks = set()
    for g in gens:
        if g.n != n:
            raise AmbientMismatchError(
                f"generator {g!r} does not live in ambient width {n}"
            )
        masks.add(g.mask)
    if 0 in masks and not allow_unit:
        raise ValueError("the unit ideal (empty generator support) is not allowed here")
    ordered = sorted(masks, key=lambda b: (b.bit_count(), b))
    minimal: list[int] = []
    for m in ordered:
        if not any(k & ~m == 0 for k in minimal):
            minimal.append(m)
    return MonomialIdeal(n, frozenset(VarSet(m, n) for m in minimal))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset({VarSet.empty(n)}))


def maximal_ideal(n: int) -> MonomialIdeal:
    """The ideal generated by all n variables."""
    return MonomialIdeal(
        n, frozenset(VarSet(1 << i, n) for i in range(n))
    )


def veronese_ideal(n: int, m: int) -> MonomialIdeal:
    """The squarefree ideal generated by all degree-m supports in n variables."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    gens = (VarSet.from_positions(c, n) for c in combinations(range(1, n + 1), m))
    return MonomialIdeal(n, frozenset(gens))


def poset_of_ideal(ideal: MonomialIdeal, max_n: int | None = None) -> SubsetFamily:
    """All subsets of [n] containing at least one generator support.

    Materialized by upward-closure propagation from the generator supports,
    so the result is upward-closed by construction.
    """
    check_lattice_guard(ideal.n, max_n)
    n = ideal.n
    seen: set[int] = set()
    frontier = [g.mask for g in ideal.generators]
    seen.update(frontier)
    while frontier:
        nxt = []
        for b in frontier:
            free = ~b & (1 << n) - 1
            while free:
                low = free & -free
                cand = b | low
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
                free ^= low
        frontier = nxt
    return SubsetFamily.from_masks(n, seen)


def poset_of_quotient(ideal: MonomialIdeal, max_n: int | None = None) -> SubsetFamily:
    """The complement of :func:`poset_of_ideal` inside 2^[n]; downward-closed."""
    check_lattice_guard(ideal.n, max_n)
    inside = frozenset(m.mask for m in poset_of_ideal(ideal, max_n).members)
    n = ideal.n
    return SubsetFamily.from_masks(n, (b for b in range(1 << n) if b not in inside))


def poset_of_subquotient(
    upper: MonomialIdeal, lower: MonomialIdeal, max_n: int | None = None
) -> SubsetFamily:
    """Sets lying in ``upper``'s poset but outside ``lower``'s.

    Argument order is (J, I) for the subquotient J/I; requires I <= J.
    """
    if upper.n != lower.n:
        raise AmbientMismatchError(
            f"ambient widths differ: {upper.n} vs {lower.n}"
        )
    if not upper.contains_ideal(lower):
        raise NotASubidealError(
            "the second ideal is not contained in the first (expected J, I with I <= J)"
        )
    p_upper = poset_of_ideal(upper, max_n)
    p_lower = poset_of_ideal(lower, max_n)
    return p_upper.difference(p_lower)


def hilbert_alpha_oracle(
    upper: MonomialIdeal,
    lower: MonomialIdeal,
    degree: int,
    max_enumeration: int | None = None,
) -> int:
    """Count degree-j squarefree monomials of J \\ I by direct enumeration.

    Walks every j-subset of the variables and tests divisibility against
    both generator lists.  Independent of the poset pipeline: the count
    must equal ``alpha_vector(poset_of_subquotient(J, I))[j]``.
    """
    if upper.n != lower.n:
        raise AmbientMismatchError(
            f"ambient widths differ: {upper.n} vs {lower.n}"
        )
    if not upper.contains_ideal(lower):
        raise NotASubidealError(
            "the second ideal is not contained in the first (expected J, I with I <= J)"
        )
    n = upper.n
    if degree < 0 or degree > n:
        return 0
    work = comb(n, degree)
    limit = DEFAULT_MAX_ENUMERATION if max_enumeration is None else max_enumeration
    if work > limit:
        raise LatticeLimitError(
            f"degree-{degree} enumeration needs {work} candidates (guard is {limit})"
        )
    upper_masks = [g.mask for g in upper.generators]
    lower_masks = [g.mask for g in lower.generators]
    count = 0
    for combo in combinations(range(n), degree):
        b = 0
        for i in combo:
            b |= 1 << i
        if any(g & ~b == 0 for g in upper_masks) and not any(
            g & ~b == 0 for g in lower_masks
        ):
            count += 1
    return count
