"""The beta recursion and the quasi-depth invariant.

Given the level counts alpha_k of a subset family and a candidate depth d,
the recursion

    beta_0 = alpha_0,
    beta_k = alpha_k - sum_{j<k} beta_j * C(d-j, k-j)      (1 <= k <= d)

computes how many intervals with bottom of size k a partition with all
tops of size >= d would have to use.  If the family admits such a
partition, every beta_k is non-negative; the quasi-depth is the largest d
for which the whole sequence stays non-negative, and it upper-bounds the
Stanley depth.

All arithmetic is exact (Python integers), so there is no overflow at any
supported width.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .subsets import AlphaVector, SubsetFamily, alpha_vector


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the combinatorial zero conventions.

    C(a, 0) = 1 for every integer a (including negative); otherwise the
    coefficient is 0 whenever a < b, which covers negative tops.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class BetaProfile:
    """The beta sequence derived from an alpha vector at candidate depth d."""

    d: int
    betas: tuple[int, ...]
    alphas: AlphaVector

    def all_nonnegative(self) -> bool:
        return all(b >= 0 for b in self.betas)

    def first_negative_index(self) -> int | None:
        for k, b in enumerate(self.betas):
            if b < 0:
                return k
        return None


def beta_profile(alphas: AlphaVector, d: int) -> BetaProfile:
    """Run the beta recursion for candidate depth d.

    Returns beta_0..beta_d (length d+1); entries may be negative, that is
    the whole point.  Pure function of (alphas, d).
    """
    if not 0 <= d <= alphas.n:
        raise ValueError(f"candidate depth {d} outside 0..{alphas.n}")
    betas: list[int] = []
    for k in range(d + 1):
        b = alphas[k]
        for j, bj in enumerate(betas):
            b -= bj * binom(d - j, k - j)
        betas.append(b)
    return BetaProfile(d, tuple(betas), alphas)


def qdepth_from_alpha(alphas: AlphaVector) -> int:
    """Largest d <= n whose beta sequence is entirely non-negative.

    d = 0 always qualifies (beta_0 = alpha_0 >= 0), so the result is
    well-defined.  An all-zero alpha vector yields n: the empty-module
    convention.
    """
    for d in range(alphas.n, -1, -1):
        if beta_profile(alphas, d).all_nonnegative():
            return d
    raise AssertionError("unreachable: d = 0 always has beta_0 >= 0")


def qdepth(family: SubsetFamily) -> int:
    """Quasi-depth of a subset family; upper bound for its Stanley depth.

    The empty family returns n by convention (all levels vanish, every
    candidate depth passes); see qdepth_from_alpha.
    """
    return qdepth_from_alpha(alpha_vector(family))


def closed_form_beta(n: int, d: int, k: int) -> int:
    """Beta values for the full lattice 2^[n]: C(n+k-d-1, k).

    Matches ``beta_profile`` applied to alpha_k = C(n, k); in particular
    d = n gives 0 for every k >= 1 and 1 for k = 0.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    return binom(n + k - d - 1, k)


def veronese_qdepth_bound(n: int, m: int) -> int:
    """Claimed upper bound ceil((n-m)/(m+1)) + m - 1 for qdepth of the
    ideal generated by all degree-m supports.

    Caution: when (m+1) divides (n-m) the true quasi-depth exceeds this
    value by exactly one (the first beta sign change happens one step
    later than the bound assumes); direct computation gives e.g.
    qdepth = 3 for n=5, m=1 where this formula returns 2.  See
    ``veronese_qdepth_exact_bound`` for the version the recursion
    actually supports.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return -((n - m) // -(m + 1)) + m - 1


def veronese_qdepth_exact_bound(n: int, m: int) -> int:
    """Upper bound m + floor((n-m)/(m+1)) for qdepth of the degree-m
    squarefree Veronese ideal, derived from the first forced sign change:

        beta_{m+1} = C(n, m+1) - (d - m) * C(n, m) < 0
                     as soon as  d - m > (n - m)/(m + 1).
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return m + (n - m) // (m + 1)


@dataclass(frozen=True)
class GeneratorCountBound:
    """Upper bound for qdepth/sdepth of S/I from the generator count alone.

    For an ideal equigenerated in degree m with g minimal generators, the
    quotient's beta_m at candidate depth d is C(n+m-d-1, m) - g, so the
    bound is (least d making that negative) - 1.  When even C(n-1, m) < g
    the bound collapses to m-1 and is attained: ``exact`` flags that case.
    """

    bound: int
    exact: bool


def generator_count_bound(n: int, m: int, g: int) -> GeneratorCountBound:
    """Scan for the least d with C(n+m-d-1, m) < g; see GeneratorCountBound.

    Purely arithmetic: the caller asserts that the ideal really is
    equigenerated in degree m < n with g minimal generators.
    """
    if g <= 0:
        raise ValueError(f"generator count must be positive, got {g}")
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    d = 0
    while binom(n + m - d - 1, m) >= g:
        d += 1
    return GeneratorCountBound(bound=d - 1, exact=binom(n - 1, m) < g)
