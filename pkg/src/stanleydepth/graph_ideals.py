"""Monomial ideals of independent sets of a graph, and their invariants.

For a graph G on [n], every independent set S yields the degree-n
monomial prod_{i in S} s_i * prod_{i not in S} t_i over the 2n variables
s_1..s_n, t_1..t_n (positions: s_i -> i, t_i -> n+i).  These generators
all have degree n and distinct supports, so the ideal they generate is
minimally generated by construction.

The homological invariants of these ideals have closed forms (the ideal
has linear quotients under a specific generator order); they are computed
from those formulas only, never from a resolution.  The gamma invariant

    gamma(G) = max{d : C(3n-d-1, n) >= g},     g = #independent sets,

upper-bounds the quotient's Stanley depth and conjecturally equals it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, independent_sets
from .ideals import MonomialIdeal, minimalize, poset_of_quotient
from .qdepth import binom, qdepth_from_alpha
from .search import SdepthResult, SearchBudget, sdepth
from .subsets import VarSet, alpha_vector


@dataclass(frozen=True)
class IndependenceIdealData:
    """A graph, its independent sets, and the ideal they generate."""

    graph: Graph
    ind_sets: tuple[VarSet, ...]
    ideal: MonomialIdeal
    a: tuple[int, ...]            # a[k] = number of independent sets of size k
    alpha_g: int                  # independence number
    g: int                        # number of minimal generators


def generator_for_independent_set(ind: VarSet, n: int) -> VarSet:
    """Support of the degree-n generator attached to one independent set."""
    s_part = ind.mask
    t_part = ~ind.mask & (1 << n) - 1
    return VarSet(s_part | t_part << n, 2 * n)


def independence_ideal(graph: Graph, max_n: int | None = None) -> IndependenceIdealData:
    """Build the independence ideal of a graph over 2n positions."""
    n = graph.n
    ind = independent_sets(graph, max_n)
    gens = frozenset(generator_for_independent_set(s, n) for s in ind)
    ideal = MonomialIdeal(2 * n, gens)
    a = [0] * (max(len(s) for s in ind) + 1)
    for s in ind:
        a[len(s)] += 1
    return IndependenceIdealData(
        graph=graph,
        ind_sets=tuple(ind),
        ideal=ideal,
        a=tuple(a),
        alpha_g=len(a) - 1,
        g=len(ind),
    )


def _s_support(gen: VarSet, n: int) -> tuple[int, ...]:
    return tuple(p for p in gen.positions() if p <= n)


def sort_generators(gens, n: int) -> list[VarSet]:
    """Order generators by ascending s-degree, ties by lex-larger s-part.

    Lex on the s block is induced by s_1 > s_2 > ... > s_n, so among equal
    s-degrees the support with the smaller sorted tuple comes first.
    """
    out = []
    for gen in gens:
        if gen.n != 2 * n or len(gen) != n:
            raise ValueError(
                f"generator {gen!r} does not have independence-ideal shape for n={n}"
            )
        out.append(gen)
    return sorted(out, key=lambda gen: (len(_s_support(gen, n)), _s_support(gen, n)))


def linear_quotients_check(data: IndependenceIdealData) -> bool:
    """Verify each colon ideal (I_{i-1} : m_i) equals (t_r : r in S_i).

    The colon of a squarefree monomial ideal by a squarefree monomial is
    computed directly from supports (differences, then minimalization).
    """
    n = data.graph.n
    ordered = sort_generators(data.ideal.generators, n)
    for i in range(1, len(ordered)):
        m_i = ordered[i]
        colon_gens = [
            VarSet(prev.mask & ~m_i.mask, 2 * n) for prev in ordered[:i]
        ]
        colon = minimalize(colon_gens, 2 * n)
        s_i = _s_support(m_i, n)
        expected = frozenset(
            VarSet(1 << (n + r - 1), 2 * n) for r in s_i
        )
        if colon.generators != expected:
            return False
    return True


@dataclass(frozen=True)
class InvariantRecord:
    """Closed-form homological invariants of T/I for an independence ideal."""

    reg: int
    betti: tuple[int, ...]
    pd: int
    dim: int
    depth: int
    cohen_macaulay: bool


def invariants(data: IndependenceIdealData) -> InvariantRecord:
    """Evaluate the closed forms; no resolution is ever built.

    reg(I) = n, beta_i(I) = sum_k a_k C(k, i), pd(T/I) = alpha(G)+1,
    dim(T/I) = 2n-2, depth(T/I) = 2n-alpha(G)-1, and T/I is
    Cohen-Macaulay exactly for complete graphs.
    """
    n = data.graph.n
    betti = tuple(
        sum(data.a[k] * binom(k, i) for k in range(len(data.a)))
        for i in range(data.alpha_g + 1)
    )
    record = InvariantRecord(
        reg=n,
        betti=betti,
        pd=data.alpha_g + 1,
        dim=2 * n - 2,
        depth=2 * n - data.alpha_g - 1,
        cohen_macaulay=data.graph.is_complete(),
    )
    assert record.cohen_macaulay == (record.depth == record.dim)
    return record


def gamma_from_counts(n: int, g: int) -> int:
    """gamma = max{d : C(3n-d-1, n) >= g}; always lands in [n-1, 2n-2]."""
    if g < 1:
        raise ValueError(f"generator count must be >= 1, got {g}")
    d = n - 1
    if binom(3 * n - d - 1, n) < g:
        raise ValueError(
            f"g={g} exceeds C(2n, n); not an independence-ideal generator count"
        )
    while binom(3 * n - (d + 1) - 1, n) >= g:
        d += 1
    assert n - 1 <= d <= 2 * n - 2
    return d


def gamma(data: IndependenceIdealData) -> int:
    return gamma_from_counts(data.graph.n, data.g)


@dataclass(frozen=True)
class SandwichReport:
    """depth <= sdepth <= gamma for one graph, with provenance per field.

    ``depth`` and ``gamma_`` are closed forms; ``qdepth_`` is the exact
    recursion on the quotient poset; ``sdepth_`` is exact search unless
    the generator-count shortcut (g > C(2n-1, n) forces sdepth = n-1)
    applies.  ``conjecture`` records whether sdepth == gamma held.
    """

    graph: Graph
    n: int
    alpha_g: int
    g: int
    depth: int
    gamma_: int
    qdepth_: int
    sdepth_: SdepthResult
    conjecture: str               # "holds" | "fails" | "undecided"
    used_shortcut: bool


def sandwich_report(
    graph: Graph,
    budget: SearchBudget | None = None,
    max_n: int | None = None,
) -> SandwichReport:
    """Evaluate the depth/sdepth/gamma sandwich for one graph."""
    data = independence_ideal(graph, max_n)
    n = graph.n
    record = invariants(data)
    gamma_value = gamma(data)
    quotient = poset_of_quotient(data.ideal, max_n)
    qdepth_value = qdepth_from_alpha(alpha_vector(quotient))
    used_shortcut = data.g > binom(2 * n - 1, n)
    if used_shortcut:
        result = SdepthResult("decided", n - 1, None, upper_bound=n - 1)
    else:
        result = sdepth(quotient, budget)
    if result.decided:
        conjecture = "holds" if result.value == gamma_value else "fails"
    else:
        conjecture = "undecided"
    return SandwichReport(
        graph=graph,
        n=n,
        alpha_g=data.alpha_g,
        g=data.g,
        depth=record.depth,
        gamma_=gamma_value,
        qdepth_=qdepth_value,
        sdepth_=result,
        conjecture=conjecture,
        used_shortcut=used_shortcut,
    )
