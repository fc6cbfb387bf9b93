"""Embedded regression fixtures behind the ``check-examples`` command.

Each fixture recomputes a classical instance from scratch and compares
against frozen values that this package's independent pipelines agree on.
A fresh checkout passes all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import counterexamples as cx
from .errors import BudgetExhaustedError
from .graph_ideals import (
    gamma,
    independence_ideal,
    invariants,
    linear_quotients_check,
    sandwich_report,
    sort_generators,
)
from .graphs import graph_families
from .ideals import (
    hilbert_alpha_oracle,
    maximal_ideal,
    poset_of_ideal,
    poset_of_quotient,
    poset_of_subquotient,
    unit_ideal,
)
from .intervals import verify_partition
from .qdepth import qdepth_from_alpha
from .search import SearchBudget, sdepth
from .subsets import AlphaVector, alpha_vector
from .qdepth import binom


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    detail: str


def _fixture(name):
    def wrap(fn):
        fn.fixture_name = name
        return fn
    return wrap


@_fixture("duval16-quotient-levels")
def _check_duval16_levels(budget_seconds: float) -> str:
    """Both counting pipelines on the 16-variable counterexample quotient."""
    ideal = cx.duval_16_ideal()
    if len(ideal.generators) != 64:
        raise AssertionError(f"expected 64 minimal generators, got {len(ideal.generators)}")
    alphas = alpha_vector(poset_of_quotient(ideal))
    if alphas.counts != cx.DUVAL_16_QUOTIENT_ALPHA:
        raise AssertionError(f"poset pipeline gave {alphas.counts[:6]}")
    ambient = unit_ideal(16)
    for j in range(6):
        oracle = hilbert_alpha_oracle(ambient, ideal, j)
        if oracle != alphas[j]:
            raise AssertionError(f"oracle degree {j}: {oracle} != {alphas[j]}")
    return "alpha = (1,16,71,98,42); degree oracle agrees"


@_fixture("duval16-qdepth")
def _check_duval16_qdepth(budget_seconds: float) -> str:
    """qdepth of the quotient and of the ideal poset itself."""
    ideal = cx.duval_16_ideal()
    q_quot = qdepth_from_alpha(alpha_vector(poset_of_quotient(ideal)))
    q_ideal = qdepth_from_alpha(alpha_vector(poset_of_ideal(ideal)))
    # The quotient's quasi-depth equals its depth 4: the bound does not
    # separate sdepth (= 3, known externally) from depth on this instance.
    if q_quot != cx.DUVAL_16_QUOTIENT_DEPTH:
        raise AssertionError(f"qdepth(S/I) = {q_quot}")
    if not q_ideal >= 5:
        raise AssertionError(f"qdepth(I) = {q_ideal} < 5")
    return f"qdepth(S/I) = {q_quot}, qdepth(I) = {q_ideal} >= 5"


@_fixture("duval16-sdepth-undecided")
def _check_duval16_budget(budget_seconds: float) -> str:
    """Exact search must report 'undecided' on the 16-variable instance."""
    ideal = cx.duval_16_ideal()
    family = poset_of_quotient(ideal)
    result = sdepth(family, SearchBudget.of(min(budget_seconds, 10.0)))
    if result.decided:
        raise AssertionError(f"unexpectedly decided: {result.value}")
    return f"undecided at candidate depth {result.undecided_at} (as designed)"


@_fixture("duval6-subquotient")
def _check_duval6(budget_seconds: float) -> str:
    """The 6-variable relative counterexample: qdepth 4, sdepth 3."""
    upper, lower = cx.duval_6_pair()
    family = poset_of_subquotient(upper, lower)
    alphas = alpha_vector(family)
    if alphas.counts != cx.DUVAL_6_SUBQUOTIENT_ALPHA:
        raise AssertionError(f"alpha = {alphas.counts}")
    if qdepth_from_alpha(alphas) != 4:
        raise AssertionError(f"qdepth = {qdepth_from_alpha(alphas)}")
    result = sdepth(family, SearchBudget.of(budget_seconds))
    if not (result.decided and result.value == cx.DUVAL_6_SDEPTH):
        raise AssertionError(f"sdepth result {result.status}/{result.value}")
    check = verify_partition(result.witness, result.value)
    if not check.ok:
        raise AssertionError(f"witness rejected: {check.reason}")
    return "alpha = (0,0,5,10,5), qdepth = 4, sdepth = 3 with verified witness"


@_fixture("maximal-ideal-qdepth")
def _check_maximal_qdepth(budget_seconds: float) -> str:
    """qdepth of the maximal ideal's poset is ceil(n/2) for n = 1..20."""
    for n in range(1, 21):
        alphas = AlphaVector((0,) + tuple(binom(n, k) for k in range(1, n + 1)))
        got = qdepth_from_alpha(alphas)
        if got != (n + 1) // 2:
            raise AssertionError(f"n={n}: qdepth {got} != {(n + 1) // 2}")
    return "qdepth(P_m) = ceil(n/2) for n = 1..20"


@_fixture("maximal-ideal-sdepth")
def _check_maximal_sdepth(budget_seconds: float) -> str:
    """Exact search on the maximal ideal's poset, small widths."""
    for n in range(3, 7):
        family = poset_of_ideal(maximal_ideal(n))
        result = sdepth(family, SearchBudget.of(budget_seconds))
        if not (result.decided and result.value == (n + 1) // 2):
            raise AssertionError(f"n={n}: {result.status}/{result.value}")
    return "sdepth(P_m) = ceil(n/2) for n = 3..6"


@_fixture("c4-independence-ideal")
def _check_c4(budget_seconds: float) -> str:
    """Square cycle: 7 generators, closed-form invariants, sdepth = gamma = 5."""
    graph = graph_families("cycle", 4)
    data = independence_ideal(graph)
    if data.g != 7 or data.a != (1, 4, 2):
        raise AssertionError(f"g={data.g}, a={data.a}")
    ordered = sort_generators(data.ideal.generators, 4)
    expected = [
        {5, 6, 7, 8}, {1, 6, 7, 8}, {2, 5, 7, 8}, {3, 5, 6, 8},
        {4, 5, 6, 7}, {1, 3, 6, 8}, {2, 4, 5, 7},
    ]
    if [set(g.positions()) for g in ordered] != expected:
        raise AssertionError("generator order mismatch")
    if not linear_quotients_check(data):
        raise AssertionError("linear quotients check failed")
    record = invariants(data)
    if (record.reg, record.pd, record.dim, record.depth) != (4, 3, 6, 5):
        raise AssertionError(f"invariants {record}")
    rep = sandwich_report(graph, SearchBudget.of(budget_seconds))
    if not (rep.gamma_ == 5 and rep.sdepth_.decided and rep.sdepth_.value == 5):
        raise AssertionError(f"gamma={rep.gamma_}, sdepth={rep.sdepth_}")
    return "reg 4, pd 3, dim 6, depth 5, gamma 5, sdepth 5"


@_fixture("p5-independence-ideal")
def _check_p5(budget_seconds: float) -> str:
    """Path on 5 vertices, formula level: 13 generators, gamma 7 > depth 6."""
    graph = graph_families("path", 5)
    data = independence_ideal(graph)
    if data.g != 13 or data.alpha_g != 3:
        raise AssertionError(f"g={data.g}, alpha={data.alpha_g}")
    record = invariants(data)
    if record.depth != 6 or gamma(data) != 7:
        raise AssertionError(f"depth={record.depth}, gamma={gamma(data)}")
    return "alpha(G) = 3, g = 13, depth 6, gamma 7"


@_fixture("complete-graphs-sdepth")
def _check_complete(budget_seconds: float) -> str:
    """Complete graphs are the Cohen-Macaulay case: sdepth = depth = 2n-2."""
    for n in (2, 3):
        rep = sandwich_report(
            graph_families("complete", n), SearchBudget.of(budget_seconds)
        )
        if not (rep.sdepth_.decided and rep.sdepth_.value == 2 * n - 2):
            raise AssertionError(f"n={n}: {rep.sdepth_}")
        if rep.depth != 2 * n - 2:
            raise AssertionError(f"n={n}: depth {rep.depth}")
    return "sdepth(T/I) = depth(T/I) = 2n-2 for n = 2..3"


FIXTURES = [
    _check_duval16_levels,
    _check_duval16_qdepth,
    _check_duval16_budget,
    _check_duval6,
    _check_maximal_qdepth,
    _check_maximal_sdepth,
    _check_c4,
    _check_p5,
    _check_complete,
]


def run_all(budget_seconds: float = 600.0) -> list[FixtureResult]:
    results = []
    for fn in FIXTURES:
        name = fn.fixture_name
        try:
            detail = fn(budget_seconds)
            results.append(FixtureResult(name, True, detail))
        except (AssertionError, BudgetExhaustedError) as exc:
            results.append(FixtureResult(name, False, str(exc)))
    return results
