import random

import pytest

from stanleydepth import (
    LatticeLimitError,
    MonomialIdeal,
    NotASubidealError,
    SubsetFamily,
    VarSet,
    alpha_vector,
    hilbert_alpha_oracle,
    maximal_ideal,
    minimalize,
    poset_of_ideal,
    poset_of_quotient,
    poset_of_subquotient,
    unit_ideal,
    veronese_ideal,
    zero_ideal,
)
from stanleydepth.counterexamples import (
    DUVAL_16_IDEAL_TEXT,
    DUVAL_16_QUOTIENT_ALPHA,
    DUVAL_6_SUBQUOTIENT_ALPHA,
    duval_16_ideal,
    duval_6_pair,
)
from stanleydepth.qdepth import binom

from conftest import random_ideal


def _vs(positions, n):
    return VarSet.from_positions(positions, n)


# ---------------------------------------------------------------- minimalize

def test_minimalize_unit_ideal():
    ideal = minimalize([VarSet.empty(3)], 3)
    assert ideal.is_unit
    assert ideal.generator_masks() == (0,)


def test_minimalize_divisibility():
    ideal = minimalize([_vs([1], 2), _vs([1, 2], 2)], 2)
    assert ideal.generator_masks() == (0b01,)


def test_minimalize_unit_flag():
    with pytest.raises(ValueError):
        minimalize([VarSet.empty(2), _vs([1], 2)], 2, allow_unit=False)
    # default allows the unit ideal
    assert minimalize([VarSet.empty(2)], 2).is_unit


def test_minimalize_rejects_wrong_ambient():
    with pytest.raises(ValueError):
        minimalize([_vs([1], 3)], 2)


def test_minimalize_idempotent_and_order_independent(rng):
    for _ in range(30):
        n = rng.randint(1, 8)
        gens = [
            _vs(rng.sample(range(1, n + 1), rng.randint(1, n)), n)
            for _ in range(rng.randint(0, 8))
        ]
        ideal = minimalize(gens, n)
        again = minimalize(ideal.generators, n)
        assert again.generators == ideal.generators
        shuffled = list(gens)
        rng.shuffle(shuffled)
        assert minimalize(shuffled, n).generators == ideal.generators


def test_monomial_ideal_rejects_non_minimal_generators():
    with pytest.raises(ValueError):
        MonomialIdeal(2, frozenset({_vs([1], 2), _vs([1, 2], 2)}))


def test_duval16_generator_list_is_already_minimal():
    # independent check: raw pairwise containment over the verbatim list
    supports = []
    for line in DUVAL_16_IDEAL_TEXT.splitlines()[1:]:
        if line.strip():
            supports.append({int(tok[1:]) for tok in line.split("*")})
    assert len(supports) == 64
    assert len({frozenset(s) for s in supports}) == 64
    for i, a in enumerate(supports):
        for j, b in enumerate(supports):
            if i != j:
                assert not a <= b or a == b
    assert len(duval_16_ideal().generators) == 64
    by_degree = {}
    for g in duval_16_ideal().generators:
        by_degree[len(g)] = by_degree.get(len(g), 0) + 1
    assert by_degree == {2: 49, 3: 15}


# ------------------------------------------------------------------- posets

def test_poset_of_principal_ideal():
    ideal = minimalize([_vs([1], 2)], 2)
    assert poset_of_ideal(ideal).masks() == (0b01, 0b11)


def test_poset_of_maximal_ideal_level_counts():
    for n in (1, 3, 6):
        alphas = alpha_vector(poset_of_ideal(maximal_ideal(n)))
        assert alphas[0] == 0
        assert all(alphas[k] == binom(n, k) for k in range(1, n + 1))


def test_poset_of_quotient_zero_ideal_is_everything():
    assert len(poset_of_quotient(zero_ideal(4))) == 16
    assert len(poset_of_ideal(zero_ideal(4))) == 0


def test_poset_of_quotient_principal_degree_two():
    ideal = minimalize([_vs([1, 2], 2)], 2)
    assert poset_of_quotient(ideal).masks() == (0b00, 0b01, 0b10)


def test_poset_guard():
    with pytest.raises(LatticeLimitError):
        poset_of_ideal(zero_ideal(30))


def test_posets_partition_the_lattice(rng):
    for _ in range(20):
        n = rng.randint(1, 7)
        ideal = random_ideal(rng, n)
        inside = poset_of_ideal(ideal)
        outside = poset_of_quotient(ideal)
        assert inside.isdisjoint(outside)
        assert len(inside) + len(outside) == 1 << n
        assert inside.is_upward_closed()
        assert outside.is_downward_closed()


def test_duval16_quotient_alpha_via_poset_pipeline():
    alphas = alpha_vector(poset_of_quotient(duval_16_ideal()))
    assert alphas.counts == DUVAL_16_QUOTIENT_ALPHA


def test_duval16_ideal_alpha():
    alphas = alpha_vector(poset_of_ideal(duval_16_ideal()))
    assert alphas[0] == alphas[1] == 0
    assert alphas[2] == binom(16, 2) - 71 == 49
    assert alphas[3] == binom(16, 3) - 98 == 462
    assert alphas[4] == binom(16, 4) - 42 == 1778
    assert all(alphas[k] == binom(16, k) for k in range(5, 17))


# ------------------------------------------------------------- subquotients

def test_subquotient_requires_containment():
    upper = minimalize([_vs([1, 2], 3)], 3)
    lower = minimalize([_vs([3], 3)], 3)
    with pytest.raises(NotASubidealError):
        poset_of_subquotient(upper, lower)


def test_subquotient_of_equal_ideals_is_empty():
    ideal = minimalize([_vs([1, 2], 4), _vs([3], 4)], 4)
    assert len(poset_of_subquotient(ideal, ideal)) == 0


def test_subquotient_with_unit_upper_matches_quotient():
    ideal = duval_16_ideal()
    sub = poset_of_subquotient(unit_ideal(16), ideal)
    assert alpha_vector(sub).counts == DUVAL_16_QUOTIENT_ALPHA


def test_duval6_subquotient_alpha():
    upper, lower = duval_6_pair()
    alphas = alpha_vector(poset_of_subquotient(upper, lower))
    assert alphas.counts == DUVAL_6_SUBQUOTIENT_ALPHA


# ------------------------------------------------------------ degree oracle

def test_oracle_matches_duval_fixtures():
    ideal = duval_16_ideal()
    assert hilbert_alpha_oracle(unit_ideal(16), ideal, 3) == 98
    upper, lower = duval_6_pair()
    assert hilbert_alpha_oracle(upper, lower, 4) == 5


def test_oracle_zero_for_equal_ideals():
    ideal = veronese_ideal(5, 2)
    assert all(hilbert_alpha_oracle(ideal, ideal, j) == 0 for j in range(6))


def test_oracle_guard():
    with pytest.raises(LatticeLimitError):
        hilbert_alpha_oracle(unit_ideal(16), duval_16_ideal(), 8, max_enumeration=100)


def test_oracle_agrees_with_poset_pipeline_on_random_ideals(rng):
    for _ in range(20):
        n = rng.randint(1, 10)
        lower = random_ideal(rng, n)
        # grow the upper ideal so containment holds
        extra = random_ideal(rng, n)
        upper = minimalize(list(lower.generators) + list(extra.generators), n)
        if not upper.generators:
            upper = unit_ideal(n)
        family = poset_of_subquotient(upper, lower)
        alphas = alpha_vector(family)
        for j in range(n + 1):
            assert hilbert_alpha_oracle(upper, lower, j) == alphas[j]
