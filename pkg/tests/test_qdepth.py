"""Beta recursion, quasi-depth, and the numerical bounds built on them."""

from fractions import Fraction

import pytest

from stanleydepth import (
    AlphaVector,
    SubsetFamily,
    alpha_vector,
    beta_profile,
    binom,
    closed_form_beta,
    generator_count_bound,
    maximal_ideal,
    poset_of_ideal,
    qdepth,
    qdepth_from_alpha,
    veronese_ideal,
    veronese_qdepth_bound,
    veronese_qdepth_exact_bound,
)
from stanleydepth.counterexamples import duval_16_ideal, duval_6_pair
from stanleydepth.ideals import poset_of_quotient, poset_of_subquotient
from stanleydepth.subsets import VarSet


def reference_betas(alphas, d):
    """Independent oracle: triangular solve of
    sum_j beta_j * C(d-j, k-j) = alpha_k via exact rational arithmetic,
    with binomials expanded as falling-factorial products."""

    def choose(a, b):
        if b < 0:
            return Fraction(0)
        out = Fraction(1)
        for i in range(b):
            out *= Fraction(a - i, i + 1)
        return out if b >= 0 and (a >= b or b == 0) else Fraction(0)

    betas = []
    for k in range(d + 1):
        value = Fraction(alphas[k])
        for j, bj in enumerate(betas):
            value -= bj * choose(d - j, k - j)
        betas.append(value)
    assert all(b.denominator == 1 for b in betas)
    return tuple(int(b) for b in betas)


def full_lattice_alpha(n):
    return AlphaVector(tuple(binom(n, k) for k in range(n + 1)))


def maximal_ideal_alpha(n):
    return AlphaVector((0,) + tuple(binom(n, k) for k in range(1, n + 1)))


# ------------------------------------------------------------------- binom

def test_binom_conventions():
    assert binom(5, 2) == 10
    assert binom(2, 3) == 0
    assert binom(-1, 0) == 1
    assert binom(-3, 2) == 0
    assert binom(4, -1) == 0


# ------------------------------------------------------------ beta profiles

def test_beta_profile_duval6_at_depth_four():
    # hand-checked: 5 intervals with bottoms at level 2 absorb everything
    alphas = AlphaVector((0, 0, 5, 10, 5, 0, 0))
    profile = beta_profile(alphas, 4)
    assert profile.betas == (0, 0, 5, 0, 0)
    assert profile.all_nonnegative()
    assert profile.betas == reference_betas(alphas, 4)


def test_beta_profile_duval6_fails_at_depth_five():
    alphas = AlphaVector((0, 0, 5, 10, 5, 0, 0))
    profile = beta_profile(alphas, 5)
    assert profile.betas[3] == 10 - 5 * binom(3, 1) == -5
    assert profile.first_negative_index() == 3
    assert profile.betas == reference_betas(alphas, 5)


def test_beta_profile_on_published_duval16_levels():
    # The published level vector (1,15,71,98,42) does go negative at d=4;
    # the faithfully transcribed ideal's true vector (1,16,71,98,42) does
    # not (see test_qdepth_duval16 below), which is where the printed
    # conclusion and the actual instance part ways.
    published = AlphaVector((1, 15, 71, 98, 42) + (0,) * 12)
    profile = beta_profile(published, 4)
    assert profile.betas[:4] == (1, 11, 32, -3)
    assert profile.first_negative_index() == 3
    assert profile.betas == reference_betas(published, 4)

    true_alphas = AlphaVector((1, 16, 71, 98, 42) + (0,) * 12)
    true_profile = beta_profile(true_alphas, 4)
    assert true_profile.betas == (1, 12, 29, 0, 0)
    assert true_profile.all_nonnegative()
    assert true_profile.betas == reference_betas(true_alphas, 4)


def test_beta_profile_rejects_bad_depth():
    alphas = AlphaVector((1, 2, 1))
    with pytest.raises(ValueError):
        beta_profile(alphas, 3)
    with pytest.raises(ValueError):
        beta_profile(alphas, -1)


def test_beta_profile_matches_reference_on_random_alphas(rng):
    for _ in range(50):
        n = rng.randint(1, 12)
        alphas = AlphaVector(
            tuple(rng.randint(0, binom(n, k)) for k in range(n + 1))
        )
        d = rng.randint(0, n)
        assert beta_profile(alphas, d).betas == reference_betas(alphas, d)


def test_beta_profile_is_deterministic():
    alphas = AlphaVector((1, 16, 71, 98, 42) + (0,) * 12)
    runs = {beta_profile(alphas, 4).betas for _ in range(5)}
    assert len(runs) == 1


# ------------------------------------------------------------------ qdepth

def test_qdepth_maximal_ideal_n6():
    assert qdepth(poset_of_ideal(maximal_ideal(6))) == 3


def test_qdepth_maximal_ideal_closed_form():
    for n in range(1, 21):
        assert qdepth_from_alpha(maximal_ideal_alpha(n)) == (n + 1) // 2
    # explicit families agree with the level-count shortcut for small n
    for n in range(1, 13):
        assert qdepth(poset_of_ideal(maximal_ideal(n))) == (n + 1) // 2


def test_qdepth_duval6_subquotient():
    upper, lower = duval_6_pair()
    assert qdepth(poset_of_subquotient(upper, lower)) == 4


def test_qdepth_duval16():
    ideal = duval_16_ideal()
    # the faithful transcription gives qdepth(S/I) = 4 = depth(S/I):
    # the bound does not witness sdepth < depth on this instance
    assert qdepth(poset_of_quotient(ideal)) == 4
    assert qdepth(poset_of_ideal(ideal)) == 9 >= 5


def test_qdepth_is_exact_threshold(rng):
    for _ in range(40):
        n = rng.randint(1, 10)
        alphas = AlphaVector(
            tuple(rng.randint(0, binom(n, k)) for k in range(n + 1))
        )
        d = qdepth_from_alpha(alphas)
        assert beta_profile(alphas, d).all_nonnegative()
        for above in range(d + 1, n + 1):
            assert not beta_profile(alphas, above).all_nonnegative()


def test_qdepth_empty_family_sentinel():
    assert qdepth(SubsetFamily.empty(5)) == 5
    assert qdepth_from_alpha(AlphaVector((0, 0, 0))) == 2


def test_qdepth_singleton_empty_set():
    fam = SubsetFamily(4, frozenset({VarSet.empty(4)}))
    assert qdepth(fam) == 0


# --------------------------------------------------------------- lemma form

def test_closed_form_beta_examples():
    assert closed_form_beta(5, 5, 3) == 0
    assert closed_form_beta(6, 4, 2) == binom(3, 2) == 3
    assert closed_form_beta(6, 6, 0) == 1  # C(-1, 0) by convention


def test_closed_form_beta_matches_recursion_exhaustively():
    for n in range(1, 13):
        alphas = full_lattice_alpha(n)
        for d in range(1, n + 1):
            profile = beta_profile(alphas, d)
            for k in range(d + 1):
                assert profile.betas[k] == closed_form_beta(n, d, k)


def test_closed_form_convolution_identity():
    # sum_j C(n-d+j-1, j) C(d-j, k-j) = C(n, k)
    for n in range(2, 13):
        for d in range(1, n + 1):
            for k in range(1, d + 1):
                total = sum(
                    binom(n - d + j - 1, j) * binom(d - j, k - j)
                    for j in range(k + 1)
                )
                assert total == binom(n, k)


def test_closed_form_beta_validation():
    with pytest.raises(ValueError):
        closed_form_beta(5, 0, 1)
    with pytest.raises(ValueError):
        closed_form_beta(5, 2, 6)


# ----------------------------------------------------------- veronese bound

def test_veronese_bound_values():
    assert veronese_qdepth_bound(6, 2) == 3
    assert veronese_qdepth_bound(5, 1) == 2
    assert veronese_qdepth_exact_bound(5, 1) == 3
    assert veronese_qdepth_bound(3, 3) == 2  # boundary case m = n, documented


def test_veronese_bound_against_direct_computation():
    # Direct computation decides the open point: at (5, 1) the true
    # quasi-depth is 3 = ceil(5/2) (the maximal-ideal value), above the
    # printed formula's 2.  The derived bound holds everywhere; the
    # printed one fails only when (m+1) | (n-m), and then by exactly 1.
    for n in range(2, 10):
        for m in range(1, n):
            value = qdepth(poset_of_ideal(veronese_ideal(n, m)))
            exact_bound = veronese_qdepth_exact_bound(n, m)
            printed = veronese_qdepth_bound(n, m)
            assert value <= exact_bound
            if (n - m) % (m + 1) == 0:
                assert exact_bound == printed + 1
            else:
                assert exact_bound == printed
                assert value <= printed
    assert qdepth(poset_of_ideal(veronese_ideal(5, 1))) == 3


# ----------------------------------------------------- generator count bound

def test_generator_count_bound_49_quadratics_in_16_vars():
    result = generator_count_bound(16, 2, 49)
    # C(10, 2) = 45 < 49 first happens at d = 7
    assert result.bound == 6
    assert not result.exact


def test_generator_count_bound_exact_case():
    result = generator_count_bound(4, 2, 4)
    assert result.exact
    assert result.bound == 1


def test_generator_count_bound_principal():
    result = generator_count_bound(8, 3, 1)
    # C(10-d, 3) >= 1 until 10-d < 3, i.e. d = 8 is the first failure
    assert result.bound == 7
    assert not result.exact


def test_generator_count_bound_validation():
    with pytest.raises(ValueError):
        generator_count_bound(4, 2, 0)
    with pytest.raises(ValueError):
        generator_count_bound(4, 4, 3)


def test_generator_count_bound_dominates_qdepth(rng):
    # arithmetic bound really does bound the poset computation
    for n, m in [(5, 2), (6, 2), (6, 3), (7, 2)]:
        ideal = veronese_ideal(n, m)
        g = len(ideal.generators)
        bound = generator_count_bound(n, m, g).bound
        assert qdepth(poset_of_quotient(ideal)) <= bound
