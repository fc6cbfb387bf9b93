import pytest

from stanleydepth import (
    AlphaVector,
    AmbientMismatchError,
    LatticeLimitError,
    SubsetFamily,
    VarSet,
    alpha_vector,
)
from stanleydepth.qdepth import binom


def test_varset_construction_and_positions():
    v = VarSet.from_positions([1, 4, 5], 6)
    assert v.positions() == (1, 4, 5)
    assert v.cardinality() == 3
    assert len(v) == 3
    assert 4 in v and 2 not in v
    assert list(v) == [1, 4, 5]


def test_varset_rejects_out_of_range_bits():
    with pytest.raises(ValueError):
        VarSet(0b100, 2)
    with pytest.raises(ValueError):
        VarSet.from_positions([3], 2)
    with pytest.raises(ValueError):
        VarSet.from_positions([0], 2)


def test_varset_equality_needs_matching_ambient():
    assert VarSet(0b11, 2) == VarSet(0b11, 2)
    assert VarSet(0b11, 2) != VarSet(0b11, 3)


def test_varset_set_algebra():
    a = VarSet.from_positions([1, 2], 4)
    b = VarSet.from_positions([2, 3], 4)
    assert a.union(b).positions() == (1, 2, 3)
    assert a.intersection(b).positions() == (2,)
    assert a.difference(b).positions() == (1,)
    assert a.complement().positions() == (3, 4)
    assert VarSet.empty(4).issubset(a)
    assert not a.issubset(b)
    with pytest.raises(AmbientMismatchError):
        a.union(VarSet.empty(3))


def test_family_membership_and_order():
    fam = SubsetFamily.from_masks(3, [0b101, 0b001, 0b111])
    assert len(fam) == 3
    assert VarSet(0b101, 3) in fam
    # iteration is (cardinality, mask)-sorted
    assert [v.mask for v in fam] == [0b001, 0b101, 0b111]
    assert fam.masks() == (0b001, 0b101, 0b111)


def test_family_closure_predicates():
    down = SubsetFamily.from_masks(2, [0b00, 0b01, 0b10])
    up = SubsetFamily.from_masks(2, [0b01, 0b11])
    assert down.is_downward_closed() and not down.is_upward_closed()
    assert up.is_upward_closed() and not up.is_downward_closed()


def test_full_lattice_guard():
    assert len(SubsetFamily.full_lattice(4)) == 16
    with pytest.raises(LatticeLimitError):
        SubsetFamily.full_lattice(25)
    # per-call override beats the default
    with pytest.raises(LatticeLimitError):
        SubsetFamily.full_lattice(5, max_n=4)


def test_lattice_guard_env_override(monkeypatch):
    monkeypatch.setenv("STANLEY_MAX_N", "3")
    with pytest.raises(LatticeLimitError):
        SubsetFamily.full_lattice(4)
    monkeypatch.setenv("STANLEY_MAX_N", "5")
    assert len(SubsetFamily.full_lattice(5)) == 32


def test_alpha_vector_empty_family():
    assert alpha_vector(SubsetFamily.empty(3)).counts == (0, 0, 0, 0)


def test_alpha_vector_full_lattice():
    assert alpha_vector(SubsetFamily.full_lattice(3)).counts == (1, 3, 3, 1)


def test_alpha_vector_counts_by_cardinality(rng):
    for _ in range(25):
        n = rng.randint(1, 8)
        masks = set(rng.sample(range(1 << n), rng.randint(0, 1 << n)))
        fam = SubsetFamily.from_masks(n, masks)
        alphas = alpha_vector(fam)
        assert alphas.total() == len(fam)
        assert all(alphas[k] <= binom(n, k) for k in range(n + 1))


def test_alpha_vector_rejects_negative_counts():
    with pytest.raises(ValueError):
        AlphaVector((1, -1))
