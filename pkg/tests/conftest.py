import random

import pytest

from stanleydepth import MonomialIdeal, SubsetFamily, VarSet, minimalize


def random_ideal(rng: random.Random, n: int, max_gens: int = 6) -> MonomialIdeal:
    """A random squarefree ideal in n variables (possibly zero)."""
    gens = []
    for _ in range(rng.randint(0, max_gens)):
        size = rng.randint(1, n)
        support = rng.sample(range(1, n + 1), size)
        gens.append(VarSet.from_positions(support, n))
    return minimalize(gens, n)


def random_family(
    rng: random.Random, n: int, max_members: int, downward_closed: bool = False
) -> SubsetFamily:
    count = rng.randint(1, min(max_members, 1 << n))
    masks = set(rng.sample(range(1 << n), count))
    if downward_closed:
        closed = set()
        for b in masks:
            sub = b
            while True:
                closed.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        masks = closed
    return SubsetFamily.from_masks(n, masks)


@pytest.fixture
def rng():
    return random.Random(0x5DEF)
