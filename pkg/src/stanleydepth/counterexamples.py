"""The Duval-Goeckner-Klivans-Martin counterexample instances.

Two classical fixtures from the literature on the Stanley conjecture,
embedded here so they are available without external files:

* a 16-variable squarefree ideal whose quotient is Cohen-Macaulay with
  depth(S/I) = 4 while sdepth(S/I) = 3 (Stanley's inequality fails for
  quotients); the exact Stanley depth of this instance is out of reach
  for exhaustive search and is used to exercise budget handling;
* a 6-variable subquotient J/I with depth(J/I) = 4 and sdepth(J/I) = 3,
  the small relative counterexample.

The depth values are external facts from that literature; nothing in
this package recomputes them.
"""

from __future__ import annotations

from .fileio import parse_ideal_text
from .ideals import MonomialIdeal

# 49 quadratic + 15 cubic minimal generators.
DUVAL_16_IDEAL_TEXT = """\
n=16
x13*x16
x12*x16
x11*x16
x10*x16
x9*x16
x8*x16
x6*x16
x3*x16
x1*x16
x13*x15
x12*x15
x11*x15
x10*x15
x9*x15
x8*x15
x3*x15
x13*x14
x12*x14
x11*x14
x10*x14
x9*x14
x8*x14
x10*x13
x9*x13
x8*x13
x6*x13
x3*x13
x1*x13
x10*x12
x9*x12
x8*x12
x3*x12
x10*x11
x9*x11
x8*x11
x6*x10
x3*x10
x1*x10
x3*x9
x5*x7
x3*x7
x2*x7
x1*x7
x5*x6
x2*x6
x1*x6
x4*x5
x3*x5
x1*x4
x4*x15*x16
x2*x15*x16
x2*x4*x15
x6*x7*x14
x1*x5*x14
x4*x12*x13
x2*x12*x13
x2*x4*x12
x6*x7*x11
x1*x5*x11
x4*x9*x10
x2*x9*x10
x2*x4*x9
x6*x7*x8
x1*x5*x8
"""

# Subquotient J/I in 6 variables, argument order (J, I) with I <= J.
DUVAL_6_UPPER_TEXT = """\
n=6
x1*x2
x1*x5
x1*x6
x2*x3
x2*x4
x4*x6
"""

DUVAL_6_LOWER_TEXT = """\
n=6
x1*x4*x5
x4*x6
x2*x3*x6
"""

#: depth(S/I) for the 16-variable quotient, from the source literature.
DUVAL_16_QUOTIENT_DEPTH = 4
#: sdepth(J/I) and depth(J/I) for the 6-variable subquotient, ditto.
DUVAL_6_SDEPTH = 3
DUVAL_6_DEPTH = 4

#: Level counts of the 16-variable quotient poset, frozen from this
#: package's own two independent counting pipelines (the published report
#: of these numbers misprints the vertex count as 15; the complex has 16
#: vertices, consistent with its own beta arithmetic).
DUVAL_16_QUOTIENT_ALPHA = (1, 16, 71, 98, 42) + (0,) * 12

#: Level counts of the 6-variable subquotient poset.
DUVAL_6_SUBQUOTIENT_ALPHA = (0, 0, 5, 10, 5, 0, 0)


def duval_16_ideal() -> MonomialIdeal:
    """The 16-variable ideal; 64 minimal generators."""
    return parse_ideal_text(DUVAL_16_IDEAL_TEXT)


def duval_6_pair() -> tuple[MonomialIdeal, MonomialIdeal]:
    """The 6-variable pair (J, I) with I <= J."""
    return parse_ideal_text(DUVAL_6_UPPER_TEXT), parse_ideal_text(DUVAL_6_LOWER_TEXT)
