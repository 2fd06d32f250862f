"""Hand-entered instances used by the test suite and the verification corpus."""

from .core_sign import GroundSet, SignVector
from .io import parse_arr, parse_svs

# Five lines; the positive side of each is the side stated in the comments.
FIVE_LINES_ARR = """\
dim: 2
kind: affine
1 : 0 -1 : -1     # y < 1
2 : -1 -1 : 1     # x + y < -1
3 : -1 0 : 0      # x < 0
4 : -1 0 : -3/2   # x < 3/2
5 : -1 1 : -1     # x - y < 1
"""

# One vertical line and two parallel horizontal lines.
THREE_LINES_ARR = """\
dim: 2
kind: affine
a : -1 0 : 0      # x < 0
b : 0 -1 : -1     # y < 1
c : 0 -1 : 1      # y < -1
"""

THREE_LINES_SVS = """\
elements: a b c
# symmetric part
0--
+--
+++
0++
-++
---
# asymmetric part
00-
0+0
0+-
+0-
-0-
++0
-+0
++-
-+-
"""

# Four lines through the origin, two of them coinciding.
COINCIDENT_ARR = """\
dim: 2
kind: central
a : 2 1 : 0
b : 0 1 : 0
c : 0 1 : 0
d : 2 -1 : 0
"""

ELIM_PAIR_GROUND = GroundSet("1234")
ELIM_PAIR_X = "+-+0"
ELIM_PAIR_Y = "-++0"
ELIM_PAIR_I1 = ["0-+0", "00+0", "0++0"]
ELIM_PAIR_I = ["0-+0", "00+0", "0++0", "-0+0", "+0+0"]
ELIM_PAIR_B = ["+++0", "--+0"]


def five_lines():
    return parse_arr(FIVE_LINES_ARR)


def coincident():
    return parse_arr(COINCIDENT_ARR)


def three_lines():
    return parse_arr(THREE_LINES_ARR)


def three_lines_system():
    return parse_svs(THREE_LINES_SVS)


def elim_pair():
    g = ELIM_PAIR_GROUND
    return SignVector.from_string(g, ELIM_PAIR_X), SignVector.from_string(g, ELIM_PAIR_Y)
