"""Published Jaco graph tables for ``n <= 12``, kept as literal data.

Verification compares freshly computed rows against these so that a bug
cannot cancel out by appearing on both sides.
"""

# n: (d-(v_n), d+(v_n), weight sequence of J_n(1))
TABLE1 = {
    1: (0, 1, (0,)),
    2: (1, 1, (-1, -1)),
    3: (1, 2, (-1, 1, -1)),
    4: (1, 3, (-1, 1, 1, -1)),
    5: (2, 3, (-1, 1, -2, 1, 1)),
    6: (2, 4, (-1, 1, -2, -2, -2, 1)),
    7: (3, 4, (-1, 1, -2, 3, 3, -2, -2)),
    8: (3, 5, (-1, 1, -2, 3, -5, 3, 3, -2)),
    9: (3, 6, (-1, 1, -2, 3, -5, -5, -5, 3, -2)),
    10: (4, 6, (-1, 1, -2, 3, -5, 8, 8, -5, 3, 3)),
    11: (4, 7, (-1, 1, -2, 3, -5, 8, -13, 8, -5, -5, 3)),
    12: (4, 8, (-1, 1, -2, 3, -5, 8, -13, -13, 8, 8, -5, 3)),
}

# n: (d-(v_n), d+(v_n), Z1, Z2, Z3, Z4) for J_n(1)
TABLE2 = {
    1: (0, 1, 0, 0, 0, 0),
    2: (1, 1, 2, 1, 0, 0),
    3: (1, 2, 3, -2, 4, 4),
    4: (1, 3, 4, -1, 4, 8),
    5: (2, 3, 8, -6, 11, 16),
    6: (2, 4, 15, 5, 11, 25),
    7: (3, 4, 32, -26, 35, 56),
    8: (3, 5, 62, -19, 50, 98),
    9: (3, 6, 103, 0, 72, 138),
    10: (4, 6, 211, 38, 119, 251),
    11: (4, 7, 396, -238, 210, 402),
    12: (4, 8, 604, -158, 273, 566),
}

TABLE1_COLUMNS = ("d_minus", "d_plus", "weights")
TABLE2_COLUMNS = ("d_minus", "d_plus", "z1", "z2", "z3", "z4")

# Printed cells that disagree with the definitions applied to the printed
# weights in TABLE1; the Z4 sum depends only on those weights.
TABLE2_ERRATA = {(10, "z4"), (11, "z3"), (11, "z4"), (12, "z4")}
