"""Reference values used as test oracles.

Dense coefficient lists run from the lowest exponent upward.
"""
from qmarkov.farey import FareyRational
from qmarkov.laurent import LaurentPoly


def palin(*upper):
    """Palindromic poly from the coefficients q^d ... q^0 (top down to constant)."""
    d = len(upper) - 1
    coeffs = list(upper) + list(reversed(upper[:-1]))
    return LaurentPoly.from_coeffs(-d, coeffs[::-1])


# m: (label, q-deformation)
GOLDEN = {
    1: ("0/1", LaurentPoly.const(1)),
    2: ("1/1", LaurentPoly({1: 1, -1: 1})),
    5: ("1/2", palin(1, 1, 1)),
    13: ("1/3", palin(1, 2, 2, 3)),
    29: ("2/3", palin(1, 2, 4, 5, 5)),
    34: ("1/4", palin(1, 3, 4, 6, 6)),
    89: ("1/5", palin(1, 4, 7, 11, 14, 15)),
    169: ("3/4", palin(1, 3, 8, 14, 20, 25, 27)),
    194: ("2/5", palin(1, 4, 9, 16, 23, 29, 30)),
}


def golden_labels():
    return [(FareyRational.parse(lbl), m, p) for m, (lbl, p) in GOLDEN.items()]


SNAKE_3_5_MU_AT_ONE = [2, 3, 5, 7, 12, 17, 29, 46, 75, 104, 179, 254, 433]

# t = 3/5: weighted edges as ((x1, y1), (x2, y2)) -> exponent
SNAKE_3_5_WEIGHTS = {
    ((0, 0), (0, 1)): -1,
    ((0, 0), (1, 0)): 1,
    ((1, 0), (2, 0)): -1,
    ((2, 0), (3, 0)): 1,
    ((2, 1), (2, 2)): 1,
    ((2, 2), (2, 3)): -1,
    ((3, 2), (4, 2)): -1,
    ((4, 2), (5, 2)): 1,
    ((5, 2), (6, 2)): -1,
    ((6, 2), (7, 2)): 1,
    ((6, 3), (6, 4)): 1,
    ((6, 4), (6, 5)): -1,
    ((7, 4), (8, 4)): -1,
    ((8, 4), (9, 4)): 1,
}

# top-right entry of A(1)_q B(1)_q^2, label 2/3
TILDE_2_3 = LaurentPoly({3: 1, 2: 3, 1: 5, 0: 6, -1: 6, -2: 5, -3: 2, -4: 1})
