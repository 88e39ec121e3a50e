"""q-Markov triples, the Vieta mutation, and descent of the Markov tree.

The tree is walked along the Stern-Brocot path of the target label.  At
each vertex we keep the polynomials of the left region, the right region and
the region below; the region above is ``Q3*left*right - below``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import MalformedInputError
from .farey import ONE_LABEL, ZERO_LABEL, FareyRational, Step, stern_brocot_path
from .laurent import ONE, Q, Q3, Q_INV, LaurentPoly, is_monic, is_palindromic

TWO_Q = Q + Q_INV
# (q - 1)(q^{-1} - 1) = 2 - q - q^{-1}
EQUATION_CONSTANT = (Q - 1) * (Q_INV - 1)


@dataclass(frozen=True)
class QMarkovTriple:
    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def at_one(self) -> tuple[int, int, int]:
        return self.a.eval_at_one(), self.b.eval_at_one(), self.c.eval_at_one()


def mutate(t: QMarkovTriple) -> QMarkovTriple:
    """Replace c by Q3*a*b - c."""
    return QMarkovTriple(t.a, t.b, Q3 * t.a * t.b - t.c)


def equation_residual(t: QMarkovTriple) -> LaurentPoly:
    a, b, c = t
    return a * a + b * b + c * c - Q3 * a * b * c - EQUATION_CONSTANT


def verify_equation(t: QMarkovTriple) -> bool:
    return equation_residual(t).is_zero()


def is_classical_markov(a: int, b: int, c: int) -> bool:
    return a > 0 and b > 0 and c > 0 and a * a + b * b + c * c == 3 * a * b * c


def _walk(t: FareyRational, k, left, right, below):
    for step in stern_brocot_path(t):
        above = k * left * right - below
        if step is Step.RIGHT:
            left, below = above, left
        else:
            right, below = above, right
    return left, right, below


def vertex_triple(t: FareyRational) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
    """(left, right, below, above) region polynomials at the vertex creating t.

    ``above`` is m_q^t itself.  Only defined for 0 < t < 1.
    """
    if t in (ZERO_LABEL, ONE_LABEL):
        raise MalformedInputError("endpoint labels have no creating vertex")
    left, right, below = _walk(t, Q3, ONE, TWO_Q, ONE)
    return left, right, below, Q3 * left * right - below


def q_markov_number(t: FareyRational) -> LaurentPoly:
    """The q-Markov number with label t, by mutation along the tree."""
    if t == ZERO_LABEL:
        return ONE
    if t == ONE_LABEL:
        return TWO_Q
    return vertex_triple(t)[3]


def markov_number(t: FareyRational) -> int:
    """Classical Markov number m^t by integer mutation 3ab - c."""
    if t == ZERO_LABEL:
        return 1
    if t == ONE_LABEL:
        return 2
    left, right, below = _walk(t, 3, 1, 2, 1)
    return 3 * left * right - below


def tree_triples(max_denominator: int) -> Iterator[tuple[FareyRational, QMarkovTriple, QMarkovTriple]]:
    """Walk every tree vertex whose new label has denominator <= max_denominator.

    Yields ``(label, (left, right, below), (left, right, above))``: the two
    triples sharing the edge that the vertex sits on.
    """
    from .farey import mediant

    stack = [(ZERO_LABEL, ONE_LABEL, ONE, TWO_Q, ONE)]
    while stack:
        lo, hi, ml, mr, mb = stack.pop()
        mid = mediant(lo, hi)
        if mid.denominator > max_denominator:
            continue
        above = Q3 * ml * mr - mb
        yield mid, QMarkovTriple(ml, mr, mb), QMarkovTriple(ml, mr, above)
        stack.append((mid, hi, above, mr, ml))
        stack.append((lo, mid, ml, above, mr))


def recover_label(m: LaurentPoly) -> FareyRational:
    """Recover t from m_q^t via t = (d - alpha)/(alpha + 1).

    d is the degree and alpha the coefficient of q^(d-1).
    """
    if m.is_zero() or not is_monic(m) or not is_palindromic(m):
        raise MalformedInputError(f"{m} is not monic palindromic")
    d = m.degree()
    if d < 0:
        raise MalformedInputError("negative degree")
    alpha = m.coefficient(d - 1) if d > 0 else 0
    num, den = d - alpha, alpha + 1
    if num < 0 or num > den:
        raise MalformedInputError(f"{m} does not give a label in [0, 1]")
    return FareyRational(num, den)
