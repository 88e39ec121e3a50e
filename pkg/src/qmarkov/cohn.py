"""q-deformed Cohn matrices and the trace route to q-Markov numbers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .errors import NonDivisibleError
from .farey import ZERO_LABEL, FareyRational, christoffel_word, recode_ab
from .laurent import ONE, Q, Q3, Q_INV, ZERO, LaurentPoly, exact_div, q_int


@dataclass(frozen=True)
class QMatrix2:
    """2x2 matrix over any commutative ring supporting + - * and ==.

    Used with LaurentPoly entries here and with TriPoly entries in the
    three-parameter deformation.
    """

    e11: Any
    e12: Any
    e21: Any
    e22: Any

    @classmethod
    def identity(cls, one=ONE, zero=ZERO) -> "QMatrix2":
        return cls(one, zero, zero, one)

    def __matmul__(self, o: "QMatrix2") -> "QMatrix2":
        return QMatrix2(
            self.e11 * o.e11 + self.e12 * o.e21,
            self.e11 * o.e12 + self.e12 * o.e22,
            self.e21 * o.e11 + self.e22 * o.e21,
            self.e21 * o.e12 + self.e22 * o.e22,
        )

    def scale(self, s) -> "QMatrix2":
        return QMatrix2(s * self.e11, s * self.e12, s * self.e21, s * self.e22)

    def __sub__(self, o: "QMatrix2") -> "QMatrix2":
        return QMatrix2(self.e11 - o.e11, self.e12 - o.e12, self.e21 - o.e21, self.e22 - o.e22)

    def trace(self):
        return self.e11 + self.e22

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def adjugate(self) -> "QMatrix2":
        return QMatrix2(self.e22, -self.e12, -self.e21, self.e11)

    def inverse(self) -> "QMatrix2":
        """Inverse over the ring; the determinant must be a unit (e.g. 1 or a monomial)."""
        d = self.det()
        if d == 1:
            return self.adjugate()
        try:
            d_inv = d ** -1
        except NonDivisibleError as exc:
            raise NonDivisibleError(f"determinant {d} is not a unit") from exc
        return self.adjugate().scale(d_inv)

    def map(self, f: Callable) -> "QMatrix2":
        return QMatrix2(f(self.e11), f(self.e12), f(self.e21), f(self.e22))

    def rows(self) -> list[list]:
        return [[self.e11, self.e12], [self.e21, self.e22]]

    def is_zero(self) -> bool:
        return all(e == 0 for e in (self.e11, self.e12, self.e21, self.e22))

    def at_one(self) -> tuple[tuple[int, int], tuple[int, int]]:
        f = lambda p: p.eval_at_one()  # noqa: E731
        return (f(self.e11), f(self.e12)), (f(self.e21), f(self.e22))

    def to_json(self) -> list[list[dict]]:
        return [[e.to_json() for e in row] for row in self.rows()]

    def __str__(self):
        return f"[[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]]"


def generators_q() -> tuple[QMatrix2, QMatrix2, QMatrix2]:
    """(T_q, S_q, L_q) with L_q = T_q S_q T_q."""
    T = QMatrix2(Q, ONE, ZERO, ONE)
    S = QMatrix2(ZERO, -ONE, Q, ZERO)
    L = QMatrix2(Q, ZERO, Q, ONE)
    return T, S, L


def braid_pair() -> tuple[QMatrix2, QMatrix2]:
    """T_q and the projective inverse of L_q, [[1, 0], [-q, q]]."""
    T, _, L = generators_q()
    return T, L.adjugate()


def braid_residual() -> QMatrix2:
    """T L' T - L' T L' for the braid pair; zero when the braid relation holds."""
    T, Li = braid_pair()
    return (T @ Li @ T) - (Li @ T @ Li)


def cohn_a(n: int) -> QMatrix2:
    qn, q3n = q_int(n), q_int(3 - n)
    return QMatrix2(
        qn.shift(2 - n),
        LaurentPoly.monomial(1 - n),
        qn * q3n - LaurentPoly.monomial(n - 1),
        q3n.shift(-1),
    )


def cohn_b(n: int) -> QMatrix2:
    return cohn_a(n) @ cohn_a(n + 1)


def word_product(word: str, mats: dict[str, QMatrix2], identity: QMatrix2 | None = None) -> QMatrix2:
    """Multiply letter matrices left to right."""
    if not word:
        return identity if identity is not None else QMatrix2.identity()
    it = iter(word)
    acc = mats[next(it)]
    for ch in it:
        acc = acc @ mats[ch]
    return acc


def cohn_matrix(t: FareyRational, n: int, route: str = "ab") -> QMatrix2:
    """C_t(n): substitute into the Christoffel word of t.

    ``route="xy"`` uses X -> A(n), Y -> A(n+1); ``route="ab"`` uses the
    recoded word with A -> A(n), B -> B(n).  Both give the same matrix.
    """
    if t == ZERO_LABEL:
        return cohn_a(n)
    w = christoffel_word(t)
    if route == "xy":
        return word_product(w.letters, {"X": cohn_a(n), "Y": cohn_a(n + 1)})
    if route == "ab":
        return word_product(recode_ab(w), {"A": cohn_a(n), "B": cohn_b(n)})
    raise ValueError(f"unknown route {route!r}")


def q_markov_via_trace(t: FareyRational, n: int = 1) -> LaurentPoly:
    """Tr(C_t(n)) / (q + 1 + 1/q)."""
    return exact_div(cohn_matrix(t, n).trace(), Q3)


def entry_relations_check(c: QMatrix2) -> bool:
    """Both first-row and second-column expressions for Tr(C)/(q^-1 [3]_q)."""
    tr = c.trace()
    via_row = (Q_INV - LaurentPoly.monomial(-2)) * c.e11 + Q_INV * c.e12
    via_col = LaurentPoly.monomial(2) * c.e12 + (Q - LaurentPoly.monomial(2)) * c.e22
    return tr == Q3 * via_row and tr == Q3 * via_col


def extended_tree_identity(n: int) -> bool:
    """A(n)_q B(n)_q^{-1} == A(n-2)_q."""
    return cohn_a(n) @ cohn_b(n).inverse() == cohn_a(n - 2)


def tilde_q_markov(t: FareyRational) -> LaurentPoly:
    """Top-right entry of C_t built from A(1)_q, B(1)_q."""
    return cohn_matrix(t, 1).e12
