"""Three-parameter deformation of Cohn matrices and F-polynomial checks."""
from __future__ import annotations

import re
from types import MappingProxyType
from typing import Mapping

from .cohn import QMatrix2, cohn_a, cohn_b, word_product
from .errors import MalformedInputError, NonDivisibleError
from .farey import FareyRational, christoffel_word, recode_ab
from .laurent import LaurentPoly

Exp = tuple[int, int, int]


class TriPoly:
    """Laurent polynomial in commuting y1, y2, y3 with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Exp, int] | None = None):
        self._c = {tuple(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def const(cls, v: int) -> "TriPoly":
        return cls({(0, 0, 0): v})

    @classmethod
    def var(cls, i: int) -> "TriPoly":
        e = [0, 0, 0]
        e[i - 1] = 1
        return cls({tuple(e): 1})

    @property
    def coeffs(self) -> Mapping[Exp, int]:
        return MappingProxyType(self._c)

    def _coerce(self, o):
        if isinstance(o, TriPoly):
            return o
        if isinstance(o, int):
            return TriPoly.const(o)
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            c[k] = c.get(k, 0) + v
        return TriPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        c: dict[Exp, int] = {}
        for (a1, a2, a3), u in self._c.items():
            for (b1, b2, b3), v in o._c.items():
                k = (a1 + b1, a2 + b2, a3 + b3)
                c[k] = c.get(k, 0) + u * v
        return TriPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n >= 0:
            out = TriPoly.const(1)
            for _ in range(n):
                out = out * self
            return out
        if len(self._c) == 1:
            (k, v), = self._c.items()
            if v in (1, -1):
                return TriPoly({(k[0] * n, k[1] * n, k[2] * n): v ** -n})
        raise NonDivisibleError(f"{self} is not a unit")

    def __eq__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_unit(self) -> bool:
        return self.is_monomial() and abs(next(iter(self._c.values()))) == 1

    def evaluate(self, y1: int, y2: int, y3: int) -> int:
        """Value at integer point; all exponents must be >= 0 unless the point is +-1."""
        total = 0
        for (a, b, c), v in self._c.items():
            total += v * _ipow(y1, a) * _ipow(y2, b) * _ipow(y3, c)
        return total

    def specialize_q(self) -> LaurentPoly:
        """Set y1 = y2 = y3 = q."""
        out: dict[int, int] = {}
        for (a, b, c), v in self._c.items():
            out[a + b + c] = out.get(a + b + c, 0) + v
        return LaurentPoly(out)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in sorted(self._c.items(), reverse=True):
            mono = "*".join(
                f"y{i + 1}" if e == 1 else f"y{i + 1}^{e}" for i, e in enumerate(k) if e
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self) -> list:
        return [[list(k), str(v)] for k, v in sorted(self._c.items())]


def _ipow(base: int, e: int) -> int:
    if e >= 0:
        return base**e
    if base in (1, -1):
        return base ** (-e)
    raise NonDivisibleError("negative exponent at a non-unit point")


_TERM = re.compile(r"^(\d*)\*?((?:y[123](?:\^\d+)?\*?)*)$")


def parse_tripoly(text: str) -> TriPoly:
    """Parse sums like ``y2y3^2 + 2y2y3 + y2 + 1`` (non-negative coefficients)."""
    coeffs: dict[Exp, int] = {}
    for raw in text.replace(" ", "").split("+"):
        m = _TERM.match(raw)
        if not raw or not m:
            raise MalformedInputError(f"cannot parse term {raw!r}")
        num, mono = m.groups()
        if not num and not mono:
            raise MalformedInputError(f"empty term in {text!r}")
        exp = [0, 0, 0]
        for var, power in re.findall(r"y([123])(?:\^(\d+))?", mono):
            exp[int(var) - 1] += int(power) if power else 1
        key = tuple(exp)
        coeffs[key] = coeffs.get(key, 0) + (int(num) if num else 1)
    return TriPoly(coeffs)


Y1, Y2, Y3 = TriPoly.var(1), TriPoly.var(2), TriPoly.var(3)
T_ONE, T_ZERO = TriPoly.const(1), TriPoly.const(0)


def hat_a_factors() -> tuple[QMatrix2, QMatrix2]:
    return (
        QMatrix2(Y3, T_ONE, T_ZERO, T_ONE),
        QMatrix2(Y2, T_ZERO, Y2, T_ONE),
    )


def hat_b_factors() -> tuple[QMatrix2, QMatrix2, QMatrix2, QMatrix2]:
    return (
        QMatrix2(Y3, T_ONE, T_ZERO, T_ONE),
        QMatrix2(Y1, T_ONE, T_ZERO, T_ONE),
        QMatrix2(Y2, T_ZERO, Y2, T_ONE),
        QMatrix2(Y3, T_ZERO, Y2, T_ONE),
    )


def hat_a() -> QMatrix2:
    f1, f2 = hat_a_factors()
    return f1 @ f2


def hat_b() -> QMatrix2:
    f1, f2, f3, f4 = hat_b_factors()
    return f1 @ f2 @ f3 @ f4


def hat_cohn(t: FareyRational) -> QMatrix2:
    """Substitute A -> hat_a, B -> hat_b in the A/B word of t (0 < t <= 1)."""
    if t.numerator == 0:
        raise MalformedInputError("hat_cohn is defined for 0 < t <= 1")
    word = recode_ab(christoffel_word(t))
    return word_product(word, {"A": hat_a(), "B": hat_b()})


def conjecture_check(t: FareyRational, expected_f: TriPoly) -> bool:
    """Top-right entry of hat_cohn(t) equals the given F-polynomial exactly."""
    return hat_cohn(t).e12 == expected_f


def unit_ratio(p: TriPoly, r: TriPoly) -> TriPoly | None:
    """The unit u with p == u*r when one exists among +-monomials, else None."""
    if not p._c or not r._c or len(p._c) != len(r._c):
        return None
    kp, vp = max(p._c.items())
    kr, vr = max(r._c.items())
    if vp not in (vr, -vr):
        return None
    u = TriPoly({tuple(a - b for a, b in zip(kp, kr)): vp // vr})
    return u if u * r == p else None


def monomial_ratio(p: LaurentPoly, r: LaurentPoly) -> int | None:
    """k with p == q^k * r, else None."""
    if p.is_zero() or r.is_zero():
        return None
    k = p.degree() - r.degree()
    return k if r.shift(k) == p else None


def q_specialization_shift(t: FareyRational) -> int | None:
    """k such that hat_cohn(t) at y = q equals q^k times the A(2)_q/B(2)_q word.

    None when no single power of q relates all four entries.
    """
    word = recode_ab(christoffel_word(t))
    spec = hat_cohn(t).map(TriPoly.specialize_q)
    ref = word_product(word, {"A": cohn_a(2), "B": cohn_b(2)})
    shifts = {monomial_ratio(a, b) for a, b in zip(
        (spec.e11, spec.e12, spec.e21, spec.e22), (ref.e11, ref.e12, ref.e21, ref.e22))}
    if len(shifts) != 1 or None in shifts:
        return None
    return shifts.pop()


# Known F-polynomials of the Markov cluster algebra, keyed by label.
F_POLYNOMIALS: dict[str, str] = {
    "1/1": "y3 + 1",
    "1/2": "y2y3^2 + 2y2y3 + y2 + 1",
    "1/3": "y2^2y3^3 + 3y2^2y3^2 + 3y2^2y3 + y2^2 + 2y2y3 + 2y2 + 1",
    "1/4": (
        "y2^3y3^4 + 4y2^3y3^3 + 6y2^3y3^2 + 4y2^3y3 + 3y2^2y3^2 + y2^3 + 6y2^2y3"
        " + 3y2^2 + 2y2y3 + 3y2 + 1"
    ),
    "2/3": (
        "y1y2^2y3^4 + 2y1y2^2y3^3 + y2^2y3^4 + y1y2^2y3^2 + 4y2^2y3^3 + 6y2^2y3^2"
        " + 4y2^2y3 + 2y2y3^2 + y2^2 + 4y2y3 + 2y2 + 1"
    ),
    "3/4": (
        "y1^2y2^3y3^6 + 2y1^2y2^3y3^5 + 2y1y2^3y3^6 + y1^2y2^3y3^4 + 8y1y2^3y3^5"
        " + y2^3y3^6 + 12y1y2^3y3^4 + 6y2^3y3^5 + 8y1y2^3y3^3 + 2y1y2^2y3^4"
        " + 15y2^3y3^4 + 2y1y2^3y3^2 + 4y1y2^2y3^3 + 20y2^3y3^3 + 3y2^2y3^4"
        " + 2y1y2^2y3^2 + 15y2^3y3^2 + 12y2^2y3^3 + 6y2^3y3 + 18y2^2y3^2 + y2^3"
        " + 12y2^2y3 + 3y2y3^2 + 3y2^2 + 6y2y3 + 3y2 + 1"
    ),
}


def known_f_polynomial(t: FareyRational) -> TriPoly | None:
    text = F_POLYNOMIALS.get(str(t))
    return parse_tripoly(text) if text is not None else None
