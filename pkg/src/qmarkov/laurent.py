"""Exact Laurent polynomials in one variable ``q`` with integer coefficients.

Coefficients are Python ints, so arithmetic never rounds or overflows.
A polynomial is stored as a sparse ``{exponent: coefficient}`` mapping with
no zero coefficients; the zero polynomial is the empty mapping.
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import EmptySupportError, MalformedInputError, NonDivisibleError


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    c[int(k)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def from_coeffs(cls, min_exp: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build from a dense coefficient list starting at ``min_exp``."""
        return cls({min_exp + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> Mapping[int, int]:
        return MappingProxyType(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise EmptySupportError("degree of the zero polynomial is undefined")
        return max(self._c)

    def min_degree(self) -> int:
        if not self._c:
            raise EmptySupportError("min_degree of the zero polynomial is undefined")
        return min(self._c)

    def leading_coefficient(self) -> int:
        return self._c[self.degree()]

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def dense(self) -> list[int]:
        """Coefficients from min_degree to degree, interior zeros included."""
        if not self._c:
            return []
        lo, hi = self.min_degree(), self.degree()
        return [self._c.get(k, 0) for k in range(lo, hi + 1)]

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, highest exponent first."""
        return sorted(self._c.items(), reverse=True)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c: dict[int, int] = {}
        get = c.get
        for j, v in b.items():
            for i, u in a.items():
                k = i + j
                c[k] = get(k, 0) + u * v
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                (k, v), = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({k * n: v ** -n})
            raise NonDivisibleError("only unit monomials have negative powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._c.items()))!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in self.terms():
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if v < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        """``{"min_exp": int, "coeffs": [decimal strings]}``; zero is min_exp 0, no coeffs."""
        if not self._c:
            return {"min_exp": 0, "coeffs": []}
        return {"min_exp": self.min_degree(), "coeffs": [str(c) for c in self.dense()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        try:
            min_exp = obj["min_exp"]
            coeffs = [int(c) for c in obj["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad LaurentPoly JSON: {obj!r}") from exc
        if not isinstance(min_exp, int) or isinstance(min_exp, bool):
            raise MalformedInputError("min_exp must be an integer")
        return cls.from_coeffs(min_exp, coeffs)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)
Q_INV = LaurentPoly.monomial(-1)


def add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def q_int(n: int) -> LaurentPoly:
    """The q-integer [n]_q = (q^n - 1)/(q - 1), for any integer n.

    >>> str(q_int(3))
    'q^2 + q + 1'
    >>> str(q_int(-2))
    '-q^-1 - q^-2'
    """
    if n >= 0:
        return LaurentPoly({k: 1 for k in range(n)})
    # (q^n - 1)/(q - 1) = -q^n [-n]_q
    return LaurentPoly({k: -1 for k in range(n, 0)})


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return u with u*d == p, or raise NonDivisibleError."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    d_hi, d_lo = d.degree(), d.min_degree()
    lead = d.leading_coefficient()
    floor = p.min_degree() - d_lo  # lowest exponent a quotient may have
    rem = dict(p._c)
    quot: dict[int, int] = {}
    dterms = list(d._c.items())
    while rem:
        top = max(rem)
        k = top - d_hi
        if k < floor:
            raise NonDivisibleError(f"{p} is not divisible by {d}")
        c, r = divmod(rem[top], lead)
        if r:
            raise NonDivisibleError(f"{p} is not divisible by {d}")
        quot[k] = c
        for e, v in dterms:
            key = e + k
            s = rem.get(key, 0) - c * v
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(quot)


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def is_palindromic(p: LaurentPoly) -> bool:
    """True iff p is fixed by q -> 1/q."""
    c = p._c
    return all(c.get(-k) == v for k, v in c.items())


def is_unimodal(p: LaurentPoly) -> bool:
    """Weakly increasing then weakly decreasing over the full exponent range."""
    seq = p.dense()
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i >= n - 1


def is_positive(p: LaurentPoly) -> bool:
    """All coefficients non-negative (vacuous for zero)."""
    return all(v > 0 for v in p._c.values())


def is_monic(p: LaurentPoly) -> bool:
    return not p.is_zero() and p.leading_coefficient() == 1


def is_monic_palindromic_positive(p: LaurentPoly) -> bool:
    return is_monic(p) and is_positive(p) and is_palindromic(p)


# q^{-1}[3]_q = q + 1 + q^{-1}, the recurring trace constant
Q3 = q_int(3).shift(-1)
