"""Rational labels in [0, 1], their Stern-Brocot descent, and Christoffel words."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import MalformedInputError, NotNeighborsError


@dataclass(frozen=True, order=False)
class FareyRational:
    """A reduced fraction p/r with 0 <= p/r <= 1."""

    numerator: int
    denominator: int

    def __post_init__(self):
        p, r = self.numerator, self.denominator
        if not isinstance(p, int) or not isinstance(r, int):
            raise MalformedInputError("numerator and denominator must be integers")
        if r <= 0 or p < 0 or p > r:
            raise MalformedInputError(f"label {p}/{r} is outside [0, 1]")
        g = gcd(p, r)
        if g > 1:
            object.__setattr__(self, "numerator", p // g)
            object.__setattr__(self, "denominator", r // g)

    @classmethod
    def parse(cls, text: str) -> "FareyRational":
        """Parse ``"p/r"``."""
        try:
            p, r = text.strip().split("/")
            return cls(int(p), int(r))
        except ValueError as exc:
            if isinstance(exc, MalformedInputError):
                raise
            raise MalformedInputError(f"cannot parse label {text!r}; expected p/r") from exc

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"

    def __lt__(self, other: "FareyRational") -> bool:
        return self.numerator * other.denominator < other.numerator * self.denominator

    def as_tuple(self) -> tuple[int, int]:
        return self.numerator, self.denominator


ZERO_LABEL = FareyRational(0, 1)
ONE_LABEL = FareyRational(1, 1)
HALF_LABEL = FareyRational(1, 2)


class Step(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


def _det(a: FareyRational, b: FareyRational) -> int:
    return a.numerator * b.denominator - b.numerator * a.denominator


def mediant(a: FareyRational, b: FareyRational) -> FareyRational:
    if abs(_det(a, b)) != 1:
        raise NotNeighborsError(f"{a} and {b} are not Farey neighbors")
    return FareyRational(a.numerator + b.numerator, a.denominator + b.denominator)


def stern_brocot_path(t: FareyRational) -> list[Step]:
    """Descent from the region 1/2 (between 0/1 and 1/1) down to t.

    The endpoints 0/1 and 1/1 are not below that vertex and get an empty path.
    """
    if t in (ZERO_LABEL, ONE_LABEL):
        return []
    lo, hi = ZERO_LABEL, ONE_LABEL
    path = []
    while True:
        mid = mediant(lo, hi)
        if mid == t:
            return path
        if mid < t:
            path.append(Step.RIGHT)
            lo = mid
        else:
            path.append(Step.LEFT)
            hi = mid


def follow_path(path: list[Step]) -> FareyRational:
    """Replay a descent path; inverse of :func:`stern_brocot_path`."""
    lo, hi = ZERO_LABEL, ONE_LABEL
    mid = mediant(lo, hi)
    for step in path:
        if step is Step.RIGHT:
            lo = mid
        else:
            hi = mid
        mid = mediant(lo, hi)
    return mid


def descend(t: FareyRational) -> Iterator[tuple[FareyRational, FareyRational, Step | None]]:
    """Yield ``(left, right, step)`` neighbor pairs visited on the way to t.

    The first pair is (0/1, 1/1) with step None; each following pair is the
    parent pair after taking ``step``.  The mediant of the last pair is t.
    """
    lo, hi = ZERO_LABEL, ONE_LABEL
    yield lo, hi, None
    for step in stern_brocot_path(t):
        mid = mediant(lo, hi)
        if step is Step.RIGHT:
            lo = mid
        else:
            hi = mid
        yield lo, hi, step


def labels_up_to(max_denominator: int) -> list[FareyRational]:
    """All reduced labels in [0, 1] with denominator <= max_denominator, ascending."""
    out = {
        FareyRational(p, r)
        for r in range(1, max_denominator + 1)
        for p in range(0, r + 1)
        if gcd(p, r) == 1
    }
    return sorted(out, key=lambda f: (f.numerator / f.denominator, f.denominator))


@dataclass(frozen=True)
class ChristoffelWord:
    letters: str
    label: FareyRational

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)


def christoffel_word(t: FareyRational) -> ChristoffelWord:
    """Word in X, Y labelling the region t, built by concatenating parent words.

    Seeds: w(0/1) = X, w(1/1) = XY; a region between u and v carries uv.
    """
    if t == ZERO_LABEL:
        return ChristoffelWord("X", t)
    if t == ONE_LABEL:
        return ChristoffelWord("XY", t)
    wl, wr = "X", "XY"
    for step in stern_brocot_path(t):
        if step is Step.RIGHT:
            wl = wl + wr
        else:
            wr = wl + wr
    return ChristoffelWord(wl + wr, t)


def recode_ab(w: ChristoffelWord | str) -> str:
    """Rewrite an X/Y word over A = X, B = XY."""
    letters = w.letters if isinstance(w, ChristoffelWord) else w
    out = []
    i = 0
    while i < len(letters):
        if letters[i] != "X":
            raise MalformedInputError(f"{letters!r} is not a word in A = X, B = XY")
        if i + 1 < len(letters) and letters[i + 1] == "Y":
            out.append("B")
            i += 2
        else:
            out.append("A")
            i += 1
    return "".join(out)


def substitute_ab(word: str) -> str:
    """Inverse of :func:`recode_ab`: A -> X, B -> XY."""
    table = {"A": "X", "B": "XY"}
    try:
        return "".join(table[ch] for ch in word)
    except KeyError as exc:
        raise MalformedInputError(f"{word!r} is not a word in A, B") from exc
