from math import gcd

import pytest
from hypothesis import given, strategies as st

from qmarkov.errors import MalformedInputError, NotNeighborsError
from qmarkov.farey import (
    FareyRational,
    Step,
    christoffel_word,
    follow_path,
    labels_up_to,
    mediant,
    recode_ab,
    stern_brocot_path,
    substitute_ab,
)

F = FareyRational.parse


@st.composite
def interior_labels(draw, max_den=60):
    r = draw(st.integers(2, max_den))
    p = draw(st.integers(1, r - 1).filter(lambda p: gcd(p, r) == 1))
    return FareyRational(p, r)


def lower_christoffel(p: int, r: int) -> str:
    """Direct lattice-path definition for slope p/r: X when (k p) mod (p+r) increases."""
    n = p + r
    out = []
    for k in range(1, n + 1):
        out.append("X" if (k * p) % n > ((k - 1) * p) % n else "Y")
    return "".join(out)


def test_construction_reduces_and_validates():
    assert FareyRational(2, 4) == FareyRational(1, 2)
    for bad in [(3, 2), (-1, 2), (1, 0)]:
        with pytest.raises(MalformedInputError):
            FareyRational(*bad)
    with pytest.raises(MalformedInputError):
        F("1-2")


def test_mediant():
    assert mediant(F("0/1"), F("1/1")) == F("1/2")
    assert mediant(F("1/2"), F("1/1")) == F("2/3")
    assert mediant(F("1/3"), F("2/5")) == F("3/8")
    with pytest.raises(NotNeighborsError):
        mediant(F("1/3"), F("3/5"))


@pytest.mark.parametrize(
    "label, path",
    [("1/2", []), ("2/3", [Step.RIGHT]), ("3/5", [Step.RIGHT, Step.LEFT]), ("0/1", []), ("1/1", [])],
)
def test_stern_brocot_path(label, path):
    assert stern_brocot_path(F(label)) == path


@given(interior_labels())
def test_path_roundtrip(t):
    assert follow_path(stern_brocot_path(t)) == t


@pytest.mark.parametrize(
    "label, word",
    [("3/5", "XXYXXYXY"), ("0/1", "X"), ("1/2", "XXY"), ("1/1", "XY"), ("2/3", "XXYXY"), ("1/3", "XXXY")],
)
def test_christoffel_word(label, word):
    assert christoffel_word(F(label)).letters == word


@given(interior_labels())
def test_christoffel_matches_lattice_definition(t):
    assert christoffel_word(t).letters == lower_christoffel(t.numerator, t.denominator)


@given(interior_labels())
def test_christoffel_letter_counts_and_palindrome(t):
    w = christoffel_word(t).letters
    assert w.count("Y") == t.numerator
    assert w.count("X") == t.denominator
    assert w[0] == "X" and w[-1] == "Y"
    inner = w[1:-1]
    assert inner == inner[::-1]


@pytest.mark.parametrize("word, ab", [("XXYXXYXY", "ABABB"), ("XY", "B"), ("XXY", "AB")])
def test_recode_ab(word, ab):
    assert recode_ab(word) == ab


def test_recode_rejects_non_image():
    with pytest.raises(MalformedInputError):
        recode_ab("XYY")
    with pytest.raises(MalformedInputError):
        recode_ab("YX")


@given(st.text(alphabet="AB", min_size=1, max_size=30))
def test_recode_inverts_substitution(ab):
    assert recode_ab(substitute_ab(ab)) == ab


def test_labels_up_to_counts():
    # |F_n| = 1 + sum of Euler phi(1..n)
    assert len(labels_up_to(1)) == 2
    assert len(labels_up_to(13)) == 59
    assert len(labels_up_to(17)) == 97
