import pytest

from qmarkov.cohn import (
    QMatrix2,
    braid_residual,
    cohn_a,
    cohn_b,
    cohn_matrix,
    entry_relations_check,
    extended_tree_identity,
    generators_q,
    q_markov_via_trace,
    tilde_q_markov,
)
from qmarkov.errors import NonDivisibleError
from qmarkov.farey import FareyRational, labels_up_to
from qmarkov.laurent import ONE, Q, Q3, ZERO, LaurentPoly, q_int
from qmarkov.mutation import TWO_Q, markov_number, q_markov_number

from reference_values import GOLDEN

F = FareyRational.parse
qk = LaurentPoly.monomial
N_RANGE = range(-5, 9)


def closed_form_b(n):
    """The companion matrix written out entrywise, independent of A(n) A(n+1)."""
    n1, n3, two = q_int(n + 1), q_int(3 - n), q_int(2)
    return QMatrix2(
        qk(1 - n) * n1 * two - Q,
        qk(-n) * two,
        qk(-1) * n1 * n3 * two - n1 - qk(n - 1) * n3,
        qk(-2) * n3 * two - qk(-1),
    )


@pytest.mark.parametrize("n", N_RANGE)
def test_b_closed_form(n):
    assert cohn_b(n) == closed_form_b(n)


@pytest.mark.parametrize("n", N_RANGE)
def test_classical_limits(n):
    assert cohn_a(n).at_one() == ((n, 1), (3 * n - n * n - 1, 3 - n))
    assert cohn_b(n).at_one() == ((2 * n + 1, 2), (-2 * n * n + 4 * n + 2, 5 - 2 * n))


@pytest.mark.parametrize(
    "n, a, b",
    [
        (
            0,
            (ZERO, Q, -qk(-1), qk(-1) * q_int(3)),
            (qk(2), q_int(2), Q * q_int(2), qk(-2) * q_int(4) + 1),
        ),
        (
            1,
            (Q, ONE, Q, qk(-1) * q_int(2)),
            (q_int(3), qk(-1) * q_int(2), qk(-1) * q_int(4), qk(-2) * q_int(3)),
        ),
        (
            2,
            (q_int(2), qk(-1), ONE, qk(-1)),
            (qk(-1) * q_int(4) + 1, qk(-2) * q_int(2), qk(-1) * q_int(2), qk(-2)),
        ),
    ],
)
def test_listed_special_matrices(n, a, b):
    assert cohn_a(n) == QMatrix2(*a)
    assert cohn_b(n) == QMatrix2(*b)


@pytest.mark.parametrize("n", N_RANGE)
def test_traces_and_determinants(n):
    assert cohn_a(n).trace() == Q3
    assert cohn_b(n).trace() == Q3 * TWO_Q
    assert cohn_a(n).det() == ONE
    assert cohn_b(n).det() == ONE


@pytest.mark.parametrize("n", range(-3, 7))
def test_extended_tree_identity(n):
    assert extended_tree_identity(n)


def test_generators():
    T, S, L = generators_q()
    # T S T agrees with L only up to the scalar q
    assert T @ S @ T == L.scale(Q)
    assert S @ S == QMatrix2.identity().scale(-Q)
    assert braid_residual().is_zero()


@pytest.mark.parametrize("n", range(0, 4))
def test_a_as_generator_word(n):
    _, S, L = generators_q()
    s_prime = S.map(lambda p: -p)  # [[0, 1], [-q, 0]]
    word = QMatrix2.identity()
    for m in [L] * (3 - n) + [s_prime] + [L] * n:
        word = word @ m
    assert word.scale(qk(-2)) == cohn_a(n)


def test_inverse_requires_unit_det():
    m = QMatrix2(Q + 1, ZERO, ZERO, ONE)
    with pytest.raises(NonDivisibleError):
        m.inverse()
    assert QMatrix2(Q, ZERO, ZERO, ONE).inverse() == QMatrix2(qk(-1), ZERO, ZERO, ONE)


@pytest.mark.parametrize("label", ["1/2", "3/5", "2/5", "5/8"])
def test_word_routes_agree(label):
    t = F(label)
    for n in (-1, 0, 1, 3):
        assert cohn_matrix(t, n, "xy") == cohn_matrix(t, n, "ab")


def test_cohn_3_5_classical():
    c = cohn_matrix(F("3/5"), 1)
    assert c.at_one()[0][1] == 433
    assert c.det() == ONE


@pytest.mark.parametrize("m", sorted(GOLDEN))
def test_trace_reproduces_golden(m):
    label, poly = GOLDEN[m]
    for n in (-2, 0, 1, 2, 4):
        assert q_markov_via_trace(F(label), n) == poly


def test_trace_n_independent_and_relations():
    for t in labels_up_to(9):
        c = cohn_matrix(t, 1)
        assert entry_relations_check(c)
        assert len({q_markov_via_trace(t, n) for n in range(-2, 5)}) == 1


def test_top_right_at_one_is_classical():
    # the top-right entry specializes to m^t at n = 1 classically
    for t in labels_up_to(8):
        assert cohn_matrix(t, 1).at_one()[0][1] == markov_number(t)
        assert tilde_q_markov(t).eval_at_one() == markov_number(t)


def test_tilde_differs_from_m_q():
    t = F("2/3")
    assert tilde_q_markov(t) != q_markov_number(t)
