"""Acceptance criteria 1-8, exact equality throughout.

A summary line per criterion is printed at the end of the pytest run.
"""

import pytest

from twistskein import habiro as H
from twistskein import jones as J
from twistskein import laurent as L
from twistskein import skein as S
from twistskein.laurent import ONE, ZERO, a_pow
from twistskein.skein import Basis, basis_element


def sign(n):
    return -1 if n % 2 else 1


def e_form(x, y):
    # bilinear form on the e-basis: <e_i, e_j> = (-1)^(i+j) [(i+1)(j+1)]
    xe, ye = x.to(Basis.CHEBYSHEV_E), y.to(Basis.CHEBYSHEV_E)
    total = ZERO
    for i, ci in enumerate(xe.coeffs):
        for j, cj in enumerate(ye.coeffs):
            if not ci.is_zero() and not cj.is_zero():
                total = total + ci * cj * L.qint((i + 1) * (j + 1)) * sign(i + j)
    return total


crit = pytest.mark.criterion


@crit(1, "orthogonality and norm of R_n, S_m")
@pytest.mark.parametrize("n", range(11))
def test_c1_orthogonality(n):
    rn = basis_element(Basis.R, n)
    norm = L.qbrace_fact(2 * n + 1).exact_div(L.qbrace(1)) * sign(n)
    for m in range(11):
        sm = basis_element(Basis.S, m)
        expected = norm if n == m else ZERO
        assert S.pairing(rn, sm) == expected, (n, m)
        assert e_form(rn, sm) == expected, (n, m)


@crit(2, "closed forms of c'_{n,+-1} from the single sum")
def test_c2_closed_forms():
    for n in range(16):
        assert H.c_np(n, 1) == a_pow(n * (n + 3) // 2) * sign(n), n
        assert H.c_np(n, -1) == a_pow(-(n * (n + 3) // 2)), n


@crit(3, "single-sum and multi-sum formulas agree")
@pytest.mark.parametrize("p", [1, 2, 3, 4, -1, -2, -3, -4])
def test_c3_dual_formula(p):
    for n in range(9):
        assert H.c_prime(n, p) == H.c_np(n, p), (n, p)
        if p < 0:
            assert H.c_prime(n, p) == H.c_prime(n, -p).bar() * sign(n), (n, p)


def _cs(n):
    return basis_element(Basis.CURLY_S, n) if n >= 0 else S.SkeinElement(Basis.CURLY_S, ())


@crit(4, "four-term recursion for the twisted S basis")
def test_c4_recursion():
    for n in range(1, 9):
        rhs = (S.z(2) * _cs(n)).to(Basis.POWER) - _cs(n).scale(H.alpha(n)) \
            - _cs(n - 1).scale(H.beta(n - 1)) - _cs(n - 2).scale(H.gamma(n - 2))
        assert _cs(n + 1) == rhs, n


@crit(4, "four-term recursion for the twisted S basis")
def test_c4_bracket():
    for n in range(11):
        # construction: mu_{2n} t^{-1}(S_n), then evaluate at lambda_0
        built = S.twist(basis_element(Basis.S, n), -1).scale(L.mu(2 * n))
        assert S.bracket(built) == H.curly_s_bracket(n), n
        assert S.bracket(_cs(n)) == H.curly_s_bracket(n), n
    lam0_sq = L.lam(0) * L.lam(0)
    sb = lambda m: H.curly_s_bracket(m) if m >= 0 else ZERO
    for n in range(10):
        rhs = (lam0_sq - H.alpha(n)) * sb(n) - H.beta(n - 1) * sb(n - 1) - H.gamma(n - 2) * sb(n - 2)
        assert sb(n + 1) == rhs, n


@crit(5, "defining property of omega^p")
@pytest.mark.parametrize("p", [-3, -2, -1, 0, 1, 2, 3])
def test_c5_omega_pairing(p):
    for k in range(7):
        assert H.omega_pairing_check(p, k), (p, k)


@crit(6, "C-coefficient consistency")
def test_c6_recursion_vs_closed_form():
    for n in range(7):
        for p in range(6):
            for k in range(-1, p + 3):
                rhs = a_pow(n - 2 * k) * H.big_c(n, p, k) + a_pow(n - 2 * k + 1) * \
                    (ONE - a_pow(-2 * (n - k + 1))) * H.big_c(n, p, k - 1)
                assert H.big_c(n, p + 1, k) == rhs, (n, p, k)


@crit(6, "C-coefficient consistency")
def test_c6_cnn_p1():
    for n in range(11):
        assert H.big_c_nn(n, 1) == a_pow(-(n * (n + 1) // 2)) * L.qbrace_fact(n), n


@crit(6, "C-coefficient consistency")
def test_c6_relation_and_divisibility():
    for n in range(9):
        for p in range(1, 4):
            # exact_div raises NotDivisible if c' were not a Laurent polynomial
            lhs = (L.mu_pow(n, 2 * p) * H.big_c_nn(n, p)).exact_div(L.qbrace_fact(n)) * sign(n)
            assert lhs == H.c_prime(n, p), (n, p)


@crit(7, "twist-knot colored Jones")
def test_c7_special_f():
    for n in range(13):
        assert J.f_coeff(-1, n) == ONE
        assert J.f_coeff(1, n) == a_pow(n * (n + 3)) * sign(n)


@crit(7, "twist-knot colored Jones")
@pytest.mark.parametrize("p", range(-3, 4))
def test_c7_normalization(p):
    assert J.colored_jones(p, 1).value == ONE
    for N in range(1, 9):
        assert J.colored_jones(p, N).value.eval(1) == 1, (p, N)


@crit(7, "twist-knot colored Jones")
@pytest.mark.parametrize("p", range(-3, 4))
def test_c7_qform(p):
    for N in range(1, 7):
        assert J.colored_jones_qform(p, N) == J.colored_jones(p, N).value, (p, N)


@crit(8, "state-sum oracle agrees at N = 2")
@pytest.mark.parametrize("p", [-2, -1, 1, 2])
def test_c8_oracle(p):
    d = J.twist_knot_diagram(p)
    d.validate()
    assert J.normalized_bracket_invariant(d) == J.colored_jones(p, 2).value
