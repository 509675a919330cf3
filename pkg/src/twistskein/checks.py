"""Property suites behind ``twistskein verify``.

Each check is a generator of ``(params, lhs, rhs)`` cases; a check fails at
the first case whose two sides differ.  Bounds default to the desk-scale
values below and can be overridden per run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import habiro as H
from . import jones as J
from . import laurent as L
from . import skein as S
from .laurent import ONE, ZERO, LaurentPoly, a_pow
from .skein import Basis, basis_element

Case = tuple[dict, object, object]

SUITES = ("bases", "recursion", "omega", "jones")


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    fn: Callable[[int, int], Iterator[Case]]
    max_n: int
    max_p: int


@dataclass
class Result:
    check: str
    suite: str
    passed: bool
    cases: int
    counterexample: Optional[Case] = None

    def to_json(self) -> dict:
        out = {"check": self.check, "suite": self.suite, "passed": self.passed, "cases": self.cases}
        if self.counterexample is not None:
            params, lhs, rhs = self.counterexample
            out["counterexample"] = {"params": params, "lhs": render(lhs), "rhs": render(rhs)}
        return out


def render(x) -> str:
    return str(x)


REGISTRY: list[Check] = []


def check(suite: str, max_n: int, max_p: int = 0):
    def deco(fn):
        REGISTRY.append(Check(fn.__name__, suite, fn, max_n, max_p))
        return fn
    return deco


def _rng(tag: str) -> random.Random:
    return random.Random(f"twistskein:{tag}")


def random_poly(rng: random.Random, span: int = 6, nterms: int = 4, cmax: int = 9) -> LaurentPoly:
    return LaurentPoly({rng.randint(-span, span): rng.randint(-cmax, cmax) for _ in range(nterms)})


def random_element(rng: random.Random, degree: int, basis: Basis = Basis.POWER) -> S.SkeinElement:
    return S.SkeinElement(basis, tuple(random_poly(rng, 4, 3, 5) for _ in range(degree + 1)))


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# -- bases: scalars and skein module ---------------------------------------------

@check("bases", 0)
def ring_axioms(max_n, max_p):
    rng = _rng("ring")
    for i in range(100):
        f, g, h = (random_poly(rng) for _ in range(3))
        yield {"case": i, "law": "add-comm"}, f + g, g + f
        yield {"case": i, "law": "mul-comm"}, f * g, g * f
        yield {"case": i, "law": "mul-assoc"}, (f * g) * h, f * (g * h)
        yield {"case": i, "law": "distrib"}, f * (g + h), f * g + f * h
        yield {"case": i, "law": "canonical"}, all(c for _, c in (f * g - h).terms), True


@check("bases", 0)
def bar_involution(max_n, max_p):
    rng = _rng("bar")
    for i in range(100):
        f, g = random_poly(rng), random_poly(rng)
        yield {"case": i}, (f * g).bar(), f.bar() * g.bar()
        yield {"case": i}, f.bar().bar(), f
    for n in range(10):
        yield {"n": n}, L.qbrace(n).bar(), -L.qbrace(n)


@check("bases", 20)
def qbinom_symmetry(max_n, max_p):
    for n in range(max_n + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, L.qbinom(n, k), L.qbinom(n, n - k)


@check("bases", 15)
def qbinom_pascal(max_n, max_p):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            rhs = a_pow(k) * L.qbinom(n - 1, k) + a_pow(k - n) * L.qbinom(n - 1, k - 1)
            yield {"n": n, "k": k}, L.qbinom(n, k), rhs


@check("bases", 12)
def qbinom_positivity(max_n, max_p):
    for n in range(max_n + 1):
        for k in range(n + 1):
            shifted = L.qbinom(n, k) * a_pow(k * (n - k))
            ok = shifted.low >= 0 and all(c > 0 for _, c in shifted.terms)
            yield {"n": n, "k": k}, ok, True


@check("bases", 30)
def mu_squared(max_n, max_p):
    for i in range(max_n + 1):
        yield {"i": i}, L.mu(i) * L.mu(i), a_pow(i * i + 2 * i)


@check("bases", 10)
def orthogonality_and_norm(max_n, max_p):
    for n in range(max_n + 1):
        rn = basis_element(Basis.R, n)
        for m in range(max_n + 1):
            expected = ZERO
            if n == m:
                expected = L.qbrace_fact(2 * n + 1).exact_div(L.qbrace(1)) * _sign(n)
            yield {"n": n, "m": m}, S.pairing(rn, basis_element(Basis.S, m)), expected


@check("bases", 8)
def annihilation(max_n, max_p):
    for n in range(max_n + 1):
        for i in range(n):
            yield {"n": n, "i": i, "form": "<R_n,e_2i>"}, \
                S.pairing(basis_element(Basis.R, n), basis_element(Basis.CHEBYSHEV_E, 2 * i)), ZERO
        for k in range(n):
            yield {"n": n, "k": k, "form": "<S_n,z^k>"}, \
                S.pairing(basis_element(Basis.S, n), S.z(k)), ZERO


@check("bases", 12)
def pairing_symmetry(max_n, max_p):
    rng = _rng("sym")
    for i in range(10):
        x = random_element(rng, rng.randint(0, max_n))
        y = random_element(rng, rng.randint(0, max_n))
        yield {"case": i}, S.pairing(x, y), S.pairing(y, x)


@check("bases", 10)
def z_self_adjoint(max_n, max_p):
    rng = _rng("adjoint")
    for i in range(8):
        x = random_element(rng, rng.randint(0, max(max_n - 1, 0)))
        y = random_element(rng, rng.randint(0, max(max_n - 1, 0)))
        yield {"case": i}, S.pairing1(S.z() * x, y), S.pairing1(x, S.z() * y)
        yield {"case": i, "form": "<t(xy)>"}, S.pairing1(x, y), S.bracket(S.twist(x * y, 1))


@check("bases", 8)
def curly_pairing(max_n, max_p):
    for n in range(max_n + 1):
        rn = basis_element(Basis.CURLY_R, n)
        for m in range(max_n + 1):
            lhs = S.pairing1(rn, basis_element(Basis.CURLY_S, m))
            rhs = ZERO
            if n == m:
                rhs = L.mu(n) * L.mu(2 * n) * S.pairing(basis_element(Basis.R, n),
                                                          basis_element(Basis.S, n))
            yield {"n": n, "m": m}, lhs, rhs


@check("bases", 25)
def round_trips(max_n, max_p):
    rng = _rng("roundtrip")
    for basis in Basis:
        deg = max_n if basis is not Basis.R_PRIME else min(max_n, 10)
        x = random_element(rng, deg)
        if basis.even_only:
            x = S.power([c if i % 2 == 0 else ZERO for i, c in enumerate(x.coeffs)])
        yield {"basis": basis.value}, S.convert(S.convert(x, basis), Basis.POWER), x


@check("bases", 8)
def monic_bases(max_n, max_p):
    for basis in Basis:
        if basis is Basis.R_PRIME:
            continue
        for n in range(max_n + 1):
            v = S.convert(basis_element(basis, n), Basis.POWER)
            yield {"basis": basis.value, "n": n}, (v.degree, v.coeffs[-1]), (basis.degree(n), ONE)


@check("bases", 10)
def e_in_r_basis(max_n, max_p):
    for N in range(1, max_n + 1):
        e = S.convert(basis_element(Basis.CHEBYSHEV_E, N - 1), Basis.R)
        expected = tuple(L.qbinom(N + n, N - 1 - n) * _sign(N - 1 - n) for n in range(N))
        yield {"N": N}, e.coeffs, expected


@check("bases", 10)
def conj_twist_leading_terms(max_n, max_p):
    for n in range(max_n + 1):
        v = S.conj_mult_z2(S.z(n)).to(Basis.POWER)
        top = L.mu(n + 2) * L.mu_pow(n, -1)
        yield {"n": n, "term": "z^(n+2)"}, (v.degree, v[n + 2]), (n + 2, top)
        yield {"n": n, "term": "z^(n+1)"}, v[n + 1], ZERO
        if n >= 2:
            sub = 2 - top * (n + 1) + L.mu(n) * L.mu_pow(n - 2, -1) * (n - 1)
            yield {"n": n, "term": "z^n"}, v[n], sub


@check("bases", 8)
def conj_twist_on_r(max_n, max_p):
    x = lambda m: S.lambda_power_sum(m + 1, "even_index")
    for n in range(2, max_n + 1):
        lhs = S.conj_mult_z2(basis_element(Basis.R, n - 1))
        r1 = L.mu(n + 1) * L.mu_pow(n - 1, -1)
        r0 = x(n) * r1 - x(n - 2) * L.mu(n) * L.mu_pow(n - 2, -1)
        rest = lhs - basis_element(Basis.R, n + 1).scale(r1) - basis_element(Basis.R, n).scale(r0)
        yield {"n": n}, rest.to(Basis.POWER).degree <= n - 1, True


@check("bases", 6)
def conj_twist_on_s(max_n, max_p):
    y = lambda m: S.lambda_power_sum(m + 1, "squared")
    for n in range(1, max_n + 1):
        lhs = S.conj_mult_z2(basis_element(Basis.S, n))
        r1 = L.mu(2 * n + 2) * L.mu_pow(2 * n, -1)
        r0 = 2 + (y(n) - (2 * n + 1)) * r1 - (y(n - 1) - (2 * n - 1)) * L.mu(2 * n) * L.mu_pow(2 * n - 2, -1)
        rest = lhs - basis_element(Basis.S, n + 1).scale(r1) - basis_element(Basis.S, n).scale(r0)
        yield {"n": n}, rest.to(Basis.POWER).degree <= 2 * n - 2, True


# -- recursion -------------------------------------------------------------------

def _curly_s(n: int) -> S.SkeinElement:
    return basis_element(Basis.CURLY_S, n) if n >= 0 else S.SkeinElement(Basis.CURLY_S, ())


@check("recursion", 8)
def four_term_recursion(max_n, max_p):
    for n in range(1, max_n + 1):
        rhs = (S.z(2) * _curly_s(n)).to(Basis.CURLY_S) - _curly_s(n).scale(H.alpha(n)) \
            - _curly_s(n - 1).scale(H.beta(n - 1)) - _curly_s(n - 2).scale(H.gamma(n - 2))
        yield {"n": n}, _curly_s(n + 1), rhs


@check("recursion", 10)
def curly_s_bracket_closed_form(max_n, max_p):
    for n in range(max_n + 1):
        yield {"n": n}, S.bracket(basis_element(Basis.CURLY_S, n)), H.curly_s_bracket(n)


@check("recursion", 10)
def curly_s_bracket_recursion(max_n, max_p):
    lam0_sq = L.lam(0) * L.lam(0)
    sb = lambda m: H.curly_s_bracket(m) if m >= 0 else ZERO
    for n in range(0, max_n):
        rhs = (lam0_sq - H.alpha(n)) * sb(n) - H.beta(n - 1) * sb(n - 1) - H.gamma(n - 2) * sb(n - 2)
        yield {"n": n}, sb(n + 1), rhs


# -- omega -------------------------------------------------------------------------

@check("omega", 15)
def habiro_closed_forms(max_n, max_p):
    for n in range(max_n + 1):
        yield {"n": n, "p": 1}, H.c_np(n, 1), a_pow(n * (n + 3) // 2) * _sign(n)
        yield {"n": n, "p": -1}, H.c_np(n, -1), a_pow(-(n * (n + 3) // 2))


@check("omega", 8, 4)
def dual_formula(max_n, max_p):
    for p in range(-max_p, max_p + 1):
        for n in range(max_n + 1):
            yield {"n": n, "p": p}, H.c_prime(n, p), H.c_np(n, p)


@check("omega", 10, 4)
def conjugation_rule(max_n, max_p):
    for p in range(1, max_p + 1):
        for n in range(max_n + 1):
            yield {"n": n, "p": p}, H.c_np(n, -p), H.c_np(n, p).bar() * _sign(n)


@check("omega", 10, 2)
def p2_example(max_n, max_p):
    for n in range(max_n + 1):
        s = ZERO
        for k in range(n + 1):
            s = s + a_pow(k * k - 2 * k - 3 * n * k) * L.qbinom(n, k)
        yield {"n": n}, H.c_prime(n, 2), LaurentPoly.monomial(5 * n * n + 7 * n) * s * _sign(n)


@check("omega", 6, 6)
def big_c_recursion(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(max_p + 1):
            for k in range(-1, p + 3):
                rhs = a_pow(n - 2 * k) * H.big_c(n, p, k) + a_pow(n - 2 * k + 1) * \
                    (ONE - a_pow(-2 * (n - k + 1))) * H.big_c(n, p, k - 1)
                yield {"n": n, "p": p, "k": k}, H.big_c(n, p + 1, k), rhs


@check("omega", 10, 4)
def big_c_divisibility(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(max_p + 1):
            for k in range(min(n, p) + 1):
                d = L.prod(ONE - a_pow(2 * j) for j in range(n - k + 1, n + 1))
                try:
                    H.big_c(n, p, k).exact_div(d)
                    ok = True
                except L.NotDivisible:
                    ok = False
                yield {"n": n, "p": p, "k": k}, ok, True


@check("omega", 10)
def c_nn_p1(max_n, max_p):
    for n in range(max_n + 1):
        yield {"n": n}, H.big_c_nn(n, 1), a_pow(-(n * (n + 1) // 2)) * L.qbrace_fact(n)
        yield {"n": n, "route": "C_{n,n}"}, H.big_c(n, n, n), a_pow(-(n * (n + 1) // 2)) * L.qbrace_fact(n)


@check("omega", 8, 3)
def c_prime_relation(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(1, max_p + 1):
            lhs = (L.mu_pow(n, 2 * p) * H.big_c_nn(n, p)).exact_div(L.qbrace_fact(n)) * _sign(n)
            yield {"n": n, "p": p}, lhs, H.c_prime(n, p)
            yield {"n": n, "p": p, "route": "chain"}, H.big_c_nn_chain(n, p), H.big_c_nn(n, p)


@check("omega", 5, 2)
def graphical_route(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(-max_p, max_p + 1):
            yield {"n": n, "p": p}, H.c_np_graphical(n, p), H.c_prime(n, p)


@check("omega", 6)
def omega_is_unit(max_n, max_p):
    top = max_n
    w = S.SkeinElement(Basis.R_PRIME, tuple(H.c_prime(n, 1) for n in range(top + 1)))
    winv = S.SkeinElement(Basis.R_PRIME, tuple(H.c_prime(n, -1) for n in range(top + 1)))
    prod = S.multiply(w, winv)
    for n in range(top + 1):
        yield {"n": n}, prod[n], ONE if n == 0 else ZERO


@check("omega", 6, 3)
def omega_defining_property(max_n, max_p):
    for p in range(-max_p, max_p + 1):
        for k in range(max_n + 1):
            yield {"p": p, "k": k}, H.omega_pairing_check(p, k), True


# -- jones -------------------------------------------------------------------------

@check("jones", 12)
def special_f_coefficients(max_n, max_p):
    for n in range(max_n + 1):
        yield {"p": -1, "n": n}, J.f_coeff(-1, n), ONE
        yield {"p": 1, "n": n}, J.f_coeff(1, n), a_pow(n * (n + 3)) * _sign(n)


@check("jones", 8, 3)
def jones_normalization(max_n, max_p):
    for p in range(-max_p, max_p + 1):
        yield {"p": p, "N": 1}, J.colored_jones(p, 1).value, ONE
        for N in range(1, max_n + 1):
            yield {"p": p, "N": N, "at": "A=1"}, J.colored_jones(p, N).value.eval(1), 1


@check("jones", 8, 3)
def brace_window_exact(max_n, max_p):
    for N in range(1, max_n + 1):
        for n in range(N + 2):
            window = L.prod(L.qbrace(j) for j in range(N - n, N + n + 1))
            try:
                q = window.exact_div(L.qbrace(N))
                ok = (n < N) or q.is_zero()
            except L.NotDivisible:
                ok = False
            yield {"N": N, "n": n}, ok, True


@check("jones", 6, 3)
def qform_matches(max_n, max_p):
    for p in range(-max_p, max_p + 1):
        for N in range(1, max_n + 1):
            yield {"p": p, "N": N}, J.colored_jones_qform(p, N), J.colored_jones(p, N).value
    for n in range(max_n + 1):
        yield {"p": -1, "n": n}, J.qform_coeff(-1, n), a_pow(-n * (n + 1)) * _sign(n)
        yield {"p": 1, "n": n}, J.qform_coeff(1, n), a_pow(2 * n)


@check("jones", 0, 2)
def oracle_agreement(max_n, max_p):
    for p in [q for q in range(-max_p, max_p + 1) if q]:
        d = J.twist_knot_diagram(p)
        yield {"p": p, "N": 2}, J.normalized_bracket_invariant(d), J.colored_jones(p, 2).value
    for name, p in (("trefoil_left", 1), ("figure_eight", -1)):
        d = J.load_fixture(name)
        yield {"fixture": name}, J.normalized_bracket_invariant(d), J.colored_jones(p, 2).value


@check("jones", 0, 2)
def mirror_symmetry(max_n, max_p):
    for p in [q for q in range(-max_p, max_p + 1) if q]:
        d = J.twist_knot_diagram(p)
        yield {"p": p}, J.normalized_bracket_invariant(d.mirror()), J.colored_jones(p, 2).value.bar()


# -- driver ------------------------------------------------------------------------

def run_check(c: Check, max_n: Optional[int] = None, max_p: Optional[int] = None) -> Result:
    n = c.max_n if max_n is None else max_n
    p = c.max_p if max_p is None else max_p
    count = 0
    for case in c.fn(n, p):
        count += 1
        _, lhs, rhs = case
        if lhs != rhs:
            return Result(c.name, c.suite, False, count, case)
    return Result(c.name, c.suite, True, count)


def run_suite(suite: str = "all", max_n: Optional[int] = None,
              max_p: Optional[int] = None) -> list[Result]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    chosen = [c for c in REGISTRY if suite == "all" or c.suite == suite]
    return [run_check(c, max_n, max_p) for c in chosen]
