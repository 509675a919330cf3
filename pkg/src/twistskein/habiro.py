"""Coefficients of the power series omega^p, and the scalar data behind them.

Two independent routes give ``c'_{n,p}``:

* ``c_np`` evaluates the single alternating sum over k (valid for every p);
* ``c_prime`` evaluates the positive multi-index sum over compositions of n
  (valid for p >= 1, extended to p <= -1 by conjugation).

``c_np_graphical`` is a third route assembled from trihedron coefficients
and half-twist eigenvalues, mostly useful as a consistency check on those
scalars.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .laurent import (
    ONE,
    ZERO,
    LaurentFraction,
    LaurentPoly,
    a_pow,
    mu,
    mu_pow,
    multi_qbinom,
    prod,
    qbinom,
    qbrace,
    qbrace_fact,
    qint,
    qint_fact,
)
from .skein import Basis, basis_element, bracket, pairing, twist, z

__all__ = [
    "MultiIndex",
    "compositions",
    "OmegaCoefficients",
    "NotAdmissible",
    "IndexOutOfRange",
    "alpha",
    "beta",
    "gamma",
    "curly_s_bracket",
    "c_np",
    "c_np_graphical",
    "phi",
    "c_prime",
    "big_c",
    "big_c_nn",
    "big_c_nn_chain",
    "trihedron",
    "is_admissible",
    "internal_colors",
    "half_twist_sq",
    "lemma1_coeff",
    "omega_pairing_check",
]


class NotAdmissible(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class MultiIndex:
    """A composition (k_1, ..., k_p) of n with nonnegative parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(k) for k in self.parts))
        if any(k < 0 for k in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def p(self) -> int:
        return len(self.parts)

    def s(self, i: int) -> int:
        """Partial sum k_1 + ... + k_i."""
        return sum(self.parts[:i])

    def r(self, i: int) -> int:
        """Tail sum k_{i+1} + ... + k_p = n - s_i."""
        return self.n - self.s(i)


def compositions(n: int, p: int) -> Iterator[MultiIndex]:
    """All compositions of n into p nonnegative parts, lexicographically."""
    if p <= 0:
        if n == 0 and p == 0:
            yield MultiIndex(())
        return

    def rec(rest: int, slots: int):
        if slots == 1:
            yield (rest,)
            return
        for k in range(rest + 1):
            for tail in rec(rest - k, slots - 1):
                yield (k,) + tail

    for parts in rec(n, p):
        yield MultiIndex(parts)


# -- four-term recursion data ------------------------------------------------

def alpha(n: int) -> LaurentPoly:
    if n < 0:
        return ZERO
    return 2 + a_pow(6 * n + 4) * qint(3) - a_pow(2 * n)


def beta(m: int) -> LaurentPoly:
    """beta_m, from the closed form written for beta_{n-1} with n = m + 1."""
    if m < 0:
        return ZERO
    n = m + 1
    return (LaurentPoly.monomial(8 * n + 2) + LaurentPoly.monomial(16 * n + 2) * qint(3)) \
        * qbrace(2 * n) * qbrace(2 * n + 1)


def gamma(m: int) -> LaurentPoly:
    """gamma_m, from the closed form written for gamma_{n-2} with n = m + 2."""
    if m < 0:
        return ZERO
    n = m + 2
    return a_pow(10 * n - 4) * qbrace(2 * n - 2) * qbrace(2 * n - 1) * qbrace(2 * n) * qbrace(2 * n + 1)


def curly_s_bracket(n: int) -> LaurentPoly:
    """Closed form of the bracket of the twisted even basis element n."""
    if n < 0:
        raise ValueError("curly_s_bracket needs n >= 0")
    num = prod(qbrace(j) for j in range(n + 1, 2 * n + 2))
    sign = -1 if n % 2 else 1
    return a_pow((3 * n * n + n) // 2) * num.exact_div(qbrace(1)) * sign


# -- the single-sum formula ---------------------------------------------------

@lru_cache(maxsize=None)
def c_np(n: int, p: int) -> LaurentPoly:
    """c'_{n,p} = {n}! c_{n,p} from the alternating single sum over k.

    The common denominator [n+1]...[2n+1] (a-a^-1)^n is cleared with
    balanced q-binomials and divided out one short factor at a time.
    """
    if n < 0:
        raise ValueError("c_np needs n >= 0")
    # [n]! / ([n+k+1]! [n-k]!) = qbinom(2n+1, n-k) / ([n+1]...[2n+1])
    total = ZERO
    for k in range(n + 1):
        term = mu_pow(2 * k, p) * qint(2 * k + 1) * qbinom(2 * n + 1, n - k)
        total = total + (-term if k % 2 else term)
    for j in range(n + 1, 2 * n + 2):
        total = total.exact_div(qint(j))
    return total.exact_div(qbrace(1) ** n)


def trihedron(a: int, b: int, c: int) -> LaurentFraction:
    """Bracket of the theta graph with edge colors a, b, c.

    Returned as a fraction: e.g. <2,2,2> = [4][3]/[2]^2 is not a Laurent
    polynomial.  Use ``.to_poly()`` where integrality is known.
    """
    i, j, k = internal_colors(a, b, c)
    num = qint_fact(i + j + k + 1) * qint_fact(i) * qint_fact(j) * qint_fact(k)
    if (i + j + k) % 2:
        num = -num
    return LaurentFraction(num, qint_fact(a) * qint_fact(b) * qint_fact(c))


def is_admissible(a: int, b: int, c: int) -> bool:
    if min(a, b, c) < 0:
        return False
    return (a + b + c) % 2 == 0 and abs(a - b) <= c <= a + b


def internal_colors(a: int, b: int, c: int) -> tuple[int, int, int]:
    if not is_admissible(a, b, c):
        raise NotAdmissible((a, b, c))
    return (b + c - a) // 2, (c + a - b) // 2, (a + b - c) // 2


def half_twist_sq(c: int, a: int, b: int) -> LaurentPoly:
    """Square of the half-twist coefficient delta(c; a, b): mu_c / (mu_a mu_b)."""
    if not is_admissible(a, b, c):
        raise NotAdmissible((a, b, c))
    return mu(c) * mu_pow(a, -1) * mu_pow(b, -1)


def lemma1_coeff(n: int, k: int) -> LaurentFraction:
    """([k]!)^2 / [2k]!, for 0 <= k <= n.  Not a Laurent polynomial in general."""
    if not 0 <= k <= n:
        raise IndexOutOfRange((n, k))
    return LaurentFraction(qint_fact(k) ** 2, qint_fact(2 * k))


def _bracket_e(i: int) -> LaurentPoly:
    return -qint(i + 1) if i % 2 else qint(i + 1)


def c_np_graphical(n: int, p: int) -> LaurentPoly:
    """c'_{n,p} assembled from fusion data: trihedra, half twists, Lemma-type scalars.

    mu_n^{-2p} c_{n,p} (-1)^n ({n}!)^2 = sum_k delta(2k;n,n)^{2p} <2k>/<n,n,2k> ([k]!)^2/[2k]!
    """
    total = LaurentFraction(ZERO)
    for k in range(n + 1):
        twist_factor = half_twist_sq(2 * k, n, n) ** p
        term = LaurentFraction(twist_factor * _bracket_e(2 * k)) / trihedron(n, n, 2 * k)
        total = total + term * lemma1_coeff(n, k)
    # c' = {n}! c = (-1)^n mu_n^{2p} total / {n}!
    scaled = total * LaurentFraction(mu_pow(n, 2 * p), qbrace_fact(n))
    value = scaled.to_poly()
    return -value if n % 2 else value


# -- the multi-index formula --------------------------------------------------

def phi(k: MultiIndex | tuple[int, ...]) -> int:
    """Exponent of a attached to a multi-index: sum r_i (r_{i-1} + r_i + 2), 1 <= i < p."""
    if not isinstance(k, MultiIndex):
        k = MultiIndex(tuple(k))
    r = [k.r(i) for i in range(k.p + 1)]
    return sum(r[i] * (r[i - 1] + r[i] + 2) for i in range(1, k.p))


@lru_cache(maxsize=None)
def _multi_sum(n: int, p: int) -> LaurentPoly:
    total = ZERO
    for k in compositions(n, p):
        total = total + a_pow(phi(k)) * multi_qbinom(n, k)
    return total


@lru_cache(maxsize=None)
def c_prime(n: int, p: int) -> LaurentPoly:
    """c'_{n,p} from the sum over compositions of n into p parts."""
    if n < 0:
        raise ValueError("c_prime needs n >= 0")
    if p == 0:
        return ONE if n == 0 else ZERO
    if p < 0:
        v = c_prime(n, -p).bar()
        return -v if n % 2 else v
    v = LaurentPoly.monomial(n * (n + 3)) * _multi_sum(n, p)
    return -v if n % 2 else v


def _descending_factor(n: int, k: int) -> LaurentPoly:
    # prod_{j=n-k+1}^{n} (1 - a^{-2j})
    return prod(ONE - a_pow(-2 * j) for j in range(n - k + 1, n + 1))


def big_c(n: int, p: int, k: int) -> LaurentPoly:
    """C_{n,p,k} = a^{p(n-k)} [p; k] prod_{j=n-k+1}^{n} (1 - a^{-2j})."""
    if k < 0 or k > p:
        return ZERO
    return a_pow(p * (n - k)) * qbinom(p, k) * _descending_factor(n, k)


def big_c_nn(n: int, p: int) -> LaurentPoly:
    """C^{(p)}_{n,n} in closed form."""
    if p < 1:
        raise ValueError("big_c_nn needs p >= 1")
    return mu_pow(n, 2 - 2 * p) * a_pow(-(n * (n + 1)) // 2) * qbrace_fact(n) * _multi_sum(n, p)


def big_c_nn_chain(n: int, p: int) -> LaurentPoly:
    """C^{(p)}_{n,n} as the chained product of C_{r,k} and mu ratios over compositions."""
    if p < 1:
        raise ValueError("big_c_nn_chain needs p >= 1")
    total = ZERO
    for k in compositions(n, p):
        r = [k.r(i) for i in range(p + 1)]
        term = ONE
        for i in range(1, p + 1):
            term = term * big_c(r[i - 1], r[i - 1], k.parts[i - 1])
        for i in range(1, p):
            term = term * mu_pow(r[i], 2) * mu_pow(n, -2)
        total = total + term
    return total


# -- omega as a whole ----------------------------------------------------------

class OmegaCoefficients:
    """Lazily extended sequence c'_{0,p}, c'_{1,p}, ... for a fixed p.

    ``method`` selects the formula: "multi" (compositions) or "single" (the
    alternating sum).  Extension is guarded by a lock; finished prefixes are
    immutable tuples.
    """

    def __init__(self, p: int, method: str = "multi"):
        if method not in ("multi", "single"):
            raise ValueError(f"unknown method {method!r}")
        self.p = p
        self.method = method
        self._coeffs: tuple[LaurentPoly, ...] = ()
        self._lock = threading.Lock()

    def _compute(self, n: int) -> LaurentPoly:
        return c_prime(n, self.p) if self.method == "multi" else c_np(n, self.p)

    def up_to(self, n: int) -> tuple[LaurentPoly, ...]:
        if len(self._coeffs) <= n:
            with self._lock:
                cs = list(self._coeffs)
                for m in range(len(cs), n + 1):
                    cs.append(self._compute(m))
                self._coeffs = tuple(cs)
        return self._coeffs[: n + 1]

    @property
    def prime_coeffs(self) -> tuple[LaurentPoly, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.up_to(n)[n]

    def raw(self, n: int) -> tuple[LaurentPoly, LaurentPoly]:
        """c_{n,p} as the pair (c'_{n,p}, {n}!)."""
        return self[n], qbrace_fact(n)

    def element(self, n_max: int):
        """Truncation sum_{n <= n_max} c'_{n,p} R'_n as a skein element."""
        from .skein import SkeinElement
        return SkeinElement(Basis.R_PRIME, self.up_to(n_max))


def omega_pairing_check(p: int, k: int) -> bool:
    """Does <omega^p, z^{2k}> equal <t^p(z^{2k})>?

    Both sides are multiplied by {k}! so that c_{n,p} = c'_{n,p}/{n}! only
    ever appears through the Laurent polynomial {k}!/{n}!.  Terms n > k
    vanish because R_n annihilates even polynomials of degree < 2n.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = z(2 * k)
    lhs = ZERO
    for n in range(k + 1):
        coeff = c_prime(n, p) * qbrace_fact(k).exact_div(qbrace_fact(n))
        lhs = lhs + coeff * pairing(basis_element(Basis.R, n), x)
    rhs = qbrace_fact(k) * bracket(twist(x, p))
    return lhs == rhs
