"""The skein module of the solid torus, Z[A^±][z], in several bases.

Elements are stored as coordinate vectors against one of seven bases.  The
canonical working form is the power basis ``z^n``; every other basis is
monic and triangular over it, so change of basis is exact back-substitution.

The renormalized basis ``R'_n = R_n / {n}!`` is the one exception: it does
not live in Z[A^±][z].  Such coordinates are handled by clearing a common
``{N}!`` denominator and dividing it out again at the end, which raises
``NotDivisible`` whenever the requested result is not integral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    Scalar,
    lam,
    mu,
    mu_pow,
    qbrace_fact,
    qint,
)

__all__ = [
    "Basis",
    "SkeinElement",
    "NotEven",
    "NegativeIndex",
    "basis_element",
    "convert",
    "multiply",
    "twist",
    "bracket",
    "pairing",
    "pairing1",
    "conj_mult_z2",
    "lambda_power_sum",
    "z",
    "power",
]


class NotEven(ValueError):
    """An odd-degree element was asked for coordinates in an even-only basis."""


class NegativeIndex(ValueError):
    pass


class Basis(enum.Enum):
    POWER = "PowerZ"
    CHEBYSHEV_E = "ChebyshevE"
    R = "HabiroR"
    R_PRIME = "HabiroRPrime"
    S = "HabiroS"
    CURLY_S = "TwistedCurlyS"
    CURLY_R = "TwistedCurlyR"

    @property
    def even_only(self) -> bool:
        return self in (Basis.S, Basis.CURLY_S)

    def degree(self, n: int) -> int:
        """z-degree of basis element n."""
        return 2 * n if self.even_only else n


@dataclass(frozen=True, eq=False)
class SkeinElement:
    basis: Basis
    coeffs: tuple[LaurentPoly, ...]

    def __post_init__(self):
        cs = [LaurentPoly.coerce(c) for c in self.coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """z-degree, -1 for the zero element."""
        if self.basis is Basis.R_PRIME:
            return len(self.coeffs) - 1
        return self.basis.degree(len(self.coeffs) - 1) if self.coeffs else -1

    def to(self, basis: Basis) -> "SkeinElement":
        return convert(self, basis)

    # arithmetic happens in the basis of the left operand where possible

    def _common(self, other: "SkeinElement") -> tuple["SkeinElement", "SkeinElement"]:
        if other.basis is self.basis:
            return self, other
        try:
            return self, convert(other, self.basis)
        except NotEven:
            return convert(self, Basis.POWER), convert(other, Basis.POWER)

    def __add__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        x, y = self._common(other)
        n = max(len(x.coeffs), len(y.coeffs))
        return SkeinElement(x.basis, tuple(x[i] + y[i] for i in range(n)))

    def __neg__(self):
        return SkeinElement(self.basis, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "SkeinElement":
        return SkeinElement(self.basis, tuple(x * c for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, SkeinElement):
            return multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if self.basis is other.basis:
            return self.coeffs == other.coeffs
        # R' coordinates always exist, so compare there if either side uses them
        target = Basis.R_PRIME if Basis.R_PRIME in (self.basis, other.basis) else Basis.POWER
        return convert(self, target).coeffs == convert(other, target).coeffs

    __hash__ = None

    def to_json(self) -> dict:
        return {"basis": self.basis.value, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "SkeinElement":
        return cls(Basis(obj["basis"]), tuple(LaurentPoly.from_json(c) for c in obj["coeffs"]))

    def __str__(self) -> str:
        if not self.coeffs:
            return f"{self.basis.value}: 0"
        rows = [f"  [{i}] {c}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"{self.basis.value}:\n" + "\n".join(rows)


def power(coeffs: Sequence[Scalar]) -> SkeinElement:
    """Element sum coeffs[i] z^i."""
    return SkeinElement(Basis.POWER, tuple(coeffs))


def z(n: int = 1) -> SkeinElement:
    return power([ZERO] * n + [ONE])


# -- dense power-basis helpers (tuples of LaurentPoly) ----------------------

def _trim(v: list) -> tuple:
    while v and v[-1].is_zero():
        v.pop()
    return tuple(v)


def _padd(u, v) -> tuple:
    n = max(len(u), len(v))
    return _trim([(u[i] if i < len(u) else ZERO) + (v[i] if i < len(v) else ZERO)
                  for i in range(n)])


def _pscale(u, c) -> tuple:
    return _trim([x * c for x in u])


def _pmul(u, v) -> tuple:
    if not u or not v:
        return ()
    out = [ZERO] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x.is_zero():
            continue
        for j, y in enumerate(v):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def _linear_factor(root: LaurentPoly) -> tuple:
    return (-root, ONE)


@lru_cache(maxsize=None)
def _power_form(basis: Basis, n: int) -> tuple:
    """Power-basis coefficients of basis element n (not defined for R')."""
    if n < 0:
        raise NegativeIndex(n)
    if basis is Basis.POWER:
        return (ZERO,) * n + (ONE,)
    if basis is Basis.CHEBYSHEV_E:
        if n == 0:
            return (ONE,)
        if n == 1:
            return (ZERO, ONE)
        return _padd((ZERO,) + _power_form(basis, n - 1),
                      _pscale(_power_form(basis, n - 2), -1))
    if basis is Basis.R:
        if n == 0:
            return (ONE,)
        return _pmul(_power_form(basis, n - 1), _linear_factor(lam(2 * (n - 1))))
    if basis is Basis.S:
        if n == 0:
            return (ONE,)
        l = lam(n - 1)
        return _pmul(_power_form(basis, n - 1), (-(l * l), ZERO, ONE))
    if basis is Basis.CURLY_S:
        # t(curly S_n) = mu_2n S_n
        v = _twist_power(_power_form(Basis.S, n), -1)
        return _pscale(v, mu(2 * n))
    if basis is Basis.CURLY_R:
        v = _twist_power(_power_form(Basis.R, n), -1)
        return _pscale(v, mu(n))
    raise ValueError(f"no power form for {basis}")


def _from_power_integral(v: Sequence[LaurentPoly], basis: Basis) -> tuple:
    """Coordinates of the power-basis vector v in a monic basis (not R')."""
    if basis is Basis.POWER:
        return _trim(list(v))
    rem = list(v)
    step = 2 if basis.even_only else 1
    if basis.even_only and any(not rem[i].is_zero() for i in range(1, len(rem), 2)):
        raise NotEven(f"element has odd-degree terms; no {basis.value} coordinates")
    top = (len(rem) - 1) // step
    out = [ZERO] * (top + 1)
    for n in range(top, -1, -1):
        c = rem[step * n]
        if c.is_zero():
            continue
        out[n] = c
        for i, b in enumerate(_power_form(basis, n)):
            if not b.is_zero():
                rem[i] = rem[i] - c * b
    return _trim(out)


def _to_power_integral(coeffs: Sequence[LaurentPoly], basis: Basis) -> tuple:
    if basis is Basis.POWER:
        return _trim(list(coeffs))
    out: tuple = ()
    for n, c in enumerate(coeffs):
        if not c.is_zero():
            out = _padd(out, _pscale(_power_form(basis, n), c))
    return out


def _twist_power(v: Sequence[LaurentPoly], p: int) -> tuple:
    e = _from_power_integral(v, Basis.CHEBYSHEV_E)
    return _to_power_integral([c * mu_pow(i, p) for i, c in enumerate(e)], Basis.CHEBYSHEV_E)


def _scaled_power(x: SkeinElement) -> tuple[LaurentPoly, tuple]:
    """(D, v) with v the power-basis vector of D*x; D = 1 unless x is in R'."""
    if x.basis is not Basis.R_PRIME:
        return ONE, _to_power_integral(x.coeffs, x.basis)
    top = len(x.coeffs) - 1
    d = qbrace_fact(max(top, 0))
    r = [c * d.exact_div(qbrace_fact(n)) for n, c in enumerate(x.coeffs)]
    return d, _to_power_integral(r, Basis.R)


def _from_scaled_power(d: LaurentPoly, v: Sequence[LaurentPoly], basis: Basis) -> SkeinElement:
    if basis is Basis.R_PRIME:
        r = _from_power_integral(v, Basis.R)
        cs = [(c * qbrace_fact(n)).exact_div(d) for n, c in enumerate(r)]
    else:
        cs = [c.exact_div(d) for c in _from_power_integral(v, basis)]
    return SkeinElement(basis, tuple(cs))


# -- public operations --------------------------------------------------------

def basis_element(basis: Basis, n: int) -> SkeinElement:
    """The n-th element of the given basis, as a unit coordinate vector."""
    basis = Basis(basis)
    if n < 0:
        raise NegativeIndex(n)
    return SkeinElement(basis, (ZERO,) * n + (ONE,))


def convert(x: SkeinElement, target: Basis) -> SkeinElement:
    target = Basis(target)
    if x.basis is target:
        return x
    d, v = _scaled_power(x)
    return _from_scaled_power(d, v, target)


def multiply(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    """Product in Z[A^±][z]; result in x's basis if both share one, else PowerZ."""
    d1, u = _scaled_power(x)
    d2, v = _scaled_power(y)
    target = x.basis if x.basis is y.basis else Basis.POWER
    return _from_scaled_power(d1 * d2, _pmul(u, v), target)


def twist(x: SkeinElement, p: int = 1) -> SkeinElement:
    """Apply t^p, where t(e_i) = mu_i e_i.  Result stays in x's basis."""
    if p == 0:
        return x
    d, v = _scaled_power(x)
    return _from_scaled_power(d, _twist_power(v, p), x.basis)


def _horner(v: Sequence[LaurentPoly], at: LaurentPoly) -> LaurentPoly:
    acc = ZERO
    for c in reversed(v):
        acc = acc * at + c
    return acc


def _eval_at_lambda(x: SkeinElement, i: int) -> LaurentPoly:
    d, v = _scaled_power(x)
    return _horner(v, lam(i)).exact_div(d)


def _bracket_e(i: int) -> LaurentPoly:
    return qint(i + 1) if i % 2 == 0 else -qint(i + 1)


def bracket(x: SkeinElement) -> LaurentPoly:
    """<x> = <x, 1>: evaluation of the power form at z = lambda_0."""
    return _eval_at_lambda(x, 0)


def pairing(x: SkeinElement, y: SkeinElement) -> LaurentPoly:
    """Hopf pairing: <f, e_i> = f(lambda_i) <e_i>, extended linearly in y."""
    d, v = _scaled_power(x)
    dy, vy = _scaled_power(y)
    ey = _from_power_integral(vy, Basis.CHEBYSHEV_E)
    total = ZERO
    for i, c in enumerate(ey):
        if not c.is_zero():
            total = total + c * _horner(v, lam(i)) * _bracket_e(i)
    return total.exact_div(d * dy)


def pairing1(x: SkeinElement, y: SkeinElement) -> LaurentPoly:
    """<x, y>_1 = <t(x), t(y)>."""
    return pairing(twist(x, 1), twist(y, 1))


def conj_mult_z2(x: SkeinElement) -> SkeinElement:
    """The operator t . (z^2 *) . t^-1, result in x's basis."""
    y = multiply(z(2), twist(x, -1))
    return convert(twist(y, 1), x.basis)


def lambda_power_sum(n: int, kind: str) -> LaurentPoly:
    """Sum over 0 <= i < n of lambda_{2i} ("even_index") or lambda_i^2 ("squared")."""
    if n < 0:
        raise NegativeIndex(n)
    if kind == "even_index":
        terms = (lam(2 * i) for i in range(n))
    elif kind == "squared":
        terms = (lam(i) * lam(i) for i in range(n))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    total = ZERO
    for t in terms:
        total = total + t
    return total
