"""Exact integer Laurent polynomials in A, and the q-scalars built from them.

Everything is stored in the variable ``A``; the customary ``a = A^2`` is
encoded by doubling exponents, so ``a_pow(n)`` is the monomial ``A^(2n)``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "LaurentFraction",
    "QScalarTag",
    "NotDivisible",
    "NegativeFactorial",
    "BadMultiIndex",
    "ZeroBase",
    "A",
    "ONE",
    "ZERO",
    "a_pow",
    "add",
    "mul",
    "neg",
    "bar",
    "exact_div",
    "qbrace",
    "qint",
    "qbrace_fact",
    "qint_fact",
    "qbinom",
    "multi_qbinom",
    "qscalar",
    "mu",
    "mu_pow",
    "lam",
    "pochhammer",
    "eval_integer",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class NegativeFactorial(ValueError):
    pass


class BadMultiIndex(ValueError):
    pass


class ZeroBase(ZeroDivisionError):
    pass


Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    """An element of Z[A, A^-1], immutable, kept in canonical form.

    >>> f = LaurentPoly({1: 1, -1: 1})
    >>> str(f * f)
    'A^-2 + 2 + A^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {int(e): int(c) for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return self.is_monomial() and abs(next(iter(self._terms.values()))) == 1

    @property
    def low(self) -> int:
        return min(self._terms)

    @property
    def high(self) -> int:
        return max(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        st, ot = self._terms, other._terms
        if not st or not ot:
            return ZERO
        if len(ot) == 1:
            (e2, c2), = ot.items()
            return LaurentPoly._raw({e + e2: c * c2 for e, c in st.items()})
        if len(st) == 1:
            return other * self
        if len(st) * len(ot) > _KRONECKER_CUTOFF:
            return LaurentPoly._raw(_kronecker_mul(st, ot))
        out: dict[int, int] = {}
        get = out.get
        for e1, c1 in st.items():
            for e2, c2 in ot.items():
                k = e1 + e2
                out[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise NotDivisible(f"{self} is not a unit; cannot raise to {n}")
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(e * n, c ** (-n))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """Conjugation A -> A^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def exact_div(self, g: Scalar) -> "LaurentPoly":
        """Return h with g*h == self, raising NotDivisible otherwise.

        Ascending long division: the lowest term of the remainder is killed
        at every step, so the quotient is produced from its lowest exponent up.
        """
        g = LaurentPoly.coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        gt = g._terms
        if len(gt) == 1:
            (ge, gc), = gt.items()
            out = {}
            for e, c in self._terms.items():
                q, r = divmod(c, gc)
                if r:
                    raise NotDivisible(f"{self} / {g}")
                out[e - ge] = q
            return LaurentPoly._raw(out)

        glow, ghigh = g.low, g.high
        flow, fhigh = self.low, self.high
        qlow, qhigh = flow - glow, fhigh - ghigh
        if qhigh < qlow:
            raise NotDivisible(f"{self} / {g}")
        # dense working arrays indexed from flow
        rem = [0] * (fhigh - flow + 1)
        for e, c in self._terms.items():
            rem[e - flow] = c
        gd = [(e - glow, c) for e, c in sorted(gt.items())]
        lead = gd[0][1]
        quot = {}
        for qe in range(qlow, qhigh + 1):
            i = qe + glow - flow
            c = rem[i]
            if not c:
                continue
            q, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"{self} / {g}")
            quot[qe] = q
            for off, gc in gd:
                rem[i + off] -= q * gc
        if any(rem):
            raise NotDivisible(f"{self} / {g}")
        return LaurentPoly._raw(quot)

    # -- evaluation and serialization ------------------------------------

    def eval(self, A0) -> Fraction:
        A0 = Fraction(A0)
        if A0 == 0:
            raise ZeroBase("cannot evaluate a Laurent polynomial at A = 0")
        return sum((c * A0 ** e for e, c in self._terms.items()), Fraction(0))

    def to_json(self) -> dict:
        return {"var": "A", "terms": [[e, str(c)] for e, c in self.terms]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        if obj.get("var", "A") != "A":
            raise ValueError(f"unsupported variable {obj.get('var')!r}")
        exps = [int(e) for e, _ in obj["terms"]]
        if exps != sorted(set(exps)):
            raise ValueError("exponents must be strictly ascending")
        return cls({int(e): int(c) for e, c in obj["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms:
            sign = "-" if c < 0 else "+"
            m = abs(c)
            if e == 0:
                body = str(m)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if m == 1 else f"{m}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.terms)!r})"


_KRONECKER_CUTOFF = 4000


def _kronecker_mul(f: dict, g: dict) -> dict:
    """Product of two term maps by packing coefficients into one big integer.

    Exponents are rescaled by their common stride (our polynomials mostly
    live in A^2 or A^4); each coefficient gets a fixed-width slot wide enough
    for the largest possible convolution entry, offset to be nonnegative.
    """
    flow, glow = min(f), min(g)
    stride = 0
    for e in f:
        stride = gcd(stride, e - flow)
    for e in g:
        stride = gcd(stride, e - glow)
    stride = stride or 1
    bound = max(map(abs, f.values())) * max(map(abs, g.values())) * min(len(f), len(g))
    width = (2 * bound + 1).bit_length() + 1
    width = (width + 7) // 8 * 8
    fn = max(f) - flow
    gn = max(g) - glow
    F = sum(c << (width * ((e - flow) // stride)) for e, c in f.items())
    G = sum(c << (width * ((e - glow) // stride)) for e, c in g.items())
    slots = fn // stride + gn // stride + 1
    half = 1 << (width - 1)
    # add `half` to every slot so all digits become nonnegative
    offset = half * (((1 << (width * slots)) - 1) // ((1 << width) - 1))
    packed = (F * G + offset).to_bytes(slots * width // 8, "little")
    step = width // 8
    base = flow + glow
    out = {}
    for i in range(slots):
        c = int.from_bytes(packed[i * step:(i + 1) * step], "little") - half
        if c:
            out[base + i * stride] = c
    return out


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
A = LaurentPoly._raw({1: 1})


class LaurentFraction:
    """A formal quotient num/den of Laurent polynomials.

    Only used for the few scalars that are genuinely not Laurent
    polynomials; no gcd reduction is attempted.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Scalar = 1):
        num, den = LaurentPoly.coerce(num), LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = num, den

    def __mul__(self, other):
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction(other)
        return LaurentFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction(other)
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __add__(self, other):
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction(other)
        if self.den == other.den:
            return LaurentFraction(self.num + other.num, self.den)
        return LaurentFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentFraction(-self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFraction(other)
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def to_poly(self) -> LaurentPoly:
        return self.num.exact_div(self.den)

    def __repr__(self):
        return f"LaurentFraction(({self.num}) / ({self.den}))"


def a_pow(n: int) -> LaurentPoly:
    """The monomial a^n = A^(2n)."""
    return LaurentPoly.monomial(2 * n)


def add(f: Scalar, g: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(f) + g


def mul(f: Scalar, g: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(f) * LaurentPoly.coerce(g)


def neg(f: Scalar) -> LaurentPoly:
    return -LaurentPoly.coerce(f)


def bar(f: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(f).bar()


def exact_div(f: Scalar, g: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(f).exact_div(g)


def prod(factors: Iterable[Scalar]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


# -- q-scalars --------------------------------------------------------------

@lru_cache(maxsize=None)
def qbrace(n: int) -> LaurentPoly:
    """{n} = a^n - a^-n."""
    if n == 0:
        return ZERO
    return LaurentPoly._raw({2 * n: 1, -2 * n: -1})


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n] = {n}/{1} = a^(n-1) + a^(n-3) + ... + a^(1-n)."""
    if n < 0:
        return -qint(-n)
    return LaurentPoly._raw({2 * j: 1 for j in range(1 - n, n, 2)})


@lru_cache(maxsize=None)
def qbrace_fact(n: int) -> LaurentPoly:
    if n < 0:
        raise NegativeFactorial(n)
    return ONE if n == 0 else qbrace_fact(n - 1) * qbrace(n)


@lru_cache(maxsize=None)
def qint_fact(n: int) -> LaurentPoly:
    if n < 0:
        raise NegativeFactorial(n)
    return ONE if n == 0 else qint_fact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Balanced Gaussian binomial [n][n-1]...[n-k+1] / [k]!."""
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    if 0 <= n < k:
        return ZERO
    num = prod(qint(n - j) for j in range(k))
    for j in range(2, k + 1):
        num = num.exact_div(qint(j))
    return num


def _parts(ks) -> tuple[int, ...]:
    return tuple(getattr(ks, "parts", ks))


def multi_qbinom(n: int, ks) -> LaurentPoly:
    """[n]! / ([k_1]! ... [k_p]!) for a composition ks of n."""
    parts = _parts(ks)
    if any(k < 0 for k in parts) or sum(parts) != n:
        raise BadMultiIndex(f"{parts} is not a composition of {n}")
    return _multi_qbinom(tuple(sorted(parts)))


@lru_cache(maxsize=None)
def _multi_qbinom(parts: tuple[int, ...]) -> LaurentPoly:
    # chain of binomials: [n; k1] [n-k1; k2] ...
    out, rest = ONE, sum(parts)
    for k in parts[:-1]:
        out = out * qbinom(rest, k)
        rest -= k
    return out


def mu(i: int) -> LaurentPoly:
    """Twist eigenvalue (-1)^i A^(i^2 + 2i)."""
    return LaurentPoly.monomial(i * i + 2 * i, -1 if i % 2 else 1)


def mu_pow(i: int, p: int) -> LaurentPoly:
    """mu(i)^p for any integer p."""
    return LaurentPoly.monomial(p * (i * i + 2 * i), -1 if (i * p) % 2 else 1)


def lam(i: int) -> LaurentPoly:
    """lambda_i = -a^(i+1) - a^(-i-1)."""
    return LaurentPoly({2 * (i + 1): -1}) + LaurentPoly({-2 * (i + 1): -1})


def pochhammer(m: int, n: int) -> LaurentPoly:
    """(x)_n = (1-x)(1-xq)...(1-xq^(n-1)) with x = q^m, q = a^2 = A^4."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    return prod(ONE - LaurentPoly.monomial(4 * (m + j)) for j in range(n))


def eval_integer(f: Scalar, A0) -> Fraction:
    return LaurentPoly.coerce(f).eval(A0)


class QScalarTag(enum.Enum):
    BRACE = "brace"
    BRACKET = "bracket"
    BRACE_FACTORIAL = "brace_factorial"
    BRACKET_FACTORIAL = "bracket_factorial"
    BINOMIAL = "binomial"
    MULTINOMIAL = "multinomial"
    POCHHAMMER = "pochhammer"


_QSCALAR = {
    QScalarTag.BRACE: qbrace,
    QScalarTag.BRACKET: qint,
    QScalarTag.BRACE_FACTORIAL: qbrace_fact,
    QScalarTag.BRACKET_FACTORIAL: qint_fact,
    QScalarTag.BINOMIAL: qbinom,
    QScalarTag.MULTINOMIAL: multi_qbinom,
    QScalarTag.POCHHAMMER: pochhammer,
}


def qscalar(tag: QScalarTag, *args) -> LaurentPoly:
    return _QSCALAR[QScalarTag(tag)](*args)
