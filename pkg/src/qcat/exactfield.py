"""Exact arithmetic in the rational function field Q(v), with v = q^(1/2).

Every scalar the library produces lives here.  A :class:`ScalarQ` is stored as
``v**shift * num(v) / den(v)`` where ``num`` and ``den`` are polynomials with
rational coefficients (backed by FLINT's ``fmpq_poly``).  The canonical form is

* ``num`` and ``den`` coprime, both with a nonzero constant term;
* ``den`` has integer coefficients with content 1 and a positive leading
  coefficient;
* zero is ``num = 0, den = 1, shift = 0``.

so equality and hashing are plain structural comparisons.

Text form uses q with half-integer exponents, e.g. ``(-q^3 + q)/(q^2 - 1)``,
``-q^(-3/2)`` or ``q^2 + 1 + q^(-2)``; :func:`parse_scalar` inverts
``str`` exactly.
"""
from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from flint import fmpq, fmpq_poly

from .errors import EvaluationSingularity

__all__ = [
    "ScalarQ", "ZERO", "ONE", "V", "Q",
    "qint", "qfact", "q_minus_qinv", "v_power", "q_power",
    "eval_at", "evaluate", "parse_scalar",
]

_POLY_ONE = fmpq_poly([1])
_POLY_ZERO = fmpq_poly([])


def _low_degree(p):
    k = 0
    while p[k] == 0:
        k += 1
    return k


def _to_fmpq(x):
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, Rational):
        return fmpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


class ScalarQ:
    """Immutable element of Q(v)."""

    __slots__ = ("_num", "_den", "_shift", "_hash")

    def __init__(self, value=0):
        if isinstance(value, ScalarQ):
            self._num, self._den, self._shift = value._num, value._den, value._shift
        elif isinstance(value, str):
            other = parse_scalar(value)
            self._num, self._den, self._shift = other._num, other._den, other._shift
        else:
            c = _to_fmpq(value)
            self._num = fmpq_poly([c]) if c != 0 else _POLY_ZERO
            self._den = _POLY_ONE
            self._shift = 0
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def _raw(cls, num, den, shift):
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        obj._shift = shift
        obj._hash = None
        return obj

    @classmethod
    def _canonical(cls, num, den, shift, coprime=False):
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(v)")
        if not coprime and den.degree() > 0:
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
        if num[0] == 0:
            k = _low_degree(num)
            num = num.right_shift(k)
            shift += k
        if den[0] == 0:
            k = _low_degree(den)
            den = den.right_shift(k)
            shift -= k
        if den.degree() == 0:
            c = den[0]
            if c != 1:
                num = num / c
            return cls._raw(num, _POLY_ONE, shift)
        dz = den.numer()
        content = dz.content()
        if dz[dz.degree()] < 0:
            content = -content
        scale = fmpq(int(content)) / den.denom()
        if scale != 1:
            den = den / scale
            num = num / scale
        return cls._raw(num, den, shift)

    @classmethod
    def from_laurent(cls, coeffs):
        """Build from a mapping ``{v_exponent: rational coefficient}``."""
        coeffs = {int(k): c for k, c in dict(coeffs).items() if c != 0}
        if not coeffs:
            return ZERO
        lo = min(coeffs)
        hi = max(coeffs)
        dense = [_to_fmpq(coeffs.get(k, 0)) for k in range(lo, hi + 1)]
        return cls._raw(fmpq_poly(dense), _POLY_ONE, lo)

    @staticmethod
    def coerce(x):
        return x if isinstance(x, ScalarQ) else ScalarQ(x)

    # -- inspection ---------------------------------------------------------
    @property
    def is_laurent(self):
        """True when the denominator is 1."""
        return self._den.degree() == 0

    def is_zero(self):
        return self._num.is_zero()

    def __bool__(self):
        return not self._num.is_zero()

    def numerator_coeffs(self):
        """``{v_exponent: Fraction}`` for the numerator (including the shift)."""
        return {i + self._shift: Fraction(int(c.p), int(c.q))
                for i, c in enumerate(self._num.coeffs()) if c != 0}

    def denominator_coeffs(self):
        """``{v_exponent: Fraction}`` for the denominator."""
        return {i: Fraction(int(c.p), int(c.q))
                for i, c in enumerate(self._den.coeffs()) if c != 0}

    def laurent_coeffs(self):
        if not self.is_laurent:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator_coeffs()

    def as_monomial(self):
        """Return ``(coefficient, v_exponent)`` if this is ``c * v**k``, else None."""
        if self.is_laurent and self._num.degree() == 0:
            c = self._num[0]
            return Fraction(int(c.p), int(c.q)), self._shift
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ(other)
            except TypeError:
                return NotImplemented
        if other._num.is_zero():
            return self
        if self._num.is_zero():
            return other
        s = min(self._shift, other._shift)
        a = self._num if self._shift == s else self._num.left_shift(self._shift - s)
        b = other._num if other._shift == s else other._num.left_shift(other._shift - s)
        if self._den.degree() == 0 and other._den.degree() == 0:
            return ScalarQ._canonical(a + b, _POLY_ONE, s, coprime=True)
        if self._den == other._den:
            return ScalarQ._canonical(a + b, self._den, s)
        return ScalarQ._canonical(a * other._den + b * self._den, self._den * other._den, s)

    __radd__ = __add__

    def __neg__(self):
        return ScalarQ._raw(-self._num, self._den, self._shift)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ScalarQ.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ(other)
            except TypeError:
                return NotImplemented
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        shift = self._shift + other._shift
        if self._den.degree() == 0 and other._den.degree() == 0:
            return ScalarQ._raw(self._num * other._num, _POLY_ONE, shift)
        return ScalarQ._canonical(self._num * other._num, self._den * other._den, shift)

    __rmul__ = __mul__

    def inverse(self):
        if self._num.is_zero():
            raise ZeroDivisionError("division by zero in Q(v)")
        return ScalarQ._canonical(self._den, self._num, -self._shift, coprime=True)

    def __truediv__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ScalarQ.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        if self._num.is_zero():
            return ZERO
        # powers of coprime, primitive polynomials stay canonical
        return ScalarQ._raw(self._num ** k, self._den ** k if self._den.degree() else _POLY_ONE,
                            self._shift * k)

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ(other)
            except TypeError:
                return NotImplemented
        return (self._shift == other._shift and self._num == other._num
                and self._den == other._den)

    def __hash__(self):
        if self._hash is None:
            if self.is_laurent and self._num.degree() == 0 and self._shift == 0:
                c = self._num[0] if not self._num.is_zero() else fmpq(0)
                self._hash = hash(Fraction(int(c.p), int(c.q)))
            else:
                self._hash = hash((self._shift, tuple(self._num.coeffs()),
                                   tuple(self._den.coeffs())))
        return self._hash

    # -- numeric bridge -----------------------------------------------------
    def evaluate(self, v):
        """Value at a complex ``v``; raises when the denominator (nearly) vanishes."""
        den = _horner(self._den, v)
        if abs(den) < 1e-12:
            raise EvaluationSingularity(f"denominator of {self} vanishes at v={v}")
        return _horner(self._num, v) * v ** self._shift / den

    # -- text ---------------------------------------------------------------
    def __str__(self):
        num = _format_poly(self.numerator_coeffs())
        if self.is_laurent:
            return num
        return f"({num})/({_format_poly(self.denominator_coeffs())})"

    def __repr__(self):
        return f"ScalarQ('{self}')"


def _horner(p, x):
    acc = 0j
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c.p) / int(c.q)
    return acc


ZERO = ScalarQ._raw(_POLY_ZERO, _POLY_ONE, 0)
ONE = ScalarQ._raw(_POLY_ONE, _POLY_ONE, 0)
V = ScalarQ._raw(_POLY_ONE, _POLY_ONE, 1)
Q = ScalarQ._raw(_POLY_ONE, _POLY_ONE, 2)


def v_power(k):
    """``v**k`` = ``q**(k/2)``."""
    return ScalarQ._raw(_POLY_ONE, _POLY_ONE, k)


def q_power(k):
    return v_power(2 * k)


@lru_cache(maxsize=None)
def qint(n):
    """The q-integer ``[n] = (q^n - q^-n)/(q - q^-1)``, a Laurent polynomial."""
    if n < 0:
        return -qint(-n)
    return ScalarQ.from_laurent({2 * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfact(n):
    """``[n]! = [n][n-1]...[1]`` with ``[0]! = 1``."""
    if n < 0:
        raise ValueError(f"q-factorial of negative integer {n}")
    out = ONE
    for k in range(2, n + 1):
        out = out * qint(k)
    return out


def q_minus_qinv():
    return ScalarQ.from_laurent({2: 1, -2: -1})


def evaluate(s, v):
    return ScalarQ.coerce(s).evaluate(v)


def eval_at(s, t):
    """Evaluate at ``q = exp(i*pi*t)``, i.e. ``v = exp(i*pi*t/2)``."""
    return ScalarQ.coerce(s).evaluate(cmath.exp(1j * math.pi * t / 2))


# -- text form ---------------------------------------------------------------

def _format_exponent(k):
    # k is the exponent of v; printed as a power of q
    if k % 2:
        return f"q^({k}/2)"
    e = k // 2
    if e == 1:
        return "q"
    if e > 1:
        return f"q^{e}"
    return f"q^({e})"


def _format_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_poly(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        elif mag == 1:
            body = _format_exponent(k)
        else:
            body = f"{_format_coeff(mag)}*{_format_exponent(k)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<q>q(?:\s*\^\s*(?:\(\s*(?P<pexp>-?\d+(?:/2)?)\s*\)|(?P<bexp>-?\d+)))?)?
        \s*""",
    re.VERBOSE,
)


def _parse_poly(text):
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    coeffs = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("q") is None):
            raise ValueError(f"cannot parse scalar near {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator near {text[pos:]!r}")
        if m.group("star") and m.group("q") is None:
            raise ValueError(f"dangling '*' near {text[pos:]!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("q") is None:
            k = 0
        else:
            exp = m.group("pexp") or m.group("bexp") or "1"
            if exp.endswith("/2"):
                k = int(exp[:-2])
            else:
                k = 2 * int(exp)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        first = False
    return ScalarQ.from_laurent(coeffs)


def parse_scalar(text):
    """Parse the text form produced by ``str(ScalarQ)``."""
    text = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
    if m and _balanced(m.group(1)) and _balanced(m.group(2)):
        num = _parse_poly(m.group(1))
        den = _parse_poly(m.group(2))
        return num / den
    return _parse_poly(text)


def _balanced(s):
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0
