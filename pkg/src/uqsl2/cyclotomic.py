"""Exact arithmetic in Q(q), q a primitive 2p-th root of unity.

Elements are stored in the power basis of Q[x]/(Phi_2p(x)) as an integer
numerator vector over a common positive denominator.  Phi_2p is monic with
integer coefficients, so reduction never leaves Z and only the final gcd
normalisation touches the denominator.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DomainError, ParameterError, RangeError

__all__ = [
    "CycloNum",
    "CyclotomicField",
    "cyclotomic_polynomial",
    "field",
    "q_int",
    "q_fact",
    "q_binom",
    "to_complex",
]


def _polydivmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (lowest degree first) by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i in range(dd + 1):
                num[k - dd + i] -= c * den[i]
    rem = num[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise RangeError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _polydivmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


class CyclotomicField:
    """Per-p arithmetic context: modulus, reduction table and powers of q."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 1:
            raise RangeError(f"p must be a positive integer, got {p!r}")
        self.p = p
        self.order = 2 * p
        self.modulus = cyclotomic_polynomial(2 * p)
        self.degree = d = len(self.modulus) - 1
        # x^k mod Phi for k < 2d - 1, as integer vectors
        red = []
        cur = [0] * d
        cur[0] = 1
        for k in range(max(2 * d - 1, 1)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._red = tuple(red)
        self.zero = CycloNum._raw(self, (0,) * d, 1)
        self.one = CycloNum._raw(self, (1,) + (0,) * (d - 1), 1)
        # q^k for 0 <= k < 2p
        powers = [self.one]
        gen = self._red[1] if d > 1 else tuple(-c for c in self.modulus[:1])
        qv = CycloNum._raw(self, tuple(gen), 1)
        for _ in range(1, 2 * p):
            powers.append(powers[-1] * qv)
        self._qpow = tuple(powers)
        self.q = qv

    def __repr__(self) -> str:
        return f"CyclotomicField(p={self.p})"

    def q_pow(self, k: int) -> CycloNum:
        return self._qpow[k % self.order]

    def from_rational(self, r) -> CycloNum:
        r = Fraction(r)
        return CycloNum._normalize(self, [r.numerator] + [0] * (self.degree - 1), r.denominator)

    def coerce(self, x) -> CycloNum:
        if isinstance(x, CycloNum):
            if x._field is not self:
                raise ParameterError(f"mismatched p: {x.p} vs {self.p}")
            return x
        if isinstance(x, (int, Rational)):
            return self.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(q)")


@lru_cache(maxsize=None)
def field(p: int) -> CyclotomicField:
    return CyclotomicField(p)


class CycloNum:
    """An element of Q(q) = Q[x]/(Phi_2p(x)).  Immutable."""

    __slots__ = ("_field", "_num", "_den", "_hash")

    def __init__(self, p: int, coeffs=None):
        fld = field(p)
        if coeffs is None:
            coeffs = [0] * fld.degree
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > fld.degree:
            # accept longer polynomials and reduce them
            acc = fld.zero
            for k, c in enumerate(coeffs):
                if c:
                    acc = acc + fld.q_pow(k) * c
            self._field, self._num, self._den = fld, acc._num, acc._den
        else:
            coeffs = coeffs + [Fraction(0)] * (fld.degree - len(coeffs))
            den = math.lcm(*(c.denominator for c in coeffs))
            num = [c.numerator * (den // c.denominator) for c in coeffs]
            other = CycloNum._normalize(fld, num, den)
            self._field, self._num, self._den = fld, other._num, other._den
        self._hash = None

    @classmethod
    def _raw(cls, fld: CyclotomicField, num: tuple[int, ...], den: int) -> CycloNum:
        obj = object.__new__(cls)
        obj._field = fld
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def _normalize(cls, fld: CyclotomicField, num, den: int) -> CycloNum:
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = math.gcd(den, *num)
        if g == 0:
            return cls._raw(fld, tuple(num), 1)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return cls._raw(fld, tuple(num), den)

    # constructors -----------------------------------------------------

    @classmethod
    def q(cls, p: int) -> CycloNum:
        return field(p).q

    @classmethod
    def q_pow(cls, p: int, k: int) -> CycloNum:
        return field(p).q_pow(k)

    @classmethod
    def from_rational(cls, p: int, r) -> CycloNum:
        return field(p).from_rational(r)

    @classmethod
    def zero(cls, p: int) -> CycloNum:
        return field(p).zero

    @classmethod
    def one(cls, p: int) -> CycloNum:
        return field(p).one

    # accessors --------------------------------------------------------

    @property
    def p(self) -> int:
        return self._field.p

    @property
    def field(self) -> CyclotomicField:
        return self._field

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # arithmetic -------------------------------------------------------

    def _other(self, other) -> CycloNum | None:
        if isinstance(other, CycloNum):
            if other._field is not self._field:
                raise ParameterError(f"mismatched p: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, Rational)):
            return self._field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return CycloNum._normalize(self._field, [a + b for a, b in zip(self._num, o._num)], self._den)
        da, db = self._den, o._den
        return CycloNum._normalize(
            self._field, [a * db + b * da for a, b in zip(self._num, o._num)], da * db
        )

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum._raw(self._field, tuple(-c for c in self._num), self._den)

    def __pos__(self) -> CycloNum:
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        fld = self._field
        a, b = self._num, o._num
        d = fld.degree
        if not any(b) or not any(a):
            return fld.zero
        if not any(a[1:]):
            c = a[0]
            return CycloNum._normalize(fld, [c * x for x in b], self._den * o._den)
        if not any(b[1:]):
            c = b[0]
            return CycloNum._normalize(fld, [c * x for x in a], self._den * o._den)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        red = fld._red
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = red[k]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloNum._normalize(fld, out, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        fld = self._field
        if self.is_rational():
            return fld.from_rational(1 / self.to_fraction())
        # extended gcd over Q[x]: find s with s*a = 1 mod Phi
        r0 = [Fraction(c) for c in fld.modulus]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            quo, rem = _qdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(_padd(s0, _pmul(quo, s1), -1))
            if len(r1) == 1 and r1[0] == 0:
                break
        # r0 is a nonzero constant
        assert len(r0) == 1 and r0[0] != 0
        inv = [c / r0[0] for c in s0]
        res = CycloNum(self.p, inv)
        return res

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> CycloNum:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self._field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self._num)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return (
                self._field.p == other._field.p
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._field.p, self._num, self._den))
        return self._hash

    # conversions ------------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(1j * math.pi / self.p)
        return sum(complex(c) * z**k for k, c in enumerate(self.coeffs))

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, p: int, data: list[str]) -> CycloNum:
        fld = field(p)
        if len(data) != fld.degree:
            raise DomainError(f"expected {fld.degree} coefficients, got {len(data)}")
        return cls(p, [Fraction(s) for s in data])

    def __repr__(self) -> str:
        return f"CycloNum(p={self.p}, {self})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            mono = "q" if k == 1 else f"q^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def latex(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{{{k}}}")
            if c.denominator != 1:
                mag = f"\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
            elif abs(c) != 1 or not mono:
                mag = str(abs(c.numerator))
            else:
                mag = ""
            parts.append(("-" if c < 0 else "+", mag + mono))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly or [Fraction(0)]


def _padd(a, b, sign=1):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)
    ]


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qdivmod(num, den):
    num = list(num)
    den = _trim(list(den))
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        quot[k] = c
        if c:
            for i, y in enumerate(den):
                num[k + i] -= c * y
    rem = _trim(num[: len(den) - 1] or [Fraction(0)])
    return _trim(quot), rem


# q-combinatorics --------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(p: int, n: int) -> CycloNum:
    """The quantum integer [n] = (q^n - q^-n)/(q - q^-1), any integer n."""
    fld = field(p)
    if n < 0:
        return -q_int(p, -n)
    acc = fld.zero
    for k in range(n):
        acc = acc + fld.q_pow(n - 1 - 2 * k)
    return acc


@lru_cache(maxsize=None)
def q_fact(p: int, m: int) -> CycloNum:
    if m < 0:
        raise RangeError(f"q-factorial of negative integer {m}")
    acc = field(p).one
    for k in range(1, m + 1):
        acc = acc * q_int(p, k)
    return acc


@lru_cache(maxsize=None)
def q_binom(p: int, a: int, b: int) -> CycloNum:
    if not 0 <= b <= a:
        raise RangeError(f"q-binomial needs 0 <= b <= a, got a={a}, b={b}")
    den = q_fact(p, b) * q_fact(p, a - b)
    if not den:
        raise DomainError(f"q-binomial [{a} {b}] has a vanishing denominator at p={p}")
    return q_fact(p, a) / den


def to_complex(a: CycloNum) -> complex:
    return a.to_complex()
