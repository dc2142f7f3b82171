"""The restricted quantum group in its PBW basis E^m F^n K^l.

All structure maps live on a per-p :class:`QuantumGroup` context which
memoises products, coproducts and antipodes of basis monomials.  Elements
(:class:`AlgebraElement`, :class:`TensorElement`) are immutable sparse maps
from monomials to :class:`CycloNum` coefficients.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Mapping

from .cyclotomic import CycloNum, field, q_binom
from .errors import ParameterError, RangeError

Monomial = tuple[int, int, int]

__all__ = [
    "Monomial",
    "QuantumGroup",
    "quantum_group",
    "AlgebraElement",
    "TensorElement",
    "monomial",
    "generators",
    "multiply",
    "coproduct",
    "counit",
    "antipode",
    "tensor_multiply",
    "coassociativity_sides",
    "counit_sides",
    "antipode_sides",
    "random_element",
    "basis_elements",
]


def _add_into(acc: dict, key, value) -> None:
    cur = acc.get(key)
    if cur is None:
        if value:
            acc[key] = value
        return
    new = cur + value
    if new:
        acc[key] = new
    else:
        del acc[key]


class QuantumGroup:
    """Structure constants of the restricted quantum group at q = e^{i pi/p}."""

    def __init__(self, p: int):
        if p < 2:
            raise RangeError(f"p must be >= 2, got {p}")
        self.p = p
        self.field = fld = field(p)
        self.q = fld.q
        self.dim = 2 * p**3
        self._kappa = (fld.q - fld.q_pow(-1)).inverse()  # 1/(q - q^-1)
        self._mono_mul: dict = {}
        self._f_left: dict = {}
        self._coproduct: dict = {}
        self._antipode: dict = {}

    def __repr__(self) -> str:
        return f"QuantumGroup(p={self.p})"

    # basis --------------------------------------------------------------

    def basis(self) -> list[Monomial]:
        p = self.p
        return [(m, n, l) for m in range(p) for n in range(p) for l in range(2 * p)]

    def check_monomial(self, m: int, n: int, l: int) -> Monomial:
        p = self.p
        if not (0 <= m < p and 0 <= n < p):
            raise RangeError(f"PBW degrees must lie in [0, {p - 1}], got m={m}, n={n}")
        return (m, n, l % (2 * p))

    # left multiplication by generators on monomials -----------------------

    def _left_E(self, mono: Monomial) -> dict:
        m, n, l = mono
        if m + 1 >= self.p:
            return {}
        return {(m + 1, n, l): self.field.one}

    def _left_K(self, mono: Monomial, power: int = 1) -> dict:
        m, n, l = mono
        return {(m, n, (l + power) % (2 * self.p)): self.field.q_pow(2 * power * (m - n))}

    def _left_F(self, mono: Monomial) -> dict:
        """F * E^m F^n K^l, normal ordered by repeated use of FE = EF - (K - K^-1)/(q - q^-1)."""
        hit = self._f_left.get(mono)
        if hit is not None:
            return hit
        m, n, l = mono
        p = self.p
        if m == 0:
            out = {(0, n + 1, l): self.field.one} if n + 1 < p else {}
        else:
            rest = (m - 1, n, l)
            out = {}
            for mono2, c in self._left_F(rest).items():
                for mono3, c3 in self._left_E(mono2).items():
                    _add_into(out, mono3, c * c3)
            for mono2, c in self._left_K(rest, 1).items():
                _add_into(out, mono2, -self._kappa * c)
            for mono2, c in self._left_K(rest, -1).items():
                _add_into(out, mono2, self._kappa * c)
        self._f_left[mono] = out
        return out

    def _apply_left(self, gen: str, terms: dict) -> dict:
        out: dict = {}
        fn = {"E": self._left_E, "F": self._left_F, "K": self._left_K}[gen]
        for mono, c in terms.items():
            for mono2, c2 in fn(mono).items():
                _add_into(out, mono2, c * c2)
        return out

    def mono_mul(self, a: Monomial, b: Monomial) -> dict:
        """Normal-ordered product of two PBW monomials (memoised)."""
        key = (a, b)
        hit = self._mono_mul.get(key)
        if hit is not None:
            return hit
        m, n, l = a
        terms = self._left_K(b, l) if l else {b: self.field.one}
        for _ in range(n):
            terms = self._apply_left("F", terms)
        for _ in range(m):
            terms = self._apply_left("E", terms)
        self._mono_mul[key] = terms
        return terms

    def multiply_terms(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                c = ca * cb
                for mono, cm in self.mono_mul(ma, mb).items():
                    _add_into(out, mono, c * cm)
        return out

    # Hopf structure ---------------------------------------------------------

    def mono_coproduct(self, mono: Monomial) -> dict:
        """Closed-form coproduct of E^m F^n K^l as {(left, right): coeff}."""
        hit = self._coproduct.get(mono)
        if hit is not None:
            return hit
        m, n, l = mono
        p, fld = self.p, self.field
        out: dict = {}
        for i in range(m + 1):
            bi = q_binom(p, m, i)
            for j in range(n + 1):
                expo = i * (m - i) + j * (n - j) - 2 * (m - i) * (n - j)
                c = fld.q_pow(expo) * bi * q_binom(p, n, j)
                left = (m - i, j, (l + j - n) % (2 * p))
                right = (i, n - j, (l + m - i) % (2 * p))
                _add_into(out, (left, right), c)
        self._coproduct[mono] = out
        return out

    def mono_counit(self, mono: Monomial) -> CycloNum:
        return self.field.one if mono[0] == 0 and mono[1] == 0 else self.field.zero

    def mono_antipode(self, mono: Monomial) -> dict:
        """S(E^m F^n K^l) = S(K)^l S(F)^n S(E)^m with S(E) = -EK^-1, S(F) = -KF, S(K) = K^-1."""
        hit = self._antipode.get(mono)
        if hit is not None:
            return hit
        m, n, l = mono
        p, one = self.p, self.field.one
        s_e = {(1, 0, 2 * p - 1): -one}
        s_f = self.multiply_terms({(0, 0, 1): -one}, {(0, 1, 0): one})
        terms = {(0, 0, (-l) % (2 * p)): one}
        for _ in range(n):
            terms = self.multiply_terms(terms, s_f)
        for _ in range(m):
            terms = self.multiply_terms(terms, s_e)
        self._antipode[mono] = terms
        return terms


@lru_cache(maxsize=None)
def quantum_group(p: int) -> QuantumGroup:
    return QuantumGroup(p)


class AlgebraElement:
    """An element of the restricted quantum group, as a sparse PBW expansion."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Monomial, object] | None = None):
        self.p = p
        fld = field(p)
        clean = {}
        for mono, c in (terms or {}).items():
            c = fld.coerce(c)
            if c:
                clean[tuple(mono)] = c
        self.terms: dict[Monomial, CycloNum] = clean

    @classmethod
    def _wrap(cls, p: int, terms: dict) -> AlgebraElement:
        obj = object.__new__(cls)
        obj.p = p
        obj.terms = terms
        return obj

    @property
    def group(self) -> QuantumGroup:
        return quantum_group(self.p)

    def _check(self, other: AlgebraElement) -> None:
        if other.p != self.p:
            raise ParameterError(f"mismatched p: {self.p} vs {other.p}")

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, CycloNum) or isinstance(other, (int,)) or hasattr(other, "denominator"):
            return AlgebraElement.scalar(self.p, other)
        return None

    @classmethod
    def scalar(cls, p: int, c) -> AlgebraElement:
        return cls(p, {(0, 0, 0): c})

    @classmethod
    def zero(cls, p: int) -> AlgebraElement:
        return cls._wrap(p, {})

    @classmethod
    def one(cls, p: int) -> AlgebraElement:
        return cls.scalar(p, 1)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in o.terms.items():
            _add_into(out, mono, c)
        return AlgebraElement._wrap(self.p, out)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._wrap(self.p, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> AlgebraElement:
        c = field(self.p).coerce(c)
        if not c:
            return AlgebraElement.zero(self.p)
        return AlgebraElement._wrap(self.p, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (CycloNum, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycloNum, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> AlgebraElement:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = AlgebraElement.one(self.p)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.p == other.p and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def coeff(self, m: int, n: int, l: int) -> CycloNum:
        return self.terms.get((m, n, l % (2 * self.p)), field(self.p).zero)

    def __iter__(self) -> Iterator[tuple[Monomial, CycloNum]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlgebraElement(p={self.p}, 0)"
        parts = []
        for (m, n, l), c in sorted(self.terms.items()):
            word = "".join(
                f"{g}^{e}" if e > 1 else g for g, e in (("E", m), ("F", n), ("K", l)) if e
            ) or "1"
            parts.append(f"({c})*{word}")
        return f"AlgebraElement(p={self.p}, " + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [
                {"m": m, "n": n, "l": l, "c": c.to_json()} for (m, n, l), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> AlgebraElement:
        p = int(data["p"])
        return cls(
            p, {(t["m"], t["n"], t["l"]): CycloNum.from_json(p, t["c"]) for t in data["terms"]}
        )


class TensorElement:
    """Element of the tensor square, stored as {(left monomial, right monomial): coeff}."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping | None = None):
        self.p = p
        self.terms: dict = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other: TensorElement) -> TensorElement:
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return TensorElement(self.p, out)

    def __sub__(self, other: TensorElement) -> TensorElement:
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, -c)
        return TensorElement(self.p, out)

    def __mul__(self, other: TensorElement) -> TensorElement:
        if other.p != self.p:
            raise ParameterError(f"mismatched p: {self.p} vs {other.p}")
        g = quantum_group(self.p)
        out: dict = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                c = ca * cb
                left = g.mono_mul(a1, b1)
                if not left:
                    continue
                right = g.mono_mul(a2, b2)
                for m1, c1 in left.items():
                    for m2, c2 in right.items():
                        _add_into(out, (m1, m2), c * c1 * c2)
        return TensorElement(self.p, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @classmethod
    def pure(cls, x: AlgebraElement, y: AlgebraElement) -> TensorElement:
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _add_into(out, (m1, m2), c1 * c2)
        return cls(x.p, out)

    def legs(self) -> Iterator[tuple[AlgebraElement, AlgebraElement]]:
        one = field(self.p).one
        for (a, b), c in self.terms.items():
            yield AlgebraElement._wrap(self.p, {a: c}), AlgebraElement._wrap(self.p, {b: one})


# public operations ----------------------------------------------------------


def monomial(p: int, m: int, n: int, l: int) -> AlgebraElement:
    mono = quantum_group(p).check_monomial(m, n, l)
    return AlgebraElement._wrap(p, {mono: field(p).one})


def generators(p: int) -> dict[str, AlgebraElement]:
    return {
        "E": monomial(p, 1, 0, 0),
        "F": monomial(p, 0, 1, 0),
        "K": monomial(p, 0, 0, 1),
        "Kinv": monomial(p, 0, 0, 2 * p - 1),
    }


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.p != b.p:
        raise ParameterError(f"mismatched p: {a.p} vs {b.p}")
    return AlgebraElement._wrap(a.p, quantum_group(a.p).multiply_terms(a.terms, b.terms))


def coproduct(x: AlgebraElement) -> TensorElement:
    g = quantum_group(x.p)
    out: dict = {}
    for mono, c in x.terms.items():
        for key, c2 in g.mono_coproduct(mono).items():
            _add_into(out, key, c * c2)
    return TensorElement(x.p, out)


def counit(x: AlgebraElement) -> CycloNum:
    acc = field(x.p).zero
    for (m, n, _), c in x.terms.items():
        if m == 0 and n == 0:
            acc = acc + c
    return acc


def antipode(x: AlgebraElement) -> AlgebraElement:
    g = quantum_group(x.p)
    out: dict = {}
    for mono, c in x.terms.items():
        for mono2, c2 in g.mono_antipode(mono).items():
            _add_into(out, mono2, c * c2)
    return AlgebraElement._wrap(x.p, out)


def tensor_multiply(t: TensorElement) -> AlgebraElement:
    """The multiplication map A (x) A -> A."""
    g = quantum_group(t.p)
    out: dict = {}
    for (a, b), c in t.terms.items():
        for mono, c2 in g.mono_mul(a, b).items():
            _add_into(out, mono, c * c2)
    return AlgebraElement._wrap(t.p, out)


def apply_left(t: TensorElement, f) -> TensorElement:
    """(f (x) id)(t) for a linear map f on monomials returning dicts."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for a2, c2 in f(a).items():
            _add_into(out, (a2, b), c * c2)
    return TensorElement(t.p, out)


def apply_right(t: TensorElement, f) -> TensorElement:
    out: dict = {}
    for (a, b), c in t.terms.items():
        for b2, c2 in f(b).items():
            _add_into(out, (a, b2), c * c2)
    return TensorElement(t.p, out)


def coassociativity_sides(x: AlgebraElement) -> tuple[dict, dict]:
    """Both sides of (Delta (x) id) Delta = (id (x) Delta) Delta, as triple-tensor dicts."""
    g = quantum_group(x.p)
    lhs: dict = {}
    rhs: dict = {}
    for (a, b), c in coproduct(x).terms.items():
        for (a1, a2), c1 in g.mono_coproduct(a).items():
            _add_into(lhs, (a1, a2, b), c * c1)
        for (b1, b2), c2 in g.mono_coproduct(b).items():
            _add_into(rhs, (a, b1, b2), c * c2)
    return lhs, rhs


def counit_sides(x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """(eps (x) id) Delta(x) and (id (x) eps) Delta(x); both must equal x."""
    g = quantum_group(x.p)
    left: dict = {}
    right: dict = {}
    for (a, b), c in coproduct(x).terms.items():
        ea = g.mono_counit(a)
        if ea:
            _add_into(left, b, c * ea)
        eb = g.mono_counit(b)
        if eb:
            _add_into(right, a, c * eb)
    return AlgebraElement._wrap(x.p, left), AlgebraElement._wrap(x.p, right)


def antipode_sides(x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """m(S (x) id) Delta(x) and m(id (x) S) Delta(x); both must equal eps(x) 1."""
    g = quantum_group(x.p)
    d = coproduct(x)
    left = tensor_multiply(apply_left(d, g.mono_antipode))
    right = tensor_multiply(apply_right(d, g.mono_antipode))
    return left, right


def random_element(p: int, rng: random.Random, terms: int = 3, coeff_range: int = 3) -> AlgebraElement:
    """A random sparse element with small Z[q] coefficients (test helper)."""
    g = quantum_group(p)
    fld = g.field
    basis = g.basis()
    out: dict = {}
    for mono in rng.sample(basis, min(terms, len(basis))):
        c = fld.zero
        for k in range(fld.degree):
            c = c + fld.q_pow(k) * rng.randint(-coeff_range, coeff_range)
        _add_into(out, mono, c)
    return AlgebraElement._wrap(p, out)


def basis_elements(p: int) -> Iterator[AlgebraElement]:
    for mono in quantum_group(p).basis():
        yield AlgebraElement._wrap(p, {mono: field(p).one})
