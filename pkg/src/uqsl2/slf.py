"""Linear forms on the algebra, the convolution product and the GTA basis.

A :class:`LinearForm` is stored extensionally, by its values on the PBW
monomials.  The GTA basis consists of the simple characters chi^alpha_s and
the forms G_s read off the bottom-left blocks of projective representation
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .algebra import AlgebraElement, _add_into, quantum_group
from .center import canonical_central_elements, phi
from .cyclotomic import CycloNum, field
from .errors import ConsistencyError, DomainError, ParameterError, RangeError
from .linalg import SparseEliminator
from .modules import ModuleSpec, build_rep, character_values

__all__ = [
    "LinearForm",
    "GTACoordinates",
    "counit_form",
    "is_symmetric",
    "symmetry_defects",
    "slf_basis",
    "slf_dimension",
    "product",
    "gta_chi",
    "gta_G",
    "gta_basis",
    "gta_labels",
    "gta_form",
    "decompose_gta",
    "reconstruct",
    "coordinate_form",
]


class LinearForm:
    """A linear form, given by its values on PBW monomials (absent means zero)."""

    __slots__ = ("p", "values")

    def __init__(self, p: int, values: Mapping | None = None):
        self.p = p
        fld = field(p)
        self.values: dict = {}
        for mono, v in (values or {}).items():
            v = fld.coerce(v)
            if v:
                self.values[tuple(mono)] = v

    @classmethod
    def _wrap(cls, p: int, values: dict) -> LinearForm:
        obj = object.__new__(cls)
        obj.p = p
        obj.values = values
        return obj

    def __call__(self, x: AlgebraElement) -> CycloNum:
        if x.p != self.p:
            raise ParameterError(f"mismatched p: {self.p} vs {x.p}")
        acc = field(self.p).zero
        vals = self.values
        for mono, c in x.terms.items():
            v = vals.get(mono)
            if v is not None:
                acc = acc + v * c
        return acc

    def at(self, mono) -> CycloNum:
        return self.values.get(tuple(mono), field(self.p).zero)

    def _check(self, other: LinearForm) -> None:
        if not isinstance(other, LinearForm):
            raise TypeError(f"expected LinearForm, got {type(other).__name__}")
        if other.p != self.p:
            raise ParameterError(f"mismatched p: {self.p} vs {other.p}")

    def __add__(self, other: LinearForm) -> LinearForm:
        self._check(other)
        out = dict(self.values)
        for k, v in other.values.items():
            _add_into(out, k, v)
        return LinearForm._wrap(self.p, out)

    def __neg__(self) -> LinearForm:
        return LinearForm._wrap(self.p, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: LinearForm) -> LinearForm:
        return self + (-other)

    def scale(self, c) -> LinearForm:
        c = field(self.p).coerce(c)
        if not c:
            return LinearForm._wrap(self.p, {})
        return LinearForm._wrap(self.p, {k: v * c for k, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, LinearForm):
            return product(self, other)
        if isinstance(other, (CycloNum, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycloNum, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearForm):
            return self.p == other.p and self.values == other.values
        if isinstance(other, int) and other == 0:
            return not self.values
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.values)

    def __repr__(self) -> str:
        return f"LinearForm(p={self.p}, {len(self.values)} nonzero values)"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "values": [
                {"m": m, "n": n, "l": l, "c": v.to_json()} for (m, n, l), v in sorted(self.values.items())
            ],
        }


def counit_form(p: int) -> LinearForm:
    fld = field(p)
    return LinearForm._wrap(p, {(0, 0, l): fld.one for l in range(2 * p)})


def coordinate_form(p: int, mono) -> LinearForm:
    """x -> coefficient of ``mono`` in the PBW expansion of x."""
    return LinearForm._wrap(p, {tuple(mono): field(p).one})


def symmetry_defects(phi_: LinearForm, limit: int | None = None) -> list[tuple]:
    """Pairs (generator, monomial x) with phi(g x) != phi(x g)."""
    g = quantum_group(phi_.p)
    out = []
    for gen in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        for x in g.basis():
            lhs = phi_(AlgebraElement._wrap(phi_.p, g.mono_mul(gen, x)))
            rhs = phi_(AlgebraElement._wrap(phi_.p, g.mono_mul(x, gen)))
            if lhs != rhs:
                out.append((gen, x, lhs, rhs))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def is_symmetric(phi_: LinearForm) -> bool:
    """phi(xy) = phi(yx) for all x, y; checking y in {E, F, K} suffices."""
    return not symmetry_defects(phi_, limit=1)


@lru_cache(maxsize=None)
def _slf_nullspace(p: int) -> tuple:
    g = quantum_group(p)
    rows = []
    for gen in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        for x in g.basis():
            row: dict = {}
            for mono, c in g.mono_mul(gen, x).items():
                _add_into(row, mono, c)
            for mono, c in g.mono_mul(x, gen).items():
                _add_into(row, mono, -c)
            if row:
                rows.append(row)
    elim = SparseEliminator(g.field, g.basis())
    elim.add_rows(rows)
    return tuple(elim.nullspace())


def slf_basis(p: int) -> list[LinearForm]:
    """A basis of the symmetric forms, solved directly from the symmetry constraints."""
    return [LinearForm(p, v) for v in _slf_nullspace(p)]


def slf_dimension(p: int) -> int:
    return len(_slf_nullspace(p))


def product(a: LinearForm, b: LinearForm) -> LinearForm:
    """(a b)(x) = sum a(x') b(x'') over the coproduct of x."""
    a._check(b)
    p = a.p
    g = quantum_group(p)
    av, bv = a.values, b.values
    if not av or not bv:
        return LinearForm._wrap(p, {})
    out = {}
    for mono in g.basis():
        acc = None
        for (left, right), c in g.mono_coproduct(mono).items():
            x = av.get(left)
            if x is None:
                continue
            y = bv.get(right)
            if y is None:
                continue
            term = x * y * c
            acc = term if acc is None else acc + term
        if acc:
            out[mono] = acc
    return LinearForm._wrap(p, out)


# GTA basis ----------------------------------------------------------------


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise RangeError(f"sign must be +1 or -1, got {sign}")


@lru_cache(maxsize=None)
def gta_chi(p: int, sign: int, s: int) -> LinearForm:
    """Character of the simple module X^sign(s)."""
    _check_sign(sign)
    return LinearForm._wrap(p, character_values(build_rep(ModuleSpec("X", sign, s, p))))


def _h_trace(spec: ModuleSpec) -> dict:
    """Monomial -> trace of the (a-rows, b-columns) block of the projective representation."""
    rep = build_rep(spec)
    s, t = spec.s, spec.p - spec.s
    a0 = s + 2 * t
    out = {}
    for mono in quantum_group(spec.p).basis():
        mat = rep.mono(mono)
        acc = None
        for i in range(s):
            v = mat[a0 + i][i]
            if v:
                acc = v if acc is None else acc + v
        if acc:
            out[mono] = acc
    return out


@lru_cache(maxsize=None)
def gta_G(p: int, s: int) -> LinearForm:
    """G_s = tr(H^+_s) + tr(H^-_{p-s})."""
    if not 1 <= s <= p - 1:
        raise RangeError(f"G index must lie in [1, {p - 1}], got {s}")
    plus = _h_trace(ModuleSpec("P", 1, s, p))
    minus = _h_trace(ModuleSpec("P", -1, p - s, p))
    out = dict(plus)
    for k, v in minus.items():
        _add_into(out, k, v)
    return LinearForm._wrap(p, out)


def gta_labels(p: int) -> list[str]:
    return (
        [f"chi:+:{s}" for s in range(1, p + 1)]
        + [f"chi:-:{s}" for s in range(1, p + 1)]
        + [f"G:{s}" for s in range(1, p)]
    )


def gta_form(p: int, label: str) -> LinearForm:
    parts = label.strip().split(":")
    try:
        if parts[0] == "chi" and len(parts) == 3 and parts[1] in "+-":
            return gta_chi(p, 1 if parts[1] == "+" else -1, int(parts[2]))
        if parts[0] == "G" and len(parts) == 2:
            return gta_G(p, int(parts[1]))
    except ValueError as exc:
        if isinstance(exc, RangeError):
            raise
        raise DomainError(f"bad GTA label {label!r}") from exc
    raise DomainError(f"bad GTA label {label!r}; expected chi:+:s, chi:-:s or G:s")


def gta_basis(p: int) -> dict[str, LinearForm]:
    return {lab: gta_form(p, lab) for lab in gta_labels(p)}


@dataclass
class GTACoordinates:
    p: int
    lam_plus: dict  # s -> CycloNum, 1 <= s <= p
    lam_minus: dict
    mu: dict  # s -> CycloNum, 1 <= s <= p-1

    def as_labels(self) -> dict[str, CycloNum]:
        out = {f"chi:+:{s}": v for s, v in sorted(self.lam_plus.items())}
        out.update({f"chi:-:{s}": v for s, v in sorted(self.lam_minus.items())})
        out.update({f"G:{s}": v for s, v in sorted(self.mu.items())})
        return out

    def nonzero(self) -> dict[str, CycloNum]:
        return {k: v for k, v in self.as_labels().items() if v}

    def to_json(self) -> dict:
        return {
            "lamPlus": {str(s): v.to_json() for s, v in sorted(self.lam_plus.items())},
            "lamMinus": {str(s): v.to_json() for s, v in sorted(self.lam_minus.items())},
            "mu": {str(s): v.to_json() for s, v in sorted(self.mu.items())},
        }

    @classmethod
    def from_labels(cls, p: int, coords: Mapping[str, object]) -> GTACoordinates:
        fld = field(p)
        lp = {s: fld.zero for s in range(1, p + 1)}
        lm = {s: fld.zero for s in range(1, p + 1)}
        mu = {s: fld.zero for s in range(1, p)}
        for lab, v in coords.items():
            parts = lab.split(":")
            if parts[0] == "chi":
                (lp if parts[1] == "+" else lm)[int(parts[2])] = fld.coerce(v)
            elif parts[0] == "G":
                mu[int(parts[1])] = fld.coerce(v)
            else:
                raise DomainError(f"bad GTA label {lab!r}")
        return cls(p, lp, lm, mu)


def reconstruct(coords: GTACoordinates) -> LinearForm:
    p = coords.p
    acc = LinearForm._wrap(p, {})
    for lab, c in coords.as_labels().items():
        if c:
            acc = acc + gta_form(p, lab).scale(c)
    return acc


def decompose_gta(phi_: LinearForm, check: bool = True) -> GTACoordinates:
    """Coordinates of a symmetric form in the GTA basis, read off by evaluation.

    lambda^+_s = phi(Phi^+_{s-1} e_s), lambda^-_s = phi(Phi^-_{s-1} e_{p-s}),
    mu_s = phi(w^+_s)/s, which must also equal phi(w^-_s)/(p - s).
    """
    p = phi_.p
    if not is_symmetric(phi_):
        raise DomainError("decompose_gta needs a symmetric linear form")
    ce = canonical_central_elements(p)
    lp, lm, mu = {}, {}, {}
    for s in range(1, p + 1):
        lp[s] = phi_(_selector(p, 1, s))
        lm[s] = phi_(_selector(p, -1, s))
    for s in range(1, p):
        mu[s] = phi_(ce.w_plus[s]) / s
        alt = phi_(ce.w_minus[s]) / (p - s)
        if alt != mu[s]:
            raise ConsistencyError(f"w^+ and w^- disagree on mu_{s}: {mu[s]} vs {alt}")
    coords = GTACoordinates(p, lp, lm, mu)
    if check and reconstruct(coords) != phi_:
        raise ConsistencyError("GTA reconstruction does not reproduce the form")
    return coords


@lru_cache(maxsize=None)
def _selector(p: int, sign: int, s: int) -> AlgebraElement:
    ce = canonical_central_elements(p)
    idx = s if sign > 0 else p - s
    return phi(p, sign, s - 1) * ce.e[idx]
