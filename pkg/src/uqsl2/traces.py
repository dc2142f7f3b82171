"""Traces on projective modules, their symmetric forms, and the right integral.

A trace on the projective modules is determined by 3p - 1 numbers: its
values on the identities of X^+(p), X^-(p) and every P^alpha(s), and on the
nilpotent endomorphism p^+_s (the value on p^-_{p-s} is the same number).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import AlgebraElement, _add_into, quantum_group
from .cyclotomic import CycloNum, field, q_fact, q_int
from .errors import DomainError
from .linalg import SparseEliminator, solve
from .slf import GTACoordinates, LinearForm, decompose_gta, gta_chi, gta_G, is_symmetric

__all__ = [
    "TraceData",
    "pi_to_slf",
    "slf_to_trace",
    "modified_trace",
    "normalized_zeta",
    "fek_to_pbw",
    "integral_mu",
    "integral_form",
    "cointegral_space",
    "cointegral_space_dimension",
    "cointegral_defects",
]


@dataclass
class TraceData:
    p: int
    tXp_plus: CycloNum
    tXp_minus: CycloNum
    tP_id: dict = dc_field(default_factory=dict)  # (sign, s) -> value on Id of P^sign(s)
    tP_nil: dict = dc_field(default_factory=dict)  # s -> value on p^+_s

    @classmethod
    def zero(cls, p: int) -> TraceData:
        z = field(p).zero
        return cls(
            p,
            z,
            z,
            {(a, s): z for a in (1, -1) for s in range(1, p)},
            {s: z for s in range(1, p)},
        )

    def nil_minus(self, s: int) -> CycloNum:
        """Value on p^-_s, which equals the value on p^+_{p-s}."""
        return self.tP_nil[self.p - s]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TraceData):
            return NotImplemented
        z = field(self.p).zero
        keys_id = set(self.tP_id) | set(other.tP_id)
        keys_nil = set(self.tP_nil) | set(other.tP_nil)
        return (
            self.p == other.p
            and self.tXp_plus == other.tXp_plus
            and self.tXp_minus == other.tXp_minus
            and all(self.tP_id.get(k, z) == other.tP_id.get(k, z) for k in keys_id)
            and all(self.tP_nil.get(k, z) == other.tP_nil.get(k, z) for k in keys_nil)
        )

    def to_json(self) -> dict:
        out = {"X:+:%d" % self.p: self.tXp_plus.to_json(), "X:-:%d" % self.p: self.tXp_minus.to_json()}
        for (a, s), v in sorted(self.tP_id.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            out[f"P:{'+' if a > 0 else '-'}:{s}"] = v.to_json()
        for s, v in sorted(self.tP_nil.items()):
            out[f"nil:+:{s}"] = v.to_json()
        return out


def pi_to_slf(t: TraceData) -> LinearForm:
    """The symmetric form attached to a trace, written in the GTA basis."""
    p = t.p
    acc = gta_chi(p, 1, p).scale(t.tXp_plus) + gta_chi(p, -1, p).scale(t.tXp_minus)
    for (a, s), v in t.tP_id.items():
        if v:
            acc = acc + gta_chi(p, a, s).scale(v)
    for s, v in t.tP_nil.items():
        if v:
            acc = acc + gta_G(p, s).scale(v)
    return acc


def slf_to_trace(phi_: LinearForm) -> TraceData:
    if not is_symmetric(phi_):
        raise DomainError("slf_to_trace needs a symmetric linear form")
    c: GTACoordinates = decompose_gta(phi_)
    p = phi_.p
    return TraceData(
        p,
        c.lam_plus[p],
        c.lam_minus[p],
        {(a, s): (c.lam_plus if a > 0 else c.lam_minus)[s] for a in (1, -1) for s in range(1, p)},
        {s: c.mu[s] for s in range(1, p)},
    )


def modified_trace(p: int) -> TraceData:
    """The modified trace normalized so that its value on Id of X^-(p) is 1."""
    fld = field(p)
    two_cos = lambda s: fld.q_pow(s) + fld.q_pow(-s)
    return TraceData(
        p,
        fld.from_rational((-1) ** (p - 1)),
        fld.one,
        {
            **{(1, s): two_cos(s) * (-1) ** s for s in range(1, p)},
            **{(-1, s): two_cos(s) * (-1) ** (p - s - 1) for s in range(1, p)},
        },
        {s: q_int(p, s) ** 2 * (-1) ** s for s in range(1, p)},
    )


def normalized_zeta(p: int) -> CycloNum:
    """(-1)^(p-1) 2p [p-1]!^2."""
    return q_fact(p, p - 1) ** 2 * (2 * p * (-1) ** (p - 1))


@lru_cache(maxsize=None)
def fek_to_pbw(p: int) -> dict:
    """(m, n, j) -> PBW expansion of F^m E^n K^j."""
    g = quantum_group(p)
    out = {}
    for m in range(p):
        fm = {(0, m, 0): g.field.one}
        for n in range(p):
            fe = g.multiply_terms(fm, {(n, 0, 0): g.field.one})
            for j in range(2 * p):
                out[(m, n, j)] = g.multiply_terms(fe, {(0, 0, j): g.field.one})
    return out


@lru_cache(maxsize=None)
def _mu_unit(p: int) -> dict:
    """PBW values of the form that is 1 on F^(p-1) E^(p-1) K^(p+1) and 0 on other F-E-K monomials."""
    g = quantum_group(p)
    fld = g.field
    vectors = {x: {} for x in g.basis()}
    for f, expansion in fek_to_pbw(p).items():
        for x, c in expansion.items():
            vectors[x][f] = c
    target = {(p - 1, p - 1, (p + 1) % (2 * p)): fld.one}
    # The F-E-K monomials form a basis, so the values on the PBW basis are unique.
    return solve(fld, g.basis(), vectors, target)


def integral_mu(p: int, zeta) -> LinearForm:
    """mu_zeta(F^m E^n K^j) = zeta when m = n = p-1 and j = p+1, and 0 otherwise."""
    zeta = field(p).coerce(zeta)
    return LinearForm(p, {x: v * zeta for x, v in _mu_unit(p).items() if v})


@lru_cache(maxsize=None)
def _integral_form(p: int) -> LinearForm:
    g = quantum_group(p)
    mu = integral_mu(p, normalized_zeta(p))
    piv = (0, 0, (p + 1) % (2 * p))
    out = {}
    for x in g.basis():
        v = mu(AlgebraElement._wrap(p, g.mono_mul(piv, x)))
        if v:
            out[x] = v
    return LinearForm._wrap(p, out)


def integral_form(p: int) -> LinearForm:
    """x -> mu(K^(p+1) x) for the normalized right integral."""
    return _integral_form(p)


def _cointegral_rows(p: int) -> list[dict]:
    g = quantum_group(p)
    one = (0, 0, 0)
    rows = []
    for x in g.basis():
        by_right: dict = {}
        for (left, right), c in g.mono_coproduct(x).items():
            _add_into(by_right.setdefault(right, {}), left, c)
        _add_into(by_right.setdefault(one, {}), x, -g.field.one)
        rows.extend(r for r in by_right.values() if r)
    return rows


@lru_cache(maxsize=None)
def _cointegral_space(p: int) -> tuple:
    g = quantum_group(p)
    elim = SparseEliminator(g.field, g.basis())
    elim.add_rows(_cointegral_rows(p))
    return tuple(elim.nullspace())


def cointegral_space(p: int) -> list[LinearForm]:
    """Basis of the forms mu with (mu x Id) Delta(x) = mu(x) 1 for all x."""
    return [LinearForm(p, v) for v in _cointegral_space(p)]


def cointegral_space_dimension(p: int) -> int:
    return len(_cointegral_space(p))


def cointegral_defects(mu: LinearForm, limit: int | None = None) -> list[tuple]:
    """Basis monomials x where (mu x Id) Delta(x) differs from mu(x) 1."""
    p = mu.p
    g = quantum_group(p)
    bad = []
    for x in g.basis():
        acc: dict = {}
        for (left, right), c in g.mono_coproduct(x).items():
            v = mu.values.get(left)
            if v is not None:
                _add_into(acc, right, v * c)
        _add_into(acc, (0, 0, 0), -mu.at(x))
        if acc:
            bad.append((x, acc))
            if limit is not None and len(bad) >= limit:
                break
    return bad
