"""The center of the restricted quantum group and its canonical basis.

The center is computed as the common kernel of the commutator maps with
E, F and K.  The block idempotents e_s and the nilpotents w_s^+/- are then
pinned down inside it by their action on the generating vectors v_0 and b_0
of every simple and projective module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraElement, generators, quantum_group
from .cyclotomic import CycloNum, field, q_fact, q_int
from .errors import ConsistencyError, RangeError
from .linalg import SparseEliminator, solve
from .modules import ModuleSpec, all_module_specs, build_rep

__all__ = [
    "CentralElements",
    "center_basis",
    "canonical_central_elements",
    "phi",
    "casimir",
    "casimir_eigenvalue",
    "block_dimension",
    "leading_coefficients_check",
    "alpha_s",
]


def _commutator_rows(p: int) -> list[dict]:
    g = quantum_group(p)
    rows: dict = {}
    for gen in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        for y in g.basis():
            # coefficient of z in g*y - y*g, indexed by (generator, z)
            for z, c in g.mono_mul(gen, y).items():
                key = (gen, z)
                r = rows.setdefault(key, {})
                r[y] = r[y] + c if y in r else c
            for z, c in g.mono_mul(y, gen).items():
                key = (gen, z)
                r = rows.setdefault(key, {})
                r[y] = r[y] - c if y in r else -c
    return list(rows.values())


@lru_cache(maxsize=None)
def _center_basis(p: int) -> tuple[AlgebraElement, ...]:
    g = quantum_group(p)
    elim = SparseEliminator(g.field, g.basis())
    elim.add_rows(_commutator_rows(p))
    return tuple(AlgebraElement(p, v) for v in elim.nullspace())


def center_basis(p: int) -> list[AlgebraElement]:
    """A basis of the center (dimension 3p - 1)."""
    return list(_center_basis(p))


def _generator_image(spec: ModuleSpec, x: AlgebraElement) -> dict:
    """x applied to the first basis vector (v_0 or b_0) of the module, as a sparse vector."""
    rep = build_rep(spec)
    out: dict = {}
    for mono, c in x.terms.items():
        col = rep.mono(mono)
        for i in range(rep.dim):
            v = col[i][0]
            if v:
                key = (spec, i)
                out[key] = out[key] + v * c if key in out else v * c
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class CentralElements:
    p: int
    e: tuple[AlgebraElement, ...]  # e[0..p]
    w_plus: dict  # s -> w_s^+, 1 <= s <= p-1
    w_minus: dict

    def all(self) -> list[tuple[str, AlgebraElement]]:
        out = [(f"e({s})", x) for s, x in enumerate(self.e)]
        out += [(f"w(+,{s})", x) for s, x in sorted(self.w_plus.items())]
        out += [(f"w(-,{s})", x) for s, x in sorted(self.w_minus.items())]
        return out


def _targets(p: int) -> dict[str, dict]:
    one = field(p).one
    X = lambda a, t: ModuleSpec("X", a, t, p)
    P = lambda a, t: ModuleSpec("P", a, t, p)
    targets: dict[str, dict] = {}
    targets["e0"] = {(X(-1, p), 0): one}
    for s in range(1, p):
        targets[f"e{s}"] = {
            (X(1, s), 0): one,
            (X(-1, p - s), 0): one,
            (P(1, s), 0): one,
            (P(-1, p - s), 0): one,
        }
        targets[f"w+{s}"] = {(P(1, s), P(1, s).index("a0")): one}
        targets[f"w-{s}"] = {(P(-1, p - s), P(-1, p - s).index("a0")): one}
    targets[f"e{p}"] = {(X(1, p), 0): one}
    return targets


@lru_cache(maxsize=None)
def canonical_central_elements(p: int) -> CentralElements:
    """Solve for e_s and w_s^+/- inside the center from their prescribed module actions."""
    basis = _center_basis(p)
    if len(basis) != 3 * p - 1:
        raise ConsistencyError(f"center has dimension {len(basis)}, expected {3 * p - 1}")
    specs = all_module_specs(p)
    signatures = {}
    for k, z in enumerate(basis):
        sig: dict = {}
        for spec in specs:
            sig.update(_generator_image(spec, z))
        signatures[k] = sig
    fld = field(p)
    solved = {}
    for name, target in _targets(p).items():
        coeffs = solve(fld, list(range(len(basis))), signatures, target)
        acc = AlgebraElement.zero(p)
        for k, c in coeffs.items():
            if c:
                acc = acc + basis[k].scale(c)
        solved[name] = acc
    return CentralElements(
        p,
        tuple(solved[f"e{s}"] for s in range(p + 1)),
        {s: solved[f"w+{s}"] for s in range(1, p)},
        {s: solved[f"w-{s}"] for s in range(1, p)},
    )


def phi(p: int, sign: int, n: int) -> AlgebraElement:
    """Weight projector (1/2p) sum_l (sign q^-n)^l K^l."""
    if sign not in (1, -1):
        raise RangeError(f"sign must be +1 or -1, got {sign}")
    if not 0 <= n <= p - 1:
        raise RangeError(f"phi index must lie in [0, {p - 1}], got {n}")
    fld = field(p)
    base = fld.q_pow(-n) * sign
    c = fld.from_rational(1) / (2 * p)
    terms = {}
    cur = fld.one
    for l in range(2 * p):
        terms[(0, 0, l)] = cur * c
        cur = cur * base
    return AlgebraElement(p, terms)


def casimir(p: int) -> AlgebraElement:
    """C = FE + (qK + q^-1 K^-1)/(q - q^-1)^2."""
    g = generators(p)
    fld = field(p)
    scale = ((fld.q - fld.q_pow(-1)) ** 2).inverse()
    return g["F"] * g["E"] + (g["K"].scale(fld.q) + g["Kinv"].scale(fld.q_pow(-1))).scale(scale)


def casimir_eigenvalue(p: int, j: int) -> CycloNum:
    """c_j = (q^j + q^-j)/(q - q^-1)^2."""
    fld = field(p)
    return (fld.q_pow(j) + fld.q_pow(-j)) / (fld.q - fld.q_pow(-1)) ** 2


def block_dimension(p: int, s: int) -> int:
    """Rank of left multiplication by e_s on the whole algebra.

    Left multiplication by a central element with only E^k F^k K^l terms preserves
    the E-degree minus F-degree grading, so the rank is summed over graded pieces.
    """
    if not 0 <= s <= p:
        raise RangeError(f"block index must lie in [0, {p}], got {s}")
    es = canonical_central_elements(p).e[s]
    g = quantum_group(p)
    total = 0
    for d in range(-(p - 1), p):
        cols = [mono for mono in g.basis() if mono[0] - mono[1] == d]
        # rank of the matrix whose columns are e_s * y; eliminate on the transposed rows
        elim = SparseEliminator(g.field, g.basis())
        rows = []
        for y in cols:
            rows.append(g.multiply_terms(es.terms, {y: g.field.one}))
        elim.add_rows(rows)
        total += elim.rank
    return total


def alpha_s(p: int, s: int) -> CycloNum:
    """Simplified leading coefficient factor ((-1)^(p-s-1) / (2p [p-1]!^2)) (q^s + q^-s)."""
    fld = field(p)
    return (fld.q_pow(s) + fld.q_pow(-s)) * (-1) ** (p - s - 1) / (q_fact(p, p - 1) ** 2 * (2 * p))


def alpha_s_unsimplified(p: int, s: int) -> CycloNum:
    """The same factor written with the two reciprocal q-integer sums."""
    one = field(p).one
    acc = field(p).zero
    for l in range(1, s):
        acc = acc + one / (q_int(p, l) * q_int(p, s - l))
    for l in range(1, p - s):
        acc = acc - one / (q_int(p, l) * q_int(p, p - s - l))
    den = q_fact(p, p - s - 1) ** 2 * q_fact(p, s - 1) ** 2 * (2 * p)
    return -acc * (-1) ** (p - s - 1) / den


def expected_top_coefficients(p: int) -> dict[str, dict[int, CycloNum]]:
    """Closed forms for the coefficient of E^(p-1) F^(p-1) K^l in each canonical element.

    For w_s^+/- only the K^0 coefficient has a closed form; it is stored under l = 0.
    """
    fld = field(p)
    norm = fld.one / (q_fact(p, p - 1) ** 2 * (2 * p))
    out: dict[str, dict[int, CycloNum]] = {}

    def fourier(shift: int, l: int) -> CycloNum:
        acc = fld.zero
        for t in range(p):
            acc = acc + fld.q_pow(-(shift - 2 * t - 1) * l)
        return acc

    out["e(0)"] = {l: norm * (-1) ** (p - 1) * fourier(0, l) for l in range(2 * p)}
    for s in range(1, p):
        a = alpha_s(p, s)
        out[f"e({s})"] = {l: a * fourier(s, l) for l in range(2 * p)}
    out[f"e({p})"] = {l: norm * fourier(p, l) for l in range(2 * p)}
    for s in range(1, p):
        base = norm * (-1) ** (p - s - 1) * q_int(p, s) ** 2
        out[f"w(+,{s})"] = {0: base * s}
        out[f"w(-,{s})"] = {0: base * (p - s)}
    return out


def leading_coefficients_check(p: int) -> list[dict]:
    """Compare top-degree coefficients of the solved central elements with the closed forms.

    Returns one record per element: ``{"element", "pass", "mismatches"}`` where each
    mismatch is ``(l, computed, expected)``.
    """
    ce = canonical_central_elements(p)
    expected = expected_top_coefficients(p)
    report = []
    for name, x in ce.all():
        bad = []
        for l, want in expected[name].items():
            got = x.coeff(p - 1, p - 1, l)
            if got != want:
                bad.append((l, got, want))
        report.append({"element": name, "pass": not bad, "mismatches": bad})
    return report


__all__ += ["alpha_s_unsimplified", "expected_top_coefficients"]
