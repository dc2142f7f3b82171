"""Simple and projective modules, their right duals, tensor products and Hom spaces."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import AlgebraElement, quantum_group
from .cyclotomic import CycloNum, field, q_int
from .errors import DomainError, ParameterError, RangeError
from .linalg import (
    Matrix,
    SparseEliminator,
    identity,
    is_zero,
    kron,
    matadd,
    matmul,
    matscale,
    solve,
    trace,
    zeros,
)

__all__ = [
    "ModuleSpec",
    "Representation",
    "build_rep",
    "rep_element",
    "dual_right_rep",
    "right_rep_element",
    "tensor_rep",
    "character_values",
    "hom_space",
    "morphism_from_generator",
    "parse_module",
    "all_module_specs",
    "block",
    "relations_hold",
]


@dataclass(frozen=True, order=True)
class ModuleSpec:
    """``X(alpha, s)`` (simple, dim s) or ``P(alpha, s)`` (projective cover, dim 2p)."""

    kind: str  # "X" or "P"
    sign: int  # +1 or -1
    s: int
    p: int

    def __post_init__(self):
        if self.kind not in ("X", "P"):
            raise RangeError(f"module kind must be X or P, got {self.kind!r}")
        if self.sign not in (1, -1):
            raise RangeError(f"module sign must be +1 or -1, got {self.sign!r}")
        if self.p < 2:
            raise RangeError(f"p must be >= 2, got {self.p}")
        hi = self.p if self.kind == "X" else self.p - 1
        if not 1 <= self.s <= hi:
            raise RangeError(f"{self.kind}-module index s must lie in [1, {hi}], got {self.s}")

    @property
    def dim(self) -> int:
        return self.s if self.kind == "X" else 2 * self.p

    def labels(self) -> list[str]:
        if self.kind == "X":
            return [f"v{i}" for i in range(self.s)]
        t = self.p - self.s
        return (
            [f"b{i}" for i in range(self.s)]
            + [f"x{j}" for j in range(t)]
            + [f"y{k}" for k in range(t)]
            + [f"a{l}" for l in range(self.s)]
        )

    def index(self, label: str) -> int:
        return self.labels().index(label)

    def __str__(self) -> str:
        return f"{self.kind}:{'+' if self.sign > 0 else '-'}:{self.s}"


_SPEC_RE = re.compile(r"^\s*([XP])\s*:\s*([+-])\s*:\s*(\d+)\s*$")


def parse_module(text: str, p: int) -> ModuleSpec:
    m = _SPEC_RE.match(text)
    if not m:
        raise DomainError(f"bad module spec {text!r}; expected e.g. 'X:+:2' or 'P:-:1'")
    return ModuleSpec(m.group(1), 1 if m.group(2) == "+" else -1, int(m.group(3)), p)


def all_module_specs(p: int) -> list[ModuleSpec]:
    out = [ModuleSpec("X", a, s, p) for a in (1, -1) for s in range(1, p + 1)]
    out += [ModuleSpec("P", a, s, p) for a in (1, -1) for s in range(1, p)]
    return out


@dataclass(eq=False)
class Representation:
    """Generator matrices of a (left or right) module.

    ``side == "left"``: column j of ``mat(g)`` is g applied to basis vector j.
    ``side == "right"``: row i of ``mat(g)`` is basis vector i acted on by g.
    """

    p: int
    name: str
    matE: Matrix
    matF: Matrix
    matK: Matrix
    labels: list[str]
    spec: ModuleSpec | None = None
    side: str = "left"
    _cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.matK)

    def mono(self, mono) -> Matrix:
        """Matrix of the PBW monomial E^m F^n K^l (memoised)."""
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        m, n, l = mono
        if l:
            kl = self._cache.get(("K", l))
            if kl is None:
                kl = identity(field(self.p), self.dim)
                for _ in range(l):
                    kl = matmul(kl, self.matK)
                self._cache[("K", l)] = kl
        ef = self._cache.get(("EF", m, n))
        if ef is None:
            ef = identity(field(self.p), self.dim)
            for _ in range(m):
                ef = matmul(ef, self.matE)
            for _ in range(n):
                ef = matmul(ef, self.matF)
            self._cache[("EF", m, n)] = ef
        out = matmul(ef, kl) if l else ef
        self._cache[mono] = out
        return out


def _q(p: int, k: int) -> CycloNum:
    return field(p).q_pow(k)


def build_rep(spec: ModuleSpec) -> Representation:
    return _build_rep(spec)


@lru_cache(maxsize=None)
def _build_rep(spec: ModuleSpec) -> Representation:
    p, a, s = spec.p, spec.sign, spec.s
    fld = field(p)
    n = spec.dim
    E, F, K = zeros(fld, n, n), zeros(fld, n, n), zeros(fld, n, n)
    if spec.kind == "X":
        for i in range(s):
            K[i][i] = _q(p, s - 1 - 2 * i) * a
            if i > 0:
                E[i - 1][i] = q_int(p, i) * q_int(p, s - i) * a
            if i + 1 < s:
                F[i + 1][i] = fld.one
    else:
        t = p - s
        b = lambda i: i
        x = lambda j: s + j
        y = lambda k: s + t + k
        al = lambda l: s + 2 * t + l
        for i in range(s):
            K[b(i)][b(i)] = _q(p, s - 1 - 2 * i) * a
            K[al(i)][al(i)] = _q(p, s - 1 - 2 * i) * a
            if i > 0:
                E[b(i - 1)][b(i)] = q_int(p, i) * q_int(p, s - i) * a
                E[al(i - 1)][b(i)] = fld.one
                E[al(i - 1)][al(i)] = q_int(p, i) * q_int(p, s - i) * a
            if i + 1 < s:
                F[b(i + 1)][b(i)] = fld.one
                F[al(i + 1)][al(i)] = fld.one
        E[x(t - 1)][b(0)] = fld.one
        F[y(0)][b(s - 1)] = fld.one
        for j in range(t):
            K[x(j)][x(j)] = -_q(p, t - 1 - 2 * j) * a
            K[y(j)][y(j)] = -_q(p, t - 1 - 2 * j) * a
            if j > 0:
                E[x(j - 1)][x(j)] = -q_int(p, j) * q_int(p, t - j) * a
                E[y(j - 1)][y(j)] = -q_int(p, j) * q_int(p, t - j) * a
            if j + 1 < t:
                F[x(j + 1)][x(j)] = fld.one
                F[y(j + 1)][y(j)] = fld.one
        F[al(0)][x(t - 1)] = fld.one
        E[al(s - 1)][y(0)] = fld.one
    return Representation(p, str(spec), E, F, K, spec.labels(), spec=spec)


def rep_element(rep: Representation, x: AlgebraElement) -> Matrix:
    """Matrix of an algebra element on a module (left: E^m F^n K^l; right: same product order)."""
    if x.p != rep.p:
        raise ParameterError(f"mismatched p: {rep.p} vs {x.p}")
    fld = field(rep.p)
    out = zeros(fld, rep.dim, rep.dim)
    for mono, c in x.terms.items():
        out = matadd(out, rep.mono(mono), c)
    return out


right_rep_element = rep_element


def _dual_permutation(spec: ModuleSpec) -> list[int]:
    """pi with bar-basis vector i equal to the dual vector of left basis vector pi(i)."""
    s, p = spec.s, spec.p
    if spec.kind == "X":
        return [s - 1 - i for i in range(s)]
    t = p - s
    perm = [s + 2 * t + (s - 1 - i) for i in range(s)]  # b-bar_i = a^{s-1-i}
    perm += [s + t + (t - 1 - j) for j in range(t)]  # x-bar_j = y^{t-1-j}
    perm += [s + (t - 1 - k) for k in range(t)]  # y-bar_k = x^{t-1-k}
    perm += [s - 1 - l for l in range(s)]  # a-bar_l = b^{s-1-l}
    return perm


@lru_cache(maxsize=None)
def dual_right_rep(spec: ModuleSpec) -> Representation:
    """The right module R*(M) = M^* with (phi . a)(v) = phi(a v), in the bar basis."""
    left = build_rep(spec)
    perm = _dual_permutation(spec)

    def conj(mat: Matrix) -> Matrix:
        return [[mat[perm[i]][perm[j]] for j in range(len(perm))] for i in range(len(perm))]

    labels = [f"{lab[0]}bar{lab[1:]}" for lab in spec.labels()]
    return Representation(
        spec.p, f"R*({spec})", conj(left.matE), conj(left.matF), conj(left.matK),
        labels, spec=spec, side="right",
    )


def tensor_rep(a: Representation, b: Representation) -> Representation:
    """Generator matrices on A (x) B obtained from the coproduct of E, F, K."""
    if a.p != b.p:
        raise ParameterError(f"mismatched p: {a.p} vs {b.p}")
    p = a.p
    g = quantum_group(p)
    mats = {}
    for name, mono in (("E", (1, 0, 0)), ("F", (0, 1, 0)), ("K", (0, 0, 1))):
        acc = zeros(field(p), a.dim * b.dim, a.dim * b.dim)
        for (m1, m2), c in g.mono_coproduct(mono).items():
            acc = matadd(acc, kron(a.mono(m1), b.mono(m2)), c)
        mats[name] = acc
    labels = [f"{u}(x){v}" for u in a.labels for v in b.labels]
    return Representation(p, f"{a.name}*{b.name}", mats["E"], mats["F"], mats["K"], labels)


def character_values(rep: Representation) -> dict:
    """Trace of every PBW monomial on the module (the character as a table)."""
    out = {}
    for mono in quantum_group(rep.p).basis():
        t = trace(rep.mono(mono))
        if t:
            out[mono] = t
    return out


def _intertwiner_rows(ra: Representation, rb: Representation) -> list[dict]:
    """Equations f * rho_A(g) - rho_B(g) * f = 0, unknowns f[i][j] keyed (i, j)."""
    rows = []
    da, db = ra.dim, rb.dim
    for name in ("matE", "matF", "matK"):
        ga, gb = getattr(ra, name), getattr(rb, name)
        for i in range(db):
            for j in range(da):
                row: dict = {}
                for k in range(da):
                    if ga[k][j]:
                        row[(i, k)] = row.get((i, k), 0) + ga[k][j]
                for k in range(db):
                    if gb[i][k]:
                        row[(k, j)] = row.get((k, j), 0) - gb[i][k]
                rows.append({key: field(ra.p).coerce(v) for key, v in row.items() if v})
    return rows


def _as_matrix(p: int, vec: dict, rows: int, cols: int) -> Matrix:
    out = zeros(field(p), rows, cols)
    for (i, j), v in vec.items():
        out[i][j] = v
    return out


def hom_space(a: ModuleSpec, b: ModuleSpec) -> list[Matrix]:
    """A basis of Hom(A, B) as matrices of shape dim(B) x dim(A)."""
    ra, rb = build_rep(a), build_rep(b)
    unknowns = [(i, j) for i in range(rb.dim) for j in range(ra.dim)]
    elim = SparseEliminator(field(a.p), unknowns)
    elim.add_rows(_intertwiner_rows(ra, rb))
    return [_as_matrix(a.p, v, rb.dim, ra.dim) for v in elim.nullspace()]


def morphism_from_generator(a: ModuleSpec, b: ModuleSpec, target: str) -> Matrix:
    """The unique morphism A -> B sending the first basis vector of A to basis vector ``target`` of B.

    The first basis vector (v_0 or b_0) generates A, so the image determines the map.
    """
    basis = hom_space(a, b)
    db = b.dim
    t = b.index(target)
    vectors = {}
    for k, f in enumerate(basis):
        vectors[k] = {i: f[i][0] for i in range(db) if f[i][0]}
    fld = field(a.p)
    coeffs = solve(fld, list(range(len(basis))), vectors, {t: fld.one})
    out = zeros(fld, db, a.dim)
    for k, f in enumerate(basis):
        out = matadd(out, f, coeffs[k])
    return out


def block(mat: Matrix, spec: ModuleSpec, rows: str, cols: str) -> Matrix:
    """Sub-block of a projective-module matrix, e.g. rows 'a', cols 'b' is H."""
    s, t = spec.s, spec.p - spec.s
    ranges = {"b": range(0, s), "x": range(s, s + t), "y": range(s + t, s + 2 * t),
              "a": range(s + 2 * t, 2 * s + 2 * t)}
    return [[mat[i][j] for j in ranges[cols]] for i in ranges[rows]]


def relations_hold(rep: Representation) -> bool:
    """Check the defining relations on the generator matrices."""
    p = rep.p
    fld = field(p)
    n = rep.dim
    kinv = rep.mono((0, 0, 2 * p - 1))
    lhs = matadd(matmul(rep.matE, rep.matF), matmul(rep.matF, rep.matE), -1)
    rhs = matscale(matadd(rep.matK, kinv, -1), (fld.q - fld.q_pow(-1)).inverse())
    if lhs != rhs:
        return False
    q2 = fld.q_pow(2)
    ke, ek = matmul(rep.matK, rep.matE), matmul(rep.matE, rep.matK)
    kf, fk = matmul(rep.matK, rep.matF), matmul(rep.matF, rep.matK)
    if ke != matscale(ek, q2) or kf != matscale(fk, fld.q_pow(-2)):
        return False
    ep, fp = identity(fld, n), identity(fld, n)
    for _ in range(p):
        ep, fp = matmul(ep, rep.matE), matmul(fp, rep.matF)
    k2p = identity(fld, n)
    for _ in range(2 * p):
        k2p = matmul(k2p, rep.matK)
    return is_zero(ep) and is_zero(fp) and k2p == identity(fld, n)

