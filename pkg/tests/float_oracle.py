"""Floating-point reference implementation used to cross-check exact results.

Everything here is computed with complex doubles at q = exp(i pi / p),
directly from the module action tables and the closed-form coproduct.  It
shares no code with the exact engine.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np


def qc(p: int) -> complex:
    return cmath.exp(1j * math.pi / p)


def qint(p: int, n: int) -> complex:
    q = qc(p)
    return (q**n - q ** (-n)) / (q - 1 / q)


def qfact(p: int, n: int) -> complex:
    out = 1 + 0j
    for k in range(1, n + 1):
        out *= qint(p, k)
    return out


def qbinom(p: int, a: int, b: int) -> complex:
    return qfact(p, a) / (qfact(p, b) * qfact(p, a - b))


def casimir_value(p: int, j: int) -> complex:
    q = qc(p)
    return (q**j + q ** (-j)) / (q - 1 / q) ** 2


def close(a: complex, b: complex, rel: float = 1e-9) -> bool:
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) <= rel * scale


@lru_cache(maxsize=None)
def simple(p: int, a: int, s: int):
    q = qc(p)
    E = np.zeros((s, s), complex)
    F = np.zeros((s, s), complex)
    K = np.zeros((s, s), complex)
    for i in range(s):
        K[i, i] = a * q ** (s - 1 - 2 * i)
        if i >= 1:
            E[i - 1, i] = a * qint(p, i) * qint(p, s - i)
        if i + 1 < s:
            F[i + 1, i] = 1
    return E, F, K


@lru_cache(maxsize=None)
def projective(p: int, a: int, s: int):
    q = qc(p)
    t = p - s
    n = 2 * p
    E = np.zeros((n, n), complex)
    F = np.zeros((n, n), complex)
    K = np.zeros((n, n), complex)
    b = lambda i: i
    x = lambda j: s + j
    y = lambda k: s + t + k
    al = lambda l: s + 2 * t + l
    for i in range(s):
        K[b(i), b(i)] = a * q ** (s - 1 - 2 * i)
        K[al(i), al(i)] = a * q ** (s - 1 - 2 * i)
        if i >= 1:
            E[b(i - 1), b(i)] = a * qint(p, i) * qint(p, s - i)
            E[al(i - 1), b(i)] = 1
            E[al(i - 1), al(i)] = a * qint(p, i) * qint(p, s - i)
        if i + 1 < s:
            F[b(i + 1), b(i)] = 1
            F[al(i + 1), al(i)] = 1
    E[x(t - 1), b(0)] = 1
    F[y(0), b(s - 1)] = 1
    for j in range(t):
        K[x(j), x(j)] = -a * q ** (t - 1 - 2 * j)
        K[y(j), y(j)] = -a * q ** (t - 1 - 2 * j)
        if j >= 1:
            E[x(j - 1), x(j)] = -a * qint(p, j) * qint(p, t - j)
            E[y(j - 1), y(j)] = -a * qint(p, j) * qint(p, t - j)
        if j + 1 < t:
            F[x(j + 1), x(j)] = 1
            F[y(j + 1), y(j)] = 1
    F[al(0), x(t - 1)] = 1
    E[al(s - 1), y(0)] = 1
    return E, F, K


def basis(p: int):
    return [(m, n, l) for m in range(p) for n in range(p) for l in range(2 * p)]


def mono_matrix(mats, mono):
    E, F, K = mats
    m, n, l = mono
    mp = np.linalg.matrix_power
    return mp(E, m) @ mp(F, n) @ mp(K, l)


@lru_cache(maxsize=None)
def chi(p: int, a: int, s: int) -> dict:
    mats = simple(p, a, s)
    return {mono: complex(np.trace(mono_matrix(mats, mono))) for mono in basis(p)}


@lru_cache(maxsize=None)
def G(p: int, s: int) -> dict:
    out = {}
    mp, mm = projective(p, 1, s), projective(p, -1, p - s)
    for mono in basis(p):
        acc = 0j
        for mats, size in ((mp, s), (mm, p - s)):
            M = mono_matrix(mats, mono)
            lo = 2 * p - size
            acc += np.trace(M[lo:, :size])
        out[mono] = complex(acc)
    return out


def form(p: int, label: str) -> dict:
    parts = label.split(":")
    if parts[0] == "chi":
        return chi(p, 1 if parts[1] == "+" else -1, int(parts[2]))
    return G(p, int(parts[1]))


@lru_cache(maxsize=None)
def coproduct(p: int, mono) -> tuple:
    q = qc(p)
    m, n, l = mono
    out = []
    for i in range(m + 1):
        for j in range(n + 1):
            c = q ** (i * (m - i) + j * (n - j) - 2 * (m - i) * (n - j)) * qbinom(p, m, i) * qbinom(p, n, j)
            left = (m - i, j, (l + j - n) % (2 * p))
            right = (i, n - j, (l + m - i) % (2 * p))
            out.append((left, right, c))
    return tuple(out)


def product(p: int, f: dict, g: dict) -> dict:
    return {mono: sum(f[a] * g[b] * c for a, b, c in coproduct(p, mono)) for mono in basis(p)}


def combine(*pairs) -> dict:
    """sum of c * form over (c, form) pairs."""
    out: dict = {}
    for c, f in pairs:
        for k, v in f.items():
            out[k] = out.get(k, 0) + c * v
    return out


def forms_close(exact_values: dict, approx: dict, p: int, rel: float = 1e-9) -> bool:
    """Compare an exact form (mono -> CycloNum) with a float form on every monomial."""
    scale = max([abs(v) for v in approx.values()] + [1.0])
    for mono in basis(p):
        ex = exact_values.get(mono)
        got = ex.to_complex() if ex is not None else 0j
        if abs(got - approx.get(mono, 0)) > rel * scale:
            return False
    return True
