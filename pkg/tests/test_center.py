from __future__ import annotations

import pytest

import float_oracle as fo
from uqsl2.algebra import AlgebraElement, generators, monomial, quantum_group
from uqsl2.center import (
    alpha_s,
    alpha_s_unsimplified,
    block_dimension,
    canonical_central_elements,
    casimir,
    casimir_eigenvalue,
    center_basis,
    leading_coefficients_check,
    phi,
)
from uqsl2.cyclotomic import field
from uqsl2.errors import RangeError
from uqsl2.linalg import is_zero
from uqsl2.modules import ModuleSpec, all_module_specs, build_rep, rep_element

PS = [2, 3, 4, 5]


def commutes_with_generators(x):
    return all(x * g == g * x for g in generators(x.p).values())


@pytest.mark.parametrize("p", PS)
def test_center_dimension_and_centrality(p):
    basis = center_basis(p)
    assert len(basis) == 3 * p - 1
    assert all(commutes_with_generators(z) for z in basis)


@pytest.mark.parametrize("p", PS)
def test_canonical_elements_central(p):
    ce = canonical_central_elements(p)
    assert len(ce.e) == p + 1 and len(ce.w_plus) == p - 1 == len(ce.w_minus)
    for _, x in ce.all():
        assert commutes_with_generators(x)


@pytest.mark.parametrize("p", PS)
def test_product_table(p):
    ce = canonical_central_elements(p)
    zero = AlgebraElement.zero(p)
    for i, ei in enumerate(ce.e):
        for j, ej in enumerate(ce.e):
            assert ei * ej == (ei if i == j else zero)
        for s in range(1, p):
            for w in (ce.w_plus[s], ce.w_minus[s]):
                assert ei * w == (w if i == s else zero)
    ws = list(ce.w_plus.values()) + list(ce.w_minus.values())
    for a in ws:
        for b in ws:
            assert a * b == zero


@pytest.mark.parametrize("p", PS)
def test_idempotents_sum_to_one(p):
    ce = canonical_central_elements(p)
    acc = AlgebraElement.zero(p)
    for x in ce.e:
        acc = acc + x
    assert acc == AlgebraElement.one(p)


@pytest.mark.parametrize("p", PS)
def test_casimir(p):
    c = casimir(p)
    assert commutes_with_generators(c)
    ce = canonical_central_elements(p)
    rhs = AlgebraElement.zero(p)
    for j, e in enumerate(ce.e):
        rhs = rhs + e.scale(casimir_eigenvalue(p, j))
    for s in range(1, p):
        rhs = rhs + ce.w_plus[s] + ce.w_minus[s]
    assert c == rhs


@pytest.mark.parametrize("p", PS)
def test_casimir_acts_by_scalar_on_simples(p):
    c = casimir(p)
    for a in (1, -1):
        for s in range(1, p + 1):
            m = rep_element(build_rep(ModuleSpec("X", a, s, p)), c)
            want = casimir_eigenvalue(p, s) * a
            assert all(m[i][j] == (want if i == j else 0) for i in range(s) for j in range(s))


def test_casimir_eigenvalue_float():
    for p in PS:
        for j in range(p + 1):
            assert fo.close(casimir_eigenvalue(p, j).to_complex(), fo.casimir_value(p, j))


@pytest.mark.parametrize("p", [2, 3, 4])
def test_block_dimensions(p):
    assert block_dimension(p, 0) == p**2
    assert block_dimension(p, p) == p**2
    for s in range(1, p):
        assert block_dimension(p, s) == 2 * p**2
    assert sum(block_dimension(p, s) for s in range(p + 1)) == 2 * p**3
    with pytest.raises(RangeError):
        block_dimension(p, p + 1)


@pytest.mark.parametrize("p", PS)
def test_leading_coefficients(p):
    report = leading_coefficients_check(p)
    assert len(report) == 3 * p - 1
    assert all(r["pass"] for r in report), [r for r in report if not r["pass"]]


@pytest.mark.parametrize("p", PS)
def test_alpha_forms_agree(p):
    for s in range(1, p):
        assert alpha_s(p, s) == alpha_s_unsimplified(p, s)


@pytest.mark.parametrize("p", PS)
def test_phi_projectors(p):
    fld = field(p)
    total = AlgebraElement.zero(p)
    for a in (1, -1):
        for n in range(p):
            x = phi(p, a, n)
            assert x * x == x
            total = total + x
    assert total == AlgebraElement.one(p)
    k = generators(p)["K"]
    for a in (1, -1):
        for n in range(p):
            x = phi(p, a, n)
            assert k * x == x.scale(fld.q_pow(n) * a)


def test_phi_range_errors():
    with pytest.raises(RangeError):
        phi(3, 2, 0)
    with pytest.raises(RangeError):
        phi(3, 1, 3)


@pytest.mark.parametrize("p", PS)
def test_idempotents_act_on_modules(p):
    ce = canonical_central_elements(p)
    for spec in all_module_specs(p):
        r = build_rep(spec)
        blk = (spec.s if spec.sign > 0 else p - spec.s) if spec.s < p else (p if spec.sign > 0 else 0)
        for j, e in enumerate(ce.e):
            m = rep_element(r, e)
            if j == blk:
                assert all(m[i][k] == (1 if i == k else 0) for i in range(r.dim) for k in range(r.dim))
            else:
                assert is_zero(m)


def test_top_monomial_is_in_block_sum():
    p = 3
    top = monomial(p, p - 1, p - 1, 0)
    acc = AlgebraElement.zero(p)
    for e in canonical_central_elements(p).e:
        acc = acc + e * top
    assert acc == top
    assert len(quantum_group(p).basis()) == 2 * p**3
