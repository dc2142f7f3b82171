from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import float_oracle as fo
from uqsl2.algebra import AlgebraElement, generators, monomial
from uqsl2.checks import suite_slf, verify_ideal_rules, verify_gta_product_rules
from uqsl2.cyclotomic import field, q_int
from uqsl2.errors import DomainError, RangeError
from uqsl2.slf import (
    GTACoordinates,
    LinearForm,
    coordinate_form,
    counit_form,
    decompose_gta,
    gta_basis,
    gta_chi,
    gta_form,
    gta_G,
    gta_labels,
    is_symmetric,
    product,
    reconstruct,
    slf_dimension,
    symmetry_defects,
)

PS = [2, 3, 4, 5]


@pytest.mark.parametrize("p", PS)
def test_dimension(p):
    assert slf_dimension(p) == 3 * p - 1
    assert len(gta_labels(p)) == 3 * p - 1


def test_labels_order():
    assert gta_labels(3) == ["chi:+:1", "chi:+:2", "chi:+:3", "chi:-:1", "chi:-:2", "chi:-:3", "G:1", "G:2"]
    with pytest.raises(RangeError):
        gta_form(3, "G:3")
    with pytest.raises(DomainError):
        gta_form(3, "psi:1")


def test_linear_form_arithmetic():
    p = 3
    f = coordinate_form(p, (0, 0, 1))
    g = counit_form(p)
    x = monomial(p, 0, 0, 1).scale(5) + AlgebraElement.one(p)
    assert f(x) == 5 and g(x) == 6
    assert (f + g)(x) == 11 and (f - g)(x) == -1
    assert f.scale(Fraction(1, 5))(x) == 1
    assert (f * 2)(x) == 10
    assert LinearForm(p) == LinearForm(p, {(0, 0, 0): 0})
    assert not LinearForm(p)


def test_symmetry_detection():
    p = 3
    assert is_symmetric(counit_form(p))
    bad = coordinate_form(p, (1, 0, 0))
    assert not is_symmetric(bad)
    assert symmetry_defects(bad, limit=1)
    with pytest.raises(DomainError):
        decompose_gta(bad)


@pytest.mark.parametrize("p", PS)
def test_gta_forms_symmetric_and_match_oracle(p):
    for lab, f in gta_basis(p).items():
        assert is_symmetric(f), lab
        assert fo.forms_close(f.values, fo.form(p, lab), p), lab


@pytest.mark.parametrize("p", PS)
def test_chi_plus_1_is_counit(p):
    assert gta_chi(p, 1, 1) == counit_form(p)


def test_chi_values():
    p = 4
    fld = field(p)
    E, F = generators(p)["E"], generators(p)["F"]
    assert gta_chi(p, 1, 2)(E * F) == 1
    assert gta_chi(p, -1, 3)(AlgebraElement.one(p)) == 3
    assert gta_chi(p, 1, p)(monomial(p, 0, 0, 1)) == 0
    assert gta_chi(p, -1, 1)(monomial(p, 0, 0, 1)) == -1
    assert gta_G(p, 1)(F * E) == p
    assert gta_G(p, 2)(AlgebraElement.one(p)) == fld.zero


@pytest.mark.parametrize("p", [2, 3, 4])
def test_decompose_round_trip(p):
    labels = gta_labels(p)
    fld = field(p)
    coeff = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(lambda t: fld.from_rational(t[0]) + fld.q * t[1])

    @given(st.dictionaries(st.sampled_from(labels), coeff, max_size=4))
    def check(coords):
        c = GTACoordinates.from_labels(p, coords)
        f = reconstruct(c)
        back = decompose_gta(f)
        assert back.as_labels() == c.as_labels()

    check()


@pytest.mark.parametrize("p", [2, 3])
def test_product_commutative_associative_with_unit(p):
    basis = gta_basis(p)
    eps = counit_form(p)
    labels = list(basis)
    for a in labels:
        assert product(eps, basis[a]) == basis[a]
        for b in labels:
            assert product(basis[a], basis[b]) == product(basis[b], basis[a])
    x, y, z = basis[labels[1]], basis[labels[-1]], basis[labels[p + 1]]
    assert product(product(x, y), z) == product(x, product(y, z))


@pytest.mark.parametrize("p", PS)
def test_product_of_symmetric_is_symmetric(p):
    assert is_symmetric(product(gta_chi(p, 1, 2), gta_G(p, 1)))


@pytest.mark.parametrize("p", PS)
def test_gta_product_identities(p):
    checks = verify_gta_product_rules(p) + verify_ideal_rules(p)
    assert checks
    failed = [c.id for c in checks if not c.passed]
    assert not failed


def test_p2_edge_records_value():
    checks = {c.id: c for c in verify_gta_product_rules(2)}
    rec = checks["products.chi2G1.recorded"]
    assert rec.passed
    assert q_int(2, 2) == 0
    assert all(c == "0/1" for c in rec.witness["q_int_2"])


@pytest.mark.parametrize("p", [3, 4, 5])
def test_chi2_g_against_float_oracle(p):
    for s in range(1, p):
        exact = product(gta_chi(p, 1, s), gta_G(p, 1)).scale(q_int(p, s).inverse())
        approx = fo.product(p, fo.chi(p, 1, s), fo.G(p, 1))
        approx = {k: v / fo.qint(p, s) for k, v in approx.items()}
        assert fo.forms_close(exact.values, approx, p)
        assert fo.forms_close(exact.values, fo.G(p, s), p)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_slf_suite_passes(p):
    rep = suite_slf(p)
    assert rep.passed, [c.id for c in rep.failures()]
