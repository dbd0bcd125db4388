import pytest

from qborel.coeffring import Coefficient, LaurentPoly, parse_coefficient
from qborel.drinfeld import (CurrentEngine, DomainViolation, c_r,
                             ell_weight_of_vacuum)
from qborel.latticemod import Element, get_module
from qborel.rootdata import AffineType, o_sign


def test_c_r_values():
    # type A: (-1)^{n+1} o(r) (q - q^{-1}) q^{-(n+1)}
    t = AffineType("A", 3, 2)
    qmq = LaurentPoly({1: 1, -1: -1})
    assert c_r(t) == Coefficient.from_laurent(
        qmq * LaurentPoly.q_power(-4, (-1) ** 4 * o_sign(t, 2)))
    # type D: o(r) (q - q^{-1}) q^{-2(n-1)}
    t = AffineType("D", 4, 4)
    assert c_r(t) == Coefficient.from_laurent(
        qmq * LaurentPoly.q_power(-6, o_sign(t, 4)))


def test_ell_weight_A1_verbatim():
    ell = ell_weight_of_vacuum(AffineType("A", 1, 1), 4)
    assert ell.closed_form[1] == "polynomial"
    assert str(ell.psi[1][1]) == "q^-3*a - q^-1*a"
    assert all(c.is_zero() for c in ell.psi[1][2:])


def test_ell_weight_A3_verbatim():
    ell = ell_weight_of_vacuum(AffineType("A", 3, 2), 4)
    assert ell.closed_form == {1: "trivial", 2: "polynomial", 3: "trivial"}
    assert str(ell.psi[2][1]) == "-q^-5*a + q^-3*a"


def test_ell_weight_first_coefficient_is_minus_acr():
    for t in [AffineType("A", 4, 2), AffineType("D", 4, 1),
              AffineType("D", 5, 5), AffineType("D", 6, 5)]:
        ell = ell_weight_of_vacuum(t, 3)
        assert ell.psi[t.r][1] == -(Coefficient.a_power(1) * c_r(t))
        assert ell.closed_form[t.r] == "polynomial"
        for i in ell.psi:
            if i != t.r:
                assert ell.closed_form[i] == "trivial"


def test_x_minus_on_vacuum():
    t = AffineType("A", 3, 2)
    eng = CurrentEngine(t)
    mod = get_module(t)
    out = eng.x_minus_on_vacuum(2, 1)
    key = tuple(1 if p == mod.alpha_r_idx else 0 for p in range(mod.nroots))
    assert set(out.terms) == {key}
    assert out.terms[key] == parse_coefficient("q^-4*a")
    assert eng.x_minus_on_vacuum(2, 2).is_zero()
    assert eng.x_minus_on_vacuum(1, 1).is_zero()


def test_leading_only_domain_guard():
    # family D uses a leading-word operator valid only on the
    # alpha_r-string span; asking for it elsewhere must be an error
    t = AffineType("D", 4, 4)
    eng = CurrentEngine(t)
    mod = get_module(t)
    c = [0] * mod.nroots
    c[mod.theta_idx] = 1
    with pytest.raises(DomainViolation):
        eng.E1(4, Element.basis(tuple(c)))


def test_E_level_requires_positive_k():
    eng = CurrentEngine(AffineType("A", 2, 1))
    with pytest.raises(ValueError):
        eng.E(1, 0, Element.basis(get_module(AffineType("A", 2, 1)).vacuum))
