import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from crseifert.exactq import ExponentMismatch, PiLaurent
from crseifert.invariants import (ROUND_T2, check_cor15, diabatic_expansion,
                                  eta0, eta_dstar, nu, nu_from_eta0,
                                  ouyang_eta, ouyang_polynomial,
                                  zeta_Q_expansion, zeta_deltaH)
from crseifert.seifert import (GeomIntegrals, SeifertData, from_genus,
                               geom_integrals_const, lens_space, sphere)

from conftest import positive_rationals, seifert_datas


def test_eta0_examples():
    assert eta0(sphere()) == Fraction(2, 3)
    assert eta0(lens_space(3, 2)) == Fraction(4, 3)
    assert eta0(SeifertData(-2, 2)) == Fraction(1, 3)


def test_nu_examples():
    assert nu(sphere()) == -1
    assert nu(lens_space(3, 2)) == Fraction(-11, 3)
    assert nu(from_genus(0, -1, [(2, 1, 1)])) == Fraction(-23, 16)


def test_nu_general_path_exact():
    # supplying the constant-curvature base integral must reproduce the
    # closed form: integral of R^2 over the base is -2*pi*chi^2/d
    for data in (sphere(), lens_space(3, 2), lens_space(7, 3)):
        supplied = PiLaurent.pi_power(1, -2 * data.chi_orb**2 / data.degree)
        assert nu(data, supplied) == nu(data)


def test_nu_general_path_float():
    data = sphere()
    supplied = float(-2 * math.pi * data.chi_orb**2 / data.degree)
    assert nu(data, supplied) == pytest.approx(float(nu(data)), abs=1e-12)


def test_nu_general_path_rejects_bare_rational():
    with pytest.raises(ExponentMismatch):
        nu(sphere(), Fraction(4))


def test_nu_from_eta0_examples():
    assert nu_from_eta0(Fraction(2, 3), PiLaurent.pi_power(2, 16)) == -1
    assert nu_from_eta0(Fraction(4, 3),
                        PiLaurent.pi_power(2, Fraction(16, 3))) == Fraction(-11, 3)
    assert nu_from_eta0(Fraction(1), PiLaurent.zero()) == -3


def test_nu_from_eta0_pi_mismatch():
    with pytest.raises(ExponentMismatch):
        nu_from_eta0(Fraction(1), PiLaurent.pi_power(1, 8))


def test_eta_dstar_examples():
    assert str(eta_dstar(sphere())) == "2/3 - 1/32*pi^2"
    assert str(eta_dstar(lens_space(3, 2))) == "4/3 - 1/96*pi^2"
    flat = SeifertData(-1, 0)  # formal chi = 0: curvature term vanishes
    assert eta_dstar(flat) == PiLaurent.from_rational(eta0(flat))


def test_zeta_deltaH_examples():
    assert zeta_deltaH(PiLaurent.pi_power(2, 16)) == \
        PiLaurent.pi_power(2, Fraction(1, 32))
    assert zeta_deltaH(PiLaurent.zero()).is_zero()
    assert zeta_deltaH(PiLaurent.pi_power(2, Fraction(16, 3))) == \
        PiLaurent.pi_power(2, Fraction(1, 96))


def test_ouyang_round_sphere_is_zero():
    assert ouyang_eta(sphere(), ROUND_T2) == 0


def test_ouyang_lens_round_value():
    # at the round parameter the lens value collapses to 1 - 1/p + 4*sums
    from crseifert.dedekind import dedekind_rademacher
    for p, q in ((3, 2), (5, 2), (7, 3), (11, 5)):
        data = lens_space(p, q)
        sums = sum(dedekind_rademacher(c.alpha, c.rho, c.beta)
                   for c in data.cone_points)
        assert ouyang_eta(data, ROUND_T2) == 1 - Fraction(1, p) + 4 * sums


@given(seifert_datas())
def test_ouyang_constant_term_is_eta0(data):
    poly = ouyang_polynomial(data)
    assert poly.c0 == eta0(data)
    assert poly(0) == poly.c0
    # evaluation matches the polynomial: three points pin the quadratic
    for t2 in (1, 2, Fraction(1, 2)):
        assert ouyang_eta(data, t2) == \
            poly.c0 + poly.c1 * t2 + poly.c2 * Fraction(t2)**2


def test_ouyang_rejects_nonpositive_scale():
    with pytest.raises(ValueError):
        ouyang_eta(sphere(), 0)


def test_diabatic_examples():
    exp = diabatic_expansion(sphere())
    assert exp.coefficient(-2) == PiLaurent.from_rational(Fraction(1, 6))
    assert exp.coefficient(-1) == PiLaurent.from_rational(Fraction(-2, 3))
    assert exp.coefficient(0) == PiLaurent.from_rational(Fraction(2, 3))
    assert exp.coefficient(1).is_zero()
    assert exp.coefficient(2).is_zero()


@given(seifert_datas())
def test_diabatic_structure(data):
    exp = diabatic_expansion(data)
    assert all(i <= 0 for i in exp.exponents())
    # leading coefficient is proportional to the volume: (-d/6) * 24*pi^2 = vol
    vol = geom_integrals_const(data).vol
    assert exp.coefficient(-2) * PiLaurent.pi_power(2, 24) == vol
    assert exp.coefficient(0).rational_value() == eta0(data)


@given(seifert_datas())
def test_zeta_q_expansion_torsion_free(data):
    exp = zeta_Q_expansion(geom_integrals_const(data))
    assert exp.coefficient(0).is_zero()
    assert exp.coefficient(-2) == \
        PiLaurent.from_rational(-data.degree / 12)


def test_zeta_q_expansion_examples():
    g = geom_integrals_const(sphere())
    exp = zeta_Q_expansion(g)
    assert exp.coefficient(-2) == PiLaurent.from_rational(Fraction(1, 12))
    # supplied torsion integral of 24*pi^2 gives doubled constant term 1
    with_torsion = GeomIntegrals(vol=g.vol, int_R=g.int_R, int_R2=g.int_R2,
                                 int_tau2=PiLaurent.pi_power(2, 24))
    doubled = 2 * zeta_Q_expansion(with_torsion).coefficient(0)
    assert doubled == PiLaurent.from_rational(1)


@given(seifert_datas())
@settings(max_examples=60)
def test_nu_route_equality(data):
    g = geom_integrals_const(data)
    assert nu(data) == nu_from_eta0(eta0(data), g.int_R2)


@given(seifert_datas())
@settings(max_examples=60)
def test_eta0_splits_into_dstar_and_zeta(data):
    g = geom_integrals_const(data)
    assert PiLaurent.from_rational(eta0(data)) == \
        eta_dstar(data) + zeta_deltaH(g.int_R2)


@given(seifert_datas())
@settings(max_examples=60)
def test_check_cor15(data):
    assert check_cor15(data)


@given(positive_rationals(max_abs=20))
def test_webster_scaling_consistency(t2):
    # eta of the rescaled metric is a polynomial identity; exercising it at
    # arbitrary positive scales must keep exactness
    value = ouyang_eta(lens_space(5, 3), t2)
    assert isinstance(value, Fraction)
