import json
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from crseifert.exactq import DomainError, PiLaurent
from crseifert.seifert import (ConePoint, GcdCondition, InvalidConePoint,
                               NotPseudoconvex, SeifertData, from_genus,
                               from_json_dict, geom_integrals_const,
                               lens_space, sphere, to_json_dict, validate,
                               webster_curvature_const)

from conftest import seifert_datas


def test_from_genus_examples():
    assert from_genus(0, -1).chi_orb == 2
    assert from_genus(2, -1).chi_orb == -2
    data = from_genus(0, Fraction(-1, 3), [(3, 1, 1), (3, 2, 2)])
    assert data.chi_orb == Fraction(2, 3)


def test_from_genus_rejects_bad_input():
    with pytest.raises(NotPseudoconvex):
        from_genus(0, 1)
    with pytest.raises(NotPseudoconvex):
        from_genus(0, 0)
    with pytest.raises(InvalidConePoint):
        from_genus(0, -1, [(4, 2, 1)])
    with pytest.raises(InvalidConePoint):
        from_genus(0, -1, [(1, 1, 1)])
    with pytest.raises(InvalidConePoint):
        from_genus(0, -1, [(3, 1, 3)])


def test_lens_space_examples():
    data = lens_space(3, 2)
    assert data.degree == Fraction(-1, 3)
    assert data.chi_orb == Fraction(2, 3)
    assert [(c.alpha, c.rho, c.beta) for c in data.cone_points] == \
        [(3, 1, 1), (3, 2, 2)]

    data = lens_space(5, 2)
    assert data.degree == Fraction(-1, 5)
    assert data.chi_orb == Fraction(2, 5)
    assert [(c.alpha, c.rho, c.beta) for c in data.cone_points] == \
        [(5, 1, 1), (5, 4, 2)]


def test_lens_space_gcd_condition():
    with pytest.raises(GcdCondition):
        lens_space(2, 1)  # q - 1 = 0 shares a factor with p
    with pytest.raises(GcdCondition):
        lens_space(4, 3)  # gcd(q - 1, p) = 2
    with pytest.raises(GcdCondition):
        lens_space(4, 2)  # gcd(p, q) = 2


@given(st.integers(2, 120), st.integers(1, 119))
def test_lens_space_invariants(p, q):
    import math
    if q >= p or math.gcd(p, q) != 1 or math.gcd(q - 1, p) != 1:
        return
    data = lens_space(p, q)
    assert validate(data) == []
    # chi consistency with genus 0 and two order-p cone points
    assert data.chi_orb == 2 - 2 * (1 - Fraction(1, p))
    assert all(c.alpha == p for c in data.cone_points)


def test_webster_curvature_examples():
    assert webster_curvature_const(sphere()) == 2
    assert webster_curvature_const(lens_space(3, 2)) == 2
    assert webster_curvature_const(SeifertData(-2, 2)) == 1


def test_geom_integrals_sphere():
    g = geom_integrals_const(sphere())
    assert g.vol == PiLaurent.pi_power(2, 4)
    assert g.int_R2 == PiLaurent.pi_power(2, 16)
    assert g.int_tau2.is_zero()


def test_geom_integrals_lens():
    g = geom_integrals_const(lens_space(3, 2))
    assert g.vol == PiLaurent.pi_power(2, Fraction(4, 3))
    assert g.int_R2 == PiLaurent.pi_power(2, Fraction(16, 3))


@given(seifert_datas())
def test_geom_integrals_bridge_identity(data):
    # int_R2 / (16 pi^2) recovers -chi^2/(4d) exactly
    g = geom_integrals_const(data)
    assert (g.int_R2.shift(-2) / 16).rational_value() == \
        -data.chi_orb**2 / (4 * data.degree)
    assert g.int_tau2.is_zero()
    assert g.int_R == webster_curvature_const(data) * g.vol


def test_validate_reports():
    assert validate(sphere()) == []
    bad_degree = SeifertData(1, 2)
    assert any("NotPseudoconvex" in msg for msg in validate(bad_degree))
    bad_cone = SeifertData(-1, 2, [ConePoint(4, 2, 1)])
    assert any("NonCoprime" in msg for msg in validate(bad_cone))


def test_json_roundtrip():
    data = lens_space(5, 2)
    again = from_json_dict(json.loads(json.dumps(to_json_dict(data))))
    assert again == data


def test_json_genus_route():
    data = from_json_dict({"genus": 0, "degree": "-1/3",
                           "cone_points": [{"alpha": 3, "rho": 1, "beta": 1},
                                           {"alpha": 3, "rho": 2, "beta": 2}]})
    assert data.chi_orb == Fraction(2, 3)


def test_json_schema_errors():
    with pytest.raises(DomainError):
        from_json_dict({"degree": "-1"})  # no genus/chi
    with pytest.raises(DomainError):
        from_json_dict({"genus": 0, "chi_orb": "2", "degree": "-1"})
    with pytest.raises(DomainError):
        from_json_dict({"genus": 0, "degree": "oops"})
    with pytest.raises(DomainError):
        from_json_dict({"genus": 0, "degree": "-1", "bogus": 1})
    with pytest.raises(DomainError):
        from_json_dict({"genus": 0, "degree": "-1",
                        "cone_points": [{"alpha": 3}]})
    with pytest.raises(NotPseudoconvex):
        from_json_dict({"genus": 0, "degree": "1"})


def test_cone_point_check():
    ConePoint(3, 1, 2).check()
    with pytest.raises(InvalidConePoint):
        ConePoint(3, 0, 1).check()
    with pytest.raises(InvalidConePoint):
        ConePoint(3, 1, 4).check()
