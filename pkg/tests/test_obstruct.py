from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from crseifert.invariants import nu
from crseifert.obstruct import (EXACT_PASS, REPORT_MISMATCH, burns_epstein,
                                check_chi2_over_4d, check_integer_nu,
                                cusp_signature, disk_bundle_solve,
                                filling_identity, lens_nu_direct, lens_report,
                                miyaoka_yau_bound, admissible_lens_pairs)
from crseifert.seifert import SeifertData, lens_space, sphere

from conftest import seifert_datas


def test_check_integer_nu():
    v = check_integer_nu(sphere())
    assert (v.label, v.value) == ("pass", -1)
    v = check_integer_nu(lens_space(3, 2))
    assert (v.label, v.value) == ("obstructed", Fraction(-11, 3))
    v = check_integer_nu(SeifertData(-1, -2))
    assert (v.label, v.value) == ("pass", -1)


def test_check_chi2_over_4d():
    v = check_chi2_over_4d(-2, -1)
    assert v.ok and v.value == -1
    v = check_chi2_over_4d(-2, -3)
    assert not v.ok and v.value == Fraction(-1, 3)
    # d = chi/2 always yields an integer (chi^2/4d = chi/2)
    v = check_chi2_over_4d(-6, -3)
    assert v.ok and v.value == -3
    with pytest.raises(ValueError):
        check_chi2_over_4d(-2, 1)


def test_filling_identity():
    # disk bundle over the genus-2 surface with d = chi/2 = -1
    assert filling_identity(-2, -1, Fraction(-1))
    assert filling_identity(1, 0, -1)
    assert not filling_identity(0, 0, 1)


def test_disk_bundle_solve_examples():
    assert disk_bundle_solve(-2) == {Fraction(-1)}
    assert disk_bundle_solve(-4) == {Fraction(-2)}
    assert disk_bundle_solve(-6) == {Fraction(-3)}


def test_disk_bundle_solve_domain():
    with pytest.raises(ValueError):
        disk_bundle_solve(-3)
    with pytest.raises(ValueError):
        disk_bundle_solve(2)


@given(st.integers(1, 60))
def test_disk_bundle_solution_is_half_chi(half):
    chi = -2 * half
    solutions = disk_bundle_solve(chi)
    assert solutions == {Fraction(chi, 2)}
    # and the solution indeed satisfies the filling identity
    d = Fraction(chi, 2)
    assert filling_identity(chi, -1, -(d + 3 + chi * chi / (4 * d)))


def test_miyaoka_yau_examples():
    assert miyaoka_yau_bound(sphere()) == 1
    assert miyaoka_yau_bound(lens_space(3, 2)) == Fraction(11, 3)


@given(seifert_datas())
def test_miyaoka_yau_is_minus_nu(data):
    assert miyaoka_yau_bound(data) == -nu(data)


def test_cusp_signature():
    assert cusp_signature(-1, []) == -1
    assert cusp_signature(-1, [3]) == -2
    assert cusp_signature(0, [1, 2]) == -1
    assert cusp_signature(2, [1]) == Fraction(5, 3)


def test_lens_nu_direct():
    assert lens_nu_direct(2, 1) == Fraction(-1, 2)
    assert lens_nu_direct(3, 1) == Fraction(1, 3)
    assert lens_nu_direct(3, 2) == -1


def test_lens_report_32():
    internal, nu_cmp, eta_cmp = lens_report(3, 2)
    assert internal.status == EXACT_PASS
    assert internal.lhs == Fraction(-1, 3)
    assert nu_cmp.lhs == Fraction(-11, 3)      # via the cone-data route
    assert nu_cmp.rhs == -1                    # direct closed form
    assert nu_cmp.status == REPORT_MISMATCH    # convention gap, surfaced
    assert eta_cmp.lhs == Fraction(10, 9)      # round-metric value
    assert eta_cmp.rhs == Fraction(2, 9)
    assert eta_cmp.status == REPORT_MISMATCH


def test_lens_internal_identity_sweep():
    for p, q in admissible_lens_pairs(40):
        internal = lens_report(p, q)[0]
        assert internal.status == EXACT_PASS, (p, q)
        assert internal.rhs == Fraction(-1, p)


def test_admissible_pairs():
    pairs = list(admissible_lens_pairs(5))
    assert (2, 1) not in pairs      # q - 1 = 0 fails the gcd condition
    assert (3, 2) in pairs
    assert (5, 2) in pairs
    assert (4, 3) not in pairs      # gcd(q - 1, p) = 2


def test_burns_epstein_examples():
    mu, nu_v, verdict = burns_epstein(-2, -1)
    assert mu == -1 and nu_v == -1
    assert verdict.ok and verdict.value == -3

    mu, nu_v, verdict = burns_epstein(-2, -3)
    assert mu == Fraction(-1, 3)
    assert verdict.ok and verdict.value == -1   # 3*mu integral...
    assert not check_chi2_over_4d(-2, -3).ok    # ...but chi^2/4d is not

    mu, nu_v, _ = burns_epstein(2, -1)
    assert mu == -1 and nu_v == -1


@given(st.integers(-8, 8).filter(bool), st.integers(1, 6))
def test_burns_epstein_matches_nu_on_smooth_bundles(chi, dneg):
    d = Fraction(-dneg)
    _, nu_closed, _ = burns_epstein(chi, d)
    assert nu_closed == nu(SeifertData(d, chi))
