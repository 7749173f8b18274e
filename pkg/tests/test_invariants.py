from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s2s3inv.invariants import (
    BordismClass,
    FamilyDescriptor,
    InvalidDescriptor,
    W2Report,
    base_p1,
    bordism_class,
    bordism_closed_form,
    bordism_value,
    c_squared_closed_form,
    c_squared_pairing,
    canonical,
    chern_class,
    eta_closed_form,
    eta_via_fixed_points,
    w2_report,
)
from s2s3inv.ring import builtin

F = FamilyDescriptor


class TestDescriptor:
    @pytest.mark.parametrize("k, l, message", [
        (2, 2, "k must be odd"),
        (1, 3, "l must be even"),
        (3, 6, "gcd"),
    ])
    def test_bundle_hypotheses(self, k, l, message):
        for ctor in (F.case_i, F.case_ii):
            with pytest.raises(InvalidDescriptor, match=message):
                ctor(k, l)

    def test_brieskorn_hypotheses(self):
        with pytest.raises(InvalidDescriptor, match="d must be even"):
            F.brieskorn(3)
        with pytest.raises(InvalidDescriptor, match="nonnegative"):
            F.brieskorn(-2)

    def test_wrong_parameters(self):
        with pytest.raises(InvalidDescriptor):
            F("caseI", d=2)
        with pytest.raises(InvalidDescriptor):
            F("brieskorn", k=1, l=2)
        with pytest.raises(InvalidDescriptor):
            F("lens", d=2)

    def test_pi1_flag(self):
        assert F.case_i(1, 2).pi1_acts_trivially
        assert not F.brieskorn(0).pi1_acts_trivially


def test_chern_class():
    assert chern_class(F.case_i(1, 2)) == builtin("caseI").parse("-2*u + v")
    assert chern_class(F.case_ii(1, 4)) == builtin("caseII").parse("-4*u + v")
    assert chern_class(F.case_i(1, 0)) == builtin("caseI").gen("v")
    with pytest.raises(InvalidDescriptor):
        chern_class(F.brieskorn(2))


@pytest.mark.parametrize("f, expected", [
    (F.case_i(1, 2), -8),
    (F.case_ii(1, 4), 26),
    (F.case_i(1, 0), 0),
])
def test_c_squared(f, expected):
    assert c_squared_pairing(f) == expected == c_squared_closed_form(f)


def test_base_characteristic_classes():
    assert base_p1("caseI") == 0
    assert base_p1("caseII") == builtin("caseII").parse("6*u^2")


class TestBordism:
    def test_case_i(self):
        f = F.case_i(1, 2)
        assert bordism_value(f, 1) == -12
        assert bordism_class(f, 1) == BordismClass(4)

    def test_case_ii(self):
        f = F.case_ii(1, 4)
        assert bordism_value(f, 1) == 38
        assert bordism_class(f, 1) == BordismClass(6)
        assert bordism_class(f, -1) == BordismClass(2)

    def test_brieskorn(self):
        assert bordism_class(F.brieskorn(24), 1) == BordismClass(8)
        assert bordism_class(F.brieskorn(24), -1) == BordismClass(8)

    def test_bad_epsilon(self):
        with pytest.raises(ValueError):
            bordism_class(F.case_i(1, 2), 0)

    @pytest.mark.parametrize("k", [-7, -3, -1, 1, 3, 5, 9, 15])
    @pytest.mark.parametrize("eps", [1, -1])
    def test_statement_and_proof_formula_agree(self, k, eps):
        for f in (F.case_i(k, 2), F.case_ii(k, 4), F.case_ii(k, 2)):
            assert bordism_class(f, eps) == bordism_closed_form(f, eps)

    def test_class_range(self):
        with pytest.raises(ValueError):
            BordismClass(9)


@given(st.integers(-10**9, 10**9))
def test_canonical(x):
    c = canonical(x)
    assert 0 <= c <= 8
    assert c == canonical(-x) == canonical(x + 16) == canonical(x % 16)


def test_canonical_fixed_points():
    assert [x for x in range(16) if (-x) % 16 == x] == [0, 8]
    assert canonical(8) == 8 and canonical(24) == 8


class TestEta:
    def test_brieskorn(self):
        assert eta_closed_form(F.brieskorn(4)) == Fraction(-1)
        assert eta_closed_form(F.brieskorn(4)).sign_known
        assert eta_via_fixed_points(F.brieskorn(8)).value == -2

    def test_case_i(self):
        assert eta_closed_form(F.case_i(9, 2)).magnitude == 5
        assert eta_closed_form(F.case_i(1, 0)).magnitude == 0
        a = eta_via_fixed_points(F.case_i(1, 2))
        assert a.magnitude == 1 and not a.sign_known

    def test_case_ii(self):
        assert eta_via_fixed_points(F.case_ii(1, 4)).magnitude == Fraction(7, 2)
        assert eta_closed_form(F.case_ii(1, 4)).magnitude == Fraction(7, 2)

    @pytest.mark.parametrize("d", [0, 2, 6, 8])
    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_brieskorn_shift(self, d, m):
        shift = eta_via_fixed_points(F.brieskorn(d + 16 * m)).value - eta_via_fixed_points(F.brieskorn(d)).value
        assert shift == -4 * m


def test_w2_report():
    expected = W2Report(base_w2_nonzero=True, N_spin=True, X_spin=False)
    assert w2_report(F.case_i(1, 2)) == expected
    assert w2_report(F.case_ii(1, 4)) == expected
    with pytest.raises(InvalidDescriptor):
        w2_report(F.brieskorn(2))
