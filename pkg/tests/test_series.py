from fractions import Fraction

import pytest

from s2s3inv.series import (
    SignAmbiguousRational,
    ahat_series,
    exp_half,
    inv_cosh_half,
    isolated_fixed_point_contribution,
    local_contribution_codim2,
)


def test_ahat(B1, B2):
    assert ahat_series(B1.zero()) == 1
    assert ahat_series(B2.parse("6*u^2")) == B2.one() - B2.parse("u^2") / 4
    assert ahat_series(B1.parse("24*u*v")) == B1.parse("1 - u*v")


def test_inv_cosh(B1, B2):
    assert inv_cosh_half(B1.zero()) == 1
    assert inv_cosh_half(B1.parse("-2*u + v")) == B1.parse("1 + u*v")
    assert inv_cosh_half(B2.parse("-4*u + v")) == B2.one() - B2.parse("13*u^2") / 4


def test_exp_half(B1):
    assert exp_half(B1.zero()) == 1
    assert exp_half(B1.parse("2*u")) == B1.parse("1 + u") + B1.parse("u^2") / 2
    # 1 + c/2 + c²/8 with c² = -8uv
    assert exp_half(B1.parse("-2*u + v")) == B1.parse("1 - u - u*v") + B1.parse("v") / 2


@pytest.mark.parametrize("fn", [ahat_series])
def test_ahat_degree_checked(fn, B1):
    with pytest.raises(ValueError, match="degree 4"):
        fn(B1.parse("u"))


@pytest.mark.parametrize("fn", [inv_cosh_half, exp_half])
def test_degree_two_checked(fn, B1):
    with pytest.raises(ValueError, match="degree 2"):
        fn(B1.parse("1 + u"))


def test_local_contribution_case_i(B1):
    a = local_contribution_codim2(B1.zero(), B1.parse("-2*u + v"), B1.zero(), B1)
    assert a == SignAmbiguousRational.unknown(Fraction(1, 2))
    assert not a.sign_known


def test_local_contribution_case_ii(B2):
    a = local_contribution_codim2(B2.zero(), B2.parse("-4*u + v"), B2.parse("6*u^2"))
    assert a.magnitude == Fraction(7, 4)


def test_local_contribution_trivial(B1):
    assert local_contribution_codim2(B1.zero(), B1.zero(), B1.zero()).magnitude == 0


def test_local_contribution_mismatch(B1, B2):
    with pytest.raises(ValueError):
        local_contribution_codim2(B1.zero(), B2.gen("u"), B2.zero())


def test_isolated_points():
    assert isolated_fixed_point_contribution() == Fraction(1, 8)
    assert 2 * isolated_fixed_point_contribution() == Fraction(1, 4)
    assert sum([isolated_fixed_point_contribution()] * 0) == 0


class TestSignAmbiguous:
    def test_unknown_compares_by_magnitude(self):
        assert SignAmbiguousRational.unknown(-3) == SignAmbiguousRational.known(3)
        assert SignAmbiguousRational.unknown(3) == SignAmbiguousRational.known(-3)
        assert SignAmbiguousRational.unknown(3) != SignAmbiguousRational.unknown(2)

    def test_known_compares_signs(self):
        assert SignAmbiguousRational.known(-3) != SignAmbiguousRational.known(3)
        assert SignAmbiguousRational.known(0) == SignAmbiguousRational(0, True, -1)
        assert SignAmbiguousRational.known(Fraction(-1, 4)) == Fraction(-1, 4)

    def test_value_requires_sign(self):
        with pytest.raises(ValueError):
            SignAmbiguousRational.unknown(1).value

    def test_scaling(self):
        assert (SignAmbiguousRational.known(3) * -2).value == -6
        assert (SignAmbiguousRational.unknown(3) * -2).magnitude == 6

    def test_invariants(self):
        with pytest.raises(ValueError):
            SignAmbiguousRational(-1)
        with pytest.raises(ValueError):
            SignAmbiguousRational(1, True, 0)

    def test_str(self):
        assert str(SignAmbiguousRational.unknown(Fraction(7, 2))) == "±7/2"
        assert str(SignAmbiguousRational.known(-1)) == "-1"
        assert str(SignAmbiguousRational.unknown(0)) == "0"
