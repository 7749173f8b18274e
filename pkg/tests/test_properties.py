"""Algebraic identities checked on random inputs."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from s2s3inv.invariants import FamilyDescriptor, bordism_value, eta_closed_form, eta_via_fixed_points
from s2s3inv.ring import builtin, pair_fundamental, reduce
from s2s3inv.series import exp_half, inv_cosh_half, local_contribution_codim2

names = st.sampled_from(["caseI", "caseII"])
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def elements(draw, name):
    B = builtin(name)
    monos = [m for d in (0, 2, 4) for m in B.basis(d)]
    return B.element({m: draw(rationals) for m in monos})


@st.composite
def degree_two(draw, name):
    B = builtin(name)
    return B.element({m: draw(st.integers(-40, 40)) for m in B.basis(2)})


@st.composite
def triples(draw):
    name = draw(names)
    return tuple(draw(elements(name)) for _ in range(3))


@settings(max_examples=300, deadline=None)
@given(triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (b + c) == (a + b) + c
    assert a - a == 0


@settings(deadline=None)
@given(triples(), rationals)
def test_pairing_linear(abc, q):
    a, b, _ = abc
    assert pair_fundamental(a + b) == pair_fundamental(a) + pair_fundamental(b)
    assert pair_fundamental(a * q) == q * pair_fundamental(a)


@settings(deadline=None)
@given(triples())
def test_reduce_idempotent(abc):
    for x in abc:
        assert reduce(reduce(x)) == reduce(x) == x


@settings(deadline=None)
@given(names.flatmap(degree_two))
def test_graded(c):
    # degrees add; everything above 4 is gone
    assert (c * c).is_homogeneous(4)
    assert c * c * c == 0


@settings(deadline=None)
@given(names.flatmap(degree_two))
def test_series_identities(c):
    assert exp_half(c) * exp_half(-c) == 1
    assert inv_cosh_half(c) == inv_cosh_half(-c)
    z = c.pres.zero()
    assert local_contribution_codim2(z, c, z) == local_contribution_codim2(z, -c, z)


odd = st.integers(-10**4, 10**4).map(lambda n: 2 * n + 1)


@given(odd, st.sampled_from([2, 4]), st.sampled_from([1, -1]), st.sampled_from(["caseI", "caseII"]))
def test_bordism_integral(k, l, eps, family):
    f = FamilyDescriptor(family, k=k, l=l)
    assert isinstance(bordism_value(f, eps), int)


@given(odd, st.sampled_from([2, 4]), st.sampled_from(["caseI", "caseII"]))
def test_eta_routes_agree(k, l, family):
    f = FamilyDescriptor(family, k=k, l=l)
    assert eta_via_fixed_points(f).magnitude == eta_closed_form(f).magnitude


@given(st.integers(0, 500).map(lambda n: 2 * n), st.integers(0, 50))
def test_brieskorn_shift(d, m):
    lo = eta_via_fixed_points(FamilyDescriptor.brieskorn(d)).value
    hi = eta_via_fixed_points(FamilyDescriptor.brieskorn(d + 16 * m)).value
    assert hi - lo == -4 * m
    assert lo == Fraction(-d, 4)
