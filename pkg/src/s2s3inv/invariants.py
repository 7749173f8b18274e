"""Invariants of the three families of Z/2 quotients of S²×S³.

Case I    X_{k,l}   circle bundles (with Chern class 2c) over CP² # -CP²
Case II   X̄_{k,l}  circle bundles over CP² # CP²
Brieskorn Q⁵₀(d)    quotients of Brieskorn links z0^d + z1² + z2² + z3² = 0

Every quantity with a closed form is computed twice: once through the
cohomology ring and characteristic series, once by the closed formula.  The
two routes are compared in the test suite and by ``s2s3inv verify``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from . import series
from .ring import builtin, intersection_signature, is_total_space_spin, pair_fundamental, wu_class
from .series import SignAmbiguousRational

CASE_I = "caseI"
CASE_II = "caseII"
BRIESKORN = "brieskorn"
FAMILIES = (CASE_I, CASE_II, BRIESKORN)

EtaValue = SignAmbiguousRational


class InvalidDescriptor(ValueError):
    pass


@dataclass(frozen=True)
class FamilyDescriptor:
    family: str
    k: Optional[int] = None
    l: Optional[int] = None
    d: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidDescriptor(f"unknown family {self.family!r}")
        if self.family == BRIESKORN:
            if self.d is None or self.k is not None or self.l is not None:
                raise InvalidDescriptor("brieskorn descriptor takes d only")
            if self.d < 0:
                raise InvalidDescriptor("d must be nonnegative")
            if self.d % 2:
                raise InvalidDescriptor("d must be even")
        else:
            if self.k is None or self.l is None or self.d is not None:
                raise InvalidDescriptor(f"{self.family} descriptor takes k and l only")
            if self.k % 2 == 0:
                raise InvalidDescriptor("k must be odd")
            if self.l % 2:
                raise InvalidDescriptor("l must be even")
            if gcd(self.k, self.l) != 1:
                raise InvalidDescriptor("gcd(k, l) must be 1")

    @classmethod
    def case_i(cls, k, l):
        return cls(CASE_I, k=k, l=l)

    @classmethod
    def case_ii(cls, k, l):
        return cls(CASE_II, k=k, l=l)

    @classmethod
    def brieskorn(cls, d):
        return cls(BRIESKORN, d=d)

    @property
    def is_bundle(self):
        return self.family != BRIESKORN

    @property
    def pi1_acts_trivially(self):
        # a property of the family, not something computed
        return self.is_bundle

    def sort_key(self):
        return (FAMILIES.index(self.family), self.k or 0, self.l or 0, self.d or 0)

    def __str__(self):
        if self.family == BRIESKORN:
            return f"Q(d={self.d})"
        bar = "X" if self.family == CASE_I else "Xbar"
        return f"{bar}(k={self.k}, l={self.l})"


def canonical(x):
    """Representative of x in Z/16 modulo sign, in {0, ..., 8}."""
    r = x % 16
    return min(r, 16 - r)


@dataclass(frozen=True, order=True)
class BordismClass:
    """Element of the Pin⁺ bordism group Z/16, up to sign."""

    canonical: int

    def __post_init__(self):
        if not 0 <= self.canonical <= 8:
            raise ValueError("canonical value must lie in 0..8")

    @classmethod
    def from_int(cls, x):
        return cls(canonical(x))

    def __str__(self):
        return str(self.canonical)


def check_epsilon(eps):
    if eps not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {eps!r}")
    return eps


# --- per-family ring data --------------------------------------------------------

def _require_bundle(f):
    if not f.is_bundle:
        raise InvalidDescriptor("brieskorn family has no circle bundle structure")


def presentation(f):
    _require_bundle(f)
    return builtin(f.family)


@lru_cache(maxsize=None)
def base_signature(family):
    return intersection_signature(builtin(family))


@lru_cache(maxsize=None)
def base_p1(family):
    """p1 of the base, fixed by the signature theorem: <p1,[B]> = 3·sign(B)."""
    B = builtin(family)
    return B.orientation_class / pair_fundamental(B.orientation_class) * (3 * base_signature(family))


@lru_cache(maxsize=None)
def base_w2(family):
    return wu_class(builtin(family))


def chern_class(f):
    """First Chern class -l·u + k·v of the circle bundle N_{k,l} -> B."""
    B = presentation(f)
    return B.gen("u") * -f.l + B.gen("v") * f.k


def c_squared_pairing(f):
    c = chern_class(f)
    q = pair_fundamental(c * c)
    assert q.denominator == 1, q
    return q.numerator


def c_squared_closed_form(f):
    _require_bundle(f)
    k, l = f.k, f.l
    if f.family == CASE_I:
        return -l * l - 2 * k * l
    return l * l + 2 * k * l + 2 * k * k


# --- Pin⁺ bordism -----------------------------------------------------------------

def bordism_value(f, eps):
    """Integer representative of [P] in Z/16 (before dividing out the sign)."""
    check_epsilon(eps)
    if not f.is_bundle:
        return f.d
    half = Fraction(eps, 2)
    val = (1 + half) * c_squared_pairing(f) - half * base_signature(f.family)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral bordism value {val} for {f}")
    return val.numerator


def bordism_class(f, eps):
    return BordismClass.from_int(bordism_value(f, eps))


def bordism_closed_form(f, eps):
    """[P] from the closed formulas in k and l, which differ from
    ``bordism_value`` by an overall sign in Case I."""
    check_epsilon(eps)
    if not f.is_bundle:
        return BordismClass.from_int(f.d)
    k, l = f.k, f.l
    half = Fraction(eps, 2)
    if f.family == CASE_I:
        val = (1 + half) * (l * l + 2 * k * l)
    else:
        val = (1 + half) * (l * l + 2 * k * l + 2 * k * k) - eps
    assert val.denominator == 1
    return BordismClass.from_int(val.numerator)


# --- relative eta invariants -------------------------------------------------------

def eta_closed_form(f):
    if not f.is_bundle:
        return EtaValue.known(Fraction(-f.d, 4))
    k, l = f.k, f.l
    if f.family == CASE_I:
        return EtaValue.unknown(Fraction(l * l + 2 * k * l, 8))
    return EtaValue.unknown(Fraction(2 + l * l + 2 * k * l + 2 * k * k, 8))


def eta_via_fixed_points(f):
    """-2 times the sum of local contributions over the fixed set of the involution."""
    if not f.is_bundle:
        # the involution has d isolated fixed points, all alike
        return EtaValue.known(-2 * f.d * series.isolated_fixed_point_contribution())
    B = presentation(f)
    # the spin^c connection is flat, so its canonical class vanishes
    a = series.local_contribution_codim2(B.zero(), chern_class(f), base_p1(f.family), B)
    return a * -2


@dataclass(frozen=True)
class W2Report:
    base_w2_nonzero: bool
    N_spin: bool
    X_spin: bool


def w2_report(f):
    c = chern_class(f)
    w2 = base_w2(f.family)
    return W2Report(
        base_w2_nonzero=bool(w2),
        N_spin=is_total_space_spin(w2, c),
        X_spin=is_total_space_spin(w2, 2 * c),
    )
