"""Characteristic-class series truncated to a 4-manifold, and fixed-point
contributions for the involutions of the circle-bundle and Brieskorn families.

Only the terms up to degree 4 survive integration, so every series is written
out with explicit coefficients:

    Â(p1)          = 1 - p1/24
    1/cosh(c/2)    = 1 - c²/8
    exp(c/2)       = 1 + c/2 + c²/8
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import pair_fundamental

__all__ = [
    "SignAmbiguousRational",
    "ahat_series",
    "inv_cosh_half",
    "exp_half",
    "local_contribution_codim2",
    "isolated_fixed_point_contribution",
]


@dataclass(frozen=True, eq=False)
class SignAmbiguousRational:
    """An exact rational whose sign may be unknown.

    Values with an unknown sign compare by magnitude only.
    """

    magnitude: Fraction
    sign_known: bool = False
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "magnitude", Fraction(self.magnitude))
        if self.magnitude < 0:
            raise ValueError("magnitude must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def known(cls, value):
        value = Fraction(value)
        return cls(abs(value), True, -1 if value < 0 else 1)

    @classmethod
    def unknown(cls, value):
        return cls(abs(Fraction(value)), False)

    @property
    def value(self):
        """The signed value; only defined when the sign is known."""
        if not self.sign_known:
            raise ValueError("sign is not known")
        return self.sign * self.magnitude

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SignAmbiguousRational.known(other)
        if not isinstance(other, SignAmbiguousRational):
            return NotImplemented
        if self.magnitude != other.magnitude:
            return False
        if not (self.sign_known and other.sign_known) or not self.magnitude:
            return True
        return self.sign == other.sign

    def __hash__(self):
        return hash(self.magnitude)

    def __mul__(self, q):
        q = Fraction(q)
        if self.sign_known:
            return SignAmbiguousRational.known(self.value * q)
        return SignAmbiguousRational.unknown(self.magnitude * q)

    __rmul__ = __mul__

    def __str__(self):
        mag = _fmt(self.magnitude)
        if not self.sign_known:
            return "0" if not self.magnitude else f"±{mag}"
        return _fmt(self.value)

    def __repr__(self):
        return f"SignAmbiguousRational({self})"


def _fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_degree(x, degree, what):
    if not x.is_homogeneous(degree):
        raise ValueError(f"{what} must be homogeneous of degree {degree}, got {x}")


def ahat_series(p1):
    _check_degree(p1, 4, "p1")
    return 1 - p1 / 24


def inv_cosh_half(c):
    _check_degree(c, 2, "c")
    return 1 - c * c / 8


def exp_half(c):
    _check_degree(c, 2, "c")
    return 1 + c / 2 + c * c / 8


def local_contribution_codim2(canonical_c, fiber_c, p1, pres=None):
    """Fixed-point contribution of a codimension-2 component, up to sign.

    The integrand is  ±i · exp(c/2) · (1/2i)/cosh(c_fiber/2) · Â(p1); the two
    imaginary prefactors combine to ±1/2, which leaves everything rational.
    """
    pres = pres or fiber_c.pres
    for x in (canonical_c, fiber_c, p1):
        if x.pres != pres:
            raise ValueError("classes belong to different presentations")
    integrand = exp_half(canonical_c) * inv_cosh_half(fiber_c) * ahat_series(p1)
    return SignAmbiguousRational.unknown(pair_fundamental(integrand) / 2)


def isolated_fixed_point_contribution():
    """Per-point contribution at an isolated fixed point of the Brieskorn involution."""
    return Fraction(1, 8)
