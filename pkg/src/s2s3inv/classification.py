"""Diffeomorphism types of the quotients, and parametric families realising them.

Non-spin Z/2 quotients of S²×S³ fall into ten types: X(q) when π1 acts
trivially on π2 and Q(q) otherwise, q ∈ {0,2,4,6,8} being the Pin⁺ bordism
class of a characteristic submanifold.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .invariants import (
    BRIESKORN,
    FamilyDescriptor,
    bordism_class,
    canonical,
    check_epsilon,
)

INDICES = (0, 2, 4, 6, 8)


@dataclass(frozen=True, order=True)
class DiffeoType:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("X", "Q"):
            raise ValueError(f"kind must be 'X' or 'Q', got {self.kind!r}")
        if self.index not in INDICES:
            raise ValueError(f"index must be one of {INDICES}, got {self.index}")

    @classmethod
    def parse(cls, token):
        m = re.fullmatch(r"\s*([XQ])\(?(\d+)\)?\s*", token)
        try:
            if not m:
                raise ValueError
            return cls(m.group(1), int(m.group(2)))
        except ValueError:
            raise ValueError(f"unknown type token {token!r}; expected one of "
                             + " ".join(f"{k}{q}" for k in "XQ" for q in INDICES)) from None

    @property
    def pi1_acts_trivially(self):
        return self.kind == "X"

    def __str__(self):
        return f"{self.kind}{self.index}"


ALL_TYPES = tuple(DiffeoType(kind, q) for kind in "XQ" for q in INDICES)


class ClassificationError(ArithmeticError):
    pass


def classify(f, eps):
    check_epsilon(eps)
    if f.family == BRIESKORN:
        q = canonical(f.d)
        kind = "Q"
    else:
        q = bordism_class(f, eps).canonical
        kind = "X"
    if q % 2:
        raise ClassificationError(f"odd bordism class {q} for {f}")
    return DiffeoType(kind, q)


def family_member(t, eps, r):
    """The r-th member of the parametric family representing ``t``.

    X(0) = X_{8r-1,2}      X(2) = Xbar_{8r+2ε+3,4}
    X(4) = X_{8r+1,2}      X(6) = Xbar_{8r+2ε-1,4}
    X(8) = X_{8r+3,2}      Q(q) = Q⁵₀(q+16r)
    """
    check_epsilon(eps)
    if t.kind == "Q":
        return FamilyDescriptor.brieskorn(t.index + 16 * r)
    if t.index in (0, 4, 8):
        offset = {0: -1, 4: 1, 8: 3}[t.index]
        return FamilyDescriptor.case_i(8 * r + offset, 2)
    offset = {2: 3, 6: -1}[t.index]
    return FamilyDescriptor.case_ii(8 * r + 2 * eps + offset, 4)


def _parameters(count, allow_negative):
    if not allow_negative:
        return list(range(count))
    # 0, 1, -1, 2, -2, ...
    rs = itertools.chain([0], itertools.chain.from_iterable((n, -n) for n in itertools.count(1)))
    return sorted(itertools.islice(rs, count))


def representatives(t, eps, count, allow_negative=False):
    """The first ``count`` members of the family for ``t``, each re-classified.

    Brieskorn families only run over r >= 0 since d must be nonnegative.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if t.kind == "Q":
        allow_negative = False
    out = []
    for r in _parameters(count, allow_negative):
        f = family_member(t, eps, r)
        got = classify(f, eps)
        if got != t:
            raise ClassificationError(f"{f} classifies as {got}, expected {t}")
        out.append(f)
    return out
