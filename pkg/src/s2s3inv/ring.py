"""Graded quotient rings presenting the cohomology of a closed 4-manifold.

Elements live in Q[x_1..x_n]/I truncated above ``top_degree``.  The ideal is
given by homogeneous relations which are turned into rewrite rules under a
degree-lexicographic monomial order.  Because everything is truncated the set
of monomials is finite, so normal forms are tabulated once per presentation and
confluence is checked exhaustively on that table.

>>> B = builtin("caseI")
>>> c = B.gen("u") * -2 + B.gen("v")
>>> str(c * c)
'-8·uv'
>>> pair_fundamental(c * c)
Fraction(-8, 1)
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .dsl import DSLError, evaluate, parse_expr, parse_sections, split_toplevel

Monomial = Tuple[int, ...]

__all__ = [
    "RingPresentation",
    "RingElement",
    "Mod2Element",
    "SingularFormWarning",
    "parse_presentation",
    "builtin",
    "BUILTIN_SOURCES",
    "reduce",
    "pair_fundamental",
    "intersection_matrix",
    "inertia",
    "intersection_signature",
    "is_total_space_spin",
    "wu_class",
]


class SingularFormWarning(UserWarning):
    """The intersection pairing has a nontrivial radical."""


class NonConfluentError(DSLError):
    pass


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(y - x for x, y in zip(b, a))


def _all_monomials(degrees, top):
    """Every exponent vector of weighted degree <= top."""
    out = [()]
    for i, d in enumerate(degrees):
        out = [m + (e,) for m in out for e in range(top // d + 1)
               if sum(x * y for x, y in zip(m + (e,), degrees)) <= top]
    return out


# --- raw integer polynomials, used while reading relations -------------------

def _raw_poly(expr, names):
    n = len(names)
    zero = (0,) * n

    def const(c):
        return {zero: c} if c else {}

    def var(name):
        if name not in names:
            raise KeyError(name)
        e = [0] * n
        e[names.index(name)] = 1
        return {tuple(e): 1}

    def add(a, b):
        out = dict(a)
        for m, c in b.items():
            out[m] = out.get(m, 0) + c
            if out[m] == 0:
                del out[m]
        return out

    def mul(a, b):
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return {m: c for m, c in out.items() if c}

    def neg(a):
        return {m: -c for m, c in a.items()}

    return evaluate(expr, const, var, add, mul, neg)


# --- rewriting -----------------------------------------------------------------

def _build_rules(relations, key, modulus):
    rules = []
    for rel in relations:
        if modulus:
            rel = {m: c % modulus for m, c in rel.items() if c % modulus}
        if not rel:
            continue
        lead = max(rel, key=key)
        lc = rel[lead]
        if modulus:
            inv = pow(lc, -1, modulus)
            tail = {m: (-c * inv) % modulus for m, c in rel.items() if m != lead}
        else:
            tail = {m: Fraction(-c, lc) for m, c in rel.items() if m != lead}
        rules.append((lead, tail))
    return rules


def _normal_form_table(monomials, rules, key, modulus):
    """Tabulate normal forms, failing on the first monomial with two answers.

    Monomials are visited in increasing order, so every rewrite result of a
    monomial only involves monomials that already have a unique normal form.
    """
    table = {}
    for m in sorted(monomials, key=key):
        results = []
        for lead, tail in rules:
            if not _divides(lead, m):
                continue
            q = _mono_div(m, lead)
            acc = {}
            for t, c in tail.items():
                for n, d in table[_mono_mul(t, q)].items():
                    acc[n] = acc.get(n, 0) + c * d
            if modulus:
                acc = {n: c % modulus for n, c in acc.items() if c % modulus}
            else:
                acc = {n: c for n, c in acc.items() if c}
            results.append(acc)
        if not results:
            table[m] = {m: 1}
            continue
        first = results[0]
        if any(r != first for r in results[1:]):
            raise NonConfluentError(f"rewrite system is not confluent at monomial {m}")
        table[m] = first
    return table


@dataclass(frozen=True)
class RingPresentation:
    names: Tuple[str, ...]
    degrees: Tuple[int, ...]
    relations: Tuple[Tuple[Tuple[Monomial, int], ...], ...]
    orientation: Monomial
    top_degree: int = 4
    # variable priority used by the monomial order, most significant first
    order: Tuple[int, ...] = field(default=None, compare=False)

    _nf: Dict = field(init=False, repr=False, compare=False)
    _nf2: Dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for d in self.degrees:
            if d <= 0 or d % 2:
                raise DSLError(f"generator degree {d} unsupported: degrees must be even and positive")
        top = self.top_degree
        rels = [dict(r) for r in self.relations]
        for rel in rels:
            degs = {self.mono_degree(m) for m in rel}
            if len(degs) > 1:
                raise DSLError(f"relation {self._fmt_raw(rel)} is not homogeneous")
            if degs and degs.pop() > top:
                raise DSLError(f"relation {self._fmt_raw(rel)} exceeds top degree {top}")
        if self.mono_degree(self.orientation) != top:
            raise DSLError(f"orientation monomial must have degree {top}")

        monos = _all_monomials(self.degrees, top)
        orders = [self.order] if self.order is not None else list(
            itertools.islice(itertools.permutations(range(len(self.names))), 720))
        chosen = None
        error = None
        for order in orders:
            key = self._order_key(order)
            try:
                nf = _normal_form_table(monos, _build_rules(rels, key, 0), key, 0)
            except NonConfluentError as exc:
                error = error or exc
                continue
            if chosen is None:
                chosen = (order, nf)
            if nf[self.orientation] == {self.orientation: 1}:
                chosen = (order, nf)
                break
        if chosen is None:
            raise error
        order, nf = chosen
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_nf", nf)

        top_basis = self.basis(top)
        if len(top_basis) != 1:
            raise DSLError(f"degree {top} part has rank {len(top_basis)}, expected 1")
        if not nf[self.orientation]:
            raise DSLError("orientation monomial reduces to zero")

        key = self._order_key(order)
        try:
            nf2 = _normal_form_table(monos, _build_rules(rels, key, 2), key, 2)
        except NonConfluentError as exc:
            raise NonConfluentError("mod 2 " + exc.message) from None
        object.__setattr__(self, "_nf2", nf2)

    # -- monomial helpers --

    def mono_degree(self, m):
        return sum(e * d for e, d in zip(m, self.degrees))

    def _order_key(self, order):
        def key(m):
            return (self.mono_degree(m),) + tuple(m[i] for i in order)
        return key

    @property
    def key(self):
        return self._order_key(self.order)

    def format_monomial(self, m):
        sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(name + str(e).translate(sup))
        return "".join(parts) if parts else "1"

    def _fmt_raw(self, rel):
        return " + ".join(f"{c}*{self.format_monomial(m)}" for m, c in rel.items())

    def basis(self, degree):
        """Standard (irreducible) monomials of the given degree, largest first."""
        return sorted((m for m, f in self._nf.items()
                       if self.mono_degree(m) == degree and f == {m: 1}),
                      key=self.key, reverse=True)

    def basis_mod2(self, degree):
        return sorted((m for m, f in self._nf2.items()
                       if self.mono_degree(m) == degree and f == {m: 1}),
                      key=self.key, reverse=True)

    def ranks(self):
        return tuple(len(self.basis(d)) for d in range(0, self.top_degree + 1, 2))

    # -- element construction --

    def element(self, terms=None):
        """Reduce a ``{monomial: coefficient}`` mapping into a RingElement.

        Monomials above the top degree are dropped.
        """
        nf_table = self._nf
        out = {}
        for m, c in (terms or {}).items():
            nf = nf_table.get(m)
            if nf is None or not c:
                continue
            if m in nf and len(nf) == 1:
                out[m] = out.get(m, 0) + c
                continue
            for n, d in nf.items():
                out[n] = out.get(n, 0) + c * d
        return RingElement(self, {m: c for m, c in out.items() if c})

    def one(self):
        return self.element({(0,) * len(self.names): 1})

    def zero(self):
        return RingElement(self, {})

    def gen(self, name):
        e = [0] * len(self.names)
        e[self.names.index(name)] = 1
        return self.element({tuple(e): 1})

    def monomial(self, m):
        return self.element({tuple(m): 1})

    def parse(self, text):
        """Evaluate a polynomial expression in this ring."""
        try:
            return evaluate(parse_expr(text), lambda c: self.one() * c, self._var,
                            lambda a, b: a + b, lambda a, b: a * b, lambda a: -a)
        except KeyError as exc:
            raise DSLError(f"unknown generator {exc.args[0]!r}") from None

    def _var(self, name):
        if name not in self.names:
            raise KeyError(name)
        return self.gen(name)

    def mod2(self, terms):
        """Reduce an integer ``{monomial: coefficient}`` mapping modulo 2."""
        out = set()
        for m, c in terms.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not integral; no mod 2 reduction")
            if c.numerator % 2 == 0 or self.mono_degree(m) > self.top_degree:
                continue
            out ^= set(self._nf2[m])
        return Mod2Element(self, frozenset(out))

    @property
    def orientation_class(self):
        return self.monomial(self.orientation)


class RingElement:
    """Exact rational element of a presented ring, always kept in normal form."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        object.__setattr__(self, "pres", pres)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.pres is not self.pres and other.pres != self.pres:
                raise ValueError("elements belong to different presentations")
            return other
        if isinstance(other, (int, Fraction)):
            return self.pres.one() * other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return RingElement(self.pres, {m: c for m, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return self.pres.zero()
            return RingElement(self.pres, {m: c * q for m, c in self.terms.items()})
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.pres is not self.pres and other.pres != self.pres:
            raise ValueError("elements belong to different presentations")
        raw = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                raw[m] = raw.get(m, 0) + c1 * c2
        return self.pres.element(raw)

    __rmul__ = __mul__

    def __truediv__(self, q):
        return self * (1 / Fraction(q))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.pres.one() * other
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.pres == other.pres and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def component(self, degree):
        return RingElement(self.pres, {m: c for m, c in self.terms.items()
                                       if self.pres.mono_degree(m) == degree})

    def is_homogeneous(self, degree):
        return all(self.pres.mono_degree(m) == degree for m in self.terms)

    def coefficient(self, monomial):
        return Fraction(self.terms.get(tuple(monomial), 0))

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.pres
        items = sorted(self.terms.items(), key=lambda t: (p.mono_degree(t[0]), tuple(-x for x in p.key(t[0])[1:])))
        out = ""
        for m, c in items:
            name = p.format_monomial(m)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if name == "1":
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}·{name}"
            if not out:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"RingElement({self})"


@dataclass(frozen=True)
class Mod2Element:
    pres: RingPresentation
    terms: frozenset

    def __add__(self, other):
        return Mod2Element(self.pres, self.terms ^ other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self.pres.format_monomial(m)
                          for m in sorted(self.terms, key=self.pres.key, reverse=True))


# --- parsing -------------------------------------------------------------------

def parse_presentation(text):
    """Read a presentation from DSL source and validate it."""
    sections = parse_sections(text)

    gen_sec = sections["generators"]
    names, degrees = [], []
    for piece, off in split_toplevel(gen_sec.value):
        col = gen_sec.offset + off + len(piece) - len(piece.lstrip()) + 1
        name, colon, deg = piece.strip().partition(":")
        name = name.strip()
        if not colon or not name.isidentifier() or not deg.strip().isdigit():
            raise DSLError(f"bad generator {piece.strip()!r}, expected name:degree", gen_sec.line, col)
        if name in names:
            raise DSLError(f"duplicate generator {name!r}", gen_sec.line, col)
        d = int(deg)
        if d <= 0 or d % 2:
            raise DSLError(f"generator {name!r} has degree {d}: odd degree unsupported", gen_sec.line, col)
        names.append(name)
        degrees.append(d)

    top = 4
    if "top_degree" in sections:
        s = sections["top_degree"]
        if not s.value.strip().isdigit():
            raise DSLError("top_degree must be a nonnegative integer", s.line, s.offset + 1)
        top = int(s.value)

    relations = []
    if "relations" in sections:
        s = sections["relations"]
        for piece, off in split_toplevel(s.value):
            if not piece.strip():
                continue
            expr = parse_expr(piece, s.line, s.offset + off)
            try:
                relations.append(tuple(sorted(_raw_poly(expr, names).items())))
            except KeyError as exc:
                raise DSLError(f"unknown generator {exc.args[0]!r}", s.line, s.offset + off + 1) from None

    s = sections["orientation"]
    try:
        orient = _raw_poly(parse_expr(s.value, s.line, s.offset), names)
    except KeyError as exc:
        raise DSLError(f"unknown generator {exc.args[0]!r}", s.line, s.offset + 1) from None
    if len(orient) != 1 or list(orient.values()) != [1]:
        raise DSLError("orientation must be a single monomial", s.line, s.offset + 1)
    (orientation,) = orient

    return RingPresentation(tuple(names), tuple(degrees), tuple(relations), orientation, top)


BUILTIN_SOURCES = {
    # H*(CP² # -CP²), oriented by <uv,[B]> = 1
    "caseI": "generators: u:2, v:2\nrelations: u^2+u*v, v^2\norientation: u*v\n",
    # H*(CP² # CP²), oriented by <u²,[B]> = 1
    "caseII": "generators: u:2, v:2\nrelations: u^2+u*v, v^2+2*u*v\norientation: u^2\n",
}

_builtin_cache = {}


def builtin(name):
    if name not in BUILTIN_SOURCES:
        raise KeyError(f"unknown builtin presentation {name!r}; choose from {sorted(BUILTIN_SOURCES)}")
    if name not in _builtin_cache:
        _builtin_cache[name] = parse_presentation(BUILTIN_SOURCES[name])
    return _builtin_cache[name]


# --- operations ----------------------------------------------------------------

def reduce(e):
    """Normal form of ``e``; elements are stored reduced so this is idempotent."""
    return e.pres.element(e.terms)


def pair_fundamental(e):
    """Evaluate ``e`` on the fundamental class; lower-degree parts are ignored."""
    p = e.pres
    (b,) = p.basis(p.top_degree)
    return Fraction(reduce(e).coefficient(b)) / p._nf[p.orientation][b]


def intersection_matrix(p):
    if p.top_degree % 4:
        raise ValueError("intersection form needs top degree divisible by 4")
    basis = p.basis(p.top_degree // 2)
    gens = [p.monomial(m) for m in basis]
    return [[pair_fundamental(a * b) for b in gens] for a in gens]


def inertia(matrix):
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Diagonalises by congruence.  A zero pivot is swapped with a later nonzero
    diagonal entry, or combined with a row that pairs nontrivially with it.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    pos = neg = zero = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is None:
                    zero += 1
                    continue
                # e_i -> e_i + e_j gives diagonal 2 a_ij != 0
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
        piv = a[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        # Schur complement, symmetric by construction
        for r in range(i + 1, n):
            f = a[r][i] / piv
            if f:
                for k in range(i + 1, n):
                    a[r][k] -= f * a[i][k]
        for r in range(i + 1, n):
            a[i][r] = a[r][i] = Fraction(0)
    return pos, neg, zero


def intersection_signature(p):
    pos, neg, zero = inertia(intersection_matrix(p))
    if zero:
        warnings.warn(f"intersection form is singular (nullity {zero}); "
                      "returning the signature of its nondegenerate part",
                      SingularFormWarning, stacklevel=2)
    return pos - neg


def is_total_space_spin(w2_base, c1):
    """Whether w2 of the circle bundle with Euler class ``c1`` vanishes.

    The Gysin sequence kills exactly the span of c1 mod 2, so the total space
    is spin iff w2 of the base is 0 or equals c1 mod 2.
    """
    if not c1.is_homogeneous(2):
        raise ValueError("c1 must be homogeneous of degree 2")
    if w2_base.pres != c1.pres:
        raise ValueError("elements belong to different presentations")
    c1_mod2 = c1.pres.mod2(c1.terms)
    return not w2_base or w2_base.terms == c1_mod2.terms


def wu_class(p):
    """The degree-2 class v mod 2 with v·x = x·x (mod 2) for every degree-2 x.

    For a closed oriented 4-manifold this is w2 of the tangent bundle.
    """
    basis = p.basis(p.top_degree // 2)
    gens = [p.monomial(m) for m in basis]

    def odd(x):
        q = pair_fundamental(x)
        if q.denominator != 1:
            raise ValueError("pairing is not integral")
        return q.numerator % 2

    found = []
    for bits in itertools.product((0, 1), repeat=len(gens)):
        y = sum((g for g, b in zip(gens, bits) if b), p.zero())
        if all(odd(y * x) == odd(x * x) for x in gens):
            found.append(y)
    if len(found) != 1:
        raise ValueError("mod 2 pairing is degenerate; Wu class is not unique")
    return p.mod2(found[0].terms)
