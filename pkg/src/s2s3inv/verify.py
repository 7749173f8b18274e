"""Cross-check suites run by ``s2s3inv verify``.

Each suite returns None on success or a string describing the first
counterexample it met.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from . import series
from .classification import ALL_TYPES, DiffeoType, classify, representatives
from .invariants import (
    CASE_I,
    CASE_II,
    FamilyDescriptor,
    base_p1,
    bordism_class,
    bordism_closed_form,
    bordism_value,
    c_squared_closed_form,
    c_squared_pairing,
    canonical,
    eta_closed_form,
    eta_via_fixed_points,
    w2_report,
)
from .moduli import build_table
from .ring import builtin, intersection_signature, pair_fundamental, reduce

K_MAX = 201
D_MAX = 400
REPS = 50
SEED = 20240229


def bundle_sweep(k_max=K_MAX, ls=(2, 4)):
    """All valid Case I and Case II descriptors with |k| <= k_max, l in ls."""
    out = []
    for family in (CASE_I, CASE_II):
        for l in ls:
            for k in range(-k_max, k_max + 1):
                if k % 2 and gcd(k, l) == 1:
                    out.append(FamilyDescriptor(family, k=k, l=l))
    return out


def brieskorn_sweep(d_max=D_MAX):
    return [FamilyDescriptor.brieskorn(d) for d in range(0, d_max + 1, 2)]


def random_element(rng, pres, den=6, lo=-9, hi=9):
    terms = {}
    for deg in range(0, pres.top_degree + 1, 2):
        for m in pres.basis(deg):
            terms[m] = Fraction(rng.randint(lo, hi), rng.randint(1, den))
    return pres.element(terms)


def random_degree2(rng, pres, lo=-9, hi=9):
    return pres.element({m: rng.randint(lo, hi) for m in pres.basis(2)})


# --- suites ---------------------------------------------------------------------

def suite_presentations():
    for name, orient in (("caseI", "u*v"), ("caseII", "u^2")):
        B = builtin(name)
        if B.ranks() != (1, 2, 1):
            return f"{name}: ranks {B.ranks()}"
        if pair_fundamental(B.parse(orient)) != 1:
            return f"{name}: <{orient}, [B]> != 1"


def suite_signatures():
    for name, expected in (("caseI", 0), ("caseII", 2)):
        got = intersection_signature(builtin(name))
        if got != expected:
            return f"sign({name}) = {got}, expected {expected}"
    if base_p1(CASE_I) != 0 or base_p1(CASE_II) != builtin("caseII").parse("6*u^2"):
        return "p1 of the bases disagrees with 0 and 6u²"


def suite_pairing_closed_form():
    for f in bundle_sweep():
        if c_squared_pairing(f) != c_squared_closed_form(f):
            return f"{f}: <c²,[B]> = {c_squared_pairing(f)}, closed form {c_squared_closed_form(f)}"


def suite_eta():
    for f in bundle_sweep():
        a, b = eta_via_fixed_points(f), eta_closed_form(f)
        if a.magnitude != b.magnitude:
            return f"{f} (k={f.k}, l={f.l}): fixed points give {a}, closed form {b}"
    for f in brieskorn_sweep():
        a = eta_via_fixed_points(f)
        if not a.sign_known or a.value != Fraction(-f.d, 4):
            return f"{f}: fixed points give {a}, expected {Fraction(-f.d, 4)}"


def suite_bordism():
    for f in bundle_sweep():
        for eps in (1, -1):
            bordism_value(f, eps)  # raises on a non-integral value
            if bordism_class(f, eps) != bordism_closed_form(f, eps):
                return f"{f}, eps={eps}: {bordism_class(f, eps)} vs {bordism_closed_form(f, eps)}"


def suite_round_trip():
    for t in ALL_TYPES:
        for eps in (1, -1):
            try:
                reps = representatives(t, eps, REPS)
            except ArithmeticError as exc:
                return str(exc)
            for f in reps:
                if classify(f, eps) != t:
                    return f"{f}, eps={eps} does not classify as {t}"
    x4 = [(f.k, f.l) for f in representatives(DiffeoType("X", 4), 1, 3)]
    if x4 != [(1, 2), (9, 2), (17, 2)]:
        return f"X4 family starts {x4}"


def suite_exhaustive():
    for f in bundle_sweep():
        if f.family == CASE_I:
            allowed = {0, 4, 8}
        elif f.l == 4:
            allowed = {2, 6}
        else:
            continue
        for eps in (1, -1):
            q = classify(f, eps).index
            if q not in allowed:
                return f"{f}, eps={eps} classifies as X{q}"


def suite_distinct():
    for t in ALL_TYPES:
        for eps in ((1, -1) if t.kind == "X" else (1,)):
            table = build_table(t, eps, 100)
            if table.distinct_count != 100:
                return f"{t}, eps={eps}: only {table.distinct_count} distinct |eta| in 100 rows"
    for r, row in enumerate(build_table(DiffeoType("X", 4), 1, 100).rows):
        if row.eta_magnitude != 4 * r + 1:
            return f"X4 row {r}: |eta| = {row.eta_magnitude}, expected {4 * r + 1}"
    for q in (0, 2, 4, 6, 8):
        for m, row in enumerate(build_table(DiffeoType("Q", q), 1, 100).rows):
            if row.eta.value != Fraction(-q, 4) - 4 * m:
                return f"Q{q} row {m}: eta = {row.eta}"


def suite_spin():
    for f in bundle_sweep():
        rep = w2_report(f)
        if not (rep.base_w2_nonzero and rep.N_spin and not rep.X_spin):
            return f"{f}: {rep}"


def suite_ring_axioms(n=1000):
    rng = random.Random(SEED)
    for name in ("caseI", "caseII"):
        B = builtin(name)
        for _ in range(n):
            a, b, c = (random_element(rng, B) for _ in range(3))
            if a * b != b * a:
                return f"{name}: ab != ba for a={a}, b={b}"
            if (a * b) * c != a * (b * c):
                return f"{name}: (ab)c != a(bc) for a={a}, b={b}, c={c}"
            if a * (b + c) != a * b + a * c:
                return f"{name}: a(b+c) != ab+ac for a={a}, b={b}, c={c}"
            if reduce(reduce(a)) != reduce(a):
                return f"{name}: reduce not idempotent on {a}"
            q = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
            if pair_fundamental(a + b) != pair_fundamental(a) + pair_fundamental(b) \
                    or pair_fundamental(a * q) != q * pair_fundamental(a):
                return f"{name}: pairing not linear at a={a}, b={b}, q={q}"


def suite_series(n=1000):
    rng = random.Random(SEED + 1)
    for name in ("caseI", "caseII"):
        B = builtin(name)
        for _ in range(n):
            c = random_degree2(rng, B)
            if series.exp_half(c) * series.exp_half(-c) != 1:
                return f"{name}: exp(c/2)exp(-c/2) != 1 for c={c}"
            if series.inv_cosh_half(c) != series.inv_cosh_half(-c):
                return f"{name}: 1/cosh not even at c={c}"
            p1 = base_p1(name)
            if series.local_contribution_codim2(B.zero(), c, p1) != \
                    series.local_contribution_codim2(B.zero(), -c, p1):
                return f"{name}: local contribution not even at c={c}"


def suite_canonical(n=1000):
    rng = random.Random(SEED + 2)
    for _ in range(n):
        x = rng.randint(-10**6, 10**6)
        v = canonical(x)
        if not 0 <= v <= 8 or v != canonical(-x) or v != canonical(x + 16):
            return f"canonical({x}) = {v}"


SUITES = [
    ("ring presentations", suite_presentations),
    ("intersection signatures", suite_signatures),
    ("pairing closed form", suite_pairing_closed_form),
    ("eta closed-form vs fixed-point", suite_eta),
    ("bordism proof formula vs statement", suite_bordism),
    ("classification round-trip", suite_round_trip),
    ("classification exhaustiveness", suite_exhaustive),
    ("moduli distinctness", suite_distinct),
    ("spin checks", suite_spin),
    ("ring axioms", suite_ring_axioms),
    ("series identities", suite_series),
    ("bordism canonicalization", suite_canonical),
]


def run_all(out=print):
    """Run every suite, printing one line each.  Returns True iff all pass."""
    first = None
    for name, suite in SUITES:
        try:
            problem = suite()
        except Exception as exc:  # a crash is a failure with a message, not a traceback
            problem = f"{type(exc).__name__}: {exc}"
        out(f"{'PASS' if problem is None else 'FAIL'}  {name}")
        if problem is not None and first is None:
            first = (name, problem)
    if first is not None:
        out(f"first counterexample ({first[0]}): {first[1]}")
    return first is None
