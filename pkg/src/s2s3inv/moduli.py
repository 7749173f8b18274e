"""Finite tables of representatives of one diffeomorphism type with their eta
invariants.  Pairwise distinct eta values mean distinct path components of
the moduli space of nonnegatively curved metrics."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .classification import DiffeoType, classify, representatives
from .invariants import BordismClass, FamilyDescriptor, bordism_class, eta_via_fixed_points
from .series import SignAmbiguousRational

CSV_COLUMNS = ("family", "k", "l", "d", "epsilon", "bordism", "eta_num", "eta_den",
               "eta_sign_known", "diffeo_type")


def fmt_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Row:
    descriptor: FamilyDescriptor
    bordism: BordismClass
    eta: SignAmbiguousRational

    @property
    def eta_magnitude(self):
        return self.eta.magnitude

    @property
    def eta_sign_known(self):
        return self.eta.sign_known


@dataclass(frozen=True)
class ModuliTable:
    diffeo_type: DiffeoType
    epsilon: Optional[int]  # None for Q types, whose invariants ignore epsilon
    rows: List[Row]

    @property
    def distinct_count(self):
        return len({row.eta_magnitude for row in self.rows})

    def records(self):
        out = []
        for row in self.rows:
            f = row.descriptor
            eta = row.eta.value if row.eta.sign_known else row.eta.magnitude
            out.append({
                "family": f.family,
                "k": f.k,
                "l": f.l,
                "d": f.d,
                "epsilon": self.epsilon,
                "bordism": row.bordism.canonical,
                "eta_num": eta.numerator,
                "eta_den": eta.denominator,
                "eta_sign_known": row.eta.sign_known,
                "diffeo_type": str(self.diffeo_type),
            })
        return out


def _row(args):
    f, eps, t = args
    # re-validate so a stale type tag can never reach the output
    got = classify(f, eps)
    if got != t:
        raise AssertionError(f"{f} classifies as {got}, not {t}")
    return Row(f, bordism_class(f, eps), eta_via_fixed_points(f))


def build_table(t, eps, count, allow_negative=False, parallel=False):
    reps = representatives(t, eps, count, allow_negative)
    jobs = [(f, eps, t) for f in reps]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            rows = list(pool.map(_row, jobs, chunksize=max(1, len(jobs) // 16)))
    else:
        rows = [_row(j) for j in jobs]
    rows.sort(key=lambda row: row.descriptor.sort_key())
    return ModuliTable(t, None if t.kind == "Q" else eps, rows)


def to_csv(tables):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for table in tables:
        for rec in table.records():
            writer.writerow({k: ("" if v is None else str(v).lower() if isinstance(v, bool) else v)
                             for k, v in rec.items()})
    return buf.getvalue()


def to_json(tables):
    records = [rec for table in tables for rec in table.records()]
    return json.dumps(records, indent=2) + "\n"


def to_text(tables):
    lines = []
    for table in tables:
        eps = "" if table.epsilon is None else f", eps={table.epsilon:+d}"
        lines.append(f"type {table.diffeo_type}{eps}: {len(table.rows)} rows, "
                     f"{table.distinct_count} distinct |eta|")
        lines.append(f"  {'manifold':<24} {'[P]':>4} {'eta':>12}")
        for row in table.rows:
            lines.append(f"  {str(row.descriptor):<24} {row.bordism.canonical:>4} {str(row.eta):>12}")
    return "\n".join(lines) + "\n"
