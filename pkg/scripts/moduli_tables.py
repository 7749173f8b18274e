"""Write one CSV per diffeomorphism type listing representatives and eta invariants.

    python scripts/moduli_tables.py --count 200 --out tables/
"""
import argparse
from pathlib import Path

from s2s3inv.classification import ALL_TYPES
from s2s3inv.moduli import build_table, to_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--out", type=Path, default=Path("tables"))
    ap.add_argument("--parallel", action="store_true")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for t in ALL_TYPES:
        eps_list = (1, -1) if t.kind == "X" else (1,)
        tables = [build_table(t, eps, args.count, parallel=args.parallel) for eps in eps_list]
        path = args.out / f"{t}.csv"
        path.write_text(to_csv(tables), encoding="utf-8")
        counts = ", ".join(f"{tb.distinct_count}/{len(tb.rows)}" for tb in tables)
        print(f"{t}: distinct |eta| {counts} -> {path}")


if __name__ == "__main__":
    main()
