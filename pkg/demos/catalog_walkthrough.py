#!/usr/bin/env python3
# Closed forms for paths and cycles against the exact solver.
from wdom import catalog as cat
from wdom.cli import emit_table

for family, key in (("path", "221"), ("path", "s100"), ("cycle", "222"), ("cycle", "s111")):
    print(f"{family} {key}")
    for row in emit_table(family, key, range(4, 12), check=True):
        print(f"  n={row['n']:2d}  formula={row['formula']!s:>4}  solver={row['solver']!s:>4}  {row['note']}")

rows = cat.catalog_rows()
print(len(rows), "catalog rows; first:", rows[0])
