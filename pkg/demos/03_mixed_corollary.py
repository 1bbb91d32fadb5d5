"""
Which reading of the mixed-product formula holds?
=================================================

For R1 x ... x Rn x F1 x ... x Fm (each Ri with a unique nontrivial ideal)
two readings compete: 3^n 2^m - n - 3 and 3^n 2^m - (n + m) - 3.
"""

from pisdim.formulas import COR_MIXED_ALT, COR_MIXED_PRINTED
from pisdim.report import format_sweep, parse_range, verify_family

rows = verify_family("mixed", parse_range("n=1..3,m=1..3"))
print(format_sweep(rows))

# Only (n, m) = (1, 1) follows the first reading; the closed neighborhoods
# of M x F and (0) x F coincide there, which shrinks the reduced graph.
for row in rows:
    n, m = row.ring_class.n, row.ring_class.m
    print(f"n={n} m={m}: sdim {row.sdim:>3}  ->  {row.adjudicated}")

# %%
# Residuals of both readings (predicted minus computed)
print(f"\n{'(n,m)':>6} {COR_MIXED_PRINTED:>20} {COR_MIXED_ALT:>16}")
for row in rows:
    resid = {p.formula_id: p.predicted - row.sdim for p in row.predictions if p.formula_id in (COR_MIXED_PRINTED, COR_MIXED_ALT)}
    n, m = row.ring_class.n, row.ring_class.m
    print(f"{f'({n},{m})':>6} {resid[COR_MIXED_PRINTED]:>20} {resid[COR_MIXED_ALT]:>16}")
