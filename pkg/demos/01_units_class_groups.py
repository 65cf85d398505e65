"""Tour of the field-level invariants: fundamental units, narrow class
groups, and the prime classes that drive the solvability criterion.

Run:  python demos/01_units_class_groups.py
"""

from normcensus.classgroup import characters, class_group, frobenius_class, sign_class
from normcensus.quadfield import field_data

print("== fundamental units ==")
for d in (2, 3, 5, 10, 13, 34):
    f = field_data(d)
    print(
        f"d={d:3d}  D={f.D:4d}  eps0={str(f.eps0):>16s}  N(eps0)={f.norm_eps0:+d}"
        f"  eps={str(f.eps):>16s}  log eps={f.log_eps:.6f}"
    )

# The narrow class group keeps totally-positive principal ideals separate
# from the rest, so it sees the sign obstruction that the ordinary class
# group forgets.
print("\n== narrow class groups ==")
for d in (2, 10, 15, 34):
    f = field_data(d)
    G = class_group(f.D)
    shape = " x ".join(f"Z/{o}" for _, o in G.decomposition) or "trivial"
    print(f"d={d:3d}  h+={G.h_plus}  structure: {shape}")
    print(f"        representative forms: {', '.join(str(g) for g in G.forms)}")

print("\n== prime classes for d = 34 ==")
G = class_group(136)
print(f"sign class order: {G.order_of(sign_class(G))}")
for p in (2, 3, 5, 17, 19, 43):
    idx = frobenius_class(G, p)
    print(f"sigma_{p}: class {G.forms[idx]}, order {G.order_of(idx)}")

print("\n== characters ==")
for chi in characters(G):
    values = [chi.exponent(i) for i in range(G.h_plus)]
    print(f"labels {chi.labels}: exponents {values} (value order {chi.value_order()})")
