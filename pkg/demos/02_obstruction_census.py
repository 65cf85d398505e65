"""The solvability census for x^2 - 34 y^2 = m.

Local solvability at every prime is necessary but not sufficient: a
character sum c_m over the narrow class group must also be nonzero.  The
script walks the famous failures m = -1, -2 (solvable in every Z_p and in
R, yet insolvable in Z) and checks the closed-form criterion against the
general machinery.

Run:  python demos/02_obstruction_census.py
"""

from normcensus.census import equation_spec, pell34_criterion, verdict

print("== the m = -1 and m = -2 obstructions ==")
for m in (-1, -2):
    v = verdict(equation_spec(34, m))
    local = ", ".join(f"p={p}: {'ok' if ok else 'fail'}" for p, ok in sorted(v.locally_solvable.items()))
    print(f"m={m}: local [{local}]  c_m={v.c_m}  solvable={v.solvable}")

print("\n== a census strip ==")
print(" m   c_m  solvable  witness")
for m in range(-12, 13):
    if m == 0:
        continue
    v = verdict(equation_spec(34, m))
    w = f"({v.witness[0]},{v.witness[1]})" if v.witness else "-"
    print(f"{m:3d}  {v.c_m:3d}  {str(v.solvable):8s}  {w}")

print("\n== closed form vs character sum ==")
disagreements = 0
for m in range(-200, 201):
    if m == 0:
        continue
    a = pell34_criterion(m)
    b = verdict(equation_spec(34, m))
    if (a.solvable, a.c_m) != (b.solvable, b.c_m):
        disagreements += 1
print(f"checked |m| <= 200: {disagreements} disagreements")

r = pell34_criterion(33)
print(f"\nm=33 decomposition: m1={r.m1}, c={r.c_m}, witness={r.witness}")
