"""Hasse-Witt invariants and the determinant-surface constant c_n(a).

For symmetric integral matrices with fixed determinant a, the expected
count of SL_n(Z)-orbits twists the Hardy-Littlewood product by a
Hasse-Witt character; the correction constant c_n(a) is built from local
density ratios and an archimedean limit.

Run:  python demos/05_hasse_witt.py
"""

from fractions import Fraction

from normcensus.hassewitt import (
    arch_h_limit,
    c_n_a,
    diagonalize,
    hasse_invariant,
    isometry_count_mod8,
)

L_MINUS = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
L_PLUS = [[2, 1, 0], [1, 2, 0], [0, 0, Fraction(1, 3)]]

print("== the two determinant-one classes over Z_2 ==")
for name, M in (("L-", L_MINUS), ("L+", L_PLUS)):
    space = diagonalize(M)
    diag = ", ".join(str(x) for x in space.diagonal)
    print(f"{name}: diagonal <{diag}>  h at 2 = {hasse_invariant(space, 2):+d}")

print("\n== archimedean limits of h ==")
for n in (3, 4, 5, 6, 7):
    row = []
    for sign in (1, -1):
        try:
            row.append(f"sign {sign:+d}: {arch_h_limit(n, sign):+d}")
        except ValueError:
            row.append(f"sign {sign:+d}: undefined")
    print(f"n={n}: " + "   ".join(row))

print("\n== c_n(a) ==")
print(f"c_3(1)  = {c_n_a(3, 1).c_value}   (built-in 2-adic ratio -1/2)")
print(f"c_6(5)  = {c_n_a(6, 5).c_value}   (archimedean limit 0)")
print(f"c_5(1, rho_2=1/3) = {c_n_a(5, 1, {2: Fraction(1, 3)}).c_value}")

# counting isometries mod 8 separates the two classes; the count ratio
# 3 matches the local density ratio behind c_3(1)
print("\n== isometries mod 8 ==")
three_lplus = [[6, 3, 0], [3, 6, 0], [0, 0, 1]]
n_minus = isometry_count_mod8(L_MINUS)
n_plus = isometry_count_mod8(three_lplus)
print(f"#Iso(L-) = {n_minus},  #Iso(3*L+) = {n_plus},  ratio = {n_plus / n_minus}")
