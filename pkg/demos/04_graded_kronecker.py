"""Graded Kronecker quivers: the two-term complex against the closed form."""

from stratakit import build_Lambda, hh_graded_kronecker, hh_kronecker_formula, lambda_for_B

for degrees in ([], [0], [0, 1], [-1, 0, 2], [2, 2, -2]):
    direct = hh_graded_kronecker(degrees)
    print(f"degrees={degrees}: HH={direct.dims} closed form agrees: {direct == hh_kronecker_formula(degrees)}")

print()
print("graded quiver attached to B(2,1):", [a.degree for a in lambda_for_B(2, 1).arrows])
print("vertices of Lambda(0,1):", build_Lambda([0, 1]).vertices)
