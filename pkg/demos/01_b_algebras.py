"""Two-vertex algebras B(x, y): Cartan data, Hochschild profiles, derived classes."""

from stratakit import b_derived_equivalent, build_B, cartan_matrix, hh_b_formula, hh_koszul

for x, y in [(1, 1), (2, 1), (1, 2), (3, 2)]:
    B = build_B(x, y)
    computed = hh_koszul(B)
    closed = hh_b_formula(x, y)
    print(f"B({x},{y}) cartan={cartan_matrix(B).entries} HH={computed.dims} closed form agrees: {computed == closed}")

print()
print("B(2,3) ~ B(3,2):", b_derived_equivalent(2, 3, 3, 2))
print("B(2,3) ~ B(1,3):", b_derived_equivalent(2, 3, 1, 3))
