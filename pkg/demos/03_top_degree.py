"""Top Hochschild degree of A_n: the closed form against the Koszul complex.

For odd n the last differential has rank top_image_rank(n, x, y). This is 2
only when every parameter is 1, so a constant correction is not enough.
"""

from stratakit import build_An, hh_koszul, hh_top_formula, top_image_rank

cases = [(3, (1, 1), (1,)), (3, (1, 1), (2,)), (3, (2, 1), (2,)), (4, (1, 2), (2, 1)), (5, (2, 1, 2), (1, 2))]
for n, xs, ys in cases:
    koszul = hh_koszul(build_An(n, xs, ys))[n]
    formula = hh_top_formula(n, xs, ys)
    rank = top_image_rank(n, xs, ys) if n % 2 else "-"
    print(f"n={n} xs={xs} ys={ys}: HH^{n} koszul={koszul} formula={formula} image rank={rank}")
