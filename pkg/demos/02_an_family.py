"""The A_n family: Cartan matrices from generalised Fibonacci numbers and certificates."""

from stratakit import build_An, cartan_formula, cartan_matrix, certify, fibonacci

xs, ys = (1, 2, 1), (2, 1)
print("F_0..F_6:", fibonacci(xs, ys, 6).values)

for n in range(1, 6):
    A = build_An(n, xs, ys)
    counted = cartan_matrix(A).entries
    print(f"A_{n}: cartan={counted} formula agrees: {counted == cartan_formula(n, xs, ys)}")

print()
for n in range(1, 6):
    cert = certify(build_An(n, xs, ys))
    print(f"A_{n}: {cert.verdict.value:32s} gldim={cert.global_dimension} witness={cert.witness}")
