"""Products of q-binomial polynomials expand with coefficients in N[q]."""

from qintval.rq_core import QBinExpansion, expand, multiply, qbinom_poly, specialize_q1, struct_const

for i, j in [(1, 1), (2, 1), (3, 3)]:
    print(f"qbinom(x,{i}) * qbinom(x,{j}):")
    for k, c in sorted(struct_const(i, j).items()):
        print(f"  k={k}: {c}")

# the same thing by interpolating the product polynomial
P = qbinom_poly(3) * qbinom_poly(2)
print("interpolation agrees:", expand(P) == QBinExpansion(struct_const(3, 2)))

# at q = 1 these become the classical constants k!/((k-i)!(k-j)!(i+j-k)!)
print("q=1 specialisation of (2,2):", specialize_q1(multiply(QBinExpansion({2: 1}), QBinExpansion({2: 1}))))
