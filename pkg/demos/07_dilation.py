"""The dilation D_m with D_m P([n]_q) = P([mn]_q), and where positivity breaks."""

from math import comb

from qintval.combinat import count_matrices
from qintval.rq_core import QBinExpansion, dilate, specialize_q1

d = dilate(2, QBinExpansion({3: 1}))
for k, c in d.items():
    print(f"k={k}: {c}")
delta = d.get(3).to_laurent()
print("negative coefficient in delta_{2,3,3}:", min(delta.coeffs) < 0)

# at q = 1 the coefficients count 0-1 matrices
m, i = 3, 2
at_one = specialize_q1(dilate(m, QBinExpansion({i: 1})))
counted = {k: sum(count_matrices(j, k, i) * comb(m, j) for j in range(m + 1)) for k in range(7)}
print("delta(1):", at_one)
print("matrix counts:", {k: v for k, v in counted.items() if v})
