"""Weight-preserving bijection behind the positive structure constants."""

from qintval.combinat import Partition, bijection_trace, qbinommult_bijection, qbinommult_inverse

lam = Partition([7, 6, 5, 5, 2, 2, 1])
mu = Partition([8, 7, 6, 4, 2, 1])
for line in bijection_trace(14, 7, 6, lam, mu):
    print(line)

w = qbinommult_bijection(14, 7, 6, lam, mu)
print("weight:", lam.size + mu.size, "=", w.weight(7, 6))
print("inverse recovers the pair:", qbinommult_inverse(14, 7, 6, w) == (lam, mu))
