"""Gaussian binomials, their partition counts and the q-Lucas reduction."""

from qintval.combinat import count_subspaces, enumerate_in_rectangle
from qintval.exactalg import cyclotomic, reduce_mod_cyclotomic
from qintval.qnum import q_binomial, q_int, q_lucas

print("[5]_q  =", q_int(5))
print("[-3]_q =", q_int(-3))

f = q_binomial(6, 3)
print("[6 choose 3]_q =", f)
print("partitions in a 3x3 box:", enumerate_in_rectangle(3, 3) == f)
print("at q=1:", f(1), " at q=2:", f(2), " 3-dim subspaces of F_2^6:", count_subspaces(2, 6, 3))

# reduction at a root of unity only depends on the base-d digits
dec, value = q_lucas(11, 5, 3)
print(f"[11 choose 5]_q mod Phi_3 = {value}  (digits {dec.n_prime},{dec.n0} / {dec.m_prime},{dec.m0})")
print("direct reduction agrees:", reduce_mod_cyclotomic(q_binomial(11, 5), cyclotomic(3)) == value)
