"""Classical Frobenius mod p and the quantum Frobenius mod Phi_d."""

from qintval.frobenius import ClassicalExpansionModP, ExpansionModPhiD, frob_p, qfrob_d, qfrob_d_inverse
from qintval.rq_core import classical_struct_const

a = ClassicalExpansionModP(3, {1: 1, 2: 2})
print("Psi_3 of binom(x,1) + 2 binom(x,2):", frob_p(a).coeffs)
print("multiplicative:", frob_p(a * a) == frob_p(a) * frob_p(a))

# binom(x,1)^2 = binom(x,1) + 2 binom(x,2), sent to qbinom(x,2) + 2 qbinom(x,4)
image = qfrob_d(classical_struct_const(1, 1), 2)
square = ExpansionModPhiD(2, {2: 1}) * ExpansionModPhiD(2, {2: 1})
print("Psi_2(binom(x,1)^2):", {k: str(c) for k, c in image.coeffs.items()})
print("qbinom(x,2)^2 mod Phi_2:", {k: str(c) for k, c in square.coeffs.items()})
print("one-sided inverse:", {k: str(c) for k, c in qfrob_d_inverse(image).coeffs.items()})
