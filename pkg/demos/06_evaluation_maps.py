"""Ring maps from R_q^+ to fields: q -> 0, q -> a root of unity, q -> generic kappa."""

from math import comb

from qintval.evalmaps import FieldSpec, HomSpec, apply_hom, build_hom, std_eval
from qintval.exactalg import LaurentPoly
from qintval.rq_core import QBinExpansion

E = QBinExpansion
Q = FieldSpec.rationals()

h0 = build_hom(HomSpec.q_zero(Q, 2))
print("q -> 0, k=2:", [str(apply_hom(h0, E({m: 1}))) for m in range(5)])

# over F_7 with a primitive cube root of unity and a 7-adic t
root = build_hom(HomSpec.root_of_unity(FieldSpec.prime(7), 3, 1, 10))
print("q -> omega in F_7:", [str(root.basis_value(m)) for m in range(8)])
print("matches std evaluation at n=10:", all(root.basis_value(m) == std_eval(10, root.q_image, E({m: 1})) for m in range(8)))

# q -> 1/2, x -> 2: the images of q^C(k+1,2) qbinom(x,k) are 1/prod(2^i - 1)
g = build_hom(HomSpec.generic(Q, "1/2", 2))
for k in range(1, 5):
    print(f"k={k}:", apply_hom(g, E({k: LaurentPoly.monomial(comb(k + 1, 2))})))
