"""The bar involution q -> 1/q, x -> -qx and the shift x -> qx + 1."""

from qintval.rq_core import Basis, QBinExpansion, bar, convert_basis, eval_at_qint, membership, shift, synthesize

E = QBinExpansion
for k in range(1, 4):
    print(f"bar qbinom(x,{k}) =", {m: str(c) for m, c in bar(E({k: 1})).items()})

e = E({2: 1})
print("S qbinom(x,2) =", {m: str(c) for m, c in shift(e, 1).items()})
print("S^-1 qbinom(x,2) =", {m: str(c) for m, c in shift(e, -1).items()})
print("shift moves evaluation points:", all(eval_at_qint(shift(e, 3), n) == eval_at_qint(e, n + 3) for n in range(-4, 4)))

# bar S = S^-1 bar
print("bar S == S^-1 bar:", bar(shift(e, 1)) == shift(bar(e), -1))

# the bar of a basis element lands in both R_q^+ and R_q^-
m = membership(synthesize(bar(E({3: 1}))))
print("bar qbinom(x,3) in R+ and R-:", m.in_plus, m.in_minus)

print("standard {1:1} in the bar basis:", {k: str(c) for k, c in convert_basis(E({1: 1})).items()})
print("and back:", convert_basis(convert_basis(E({1: 1}, Basis.BAR))) == E({1: 1}, Basis.BAR))
