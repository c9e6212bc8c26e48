"""
Delta f(x) against f(Delta x) + f(x * dlog tau)
===============================================

For x = [rho_{1,0}] on L(1,7) the two sides differ by t^2 dt/t, a term
that dies in relative homology. Modulo Delta(K) every component agrees.
"""

from string_torsion import LensSpace, Quotient, RhoClass, check_transformation
from string_torsion.string_ops import minimal_m

source, target = LensSpace(1), LensSpace(2)

check = check_transformation(source, target, 2, RhoClass(1, 0), Quotient.RELATIVE)
print("f(x)      =", check.image)
print("LHS       =", check.lhs)
print("RHS       =", check.rhs)
print("RHS - LHS =", check.residual)
print("relative  =", check.reduced_residual, "->", "PASS" if check.passed else "FAIL")

for l in range(1, 7):
    rho = RhoClass(l, minimal_m(source, l))
    c = check_transformation(source, target, 2, rho, Quotient.MOD_DELTA_K)
    print(f"{rho} -> {c.image}: {'PASS' if c.passed else 'FAIL'}")
