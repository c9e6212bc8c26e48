"""
Whitehead torsion of t -> t^2
=============================

The power map L(1,7) -> L(2,7) is a homotopy equivalence. Its torsion is
the quotient of the two Reidemeister torsions, and its Dennis trace is
tau^-1 dtau in the 1-forms over F_7.
"""

from string_torsion import (
    LensSpace,
    d_log,
    dennis_trace,
    whitehead_of_power_equiv,
)

tau = whitehead_of_power_equiv(LensSpace(1), LensSpace(2), 2)
print("tau    =", tau)
print("tau^-1 =", tau.inverse_rep)
print("check  :", tau.rep * tau.inverse_rep)

omega = d_log(tau.rep)
print("dlog   =", omega.format("dt"))
print("trace  =", dennis_trace(tau), "(mod dt/t)")

# going back with t -> t^4 gives the inverse class, up to relabelling
back = whitehead_of_power_equiv(LensSpace(2), LensSpace(1), 4)
print("back   =", back)
