"""
Counting self-intersections numerically
=======================================

rho_{l,m} meets itself on the two exceptional circles. We find the
intersection times by brute force on a grid, then compare with the
closed coproduct formula and plot |rho(s, z) - g^j z| on K2.
"""

import numpy as np

from string_torsion import LensSpace, RhoClass, coproduct_rho
from string_torsion.oracle import act, deck, enumerate_locus, oracle_coproduct

lens, rho = LensSpace(2), RhoClass(3, 1)
k1, k2 = enumerate_locus(lens, rho)
print("K2 times:", [str(t) for t in k2.times], "weight", k2.weight)
print("K1 times:", [str(t) for t in k1.times], "weight", k1.weight)
print("oracle  =", oracle_coproduct(lens, rho))
print("formula =", coproduct_rho(lens, rho))

# distance to each deck translate along the first loop
z = np.array([1 + 0j, 0j])
s = np.linspace(0, 1 / lens.p, 2000)
N = lens.winding(rho.l, rho.m)
dist = np.array([[np.abs(act(rho.l, N, si, z) - deck(lens, j, z)).max() for si in s] for j in range(lens.p)])

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for j, row in enumerate(dist):
        plt.plot(s, row, label=f"j = {j}")
    plt.xlabel("s")
    plt.ylabel("|rho(s, z) - g^j z|")
    plt.legend()
    plt.savefig("oracle_K2.png")
    print("wrote oracle_K2.png")
