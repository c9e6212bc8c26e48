"""
The torsion map on L(1,7) and L(2,7)
====================================

Each component t^l of the free loop space is sent to
(t^l - t2^l) dlog R, with R the homogenized Reidemeister torsion.
"""

from string_torsion import LensSpace, Quotient, analyze_kernel, torsion_map

# relative representatives, as printed by `string-torsion table`
for k in (1, 2):
    lens = LensSpace(k)
    print(lens, "r =", lens.r)
    for l in range(lens.p):
        print(f"  t^{l} -> {torsion_map(lens, l, Quotient.RELATIVE)}")

# modulo Delta(K) the lines reduce further; zero lines mark dead components
for k in (1, 2):
    report = analyze_kernel(LensSpace(k))
    print(report.lens, "zero set", sorted(report.zero_set), "ranks", report.rank_multiset())
