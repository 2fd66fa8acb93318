#!/usr/bin/env python3
"""The limit laws and their cumulants.

The generalized tangent law with parameters (a, b) on the upper unit
half-circle has R-transform tan(bz)/(b - a tan(bz)).  This script
evaluates the transform, the exact limit cumulants by three independent
formulas, the finite-size pre-limit transform and its 1/n convergence,
the Marchenko-Pastur degeneration at b -> 0, and the classical
counterpart law whose cumulants coincide with the free ones.
"""

import math
from fractions import Fraction

from freetan import (
    LawParams,
    bp_classical_cumulant_direct,
    bp_classical_cumulants,
    finite_n_cumulants,
    finite_n_r_transform,
    limit_cumulants,
    marchenko_pastur_limit_check,
    moments_of_limit,
    r_transform,
    tangent_law_cumulants,
    zigzag_law_cumulants,
)

tangent = LawParams.tangent()

print("=== R-transform of the tangent law (a=0, b=1): R(z) = tan z ===")
for z in (0.1, 0.5, 1.0):
    print(f"  R({z}) = {r_transform(tangent, z).real:.12f}   tan({z}) = {math.tan(z):.12f}")

print()
print("=== Limit cumulants, three formulas cross-checked per entry ===")
cums = limit_cumulants(tangent, 10)
print("  tangent law  :", [str(e) for e in cums.exact])
print("  zigzag law   :", [str(c) for c in zigzag_law_cumulants(10)])
mixed = limit_cumulants(LawParams.from_rational(Fraction(3, 5), Fraction(4, 5)), 8)
print("  (3/5, 4/5)   :", [str(e) for e in mixed.exact])

print()
print("=== Moments via the noncrossing-partition transform ===")
print("  tangent law m_1..m_8:", [str(m) for m in moments_of_limit(tangent, 8)])

print()
print("=== Finite-size transform converging at rate 1/n ===")
print("  K_4(Q_n) for the tangent configuration:")
k4_lim = float(cums.exact[3])
for n in (10, 100, 1000, 10000):
    k4 = finite_n_cumulants(tangent, n, 4)[3]
    print(f"  n={n:<6d} K_4 = {k4:.10f}   n*|K_4 - 1/3| = {n*abs(k4 - k4_lim):.5f}")
print("  R_n(0.3) along n:")
for n in (10, 1000, 100000):
    print(f"  n={n:<7d} {finite_n_r_transform(tangent, n, 0.3).real:.10f}"
          f"   (limit tan(0.3) = {math.tan(0.3):.10f})")

print()
print("=== Degeneration to the free Poisson law as b -> 0 ===")
for b in (1e-1, 1e-2, 1e-3):
    general, mp = marchenko_pastur_limit_check(b, 0.5)
    print(f"  b={b:7.0e}: R_general(0.5) = {general.real:.10f}, z/(1-z) = {mp.real:.1f},"
          f" |diff| = {abs(general - mp):.3e}")
print("  (the difference scales like b^2)")

print()
print("=== Classical counterpart: scaled symmetric Skellam series ===")
print("  closed-form classical cumulants equal the free tangent cumulants:")
closed = bp_classical_cumulants(5)
free = tangent_law_cumulants(10)
for k in range(1, 6):
    print(f"  c_{2*k:<2d} = {closed[k-1]}   K_{2*k} = {free[2*k-1]}"
          f"   equal: {closed[k-1] == free[2*k-1]}")
print("  truncated direct sums (k=2):")
for n_terms in (10, 100, 1000):
    approx = bp_classical_cumulant_direct(2, n_terms)
    print(f"  {n_terms:5d} odd terms: {approx:.12f}  (exact 1/3)")
