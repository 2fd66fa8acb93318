#!/usr/bin/env python3
"""Spectra of the constant-band Hermitian matrices.

The matrix family has diagonal c, every upper entry w = a+bi and every
lower entry its conjugate.  This script shows the closed-form cotangent
eigenvalues against the package's independent Jacobi eigensolver, the two
characteristic-polynomial routes, Newton-Girard power sums, the exact
cotangent power-sum identities, and the trace-method approximants of
zeta(2k), Bernoulli, tangent and zigzag numbers.
"""

import math

import numpy as np

from freetan import (
    StructuredMatrixSpec,
    anticommutator_spectrum,
    build,
    charpoly,
    closed_form_eigenvalues,
    cotangent_sum_2m,
    cotangent_sum_shifted,
    hermitian_eigenvalues,
    newton_power_sums,
    trace_method_constants,
    trace_power,
)

print("=== Closed-form eigenvalues vs Jacobi rotations ===")
for (a, b) in ((0.0, 1.0), (0.6, 0.8)):
    for n in (2, 3, 8, 32):
        spec = StructuredMatrixSpec(n, 0.0, complex(a, b))
        closed = closed_form_eigenvalues(spec)
        direct = hermitian_eigenvalues(build(spec))
        print(
            f"  a={a:4.1f} b={b:3.1f} n={n:3d}: max|closed - jacobi| ="
            f" {np.max(np.abs(closed - direct)):.2e}"
        )

print()
print("=== The n=3 commutator matrix in detail ===")
spec3 = StructuredMatrixSpec(3, 0.0, 1j)
print("  matrix:\n", build(spec3))
print("  eigenvalues:", closed_form_eigenvalues(spec3), " (cot multiples of sqrt(3))")
print("  charpoly at sqrt(3), closed form :", charpoly(spec3, math.sqrt(3)))
print("  charpoly at sqrt(3), recurrence  :", charpoly(spec3, math.sqrt(3), "recurrence"))

print()
print("=== Newton-Girard power sums from binomial coefficients ===")
spec = StructuredMatrixSpec(8, 0.0, 0.6 + 0.8j)
sums = newton_power_sums(spec, 6)
for r in range(1, 7):
    print(f"  s_{r}: newton {sums[r-1]:+.10f}   trace {trace_power(spec, r):+.10f}")

print()
print("=== Cotangent power sums: direct trig vs exact closed form ===")
print("  sum cot^(2m)((2k+1)pi/2n), k = 0..n-1")
for n, m in ((5, 1), (12, 3), (50, 8)):
    direct, closed = cotangent_sum_2m(n, m)
    print(f"  n={n:3d} m={m}: direct {direct:.6e}  closed {closed:.6e}")
print("  quarter-shifted variant, sum cot^m((4k-1)pi/4n)")
for n, m in ((5, 1), (12, 3), (50, 6)):
    direct, closed = cotangent_sum_shifted(n, m)
    print(f"  n={n:3d} m={m}: direct {direct:.6e}  closed {closed:.6e}")

print()
print("=== The anticommutator degeneration (w = 1) ===")
print("  spectrum n=6:", anticommutator_spectrum(6))
for r in (1, 2, 4):
    vals = [float(np.sum(anticommutator_spectrum(n) ** r)) / n**r for n in (100, 1000)]
    print(f"  normalized trace power r={r}: n=100 -> {vals[0]:.5f}, n=1000 -> {vals[1]:.5f}")
print("  (limit cumulants 0 for r=1 and 1 for r>=2: free Poisson)")

print()
print("=== Trace-method approximants at n = 2000 ===")
targets = {
    1: ("zeta(2)", math.pi**2 / 6, "B_2", 1 / 6, "T_1", 1, "E_1", 1),
    2: ("zeta(4)", math.pi**4 / 90, "B_4", -1 / 30, "T_3", 2, "E_2", 1),
    3: ("zeta(6)", math.pi**6 / 945, "B_6", 1 / 42, "T_5", 16, "E_3", 2),
}
for k, (zn, zv, bn, bv, tn, tv, en, ev) in targets.items():
    got = trace_method_constants(2000, k)
    print(
        f"  k={k}: {zn} ~ {got['zeta2k']:.8f} (exact {zv:.8f});"
        f" {bn} ~ {got['b2k']:+.8f} (exact {bv:+.8f})"
    )
    print(
        f"        {tn} ~ {got['t2k1']:.8f} (exact {tv});"
        f" {en} ~ {got['e_k']:.8f} (exact {ev})"
    )
