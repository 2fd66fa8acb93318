#!/usr/bin/env python3
"""Exact combinatorics of the tangent family.

Walks through the integer/rational sequences behind the limit laws:
tangent and zigzag numbers (two independent computation routes), signed
arctangent numbers, higher-order tangent numbers, derivative polynomials,
and the closed-form identity linking tangent polynomials to zigzag
numbers.  Everything here is exact arithmetic; nothing is floated.
"""

from fractions import Fraction

from freetan import (
    arctangent_number,
    arctanh_number,
    bernoulli,
    derivative_polynomial,
    higher_tangent_number,
    tangent_numbers,
    tangent_polynomial,
    zigzag_numbers,
    zigzag_sum_identity,
)


def poly_str(p):
    terms = []
    for k, c in enumerate(p.coeffs):
        if c:
            terms.append(f"{c}" if k == 0 else (f"{c}*x^{k}" if k > 1 else f"{c}*x"))
    return " + ".join(terms) or "0"


print("=== Bernoulli numbers B_2k (even indices) ===")
for k in range(1, 7):
    print(f"  B_{2*k:<2d} = {bernoulli(k)}")

print()
print("=== Tangent numbers: tan z = sum T_n z^n/n! ===")
print("  (each value is computed twice: from the Bernoulli-number formula")
print("   and from the boustrophedon recurrence; the call fails loudly if")
print("   the two ever disagree)")
tn = tangent_numbers(8)
for k, t in enumerate(tn, start=1):
    print(f"  T_{2*k-1:<2d} = {t}")

print()
print("=== Zigzag numbers: tan z + sec z = sum E_n z^n/n! ===")
print(" ", zigzag_numbers(10))
print("  odd-index entries reproduce the tangent numbers above")

print()
print("=== Signed arctangent numbers A(n,k) and the hyperbolic variant ===")
print("  (arctan z)^k/k! = sum A(n,k) z^n/n!;   A(n,k) = (-1)^((n-k)/2) Ah(n,k)")
for n in range(1, 7):
    row = [arctangent_number(n, k) for k in range(1, n + 1)]
    print(f"  n={n}: {row}")
print("  hyperbolic row n=6:", [arctanh_number(6, k) for k in range(1, 7)])

print()
print("=== Higher-order tangent numbers T(n,k): tan^k z = sum T(n,k) z^n/n! ===")
for n in range(1, 7):
    print(f"  n={n}: {[higher_tangent_number(n, k) for k in range(1, n + 1)]}")

print()
print("=== Derivative polynomials: P_n = (1+x^2) P_{n-1}', P_0 = x ===")
print("    (d/dt)^n tan t = P_n(tan t) and (d/dt)^n cot t = (-1)^n P_n(cot t)")
for n in range(5):
    print(f"  P_{n}(x) = {poly_str(derivative_polynomial(n))}")

print()
print("=== Tangent polynomials: x P_n(x) = (1+x^2) T_n(x), exactly ===")
for n in range(1, 6):
    print(f"  T_{n}(x) = {poly_str(tangent_polynomial(n))}")

print()
print("=== Row sums of tangent polynomials are scaled zigzag numbers ===")
print("    sum_k T(n,k) = 2^(n-1) E_n")
for n in (1, 2, 3, 5, 10, 20):
    lhs, rhs = zigzag_sum_identity(n)
    print(f"  n={n:<2d}: {lhs} == {rhs}  -> {lhs == rhs}")

print()
print("=== The cumulant denominators of the tangent limit law ===")
print("    K_2m = T_(2m-1)/(2m-1)!")
for m in range(1, 6):
    val = Fraction(tn[m - 1])
    fact = 1
    for j in range(1, 2 * m):
        fact *= j
    print(f"  K_{2*m:<2d} = {val}/{fact} = {Fraction(val, fact)}")
