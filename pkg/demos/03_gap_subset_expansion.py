"""
Gap-subset expansion
====================

Every solution of ``x_{n+2} = b_n x_{n+1} + a_n x_n`` can be written without
iterating. Put ``g_i = a_i / (b_{i-1} b_i)`` and let ``Phi(q, n)`` be the sum,
over all subsets of ``{q, ..., n-2}`` with no two neighbouring indices, of the
product of the chosen ``g_i``. Then

    x_n = b_0 b_1 ... b_{n-2} * (x_1 Phi(1, n) + x_0 (a_0/b_0) Phi(2, n))

and the ratio ``(a_0/b_0) Phi(2, m+2) / Phi(1, m+2)`` is exactly the m-th
convergent of the continued fraction built from the same coefficients.
"""

# %%
from fractions import Fraction

from cfseries import (
    build_coeff_seq, convergents, g_weights, iterate, phi_by_depth, phi_dp, phi_enumerate, reconstruct,
)
from cfseries.expansion import gap_subsets, series_ratio_approx

print("gap subsets of {1..5}:", list(gap_subsets(1, 5)))

# %%
# The subset sum can be enumerated (exponential) or computed by a
# Fibonacci-style recurrence (linear). Both agree exactly.
coeffs = build_coeff_seq("m + 1", "2*m - 3/2")
g = g_weights(coeffs, 12)
print("Phi(1, 14) by enumeration:", phi_enumerate(g, 1, 14))
print("Phi(1, 14) by recurrence: ", phi_dp(g, 1, 14))

# %%
# Splitting by subset size shows how the sum is built up layer by layer.
table = phi_by_depth(g, 1, 14, 6)
for d, layer in enumerate(table.by_depth):
    print(f"  {d}-element subsets: {layer}")

# %%
# Closed form against forward iteration.
x0, x1 = Fraction(2), Fraction(-1, 3)
xs = iterate(coeffs, x0, x1, 12).values
print("x_12 forward:     ", xs[12])
print("x_12 closed form: ", reconstruct(coeffs, x0, x1, 12))

# %%
# The series ratio reproduces each convergent, with the index shifted by two.
for conv in convergents(coeffs, 5):
    print(conv.index, conv.value, series_ratio_approx(coeffs, conv.index + 2))
