"""
Three-term recurrences and their tails
======================================

A recurrence ``x_{n+2} = b_n x_{n+1} + a_n x_n`` has a two-dimensional space
of solutions. Running it forward from seeds is easy. The ratios
``t_n = -x_{n+1}/x_n`` of the *minimal* solution are the tails of a continued
fraction, and backward recursion finds them stably.
"""

# %%
from cfseries import (
    FloatField, build_coeff_seq, iterate, minimal_solution, tail_backward, tail_ratios,
)

# Fibonacci-like recurrence with unit coefficients, run forward exactly.
ones = build_coeff_seq("1", "1")
print("forward:", [str(v) for v in iterate(ones, 0, 1, 10).values])

# %%
# Backward tails: t_0 is the depth-N value of 1/(1 + 1/(1 + ...)).
tails = tail_backward(ones, 12)
print("t_0 at depth 12:", tails.value, "=", float(tails.value))

# %%
# The minimal solution is estimated by running the recurrence backwards from
# far out. Its tail ratios reproduce the same fraction.
fld = FloatField(128)
ones_f = build_coeff_seq("1", "1", field=fld)
xs = minimal_solution(ones_f, 60)
ratios, skipped = tail_ratios(xs, fld)
print("-x_1/x_0 from the minimal solution:", fld.format(ratios[0]))
print("tail from backward recursion:      ", fld.format(tail_backward(ones_f, 60).value))

# %%
# The same machinery with growing coefficients: a_m = 1, b_m = m + 1.
grow = build_coeff_seq("1", "m + 1", field=fld)
print("1/(1 + 1/(2 + 1/(3 + ...))) ~", fld.format(tail_backward(grow, 40).value))
print("exact depth-5 value:", tail_backward(build_coeff_seq("1", "m + 1"), 5).value)
