"""
Four ways to evaluate a continued fraction
==========================================

Convergents from the Euler-Wallis recurrences, backward evaluation from a
zero tail, the modified Lentz iteration and the gap-subset series ratio all
approach the same limit. Equivalence transforms change the coefficients but
leave every convergent alone.
"""

# %%
import math

from cfseries import (
    FloatField, build_coeff_seq, convergents, equivalence_transform, eval_backward, eval_lentz,
)
from cfseries.expansion import series_ratio_approx

fld = FloatField(128)
golden = build_coeff_seq("1", "1", field=fld)

print("backward, depth 40:", fld.format(eval_backward(golden, 40)))
res = eval_lentz(golden, eps=1e-30)
print(f"Lentz:  {fld.format(res.value)} after {res.iterations} steps")
print("convergent 40:     ", fld.format(convergents(golden, 40)[-1].value))
print("series ratio n=42: ", fld.format(series_ratio_approx(golden, 42)))
print("(sqrt(5) - 1)/2:   ", (math.sqrt(5) - 1) / 2)

# %%
# Exact convergents are Fibonacci ratios.
exact = build_coeff_seq("1", "1")
print([str(c.value) for c in convergents(exact, 8)])

# %%
# Rescale with r_m = m + 1 (r_0 must be 1). The coefficients change, the
# convergent values do not.
scaled = equivalence_transform(exact, lambda m: m + 1)
print("new a_m:", [str(scaled.a(m)) for m in range(6)])
print("new b_m:", [str(scaled.b(m)) for m in range(6)])
print("same convergents:",
      [c.value for c in convergents(scaled, 8)] == [c.value for c in convergents(exact, 8)])

# %%
# A convergent can sit at infinity (Q_n = 0). Lentz steps over such points.
bumpy = build_coeff_seq("1", "1", overrides={"b0": -1}, field=fld)
print("Q_1 =", convergents(bumpy, 1)[1].Q, " Lentz value:", fld.format(eval_lentz(bumpy, eps=1e-30).value))
