"""
Continued fractions against classical series
============================================

Three classical ratios have continued-fraction expansions that the presets
encode:

* ``0F1(c+1; z) / 0F1(c; z)`` (Bessel-type) for ``app1``;
* the Rogers-Ramanujan ratio ``H(q, z) / G(q, z)`` for ``app2``;
* an alternating q-series ratio for ``|q| > 1`` for the two ``app3`` forms.
"""

# %%
from fractions import Fraction

from cfseries import FloatField, SeriesField, eval_backward, preset_coeffs, rr_series
from cfseries.applications import identity_residual

fld = FloatField(128)
cases = [
    ("app1", {"c": Fraction(1), "z": Fraction(1, 2)}),
    ("app2", {"q": Fraction(1, 5), "z": Fraction(1)}),
    ("app3-paper", {"q": Fraction(2), "z": Fraction(1), "c": Fraction(0)}),
    ("app3-canonical", {"q": Fraction(2), "z": Fraction(1)}),
]
for name, params in cases:
    frac, ratio, resid = identity_residual(name, params, fld)
    print(f"{name:15s} fraction {fld.format(frac)[:22]}  series {fld.format(ratio)[:22]}  diff {float(resid):.1e}")

# %%
# In the truncated-series realization the check is exact: the fraction and
# the Rogers-Ramanujan ratio agree coefficient by coefficient in z.
ser = SeriesField(6)
z = ser.generator
q = Fraction(1, 3)
frac = eval_backward(preset_coeffs("app2", {"q": q, "z": z}, ser), 10)
ratio = rr_series("H", q, z).value / rr_series("G", q, z).value
print("fraction:", frac)
print("H/G:     ", ratio)
print("equal:", frac == ratio)
