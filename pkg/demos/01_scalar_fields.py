"""
Scalar fields
=============

Every algorithm in ``cfseries`` is written once and run over a choice of
scalar field. This script walks through the four realizations and shows the
same small computation in each of them.
"""

# %%
# Exact rationals are plain ``fractions.Fraction`` values.
from fractions import Fraction

from cfseries import ComplexField, FloatField, RATIONAL, SeriesField, TruncatedSeries, make_field

x = RATIONAL.convert("3/7")
print("rational:", RATIONAL.format(x * x - 1))

# %%
# Float fields carry their own precision. Two fields with different bit
# counts never interfere, because each one owns a private mpmath context.
lo, hi = FloatField(53), FloatField(256)
print("53 bits: ", lo.format(lo.convert(1) / 3))
print("256 bits:", hi.format(hi.convert(1) / 3))
print("unit roundoff at 256 bits:", hi.unit_roundoff)

# %%
# Complex fields sit on top of either base. Over the rationals the values stay
# exact, which is handy for checking identities at complex arguments.
cq = ComplexField(RATIONAL)
w = cq.convert(Fraction(1, 2)) + cq.imag_unit / 3
print("exact complex:", cq.format(w * w))
print("float complex:", make_field("complex", 64).format(make_field("complex", 64).convert(w) ** 3))

# %%
# Truncated power series keep exact rational coefficients up to a fixed
# degree. Division works whenever the constant term is nonzero.
ser = SeriesField(6)
z = ser.generator
geom = 1 / (1 - z)
print("1/(1-z)     =", geom)
print("(1/(1-z))^2 =", geom * geom)

# Mixing degrees is refused rather than silently truncated.
try:
    geom + TruncatedSeries.generator(3)
except ValueError as exc:
    print("refused:", exc)
