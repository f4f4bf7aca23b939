"""Scalar fields the rest of the package computes over.

Four realizations are provided:

* :class:`RationalField` -- exact :class:`fractions.Fraction` values.
* :class:`FloatField` -- mpmath binary floats at a configurable precision.
  Every field owns a private mpmath context, so two fields with different
  precisions never interfere and no global state is touched.
* :class:`ComplexField` -- a pair over either of the above
  (:class:`QComplex` over rationals, ``mpc`` over floats).
* :class:`SeriesField` -- :class:`TruncatedSeries` with exact rational
  coefficients, truncated at a fixed degree.

Values are the plain objects of each realization and support the usual
arithmetic operators, mixing freely with Python ints. The field object is
only needed to build constants, convert inputs and compare values.
"""

from fractions import Fraction
from functools import lru_cache
import numbers

from mpmath.ctx_mp import MPContext
from mpmath.libmp import repr_dps, to_str

from .errors import ConfigurationError, DomainError

DEFAULT_PRECISION = 128
DEFAULT_SERIES_DEGREE = 8


def to_fraction(x):
    """Parse an exact rational from an int, Fraction or literal like ``"3/4"``, ``"0.25"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigurationError(f"not an exact rational: {x!r}") from exc
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def _fraction_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Truncated power series


class TruncatedSeries:
    """Power series in one variable with rational coefficients, modulo ``var**(degree+1)``.

    Exactly ``degree + 1`` coefficients are stored. Combining two series with a
    different variable or degree raises :class:`ConfigurationError`; ints and
    Fractions are promoted to constant series.

    >>> z = TruncatedSeries([0, 1], degree=3)
    >>> (1 + z) * (1 - z)
    TruncatedSeries('1 - z^2', degree=3)
    """

    __slots__ = ("coeffs", "degree", "var")

    def __init__(self, coeffs, degree, var="z"):
        if degree < 0:
            raise ConfigurationError("truncation degree must be >= 0")
        cs = [to_fraction(c) for c in list(coeffs)[: degree + 1]]
        cs.extend([Fraction(0)] * (degree + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, c, degree, var="z"):
        return cls([c], degree, var)

    @classmethod
    def generator(cls, degree, var="z"):
        return cls([0, 1], degree, var)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other.var != self.var or other.degree != self.degree:
                raise ConfigurationError(
                    f"series mismatch: {self.var}/N={self.degree} vs {other.var}/N={other.degree}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries.constant(other, self.degree, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries([x + y for x, y in zip(self.coeffs, o.coeffs)], self.degree, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-x for x in self.coeffs], self.degree, self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries([x - y for x, y in zip(self.coeffs, o.coeffs)], self.degree, self.var)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return series_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return series_div(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return series_div(o, self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return int_power(self, k, TruncatedSeries.constant(1, self.degree, self.var))

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, TruncatedSeries) else other
        if o is None:
            return NotImplemented
        return (o.var, o.degree, o.coeffs) == (self.var, self.degree, self.coeffs)

    def __hash__(self):
        return hash((self.var, self.degree, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __getitem__(self, k):
        return self.coeffs[k]

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            mag = _fraction_str(abs(c))
            if not mono:
                body = mag
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r}, degree={self.degree})"


def series_mul(a, b):
    """Cauchy product of two series truncated at their shared degree."""
    a_ = a._coerce(b)  # validates var and degree
    n = a.degree
    ac, bc = a.coeffs, a_.coeffs
    out = [sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
    return TruncatedSeries(out, n, a.var)


def series_div(a, b):
    """Solve ``r * b == a`` modulo the truncation; ``b`` needs a nonzero constant term."""
    b = a._coerce(b)
    b0 = b.coeffs[0]
    if b0 == 0:
        raise DomainError("series division by a divisor with zero constant term")
    r = []
    for k in range(a.degree + 1):
        acc = a.coeffs[k] - sum((b.coeffs[i] * r[k - i] for i in range(1, k + 1)), Fraction(0))
        r.append(acc / b0)
    return TruncatedSeries(r, a.degree, a.var)


# ---------------------------------------------------------------------------
# Complex rationals


class QComplex:
    """Complex number with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QComplex is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, QComplex):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QComplex(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("complex division by zero")
        return QComplex((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return int_power(self, k, QComplex(1))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self):
        return QComplex(self.re, -self.im)

    def norm1(self):
        return abs(self.re) + abs(self.im)

    def __str__(self):
        if self.im == 0:
            return _fraction_str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{_fraction_str(self.re)}{sign}{_fraction_str(abs(self.im))}i"

    def __repr__(self):
        return f"QComplex({str(self)!r})"


def int_power(x, k, one):
    """``x**k`` by repeated squaring; negative ``k`` inverts (``0**-k`` is a domain error)."""
    if k < 0:
        if _is_zero_value(x):
            raise DomainError("zero raised to a negative power")
        x = one / x
        k = -k
    result = one
    while k:
        if k & 1:
            result = result * x
        k >>= 1
        if k:
            x = x * x
    return result


def _is_zero_value(x):
    if isinstance(x, TruncatedSeries):
        return x.coeffs[0] == 0
    return x == 0


# ---------------------------------------------------------------------------
# Fields


class Field:
    """Common interface of the four realizations."""

    kind = "abstract"
    exact = False

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def convert(self, x):
        raise NotImplementedError

    def is_zero(self, x):
        return x == 0

    def close_to(self, x, y, eps):
        raise NotImplementedError

    def magnitude(self, x):
        """A norm used by stopping rules; exact where possible."""
        return abs(x)

    def to_integer(self, x):
        raise NotImplementedError

    def power(self, x, k):
        return int_power(x, k, self.one)

    def real_power(self, x, e):
        """``x**e`` for a rational exponent ``e``; exact fields need ``e`` integral."""
        e = to_fraction(e)
        if e.denominator == 1:
            return self.power(x, int(e))
        raise DomainError(f"non-integer exponent {e} in exact realization {self.kind}")

    def format(self, x):
        return str(x)

    def describe(self):
        return {"realization": self.kind}


class RationalField(Field):
    kind = "rational"
    exact = True

    def convert(self, x):
        if isinstance(x, QComplex):
            if x.im != 0:
                raise ConfigurationError("complex value in rational realization")
            return x.re
        if isinstance(x, TruncatedSeries):
            raise ConfigurationError("series value in rational realization")
        if isinstance(x, numbers.Number) and not isinstance(x, (int, Fraction, float)):
            raise ConfigurationError(f"cannot represent {x!r} exactly")
        return to_fraction(x)

    def close_to(self, x, y, eps=None):
        return x == y

    def to_integer(self, x):
        x = self.convert(x)
        if x.denominator != 1:
            raise DomainError(f"exponent {x} is not an integer")
        return x.numerator

    def format(self, x):
        return _fraction_str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


@lru_cache(maxsize=None)
def _context(prec):
    ctx = MPContext()
    ctx.prec = prec
    return ctx


class FloatField(Field):
    """Binary floating point with ``prec`` mantissa bits (default 128)."""

    kind = "float"

    def __init__(self, prec=DEFAULT_PRECISION):
        if prec < 2:
            raise ConfigurationError("precision must be at least 2 bits")
        self.prec = int(prec)
        self.ctx = _context(self.prec)

    def convert(self, x):
        ctx = self.ctx
        if isinstance(x, TruncatedSeries):
            raise ConfigurationError("series value in float realization")
        if isinstance(x, QComplex):
            if x.im != 0:
                raise ConfigurationError("complex value in real float realization")
            x = x.re
        if isinstance(x, str):
            x = to_fraction(x)
        if isinstance(x, Fraction):
            return ctx.mpf(x.numerator) / x.denominator
        if hasattr(x, "imag") and not isinstance(x, (int, float)) and x.imag != 0:
            raise ConfigurationError("complex value in real float realization")
        if hasattr(x, "real") and not isinstance(x, (int, float)):
            x = x.real
        return ctx.mpf(x)

    def close_to(self, x, y, eps):
        ax, ay = abs(x), abs(y)
        return abs(x - y) <= eps * max(1, ax, ay)

    def to_integer(self, x):
        x = self.convert(x)
        if not self.ctx.isint(x):
            raise DomainError(f"exponent {x} is not an integer")
        return int(x)

    def real_power(self, x, e):
        e = to_fraction(e)
        if e.denominator == 1:
            return self.power(x, int(e))
        return self.ctx.power(x, self.convert(e))

    @property
    def unit_roundoff(self):
        return self.ctx.ldexp(1, -self.prec)

    def format(self, x):
        return to_str(self.convert(x)._mpf_, repr_dps(self.prec))

    def describe(self):
        return {"realization": self.kind, "precision_bits": self.prec}

    def __eq__(self, other):
        return isinstance(other, FloatField) and other.prec == self.prec

    def __hash__(self):
        return hash(("float", self.prec))

    def __repr__(self):
        return f"FloatField(prec={self.prec})"


class ComplexField(Field):
    """Complex numbers over a rational or float base field."""

    kind = "complex"

    def __init__(self, base=None):
        self.base = FloatField() if base is None else base
        if not isinstance(self.base, (RationalField, FloatField)):
            raise ConfigurationError("complex base must be rational or float")
        self.exact = self.base.exact

    @property
    def imag_unit(self):
        return self.convert(QComplex(0, 1))

    def convert(self, x):
        if isinstance(x, TruncatedSeries):
            raise ConfigurationError("series value in complex realization")
        if self.base.exact:
            if isinstance(x, QComplex):
                return x
            if isinstance(x, complex):
                return QComplex(Fraction(x.real), Fraction(x.imag))
            return QComplex(self.base.convert(x))
        ctx = self.base.ctx
        if isinstance(x, QComplex):
            return ctx.mpc(self.base.convert(x.re), self.base.convert(x.im))
        if isinstance(x, (str, Fraction, int)):
            return ctx.mpc(self.base.convert(x))
        return ctx.mpc(x)

    def close_to(self, x, y, eps):
        if self.base.exact:
            return x == y
        return abs(x - y) <= eps * max(1, abs(x), abs(y))

    def magnitude(self, x):
        if isinstance(x, QComplex):
            return x.norm1()
        return abs(x)

    def to_integer(self, x):
        x = self.convert(x)
        if x.imag != 0:
            raise DomainError(f"exponent {x} is not an integer")
        return self.base.to_integer(x.real if not isinstance(x, QComplex) else x.re)

    def real_power(self, x, e):
        e = to_fraction(e)
        if e.denominator == 1:
            return self.power(x, int(e))
        if self.base.exact:
            raise DomainError(f"non-integer exponent {e} in exact realization")
        return self.base.ctx.power(x, self.base.convert(e))

    def format(self, x):
        if isinstance(x, QComplex):
            return str(x)
        re, im = self.base.format(x.real), self.base.format(abs(x.imag))
        sign = "-" if x.imag < 0 else "+"
        return f"{re}{sign}{im}i"

    def describe(self):
        d = {"realization": self.kind, "base": self.base.kind}
        if isinstance(self.base, FloatField):
            d["precision_bits"] = self.base.prec
        return d

    def __eq__(self, other):
        return isinstance(other, ComplexField) and other.base == self.base

    def __hash__(self):
        return hash(("complex", self.base))

    def __repr__(self):
        return f"ComplexField(base={self.base!r})"


class SeriesField(Field):
    """Truncated power series in ``var`` with exact rational coefficients."""

    kind = "series"
    exact = True

    def __init__(self, degree=DEFAULT_SERIES_DEGREE, var="z"):
        if degree < 0:
            raise ConfigurationError("truncation degree must be >= 0")
        self.degree = int(degree)
        self.var = var

    @property
    def generator(self):
        return TruncatedSeries.generator(self.degree, self.var)

    def convert(self, x):
        if isinstance(x, TruncatedSeries):
            if x.var != self.var or x.degree != self.degree:
                raise ConfigurationError(
                    f"series mismatch: {x.var}/N={x.degree} vs {self.var}/N={self.degree}"
                )
            return x
        return TruncatedSeries.constant(RationalField().convert(x), self.degree, self.var)

    def is_zero(self, x):
        return self.convert(x).is_zero()

    def is_invertible(self, x):
        return self.convert(x).coeffs[0] != 0

    def close_to(self, x, y, eps=None):
        return self.convert(x) == self.convert(y)

    def magnitude(self, x):
        raise DomainError("series values have no magnitude")

    def to_integer(self, x):
        x = self.convert(x)
        if any(x.coeffs[1:]) or x.coeffs[0].denominator != 1:
            raise DomainError(f"exponent {x} is not an integer constant")
        return x.coeffs[0].numerator

    def describe(self):
        return {"realization": self.kind, "series_degree": self.degree, "series_var": self.var}

    def __eq__(self, other):
        return isinstance(other, SeriesField) and (other.degree, other.var) == (self.degree, self.var)

    def __hash__(self):
        return hash(("series", self.degree, self.var))

    def __repr__(self):
        return f"SeriesField(degree={self.degree}, var={self.var!r})"


RATIONAL = RationalField()


def field_of(x):
    """Infer the realization a value belongs to."""
    if isinstance(x, TruncatedSeries):
        return SeriesField(x.degree, x.var)
    if isinstance(x, QComplex):
        return ComplexField(RATIONAL)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RATIONAL
    ctx = getattr(x, "context", None)
    if ctx is not None:
        base = FloatField(ctx.prec)
        return ComplexField(base) if hasattr(x, "_mpc_") else base
    raise TypeError(f"unsupported scalar {x!r}")


def make_field(realization="rational", precision_bits=DEFAULT_PRECISION,
               series_degree=DEFAULT_SERIES_DEGREE, series_var="z", complex_base="float"):
    """Build a field from the configuration vocabulary used by the CLI."""
    if realization == "rational":
        return RATIONAL
    if realization == "float":
        return FloatField(precision_bits)
    if realization == "complex":
        base = RATIONAL if complex_base == "rational" else FloatField(precision_bits)
        return ComplexField(base)
    if realization == "series":
        return SeriesField(series_degree, series_var)
    raise ConfigurationError(f"unknown realization {realization!r}")


def close_to(x, y, eps=1e-12, field=None):
    """Exact equality for exact realizations, relative closeness otherwise.

    For floats and complex floats: ``|x - y| <= eps * max(1, |x|, |y|)``.
    """
    if field is None:
        field = field_of(x)
    return field.close_to(x, y, eps)
