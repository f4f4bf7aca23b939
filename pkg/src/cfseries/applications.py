"""Series sides of three continued-fraction identities.

* ``0F1(c+1; z) / 0F1(c; z)`` equals the ``app1`` preset fraction.
* ``H(q, z) / G(q, z)`` (Rogers-Ramanujan, ``|q| < 1``) equals ``app2``.
* ``N(q, z) / D(q, z)`` with the alternating ``|q| > 1`` series equals
  ``app3-paper`` (c = 0) and ``app3-canonical``.

All sums use the same stopping rule: stop once three consecutive terms are
below ``eps * |partial sum|``. In the truncated-series realization "small"
means identically zero, so sums run until the powers of ``z`` fall off the
truncation.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coeffspec import preset_coeffs
from .contfrac import eval_backward
from .errors import ConfigurationError, DomainError, PoleError
from .scalar import RATIONAL, QComplex, TruncatedSeries, field_of

DEFAULT_EPS = 1e-30
DEFAULT_CAP = 10_000


@dataclass(frozen=True)
class SeriesValue:
    value: object
    terms_used: int
    last_term_norm: object
    cap_hit: bool = False


def _is_series(*xs):
    return any(isinstance(x, TruncatedSeries) for x in xs)


def _common_field(*xs):
    for x in xs:
        if isinstance(x, TruncatedSeries):
            return field_of(x)
    fields = [field_of(x) for x in xs]
    for f in fields:
        if f != RATIONAL:
            return f
    return RATIONAL


def _sum_terms(terms, field, eps, cap):
    """Partial sums of an iterator of terms under the three-small-terms rule."""
    series = field.kind == "series"
    if field.exact and not series:
        eps = Fraction(eps)
    total = field.zero
    small_run = 0
    used = 0
    last_norm = 0
    for term in terms:
        total = total + term
        used += 1
        if series:
            last_norm = 0 if term.is_zero() else 1
            small = term.is_zero()
        else:
            last_norm = field.magnitude(term)
            small = last_norm <= eps * field.magnitude(total)
        small_run = small_run + 1 if small else 0
        if small_run >= 3:
            return SeriesValue(total, used, last_norm)
        if used >= cap:
            return SeriesValue(total, used, last_norm, cap_hit=True)
    return SeriesValue(total, used, last_norm)


def _finish(result, field):
    if field is None:
        return result
    return SeriesValue(field.convert(result.value), result.terms_used,
                       result.last_term_norm, result.cap_hit)


def _nonpositive_integer(c):
    if isinstance(c, TruncatedSeries):
        if any(c.coeffs[1:]):
            return False
        c = c.coeffs[0]
    elif isinstance(c, QComplex):
        if c.im:
            return False
        c = c.re
    elif hasattr(c, "_mpc_"):
        if c.imag:
            return False
        c = c.real
    return c <= 0 and int(c) == c


def hyp0F1(c, z, eps=DEFAULT_EPS, cap=DEFAULT_CAP, field=None):
    """``sum_k z^k / ((c)_k k!)`` with the rising factorial ``(c)_k``.

    Rational inputs are summed exactly; pass ``field`` to convert the final sum.

    >>> hyp0F1(Fraction(1), 0).value
    Fraction(1, 1)
    """
    fld = _common_field(c, z)
    c, z = fld.convert(c), fld.convert(z)
    if _nonpositive_integer(c):
        raise PoleError(f"0F1 has a pole at c = {c}")

    def terms():
        term = fld.one
        k = 0
        while True:
            yield term
            denom = (c + k) * (k + 1)
            if fld.is_zero(denom):
                raise PoleError(f"0F1 has a pole at c = {c}")
            term = term * z / denom
            k += 1

    return _finish(_sum_terms(terms(), fld, eps, cap), field)


def q_pochhammer(q, k):
    """``(q)_k = (1 - q)(1 - q^2)...(1 - q^k)``, with ``(q)_0 = 1``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    fld = _common_field(q)
    q = fld.convert(q)
    prod = fld.one
    qj = fld.one
    for _ in range(k):
        qj = qj * q
        prod = prod * (1 - qj)
    return prod


def _check_q(q, fld, inside):
    if fld.kind == "series":
        return
    mag = fld.magnitude(q)
    if inside and not mag < 1:
        raise DomainError(f"|q| < 1 required, got |q| = {mag}")
    if not inside and not mag > 1:
        raise DomainError(f"|q| > 1 required, got |q| = {mag}")


def _qseries_terms(q, z, fld, exponent):
    """Terms ``s(k) q^{exponent(k)} z^k / (q)_k`` with ``s(k)`` folded into ``exponent``."""
    sign_alt, expo = exponent
    k = 0
    poch = fld.one
    zk = fld.one
    qk = fld.one
    while True:
        e = expo(k)
        qe = fld.power(q, e)
        term = qe * zk / poch
        if sign_alt and k % 2:
            term = -term
        yield term
        k += 1
        qk = qk * q
        factor = 1 - qk
        if fld.is_zero(factor):
            raise DomainError(f"(q)_{k} = 0")
        poch = poch * factor
        zk = zk * z


def rr_series(kind, q, z, eps=DEFAULT_EPS, cap=DEFAULT_CAP, field=None):
    """Rogers-Ramanujan series: ``G = sum q^{k^2} z^k/(q)_k``, ``H = sum q^{k(k+1)} z^k/(q)_k``.

    ``kind`` is ``"G"`` or ``"H"``. Needs ``|q| < 1`` unless working with
    truncated series.
    """
    if kind not in ("G", "H"):
        raise ConfigurationError("kind must be 'G' or 'H'")
    fld = _common_field(q, z)
    q, z = fld.convert(q), fld.convert(z)
    _check_q(q, fld, inside=True)
    expo = (lambda k: k * k) if kind == "G" else (lambda k: k * (k + 1))
    return _finish(_sum_terms(_qseries_terms(q, z, fld, (False, expo)), fld, eps, cap), field)


def app3_series(kind, q, z, eps=DEFAULT_EPS, cap=DEFAULT_CAP, field=None):
    """Alternating series for ``|q| > 1``.

    numerator:   ``sum (-1)^k z^k q^{-k(k+1)/2} / (q)_k``
    denominator: ``sum (-1)^k z^k q^{-k(k-1)/2} / (q)_k``

    With rational ``q`` and ``z`` every term is exact; ``field`` only converts
    the final sum.
    """
    if kind not in ("numerator", "denominator"):
        raise ConfigurationError("kind must be 'numerator' or 'denominator'")
    fld = _common_field(q, z)
    q, z = fld.convert(q), fld.convert(z)
    _check_q(q, fld, inside=False)
    if kind == "numerator":
        expo = lambda k: -(k * (k + 1) // 2)
    else:
        expo = lambda k: -(k * (k - 1) // 2)
    return _finish(_sum_terms(_qseries_terms(q, z, fld, (True, expo)), fld, eps, cap), field)


# ---------------------------------------------------------------------------
# Paired identity checks


def app1_ratio(c, z, eps=DEFAULT_EPS, field=None):
    top = hyp0F1(c + 1, z, eps)
    bottom = hyp0F1(c, z, eps)
    return _ratio(top.value, bottom.value, field)


def app2_ratio(q, z, eps=DEFAULT_EPS, field=None):
    return _ratio(rr_series("H", q, z, eps).value, rr_series("G", q, z, eps).value, field)


def app3_ratio(q, z, eps=DEFAULT_EPS, field=None):
    return _ratio(app3_series("numerator", q, z, eps).value,
                  app3_series("denominator", q, z, eps).value, field)


def _ratio(top, bottom, field):
    if field is not None:
        top, bottom = field.convert(top), field.convert(bottom)
    return top / bottom


IDENTITIES = {
    # name: (preset, series-ratio function, names of its arguments)
    "app1": ("app1", app1_ratio, ("c", "z")),
    "app2": ("app2", app2_ratio, ("q", "z")),
    "app3-paper": ("app3-paper", app3_ratio, ("q", "z")),
    "app3-canonical": ("app3-canonical", app3_ratio, ("q", "z")),
}


def identity_residual(name, params, field, depth=60, eps=DEFAULT_EPS):
    """``|fraction - series ratio|`` for one identity, fraction by backward evaluation.

    ``params`` holds exact rationals; the series side is summed exactly and
    converted at the final division.
    """
    preset, ratio_fn, arg_names = IDENTITIES[name]
    fraction = eval_backward(preset_coeffs(preset, params, field), depth)
    ratio = ratio_fn(*(params[n] for n in arg_names), eps=eps, field=field)
    return fraction, ratio, abs(fraction - ratio)
