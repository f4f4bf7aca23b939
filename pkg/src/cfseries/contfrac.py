"""Evaluation of ``K = a_0/(b_0 + a_1/(b_1 + a_2/(b_2 + ...)))``.

Three independent routes: Euler-Wallis convergents, innermost-first backward
evaluation and modified Lentz iteration. :func:`equivalence_transform`
rescales coefficients without changing any convergent value.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .coeffspec import CoeffSeq
from .errors import ConfigurationError, DomainError, NonConvergenceError
from .scalar import ComplexField, FloatField

RESCALE_EXPONENT = 512


@dataclass(frozen=True)
class Convergent:
    """``P_n / Q_n`` kept unreduced. ``Q_n = 0`` marks a convergent at infinity."""

    index: int
    P: object
    Q: object
    field: object

    @property
    def at_infinity(self):
        return self.field.is_zero(self.Q)

    @property
    def value(self):
        if self.at_infinity:
            return None
        return self.P / self.Q


def _float_ctx(field):
    if isinstance(field, FloatField):
        return field.ctx
    if isinstance(field, ComplexField) and isinstance(field.base, FloatField):
        return field.base.ctx
    return None


def convergents(coeffs, N):
    """Convergents 0..N via ``P_n = b_n P_{n-1} + a_n P_{n-2}`` (same for Q).

    Starts from ``P_{-1} = 0, Q_{-1} = 1, P_0 = a_0, Q_0 = b_0``. In float
    realizations both pairs are rescaled by a power of two whenever
    ``max(|P_n|, |Q_n|)`` leaves ``[2^-512, 2^512]``; values are unaffected.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    f = coeffs.field
    ctx = _float_ctx(f)
    if ctx is not None:
        hi = ctx.ldexp(1, RESCALE_EXPONENT)
        lo = ctx.ldexp(1, -RESCALE_EXPONENT)
    p_prev, q_prev = f.zero, f.one
    p, q = coeffs.a(0), coeffs.b(0)
    out = [Convergent(0, p, q, f)]
    for n in range(1, N + 1):
        a, b = coeffs.a(n), coeffs.b(n)
        p_prev, p = p, b * p + a * p_prev
        q_prev, q = q, b * q + a * q_prev
        if ctx is not None:
            big = max(abs(p), abs(q))
            if big > hi or (big < lo and big != 0):
                scale = ctx.ldexp(1, -int(ctx.mag(big)))
                p, q, p_prev, q_prev = p * scale, q * scale, p_prev * scale, q_prev * scale
        out.append(Convergent(n, p, q, f))
    return out


def _usable_divisor(field, x):
    if field.is_zero(x):
        return False
    check = getattr(field, "is_invertible", None)
    return True if check is None else check(x)


def eval_backward(coeffs, N):
    """Depth-N truncation evaluated innermost first, starting from a zero tail."""
    if N < 0:
        raise ValueError("N must be >= 0")
    f = coeffs.field
    t = f.zero
    for m in range(N, -1, -1):
        den = coeffs.b(m) + t
        if not _usable_divisor(f, den):
            raise DomainError(f"zero denominator at level {m}", index=m)
        t = coeffs.a(m) / den
    return t


class LentzResult(NamedTuple):
    value: object
    iterations: int


def lentz_tiny(field):
    """Floor substituted for vanishing accumulators: ``1e-30`` scaled to the working roundoff."""
    ctx = _float_ctx(field)
    if ctx is None:
        raise ConfigurationError("Lentz iteration needs a float or complex-float realization")
    return ctx.mpf("1e-30") * ctx.ldexp(1, min(0, 53 - ctx.prec))


def eval_lentz(coeffs, eps=1e-14, max_iter=10_000):
    """Modified Lentz iteration.

    Stops once the per-step multiplier is within ``eps`` of 1 and reports the
    index ``j`` of the last coefficient pair consumed.

    Raises
    ------
    NonConvergenceError
        After ``max_iter`` steps without meeting the tolerance; carries the last
        iterate.
    """
    f = coeffs.field
    tiny = lentz_tiny(f)
    eps = (f.base if isinstance(f, ComplexField) else f).convert(eps)
    value = tiny
    C, D = value, f.zero
    for j in range(max_iter + 1):
        a, b = coeffs.a(j), coeffs.b(j)
        D = b + a * D
        if f.is_zero(D):
            D = tiny
        C = b + a / C
        if f.is_zero(C):
            C = tiny
        D = 1 / D
        delta = C * D
        value = value * delta
        if j > 0 and abs(delta - 1) < eps:
            return LentzResult(value, j)
    raise NonConvergenceError(value, max_iter)


def equivalence_transform(coeffs, r):
    """Rescale by factors ``r_m`` (``r_0 = 1``): ``a'_m = r_m r_{m-1} a_m``, ``b'_m = r_m b_m``.

    ``r`` is a sequence or a callable ``m -> Scalar``. Convergent values are
    unchanged; P and Q pick up the factor ``r_0 r_1 ... r_n``.
    """
    f = coeffs.field
    length = coeffs.length
    if callable(r):
        r_at = r
    else:
        rs = tuple(f.convert(x) for x in r)
        r_at = rs.__getitem__
        length = len(rs) if length is None else min(length, len(rs))
    if f.convert(r_at(0)) != f.one:
        raise ConfigurationError("equivalence transform needs r_0 = 1")

    def factor(m):
        if m < 0:
            return f.one
        x = f.convert(r_at(m))
        if not _usable_divisor(f, x):
            raise DomainError(f"r_{m} = 0", index=m)
        return x

    def a(m):
        return factor(m) * factor(m - 1) * coeffs.a(m)

    def b(m):
        return factor(m) * coeffs.b(m)

    return CoeffSeq(f, a, b, length, f"transformed({coeffs.label})", dict(coeffs.params))


def coefficients_equal(x, y, n):
    """True if two sequences agree coefficient-wise on indices 0..n."""
    return all(x.a(m) == y.a(m) and x.b(m) == y.b(m) for m in range(n + 1))
