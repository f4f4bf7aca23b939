"""Three-term recurrence ``x_{n+2} = b_n x_{n+1} + a_n x_n`` and its tail sequences."""

from dataclasses import dataclass
from typing import Tuple

from .errors import DomainError


@dataclass(frozen=True)
class SolutionPrefix:
    values: Tuple
    coeffs: object
    seeds: Tuple

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class TailPrefix:
    """Tails ``t_0..t_N`` with ``t_n = a_n / (b_n + t_{n+1})`` and ``t_{N+1} = seed_value``."""

    tails: Tuple
    seed_depth: int
    seed_value: object

    @property
    def value(self):
        return self.tails[0]


def iterate(coeffs, x0, x1, n):
    """Forward iteration, returning ``x_0..x_n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = coeffs.field
    xs = [f.convert(x0), f.convert(x1)]
    for m in range(n - 1):
        xs.append(coeffs.b(m) * xs[m + 1] + coeffs.a(m) * xs[m])
    return SolutionPrefix(tuple(xs), coeffs, (xs[0], xs[1]))


def tail_backward(coeffs, N):
    """Backward tail recursion from ``t_{N+1} = 0``; ``t_0`` is the depth-N value of the fraction."""
    if N < 0:
        raise ValueError("N must be >= 0")
    f = coeffs.field
    seed = f.zero
    t = seed
    tails = [None] * (N + 1)
    for m in range(N, -1, -1):
        den = coeffs.b(m) + t
        if f.is_zero(den) or not _invertible(f, den):
            raise DomainError(f"zero denominator b_{m} + t_{m + 1}", index=m)
        t = coeffs.a(m) / den
        tails[m] = t
    return TailPrefix(tuple(tails), N, seed)


def _invertible(f, x):
    check = getattr(f, "is_invertible", None)
    return True if check is None else check(x)


def minimal_solution(coeffs, N):
    """Backward recurrence from ``x_{N+2} = 0, x_{N+1} = 1``, normalized to ``x_0 = 1``.

    Returns ``x_0..x_{N+1}``. Each step divides by ``a_m``.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    f = coeffs.field
    xs = [None] * (N + 3)
    xs[N + 2] = f.zero
    xs[N + 1] = f.one
    for m in range(N, -1, -1):
        a = coeffs.a(m)
        if f.is_zero(a) or not _invertible(f, a):
            raise DomainError(f"a_{m} = 0 in backward recurrence", index=m)
        xs[m] = (xs[m + 2] - coeffs.b(m) * xs[m + 1]) / a
    x0 = xs[0]
    if f.is_zero(x0) or not _invertible(f, x0):
        raise DomainError("x_0 = 0 after backward pass; cannot normalize", index=0)
    return tuple(x / x0 for x in xs[: N + 2])


def minimal_estimate(coeffs, N, n):
    """``x_n`` of the normalized backward solution; ``-x_1/x_0`` estimates the fraction."""
    if not 0 <= n <= N:
        raise ValueError("need 0 <= n <= N")
    return minimal_solution(coeffs, N)[n]


def tail_ratios(values, field):
    """``t_n = -x_{n+1}/x_n`` for consecutive solution values.

    Returns ``(tails, skipped)`` where ``tails`` maps index to value and
    ``skipped`` lists indices with ``x_n = 0``.
    """
    tails, skipped = {}, []
    for n in range(len(values) - 1):
        if field.is_zero(values[n]):
            skipped.append(n)
            continue
        tails[n] = -values[n + 1] / values[n]
    return tails, skipped
