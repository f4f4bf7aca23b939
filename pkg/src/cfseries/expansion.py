"""Closed-form solution of the three-term recurrence via gap-constrained subset sums.

With weights ``g_i = a_i / (b_{i-1} b_i)`` define

    Phi(q, n) = sum over subsets {i < j < ...} of {q, ..., n-2} whose
                consecutive elements differ by at least 2, of g_i g_j ...

(the empty subset contributes 1). Then every solution of
``x_{n+2} = b_n x_{n+1} + a_n x_n`` satisfies

    x_n = prod_{i=0}^{n-2} b_i * (x_1 Phi(1, n) + x_0 (a_0/b_0) Phi(2, n))

and the m-th truncation of the continued fraction a_0/(b_0 + a_1/(b_1 + ...))
is ``(a_0/b_0) Phi(2, m+2) / Phi(1, m+2)``.

Note the product starts at i = 0. Starting at i = 1 breaks already at n = 2,
where the recurrence gives ``x_2 = b_0 x_1 + a_0 x_0``.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DegenerateDenominatorError, DomainError, EnumerationGuardError

ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class GWeights:
    """``g_1..g_n``; index with :meth:`at` (1-based)."""

    values: Tuple
    field: object

    def at(self, i):
        if i < 1 or i > len(self.values):
            raise IndexError(f"g_{i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class PhiTable:
    start: int
    end: int
    total: object
    by_depth: Optional[Tuple] = None

    @property
    def set_size(self):
        return max(0, self.end - 2 - self.start + 1)


def _nonzero(field, x):
    if field.is_zero(x):
        return False
    check = getattr(field, "is_invertible", None)
    return True if check is None else check(x)


def g_weights(coeffs, n):
    """``g_i = a_i / (b_{i-1} b_i)`` for ``i = 1..n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _weights(coeffs, n)


def _weights(coeffs, n):
    f = coeffs.field
    out = []
    if n < 1:
        return GWeights((), f)
    b_prev = coeffs.b(0)
    for i in range(1, n + 1):
        b_i = coeffs.b(i)
        den = b_prev * b_i
        if not _nonzero(f, den):
            raise DomainError(f"b_{i - 1} * b_{i} = 0 in g_{i}", index=i)
        out.append(coeffs.a(i) / den)
        b_prev = b_i
    return GWeights(tuple(out), f)


def _check_range(g, start, end):
    if start < 1:
        raise ValueError("start index must be >= 1")
    if end - 2 > len(g) and end - 2 >= start:
        raise IndexError(f"index set {{{start}..{end - 2}}} exceeds available weights g_1..g_{len(g)}")


def gap_subsets(start, stop):
    """Yield every subset of ``start..stop`` (as a tuple) whose elements differ pairwise by >= 2."""
    if stop < start:
        yield ()
        return
    # leave ``start`` out, or take it and skip its neighbour
    yield from gap_subsets(start + 1, stop)
    for rest in gap_subsets(start + 2, stop):
        yield (start,) + rest


def phi_enumerate(g, start, end):
    """Brute-force Phi(start, end) by listing every admissible subset."""
    _check_range(g, start, end)
    size = max(0, end - 2 - start + 1)
    if size > ENUMERATION_LIMIT:
        raise EnumerationGuardError(f"index set of size {size} exceeds enumeration limit {ENUMERATION_LIMIT}")
    one = g.field.one
    total = g.field.zero
    for subset in gap_subsets(start, end - 2):
        prod = one
        for i in subset:
            prod = prod * g.at(i)
        total = total + prod
    return total


def phi_dp(g, start, end):
    """Phi(start, end) by ``F(m) = F(m-1) + g_m F(m-2)``, ``F(start-1) = F(start-2) = 1``."""
    _check_range(g, start, end)
    one = g.field.one
    f_prev2, f_prev = one, one
    for m in range(start, end - 1):
        f_prev2, f_prev = f_prev, f_prev + g.at(m) * f_prev2
    return f_prev


def phi_by_depth(g, start, end, dmax):
    """Split Phi(start, end) by subset size: ``S_d`` sums the products over d-element subsets.

    Uses ``S_d(m) = S_d(m-1) + g_m S_{d-1}(m-2)`` with ``S_0 = 1``. The total is
    the full Phi; it equals ``sum(by_depth)`` once ``dmax >= ceil(size/2)``.
    """
    _check_range(g, start, end)
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    zero, one = g.field.zero, g.field.one
    layers = [one] + [zero] * dmax
    prev2 = list(layers)
    prev = list(layers)
    for m in range(start, end - 1):
        gm = g.at(m)
        cur = [one] + [prev[d] + gm * prev2[d - 1] for d in range(1, dmax + 1)]
        prev2, prev = prev, cur
    return PhiTable(start, end, phi_dp(g, start, end), tuple(prev))


def reconstruct(coeffs, x0, x1, n):
    """``x_n`` from the seeds via the gap-subset formula (no forward iteration)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    f = coeffs.field
    prod = f.one
    for i in range(n - 1):
        b_i = coeffs.b(i)
        if not _nonzero(f, b_i):
            raise DomainError(f"b_{i} = 0 in product range", index=i)
        prod = prod * b_i
    g = _weights(coeffs, n - 2)
    head = coeffs.a(0) / coeffs.b(0)
    return prod * (f.convert(x1) * phi_dp(g, 1, n) + f.convert(x0) * head * phi_dp(g, 2, n))


def series_ratio_approx(coeffs, n):
    """``(a_0/b_0) Phi(2, n) / Phi(1, n)``, the (n-2)-th convergent of the fraction."""
    if n < 2:
        raise ValueError("n must be >= 2")
    f = coeffs.field
    for i in range(n - 1):
        if not _nonzero(f, coeffs.b(i)):
            raise DomainError(f"b_{i} = 0", index=i)
    g = _weights(coeffs, n - 2)
    lower = phi_dp(g, 1, n)
    if not _nonzero(f, lower):
        raise DegenerateDenominatorError(f"Phi(1, {n}) = 0", index=n)
    return coeffs.a(0) / coeffs.b(0) * phi_dp(g, 2, n) / lower


def series_ratio_by_depth(coeffs, n, dmax):
    """Like :func:`series_ratio_approx` but keeping only subsets of at most ``dmax`` elements."""
    if n < 2:
        raise ValueError("n must be >= 2")
    f = coeffs.field
    for i in range(n - 1):
        if not _nonzero(f, coeffs.b(i)):
            raise DomainError(f"b_{i} = 0", index=i)
    g = _weights(coeffs, n - 2)
    lower = sum(phi_by_depth(g, 1, n, dmax).by_depth[1:], f.one)
    upper = sum(phi_by_depth(g, 2, n, dmax).by_depth[1:], f.one)
    if not _nonzero(f, lower):
        raise DegenerateDenominatorError(f"depth-{dmax} truncation of Phi(1, {n}) = 0", index=n)
    return coeffs.a(0) / coeffs.b(0) * upper / lower
