"""Coefficient sequences (a_m, b_m) for three-term recurrences and continued fractions.

A :class:`CoeffSeq` is built from rules (expressions, explicit lists, callables)
or from a named preset. Coefficients are evaluated lazily at the requested
index; ``b_m != 0`` is not enforced here but at the point of use.
"""

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from .errors import CFError, CoefficientError, ConfigurationError
from .expr import eval_expr, free_names, parse_expr, Num, Var, BinOp, Neg
from .scalar import RATIONAL, to_fraction

PRESETS = ("app1", "app2", "app3-paper", "app3-canonical", "constant", "list")


@dataclass(frozen=True)
class CoeffSeq:
    """Partial numerators ``a(m)`` and denominators ``b(m)``, m >= 0.

    ``length`` is ``None`` for infinite sequences; explicit lists have a finite
    length and raise :class:`CoefficientError` past their end.
    """

    field: object
    a_rule: Callable
    b_rule: Callable
    length: Optional[int] = None
    label: str = ""
    params: dict = dc_field(default_factory=dict, compare=False)

    def _at(self, rule, m):
        if m < 0:
            raise ConfigurationError(f"negative coefficient index {m}")
        if self.length is not None and m >= self.length:
            raise CoefficientError(m, ConfigurationError(f"index beyond explicit list of length {self.length}"))
        try:
            return rule(m)
        except CoefficientError:
            raise
        except (CFError, ZeroDivisionError) as exc:
            raise CoefficientError(m, exc) from exc

    def a(self, m):
        return self._at(self.a_rule, m)

    def b(self, m):
        return self._at(self.b_rule, m)

    def pairs(self, n):
        """``[(a_0, b_0), ..., (a_n, b_n)]``."""
        return [(self.a(m), self.b(m)) for m in range(n + 1)]


def _expr_rule(node, params, field):
    def rule(m):
        bindings = dict(params)
        bindings["m"] = field.convert(m)
        return eval_expr(node, bindings, field)

    return rule


def _list_rule(values, field):
    vals = tuple(field.convert(v) for v in values)
    return lambda m: vals[m]


def _rule(spec, params, field, which):
    if callable(spec):
        return spec, None
    if isinstance(spec, str):
        spec = parse_expr(spec)
    if isinstance(spec, (Num, Var, Neg, BinOp)):
        missing = free_names(spec) - set(params) - {"m"}
        if missing:
            raise ConfigurationError(f"{which}-rule has unbound parameters: {', '.join(sorted(missing))}")
        return _expr_rule(spec, params, field), None
    values = list(spec)
    return _list_rule(values, field), len(values)


def _with_head(rule, head):
    if head is None:
        return rule
    return lambda m: head if m == 0 else rule(m)


def build_coeff_seq(a_rule, b_rule, params=None, overrides=None, field=RATIONAL, label=""):
    """Build a coefficient sequence from two rules.

    Parameters
    ----------
    a_rule, b_rule
        Expression text, a parsed expression, an explicit list of values or a
        callable ``m -> Scalar``. Expressions may use ``m`` and any name in
        ``params``.
    params : dict, optional
        Name to value bindings; values are converted into ``field``.
    overrides : dict, optional
        ``{"a0": value, "b0": value}`` replacing the index-0 coefficients only.
    field
        Scalar realization; rational by default.
    """
    params = {k: field.convert(v) for k, v in (params or {}).items()}
    if "m" in params:
        raise ConfigurationError("'m' is the index variable and cannot be a parameter")
    overrides = dict(overrides or {})
    unknown = set(overrides) - {"a0", "b0"}
    if unknown:
        raise ConfigurationError(f"unknown override(s): {', '.join(sorted(unknown))}")
    a, la = _rule(a_rule, params, field, "a")
    b, lb = _rule(b_rule, params, field, "b")
    lengths = [x for x in (la, lb) if x is not None]
    length = min(lengths) if lengths else None
    a0 = overrides.get("a0")
    b0 = overrides.get("b0")
    a = _with_head(a, None if a0 is None else field.convert(a0))
    b = _with_head(b, None if b0 is None else field.convert(b0))
    return CoeffSeq(field, a, b, length, label, params)


def parse_coeff_list(text):
    """Parse the explicit-list format: one ``a_m b_m`` pair per line, line i is index m=i.

    Values are exact rationals (``3/4``) or decimals (``0.25``). Trailing blank
    lines are ignored; blank lines in between are an error.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    a_vals, b_vals = [], []
    for m, line in enumerate(lines):
        parts = line.split()
        if len(parts) != 2:
            raise ConfigurationError(f"line {m + 1}: expected 'a_m b_m', got {line!r}")
        a_vals.append(to_fraction(parts[0]))
        b_vals.append(to_fraction(parts[1]))
    return a_vals, b_vals


def load_coeff_file(path, field=RATIONAL, overrides=None):
    with open(path, encoding="utf-8") as fh:
        a_vals, b_vals = parse_coeff_list(fh.read())
    return build_coeff_seq(a_vals, b_vals, field=field, overrides=overrides, label=f"file:{path}")


# ---------------------------------------------------------------------------
# Presets


def _require(params, names, preset):
    missing = [n for n in names if n not in params]
    if missing:
        raise ConfigurationError(f"preset {preset!r} needs parameter(s): {', '.join(missing)}")


def alternating_exponent(m, c=0):
    """``(-1)^m * (c + sum_{k=0..m} (-1)^k k)`` by exact integer recurrence."""
    s = 0
    sign = 1
    for k in range(m + 1):
        s += sign * k
        sign = -sign
    return (1 if m % 2 == 0 else -1) * (to_fraction(c) + s)


def preset_coeffs(name, params=None, field=RATIONAL, overrides=None):
    """Coefficient sequences of the worked applications plus two generic presets.

    ``app1`` (c, z)
        a_0 = c, a_m = z, b_m = c + m. Evaluates to 0F1(c+1; z) / 0F1(c; z).
    ``app2`` (q, z)
        a_0 = 1, a_m = z q^m, b_m = 1. The Rogers-Ramanujan fraction.
    ``app3-paper`` (q, z, c)
        a_0 = 1, a_m = z, b_m = q^{e_m} with
        e_m = (-1)^m (c + sum_{k<=m} (-1)^k k).
    ``app3-canonical`` (q, z)
        a_0 = 1, a_m = z q^{m-1}, b_m = q^m. Equivalent to ``app3-paper`` with
        c = 0 under rescaling by r_m = q^floor(m/2).
    ``constant`` (a, b)
        a_m = a, b_m = b.
    ``list`` (a, b)
        explicit finite sequences.
    """
    params = dict(params or {})
    if name not in PRESETS:
        raise ConfigurationError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    if name == "list":
        _require(params, ["a", "b"], name)
        return build_coeff_seq(list(params["a"]), list(params["b"]), field=field,
                               overrides=overrides, label=name)

    required = {
        "app1": ["c", "z"],
        "app2": ["q", "z"],
        "app3-paper": ["q", "z", "c"],
        "app3-canonical": ["q", "z"],
        "constant": ["a", "b"],
    }[name]
    _require(params, required, name)
    conv = {k: field.convert(v) for k, v in params.items() if k != "c" or name != "app3-paper"}
    one = field.one

    if name == "app1":
        c, z = conv["c"], conv["z"]
        a = lambda m: c if m == 0 else z
        b = lambda m: c + m
    elif name == "app2":
        q, z = conv["q"], conv["z"]
        a = lambda m: one if m == 0 else z * field.power(q, m)
        b = lambda m: one
    elif name == "app3-paper":
        q, z = conv["q"], conv["z"]
        try:
            c = to_fraction(params["c"])
        except TypeError:
            raise ConfigurationError("app3-paper needs a rational c") from None
        a = lambda m: one if m == 0 else z
        b = lambda m: field.real_power(q, alternating_exponent(m, c))
    elif name == "app3-canonical":
        q, z = conv["q"], conv["z"]
        a = lambda m: one if m == 0 else z * field.power(q, m - 1)
        b = lambda m: field.power(q, m)
    else:
        ca, cb = conv["a"], conv["b"]
        a = lambda m: ca
        b = lambda m: cb

    seq = CoeffSeq(field, a, b, None, name, conv)
    if overrides:
        return build_coeff_seq(seq.a_rule, seq.b_rule, field=field, overrides=overrides, label=name)
    return seq
