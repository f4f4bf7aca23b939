"""Command line interface: ``eval``, ``table`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
domain error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field as dc_field
from typing import Optional

from .coeffspec import PRESETS, build_coeff_seq, load_coeff_file, preset_coeffs
from .contfrac import convergents, eval_backward, eval_lentz
from .errors import (
    CFError, CoefficientError, DegenerateDenominatorError, DomainError, NonConvergenceError,
)
from .expansion import series_ratio_approx, series_ratio_by_depth
from .expr import eval_expr, parse_expr
from .scalar import RATIONAL, ComplexField, SeriesField, make_field
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
METHODS = ("backward", "lentz", "convergent", "series-ratio")
ALTERNATE = {"backward": "convergent", "lentz": "backward",
             "convergent": "series-ratio", "series-ratio": "convergent"}


class UsageError(CFError):
    pass


@dataclass
class RunConfig:
    command: str
    realization: str = "rational"
    precision_bits: int = 128
    series_degree: int = 8
    depth: int = 40
    phi_depth: Optional[int] = None
    eps: float = 1e-30
    seed: int = 0
    format: str = "json"
    preset: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    params: list = dc_field(default_factory=list)
    a0: Optional[str] = None
    b0: Optional[str] = None
    coeff_file: Optional[str] = None
    method: str = "backward"
    max_iter: int = 10_000
    suite: str = "all"
    trials: Optional[int] = None

    def field(self):
        return make_field(self.realization, self.precision_bits, self.series_degree)


def _global_flags():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--realization", choices=("rational", "float", "complex", "series"), default="rational")
    g.add_argument("--precision-bits", type=int, default=128)
    g.add_argument("--series-degree", type=int, default=8)
    g.add_argument("--depth", type=int, default=40)
    g.add_argument("--phi-depth", type=int, default=None)
    g.add_argument("--eps", type=float, default=1e-30)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=("json", "csv"), default="json")
    g.add_argument("--preset", choices=PRESETS)
    g.add_argument("--a", help="expression for a_m")
    g.add_argument("--b", help="expression for b_m")
    g.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    for short in ("q", "z", "c"):
        g.add_argument(f"--{short}", help=f"shorthand for --param {short}=VALUE")
    g.add_argument("--a0")
    g.add_argument("--b0")
    g.add_argument("--coeff-file")
    return p


def build_parser():
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="cfseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", parents=[common], help="evaluate a continued fraction")
    ev.add_argument("--method", choices=METHODS, default="backward")
    ev.add_argument("--max-iter", type=int, default=10_000)
    sub.add_parser("table", parents=[common], help="convergents next to finite series ratios")
    ve = sub.add_parser("verify", parents=[common], help="run randomized verification suites")
    ve.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ve.add_argument("--trials", type=int, default=None)
    return parser


def config_from_args(ns):
    params = list(ns.param)
    for short in ("q", "z", "c"):
        value = getattr(ns, short)
        if value is not None:
            params.append(f"{short}={value}")
    cfg = RunConfig(command=ns.command)
    for key in ("realization", "precision_bits", "series_degree", "depth", "phi_depth", "eps",
                "seed", "format", "preset", "a", "b", "a0", "b0", "coeff_file"):
        setattr(cfg, key, getattr(ns, key))
    cfg.params = params
    if ns.command == "eval":
        cfg.method, cfg.max_iter = ns.method, ns.max_iter
    if ns.command == "verify":
        cfg.suite, cfg.trials = ns.suite, ns.trials
    return cfg


def _base_bindings(field):
    if isinstance(field, ComplexField):
        return {"i": field.imag_unit}
    if isinstance(field, SeriesField):
        return {field.var: field.generator}
    return {}


def _parse_params(cfg, field):
    base = _base_bindings(field)
    out = {}
    for item in cfg.params:
        name, sep, text = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        out[name] = eval_expr(parse_expr(text), base, field)
    return out


def build_coeffs(cfg):
    """The coefficient sequence a configuration describes."""
    field = cfg.field()
    sources = [cfg.preset is not None, cfg.a is not None or cfg.b is not None, cfg.coeff_file is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --preset, --a/--b, --coeff-file")
    overrides = {k: v for k, v in (("a0", cfg.a0), ("b0", cfg.b0)) if v is not None}
    overrides = {k: eval_expr(parse_expr(v), _base_bindings(field), field) for k, v in overrides.items()}
    params = _parse_params(cfg, field)
    if cfg.preset is not None:
        if isinstance(field, SeriesField) and field.var not in params:
            params[field.var] = field.generator
        if cfg.preset == "app3-paper" and "c" in params:
            # the exponent offset stays exact whatever the realization
            params["c"] = _exact_constant(cfg, "c")
        return preset_coeffs(cfg.preset, params, field, overrides or None)
    if cfg.coeff_file is not None:
        return load_coeff_file(cfg.coeff_file, field, overrides or None)
    if cfg.a is None or cfg.b is None:
        raise UsageError("--a and --b must be given together")
    params = {**_base_bindings(field), **params}
    return build_coeff_seq(cfg.a, cfg.b, params, overrides or None, field, label="expr")


def _exact_constant(cfg, name):
    for item in reversed(cfg.params):
        key, _, text = item.partition("=")
        if key.strip() == name:
            return eval_expr(parse_expr(text), {}, RATIONAL)
    raise UsageError(f"missing parameter {name}")


def _fmt(field, x):
    return "inf" if x is None else field.format(x)


def _diff(field, x, y):
    if x is None or y is None:
        return "nan"
    d = x - y
    if isinstance(field, SeriesField):
        return field.format(d)
    if isinstance(field, ComplexField):
        return field.base.format(abs(d)) if not field.base.exact else field.format(d)
    return field.format(abs(d))


def _evaluate(method, coeffs, cfg):
    """Value and depth reached by one evaluation method."""
    if method == "backward":
        return eval_backward(coeffs, cfg.depth), cfg.depth
    if method == "convergent":
        conv = convergents(coeffs, cfg.depth)[-1]
        if conv.at_infinity:
            raise DomainError(f"convergent {cfg.depth} is at infinity", index=cfg.depth)
        return conv.value, cfg.depth
    if method == "series-ratio":
        if cfg.phi_depth is not None:
            return series_ratio_by_depth(coeffs, cfg.depth + 2, cfg.phi_depth), cfg.depth
        return series_ratio_approx(coeffs, cfg.depth + 2), cfg.depth
    res = eval_lentz(coeffs, cfg.eps, cfg.max_iter)
    return res.value, res.iterations


def cmd_eval(cfg):
    coeffs = build_coeffs(cfg)
    field = coeffs.field
    if cfg.method == "lentz" and field.exact:
        raise UsageError("--method lentz needs --realization float or complex")
    value, depth = _evaluate(cfg.method, coeffs, cfg)
    alt = ALTERNATE[cfg.method]
    alt_value, _ = _evaluate(alt, coeffs, cfg)
    return {
        "method": cfg.method,
        "value": _fmt(field, value),
        "depth": depth,
        "alternate": alt,
        "alternate_value": _fmt(field, alt_value),
        "residual": _diff(field, value, alt_value),
    }


def cmd_table(cfg):
    coeffs = build_coeffs(cfg)
    field = coeffs.field
    rows = []
    for conv in convergents(coeffs, cfg.depth):
        n = conv.index
        value = conv.value
        try:
            ratio = series_ratio_approx(coeffs, n + 2)
        except DegenerateDenominatorError:
            ratio = None
        rows.append({
            "n": n,
            "convergent": _fmt(field, value),
            "series_ratio": _fmt(field, ratio),
            "abs_diff": _diff(field, value, ratio),
        })
    return rows


def cmd_verify(cfg):
    return run_suite(cfg.suite, cfg.seed, cfg.trials, cfg.precision_bits)


def _render_csv(header, rows):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def run(cfg):
    """Execute a configuration; returns ``(stdout text, exit code)``."""
    if cfg.command == "eval":
        record = cmd_eval(cfg)
        if cfg.format == "csv":
            return _render_csv(list(record), [record]), EXIT_OK
        return json.dumps({"config": asdict(cfg), "record": record}, indent=2) + "\n", EXIT_OK
    if cfg.command == "table":
        rows = cmd_table(cfg)
        if cfg.format == "csv":
            return _render_csv(["n", "convergent", "series_ratio", "abs_diff"], rows), EXIT_OK
        return json.dumps({"config": asdict(cfg), "rows": rows}, indent=2) + "\n", EXIT_OK
    reports = cmd_verify(cfg)
    status = "pass" if all(r.status == "pass" for r in reports) else "fail"
    code = EXIT_OK if status == "pass" else EXIT_VERIFY
    if cfg.format == "csv":
        rows = [{"suite": r.suite, "trials": r.trials, "status": r.status, "failures": len(r.failures)}
                for r in reports]
        return _render_csv(["suite", "trials", "status", "failures"], rows), code
    doc = {"config": asdict(cfg), "reports": [r.as_dict() for r in reports], "status": status}
    return json.dumps(doc, indent=2) + "\n", code


def _exit_code_for(exc):
    if isinstance(exc, CoefficientError):
        exc = exc.cause
    if isinstance(exc, (DomainError, NonConvergenceError, ZeroDivisionError)):
        return EXIT_DOMAIN
    return EXIT_USAGE


def main(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = config_from_args(ns)
    try:
        text, code = run(cfg)
    except (CFError, ZeroDivisionError) as exc:
        stderr.write(f"cfseries: error: {exc}\n")
        return _exit_code_for(exc)
    stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
