"""Seeded randomized verification suites.

Every suite draws its trials from ``random.Random`` seeded by the suite name
and the user seed, so a given seed always replays the same inputs. Each
trial gets its own 64-bit seed, reported with any failure as a reproducer.
"""

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import applications
from .coeffspec import build_coeff_seq
from .contfrac import convergents
from .errors import DegenerateDenominatorError
from .expansion import GWeights, phi_dp, phi_enumerate, reconstruct, series_ratio_approx
from .recurrence import iterate
from .scalar import RATIONAL, FloatField

SUITES = ("eq4", "phi", "bridge", "apps")
DEFAULT_TRIALS = {"eq4": 200, "phi": 100, "bridge": 100, "apps": None}
APPS_TOLERANCE = Fraction(1, 10**10)

# (identity, exact parameters) evaluated by the "apps" suite
APP_POINTS = [
    ("app1", {"c": Fraction(1), "z": Fraction(1, 2)}),
    ("app1", {"c": Fraction(2), "z": Fraction(-3, 10)}),
    ("app1", {"c": Fraction(1, 2), "z": Fraction(1, 4)}),
    ("app2", {"q": Fraction(1, 5), "z": Fraction(1)}),
    ("app3-paper", {"q": Fraction(2), "z": Fraction(1), "c": Fraction(0)}),
    ("app3-canonical", {"q": Fraction(2), "z": Fraction(1)}),
]


@dataclass
class VerifyReport:
    suite: str
    trials: int
    failures: list = dc_field(default_factory=list)
    details: list = dc_field(default_factory=list)

    @property
    def status(self):
        return "pass" if not self.failures else "fail"

    def as_dict(self):
        return {
            "suite": self.suite,
            "trials": self.trials,
            "status": self.status,
            "failures": self.failures,
            "details": self.details,
        }


def random_rational(rng, nonzero=False):
    """Numerator uniform in [-9, 9], denominator in [1, 9]; resampled while zero if ``nonzero``."""
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if x or not nonzero:
            return x


def random_coeffs(rng, length):
    a = [random_rational(rng) for _ in range(length)]
    b = [random_rational(rng, nonzero=True) for _ in range(length)]
    return build_coeff_seq(a, b, field=RATIONAL, label="random")


def _trial_seeds(suite, seed, trials):
    rng = random.Random(f"{suite}:{seed}")
    return [rng.getrandbits(64) for _ in range(trials)]


def _fmt(x):
    return RATIONAL.format(x)


def verify_eq4(trials, seed, n_max=30):
    """Closed-form reconstruction against forward iteration, exact, all 2 <= n <= n_max."""
    report = VerifyReport("eq4", trials)
    for t, ts in enumerate(_trial_seeds("eq4", seed, trials)):
        rng = random.Random(ts)
        coeffs = random_coeffs(rng, n_max + 1)
        x0, x1 = random_rational(rng), random_rational(rng)
        xs = iterate(coeffs, x0, x1, n_max).values
        for n in range(2, n_max + 1):
            got = reconstruct(coeffs, x0, x1, n)
            if got != xs[n]:
                report.failures.append({
                    "trial": t, "seed": ts, "inputs": {"n": n, "x0": _fmt(x0), "x1": _fmt(x1)},
                    "expected": _fmt(xs[n]), "actual": _fmt(got),
                })
                break
    return report


def verify_phi(trials, seed, max_size=16):
    """Gap-subset sums: recurrence against explicit enumeration, exact."""
    report = VerifyReport("phi", trials)
    for t, ts in enumerate(_trial_seeds("phi", seed, trials)):
        rng = random.Random(ts)
        start = rng.choice((1, 2, 3))
        size = rng.randint(0, max_size)
        g = GWeights(tuple(random_rational(rng) for _ in range(start - 1 + size)), RATIONAL)
        end = start + size + 1
        fast, slow = phi_dp(g, start, end), phi_enumerate(g, start, end)
        if fast != slow:
            report.failures.append({
                "trial": t, "seed": ts, "inputs": {"start": start, "size": size},
                "expected": _fmt(slow), "actual": _fmt(fast),
            })
    return report


def verify_bridge(trials, seed, m_max=25):
    """Finite series ratio at n = m + 2 against the m-th convergent, exact."""
    report = VerifyReport("bridge", trials)
    skipped = 0
    for t, ts in enumerate(_trial_seeds("bridge", seed, trials)):
        rng = random.Random(ts)
        coeffs = random_coeffs(rng, m_max + 1)
        for conv in convergents(coeffs, m_max):
            m = conv.index
            if conv.at_infinity:
                skipped += 1
                continue
            try:
                got = series_ratio_approx(coeffs, m + 2)
            except DegenerateDenominatorError:
                got = None
            if got != conv.value:
                report.failures.append({
                    "trial": t, "seed": ts, "inputs": {"m": m},
                    "expected": _fmt(conv.value), "actual": "degenerate" if got is None else _fmt(got),
                })
                break
    report.details.append({"skipped_at_infinity": skipped})
    return report


def verify_apps(precision_bits=128, depth=60, tolerance=APPS_TOLERANCE):
    """Fraction by backward evaluation against the series ratio at fixed points."""
    field = FloatField(precision_bits)
    report = VerifyReport("apps", len(APP_POINTS))
    for t, (name, params) in enumerate(APP_POINTS):
        frac, ratio, resid = applications.identity_residual(name, params, field, depth=depth)
        row = {
            "identity": name,
            "params": {k: _fmt(v) for k, v in params.items()},
            "fraction": field.format(frac),
            "series_ratio": field.format(ratio),
            "residual": field.format(resid),
        }
        report.details.append(row)
        if not resid < field.convert(tolerance):
            report.failures.append({
                "trial": t, "seed": None, "inputs": row["params"],
                "expected": row["series_ratio"], "actual": row["fraction"],
            })
    return report


def run_suite(suite, seed, trials=None, precision_bits=128):
    if suite == "all":
        return [run_suite(s, seed, trials, precision_bits)[0] for s in SUITES]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "apps":
        return [verify_apps(precision_bits)]
    n = DEFAULT_TRIALS[suite] if trials is None else trials
    return [{"eq4": verify_eq4, "phi": verify_phi, "bridge": verify_bridge}[suite](n, seed)]
