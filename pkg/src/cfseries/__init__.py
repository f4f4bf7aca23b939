"""Three-term recurrences, continued fractions and their gap-subset series expansion."""

from .errors import (
    CFError, CoefficientError, ConfigurationError, DegenerateDenominatorError, DomainError,
    EnumerationGuardError, ExprSyntaxError, NonConvergenceError, PoleError,
    UnboundIdentifierError, UnknownCharacterError,
)
from .scalar import (
    RATIONAL, ComplexField, FloatField, QComplex, RationalField, SeriesField, TruncatedSeries,
    close_to, field_of, make_field, series_div, series_mul,
)
from .expr import eval_expr, parse_expr, render
from .coeffspec import CoeffSeq, build_coeff_seq, parse_coeff_list, preset_coeffs
from .recurrence import iterate, minimal_estimate, minimal_solution, tail_backward, tail_ratios
from .expansion import (
    GWeights, PhiTable, g_weights, phi_by_depth, phi_dp, phi_enumerate, reconstruct,
    series_ratio_approx,
)
from .contfrac import (
    Convergent, convergents, equivalence_transform, eval_backward, eval_lentz,
)
from .applications import SeriesValue, app3_series, hyp0F1, q_pochhammer, rr_series

__version__ = "0.1.0"
