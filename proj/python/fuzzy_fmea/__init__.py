"""Traditional and fuzzy FMEA risk priority numbers (Python bindings)."""

from ._core import (
    DEFAULT_SAMPLES,
    ConfigError,
    DegenerateOutputError,
    Error,
    FactorWeights,
    FailureModeRecord,
    Fis,
    InferenceError,
    NoRuleFiredError,
    ParameterError,
    ParseError,
    RiskAssessment,
    ValidationError,
    assess_register,
    build_default_fis,
    centroid,
    fuzzy_rpn,
    gaussian_membership,
    load_fis,
    load_register,
    parse_fis,
    parse_register,
    render_report,
    spearman,
    surface,
    traditional_rpn,
    triangular_membership,
    write_fis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
