from .checks import (
    call_representation_check,
    exponential_cdf_monotone,
    martingale_check,
    ordering_check,
    put_representation_check,
    share_consistency_check
)
from .estimators import (
    estimate_scaled_cgf,
    estimate_tail,
    family_spec,
    measure_spec,
    scaled_cgf_window,
    tail_from_sample
)
from .exceptions import (
    BudgetExceeded,
    EstimatorDomainError,
    GateRefused,
    MonteCarloError
)
from .models import (
    CgfEstimate,
    ConvergenceRow,
    ConvergenceTable,
    Direction,
    LimitMethod,
    McConfig,
    Measure,
    MomentReport,
    OrderingReport,
    PairedGap,
    Perturbation,
    PerturbationKind,
    RepresentationReport,
    Scheme,
    TailEstimate,
    TerminalSample
)
from .runner import DEFAULT_RUNNER, BlockRunner
from .simulator import draw_exponentials, simulate_terminal
from .study import convergence_study, event_interval, match_configuration



__all__ = [
    "call_representation_check",
    "exponential_cdf_monotone",
    "martingale_check",
    "ordering_check",
    "put_representation_check",
    "share_consistency_check",
    "estimate_scaled_cgf",
    "estimate_tail",
    "family_spec",
    "measure_spec",
    "scaled_cgf_window",
    "tail_from_sample",
    "BudgetExceeded",
    "EstimatorDomainError",
    "GateRefused",
    "MonteCarloError",
    "CgfEstimate",
    "ConvergenceRow",
    "ConvergenceTable",
    "Direction",
    "LimitMethod",
    "McConfig",
    "Measure",
    "MomentReport",
    "OrderingReport",
    "PairedGap",
    "Perturbation",
    "PerturbationKind",
    "RepresentationReport",
    "Scheme",
    "TailEstimate",
    "TerminalSample",
    "DEFAULT_RUNNER",
    "BlockRunner",
    "draw_exponentials",
    "simulate_terminal",
    "convergence_study",
    "event_interval",
    "match_configuration",
]
