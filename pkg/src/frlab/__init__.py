"""frlab: Fourier-ratio analysis of arithmetic sequences.

Sequence generation (Mobius, Liouville, von Mangoldt, squarefree
indicator, seeded random signs), exponential-sum norms over [0,1] under
two realizations, Khintchine statistics, sign-pattern shattering
experiments, and reproducible benchmark tables.
"""

from .errors import ParsevalError, ResourceLimitError
from .sequences import (ArithmeticSequence, center, custom, sieve,
                        squarefree_integers, summatory)
from .shatter import (KhintchineStats, PatternResult, ShatterInstance,
                      ShatterReport, default_shatter_set, exhaustive_mean_abs,
                      khintchine_stats, random_completion, shatter_check)
from .spectrum import (NormReport, SpectrumGrid, eval_grid, eval_point,
                       fourier_ratio, l1_quadrature, l2_parseval, linf_grid,
                       transform_size)
from .report import ReportDoc, parse_csv, render
from .runners import (GAUSSIAN_BENCHMARK, run_figures, run_norms, run_shatter,
                      run_table1, run_table2)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticSequence", "KhintchineStats", "NormReport", "ParsevalError",
    "PatternResult", "ReportDoc", "ResourceLimitError", "ShatterInstance",
    "ShatterReport", "SpectrumGrid", "GAUSSIAN_BENCHMARK", "center", "custom",
    "default_shatter_set", "eval_grid", "eval_point", "exhaustive_mean_abs",
    "fourier_ratio", "khintchine_stats", "l1_quadrature", "l2_parseval",
    "linf_grid", "parse_csv", "random_completion", "render", "run_figures",
    "run_norms", "run_shatter", "run_table1", "run_table2", "shatter_check",
    "sieve", "squarefree_integers", "summatory", "transform_size",
]
