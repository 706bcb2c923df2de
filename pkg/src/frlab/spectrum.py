"""Exponential-sum spectra and their L1/L2/Linf norms over [0,1].

The transform of a sequence f is F(x) = sum_{n=1}^{R} f(n) e^{2*pi*i*n*x},
evaluated on uniform grids x_j = j/M by one zero-padded real FFT. Two
real-valued realizations of F are supported for the norm integrals:

  "cosine"  -- sqrt(2) * Re F(x) = sqrt(2) * sum f(n) cos(2*pi*n*x), the
               power-matched cosine series. This is the realization behind
               the benchmark tables and the sqrt(2/pi) Gaussian reference,
               and is the default.
  "modulus" -- |F(x)|, the envelope of the cosine realization. This is the
               realization with the textbook closed forms (e.g. R=2 Mobius
               gives the arch 2|sin(pi*x)| with L1 = 4/pi).

Both share the same L2 norm (Parseval: sum f(n)^2), so the Fourier ratio
l1/l2 differs only through the numerator. Grid sizes are powers of two and
at least 2R+2, which makes the rectangle rule exact for the squared
realization; that identity doubles as a built-in correctness oracle.

All reductions use numpy's fixed-shape pairwise summation, so results are
bit-identical regardless of caller-level parallelism.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParsevalError, ResourceLimitError
from .sequences import ArithmeticSequence

REALIZATIONS = ("cosine", "modulus")
DEFAULT_OVERSAMPLE = 4
DEFAULT_MAX_BYTES = 2_000_000_000

#: Relative tolerance for the internal grid-vs-coefficient power check.
PARSEVAL_RTOL = 1e-9


@dataclass(frozen=True)
class SpectrumGrid:
    """Transform magnitudes |F(j/M)| on the uniform grid j = 0..M-1."""
    M: int
    magnitudes: np.ndarray
    R: int
    oversample: int

    def __post_init__(self):
        if self.M < 2 * self.R + 2:
            raise ValueError("grid size must be at least 2R+2")
        if self.magnitudes.shape != (self.M,):
            raise ValueError("magnitudes must have length M")
        self.magnitudes.setflags(write=False)


@dataclass(frozen=True)
class NormReport:
    """Norm estimates for one sequence under one realization."""
    l1: float
    l2: float
    linf: float
    fourier_ratio: float
    l1_error_indicator: float
    linf_correction_bound: float
    M_used: int
    R: int
    realization: str


def transform_size(R: int, oversample: int) -> int:
    """Smallest power of two >= max(oversample*R, 2R+2)."""
    target = max(oversample * R, 2 * R + 2)
    return 1 << (target - 1).bit_length()


def grid_bytes(M: int) -> int:
    """Estimated peak allocation for a length-M evaluation.

    Real input buffer (8 bytes/point) plus the complex half-spectrum
    (16 bytes for M/2+1 points): about 16*M in total.
    """
    return 8 * M + 16 * (M // 2 + 1)


def _check_budget(M: int, max_bytes: int, context: str = ""):
    required = grid_bytes(M)
    if required > max_bytes:
        raise ResourceLimitError(required, max_bytes, context)


def _half_spectrum(values: np.ndarray, M: int) -> np.ndarray:
    """F(j/M) for j = 0..M/2 via one zero-padded real FFT.

    numpy's rfft uses the e^{-2*pi*i*n*x} kernel; for real input that is
    the conjugate of F, which leaves Re F and |F| unchanged.
    """
    pad = np.zeros(M)
    pad[: values.size] = values
    return np.fft.rfft(pad)


def _grid_l1_linf(half: np.ndarray, M: int, realization: str) -> tuple[float, float]:
    """Full-circle mean and max of the realization from the half grid.

    Interior points j = 1..M/2-1 appear twice on the full circle
    (conjugate symmetry), the endpoints j = 0 and j = M/2 once.
    """
    if realization == "cosine":
        g = np.abs(half.real)
        scale = math.sqrt(2.0)
    elif realization == "modulus":
        g = np.abs(half)
        scale = 1.0
    else:
        raise ValueError(f"unknown realization {realization!r}")
    total = 2.0 * float(np.sum(g)) - float(g[0]) - float(g[-1])
    return scale * total / M, scale * float(np.max(g))


def _grid_power(half: np.ndarray, M: int, realization: str) -> float:
    """Full-circle mean of the squared realization (quadrature L2^2)."""
    if realization == "cosine":
        g2 = np.square(half.real)
        scale = 2.0
    else:
        g2 = np.square(half.real) + np.square(half.imag)
        scale = 1.0
    total = 2.0 * float(np.sum(g2)) - float(g2[0]) - float(g2[-1])
    return scale * total / M


def eval_point(f: ArithmeticSequence, x: float) -> complex:
    """Direct compensated evaluation of F(x); the oracle for grid values."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    n = np.arange(1, f.R + 1, dtype=np.float64)
    terms = f.values[1:] * np.exp(2j * math.pi * x * n)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def eval_grid(f: ArithmeticSequence, oversample: int,
              max_bytes: int = DEFAULT_MAX_BYTES) -> SpectrumGrid:
    """Magnitudes |F(j/M)| on the full grid j = 0..M-1."""
    if oversample < 2:
        raise ValueError("oversample must be at least 2")
    M = transform_size(f.R, oversample)
    _check_budget(M, max_bytes, f"eval_grid(R={f.R}, oversample={oversample})")
    half = np.abs(_half_spectrum(f.values, M))
    mags = np.empty(M)
    mags[: M // 2 + 1] = half
    mags[M // 2 + 1:] = half[1: M // 2][::-1]
    return SpectrumGrid(M=M, magnitudes=mags, R=f.R, oversample=oversample)


def l2_parseval(f: ArithmeticSequence) -> float:
    """sqrt(sum f(n)^2): the L2 norm of either realization, no quadrature."""
    return math.sqrt(float(np.sum(np.square(f.values))))


def l1_quadrature(f: ArithmeticSequence, oversample: int,
                  realization: str = "cosine",
                  max_bytes: int = DEFAULT_MAX_BYTES) -> tuple[float, float]:
    """L1 estimate by the rectangle rule, plus a refinement indicator.

    Computes the grid mean at the requested oversample and at twice it;
    returns the finer estimate and the absolute difference between the two.
    """
    if oversample < 2:
        raise ValueError("oversample must be at least 2")
    M1 = transform_size(f.R, oversample)
    M2 = transform_size(f.R, 2 * oversample)
    _check_budget(M2, max_bytes, f"l1_quadrature(R={f.R}, oversample={oversample})")
    coarse, _ = _grid_l1_linf(_half_spectrum(f.values, M1), M1, realization)
    fine, _ = _grid_l1_linf(_half_spectrum(f.values, M2), M2, realization)
    return fine, abs(fine - coarse)


def linf_grid(f: ArithmeticSequence, oversample: int,
              realization: str = "cosine",
              max_bytes: int = DEFAULT_MAX_BYTES) -> tuple[float, float]:
    """Grid max of the realization and its Bernstein correction factor.

    The true supremum is at most estimate * correction, where the factor
    1/(1 - pi*R/M) comes from the derivative bound for degree-R
    trigonometric polynomials; it requires M > pi*R.
    """
    if oversample < 2:
        raise ValueError("oversample must be at least 2")
    M = transform_size(f.R, oversample)
    if M <= math.pi * f.R:
        raise ValueError(f"grid size {M} is not above pi*R={math.pi * f.R:.0f}; "
                         "increase oversample")
    _check_budget(M, max_bytes, f"linf_grid(R={f.R}, oversample={oversample})")
    _, peak = _grid_l1_linf(_half_spectrum(f.values, M), M, realization)
    return peak, 1.0 / (1.0 - math.pi * f.R / M)


def fourier_ratio(f: ArithmeticSequence, oversample: int = DEFAULT_OVERSAMPLE,
                  realization: str = "cosine",
                  max_bytes: int = DEFAULT_MAX_BYTES) -> NormReport:
    """Assemble the full norm report over one shared pair of grids.

    The L1 estimate, its refinement indicator, and the grid max all come
    from the (oversample, 2*oversample) grid pair; L2 is Parseval-exact.
    The refinement grid is at least 4R, so the Bernstein factor is always
    defined. Raises ParsevalError if the quadrature power drifts from the
    coefficient power (exit code 4 at the CLI).
    """
    if realization not in REALIZATIONS:
        raise ValueError(f"unknown realization {realization!r}")
    if oversample < 2:
        raise ValueError("oversample must be at least 2")
    l2 = l2_parseval(f)
    if l2 == 0.0:
        raise ValueError("fourier ratio is undefined for the zero sequence")
    M1 = transform_size(f.R, oversample)
    M2 = transform_size(f.R, 2 * oversample)
    _check_budget(M2, max_bytes, f"fourier_ratio(R={f.R}, oversample={oversample})")

    coarse, _ = _grid_l1_linf(_half_spectrum(f.values, M1), M1, realization)
    fine_half = _half_spectrum(f.values, M2)
    l1, linf = _grid_l1_linf(fine_half, M2, realization)

    power = _grid_power(fine_half, M2, realization)
    if abs(power - l2 * l2) > PARSEVAL_RTOL * l2 * l2:
        raise ParsevalError(
            f"grid power {power!r} vs coefficient power {l2 * l2!r} "
            f"(R={f.R}, M={M2}, realization={realization})")

    return NormReport(
        l1=l1,
        l2=l2,
        linf=linf,
        fourier_ratio=l1 / l2,
        l1_error_indicator=abs(l1 - coarse),
        linf_correction_bound=1.0 / (1.0 - math.pi * f.R / M2),
        M_used=M2,
        R=f.R,
        realization=realization,
    )
