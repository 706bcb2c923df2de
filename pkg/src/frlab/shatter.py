"""Randomized sign-completion experiments on the squarefree support.

A completion fixes a sign pattern sigma on a squarefree set S, fills the
remaining squarefree positions with seeded random signs, and is zero off
the squarefree support. shatter_check asks, for every one of the 2^|S|
patterns, whether some completion reaches a Fourier-ratio threshold; the
set counts as shattered when all patterns do.

khintchine_stats measures E|sum_k eps_k e^{2*pi*i*n_k*x}| for random signs
against the lower bound sqrt(N/2); exhaustive mode enumerates all 2^N sign
vectors exactly (N <= 12).
"""

import math
from dataclasses import dataclass

import numpy as np

from .sequences import ArithmeticSequence, squarefree_integers
from .spectrum import DEFAULT_MAX_BYTES, DEFAULT_OVERSAMPLE, fourier_ratio

#: Exhaustive sign enumeration cap (2^N vectors).
MAX_EXHAUSTIVE_N = 12
#: Pattern enumeration cap (2^|S| patterns).
MAX_PATTERN_SET = 20
#: Default fraction of R used by default_shatter_set.
DEFAULT_ALPHA = 0.1


@dataclass(frozen=True)
class ShatterInstance:
    """One sign-completion experiment: fixed signs on S, seeded fill elsewhere."""
    R: int
    S: tuple[int, ...]
    sigma: tuple[int, ...]
    seed: int
    threshold: float
    trials: int

    def __post_init__(self):
        if self.R < 1:
            raise ValueError("R must be a positive integer")
        if list(self.S) != sorted(set(self.S)):
            raise ValueError("S must be sorted and free of duplicates")
        if any(n < 1 or n > self.R for n in self.S):
            raise ValueError("S must lie within 1..R")
        if len(self.sigma) != len(self.S) or any(s not in (-1, 1) for s in self.sigma):
            raise ValueError("sigma must assign +-1 to each element of S")
        if self.threshold <= 0:
            raise ValueError("threshold must be positive")
        if self.trials < 1:
            raise ValueError("trials must be a positive integer")


@dataclass(frozen=True)
class KhintchineStats:
    N: int
    x: float
    trials: int
    sample_mean_abs: float
    lower_bound: float


@dataclass(frozen=True)
class PatternResult:
    index: int
    sigma: tuple[int, ...]
    best_fr: float
    met: bool


@dataclass(frozen=True)
class ShatterReport:
    R: int
    S: tuple[int, ...]
    threshold: float
    trials: int
    seed: int
    patterns: tuple[PatternResult, ...]
    shattered: bool


def default_shatter_set(R: int, alpha: float = DEFAULT_ALPHA) -> tuple[int, ...]:
    """Canonical S: the first floor(alpha*R) squarefree integers."""
    size = int(alpha * R)
    support = squarefree_integers(R)
    if size > support.size:
        raise ValueError(f"only {support.size} squarefree integers <= {R}, "
                         f"cannot take {size}")
    return tuple(int(n) for n in support[:size])


def _completion_values(R: int, support: np.ndarray, S: np.ndarray,
                       sigma: np.ndarray, seed) -> np.ndarray:
    """Dense completion: sigma on S, seeded signs on support\\S, zero elsewhere."""
    values = np.zeros(R + 1)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    values[support] = rng.integers(0, 2, size=support.size) * 2.0 - 1.0
    values[S] = sigma
    return values


def random_completion(inst: ShatterInstance) -> ArithmeticSequence:
    """Realize one completion of the instance as a sequence.

    Deterministic for a fixed instance seed; raises if S leaves the
    squarefree support.
    """
    support = squarefree_integers(inst.R)
    S = np.asarray(inst.S, dtype=np.int64)
    if not np.isin(S, support).all():
        bad = S[~np.isin(S, support)]
        raise ValueError(f"S contains non-squarefree integers: {bad.tolist()}")
    sigma = np.asarray(inst.sigma, dtype=np.float64)
    values = _completion_values(inst.R, support, S, sigma, inst.seed)
    return ArithmeticSequence(label="custom", R=inst.R, values=values)


def exhaustive_mean_abs(N: int, x: float, offset: complex = 0j) -> float:
    """Exact E|offset + sum_{k<=N} eps_k e^{2*pi*i*k*x}| over all 2^N signs."""
    if not 1 <= N <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration requires 1 <= N <= {MAX_EXHAUSTIVE_N}")
    e = np.exp(2j * math.pi * np.arange(1, N + 1) * x)
    bits = (np.arange(2 ** N)[:, None] >> np.arange(N)[None, :]) & 1
    signs = 1.0 - 2.0 * bits
    return float(np.mean(np.abs(offset + signs @ e)))


def khintchine_stats(N: int, x: float, trials: int, seed: int,
                     exhaustive: bool = False) -> KhintchineStats:
    """Mean modulus of the random sign sum at x, against sqrt(N/2).

    Unit-coefficient mode: the exponents are n_k = k for k = 1..N. In
    exhaustive mode all 2^N sign vectors are enumerated (trials is then
    recorded as 2^N); otherwise `trials` Monte Carlo draws are used.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    if trials < 1:
        raise ValueError("trials must be a positive integer")
    if exhaustive:
        mean_abs = exhaustive_mean_abs(N, x)
        trials = 2 ** N
    else:
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
        e = np.exp(2j * math.pi * np.arange(1, N + 1) * x)
        signs = rng.integers(0, 2, size=(trials, N)) * 2.0 - 1.0
        mean_abs = float(np.mean(np.abs(signs @ e)))
    return KhintchineStats(N=N, x=x, trials=trials,
                           sample_mean_abs=mean_abs,
                           lower_bound=math.sqrt(N / 2.0))


def _pattern_sigma(index: int, size: int) -> np.ndarray:
    """Pattern index -> sign vector; bit i of the index flips S[i] to -1."""
    bits = (index >> np.arange(size)) & 1
    return 1.0 - 2.0 * bits


def shatter_check(R: int, S, threshold: float, trials: int, seed: int,
                  oversample: int = DEFAULT_OVERSAMPLE,
                  realization: str = "cosine",
                  max_bytes: int = DEFAULT_MAX_BYTES) -> ShatterReport:
    """Try to realize every sign pattern on S above the FR threshold.

    For each of the 2^|S| patterns, up to `trials` seeded completions are
    scored; a pattern is met when its best Fourier ratio reaches the
    threshold, and the verdict is "shattered" iff every pattern is met.
    Per-trial seeds derive from (seed, pattern index, trial index) via a
    hash split, so results are order-insensitive and reproducible.
    """
    S = tuple(int(n) for n in S)
    if len(S) > MAX_PATTERN_SET:
        raise ValueError(f"|S|={len(S)} exceeds the enumeration cap {MAX_PATTERN_SET}")
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    if trials < 1:
        raise ValueError("trials must be a positive integer")

    support = squarefree_integers(R)
    S_arr = np.asarray(S, dtype=np.int64)
    if S_arr.size and not np.isin(S_arr, support).all():
        bad = S_arr[~np.isin(S_arr, support)]
        raise ValueError(f"S contains non-squarefree integers: {bad.tolist()}")

    results = []
    for index in range(2 ** len(S)):
        sigma = _pattern_sigma(index, len(S))
        if not S:
            # Empty pattern: every completion satisfies it by definition.
            values = _completion_values(R, support, S_arr, sigma, (seed, 0, 0))
            f = ArithmeticSequence(label="custom", R=R, values=values)
            fr = fourier_ratio(f, oversample=oversample,
                               realization=realization, max_bytes=max_bytes).fourier_ratio
            results.append(PatternResult(index=0, sigma=(), best_fr=fr, met=True))
            break
        best = 0.0
        for trial in range(trials):
            values = _completion_values(R, support, S_arr, sigma,
                                        (seed, index, trial))
            f = ArithmeticSequence(label="custom", R=R, values=values)
            report = fourier_ratio(f, oversample=oversample,
                                   realization=realization, max_bytes=max_bytes)
            best = max(best, report.fourier_ratio)
            if best >= threshold:
                break
        results.append(PatternResult(
            index=index,
            sigma=tuple(int(s) for s in sigma),
            best_fr=best,
            met=best >= threshold,
        ))
    return ShatterReport(
        R=R, S=S, threshold=threshold, trials=trials, seed=seed,
        patterns=tuple(results),
        shattered=all(p.met for p in results),
    )
