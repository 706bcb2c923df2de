"""Arithmetic coefficient sequences: sieving, centering, summation.

Sequences are dense float64 tables over 1..R (index 0 unused) so the
transform layer never needs a dtype conversion. All generators are
deterministic for fixed inputs; random signs come from a counter-based
generator keyed by the seed, so values do not depend on generation order.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

LABELS = ("mobius", "liouville", "von_mangoldt", "squarefree_indicator",
          "rademacher", "custom")

#: Desk-scale cap on sequence length; beyond this, sieving would need
#: segmentation and grids would blow the default memory budget anyway.
DEFAULT_R_CAP = 10_000_000


@dataclass(frozen=True)
class ArithmeticSequence:
    """A labeled dense table f(1..R) of real values.

    Attributes:
        label: one of LABELS.
        R: sequence length (values are f(1..R)).
        values: float64 array of length R+1; values[0] is unused and 0.
        seed: generator seed, present iff label == "rademacher".
        centered: whether the mean over 1..R has been removed.
        centering_constant: the removed mean (0.0 when not centered).
    """
    label: str
    R: int
    values: np.ndarray
    seed: int | None = None
    centered: bool = False
    centering_constant: float = 0.0

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown sequence label {self.label!r}")
        if self.R < 1:
            raise ValueError("R must be a positive integer")
        if self.values.shape != (self.R + 1,):
            raise ValueError(f"values must have length R+1={self.R + 1}, "
                             f"got {self.values.shape}")
        if (self.seed is not None) != (self.label == "rademacher"):
            raise ValueError("seed must be present iff label is 'rademacher'")
        self.values.setflags(write=False)  # sequences are immutable


def _primes_upto(n: int) -> np.ndarray:
    """Primes <= n via a boolean Eratosthenes sieve."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p:: p] = False
    return np.flatnonzero(is_p).astype(np.int64)


def _mu_omega(R: int) -> tuple[np.ndarray, np.ndarray]:
    """One-pass multiplicative sieve: (mu, Omega) for 0..R.

    For each prime p <= sqrt(R) the strided slices flip the Mobius sign,
    kill squareful indices, and count prime-power multiplicity; the running
    product `acc` then exposes which n keep a single prime factor > sqrt(R)
    (acc[n] < n), which closes both mu and Omega. Omega is exact because no
    n <= R can have a squared prime factor above sqrt(R).
    """
    mu = np.ones(R + 1, dtype=np.int8)
    omega = np.zeros(R + 1, dtype=np.uint8)
    acc = np.ones(R + 1, dtype=np.int64)
    for p in _primes_upto(math.isqrt(R)):
        p = int(p)
        mu[p::p] *= -1
        mu[p * p:: p * p] = 0
        pk = p
        while pk <= R:
            omega[pk::pk] += 1
            acc[pk::pk] *= p
            pk *= p
    big = acc < np.arange(R + 1, dtype=np.int64)
    mu[big] = -mu[big]
    omega[big] += 1
    mu[0] = 0
    return mu, omega


def _von_mangoldt(R: int) -> np.ndarray:
    """Lambda(n) for 0..R: log p at prime powers p^k, else 0."""
    lam = np.zeros(R + 1)
    primes = _primes_upto(R)
    if primes.size:
        lam[primes] = np.log(primes.astype(np.float64))
        for p in primes[primes <= math.isqrt(R)]:
            p = int(p)
            pk = p * p
            logp = math.log(p)
            while pk <= R:
                lam[pk] = logp
                pk *= p
    return lam


def sieve(kind: str, R: int, seed: int | None = None,
          cap: int = DEFAULT_R_CAP) -> ArithmeticSequence:
    """Generate the dense value table for one of the named sequences.

    Deterministic for fixed (kind, R, seed). `seed` is required for
    "rademacher" and rejected for the deterministic kinds, so a stray seed
    cannot silently be ignored.
    """
    if kind not in LABELS or kind == "custom":
        raise ValueError(f"unknown sieve kind {kind!r}")
    if R < 1:
        raise ValueError("R must be a positive integer")
    if R > cap:
        raise ValueError(f"R={R} exceeds the configured cap {cap}")
    if kind == "rademacher":
        if seed is None:
            raise ValueError("rademacher requires a seed")
    elif seed is not None:
        raise ValueError(f"seed is meaningless for deterministic kind {kind!r}")

    values = np.zeros(R + 1)
    if kind == "mobius":
        mu, _ = _mu_omega(R)
        values[1:] = mu[1:]
    elif kind == "liouville":
        _, omega = _mu_omega(R)
        values[1:] = np.where(omega[1:] % 2 == 0, 1.0, -1.0)
    elif kind == "squarefree_indicator":
        mu, _ = _mu_omega(R)
        values[1:] = (mu[1:] != 0).astype(np.float64)
    elif kind == "von_mangoldt":
        values[1:] = _von_mangoldt(R)[1:]
    else:  # rademacher, counter-based so values are order-independent
        rng = np.random.Generator(np.random.Philox(key=seed))
        values[1:] = rng.integers(0, 2, size=R) * 2.0 - 1.0
    return ArithmeticSequence(label=kind, R=R, values=values, seed=seed)


def custom(values, label: str = "custom") -> ArithmeticSequence:
    """Wrap raw values f(1..R) (any 1-based sequence) as a sequence."""
    arr = np.asarray(values, dtype=np.float64)
    table = np.zeros(arr.size + 1)
    table[1:] = arr
    return ArithmeticSequence(label=label, R=arr.size, values=table)


def summatory(f: ArithmeticSequence) -> float:
    """Sum of f(n) over 1..R in compensated (exact) summation."""
    return math.fsum(f.values[1:])


def center(f: ArithmeticSequence) -> ArithmeticSequence:
    """Remove the mean over 1..R; records the removed constant.

    The constant is computed with compensated summation so the centered
    mean is zero to ~1e-15 even at R = 1e7.
    """
    if f.centered:
        raise ValueError("sequence is already centered")
    c = summatory(f) / f.R
    values = f.values.copy()
    values[1:] -= c
    return replace(f, values=values, centered=True, centering_constant=c)


def squarefree_integers(R: int) -> np.ndarray:
    """Sorted array of squarefree n <= R (the support of mu)."""
    mu, _ = _mu_omega(R)
    return np.flatnonzero(mu[1:]).astype(np.int64) + 1
