"""Builders for the benchmark tables, figure data, and shatter reports.

Row computations are pure functions of (kind, R, oversample, seed), so
rows for different R may be evaluated concurrently; documents are always
assembled in the input order and serialize byte-identically regardless of
the worker count.
"""

import math
from concurrent.futures import ThreadPoolExecutor

from .errors import ResourceLimitError
from .report import ReportDoc
from .sequences import center, sieve, squarefree_integers
from .shatter import shatter_check
from .spectrum import DEFAULT_MAX_BYTES, DEFAULT_OVERSAMPLE, fourier_ratio

#: L1/L2 ratio of a centered Gaussian; the reference line in the figures.
GAUSSIAN_BENCHMARK = math.sqrt(2.0 / math.pi)

#: Default R grid; the last entry is gated behind an explicit flag.
DEFAULT_R_GRID = (100, 300, 1000, 3000, 10_000, 30_000, 100_000, 300_000,
                  1_000_000, 3_000_000)
GATED_R = 10_000_000

#: Comparison-table sequences, in presentation order.
TABLE2_LABELS = ("mobius", "liouville", "random_signs",
                 "von_mangoldt_centered", "squarefree_centered")

#: Figure-2 data starts here (log-log deviation plot).
DEVIATION_MIN_R = 1000


def _table2_sequence(label: str, R: int, seed: int):
    if label == "mobius":
        return sieve("mobius", R)
    if label == "liouville":
        return sieve("liouville", R)
    if label == "random_signs":
        return sieve("rademacher", R, seed=seed)
    if label == "von_mangoldt_centered":
        return center(sieve("von_mangoldt", R))
    if label == "squarefree_centered":
        return center(sieve("squarefree_indicator", R))
    raise ValueError(f"unknown table2 label {label!r}")


def _map_rows(fn, items, parallel: int):
    if parallel > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _named_resource_error(exc: ResourceLimitError, R: int) -> ResourceLimitError:
    return ResourceLimitError(exc.required_bytes, exc.limit_bytes, f"R={R}")


def _table1_row(R: int, oversample: int, max_bytes: int,
                realization: str = "cosine") -> dict:
    f = sieve("mobius", R)
    sr = math.sqrt(R)
    try:
        nr = fourier_ratio(f, oversample=oversample, realization=realization,
                           max_bytes=max_bytes)
    except ResourceLimitError as exc:
        raise _named_resource_error(exc, R) from exc
    squarefree = float((f.values != 0).sum())
    return {
        "R": R,
        "sf_density": squarefree / R,
        "l2_over_sqrtR": nr.l2 / sr,
        "l1_over_sqrtR": nr.l1 / sr,
        "fourier_ratio": nr.fourier_ratio,
        "linf_over_sqrtR": nr.linf / sr,
    }


def run_table1(R_list, oversample: int = DEFAULT_OVERSAMPLE, fmt: str = "csv",
               max_bytes: int = DEFAULT_MAX_BYTES, parallel: int = 1,
               realization: str = "cosine") -> ReportDoc:
    """One row per R: squarefree density and the normalized norm columns."""
    R_list = [int(R) for R in R_list]
    if not R_list:
        raise ValueError("R list must not be empty")
    if any(R < 1 for R in R_list):
        raise ValueError("every R must be a positive integer")
    rows = _map_rows(lambda R: _table1_row(R, oversample, max_bytes, realization),
                     R_list, parallel)
    return ReportDoc(
        kind="table1", rows=tuple(rows),
        config_echo={"command": "table1",
                     "rlist": ",".join(str(R) for R in R_list),
                     "oversample": oversample, "format": fmt,
                     "max_bytes": max_bytes, "realization": realization},
        format=fmt)


def _table2_row(label: str, R: int, seed: int, oversample: int,
                max_bytes: int, realization: str = "cosine") -> dict:
    f = _table2_sequence(label, R, seed)
    try:
        nr = fourier_ratio(f, oversample=oversample, realization=realization,
                           max_bytes=max_bytes)
    except ResourceLimitError as exc:
        raise _named_resource_error(exc, R) from exc
    return {
        "label": label,
        "fourier_ratio": nr.fourier_ratio,
        "l2_over_sqrtR": nr.l2 / math.sqrt(R),
    }


def run_table2(R: int, seed: int = 1, oversample: int = DEFAULT_OVERSAMPLE,
               fmt: str = "csv", max_bytes: int = DEFAULT_MAX_BYTES,
               parallel: int = 1, realization: str = "cosine") -> ReportDoc:
    """The five-sequence comparison table at a single R."""
    R = int(R)
    if R < 1:
        raise ValueError("R must be a positive integer")
    rows = _map_rows(
        lambda label: _table2_row(label, R, seed, oversample, max_bytes,
                                  realization),
        list(TABLE2_LABELS), parallel)
    return ReportDoc(
        kind="table2", rows=tuple(rows),
        config_echo={"command": "table2", "rlist": str(R), "seed": seed,
                     "oversample": oversample, "format": fmt,
                     "max_bytes": max_bytes, "realization": realization},
        format=fmt)


def run_figures(R_list, oversample: int = DEFAULT_OVERSAMPLE, fmt: str = "csv",
                seed: int = 1, max_bytes: int = DEFAULT_MAX_BYTES,
                parallel: int = 1, realization: str = "cosine") -> ReportDoc:
    """Data series for the three figures, in one series,x,y document.

    Series: "fr_curve" (R, FR) over the whole R list; "deviation"
    (R, |FR - benchmark|) restricted to R >= 1000; "bars" (label, FR) for
    the five comparison sequences at max(R list); and one "benchmark"
    metadata row carrying the Gaussian reference value.
    """
    R_list = [int(R) for R in R_list]
    if not R_list:
        raise ValueError("R list must not be empty")
    if any(R < 1 for R in R_list):
        raise ValueError("every R must be a positive integer")
    t1 = _map_rows(lambda R: _table1_row(R, oversample, max_bytes, realization),
                   R_list, parallel)
    rows = [{"series": "fr_curve", "x": row["R"], "y": row["fourier_ratio"]}
            for row in t1]
    rows += [{"series": "deviation", "x": row["R"],
              "y": abs(row["fourier_ratio"] - GAUSSIAN_BENCHMARK)}
             for row in t1 if row["R"] >= DEVIATION_MIN_R]
    R_bars = max(R_list)
    bars = _map_rows(
        lambda label: _table2_row(label, R_bars, seed, oversample, max_bytes,
                                  realization),
        list(TABLE2_LABELS), parallel)
    rows += [{"series": "bars", "x": row["label"], "y": row["fourier_ratio"]}
             for row in bars]
    rows.append({"series": "benchmark", "x": 0, "y": GAUSSIAN_BENCHMARK})
    return ReportDoc(
        kind="figures", rows=tuple(rows),
        config_echo={"command": "figures",
                     "rlist": ",".join(str(R) for R in R_list),
                     "seed": seed, "oversample": oversample, "format": fmt,
                     "max_bytes": max_bytes, "realization": realization},
        format=fmt)


def run_shatter(R: int, S_size: int, threshold: float, trials: int,
                seed: int = 1, fmt: str = "csv",
                oversample: int = DEFAULT_OVERSAMPLE,
                max_bytes: int = DEFAULT_MAX_BYTES,
                realization: str = "cosine") -> ReportDoc:
    """Shattering experiment on the canonical first-S_size squarefree set."""
    support = squarefree_integers(R)
    if S_size < 0 or S_size > support.size:
        raise ValueError(f"S_size must lie in 0..{support.size}")
    S = tuple(int(n) for n in support[:S_size])
    report = shatter_check(R, S, threshold=threshold, trials=trials, seed=seed,
                           oversample=oversample, realization=realization,
                           max_bytes=max_bytes)
    rows = tuple({
        "pattern": p.index,
        "sigma": "".join("+" if s > 0 else "-" for s in p.sigma),
        "best_fr": p.best_fr,
        "met": p.met,
    } for p in report.patterns)
    return ReportDoc(
        kind="shatter", rows=rows,
        config_echo={"command": "shatter", "rlist": str(R), "s_size": S_size,
                     "threshold": threshold, "trials": trials, "seed": seed,
                     "oversample": oversample, "format": fmt,
                     "max_bytes": max_bytes, "realization": realization},
        format=fmt,
        meta={"verdict": "shattered" if report.shattered else "not_shattered",
              "S": ",".join(str(n) for n in report.S)})


def run_norms(kind: str, R: int, seed: int = 1, centered: bool = False,
              realization: str = "cosine",
              oversample: int = DEFAULT_OVERSAMPLE, fmt: str = "csv",
              max_bytes: int = DEFAULT_MAX_BYTES) -> ReportDoc:
    """Single-sequence norm report."""
    f = sieve(kind, R, seed=seed if kind == "rademacher" else None)
    if centered:
        f = center(f)
    try:
        nr = fourier_ratio(f, oversample=oversample, realization=realization,
                           max_bytes=max_bytes)
    except ResourceLimitError as exc:
        raise _named_resource_error(exc, R) from exc
    row = {
        "R": nr.R, "realization": nr.realization, "l1": nr.l1, "l2": nr.l2,
        "linf": nr.linf, "fourier_ratio": nr.fourier_ratio,
        "l1_error_indicator": nr.l1_error_indicator,
        "linf_correction_bound": nr.linf_correction_bound, "M_used": nr.M_used,
    }
    return ReportDoc(
        kind="norms", rows=(row,),
        config_echo={"command": "norms", "kind": kind, "rlist": str(R),
                     "seed": seed, "centered": centered,
                     "realization": realization, "oversample": oversample,
                     "format": fmt, "max_bytes": max_bytes},
        format=fmt)
