"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines. The optional R=1e7 check is gated behind FRLAB_RUN_1E7=1 because it
needs ~2 GB of grid memory and about a minute.
"""

import itertools
import math
import os
import time

import numpy as np
import pytest

from frlab import (center, custom, eval_grid, exhaustive_mean_abs,
                   fourier_ratio, khintchine_stats, l1_quadrature,
                   l2_parseval, render, run_table1, run_table2, shatter_check,
                   sieve, squarefree_integers, summatory)
from frlab.runners import GAUSSIAN_BENCHMARK
from frlab.spectrum import _grid_power, _half_spectrum, transform_size

# Reference rows: R -> (Q/R, L2/sqrtR, L1/sqrtR, FR, Linf/sqrtR).
TABLE1 = {
    100:      (0.6100, 0.7810, 0.6160, 0.7887, 3.37),
    300:      (0.6100, 0.7810, 0.5890, 0.7542, 4.12),
    1000:     (0.6080, 0.7797, 0.6075, 0.7790, 4.09),
    3000:     (0.6080, 0.7797, 0.6140, 0.7875, 4.56),
    10_000:   (0.6083, 0.7799, 0.6202, 0.7953, 4.52),
    30_000:   (0.6081, 0.7798, 0.6228, 0.7986, 4.03),
    100_000:  (0.6079, 0.7797, 0.6231, 0.7992, 3.89),
    300_000:  (0.6079, 0.7797, 0.6230, 0.7991, 3.87),
    1_000_000: (0.6079, 0.7797, 0.6226, 0.7983, 3.97),
}
TABLE1_GATED = {10_000_000: (0.6079, 0.7797, 0.6222, 0.7980, 4.61)}

TOL_MAIN = 0.002
TOL_SUP = 0.05


def _report(name, detail=""):
    print(f"ACCEPTANCE {name}: PASS" + (f"  ({detail})" if detail else ""))


def test_table1_reproduction():
    t_start = time.perf_counter()
    doc = run_table1(list(TABLE1))
    total = time.perf_counter() - t_start

    t6 = time.perf_counter()
    run_table1([1_000_000])
    t6 = time.perf_counter() - t6

    for row in doc.rows:
        expect = TABLE1[row["R"]]
        got = (row["sf_density"], row["l2_over_sqrtR"], row["l1_over_sqrtR"],
               row["fourier_ratio"], row["linf_over_sqrtR"])
        for g, e in zip(got[:4], expect[:4]):
            assert abs(g - e) <= TOL_MAIN, (row["R"], got, expect)
        assert abs(got[4] - expect[4]) <= TOL_SUP, (row["R"], got, expect)
    assert total <= 300.0, f"table took {total:.1f}s (budget 300s)"
    assert t6 <= 60.0, f"R=1e6 row took {t6:.1f}s (budget 60s)"
    _report("table1-reproduction",
            f"9 rows within +-{TOL_MAIN}/+-{TOL_SUP}, total {total:.1f}s, "
            f"R=1e6 row {t6:.1f}s")


def test_table2_reproduction():
    doc = run_table2(1_000_000, seed=1)
    rows = {row["label"]: row for row in doc.rows}

    assert abs(rows["mobius"]["fourier_ratio"] - 0.7983) <= TOL_MAIN
    assert abs(rows["mobius"]["l2_over_sqrtR"] - 0.7797) <= TOL_MAIN
    assert abs(rows["liouville"]["fourier_ratio"] - 0.7981) <= 0.001
    assert rows["liouville"]["l2_over_sqrtR"] == 1.0
    assert abs(rows["von_mangoldt_centered"]["fourier_ratio"] - 0.6045) <= 0.005
    assert abs(rows["von_mangoldt_centered"]["l2_over_sqrtR"] - 3.435) <= 0.01
    assert abs(rows["squarefree_centered"]["fourier_ratio"] - 0.1582) <= 0.005
    assert abs(rows["squarefree_centered"]["l2_over_sqrtR"] - 0.488) <= 0.005
    # no seed is canonical here: random signs target the Gaussian benchmark
    assert rows["random_signs"]["l2_over_sqrtR"] == 1.0
    assert abs(rows["random_signs"]["fourier_ratio"] - GAUSSIAN_BENCHMARK) <= 0.005
    _report("table2-reproduction", "five rows at R=1e6 within stated tolerances")


def test_closed_form_oracles():
    nr1 = fourier_ratio(sieve("mobius", 1), oversample=4, realization="modulus")
    assert abs(nr1.fourier_ratio - 1.0) <= 1e-10
    assert abs(nr1.l1 - 1.0) <= 1e-10 and abs(nr1.l2 - 1.0) <= 1e-10

    nr2 = fourier_ratio(sieve("mobius", 2), oversample=2048,
                        realization="modulus")
    assert abs(nr2.l1 - 4.0 / math.pi) <= 1e-6
    assert abs(nr2.l2 - math.sqrt(2.0)) <= 1e-6
    assert abs(nr2.fourier_ratio - 2.0 * math.sqrt(2.0) / math.pi) <= 1e-6
    _report("closed-form-oracles", "R=1 exact, R=2 arch within 1e-6")


def test_parseval_property_suite():
    rng = np.random.default_rng(2024)
    kinds = ("mobius", "liouville", "von_mangoldt", "squarefree_indicator",
             "rademacher", "gaussian_custom")
    checked = 0
    for i in range(50):
        kind = kinds[i % len(kinds)]
        R = int(rng.integers(3, 10_001))
        if kind == "gaussian_custom":
            f = custom(rng.normal(size=R))
        elif kind == "rademacher":
            f = sieve(kind, R, seed=int(rng.integers(0, 2**32)))
        else:
            f = sieve(kind, R)
        if rng.random() < 0.3 and not f.centered and R > 1:
            f = center(f)
        if not np.any(f.values):
            continue
        coeff_power = float(np.sum(np.square(f.values)))

        for realization in ("cosine", "modulus"):
            M = transform_size(f.R, 4)
            power = _grid_power(_half_spectrum(f.values, M), M, realization)
            assert abs(power - coeff_power) <= 1e-9 * coeff_power

            nr = fourier_ratio(f, realization=realization)
            assert nr.l1 <= nr.l2 * (1 + 1e-12)
            assert nr.l2 <= nr.linf * nr.linf_correction_bound
        checked += 1
    assert checked >= 45
    _report("parseval-property-suite",
            f"{checked} randomized sequences, both realizations, 1e-9 relative")


def test_khintchine_suite():
    for N in range(1, 13):
        for x in (0.0, 0.25, 1.0 / 3.0, 0.7):
            st = khintchine_stats(N, x, trials=1, seed=0, exhaustive=True)
            assert st.sample_mean_abs >= st.lower_bound - 1e-12, (N, x)
    N = 100
    st = khintchine_stats(N, 0.3141, trials=10**4, seed=1)
    low, high = 0.75 * math.sqrt(N), 0.95 * math.sqrt(N)
    assert low <= st.sample_mean_abs <= high
    assert st.sample_mean_abs >= st.lower_bound
    _report("khintchine-suite",
            f"exhaustive N<=12 bound exact; MC mean {st.sample_mean_abs:.3f} "
            f"in [{low:.2f}, {high:.2f}]")


def test_shattering_desk_scale():
    t_start = time.perf_counter()
    R, S = 10, (2, 3, 5)
    support = [int(n) for n in squarefree_integers(R)]
    free = [n for n in support if n not in S]

    # Brute-force oracle: all 2^7 sign assignments on the squarefree support,
    # FR via the l1-quadrature/Parseval pair.
    pattern_best = []
    for pattern in itertools.product((1.0, -1.0), repeat=len(S)):
        best = 0.0
        for completion in itertools.product((1.0, -1.0), repeat=len(free)):
            values = np.zeros(R + 1)
            for n, s in zip(S, pattern):
                values[n] = s
            for n, s in zip(free, completion):
                values[n] = s
            f = custom(values[1:])
            l1, _ = l1_quadrature(f, 4)
            best = max(best, l1 / l2_parseval(f))
        pattern_best.append(best)
    t_star = min(pattern_best)

    report = shatter_check(R, S, threshold=0.9 * t_star, trials=64, seed=1)
    elapsed = time.perf_counter() - t_start
    assert report.shattered is True
    assert len(report.patterns) == 2 ** len(S)
    assert elapsed <= 10.0, f"shattering run took {elapsed:.1f}s (budget 10s)"
    _report("shattering-desk-scale",
            f"t*={t_star:.4f}, shattered at 0.9 t* in {elapsed:.1f}s")


def test_determinism():
    serial = render(run_table1([100, 300, 1000], parallel=1))
    threaded = render(run_table1([100, 300, 1000], parallel=4))
    assert serial == threaded

    doc = run_table2(10_000, seed=7)
    echo = doc.config_echo
    rerun = run_table2(int(echo["rlist"]), seed=int(echo["seed"]),
                       oversample=int(echo["oversample"]), fmt=echo["format"],
                       max_bytes=int(echo["max_bytes"]))
    assert render(rerun) == render(doc)

    a = shatter_check(10, (2, 3), threshold=0.8, trials=16, seed=3)
    b = shatter_check(10, (2, 3), threshold=0.8, trials=16, seed=3)
    assert a == b
    _report("determinism", "byte-identical across parallel settings and reruns")


@pytest.mark.skipif(os.environ.get("FRLAB_RUN_1E7") != "1",
                    reason="gated 2 GB check; set FRLAB_RUN_1E7=1 to run")
def test_table1_gated_1e7_row():
    # oversample 2 keeps the refinement grid at 2^26 inside the 2 GB budget
    doc = run_table1([10_000_000], oversample=2, max_bytes=2_000_000_000)
    row = doc.rows[0]
    expect = TABLE1_GATED[10_000_000]
    got = (row["sf_density"], row["l2_over_sqrtR"], row["l1_over_sqrtR"],
           row["fourier_ratio"], row["linf_over_sqrtR"])
    for g, e in zip(got[:4], expect[:4]):
        assert abs(g - e) <= TOL_MAIN
    assert abs(got[4] - expect[4]) <= TOL_SUP
    _report("table1-gated-1e7", f"row {tuple(round(g, 4) for g in got)}")
