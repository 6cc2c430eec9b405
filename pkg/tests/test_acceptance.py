"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
report lines (they are also visible in captured output on failure).
"""

import math
import time

import numpy as np
import pytest

from glinfo.gl_bvp import solve_profile
from glinfo.gl_model import (
    SQRT2,
    Distribution,
    fisher_from_energy_ratio,
    surface_to_bulk_ratio,
)
from glinfo.liu import liu_identity, liu_terms, shannon_density
from glinfo.materials import builtin_materials
from glinfo.measures import (
    disequilibrium,
    fisher_information,
    generalized_fisher,
    measure_numeric,
    measure_set,
    measure_set_truncated,
    measures_at_temperature,
    shannon_entropy,
    truncated_fisher_information,
    truncated_shannon_entropy,
    tsallis_entropy,
)

from reference_values import (
    TABLE2_PUBLISHED,
    TABLE3_PUBLISHED,
    assert_matches_printed,
    printed_tolerance,
)


def report(number: int, description: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {status}: {description}"
          + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {description} {detail}"


def test_criterion_1_table2_reproduction():
    start = time.perf_counter()
    sets = {m.name: measure_set(m.xi0) for m in builtin_materials()}
    for name, (s, i_f, d, _c) in TABLE2_PUBLISHED.items():
        got = sets[name]
        assert_matches_printed(got.shannon, s, label=f"{name} S")
        assert_matches_printed(got.fisher, i_f, 1e-5, label=f"{name} I_F")
        assert_matches_printed(got.disequilibrium, d, 1e-4, label=f"{name} D")
        # the complexity column is validated against the product S*D
        assert abs(got.complexity - got.shannon * got.disequilibrium) \
            <= 1e-12 * got.complexity
    # documented table anomalies
    nb = sets["Nb"]
    nb_printed = float(TABLE2_PUBLISHED["Nb"][3]) * 1e-3
    anomaly_nb = abs(nb.complexity / (10.0 * nb_printed) - 1.0) < 1e-3
    al = sets["Al"]
    al_printed = float(TABLE2_PUBLISHED["Al"][3]) * 1e-3
    al_dev = (al_printed - al.complexity) / al.complexity
    anomaly_al = 0.003 < al_dev < 0.009
    elapsed = time.perf_counter() - start
    report(1, "semi-infinite table reproduced at printed precision",
           anomaly_nb and anomaly_al and elapsed < 1.0,
           f"Nb C misprint x10 confirmed, Al C off by {al_dev:.2%}, "
           f"{elapsed:.3f}s")


def test_criterion_2_table3_reproduction():
    start = time.perf_counter()
    worst = 0.0
    for m in builtin_materials():
        got = measure_set_truncated(m.xi0, 5.0)
        s, i_f, d, c = TABLE3_PUBLISHED[m.name]
        for computed, printed, scale in (
            (got.shannon, s, 1.0),
            (got.fisher, i_f, 1e-5),
            (got.disequilibrium, d, 1e-4),
            (got.complexity, c, 1e-3),
        ):
            rel = abs(computed - float(printed) * scale) / (float(printed) * scale)
            worst = max(worst, rel)
        assert got.complexity == got.shannon * got.disequilibrium
    elapsed = time.perf_counter() - start
    report(2, "truncated table (n=5) within 0.2%",
           worst <= 2e-3 and elapsed < 5.0,
           f"worst relative deviation {worst:.2e}, {elapsed:.3f}s")


def test_criterion_3_entropy_decomposition():
    start = time.perf_counter()
    worst_residual = 0.0
    worst_pointwise = 0.0
    for m in builtin_materials():
        r = liu_identity(m.xi0)
        worst_residual = max(worst_residual, r.residual)
        spec = Distribution.semi_infinite(m.xi0)
        for frac in (0.1, 0.5, 1.0, 2.0, 5.0):
            x = frac * m.xi0
            i1, i2 = liu_terms(x, m.xi0)
            defect = abs((-spec.pdf(x) + i1 + i2) - shannon_density(x, m.xi0))
            worst_pointwise = max(worst_pointwise, defect)
        # the separate columns are cutoff-dependent; the property substitute
        # is the sign pattern plus the sum at the common cutoff
        assert r.i1f_integral < 0.0 < r.i2f_integral
        assert abs((-1.0 + r.i1f_integral + r.i2f_integral) - r.shannon) < 1e-3
    elapsed = time.perf_counter() - start
    report(3, "decomposition S = -1 + I1F + I2F",
           worst_residual <= 1e-6 and worst_pointwise <= 1e-9 and elapsed < 30.0,
           f"residual {worst_residual:.1e}, pointwise {worst_pointwise:.1e}, "
           f"{elapsed:.3f}s")


def test_criterion_4_closed_forms_vs_quadrature():
    start = time.perf_counter()
    xi_grid = (1.0, 38.0, 93.0, 230.0, 360.0, 760.0, 1600.0)
    worst = 0.0

    def rel(a, b):
        return abs(a - b) / abs(b)

    for xi in xi_grid:
        semi = Distribution.semi_infinite(xi)
        trunc = Distribution.truncated(xi, 5.0)
        worst = max(
            worst,
            rel(shannon_entropy(xi), measure_numeric(semi, "shannon")),
            rel(fisher_information(xi), measure_numeric(semi, "fisher")),
            rel(disequilibrium(xi), measure_numeric(semi, "disequilibrium")),
            rel(truncated_shannon_entropy(xi, 5.0),
                measure_numeric(trunc, "shannon")),
            rel(truncated_fisher_information(xi, 5.0),
                measure_numeric(trunc, "fisher")),
        )
    for q in (0.6, 0.8, 0.95, 1.05, 1.2, 1.49, 1.51, 1.9):
        for xi in (38.0, 230.0, 1600.0):
            worst = max(worst, rel(
                tsallis_entropy(xi, q),
                measure_numeric(Distribution.semi_infinite(xi), "tsallis",
                                q=q, rel_tol=1e-11),
            ))
    # the generalized Fisher integral only converges below q = 3/2
    for q in (0.6, 0.8, 0.95, 1.05, 1.2, 1.49):
        for xi in (1.0, 38.0, 230.0):
            worst = max(worst, rel(
                generalized_fisher(xi, q),
                measure_numeric(Distribution.semi_infinite(xi), "fisher_q",
                                q=q, rel_tol=1e-11),
            ))
    elapsed = time.perf_counter() - start
    report(4, "every closed form agrees with its defining integral",
           worst <= 1e-8 and elapsed < 60.0,
           f"worst relative deviation {worst:.2e}, {elapsed:.3f}s")


def test_criterion_5_q_limits():
    worst_t = 0.0
    worst_i = 0.0
    for xi in (38.0, 230.0, 1600.0):
        s = shannon_entropy(xi)
        i_f = fisher_information(xi)
        # two-sided evaluation at q = 1 +/- 1e-4 (the symmetric mean removes
        # the first-order drift in q, which alone exceeds the tolerance)
        t_mean = 0.5 * (tsallis_entropy(xi, 1.0 + 1e-4)
                        + tsallis_entropy(xi, 1.0 - 1e-4))
        i_mean = 0.5 * (generalized_fisher(xi, 1.0 + 1e-4)
                        + generalized_fisher(xi, 1.0 - 1e-4))
        worst_t = max(worst_t, abs(t_mean - s) / abs(s))
        worst_i = max(worst_i, abs(i_mean - i_f) / i_f)
        # the entropy limit also holds one-sided
        for q in (1.0 + 1e-4, 1.0 - 1e-4):
            worst_t = max(worst_t, abs(tsallis_entropy(xi, q) - s) / abs(s))
    t2_worst = max(
        abs(tsallis_entropy(xi, 2.0) - (1.0 - disequilibrium(xi)))
        for xi in (38.0, 230.0, 360.0, 1600.0)
    )
    # nonextensivity sweep data (T_q over q and T) must be emittable
    grid_ok = True
    for q in np.linspace(0.95, 1.03, 9):
        for frac in (0.0, 0.3, 0.6, 0.9):
            xi_t = 230.0 / math.sqrt(1.0 - frac)
            grid_ok = grid_ok and math.isfinite(tsallis_entropy(xi_t, float(q)))
    report(5, "q -> 1 limits and T_2 identity",
           worst_t <= 1e-3 and worst_i <= 1e-3 and t2_worst <= 1e-10 and grid_ok,
           f"entropy {worst_t:.1e}, fisher (two-sided) {worst_i:.1e}, "
           f"T_2 defect {t2_worst:.1e}")


def test_criterion_6_profile_verification():
    start = time.perf_counter()
    sol = solve_profile(1.0, 12.0, 2001, 1e-12)
    devs = [solve_profile(1.0, 12.0, n).max_deviation for n in (251, 501, 1001)]
    ratios = (devs[0] / devs[1], devs[1] / devs[2])
    ratio_ok = all(3.5 <= r <= 4.5 for r in ratios)
    elapsed = time.perf_counter() - start
    report(6, "profile equals tanh within 1e-6 and converges at O(h^2)",
           sol.max_deviation <= 1e-6 and ratio_ok and elapsed < 10.0,
           f"deviation {sol.max_deviation:.2e}, ratios "
           f"{ratios[0]:.2f}/{ratios[1]:.2f}, {elapsed:.3f}s")


def test_criterion_7_temperature_laws():
    worst = 0.0
    for m in builtin_materials():
        base = measures_at_temperature(m.xi0, m.Tc, 0.0)
        for frac in (0.25, 0.5, 0.75):
            mt = measures_at_temperature(m.xi0, m.Tc, frac * m.Tc)
            worst = max(worst, abs(mt.fisher / base.fisher - (1.0 - frac)))
    monotone = True
    vanishing = True
    for m in builtin_materials():
        temps = [m.Tc * i / 200.0 * 0.999 for i in range(201)]
        sets = [measures_at_temperature(m.xi0, m.Tc, T) for T in temps]
        for prev, cur in zip(sets, sets[1:]):
            monotone = monotone and cur.shannon > prev.shannon
            monotone = monotone and cur.disequilibrium < prev.disequilibrium
            monotone = monotone and cur.complexity < prev.complexity
        vanishing = vanishing and sets[-1].complexity < 0.2 * sets[0].complexity
    report(7, "temperature linearity and monotone sweep shapes",
           worst <= 1e-12 and monotone and vanishing,
           f"linearity defect {worst:.1e}")


def test_criterion_8_energy_profile_identity():
    worst = 0.0
    for m in builtin_materials():
        composed = fisher_from_energy_ratio(surface_to_bulk_ratio(m.xi0))
        direct = 2.0 / (3.0 * m.xi0 * m.xi0)
        worst = max(worst, abs(composed - direct) / direct)
    report(8, "fisher from surface/bulk energy ratio",
           worst <= 1e-12, f"worst relative deviation {worst:.1e}")
