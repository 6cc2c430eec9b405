"""Command-line interface.

Subcommands reproduce the reference tables (``table 1|2|3``), temperature
and nonextensivity sweeps (``measures``, ``tsallis``), the entropy
decomposition (``liu``), the profile check (``bvp-check``) and the full
self-verification suite (``verify``).  Results go to stdout, diagnostics to
stderr; exit codes are 0 (success), 1 (computation failure), 2 (usage).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import gl_bvp, liu, measures
from .errors import (
    ConvergenceError,
    DomainError,
    MaterialFileError,
    PoleError,
    UnknownMaterialError,
)
from .gl_model import (
    SQRT2,
    Distribution,
    coherence_length,
    fisher_from_energy_ratio,
    surface_to_bulk_ratio,
)
from .materials import Material, builtin_materials, load_materials, lookup
from .numerics import integrate_finite, integrate_semi_infinite

_FORMATS = ("csv", "tsv", "pretty")


@dataclass
class OutputTable:
    """Formatted result rows; every row has exactly one cell per header."""

    headers: list[str]
    rows: list[list[str]] = field(default_factory=list)

    def add(self, *cells: str) -> None:
        row = [str(c) for c in cells]
        if len(row) != len(self.headers):
            raise ValueError(
                f"row has {len(row)} cells, expected {len(self.headers)}"
            )
        self.rows.append(row)

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            sep = ","
        elif fmt == "tsv":
            sep = "\t"
        else:
            widths = [
                max(len(h), *(len(r[i]) for r in self.rows)) if self.rows else len(h)
                for i, h in enumerate(self.headers)
            ]
            lines = ["  ".join(h.ljust(w) for h, w in zip(self.headers, widths))]
            for r in self.rows:
                lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
            return "\n".join(lines)
        return "\n".join(
            [sep.join(self.headers)] + [sep.join(r) for r in self.rows]
        )


def _sci(x: float) -> str:
    # scientific notation, 6 significant digits, locale independent
    return f"{x:.5e}"


def _g(x: float) -> str:
    return f"{x:.6g}"


def _catalog(args) -> list[Material]:
    if getattr(args, "materials_file", None):
        return load_materials(args.materials_file)
    return builtin_materials()


def _resolve_source(args) -> tuple[str, float, float]:
    """(label, xi0, Tc) from --material or explicit --xi0/--Tc."""
    if args.material:
        m = lookup(_catalog(args), args.material)
        return m.name, m.xi0, m.Tc
    if args.xi0 is None or args.Tc is None:
        raise DomainError("provide either --material or both --xi0 and --Tc")
    return f"xi0={args.xi0:g}", args.xi0, args.Tc


def _parse_sweep(spec: str, Tc: float) -> list[float]:
    """``start:stop:count`` with values in K, or multiples of Tc via a
    ``Tc`` suffix (e.g. ``0:0.99Tc:100``)."""

    def value(token: str) -> float:
        token = token.strip()
        if token.endswith("Tc"):
            return float(token[:-2] or "1") * Tc
        return float(token)

    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"sweep must be start:stop:count, got {spec!r}")
    try:
        start, stop = value(parts[0]), value(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise DomainError(f"bad sweep {spec!r}: {exc}") from exc
    if count < 1:
        raise DomainError("sweep count must be at least 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _temperatures(args, Tc: float) -> list[float]:
    if args.sweep:
        return _parse_sweep(args.sweep, Tc)
    return [args.T]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_measures(args) -> int:
    label, xi0, Tc = _resolve_source(args)
    temperatures = _temperatures(args, Tc)
    table = OutputTable(["T", "T_over_Tc", "xi", "S", "I_F", "D", "C", "C_tilde"])
    for T in temperatures:
        if not 0.0 <= T < Tc:
            print(
                f"skipping T = {T:g} K for {label}: outside [0, Tc = {Tc:g} K)",
                file=sys.stderr,
            )
            continue
        m = measures.measures_at_temperature(xi0, Tc, T, kind=args.kind, n=args.n)
        xi = coherence_length(xi0, T, Tc)
        fmt = _g if args.format == "pretty" else _sci
        table.add(fmt(T), fmt(T / Tc), fmt(xi), fmt(m.shannon), fmt(m.fisher),
                  fmt(m.disequilibrium), fmt(m.complexity), fmt(m.fisher_complexity))
    if not table.rows:
        print("no temperatures inside [0, Tc)", file=sys.stderr)
        return 1
    print(table.render(args.format))
    return 0


def _table_two_three(args, truncated: bool) -> OutputTable:
    catalog = _catalog(args)
    if args.format == "pretty":
        # column scaling mirrors the reference tables
        table = OutputTable(
            ["material", "Z", "xi0_nm", "Tc_K", "S",
             "I_F_x1e5_nm-2", "D_x1e4_nm-1", "C_x1e3_nm-1"]
        )
        for m in catalog:
            ms = (measures.measure_set_truncated(m.xi0, args.n) if truncated
                  else measures.measure_set(m.xi0))
            table.add(m.name, str(m.Z), f"{m.xi0:g}", f"{m.Tc:g}",
                      f"{ms.shannon:.3f}", f"{ms.fisher * 1e5:.4f}",
                      f"{ms.disequilibrium * 1e4:.4f}", f"{ms.complexity * 1e3:.4f}")
        return table
    table = OutputTable(["material", "Z", "xi0_nm", "Tc_K", "S", "I_F", "D", "C"])
    for m in catalog:
        ms = (measures.measure_set_truncated(m.xi0, args.n) if truncated
              else measures.measure_set(m.xi0))
        table.add(m.name, str(m.Z), _sci(m.xi0), _sci(m.Tc), _sci(ms.shannon),
                  _sci(ms.fisher), _sci(ms.disequilibrium), _sci(ms.complexity))
    return table


def cmd_table(args) -> int:
    if args.which == 1:
        table = OutputTable(
            ["material", "Z", "xi0_nm", "S", "X_nm",
             "I1F_at_X", "I2F_at_X", "sum_combined", "residual"]
        )
        fmt = _g if args.format == "pretty" else _sci
        for m in _catalog(args):
            r = liu.liu_identity(m.xi0, tol=args.liu_tol)
            table.add(m.name, str(m.Z), f"{m.xi0:g}", fmt(r.shannon),
                      fmt(r.cutoff), fmt(r.i1f_integral), fmt(r.i2f_integral),
                      fmt(r.identity_sum), _sci(r.residual))
    else:
        table = _table_two_three(args, truncated=(args.which == 3))
    print(table.render(args.format))
    return 0


def cmd_tsallis(args) -> int:
    label, xi0, Tc = _resolve_source(args)
    if not 0.5 < args.q_min <= args.q_max <= 2.0:
        raise DomainError(
            f"q range [{args.q_min:g}, {args.q_max:g}] outside the "
            "supported window (0.5, 2]"
        )
    if args.steps < 1:
        raise DomainError("steps must be at least 1")
    if args.steps == 1 or args.q_max == args.q_min:
        grid = [args.q_min]
    else:
        dq = (args.q_max - args.q_min) / (args.steps - 1)
        grid = [args.q_min + i * dq for i in range(args.steps)]
    if args.q_min < 1.0 < args.q_max and not any(abs(q - 1.0) < 1e-12 for q in grid):
        grid = sorted(grid + [1.0])

    headers = ["T", "T_over_Tc"] + [f"T_q[q={q:.4f}]" for q in grid]
    table = OutputTable(headers)
    fmt = _g if args.format == "pretty" else _sci
    emitted = False
    for T in _temperatures(args, Tc):
        if not 0.0 <= T < Tc:
            print(
                f"skipping T = {T:g} K for {label}: outside [0, Tc = {Tc:g} K)",
                file=sys.stderr,
            )
            continue
        xi = coherence_length(xi0, T, Tc)
        cells = [fmt(T), fmt(T / Tc)]
        cells += [fmt(measures.tsallis_entropy(xi, q)) for q in grid]
        table.add(*cells)
        emitted = True
    if not emitted:
        print("no temperatures inside [0, Tc)", file=sys.stderr)
        return 1
    print(table.render(args.format))
    return 0


def cmd_liu(args) -> int:
    catalog = _catalog(args)
    rows = [lookup(catalog, args.material)] if args.material else catalog
    table = OutputTable(
        ["material", "xi_nm", "X_nm", "I1F_at_X", "I2F_at_X",
         "sum_combined", "S", "residual"]
    )
    fmt = _g if args.format == "pretty" else _sci
    for m in rows:
        r = liu.liu_identity(m.xi0, tol=args.tol)
        table.add(m.name, f"{m.xi0:g}", fmt(r.cutoff), fmt(r.i1f_integral),
                  fmt(r.i2f_integral), fmt(r.identity_sum), fmt(r.shannon),
                  _sci(r.residual))
    print(table.render(args.format))
    return 0


def cmd_bvp_check(args) -> int:
    L = args.L if args.L is not None else 12.0 * args.xi
    sol = gl_bvp.solve_profile(
        args.xi, L, args.n_points, args.tol, initial=args.initial
    )
    table = OutputTable(
        ["xi_nm", "L_nm", "n_points", "iterations", "max_deviation"]
    )
    table.add(_g(args.xi), _g(L), str(args.n_points), str(sol.iterations),
              _sci(sol.max_deviation))
    print(table.render(args.format))
    return 0


def cmd_materials(args) -> int:
    table = OutputTable(["name", "Z", "xi0_nm", "Tc_K"])
    for m in _catalog(args):
        table.add(m.name, str(m.Z), f"{m.xi0:g}", f"{m.Tc:g}")
    print(table.render(args.format))
    return 0


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------

_XI_GRID = (1.0, 38.0, 93.0, 230.0, 360.0, 760.0, 1600.0)
_Q_GRID_TSALLIS = (0.6, 0.8, 0.95, 1.05, 1.2, 1.49, 1.51, 1.9, 2.0)
_Q_GRID_FISHER = (0.6, 0.8, 0.95, 1.05, 1.2, 1.49)  # integral diverges at q >= 1.5


def run_verification(rel_tol: float = 1e-8, perturb=None, out=None) -> int:
    """Run every oracle check; print one line per check; return 0 iff all pass.

    ``perturb`` is an optional (kind, factor) pair multiplying the named
    closed form by (1 + factor) inside the comparisons, for detector tests.
    """
    if out is None:
        out = sys.stdout
    factors = dict.fromkeys(
        ("shannon", "fisher", "disequilibrium", "tsallis", "fisher_q"), 1.0
    )
    if perturb is not None:
        kind, eps = perturb
        if kind not in factors:
            raise DomainError(f"unknown perturbation target {kind!r}")
        factors[kind] = 1.0 + eps

    checks: list[tuple[str, float, float]] = []

    def add(name: str, deviation: float, tol: float) -> None:
        checks.append((name, deviation, tol))

    # density normalization
    for xi in (1.0, 38.0, 230.0, 1600.0):
        semi = Distribution.semi_infinite(xi)
        res = integrate_semi_infinite(semi.pdf, 0.0, 1e-12, scale=SQRT2 * xi)
        add(f"normalization semi-infinite xi={xi:g}", abs(res.value - 1.0), 1e-9)
        trunc = Distribution.truncated(xi, 5.0)
        res = integrate_finite(trunc.pdf, 0.0, trunc.upper_limit, 1e-12)
        add(f"normalization truncated xi={xi:g}", abs(res.value - 1.0), 1e-9)

    # closed forms vs defining integrals
    closed_semi = {
        "shannon": measures.shannon_entropy,
        "fisher": measures.fisher_information,
        "disequilibrium": measures.disequilibrium,
    }
    for kind, fn in closed_semi.items():
        worst = 0.0
        for xi in _XI_GRID:
            oracle = measures.measure_numeric(Distribution.semi_infinite(xi), kind)
            worst = max(worst, abs(fn(xi) * factors[kind] - oracle) / abs(oracle))
        add(f"closed vs quadrature: {kind} (semi-infinite)", worst, rel_tol)

    closed_trunc = {
        "shannon": measures.truncated_shannon_entropy,
        "fisher": measures.truncated_fisher_information,
    }
    for kind, fn in closed_trunc.items():
        worst = 0.0
        for xi in _XI_GRID:
            oracle = measures.measure_numeric(Distribution.truncated(xi, 5.0), kind)
            worst = max(worst, abs(fn(xi, 5.0) * factors[kind] - oracle) / abs(oracle))
        add(f"closed vs quadrature: {kind} (truncated n=5)", worst, rel_tol)

    # truncated disequilibrium against the antiderivative of tanh^4
    worst = 0.0
    nu = 5.0 / SQRT2
    tanh_nu = math.tanh(nu)
    tanh4_integral = nu - tanh_nu - tanh_nu ** 3 / 3.0
    for xi in _XI_GRID:
        from .gl_model import truncation_norm

        exact = truncation_norm(xi, 5.0) ** 2 * SQRT2 * xi * tanh4_integral
        got = measures.truncated_disequilibrium(xi, 5.0) * factors["disequilibrium"]
        worst = max(worst, abs(got - exact) / exact)
    add("truncated disequilibrium vs antiderivative", worst, rel_tol)

    # generalized measures vs defining integrals
    worst = 0.0
    for q in _Q_GRID_TSALLIS:
        for xi in (38.0, 230.0, 1600.0):
            oracle = measures.measure_numeric(
                Distribution.semi_infinite(xi), "tsallis", q=q, rel_tol=1e-11
            )
            got = measures.tsallis_entropy(xi, q) * factors["tsallis"]
            worst = max(worst, abs(got - oracle) / abs(oracle))
    add("closed vs quadrature: tsallis entropy", worst, rel_tol)

    worst = 0.0
    for q in _Q_GRID_FISHER:
        for xi in (1.0, 38.0, 230.0):
            oracle = measures.measure_numeric(
                Distribution.semi_infinite(xi), "fisher_q", q=q, rel_tol=1e-11
            )
            got = measures.generalized_fisher(xi, q) * factors["fisher_q"]
            worst = max(worst, abs(got - oracle) / abs(oracle))
    add("closed vs quadrature: generalized fisher", worst, rel_tol)

    # exact scaling laws
    worst = 0.0
    for xi in _XI_GRID:
        m = measures.measure_set(xi)
        worst = max(
            worst,
            abs(m.fisher * xi * xi - 2.0 / 3.0) / (2.0 / 3.0),
            abs(m.disequilibrium * xi - SQRT2 / 3.0) / (SQRT2 / 3.0),
            abs((m.shannon - math.log(xi)) - (2.0 - 1.5 * math.log(2.0)))
            / abs(2.0 - 1.5 * math.log(2.0)),
        )
    add("scaling laws I_F xi^2, D xi, S - ln xi", worst, 1e-12)

    # q -> 1 continuity (two-sided mean cancels the first-order q drift)
    worst = 0.0
    for xi in (38.0, 230.0, 1600.0):
        s = measures.shannon_entropy(xi)
        i_f = measures.fisher_information(xi)
        t_mean = 0.5 * (
            measures.tsallis_entropy(xi, 1.0 + 1e-4)
            + measures.tsallis_entropy(xi, 1.0 - 1e-4)
        )
        i_mean = 0.5 * (
            measures.generalized_fisher(xi, 1.0 + 1e-4)
            + measures.generalized_fisher(xi, 1.0 - 1e-4)
        )
        worst = max(worst, abs(t_mean - s) / abs(s), abs(i_mean - i_f) / i_f)
    add("q -> 1 limits (two-sided at 1e-4)", worst, 1e-3)

    worst = 0.0
    for xi in (38.0, 230.0, 1600.0):
        t2 = measures.tsallis_entropy(xi, 2.0)
        d = measures.disequilibrium(xi)
        worst = max(worst, abs(t2 - (1.0 - d)))
    add("T_2 = 1 - D identity", worst, 1e-10)

    # temperature laws
    worst = 0.0
    for frac in (0.25, 0.5, 0.75):
        m0 = measures.measures_at_temperature(230.0, 3.72, 0.0)
        mt = measures.measures_at_temperature(230.0, 3.72, frac * 3.72)
        worst = max(worst, abs(mt.fisher / m0.fisher - (1.0 - frac)))
    add("fisher linear in 1 - T/Tc", worst, 1e-12)

    temperatures = [i / 100.0 * 3.72 * 0.999 for i in range(100)]
    sets = [measures.measures_at_temperature(230.0, 3.72, T) for T in temperatures]
    violations = 0.0
    for prev, cur in zip(sets, sets[1:]):
        if not cur.shannon > prev.shannon:
            violations += 1
        if not cur.disequilibrium < prev.disequilibrium:
            violations += 1
        if not cur.fisher < prev.fisher:
            violations += 1
        if not cur.complexity < prev.complexity:
            violations += 1
    add("monotone temperature sweeps (S up, D/I_F/C down)", violations, 0.0)

    # energy-profile identity
    worst = 0.0
    for xi in _XI_GRID:
        composed = fisher_from_energy_ratio(surface_to_bulk_ratio(xi))
        direct = measures.fisher_information(xi)
        worst = max(worst, abs(composed - direct) / direct)
    add("fisher from energy ratio composition", worst, 1e-12)

    # entropy decomposition
    worst = 0.0
    pointwise = 0.0
    for xi in (1600.0, 38.0, 360.0, 230.0, 760.0, 93.0, 83.0):
        report = liu.liu_identity(xi)
        worst = max(worst, report.residual)
        spec = Distribution.semi_infinite(xi)
        for f in (0.1, 0.5, 1.0, 2.0, 5.0):
            x = f * xi
            i1, i2 = liu.liu_terms(x, xi)
            defect = abs((-spec.pdf(x) + i1 + i2) - liu.shannon_density(x, xi))
            pointwise = max(pointwise, defect)
    add("entropy decomposition residual", worst, 1e-6)
    add("entropy decomposition pointwise identity", pointwise, 1e-9)

    # profile check
    sol = gl_bvp.solve_profile(1.0, 12.0, 2001, 1e-12)
    add("profile solver deviation from tanh", sol.max_deviation, 1e-6)

    failures = 0
    for name, deviation, tol in checks:
        ok = deviation <= tol
        failures += 0 if ok else 1
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name}: deviation {deviation:.3e} (tol {tol:.1e})", file=out)
    print(
        f"{len(checks) - failures}/{len(checks)} checks passed", file=out
    )
    return 0 if failures == 0 else 1


def cmd_verify(args) -> int:
    perturb = None
    if args.perturb:
        kind, eps = args.perturb
        perturb = (kind, float(eps))
    return run_verification(rel_tol=args.rel_tol, perturb=perturb)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=_FORMATS, default="csv",
                   help="output format (default csv)")
    p.add_argument("--materials-file", default=None,
                   help="load the material catalog from this file")


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--material", default=None, help="material name")
    p.add_argument("--xi0", type=float, default=None,
                   help="coherence length at T = 0 in nm")
    p.add_argument("--Tc", type=float, default=None,
                   help="critical temperature in K")
    p.add_argument("--T", type=float, default=0.0, help="temperature in K")
    p.add_argument("--sweep", default=None,
                   help="temperature sweep start:stop:count "
                        "(values in K or multiples of Tc, e.g. 0:0.99Tc:100)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glinfo",
        description="Information and complexity measures of the "
                    "metal/superconductor interface",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", help="measure set at fixed T or over a sweep")
    _add_common(p)
    _add_source(p)
    p.add_argument("--kind", choices=("semi_infinite", "truncated"),
                   default="semi_infinite")
    p.add_argument("--n", type=float, default=5.0,
                   help="cutoff multiple for the truncated density")
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("table", help="recompute a reference table")
    _add_common(p)
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("--n", type=float, default=5.0)
    p.add_argument("--liu-tol", type=float, default=1e-6,
                   help="cutoff criterion for table 1")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("tsallis", help="Tsallis entropy over a (q, T) grid")
    _add_common(p)
    _add_source(p)
    p.add_argument("--q-min", type=float, default=0.95)
    p.add_argument("--q-max", type=float, default=1.03)
    p.add_argument("--steps", type=int, default=5)
    p.set_defaults(func=cmd_tsallis)

    p = sub.add_parser("liu", help="entropy decomposition S = -1 + I1F + I2F")
    _add_common(p)
    p.add_argument("--material", default=None,
                   help="single material (default: whole catalog)")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_liu)

    p = sub.add_parser("bvp-check", help="solve the profile equation and "
                                         "compare against tanh")
    _add_common(p)
    p.add_argument("--xi", type=float, default=1.0)
    p.add_argument("--L", type=float, default=None, help="default 12 xi")
    p.add_argument("--n-points", type=int, default=2001)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--initial", choices=("tanh", "ramp"), default="tanh")
    p.set_defaults(func=cmd_bvp_check)

    p = sub.add_parser("verify", help="run the full oracle suite")
    _add_common(p)
    p.add_argument("--rel-tol", type=float, default=1e-8)
    p.add_argument("--perturb", nargs=2, metavar=("KIND", "FACTOR"),
                   default=None,
                   help="multiply a closed form by (1 + FACTOR) to test "
                        "the detectors")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("materials", help="list the material catalog")
    _add_common(p)
    p.set_defaults(func=cmd_materials)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, PoleError, ConvergenceError, MaterialFileError,
            UnknownMaterialError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
