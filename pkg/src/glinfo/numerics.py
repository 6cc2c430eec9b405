"""Special functions and adaptive quadrature.

Everything here is a pure function of its arguments (no global mutable
state), so calls are safe from any number of threads.  The two integrators
double as the independent numerical oracle for the closed forms in
:mod:`glinfo.measures` and therefore share no code with those formulas.
"""

from __future__ import annotations

import heapq
import math
import sys
import warnings
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DivergenceWarning, DomainError, PoleError

__all__ = [
    "QuadratureResult",
    "gamma",
    "hyp2f1_neg1",
    "dilog",
    "integrate_finite",
    "integrate_semi_infinite",
]

_EPS = math.ulp(1.0)
_TINY = sys.float_info.min
_PI2_6 = math.pi * math.pi / 6.0


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive quadrature: estimate, absolute error bound,
    number of integrand evaluations."""

    value: float
    error_estimate: float
    evaluations: int


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def gamma(x: float) -> float:
    """Euler gamma function.

    Backed by the C library implementation, which is accurate to a few ulp
    over the range used here (x in (0, 50] and moderate negative
    non-integers).
    """
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"gamma has a pole at x = {x:g}")
    try:
        return math.gamma(x)
    except ValueError as exc:  # pragma: no cover - guarded above
        raise PoleError(str(exc)) from exc


def hyp2f1_neg1(a: float, b: float, c: float) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) at z = -1.

    The defining series at z = -1 converges only for c - a - b > -1, so the
    Pfaff transformation z -> z/(z - 1) is applied first.  It maps -1 to 1/2,
    where the series converges geometrically for every parameter set with c
    not a nonpositive integer:

        2F1(a, b; c; -1) = 2^(-a) * 2F1(a, c - b; c; 1/2).

    Arguments are ordered so that the a <-> b symmetry holds bit for bit.
    """
    if c <= 0.0 and c == math.floor(c):
        raise PoleError(f"2F1 undefined for nonpositive integer c = {c:g}")
    if a == 0.0 or b == 0.0:
        return 1.0
    if a > b:
        a, b = b, a
    alpha, beta = a, c - b
    term = 1.0
    total = 1.0
    for k in range(1000):
        term *= (alpha + k) * (beta + k) / ((c + k) * (k + 1.0)) * 0.5
        total += term
        # ratio of consecutive terms tends to 1/2, so the tail is ~ |term|
        if term == 0.0 or abs(term) <= 0.25 * _EPS * abs(total):
            return 2.0 ** (-a) * total
    raise ConvergenceError(
        f"2F1({a:g}, {b:g}; {c:g}; -1): transformed series did not converge"
    )


def _dilog_series(z: float) -> float:
    # power series sum z^k / k^2, geometric for |z| <= 1/2
    total = 0.0
    zk = 1.0
    for k in range(1, 200):
        zk *= z
        term = zk / (k * k)
        total += term
        if abs(term) <= 0.25 * _EPS * abs(total):
            break
    return total


def dilog(x: float) -> float:
    """Dilogarithm Li2(x) for -1 <= x <= 1.

    The series is used directly for |x| <= 1/2 and the argument is folded
    into that range with the Euler reflection (x > 1/2) or the Landen
    transformation (x < -1/2).
    """
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"dilog requires -1 <= x <= 1, got {x:g}")
    if x == 1.0:
        return _PI2_6
    if x == -1.0:
        return -0.5 * _PI2_6
    if x < -0.5:
        # Li2(x) = -Li2(x/(x-1)) - ln(1-x)^2 / 2
        return -_dilog_series(x / (x - 1.0)) - 0.5 * math.log1p(-x) ** 2
    if x <= 0.5:
        return _dilog_series(x)
    # Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)
    return _PI2_6 - math.log(x) * math.log1p(-x) - _dilog_series(1.0 - x)


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod quadrature
# ---------------------------------------------------------------------------

# 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1].
# Positive abscissae; odd indices form the Gauss subset.
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod 7-15 panel; returns (integral, error estimate)."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resg = _WG[3] * fc
    resk = _WGK[7] * fc
    resabs = _WGK[7] * abs(fc)
    fv1 = [0.0] * 7
    fv2 = [0.0] * 7
    for j in range(7):
        dx = half * _XGK[j]
        f1 = f(center - dx)
        f2 = f(center + dx)
        fv1[j] = f1
        fv2[j] = f2
        fsum = f1 + f2
        resk += _WGK[j] * fsum
        resabs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            resg += _WG[j // 2] * fsum
    reskh = 0.5 * resk
    resasc = _WGK[7] * abs(fc - reskh)
    for j in range(7):
        resasc += _WGK[j] * (abs(fv1[j] - reskh) + abs(fv2[j] - reskh))
    value = resk * half
    resabs *= abs(half)
    resasc *= abs(half)
    err = abs((resk - resg) * half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > _TINY / (50.0 * _EPS):
        err = max(err, 50.0 * _EPS * resabs)
    if math.isnan(value):
        raise DomainError(f"integrand returned NaN on [{a:g}, {b:g}]")
    return value, err


def integrate_finite(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    *,
    abs_tol: float = 0.0,
    max_evals: int = 1_000_000,
) -> QuadratureResult:
    """Adaptive quadrature of ``f`` over the finite interval ``[a, b]``.

    The interval with the largest error estimate is bisected until the total
    estimate satisfies ``error <= max(abs_tol, rel_tol * |value|)``.  Raises
    :class:`ConvergenceError` once ``max_evals`` integrand evaluations have
    been spent or an interval can no longer be split in floating point.
    """
    if rel_tol <= 0.0:
        raise DomainError("rel_tol must be positive")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if not a < b:
        raise DomainError(f"need a < b, got a = {a:g}, b = {b:g}")

    value, err = _gk15(f, a, b)
    evals = 15
    total = value
    total_err = err
    heap: list[tuple[float, float, float, float, float]] = [(-err, a, b, value, err)]
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if evals + 30 > max_evals:
            raise ConvergenceError(
                f"quadrature stalled at {total:.6e} +/- {total_err:.2e} after "
                f"{evals} evaluations (rel_tol = {rel_tol:g})"
            )
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ConvergenceError(
                f"interval [{lo:g}, {hi:g}] cannot be subdivided further"
            )
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        evals += 30
        total += (v1 + v2) - v
        total_err = max(total_err + (e1 + e2) - e, 0.0)
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
    return QuadratureResult(value=total, error_estimate=total_err, evaluations=evals)


def integrate_semi_infinite(
    f: Callable[[float], float],
    a: float,
    rel_tol: float = 1e-10,
    *,
    scale: float = 1.0,
    abs_tol: float = 0.0,
    max_evals: int = 1_000_000,
) -> QuadratureResult:
    """Quadrature of ``f`` over ``[a, infinity)`` for decaying integrands.

    The exponential substitution ``x = a - scale * ln(1 - u)`` maps the tail
    onto ``u in [0, 1)`` and the result is delegated to
    :func:`integrate_finite`.  ``scale`` should match the decay length of the
    integrand (the default of one suits unit-scale integrands only).

    Emits :class:`DivergenceWarning` when probe points suggest the tail does
    not decay; the subsequent quadrature then typically fails to converge.
    """
    if scale <= 0.0:
        raise DomainError("scale must be positive")
    near = f(a + 8.0 * scale)
    far = f(a + 32.0 * scale)
    if abs(near) > 0.0 and abs(far) >= abs(near):
        warnings.warn(
            "semi-infinite integrand does not appear to decay; "
            "the integral may diverge",
            DivergenceWarning,
            stacklevel=2,
        )

    def transformed(u: float) -> float:
        if u >= 1.0:  # deep subdivision can round a node up to the endpoint
            return 0.0
        x = a - scale * math.log1p(-u)
        return f(x) * scale / (1.0 - u)

    return integrate_finite(
        transformed, 0.0, 1.0, rel_tol, abs_tol=abs_tol, max_evals=max_evals
    )
