"""Information and complexity measures of the interface densities.

Closed forms for the semi-infinite density:

    S      = 2 + ln(xi / 2^(3/2))            (nats, nm convention)
    I_F    = 2 / (3 xi^2)                    (1/nm^2)
    D      = sqrt(2) / (3 xi)                (1/nm)
    C      = S * D                           (LMC complexity)
    C~     = S * I_F

plus the generalized (nonextensive) family T_q, I_q, C_q obtained from the
q-logarithm, and the truncated-density counterparts.  Every closed form has a
numerical twin in :func:`measure_numeric`, which integrates the defining
functional directly and serves as the independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .gl_model import SQRT2, Distribution, coherence_length, truncation_norm
from .numerics import dilog, gamma, hyp2f1_neg1, integrate_finite, integrate_semi_infinite

__all__ = [
    "MeasureSet",
    "GeneralizedSet",
    "shannon_entropy",
    "fisher_information",
    "disequilibrium",
    "measure_set",
    "truncated_shannon_entropy",
    "truncated_fisher_information",
    "truncated_disequilibrium",
    "measure_set_truncated",
    "measures_at_temperature",
    "tsallis_entropy",
    "generalized_fisher",
    "generalized_set",
    "measure_numeric",
]

# |q - 1| below which the generalized forms return their Shannon/Fisher limits
Q_STITCH = 1e-6

_MEASURE_KINDS = ("shannon", "fisher", "disequilibrium", "tsallis", "fisher_q")


@dataclass(frozen=True)
class MeasureSet:
    """Shannon entropy, Fisher information, disequilibrium and the two
    complexity products for one distribution."""

    shannon: float
    fisher: float
    disequilibrium: float
    complexity: float         # shannon * disequilibrium (LMC)
    fisher_complexity: float  # shannon * fisher


@dataclass(frozen=True)
class GeneralizedSet:
    """Nonextensive measures at index q (q -> 1 recovers the Shannon set)."""

    q: float
    tsallis: float
    fisher: float
    complexity: float  # disequilibrium * tsallis


def _check_xi(xi: float) -> None:
    if xi <= 0.0:
        raise DomainError("xi must be positive")


# ---------------------------------------------------------------------------
# semi-infinite density, closed forms
# ---------------------------------------------------------------------------

def shannon_entropy(xi: float) -> float:
    """S = 2 + ln(xi / 2^(3/2)) in nats (xi in nm)."""
    _check_xi(xi)
    return 2.0 + math.log(xi / (2.0 * SQRT2))


def fisher_information(xi: float) -> float:
    """I_F = 2 / (3 xi^2) in 1/nm^2."""
    _check_xi(xi)
    return 2.0 / (3.0 * xi * xi)


def disequilibrium(xi: float) -> float:
    """D = sqrt(2) / (3 xi) in 1/nm."""
    _check_xi(xi)
    return SQRT2 / (3.0 * xi)


def measure_set(xi: float) -> MeasureSet:
    """All five measures of the semi-infinite density at coherence length xi."""
    s = shannon_entropy(xi)
    i_f = fisher_information(xi)
    d = disequilibrium(xi)
    return MeasureSet(s, i_f, d, s * d, s * i_f)


# ---------------------------------------------------------------------------
# truncated density (support [0, n*xi])
# ---------------------------------------------------------------------------

def truncated_shannon_entropy(xi: float, n: float = 5.0) -> float:
    """Shannon entropy of the truncated density, via the dilogarithm."""
    norm = truncation_norm(xi, n)
    nu = n / SQRT2
    tanh_nu = math.tanh(nu)
    log_tanh2 = 2.0 * math.log(tanh_nu)
    e = math.exp(-SQRT2 * n)
    bracket = (
        4.0 * n * math.atanh(e)          # arccoth(exp(sqrt(2) n))
        + n * log_tanh2
        - SQRT2 * dilog(-e)
        + SQRT2 * dilog(e)
        - SQRT2 * (-2.0 + log_tanh2) * tanh_nu
        - math.pi ** 2 / (2.0 * SQRT2)
    )
    return -math.log(norm) - norm * xi * bracket


def truncated_fisher_information(xi: float, n: float = 5.0) -> float:
    """Fisher information of the truncated density."""
    norm = truncation_norm(xi, n)
    nu = n / SQRT2
    sech_nu = 1.0 / math.cosh(nu)
    return (
        norm * SQRT2 / (3.0 * xi)
        * sech_nu ** 3
        * (3.0 * math.sinh(nu) + math.sinh(3.0 * nu))
    )


def truncated_disequilibrium(xi: float, n: float = 5.0, rel_tol: float = 1e-10) -> float:
    """Disequilibrium of the truncated density.

    There is no closed form for this one; the defining integral of P^2 is
    evaluated by adaptive quadrature.
    """
    return measure_numeric(Distribution.truncated(xi, n), "disequilibrium", rel_tol=rel_tol)


def measure_set_truncated(xi: float, n: float = 5.0) -> MeasureSet:
    """All five measures of the truncated density (cutoff at n*xi)."""
    s = truncated_shannon_entropy(xi, n)
    i_f = truncated_fisher_information(xi, n)
    d = truncated_disequilibrium(xi, n)
    return MeasureSet(s, i_f, d, s * d, s * i_f)


def measures_at_temperature(
    xi0: float,
    Tc: float,
    T: float,
    kind: str = "semi_infinite",
    n: float = 5.0,
) -> MeasureSet:
    """Measure set at temperature T, through xi(T) = xi0 / sqrt(1 - T/Tc)."""
    xi = coherence_length(xi0, T, Tc)
    if kind == "semi_infinite":
        return measure_set(xi)
    if kind == "truncated":
        return measure_set_truncated(xi, n)
    raise DomainError(f"unknown distribution kind {kind!r}")


# ---------------------------------------------------------------------------
# generalized (nonextensive) measures
# ---------------------------------------------------------------------------

def tsallis_entropy(xi: float, q: float) -> float:
    """Tsallis entropy T_q of the semi-infinite density.

    T_q = (1 - Gamma(q)/Gamma(1+q) 2^((3q-1)/2) xi^(1-q) 2F1(q, 2q; 1+q; -1))
          / (q - 1),

    stitched to the Shannon limit for |q - 1| < 1e-6.  Accepted window is
    q in (0.5, 2]; q = 2 gives the identity T_2 = 1 - D.
    """
    _check_xi(xi)
    if not 0.5 < q <= 2.0:
        raise DomainError(f"q = {q:g} outside the supported window (0.5, 2]")
    if abs(q - 1.0) < Q_STITCH:
        return shannon_entropy(xi)
    integral = (
        gamma(q) / gamma(1.0 + q)
        * 2.0 ** (0.5 * (3.0 * q - 1.0))
        * xi ** (1.0 - q)
        * hyp2f1_neg1(q, 2.0 * q, 1.0 + q)
    )
    return (1.0 - integral) / (q - 1.0)


def generalized_fisher(xi: float, q: float) -> float:
    """Generalized Fisher information I_q of the semi-infinite density.

    Valid for q in (0.5, 2) away from q = 3/2.  At q = 3/2 the defining
    integral diverges (the integrand tends to a constant) and the closed form
    has a simple pole, so a :class:`PoleError` is raised; the q -> 1
    neighbourhood is stitched to the Fisher limit.
    """
    _check_xi(xi)
    if not 0.5 < q < 2.0:
        raise DomainError(f"q = {q:g} outside the supported window (0.5, 2)")
    if abs(q - 1.0) < Q_STITCH:
        return fisher_information(xi)
    if abs(q - 1.5) < 1e-9:
        raise PoleError("I_q has a pole at q = 3/2 (the defining integral diverges)")
    g95 = gamma(4.5 - 2.0 * q)
    prefactor = 2.0 ** (q - 3.0) * xi ** (2.0 * q - 4.0) / (
        (2.0 * q - 5.0) * (2.0 * q - 3.0) * g95
    )
    term1 = -math.sqrt(math.pi) * (q - 1.0) * gamma(6.0 - 2.0 * q) / (q - 2.0)
    term2 = 2.0 * g95 * (
        (5.0 - 2.0 * q)
        + (3.0 - 2.0 * q) * hyp2f1_neg1(1.0, 2.0 * q - 2.0, 6.0 - 2.0 * q)
    )
    return prefactor * (term1 + term2)


def generalized_set(xi: float, q: float) -> GeneralizedSet:
    """T_q, I_q and C_q = D * T_q for the semi-infinite density.

    The bundle needs every member to be finite, so q must lie in
    (0.5, 2) \\ {3/2}; use :func:`tsallis_entropy` directly for T_q at
    q = 3/2 or q = 2.
    """
    if not 0.5 < q < 2.0:
        raise DomainError(f"q = {q:g} outside the supported window (0.5, 2)")
    t_q = tsallis_entropy(xi, q)
    i_q = generalized_fisher(xi, q)
    return GeneralizedSet(q, t_q, i_q, disequilibrium(xi) * t_q)


# ---------------------------------------------------------------------------
# quadrature oracle
# ---------------------------------------------------------------------------

def measure_numeric(
    spec: Distribution,
    kind: str,
    q: float | None = None,
    rel_tol: float = 1e-10,
) -> float:
    """Evaluate a measure by direct quadrature of its defining integral.

    ``kind`` is one of ``shannon``, ``fisher``, ``disequilibrium``,
    ``tsallis`` or ``fisher_q`` (the last two need ``q``).  This is the
    independent check for every closed form above: only the density itself
    and the generic integrators are used.
    """
    if kind not in _MEASURE_KINDS:
        raise DomainError(f"unknown measure kind {kind!r}")
    if kind in ("tsallis", "fisher_q"):
        if q is None:
            raise DomainError(f"measure kind {kind!r} requires q")
        if q <= 0.0:
            raise DomainError("q must be positive")
    if (
        kind == "fisher_q"
        and not spec.is_truncated
        and q is not None
        and q >= 1.5
    ):
        raise DomainError(
            "the generalized Fisher integrand does not decay for q >= 3/2 "
            "on the semi-infinite support"
        )

    pdf = spec.pdf
    dpdf = spec.pdf_derivative

    if kind == "shannon":
        def integrand(x: float) -> float:
            p = pdf(x)
            return 0.0 if p == 0.0 else -p * math.log(p)
    elif kind == "fisher":
        def integrand(x: float) -> float:
            p = pdf(x)
            if p == 0.0:
                return 0.0
            dp = dpdf(x)
            return dp * dp / p
    elif kind == "disequilibrium":
        def integrand(x: float) -> float:
            p = pdf(x)
            return p * p
    elif kind == "tsallis":
        if abs(q - 1.0) < 1e-14:
            def integrand(x: float) -> float:
                p = pdf(x)
                return 0.0 if p == 0.0 else -p * math.log(p)
        else:
            def integrand(x: float) -> float:
                p = pdf(x)
                return (p - p ** q) / (q - 1.0)
    else:  # fisher_q
        def integrand(x: float) -> float:
            # p^(1-2q) overflows long before the product p^(1-2q) dp^2 does,
            # so combine the factors in log space
            p = pdf(x)
            if p == 0.0:
                return 0.0
            dp = dpdf(x)
            if dp == 0.0:
                return 0.0
            return math.exp((1.0 - 2.0 * q) * math.log(p) + 2.0 * math.log(abs(dp)))

    if spec.is_truncated:
        result = integrate_finite(integrand, 0.0, spec.upper_limit, rel_tol)
    else:
        scale = SQRT2 * spec.xi
        if kind == "fisher_q" and q > 1.25:
            # integrand tail ~ exp(-(6 - 4q) x / (sqrt(2) xi)) decays slowly
            scale *= 2.0 / (6.0 - 4.0 * q)
        result = integrate_semi_infinite(integrand, 0.0, rel_tol, scale=scale)
    return result.value
