"""Ginzburg-Landau interface model.

Coherence length, the tanh order-parameter profile, the two interface
probability densities built from it, and the surface/bulk energy relation.
All lengths are in nanometres and densities in 1/nm; the reference tables
this package reproduces only come out in those units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "SQRT2",
    "coherence_length",
    "order_parameter",
    "truncation_norm",
    "Distribution",
    "surface_to_bulk_ratio",
    "fisher_from_energy_ratio",
]

SQRT2 = math.sqrt(2.0)

# F_surf / F_bulk = (4 sqrt(2) / 3) * xi
_SURFACE_COEFF = 4.0 * SQRT2 / 3.0


def _sech2(t: float) -> float:
    """sech(t)^2 with underflow to exactly 0 instead of cosh overflow."""
    t = abs(t)
    if t > 710.0:
        return 0.0
    c = math.cosh(t)
    return 1.0 / (c * c)


def coherence_length(xi0: float, T: float, Tc: float) -> float:
    """Coherence length xi(T) = xi0 / sqrt(1 - T/Tc), diverging at Tc."""
    if xi0 <= 0.0:
        raise DomainError("xi0 must be positive")
    if Tc <= 0.0:
        raise DomainError("Tc must be positive")
    if T < 0.0:
        raise DomainError("T must be non-negative")
    if T >= Tc:
        raise DomainError(
            f"coherence length diverges for T >= Tc "
            f"(T = {T:g} K, Tc = {Tc:g} K): superconducting phase absent"
        )
    return xi0 / math.sqrt(1.0 - T / Tc)


def order_parameter(x: float, xi: float) -> float:
    """Normalised order parameter tanh(x / (sqrt(2) xi)) for x >= 0.

    Zero at the interface, approaching 1 deep in the superconductor.
    """
    if xi <= 0.0:
        raise DomainError("xi must be positive")
    if x < 0.0:
        raise DomainError("the profile is defined for x >= 0 only")
    return math.tanh(x / (SQRT2 * xi))


def truncation_norm(xi: float, n: float) -> float:
    """Normalisation of the truncated density on [0, n*xi]:

    N = 1 / (sqrt(2) xi (n/sqrt(2) - tanh(n/sqrt(2)))).
    """
    if xi <= 0.0:
        raise DomainError("xi must be positive")
    if n <= 0.0:
        raise DomainError("cutoff multiple n must be positive")
    nu = n / SQRT2
    return 1.0 / (SQRT2 * xi * (nu - math.tanh(nu)))


@dataclass(frozen=True)
class Distribution:
    """One of the two interface probability densities at coherence length xi.

    ``n is None`` selects the semi-infinite density

        P(x) = (1 - tanh^2(x / sqrt(2) xi)) / (sqrt(2) xi)   on [0, inf),

    and a positive ``n`` selects the truncated density

        P(x) = N tanh^2(x / sqrt(2) xi)                      on [0, n xi],

    with N from :func:`truncation_norm`.  Instances are immutable and can be
    shared freely between threads.
    """

    xi: float
    n: float | None = None

    def __post_init__(self) -> None:
        if self.xi <= 0.0:
            raise DomainError("xi must be positive")
        if self.n is not None and self.n <= 0.0:
            raise DomainError("cutoff multiple n must be positive")

    @classmethod
    def semi_infinite(cls, xi: float) -> "Distribution":
        return cls(xi)

    @classmethod
    def truncated(cls, xi: float, n: float = 5.0) -> "Distribution":
        return cls(xi, n)

    @property
    def is_truncated(self) -> bool:
        return self.n is not None

    @property
    def upper_limit(self) -> float:
        """Upper end of the support (inf for the semi-infinite density)."""
        return math.inf if self.n is None else self.n * self.xi

    def _check_support(self, x: float) -> None:
        if x < 0.0 or x > self.upper_limit:
            raise DomainError(
                f"x = {x:g} nm outside the support [0, {self.upper_limit:g}]"
            )

    def pdf(self, x: float) -> float:
        """Probability density in 1/nm."""
        self._check_support(x)
        t = x / (SQRT2 * self.xi)
        if self.n is None:
            return _sech2(t) / (SQRT2 * self.xi)
        return truncation_norm(self.xi, self.n) * math.tanh(t) ** 2

    def pdf_derivative(self, x: float) -> float:
        """dP/dx in 1/nm^2."""
        self._check_support(x)
        a = 1.0 / (SQRT2 * self.xi)
        t = x * a
        if self.n is None:
            return -2.0 * a * a * _sech2(t) * math.tanh(t)
        return 2.0 * truncation_norm(self.xi, self.n) * a * math.tanh(t) * _sech2(t)

    def pdf_second_derivative(self, x: float) -> float:
        """d^2P/dx^2 in 1/nm^3."""
        self._check_support(x)
        a = 1.0 / (SQRT2 * self.xi)
        t = x * a
        s2 = _sech2(t)
        th2 = math.tanh(t) ** 2
        if self.n is None:
            return 2.0 * a ** 3 * s2 * (3.0 * th2 - 1.0)
        norm = truncation_norm(self.xi, self.n)
        return 2.0 * norm * a * a * s2 * (1.0 - 3.0 * th2)


def surface_to_bulk_ratio(xi: float) -> float:
    """Ratio of surface to bulk free energy, (4 sqrt(2) / 3) xi, in nm."""
    if xi <= 0.0:
        raise DomainError("xi must be positive")
    return _SURFACE_COEFF * xi


def fisher_from_energy_ratio(ratio: float) -> float:
    """Fisher information recovered from the energy ratio: (4/3)^3 / ratio^2.

    Composing with :func:`surface_to_bulk_ratio` reproduces 2 / (3 xi^2)
    exactly.
    """
    if ratio <= 0.0:
        raise DomainError("energy ratio must be positive")
    return (4.0 / 3.0) ** 3 / (ratio * ratio)
