"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation was requested at (or too close to) a pole."""


class ConvergenceError(RuntimeError):
    """An iterative scheme (series, quadrature, Newton) failed to converge."""


class DivergenceWarning(RuntimeWarning):
    """A semi-infinite integrand does not appear to decay."""


class MaterialFileError(ValueError):
    """A material table file could not be parsed or failed validation."""


class UnknownMaterialError(LookupError):
    """A material name was not found in the catalog."""
