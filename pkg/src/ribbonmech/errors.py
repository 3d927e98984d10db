"""Exception hierarchy shared across the package.

Input/definition problems subclass ValueError; failures of the numerical
machinery subclass RuntimeError.  The CLI maps the former to exit code 2
and the latter to exit code 3.
"""


class RibbonError(Exception):
    """Base class for everything raised deliberately by this package."""


class DomainError(RibbonError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class SpecError(RibbonError, ValueError):
    """A ribbon/segment/layer definition violates its invariants."""


class ConfigError(RibbonError, ValueError):
    """A configuration file cannot be parsed or validated."""

    def __init__(self, message, *, section=None, field=None):
        self.section = section
        self.field = field
        where = ""
        if section is not None:
            where = f" [{section}]"
        if field is not None:
            where += f" field '{field}'"
        super().__init__(f"config error{where}: {message}")


class NumericalError(RibbonError, RuntimeError):
    """A numerical procedure failed to produce a trustworthy result."""


class SolverError(NumericalError):
    """The stationarity system could not be solved reliably."""


class ResolutionError(NumericalError):
    """A grid or sampling is too coarse to resolve the requested feature."""


class GeometryError(NumericalError):
    """A curve does not carry enough geometry for the requested analysis."""
