"""Exception hierarchy for the solver"""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .models.report import NewtonReport


class MongeAmpereError(Exception):
    """Base class for all solver errors"""


class UsageError(MongeAmpereError):
    """Invalid command-line or sweep-file input"""


class NonPositiveWeightError(MongeAmpereError):
    """A quadrature weight is not strictly positive; the scheme would lose monotonicity"""

    def __init__(self, index: int, value: float):
        super().__init__(f"quadrature weight mu_{index} = {value!r} is not positive")
        self.index = index
        self.value = value


class EmptySubdomainError(MongeAmpereError):
    """Block splitting produced a subdomain without nodes"""


class LinearSolveFailure(MongeAmpereError):
    """The Krylov solver returned a non-finite update"""

    def __init__(self, message: str, newton_iteration: Optional[int] = None):
        if newton_iteration is not None:
            message = f"{message} (Newton iteration {newton_iteration})"
        super().__init__(message)
        self.newton_iteration = newton_iteration


class SubdomainDivergedError(MongeAmpereError):
    """Newton failed on a subdomain problem"""

    def __init__(self, subdomain: int, report: "NewtonReport"):
        super().__init__(
            f"subdomain {subdomain} did not converge after {report.iterations} Newton "
            f"iterations (residual {report.final_residual:.3e})"
        )
        self.subdomain = subdomain
        self.report = report
