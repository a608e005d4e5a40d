"""Error hierarchy shared by every computation in the project.

Each class carries the process exit code the management commands use when
the error escapes to the command line.
"""


class ForgeError(Exception):
    """Base class for all domain errors."""

    exit_code = 1

    def __init__(self, message: str = "", **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def as_dict(self) -> dict:
        payload = {"error": type(self).__name__, "message": self.message}
        if self.context:
            payload["context"] = self.context
        return payload


class BadInput(ForgeError):
    exit_code = 4


class BadIndex(BadInput):
    """Family or module indices outside the admissible ranges."""


class ZeroParameter(BadInput):
    pass


class NotDiagonal(BadInput):
    pass


class BadPrime(BadInput):
    pass


class DenominatorCollision(BadInput):
    """A rational denominator vanishes modulo the chosen prime."""


class MalformedInput(BadInput):
    """Unparseable JSON, relation text or scalar payload."""


class BoundExceeded(ForgeError):
    exit_code = 4


class AxiomFailure(ForgeError):
    exit_code = 3


class NotClosed(AxiomFailure):
    """A printed spanning set is not stable under the action or coaction."""


class GapFound(AxiomFailure):
    """Listed constituents fail to exhaust a box product."""


class Disagreement(ForgeError):
    exit_code = 2


class DivisionByZero(ForgeError, ZeroDivisionError):
    exit_code = 4


class SearchExhausted(ForgeError):
    pass
