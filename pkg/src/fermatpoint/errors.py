"""Exception types raised by the library and the command-line front end."""


class FermatError(Exception):
    """Base class for all errors raised by this package."""


class CoincidentPoints(FermatError, ValueError):
    """An angle was requested at a vertex that coincides with one of its arms."""


class ConcentricCircles(FermatError, ValueError):
    pass


class CoincidentCircles(FermatError, ValueError):
    pass


class EvaluatedAtVertex(FermatError, ValueError):
    """The gradient of the distance sum does not exist at a triangle vertex."""

    def __init__(self, index: int):
        super().__init__(f"evaluation point coincides with vertex {index}")
        self.index = index


class CoincidentVertices(FermatError, ValueError):
    pass


class StepTooLarge(FermatError, ValueError):
    pass


class DegenerateSide(FermatError, ValueError):
    pass


class CollinearOpposite(FermatError, ValueError):
    pass


class NotAllAnglesBelowThreshold(FermatError, ValueError):
    pass


class NumericalDegeneracy(FermatError, ArithmeticError):
    """No interior intersection was found; the input is too badly conditioned."""


class UsageError(FermatError):
    """Malformed command-line input (exit status 2)."""
