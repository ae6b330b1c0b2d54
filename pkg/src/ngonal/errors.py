"""Exception hierarchy shared across the package."""


class NgonalError(Exception):
    """Base class for all errors raised by ngonal."""


class CurveSyntaxError(NgonalError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DuplicateComponent(NgonalError, ValueError):
    pass


class NonReduced(NgonalError, ValueError):
    pass


class NotAFiber(NgonalError, ValueError):
    pass


class NumericalFailure(NgonalError, ArithmeticError):
    """Parent of the errors that mean the floating computation broke down."""


class NoConvergence(NumericalFailure):
    pass


class StepUnderflow(NumericalFailure):
    pass


class StrandCollision(NumericalFailure):
    pass


class NotSquare(NgonalError, ValueError):
    pass


class NotDivisible(NgonalError, ArithmeticError):
    pass
