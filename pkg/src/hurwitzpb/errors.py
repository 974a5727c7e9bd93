class HurwitzPBError(Exception):
    pass


class OrderMismatchError(HurwitzPBError, ValueError):
    pass


class SeriesUnderflowError(HurwitzPBError, ValueError):
    pass


class CompositionDomainError(HurwitzPBError, ValueError):
    pass


class ParameterDomainError(HurwitzPBError, ValueError):
    """A sequence parameter lies outside the domain where it is defined."""


class IntegralityError(HurwitzPBError, ArithmeticError):
    """A quantity that must be an integer came out fractional (a bug)."""


class SizeLimitError(HurwitzPBError, ValueError):
    pass
