"""Exception hierarchy shared by every module."""


class DualityError(Exception):
    """Base class for all library errors."""


class PolynomialSyntaxError(DualityError, ValueError):
    """Malformed polynomial text; carries the 0-based offending position."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class VariableError(PolynomialSyntaxError):
    """An identifier outside {x, y, z}."""


class NotThreeMonomials(DualityError):
    pass


class MissingVariable(DualityError):
    pass


class ZeroCoefficient(DualityError):
    pass


class NotInvertible(DualityError):
    pass


class SingularMatrix(DualityError):
    pass


class NonPositiveWeight(DualityError):
    pass


class NonIntegral(DualityError):
    pass


class NotCoprime(DualityError):
    pass


class IndexNotDividing(DualityError):
    def __init__(self, index: int, level: int):
        self.index = index
        self.level = level
        super().__init__(f"factor index {index} does not divide {level}")


class NotReduced(DualityError):
    pass


class NotPolynomial(DualityError):
    pass


class BadArmTarget(DualityError):
    pass


class UnknownName(DualityError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BadParameter(DualityError, ValueError):
    pass
