# bqho/errors.py


class BicomplexError(Exception):
    """Base class for every error raised by the bqho package."""


class ZeroElementError(BicomplexError):
    """The zero element was given where an invertible one is required."""


class NullConeError(BicomplexError):
    """A non-zero divisor of zero was given where an invertible element is required."""

    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or f"{value!r} lies in the null cone and has no inverse")


class DomainError(BicomplexError):
    """A hyperbolic argument left the domain of a D+ function."""

    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or f"{value!r} is outside the admissible domain")


class DimensionMismatch(BicomplexError):
    def __init__(self, left, right):
        self.left, self.right = left, right
        super().__init__(f"dimension mismatch: {left} vs {right}")


class InvalidParams(BicomplexError):
    """Oscillator or run parameters violate their positivity/range constraints."""


class IndexOutOfRange(BicomplexError):
    pass


class BothZero(BicomplexError):
    pass


class ConstraintViolated(BicomplexError):
    """A rescaling does not preserve the form of the Hamiltonian."""


class ZeroScale(BicomplexError):
    pass


class OrderTooLarge(BicomplexError):
    def __init__(self, order, limit):
        self.order, self.limit = order, limit
        super().__init__(f"Hermite order {order} exceeds the exact-coefficient limit {limit}")


class SpectrumError(BicomplexError):
    """An eigenket failed its own eigenvalue equation."""
