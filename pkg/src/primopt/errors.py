"""Exception types shared across the package."""


class PrecisionError(ArithmeticError):
    """A requested error radius is unattainable at working precision, or an
    interval straddles a point that must be sign-determined."""


class SizeLimitError(RuntimeError):
    """A generated structure exceeded its configured size limit."""
