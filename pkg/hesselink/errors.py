class HesselinkError(Exception):
    """Base class for every error raised by the hesselink package."""


class PolynomialParseError(HesselinkError, ValueError):
    """Raised when polynomial text cannot be turned into a hypersurface."""


class PolynomialSyntaxError(PolynomialParseError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"Syntax error at position {position} in {text!r}: {reason}")


class NonHomogeneousError(PolynomialParseError):
    def __init__(self, degrees):
        self.degrees = sorted(degrees)
        super().__init__(f"Polynomial is not homogeneous, found degrees {self.degrees}")


class UnknownVariableError(PolynomialParseError):
    def __init__(self, index, r):
        self.index = index
        self.r = r
        super().__init__(f"Unknown variable x{index}: only x0..x{r} exist for r={r}")


class ZeroPolynomialError(PolynomialParseError):
    def __init__(self):
        super().__init__("The zero polynomial does not define a hypersurface")


class DimensionMismatchError(HesselinkError, ValueError):
    """Raised when objects living in different ambient spaces are combined."""


class ZeroVectorError(HesselinkError, ValueError):
    """Raised when a one-parameter subgroup or a point would be the zero vector."""


class SingularMatrixError(HesselinkError, ValueError):
    """Raised when a group element is built from a matrix with zero determinant."""


class BelowGotzmannError(HesselinkError, ValueError):
    def __init__(self, t, d):
        self.t = t
        self.d = d
        super().__init__(f"Degree t={t} is below the Gotzmann number {d}")


class HypothesisNotMetError(HesselinkError):
    """Raised when an input does not meet the hypothesis a check relies on."""


class CapExceededError(HesselinkError):
    def __init__(self, tuples, cap):
        self.tuples = tuples
        self.cap = cap
        super().__init__(
            f"Minor enumeration needs {tuples} column tuples, above the cap of {cap}; "
            "verify on a smaller instance"
        )
