"""Exception types shared across the package."""


class RangeError(ValueError):
    """An index or argument fell outside its documented range."""


class DirectionError(ValueError):
    """A coefficient set was fed to an evaluator of the opposite direction."""


class PoleError(ArithmeticError):
    """A rational-term denominator vanished (evaluation at or near a pole)."""


class DenominatorError(ArithmeticError):
    """A pole-residue denominator collapsed for the given parameters."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature exhausted its panel budget before reaching tolerance."""


class DampingError(ValueError):
    """An infinite-limit integral was requested without positive damping."""


class FileFormatError(ValueError):
    """A coefficient or curve file does not match the documented schema."""
