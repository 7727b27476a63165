from fractions import Fraction

from .action.group import ProjectivePoint
from .errors import DimensionMismatchError


def format_fraction(x):
    """Exact text of a rational, always as p/q."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text):
    if not isinstance(text, str) or "/" not in text:
        raise ValueError(f"Expected a rational written as p/q, got {text!r}")
    return Fraction(text)


def format_rational(x):
    """
    Human-readable rational: 'p/q ≈ 1.234567', or just the integer when q is 1.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ≈ {float(x):.6f}"


def read_points_file(path, r):
    """
    Read candidate points, one per line as r+1 comma-separated rationals.
    Blank lines and lines starting with '#' are skipped.

    Args:
        path (str): The points file.
        r (int): Dimension of the projective space.

    Returns:
        list of ProjectivePoint: The points in file order.
    """
    points = []
    with open(path) as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                p = ProjectivePoint.parse(line)
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"{path}:{number}: invalid point {line!r}: {e}") from e
            if len(p) != r + 1:
                raise DimensionMismatchError(
                    f"{path}:{number}: point has {len(p)} coordinates, expected {r + 1}"
                )
            points.append(p)
    return points


def read_polynomial_lines(path):
    """Lines of a batch file with line numbers, skipping blank lines."""
    with open(path) as f:
        return [(n, line.strip()) for n, line in enumerate(f, 1) if line.strip()]


def read_polynomial_file(path):
    """
    Text of a single polynomial stored in a file. Lines are joined, so a long
    polynomial may be wrapped; blank lines and '#' comments are skipped.

    Raises:
        ValueError: the file holds no polynomial.
    """
    with open(path) as f:
        parts = [line.strip() for line in f if line.strip() and not line.strip().startswith("#")]
    if not parts:
        raise ValueError(f"No polynomial found in {path}")
    return " ".join(parts)
