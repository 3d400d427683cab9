"""
Gaussian Rationals

Complex numbers with rational real and imaginary parts. Values are immutable,
hash by their canonical components, and support exact field arithmetic.

Example:
    from src.arith.gaussian import GaussianRational, gauss_div

    z = GaussianRational(1, 1)
    gauss_div(GaussianRational(1, 0), GaussianRational(0, 1))   # (0,-1)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from src.arith.rational import format_rational

RealLike = Union[int, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """
    Exact complex scalar re + im·i

    Attributes:
        re: Real part (canonical rational)
        im: Imaginary part (canonical rational)
    """
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value: Union[RealLike, "GaussianRational"]) -> "GaussianRational":
        """Lift a real (or pass through a Gaussian rational)"""
        if isinstance(value, GaussianRational):
            return value
        return cls(Fraction(value), Fraction(0))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: RealLike) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        return gauss_div(self, GaussianRational.of(other))

    def __rtruediv__(self, other: RealLike) -> "GaussianRational":
        return gauss_div(GaussianRational.of(other), self)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus re² + im² (exact)"""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        """Lexicographic (re, im) key used for canonical ordering"""
        return (self.re, self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return f"({format_rational(self.re)},{format_rational(self.im)})"

    def __repr__(self) -> str:
        return f"GaussianRational{self}"


def gauss_div(z: GaussianRational, w: GaussianRational) -> GaussianRational:
    """
    Exact quotient z/w via multiplication by the conjugate

    Raises:
        ZeroDivisionError: If w is zero
    """
    if w.is_zero():
        raise ZeroDivisionError("division by zero")
    denominator = w.norm2()
    numerator = z * w.conjugate()
    return GaussianRational(numerator.re / denominator, numerator.im / denominator)


I = GaussianRational(0, 1)
