"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class RatPoly:
    """Polynomial over the rationals, coefficients stored in ascending degree.

    Coefficients are normalized ``Fraction`` values with trailing zeros
    trimmed; the zero polynomial is the empty coefficient tuple. Equality
    and hashing are exact and coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "RatPoly":
        if power < 0:
            raise ValueError("monomial power must be non-negative")
        return cls((0,) * power + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def shift(self, k: int) -> "RatPoly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if self.is_zero:
            return self
        return RatPoly((Fraction(0),) * k + self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly | Scalar") -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return RatPoly(out)

    def __rmul__(self, other: Scalar) -> "RatPoly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "RatPoly":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        result = RatPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for Fraction input, float otherwise."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: RatPoly, variable: str = "λ", descending: bool = True) -> str:
    """Render a polynomial as text, e.g. ``λ^4 - 5/4·λ^2 + 1/4``."""
    if p.is_zero:
        return "0"
    terms = [(k, c) for k, c in enumerate(p.coeffs) if c != 0]
    if descending:
        terms.reverse()
    parts: list[str] = []
    for idx, (k, c) in enumerate(terms):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = variable if k == 1 else f"{variable}^{k}"
            body = var if mag == 1 else f"{mag}·{var}"
        if idx == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
