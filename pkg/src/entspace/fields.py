"""Scalar arithmetic for the four coefficient fields.

Exact work happens over the rationals (stdlib ``Fraction``), Gaussian
rationals, or a prime field; complex floats exist only as a target for
explicit conversion (the numerical verifier).  All scalar types support
``+ - * /``, truthiness as a zero test, and ``.conjugate()``, so the linear
algebra layer never branches on the field kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _coerce(x: object) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(Fraction(x))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / norm, -o.im / norm)

    def __rtruediv__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return f"{self.re}{'+' if self.im >= 0 else ''}{self.im}i"


@dataclass(frozen=True)
class Fp:
    """Residue modulo a prime, carrying its modulus.

    Arithmetic between residues with different moduli is a ``TypeError``;
    plain ints are coerced into the operand's field.
    """

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, x: object) -> "Fp":
        if isinstance(x, Fp):
            if x.p != self.p:
                raise TypeError(f"mixed moduli {self.p} and {x.p}")
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Fp":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self) -> "Fp":
        return Fp(-self.value, self.p)

    def __sub__(self, other: object) -> "Fp":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.value - o.value, self.p)

    def __rsub__(self, other: object) -> "Fp":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Fp":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Fp":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other: object) -> "Fp":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def conjugate(self) -> "Fp":
        return self

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


Scalar = Union[Fraction, GaussianRational, Fp, complex]


@dataclass(frozen=True)
class Field:
    """Tag identifying the coefficient field of a vector or subspace."""

    kind: str  # "rational" | "gaussian" | "fp" | "complex"
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("rational", "gaussian", "fp", "complex"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if (self.kind == "fp") != (self.p is not None):
            raise ValueError("prime fields and only prime fields carry a modulus")

    @property
    def exact(self) -> bool:
        return self.kind != "complex"

    @property
    def label(self) -> str:
        if self.kind == "fp":
            return f"fp({self.p})"
        if self.kind == "complex":
            return "complex64-approx"
        return self.kind

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, x: object) -> Scalar:
        """Embed ``x`` into this field, or raise ``TypeError``."""
        if self.kind == "rational":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, (int, str)):
                return Fraction(x)
        elif self.kind == "gaussian":
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, (int, Fraction)):
                return GaussianRational(Fraction(x))
        elif self.kind == "fp":
            assert self.p is not None
            if isinstance(x, Fp):
                if x.p != self.p:
                    raise TypeError(f"residue mod {x.p} does not live in F_{self.p}")
                return x
            if isinstance(x, int):
                return Fp(x, self.p)
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise TypeError(f"denominator of {x} vanishes mod {self.p}")
                return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        else:  # complex
            if isinstance(x, (int, float, complex)):
                return complex(x)
            if isinstance(x, Fraction):
                return complex(float(x))
            if isinstance(x, GaussianRational):
                return complex(x)
        raise TypeError(f"cannot coerce {x!r} into {self.label}")


RATIONAL = Field("rational")
GAUSSIAN = Field("gaussian")
COMPLEX = Field("complex")


def prime_field(p: int) -> Field:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Field("fp", p)


def parse_field(label: str) -> Field:
    """Inverse of ``Field.label`` for the exact fields, plus the float tag."""
    if label == "rational":
        return RATIONAL
    if label == "gaussian":
        return GAUSSIAN
    if label == "complex64-approx":
        return COMPLEX
    if label.startswith("fp(") and label.endswith(")"):
        return prime_field(int(label[3:-1]))
    raise ValueError(f"unknown field label {label!r}")
