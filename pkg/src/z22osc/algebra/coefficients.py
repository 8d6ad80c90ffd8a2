"""Exact scalars: Gaussian rationals and Laurent polynomials in a unit phase.

``PhaseCoefficient`` is a finite sum ``sum_k c_k u**k`` with Gaussian-rational
``c_k`` and ``u`` a formal unit-modulus phase (``u = exp(i*lam)``), so that
complex conjugation sends ``c u**k`` to ``conj(c) u**-k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = ["Gaussian", "PhaseCoefficient", "I", "ONE", "ZERO"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, slots=True)
class Gaussian:
    """Exact complex rational ``re + i*im``."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def coerce(cls, x) -> Gaussian:
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; build a Gaussian")
        return cls(_frac(x))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other) -> Gaussian:
        other = Gaussian.coerce(other)
        return Gaussian(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> Gaussian:
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other) -> Gaussian:
        return self + (-Gaussian.coerce(other))

    def __mul__(self, other) -> Gaussian:
        other = Gaussian.coerce(other)
        return Gaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> Gaussian:
        other = Gaussian.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return Gaussian(num.re / norm, num.im / norm)

    def conjugate(self) -> Gaussian:
        return Gaussian(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_json(self) -> dict:
        return {"re": _frac_str(self.re), "im": _frac_str(self.im)}

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i)"


I = Gaussian(0, 1)


class PhaseCoefficient:
    """Laurent polynomial in the formal phase ``u`` with Gaussian coefficients.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[int, Gaussian] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = Gaussian.coerce(c)
                if c:
                    k = int(k)
                    total = clean.get(k, Gaussian()) + c
                    if total:
                        clean[k] = total
                    else:
                        clean.pop(k, None)
        self._terms: tuple[tuple[int, Gaussian], ...] = tuple(sorted(clean.items()))
        self._hash = None

    @classmethod
    def scalar(cls, value, upow: int = 0) -> PhaseCoefficient:
        return cls({upow: Gaussian.coerce(value)})

    @classmethod
    def coerce(cls, x) -> PhaseCoefficient:
        if isinstance(x, PhaseCoefficient):
            return x
        return cls.scalar(x)

    def terms(self) -> tuple[tuple[int, Gaussian], ...]:
        return self._terms

    def u_powers(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self._terms)

    def constant(self) -> Gaussian:
        """The ``u**0`` component."""
        for k, c in self._terms:
            if k == 0:
                return c
        return Gaussian()

    def is_u_free(self) -> bool:
        return all(k == 0 for k, _ in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseCoefficient):
            try:
                other = PhaseCoefficient.coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other) -> PhaseCoefficient:
        other = PhaseCoefficient.coerce(other)
        return PhaseCoefficient(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> PhaseCoefficient:
        return PhaseCoefficient([(k, -c) for k, c in self._terms])

    def __sub__(self, other) -> PhaseCoefficient:
        return self + (-PhaseCoefficient.coerce(other))

    def __mul__(self, other) -> PhaseCoefficient:
        other = PhaseCoefficient.coerce(other)
        return PhaseCoefficient(
            [(k1 + k2, c1 * c2) for k1, c1 in self._terms for k2, c2 in other._terms]
        )

    __rmul__ = __mul__

    def conjugate(self) -> PhaseCoefficient:
        return PhaseCoefficient([(-k, c.conjugate()) for k, c in self._terms])

    def shift(self, upow: int) -> PhaseCoefficient:
        """Multiply by ``u**upow``."""
        return PhaseCoefficient([(k + upow, c) for k, c in self._terms])

    def evaluate(self, u: complex = 1.0) -> complex:
        return sum((complex(c) * u**k for k, c in self._terms), 0j)

    def to_json(self) -> list[dict]:
        return [{**c.to_json(), "upow": k} for k, c in self._terms]

    @classmethod
    def from_json(cls, items) -> PhaseCoefficient:
        return cls([(it["upow"], Gaussian(it["re"], it["im"])) for it in items])

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms:
            parts.append(repr(c) if k == 0 else f"{c!r}*u^{k}")
        return " + ".join(parts)


ONE = PhaseCoefficient.scalar(1)
ZERO = PhaseCoefficient()
