"""Z2 x Z2 degrees and the sign rules they induce.

The four degrees form a closed enumeration whose definition order is the
canonical ordering used for every table and report:
``(0,0), (1,1), (0,1), (1,0)``.
"""

from __future__ import annotations

from enum import Enum

__all__ = [
    "Degree",
    "scalar_product",
    "koszul_sign",
    "total_degree",
    "degree_sum",
]


class Degree(Enum):
    D00 = (0, 0)
    D11 = (1, 1)
    D01 = (0, 1)
    D10 = (1, 0)

    @property
    def a(self) -> int:
        return self.value[0]

    @property
    def b(self) -> int:
        return self.value[1]

    @property
    def label(self) -> str:
        """Two-character serialization, e.g. ``"01"``."""
        return f"{self.a}{self.b}"

    @classmethod
    def of(cls, a: int, b: int) -> Degree:
        return cls((a % 2, b % 2))

    @classmethod
    def from_label(cls, label: str) -> Degree:
        if len(label) != 2 or any(c not in "01" for c in label):
            raise ValueError(f"not a Z2^2 degree label: {label!r}")
        return cls((int(label[0]), int(label[1])))

    def __add__(self, other: Degree) -> Degree:
        return Degree.of(self.a + other.a, self.b + other.b)

    def __str__(self) -> str:
        return self.label


def scalar_product(p: Degree, q: Degree) -> int:
    """Standard scalar product of two degrees, reduced mod 2."""
    return (p.a * q.a + p.b * q.b) % 2


def koszul_sign(p: Degree, q: Degree) -> int:
    """Exchange sign ``(-1)**<p|q>`` for homogeneous elements of degrees p, q."""
    return -1 if scalar_product(p, q) else 1


def total_degree(p: Degree) -> int:
    """Parity ``a + b mod 2``; 0 is super-even, 1 is super-odd."""
    return (p.a + p.b) % 2


def degree_sum(degrees) -> Degree:
    acc = Degree.D00
    for d in degrees:
        acc = acc + d
    return acc
