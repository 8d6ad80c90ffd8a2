"""The ten algebra generators and the adjacent-pair rewrite rules.

Canonical order (lowest first)::

    b+ < e+ < f1+ < f2+ < b < e < f1 < f2 < K1 < K2

Creators sit left of annihilators and the two Klein generators are pushed to
the far right, where they can appear at most once each.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..grading import Degree, koszul_sign

__all__ = ["Generator", "RewriteRule", "rule_for", "MODES", "LADDER_MODES"]

LADDER_MODES = ("b", "e", "f1", "f2")
MODES = LADDER_MODES + ("K1", "K2")

_MODE_DEGREE = {
    "b": Degree.D00,
    "e": Degree.D11,
    "f1": Degree.D01,
    "f2": Degree.D10,
    "K1": Degree.D00,
    "K2": Degree.D00,
}

# Ladder modes a Klein generator anticommutes with, read off from its
# diagonal action (-1)**(n_e + n_fi).
_KLEIN_ANTICOMMUTES = {
    "K1": frozenset({"e", "f1"}),
    "K2": frozenset({"e", "f2"}),
}


class Generator(Enum):
    BD = ("b", True)
    ED = ("e", True)
    F1D = ("f1", True)
    F2D = ("f2", True)
    B = ("b", False)
    E = ("e", False)
    F1 = ("f1", False)
    F2 = ("f2", False)
    K1 = ("K1", False)
    K2 = ("K2", False)

    @property
    def mode(self) -> str:
        return self.value[0]

    @property
    def dagger(self) -> bool:
        return self.value[1]

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def degree(self) -> Degree:
        return _MODE_DEGREE[self.mode]

    @property
    def is_klein(self) -> bool:
        return self.mode in ("K1", "K2")

    @property
    def is_fermionic(self) -> bool:
        return self.mode in ("f1", "f2")

    @property
    def is_bosonic_ladder(self) -> bool:
        return self.mode in ("b", "e")

    @property
    def token(self) -> str:
        return self.mode + ("+" if self.dagger else "")

    def adjoint(self) -> Generator:
        if self.is_klein:
            return self
        return Generator((self.mode, not self.dagger))

    @classmethod
    def from_token(cls, token: str) -> Generator:
        try:
            return _BY_TOKEN[token]
        except KeyError:
            raise ValueError(f"unknown generator token {token!r}") from None

    @classmethod
    def ladder(cls, mode: str, dagger: bool = False) -> Generator:
        return cls((mode, dagger))

    def __lt__(self, other: Generator) -> bool:
        return self.rank < other.rank

    def __repr__(self) -> str:
        return self.token


_RANK = {g: i for i, g in enumerate(Generator)}
_BY_TOKEN = {g.token: g for g in Generator}


@dataclass(frozen=True)
class RewriteRule:
    """``left[0] left[1] -> sign * left[1] left[0] + correction * 1``.

    ``sign == 0`` drops the swapped pair entirely (fermion squares, Klein
    squares); ``correction`` is the scalar left behind by a CCR/CAR swap or
    by ``K_i**2 = 1``.
    """

    left: tuple[Generator, Generator]
    sign: int
    correction: int = 0

    @property
    def swapped(self) -> tuple[Generator, Generator] | None:
        if self.sign == 0:
            return None
        return (self.left[1], self.left[0])

    def replacements(self):
        """Yield ``(coefficient, replacement word)`` pairs."""
        if self.sign:
            yield self.sign, self.swapped
        if self.correction:
            yield self.correction, ()


def _exchange_sign(x: Generator, y: Generator) -> int:
    if x.is_klein and y.is_klein:
        return 1
    if x.is_klein or y.is_klein:
        k, other = (x, y) if x.is_klein else (y, x)
        return -1 if other.mode in _KLEIN_ANTICOMMUTES[k.mode] else 1
    return koszul_sign(x.degree, y.degree)


def rule_for(x: Generator, y: Generator) -> RewriteRule | None:
    """Rewrite rule for the adjacent pair ``x y``, or None if already ordered."""
    if x is y:
        if x.is_fermionic:
            return RewriteRule((x, y), 0)
        if x.is_klein:
            return RewriteRule((x, y), 0, 1)
        return None
    if x.rank < y.rank:
        return None
    correction = 0
    if not x.dagger and y.dagger and x.mode == y.mode:
        # annihilator left of its own creator: [a, a+] = 1 or {a, a+} = 1
        correction = 1
    return RewriteRule((x, y), _exchange_sign(x, y), correction)
