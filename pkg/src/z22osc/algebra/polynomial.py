"""Normal-ordered polynomials in the ten generators.

Every ``Polynomial`` is stored in normal form, so structural equality is
operator equality. The rewrite engine works on plain tuples of generators
with integer coefficients (all rule corrections are integers) and is cached.
"""

from __future__ import annotations

import random
from collections import defaultdict
from functools import lru_cache
from typing import Iterable

from ..errors import NonHomogeneousOperand
from ..grading import Degree, degree_sum, koszul_sign, total_degree
from .coefficients import Gaussian, PhaseCoefficient
from .generators import Generator, rule_for

__all__ = [
    "Word",
    "Polynomial",
    "normal_form",
    "normal_form_word",
    "violations",
    "termination_measure",
    "word_degree",
    "multiply",
    "adjoint",
    "graded_commutator",
    "super_commutator",
    "commutator",
    "anticommutator",
    "vacuum_expectation",
]

Word = tuple[Generator, ...]


def word_degree(word: Iterable[Generator]) -> Degree:
    return degree_sum(g.degree for g in word)


def violations(word: Word) -> list[int]:
    """Positions ``i`` where the pair ``word[i], word[i+1]`` has a rewrite rule."""
    return [i for i in range(len(word) - 1) if rule_for(word[i], word[i + 1]) is not None]


def termination_measure(word: Word) -> tuple[int, int]:
    """(inversions w.r.t. canonical order, length); every rule decreases it."""
    ranks = [g.rank for g in word]
    inv = sum(1 for i in range(len(ranks)) for j in range(i + 1, len(ranks)) if ranks[i] > ranks[j])
    return inv, len(word)


def _rewrite_at(word: Word, i: int):
    rule = rule_for(word[i], word[i + 1])
    for c, piece in rule.replacements():
        yield c, word[:i] + piece + word[i + 2 :]


@lru_cache(maxsize=None)
def _normal_form_cached(word: Word) -> tuple[tuple[Word, int], ...]:
    for i in range(len(word) - 1):
        if rule_for(word[i], word[i + 1]) is not None:
            acc: dict[Word, int] = defaultdict(int)
            for c, new in _rewrite_at(word, i):
                for w, k in _normal_form_cached(new):
                    acc[w] += c * k
            return tuple(sorted(((w, k) for w, k in acc.items() if k), key=lambda t: _word_key(t[0])))
    return ((word, 1),)


def _normal_form_random(word: Word, rng: random.Random) -> dict[Word, int]:
    spots = violations(word)
    if not spots:
        return {word: 1}
    i = rng.choice(spots)
    acc: dict[Word, int] = defaultdict(int)
    for c, new in _rewrite_at(word, i):
        for w, k in _normal_form_random(new, rng).items():
            acc[w] += c * k
    return {w: k for w, k in acc.items() if k}


def normal_form_word(word: Iterable[Generator], rng: random.Random | None = None) -> dict[Word, int]:
    """Integer-coefficient normal form of a single word.

    With ``rng`` given, the rewrite position is chosen at random at every
    step (bypassing the cache); the result must not depend on that choice.
    """
    word = tuple(word)
    if rng is not None:
        return _normal_form_random(word, rng)
    return dict(_normal_form_cached(word))


def _word_key(word: Word) -> tuple[int, ...]:
    return tuple(g.rank for g in word)


def _as_coeff(c) -> PhaseCoefficient:
    return PhaseCoefficient.coerce(c)


class Polynomial:
    """Finite linear combination of normal-form words.

    The empty mapping is the zero operator and the empty word is the
    identity. Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[Word, PhaseCoefficient] | None = None, *, _trusted: bool = False):
        if _trusted:
            self._terms = terms or {}
        else:
            acc: dict[Word, PhaseCoefficient] = {}
            for word, c in (terms or {}).items():
                c = _as_coeff(c)
                for w, k in normal_form_word(word).items():
                    acc[w] = acc.get(w, PhaseCoefficient()) + c * k
            self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return cls({}, _trusted=True)

    @classmethod
    def identity(cls, coeff=1) -> Polynomial:
        return cls({(): coeff})

    @classmethod
    def gen(cls, g: Generator | str) -> Polynomial:
        if isinstance(g, str):
            g = Generator.from_token(g)
        return cls({(g,): PhaseCoefficient.scalar(1)}, _trusted=True)

    @classmethod
    def from_word(cls, word: Iterable[Generator | str], coeff=1) -> Polynomial:
        word = tuple(Generator.from_token(g) if isinstance(g, str) else g for g in word)
        return cls({word: coeff})

    # inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Word, PhaseCoefficient]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: _word_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set[Degree]:
        return {word_degree(w) for w in self._terms}

    def degree(self) -> Degree | None:
        """The Z2^2 degree if homogeneous; None for the zero polynomial."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise NonHomogeneousOperand(f"polynomial mixes degrees {sorted(d.label for d in degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_u_free(self) -> bool:
        return all(c.is_u_free() for c in self._terms.values())

    def u_powers(self) -> set[int]:
        return {k for c in self._terms.values() for k in c.u_powers()}

    def max_word_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    # arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.identity(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            s = acc.get(w, PhaseCoefficient()) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return Polynomial(acc, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({w: -c for w, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.identity(other)
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = _as_coeff(c)
        if not c:
            return Polynomial.zero()
        return Polynomial({w: v * c for w, v in self._terms.items() if v * c}, _trusted=True)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def __pow__(self, n: int) -> Polynomial:
        result = Polynomial.identity()
        for _ in range(n):
            result = result * self
        return result

    def adjoint(self) -> Polynomial:
        return adjoint(self)

    def conjugate_coeffs(self) -> Polynomial:
        return Polynomial({w: c.conjugate() for w, c in self._terms.items()}, _trusted=True)

    def map_words(self, fn) -> Polynomial:
        """Apply ``fn(word) -> Polynomial`` to each word and recombine linearly."""
        out = Polynomial.zero()
        for w, c in self._terms.items():
            out = out + fn(w).scale(c)
        return out

    # serialization ----------------------------------------------------

    def to_json(self) -> list[dict]:
        rows = []
        for w, c in self.items():
            tokens = [g.token for g in w]
            for entry in c.to_json():
                rows.append({"word": tokens, "coeff": entry})
        return rows

    @classmethod
    def from_json(cls, rows) -> Polynomial:
        acc: dict[Word, PhaseCoefficient] = {}
        for row in rows:
            w = tuple(Generator.from_token(t) for t in row["word"])
            co = row["coeff"]
            c = PhaseCoefficient.scalar(Gaussian(co["re"], co["im"]), co.get("upow", 0))
            acc[w] = acc.get(w, PhaseCoefficient()) + c
        return cls(acc)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            word = " ".join(g.token for g in w) or "1"
            parts.append(f"({c!r}) {word}" if len(c.terms()) > 1 else f"{c!r} {word}")
        return " + ".join(parts)


def normal_form(word: Iterable[Generator], c=1) -> Polynomial:
    """Normal form of ``c * word`` as a Polynomial."""
    c = _as_coeff(c)
    terms = {w: c * k for w, k in normal_form_word(tuple(word)).items()}
    return Polynomial({w: v for w, v in terms.items() if v}, _trusted=True)


def multiply(x: Polynomial, y: Polynomial) -> Polynomial:
    acc: dict[Word, PhaseCoefficient] = {}
    for wx, cx in x._terms.items():
        for wy, cy in y._terms.items():
            c = cx * cy
            for w, k in _normal_form_cached(wx + wy):
                acc[w] = acc.get(w, PhaseCoefficient()) + c * k
    return Polynomial({w: c for w, c in acc.items() if c}, _trusted=True)


def adjoint(x: Polynomial) -> Polynomial:
    """Antilinear involution ``(ab)+ = b+ a+`` for every degree."""
    acc: dict[Word, PhaseCoefficient] = {}
    for w, c in x._terms.items():
        rev = tuple(g.adjoint() for g in reversed(w))
        cc = c.conjugate()
        for nw, k in _normal_form_cached(rev):
            acc[nw] = acc.get(nw, PhaseCoefficient()) + cc * k
    return Polynomial({w: c for w, c in acc.items() if c}, _trusted=True)


def commutator(x: Polynomial, y: Polynomial) -> Polynomial:
    return x * y - y * x


def anticommutator(x: Polynomial, y: Polynomial) -> Polynomial:
    return x * y + y * x


def graded_commutator(x: Polynomial, y: Polynomial) -> Polynomial:
    """``x y - (-1)**<deg x|deg y> y x`` for homogeneous x, y."""
    dx, dy = x.degree(), y.degree()
    if dx is None or dy is None:
        return Polynomial.zero()
    return x * y - (y * x).scale(koszul_sign(dx, dy))


def super_commutator(x: Polynomial, y: Polynomial) -> Polynomial:
    """Bracket fixed by the total (Z2) degree: anticommutator iff both are odd."""
    dx, dy = x.degree(), y.degree()
    if dx is None or dy is None:
        return Polynomial.zero()
    if total_degree(dx) and total_degree(dy):
        return anticommutator(x, y)
    return commutator(x, y)


def vacuum_expectation(x: Polynomial) -> PhaseCoefficient:
    """``<0|x|0>`` read off the normal form.

    A normal-form word with a creator is killed by ``<0|`` and one with an
    annihilator is killed by ``|0>`` (Klein factors to its right act as +1
    on the vacuum). Only the identity and pure Klein words survive, each
    with vacuum value 1.
    """
    out = PhaseCoefficient()
    for w, c in x._terms.items():
        if all(g.is_klein for g in w):
            out = out + c
    return out
