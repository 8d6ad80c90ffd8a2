"""Named operators of the oscillator model and the R-symmetry substitution."""

from __future__ import annotations

from functools import cache

from ..errors import UnknownOperator
from .coefficients import Gaussian, I, PhaseCoefficient
from .generators import LADDER_MODES, Generator
from .polynomial import Polynomial, Word, commutator, normal_form

__all__ = [
    "op",
    "number_op",
    "hamiltonian_h00",
    "charge_q01",
    "charge_q10",
    "witten",
    "klein_fermion",
    "hamiltonian_h",
    "charge_q1",
    "charge_q2",
    "central_z11",
    "substitute_r_symmetry",
    "phase_rotation",
    "OPERATORS",
    "get_operator",
]


def op(token: str) -> Polynomial:
    """Single generator by token: ``b``, ``b+``, ..., ``K1``, ``K2``."""
    return Polynomial.gen(token)


def number_op(mode: str) -> Polynomial:
    if mode not in LADDER_MODES:
        raise ValueError(f"no number operator for mode {mode!r}")
    return op(mode + "+") * op(mode)


@cache
def hamiltonian_h00() -> Polynomial:
    return sum((number_op(m) for m in LADDER_MODES), Polynomial.zero())


def _charge(first: str, second: str) -> Polynomial:
    # f_first couples to b and f_second couples to e
    return (
        op(first + "+") * op("b")
        + op("b+") * op(first)
        + op(second + "+") * op("e")
        + op("e+") * op(second)
    )


@cache
def charge_q01() -> Polynomial:
    return _charge("f1", "f2")


@cache
def charge_q10() -> Polynomial:
    return _charge("f2", "f1")


def witten(i: int) -> Polynomial:
    """Witten parity operator K_i as an abstract generator."""
    if i not in (1, 2):
        raise ValueError("Witten operators are K1 and K2")
    return op(f"K{i}")


def klein_fermion(i: int, dagger: bool = False) -> Polynomial:
    """Superised fermion ``a_i = f_i K1`` (``a_i+ = K1 f_i+``)."""
    if i not in (1, 2):
        raise ValueError("Klein fermions are a1 and a2")
    if dagger:
        return witten(1) * op(f"f{i}+")
    return op(f"f{i}") * witten(1)


@cache
def hamiltonian_h() -> Polynomial:
    h = number_op("b") + number_op("e")
    for i in (1, 2):
        h = h + klein_fermion(i, dagger=True) * klein_fermion(i)
    return h


@cache
def charge_q1() -> Polynomial:
    return (witten(1) * charge_q01()).scale(I)


@cache
def charge_q2() -> Polynomial:
    return witten(1) * charge_q10()


@cache
def central_z11() -> Polynomial:
    """``Z11 = [Q10, Q01] / (2i)``."""
    return commutator(charge_q10(), charge_q01()).scale(Gaussian(1) / Gaussian(0, 2))


# generator -> (u exponent per unit of power, image generator)
_R_MAP = {
    "b": (1, "e"),
    "e": (-1, "b"),
    "f1": (1, "f2"),
    "f2": (-1, "f1"),
    "b+": (-1, "e+"),
    "e+": (1, "b+"),
    "f1+": (-1, "f2+"),
    "f2+": (1, "f1+"),
    "K1": (0, "K2"),
    "K2": (0, "K1"),
}

_PHASE_MAP = {
    "b": 1,
    "e": -1,
    "f1": 1,
    "f2": -1,
    "b+": -1,
    "e+": 1,
    "f1+": -1,
    "f2+": 1,
    "K1": 0,
    "K2": 0,
}


def _substitute(x: Polynomial, image) -> Polynomial:
    def sub(word: Word) -> Polynomial:
        upow = 0
        new = []
        for g in word:
            k, h = image(g.token)
            upow += k
            new.append(Generator.from_token(h))
        return normal_form(new, Gaussian(1)).scale(_u(upow))

    return x.map_words(sub)


def _u(k: int) -> PhaseCoefficient:
    return PhaseCoefficient.scalar(1, k)


def substitute_r_symmetry(x: Polynomial, power: int = 1) -> Polynomial:
    """Apply ``b -> u e, e -> u^-1 b, f1 -> u f2, f2 -> u^-1 f1`` word by word.

    Daggered generators take the conjugate phase, ``K1 <-> K2``, and
    ``power`` replaces ``u`` by ``u**power`` (the map at angle
    ``power * lam``). The result is renormal-ordered.
    """

    def image(token):
        k, h = _R_MAP[token]
        return k * power, h

    return _substitute(x, image)


def phase_rotation(x: Polynomial, power: int = 1) -> Polynomial:
    """``b -> u b, e -> u^-1 e, f1 -> u f1, f2 -> u^-1 f2`` with conjugate phases on daggers.

    Two R-symmetry maps compose to one of these:
    ``R(R(x, n), m) == phase_rotation(x, n - m)``.
    """

    def image(token):
        return _PHASE_MAP[token] * power, token

    return _substitute(x, image)


OPERATORS = {
    "H00": hamiltonian_h00,
    "Q01": charge_q01,
    "Q10": charge_q10,
    "K1": lambda: witten(1),
    "K2": lambda: witten(2),
    "a1": lambda: klein_fermion(1),
    "a2": lambda: klein_fermion(2),
    "H": hamiltonian_h,
    "Q1": charge_q1,
    "Q2": charge_q2,
    "Z11": central_z11,
}


def get_operator(name: str) -> Polynomial:
    try:
        return OPERATORS[name]()
    except KeyError:
        raise UnknownOperator(f"unknown operator {name!r}; known: {', '.join(OPERATORS)}") from None
