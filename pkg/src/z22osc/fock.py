"""Truncated Fock-space representation of the oscillator algebra.

Basis states ``|n_b, n_e, n_f1, n_f2>`` are ordered lexicographically, which
matches the tensor-factor order (b, e, f1, f2) of the Kronecker products
below. Bosonic occupations run over ``0 .. cutoff-1``.

Sign strings: the only factor that generates a string is the exotic boson,
because ``<deg f_i | deg e> = 1`` while ``<deg f1 | deg f2> = 0`` and b has
degree (0,0). Hence f1, f2 and their adjoints carry ``(-1)**n_e`` and nothing
else.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp

from .algebra.generators import Generator
from .algebra.polynomial import Polynomial, Word
from .errors import CutoffTooSmall, ZeroImage
from .grading import Degree

__all__ = [
    "BasisState",
    "SparseOperator",
    "MIXED",
    "basis",
    "state_index",
    "basis_vector",
    "generator_matrix",
    "matrix_of",
    "word_matrix",
    "restrict",
    "safe_projector",
    "safe_indices",
    "spectrum",
    "complete_levels",
    "sector_image",
]

MIXED = "mixed"

IDENTITY_TOL = 1e-12
ORACLE_TOL = 1e-10


class BasisState(NamedTuple):
    n_b: int
    n_e: int
    n_f1: int
    n_f2: int

    @property
    def energy(self) -> int:
        return self.n_b + self.n_e + self.n_f1 + self.n_f2

    @property
    def degree(self) -> Degree:
        return Degree.of(self.n_e + self.n_f2, self.n_e + self.n_f1)

    @property
    def sector(self) -> Degree:
        return self.degree

    def witten_eigenvalues(self) -> tuple[int, int]:
        """``((-1)**(n_e+n_f1), (-1)**(n_e+n_f2))``."""
        return (-1) ** (self.n_e + self.n_f1), (-1) ** (self.n_e + self.n_f2)

    def ket(self) -> str:
        return f"|{self.n_b},{self.n_e},{self.n_f1},{self.n_f2}>"


class SparseOperator:
    """Complex sparse matrix on the truncated basis (CSR underneath)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = sp.csr_matrix(matrix, dtype=complex)
        m.sum_duplicates()
        m.eliminate_zeros()
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, dim: int) -> SparseOperator:
        return cls(sp.identity(dim, dtype=complex, format="csr"))

    @classmethod
    def zeros(cls, dim: int) -> SparseOperator:
        return cls(sp.csr_matrix((dim, dim), dtype=complex))

    def entries(self) -> list[tuple[int, int, complex]]:
        coo = self.matrix.tocoo()
        out = [(int(r), int(c), complex(v)) for r, c, v in zip(coo.row, coo.col, coo.data) if v != 0]
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def max_abs(self) -> float:
        if self.matrix.nnz == 0:
            return 0.0
        return float(np.abs(self.matrix.data).max())

    def dagger(self) -> SparseOperator:
        return SparseOperator(self.matrix.conj().T)

    def __matmul__(self, other):
        if isinstance(other, SparseOperator):
            return SparseOperator(self.matrix @ other.matrix)
        return self.matrix @ np.asarray(other)

    def __add__(self, other: SparseOperator) -> SparseOperator:
        return SparseOperator(self.matrix + other.matrix)

    def __sub__(self, other: SparseOperator) -> SparseOperator:
        return SparseOperator(self.matrix - other.matrix)

    def __neg__(self) -> SparseOperator:
        return SparseOperator(-self.matrix)

    def __mul__(self, scalar) -> SparseOperator:
        return SparseOperator(self.matrix * complex(scalar))

    __rmul__ = __mul__

    def element(self, row: int, col: int) -> complex:
        return complex(self.matrix[row, col])

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [[r, c, v.real, v.imag] for r, c, v in self.entries()],
        }

    @classmethod
    def from_json(cls, data: dict) -> SparseOperator:
        dim = data["dim"]
        rows = [e[0] for e in data["entries"]]
        cols = [e[1] for e in data["entries"]]
        vals = [complex(e[2], e[3]) for e in data["entries"]]
        return cls(sp.coo_matrix((vals, (rows, cols)), shape=(dim, dim)))


def _check_cutoff(cutoff: int, minimum: int = 2) -> None:
    if cutoff < minimum:
        raise CutoffTooSmall(cutoff, minimum)


@lru_cache(maxsize=None)
def basis(cutoff: int) -> tuple[BasisState, ...]:
    _check_cutoff(cutoff)
    return tuple(
        BasisState(*occ)
        for occ in itertools.product(range(cutoff), range(cutoff), (0, 1), (0, 1))
    )


def state_index(state: BasisState, cutoff: int) -> int:
    n_b, n_e, n_f1, n_f2 = state
    if not (0 <= n_b < cutoff and 0 <= n_e < cutoff and n_f1 in (0, 1) and n_f2 in (0, 1)):
        raise ValueError(f"{state} is outside the cutoff-{cutoff} basis")
    return ((n_b * cutoff + n_e) * 2 + n_f1) * 2 + n_f2


def basis_vector(state: BasisState, cutoff: int) -> np.ndarray:
    v = np.zeros(4 * cutoff * cutoff, dtype=complex)
    v[state_index(state, cutoff)] = 1.0
    return v


def _boson_lower(cutoff: int) -> sp.csr_matrix:
    return sp.diags(np.sqrt(np.arange(1, cutoff, dtype=float)), 1, format="csr")


_FERMION_LOWER = sp.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
_SIGMA_Z = sp.diags([1.0, -1.0], format="csr")
_ID2 = sp.identity(2, format="csr")


def _parity(cutoff: int) -> sp.csr_matrix:
    return sp.diags((-1.0) ** np.arange(cutoff), format="csr")


def _kron(*factors) -> sp.csr_matrix:
    out = factors[0]
    for f in factors[1:]:
        out = sp.kron(out, f, format="csr")
    return out


@lru_cache(maxsize=None)
def _generator_csr(g: Generator, cutoff: int) -> sp.csr_matrix:
    ib = sp.identity(cutoff, format="csr")
    lower = _boson_lower(cutoff)
    string = _parity(cutoff)
    mode = g.mode
    if mode == "b":
        m = _kron(lower, ib, _ID2, _ID2)
    elif mode == "e":
        m = _kron(ib, lower, _ID2, _ID2)
    elif mode == "f1":
        m = _kron(ib, string, _FERMION_LOWER, _ID2)
    elif mode == "f2":
        m = _kron(ib, string, _ID2, _FERMION_LOWER)
    elif mode == "K1":
        return _kron(ib, string, _SIGMA_Z, _ID2).astype(complex)
    elif mode == "K2":
        return _kron(ib, string, _ID2, _SIGMA_Z).astype(complex)
    else:  # pragma: no cover
        raise ValueError(mode)
    if g.dagger:
        m = m.T.tocsr()
    return m.astype(complex)


def generator_matrix(g: Generator | str, cutoff: int) -> SparseOperator:
    _check_cutoff(cutoff)
    if isinstance(g, str):
        g = Generator.from_token(g)
    return SparseOperator(_generator_csr(g, cutoff))


@lru_cache(maxsize=4096)
def _word_csr(word: Word, cutoff: int) -> sp.csr_matrix:
    dim = 4 * cutoff * cutoff
    m = sp.identity(dim, dtype=complex, format="csr")
    for g in word:
        m = m @ _generator_csr(g, cutoff)
    return m


def word_matrix(word, cutoff: int) -> SparseOperator:
    """Product of generator matrices for a raw (not normal-ordered) word."""
    _check_cutoff(cutoff)
    word = tuple(Generator.from_token(g) if isinstance(g, str) else g for g in word)
    return SparseOperator(_word_csr(word, cutoff))


def matrix_of(x: Polynomial, cutoff: int, phase: complex = 1.0) -> SparseOperator:
    """Represent ``x`` on the truncated space with the formal phase set to ``phase``."""
    _check_cutoff(cutoff)
    dim = 4 * cutoff * cutoff
    acc = sp.csr_matrix((dim, dim), dtype=complex)
    for word, coeff in x.items():
        acc = acc + coeff.evaluate(phase) * _word_csr(word, cutoff)
    return SparseOperator(acc)


def safe_indices(cutoff: int, margin: int = 1) -> list[int]:
    """Indices of states with both boson occupations <= cutoff - 1 - margin.

    A word with ``2 * margin`` boson ladder operators never leaves the
    truncated space while connecting two such states, so identities among
    such words hold exactly there. ``margin=1`` covers length-2 words.
    """
    _check_cutoff(cutoff, margin + 2)
    top = cutoff - 1 - margin
    return [i for i, s in enumerate(basis(cutoff)) if s.n_b <= top and s.n_e <= top]


def safe_projector(cutoff: int, margin: int = 1) -> SparseOperator:
    dim = 4 * cutoff * cutoff
    diag = np.zeros(dim)
    diag[safe_indices(cutoff, margin)] = 1.0
    return SparseOperator(sp.diags(diag, format="csr"))


def restrict(op: SparseOperator, cutoff: int, margin: int = 1) -> SparseOperator:
    """``P op P`` with P the safe projector."""
    p = safe_projector(cutoff, margin)
    return p @ op @ p


def spectrum(cutoff: int) -> dict[int, list[tuple[BasisState, Degree]]]:
    """Group the basis by energy; H00 is diagonal so no eigensolver is needed.

    Levels ``n <= cutoff - 1`` are complete; higher ones are truncated.
    """
    levels: dict[int, list[tuple[BasisState, Degree]]] = {}
    for s in basis(cutoff):
        levels.setdefault(s.energy, []).append((s, s.sector))
    return dict(sorted(levels.items()))


def complete_levels(cutoff: int) -> range:
    return range(0, cutoff)


def sector_image(x: Polynomial, sector: Degree, cutoff: int, phase: complex = 1.0, margin: int = 1):
    """Sector hit by ``x`` acting on the safe states of ``sector``.

    Returns a ``Degree`` when every nonzero image lies in one sector, or
    ``MIXED`` otherwise. Raises ZeroImage when every image vanishes.
    """
    _check_cutoff(cutoff, margin + 2)
    states = basis(cutoff)
    m = matrix_of(x, cutoff, phase).matrix.tocsc()
    hit: set[Degree] = set()
    for j in safe_indices(cutoff, margin):
        if states[j].sector is not sector:
            continue
        col = m.getcol(j)
        for i, v in zip(col.indices, col.data):
            if abs(v) > IDENTITY_TOL:
                hit.add(states[i].sector)
    if not hit:
        raise ZeroImage(f"operator annihilates every safe state of sector {sector.label}")
    if len(hit) > 1:
        return MIXED
    return hit.pop()
