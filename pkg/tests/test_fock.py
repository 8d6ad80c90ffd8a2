import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from z22osc.algebra import (
    Generator,
    Polynomial,
    central_z11,
    charge_q01,
    charge_q1,
    charge_q10,
    charge_q2,
    hamiltonian_h00,
    klein_fermion,
    normal_form,
    op,
    witten,
)
from z22osc.errors import CutoffTooSmall, ZeroImage
from z22osc.fock import (
    MIXED,
    BasisState,
    SparseOperator,
    basis,
    basis_vector,
    generator_matrix,
    matrix_of,
    restrict,
    safe_indices,
    safe_projector,
    sector_image,
    spectrum,
    state_index,
    word_matrix,
)
from z22osc.grading import Degree

LADDERS = [g for g in Generator if not g.is_klein]


# --- basis ------------------------------------------------------------------------


def test_basis_sizes_and_order():
    b2 = basis(2)
    assert len(b2) == 16
    assert b2[0] == BasisState(0, 0, 0, 0)
    assert sum(1 for s in b2 if s.energy == 1) == 4
    assert len(basis(3)) == 36
    assert list(basis(3)) == sorted(basis(3))
    for i, s in enumerate(basis(3)):
        assert state_index(s, 3) == i


def test_cutoff_too_small():
    with pytest.raises(CutoffTooSmall):
        basis(1)
    with pytest.raises(CutoffTooSmall):
        safe_projector(2)
    with pytest.raises(CutoffTooSmall):
        generator_matrix("b", 1)


def test_state_degree_and_witten_eigenvalues():
    s = BasisState(0, 1, 1, 1)
    assert s.degree is Degree.D00
    assert BasisState(0, 1, 0, 0).degree is Degree.D11
    assert BasisState(0, 0, 1, 0).witten_eigenvalues() == (-1, 1)


# --- generator matrices -------------------------------------------------------------


def test_number_operator_matrix():
    n = (generator_matrix("b+", 3) @ generator_matrix("b", 3)).toarray()
    assert np.allclose(n, np.diag([s.n_b for s in basis(3)]))


def test_fermion_creation_signs():
    f1d = generator_matrix("f1+", 3)
    vac, one = BasisState(0, 0, 0, 0), BasisState(0, 0, 1, 0)
    assert f1d.element(state_index(one, 3), state_index(vac, 3)) == 1
    src, dst = BasisState(0, 1, 0, 0), BasisState(0, 1, 1, 0)
    assert f1d.element(state_index(dst, 3), state_index(src, 3)) == -1
    # oracle for the string sign: e and f1+ anticommute as matrices
    e = generator_matrix("e", 3)
    assert (e @ f1d + f1d @ e).max_abs() == 0.0


def test_fermion_species_commute_exactly():
    for cutoff in (2, 3, 5):
        f1, f2 = generator_matrix("f1", cutoff), generator_matrix("f2", cutoff)
        assert (f1 @ f2 - f2 @ f1).max_abs() == 0.0


def _expected_bracket(x, y):
    if x.mode == y.mode and not x.dagger and y.dagger:
        return 1
    if x.mode == y.mode and x.dagger and not y.dagger:
        return 1 if x.is_fermionic else -1
    return 0


@pytest.mark.parametrize("cutoff", [3, 4, 6])
def test_ccr_car_and_vanishing_brackets_on_safe_subspace(cutoff):
    from z22osc.grading import koszul_sign

    ident = SparseOperator.identity(4 * cutoff * cutoff)
    for x, y in itertools.combinations_with_replacement(LADDERS, 2):
        for a, b in ((x, y), (y, x)):
            ma, mb = generator_matrix(a, cutoff), generator_matrix(b, cutoff)
            br = ma @ mb - (mb @ ma) * koszul_sign(a.degree, b.degree)
            want = _expected_bracket(a, b)
            assert restrict(br - ident * want, cutoff).max_abs() <= 1e-12, (a, b)


def test_truncation_breaks_ccr_at_the_top_level():
    cutoff = 4
    b, bd = generator_matrix("b", cutoff), generator_matrix("b+", cutoff)
    full = (b @ bd - bd @ b - SparseOperator.identity(4 * cutoff * cutoff)).max_abs()
    assert full > 1.0
    assert restrict(b @ bd - bd @ b - SparseOperator.identity(64), cutoff).max_abs() <= 1e-12


# --- matrix_of ----------------------------------------------------------------------


def test_identity_and_hamiltonian_matrices():
    assert np.array_equal(matrix_of(Polynomial.identity(), 3).toarray(), np.eye(36))
    h = matrix_of(hamiltonian_h00(), 4).toarray()
    assert np.allclose(h, np.diag([s.energy for s in basis(4)]))


def _dense_q01(cutoff):
    """Independent dense construction from numpy.kron."""
    lower = np.diag(np.sqrt(np.arange(1, cutoff)), 1)
    ib, i2 = np.eye(cutoff), np.eye(2)
    par = np.diag((-1.0) ** np.arange(cutoff))
    f = np.array([[0.0, 1.0], [0.0, 0.0]])

    def k(*fs):
        out = fs[0]
        for x in fs[1:]:
            out = np.kron(out, x)
        return out

    b = k(lower, ib, i2, i2)
    e = k(ib, lower, i2, i2)
    f1 = k(ib, par, f, i2)
    f2 = k(ib, par, i2, f)
    return f1.T @ b + b.T @ f1 + f2.T @ e + e.T @ f2


def test_q01_moves_boson_into_fermion_one():
    v = matrix_of(charge_q01(), 2) @ basis_vector(BasisState(1, 0, 0, 0), 2)
    assert np.allclose(v, basis_vector(BasisState(0, 0, 1, 0), 2))
    dense = _dense_q01(2) @ basis_vector(BasisState(1, 0, 0, 0), 2)
    assert np.allclose(v, dense)


@pytest.mark.parametrize("cutoff", [2, 4])
def test_q01_matches_dense_construction(cutoff):
    assert np.allclose(matrix_of(charge_q01(), cutoff).toarray(), _dense_q01(cutoff))


def test_matrix_of_is_multiplicative_on_safe_subspace(rng):
    from .conftest import random_poly

    for _ in range(40):
        x, y = random_poly(rng, max_len=2, homogeneous=False), random_poly(rng, max_len=2, homogeneous=False)
        lhs = matrix_of(x * y, 6)
        rhs = matrix_of(x, 6) @ matrix_of(y, 6)
        assert restrict(lhs - rhs, 6, margin=2).max_abs() <= 1e-10


def test_phase_specialisation():
    from z22osc.algebra import PhaseCoefficient

    x = Polynomial.identity(PhaseCoefficient.scalar(1, 1))
    m = matrix_of(x, 2, phase=1j)
    assert np.allclose(m.toarray(), 1j * np.eye(16))


# --- witten matrices -------------------------------------------------------------


@pytest.mark.parametrize("i", [1, 2])
def test_witten_matrix_is_diagonal_sign(i):
    cutoff = 4
    k = matrix_of(witten(i), cutoff).toarray()
    signs = [(-1) ** (s.n_e + (s.n_f1 if i == 1 else s.n_f2)) for s in basis(cutoff)]
    assert np.array_equal(k, np.diag(signs).astype(complex))
    assert np.array_equal(k @ k, np.eye(64))
    h = matrix_of(hamiltonian_h00(), cutoff).toarray()
    assert np.allclose(k @ h, h @ k)


def test_witten_exchange_with_charges():
    cutoff = 4
    k1, k2 = matrix_of(witten(1), cutoff), matrix_of(witten(2), cutoff)
    q01, q10 = matrix_of(charge_q01(), cutoff), matrix_of(charge_q10(), cutoff)
    assert restrict(q01 @ k1 + k1 @ q01, cutoff).max_abs() <= 1e-12
    assert restrict(q10 @ k1 - k1 @ q10, cutoff).max_abs() <= 1e-12
    assert restrict(q01 @ k2 - k2 @ q01, cutoff).max_abs() <= 1e-12
    assert restrict(q10 @ k2 + k2 @ q10, cutoff).max_abs() <= 1e-12
    assert (k1 @ k2 - k2 @ k1).max_abs() == 0.0


def test_superised_fermions_as_matrices():
    cutoff = 4
    gens = {
        "b": op("b"),
        "e": op("e"),
        "a1": klein_fermion(1),
        "a2": klein_fermion(2),
    }
    gens.update({k + "+": klein_fermion(int(k[1]), True) if k.startswith("a") else op(k + "+") for k in list(gens)})
    m = {k: matrix_of(v, cutoff) for k, v in gens.items()}
    ident = SparseOperator.identity(64)
    for x, y in itertools.product(m, m):
        odd = x.startswith("a") and y.startswith("a")
        br = m[x] @ m[y] + m[y] @ m[x] if odd else m[x] @ m[y] - m[y] @ m[x]
        if y == x + "+":
            want = 1
        elif x == y + "+":
            want = 1 if odd else -1
        else:
            want = 0
        assert restrict(br - ident * want, cutoff).max_abs() <= 1e-12, (x, y)


def test_ground_state_is_annihilated():
    vac = basis_vector(BasisState(0, 0, 0, 0), 3)
    for x in (charge_q01(), charge_q10(), hamiltonian_h00()):
        assert np.abs(matrix_of(x, 3) @ vac).max() == 0.0


# --- safe projector ------------------------------------------------------------------


def test_safe_projector_rank():
    assert len(safe_indices(3)) == 16
    p = safe_projector(3).toarray()
    assert np.allclose(p @ p, p)
    assert int(round(np.trace(p).real)) == 16


def test_ccr_on_safe_subspace_dense():
    cutoff = 4
    b = generator_matrix("b", cutoff).toarray()
    p = safe_projector(cutoff).toarray()
    assert np.abs(p @ (b @ b.T - b.T @ b - np.eye(64)) @ p).max() < 1e-12


def test_central_term_matrix_vanishes():
    assert restrict(matrix_of(central_z11(), 4), 4).max_abs() == 0.0


def test_margin_one_is_not_enough_for_length_four_words():
    cutoff = 6
    w = (Generator.B, Generator.B, Generator.BD, Generator.BD)
    diff = word_matrix(w, cutoff) - matrix_of(normal_form(w), cutoff)
    assert restrict(diff, cutoff, margin=1).max_abs() > 1.0
    assert restrict(diff, cutoff, margin=2).max_abs() < 1e-10


def test_margin_two_is_exact_for_all_length_four_boson_words():
    cutoff = 6
    boson = [Generator.B, Generator.BD, Generator.E, Generator.ED]
    for w in itertools.product(boson, repeat=4):
        diff = word_matrix(w, cutoff) - matrix_of(normal_form(w), cutoff)
        assert restrict(diff, cutoff, margin=2).max_abs() <= 1e-10, w


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(list(Generator)), min_size=1, max_size=4))
def test_oracle_equivalence_property(word):
    w = tuple(word)
    diff = word_matrix(w, 6) - matrix_of(normal_form(w), 6)
    assert restrict(diff, 6, margin=2).max_abs() <= 1e-10


# --- spectrum and sectors ----------------------------------------------------------


def test_spectrum_levels():
    levels = spectrum(5)
    assert levels[0] == [(BasisState(0, 0, 0, 0), Degree.D00)]
    lvl2 = levels[2]
    assert len(lvl2) == 8
    for d in Degree:
        assert sum(1 for _, s in lvl2 if s is d) == 2
    assert len(levels[4]) == 16


def test_spectrum_agrees_with_hamiltonian_diagonal():
    cutoff = 5
    diag = matrix_of(hamiltonian_h00(), cutoff).toarray().diagonal().real
    for n, members in spectrum(cutoff).items():
        for s, _ in members:
            assert diag[state_index(s, cutoff)] == pytest.approx(n, abs=1e-12)


@pytest.mark.parametrize(
    "x, source, target",
    [
        (charge_q01(), "00", "01"),
        (charge_q01(), "11", "10"),
        (charge_q10() * charge_q01(), "00", "11"),
        (charge_q2(), "00", "10"),
        (charge_q1(), "01", "00"),
    ],
)
def test_sector_image(x, source, target):
    assert sector_image(x, Degree.from_label(source), 4) is Degree.from_label(target)


@pytest.mark.parametrize("d", list(Degree))
def test_diagonal_operator_preserves_sector(d):
    assert sector_image(hamiltonian_h00(), d, 4) is d


def test_sector_image_mixed_and_zero():
    assert sector_image(op("b") + op("f1"), Degree.D11, 4) == MIXED
    with pytest.raises(ZeroImage):
        sector_image(Polynomial.zero(), Degree.D00, 4)


# --- serialization ------------------------------------------------------------------


def test_sparse_operator_json_round_trip():
    m = matrix_of(charge_q1(), 3)
    data = json.loads(json.dumps(m.to_json()))
    assert data["dim"] == 36
    rows = [(r, c) for r, c, *_ in data["entries"]]
    assert rows == sorted(rows) and len(set(rows)) == len(rows)
    back = SparseOperator.from_json(data)
    assert (back - m).max_abs() == 0.0
