"""Acceptance criteria, one test each, at the stated tolerances.

Every test prints a single ``PASS``/``FAIL`` line; the lines are also
repeated in the terminal summary so they show up without ``-s``.
"""

import time

import numpy as np
import pytest

from z22osc.algebra import (
    Polynomial,
    adjoint,
    anticommutator,
    central_z11,
    charge_q01,
    charge_q1,
    charge_q10,
    charge_q2,
    commutator,
    hamiltonian_h,
    hamiltonian_h00,
    klein_fermion,
    op,
    substitute_r_symmetry,
    super_commutator,
    vacuum_expectation,
    witten,
)
from z22osc.fock import (
    IDENTITY_TOL,
    ORACLE_TOL,
    BasisState,
    basis_vector,
    matrix_of,
    restrict,
    sector_image,
    spectrum,
)
from z22osc.errors import FixtureMismatch
from z22osc.grading import Degree
from z22osc.verify import (
    compare_table1,
    evaluate_containments,
    generated_table,
    load_table1,
    oracle_residuals,
)

RESULTS: list[str] = []


def report(number: int, ok: bool, summary: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {summary}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _nonzero(named):
    return [name for name, poly in named if not poly.is_zero()]


def test_criterion_01_supertranslation_symbolic():
    t0 = time.perf_counter()
    q01, q10, h = charge_q01(), charge_q10(), hamiltonian_h00()
    bad = _nonzero(
        [
            ("{Q01,Q01} - 2H00", anticommutator(q01, q01) - 2 * h),
            ("{Q10,Q10} - 2H00", anticommutator(q10, q10) - 2 * h),
            ("[Q10,Q01]", commutator(q10, q01)),
            ("[H00,Q01]", commutator(h, q01)),
            ("[H00,Q10]", commutator(h, q10)),
        ]
    )
    dt = time.perf_counter() - t0
    report(1, not bad and dt < 1.0, f"graded N=(1,1) algebra is the zero polynomial; failing={bad} t={dt:.3f}s")


def test_criterion_02_superisation_symbolic():
    t0 = time.perf_counter()
    gens = {"b": op("b"), "e": op("e"), "a1": klein_fermion(1), "a2": klein_fermion(2)}
    gens.update({k + "+": adjoint(v) for k, v in list(gens.items())})
    bad = []
    for xn, x in gens.items():
        for yn, y in gens.items():
            same_mode = xn.rstrip("+") == yn.rstrip("+")
            fermionic = xn.startswith("a")
            if same_mode and not xn.endswith("+") and yn.endswith("+"):
                want = 1
            elif same_mode and xn.endswith("+") and not yn.endswith("+"):
                want = 1 if fermionic else -1
            else:
                want = 0
            if not (super_commutator(x, y) - Polynomial.identity(want)).is_zero():
                bad.append(f"[{xn},{yn}]")
    q1, q2, hh = charge_q1(), charge_q2(), hamiltonian_h()
    bad += _nonzero(
        [
            ("{Q1,Q1} - 2H", anticommutator(q1, q1) - 2 * hh),
            ("{Q2,Q2} - 2H", anticommutator(q2, q2) - 2 * hh),
            ("{Q2,Q1}", anticommutator(q2, q1)),
            ("[H,Q1]", commutator(hh, q1)),
            ("[H,Q2]", commutator(hh, q2)),
            ("H - H00", hh - hamiltonian_h00()),
        ]
    )
    dt = time.perf_counter() - t0
    report(2, not bad and dt < 1.0, f"Klein-dressed CCR/CAR and N=2 algebra exact; failing={bad} t={dt:.3f}s")


def test_criterion_03_klein_charge_relations():
    cutoff = 4
    k1, k2, q1, q2 = witten(1), witten(2), charge_q1(), charge_q2()
    rels = [
        ("{K1,Q1}", anticommutator(k1, q1)),
        ("[K1,Q2]", commutator(k1, q2)),
        ("[K2,Q1]", commutator(k2, q1)),
        ("{K2,Q2}", anticommutator(k2, q2)),
    ]
    bad = _nonzero(rels)
    mk1, mk2, mq1, mq2 = (matrix_of(x, cutoff) for x in (k1, k2, q1, q2))
    mats = [mk1 @ mq1 + mq1 @ mk1, mk1 @ mq2 - mq2 @ mk1, mk2 @ mq1 - mq1 @ mk2, mk2 @ mq2 + mq2 @ mk2]
    resid = max(restrict(m, cutoff).max_abs() for m in mats)
    report(3, not bad and resid <= IDENTITY_TOL, f"K/Q exchange relations; symbolic failing={bad} matrix residual={resid:.3g} at cutoff 4")


def test_criterion_04_degeneracy():
    t0 = time.perf_counter()
    levels = spectrum(7)
    ok = [(s, d) for s, d in levels[0]] == [(BasisState(0, 0, 0, 0), Degree.D00)]
    counts = {}
    for n in range(1, 7):
        members = levels[n]
        per_sector = {d.label: sum(1 for _, s in members if s is d) for d in Degree}
        counts[n] = len(members)
        ok = ok and len(members) == 4 * n and all(c == n for c in per_sector.values())
    dt = time.perf_counter() - t0
    report(4, ok and dt < 1.0, f"level counts at cutoff 7: {counts} (expected 4n, n per sector) t={dt:.3f}s")


def test_criterion_05_level_table_fixture():
    t0 = time.perf_counter()
    fixture = load_table1()
    try:
        compare_table1(generated_table(4), fixture)
        ok, msg = True, "levels 0-4 match the transcription cell by cell"
    except FixtureMismatch as exc:
        ok, msg = False, str(exc)
    cells = sum(1 for c in fixture.values() for s in c.values() if s)
    dt = time.perf_counter() - t0
    report(5, ok and cells == 17 and dt < 1.0, f"{msg}; {cells} non-empty cells t={dt:.3f}s")


def test_criterion_06_oracle_equivalence():
    t0 = time.perf_counter()
    worst = max(r for _, r in oracle_residuals(cutoff=6, seed=0, n_words=100, max_len=4))
    dt = time.perf_counter() - t0
    report(6, worst <= ORACLE_TOL and dt < 10.0, f"100 seeded words at cutoff 6, max residual {worst:.3g} t={dt:.3f}s")


def test_criterion_07_sector_maps_as_printed():
    graded = evaluate_containments({"Q01": charge_q01(), "Q10": charge_q10()}, "Q01", "Q10", cutoff=4)
    superised = evaluate_containments({"Q1": charge_q1(), "Q2": charge_q2()}, "Q1", "Q2", cutoff=4)
    failing = [f"{r['charge']} H{r['source']} in H{r['target']} (image H{r['image']})" for r in graded + superised if not r["holds"]]
    product = charge_q10() * charge_q01()
    img = sector_image(product, Degree.D00, 4)
    if img is not Degree.D11:
        failing.append(f"Q10 Q01 H00 in H11 (image {img})")
    report(7, not failing, f"{len(graded) + len(superised) + 1} printed containments; failing={failing}")


def test_criterion_08_r_symmetry():
    h, q01, q10 = hamiltonian_h00(), charge_q01(), charge_q10()
    rh, r01, r10 = (substitute_r_symmetry(x) for x in (h, q01, q10))
    u_free = all(x.u_powers() <= {0} for x in (rh, r01, r10))
    ok = rh == h and r01 == q10 and r10 == q01 and u_free
    report(
        8,
        ok,
        f"R(H00)=H00: {rh == h}; R(Q01)=Q10: {r01 == q10} (R(Q01)=Q01: {r01 == q01}); "
        f"R(Q10)=Q01: {r10 == q01}; u-powers of R(Q10): {sorted(r10.u_powers())}",
    )


def test_criterion_09_ground_state():
    cutoff = 3
    vac = basis_vector(BasisState(0, 0, 0, 0), cutoff)
    resid = max(float(np.abs(matrix_of(x, cutoff) @ vac).max()) for x in (charge_q01(), charge_q10()))
    sym = vacuum_expectation(hamiltonian_h00())
    report(9, resid == 0.0 and not sym, f"Q01, Q10 annihilate the vacuum at cutoff 3 with residual {resid}; <0|H00|0> = 0")


def test_criterion_10_central_term():
    z = central_z11()
    resid = restrict(matrix_of(z, 4), 4).max_abs()
    report(10, z.is_zero() and resid <= IDENTITY_TOL, f"Z11 is the zero polynomial; matrix residual {resid} at cutoff 4")
