"""Exact symbolic algebra of the graded oscillator generators."""

from .coefficients import ONE, ZERO, Gaussian, I, PhaseCoefficient
from .generators import Generator, RewriteRule, rule_for
from .operators import (
    OPERATORS,
    central_z11,
    charge_q01,
    charge_q1,
    charge_q10,
    charge_q2,
    get_operator,
    hamiltonian_h,
    hamiltonian_h00,
    klein_fermion,
    number_op,
    op,
    phase_rotation,
    substitute_r_symmetry,
    witten,
)
from .polynomial import (
    Polynomial,
    adjoint,
    anticommutator,
    commutator,
    graded_commutator,
    multiply,
    normal_form,
    normal_form_word,
    super_commutator,
    termination_measure,
    vacuum_expectation,
    violations,
    word_degree,
)
