"""Exact verification engine for the Z2 x Z2 graded supersymmetric oscillator.

Two independent routes are provided: a symbolic normal-ordering engine
(:mod:`z22osc.algebra`) and a truncated Fock-space matrix representation
(:mod:`z22osc.fock`). :mod:`z22osc.verify` cross-checks them claim by claim.
"""

from .grading import Degree, koszul_sign, scalar_product, total_degree

__version__ = "0.1.0"

__all__ = ["Degree", "koszul_sign", "scalar_product", "total_degree", "__version__"]
