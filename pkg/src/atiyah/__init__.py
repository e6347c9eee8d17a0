"""Exact Čech–de Rham representatives of exponential Atiyah classes.

Two routes are implemented: lifting the Čech cocycle through the bicomplex by
exact linear algebra, and simplicial Chern–Weil with fibre integration over
simplices.  Both produce trace polynomials in the formal generators
``B_i = ω_{α_0 α_i}`` and can be compared after skew-symmetrisation.
"""

from atiyah.algebra import (
    Form,
    TraceForm,
    TraceWord,
    B,
    dt,
    normalize_trace_word,
    one,
    t,
    theta,
    trace,
)
from atiyah.cech import CechCochain, atiyah_cocycle, cech_delta, skew_symmetrise
from atiyah.lift import (
    Infeasible,
    LiftTuple,
    enumerate_trace_basis,
    lift_exponential_atiyah,
    solve_lift_step,
    verify_total_closed,
)
from atiyah.simplicial import (
    barycentric_curvature,
    fibre_integrate_level,
    green_p1_example,
    monomial_simplex_integral,
    simplicial_atiyah_cochain,
    simplicial_atiyah_power,
)
from atiyah.verify import (
    FreeWordPolynomial,
    agreement_check,
    leading_coefficient_check,
    permutation_identity_check,
    skew_eigenspace_dimension,
)

__all__ = [
    "B",
    "CechCochain",
    "Form",
    "FreeWordPolynomial",
    "Infeasible",
    "LiftTuple",
    "TraceForm",
    "TraceWord",
    "agreement_check",
    "atiyah_cocycle",
    "barycentric_curvature",
    "cech_delta",
    "dt",
    "enumerate_trace_basis",
    "fibre_integrate_level",
    "green_p1_example",
    "leading_coefficient_check",
    "lift_exponential_atiyah",
    "monomial_simplex_integral",
    "normalize_trace_word",
    "one",
    "permutation_identity_check",
    "simplicial_atiyah_cochain",
    "simplicial_atiyah_power",
    "skew_eigenspace_dimension",
    "skew_symmetrise",
    "solve_lift_step",
    "t",
    "theta",
    "trace",
    "verify_total_closed",
]
