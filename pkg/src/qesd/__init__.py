"""Entanglement dynamics of accelerated two-qubit states under amplitude damping.

Numeric route (Rindler expansion -> partial trace -> Kraus evolution ->
eigenvalue concurrence) and analytic route (closed-form matrices and
concurrences) for two one-parameter families of initially entangled
states, plus the sudden-death boundary analysis connecting them.
"""

from .channel import (KrausPair, NoiseSpec, apply_local_channel,
                      evolved_closed_form, kraus_amplitude_damping)
from .entanglement import (ConcurrenceResult, Method, c_s1_closed, c_s2_closed,
                           concurrence_closed, concurrence_eigen,
                           concurrence_xstate)
from .matcore import (eig_hermitian, partial_trace_last, sqrt_psd, tensor,
                      check_density_matrix)
from .states import (Family, StateSpec, R_MAX, acceleration_to_r, build_initial,
                     reduced_state, reduced_state_analytic, rindler_expand)
from .sudden_death import (DeathPoint, DeathRange, NoBoundaryError,
                           boundary_alpha_theta1, boundary_alpha_theta2,
                           compare_death_ranges, death_range, find_death_point)

__all__ = [
    "Family", "StateSpec", "R_MAX", "acceleration_to_r", "build_initial",
    "rindler_expand", "reduced_state", "reduced_state_analytic",
    "NoiseSpec", "KrausPair", "kraus_amplitude_damping", "apply_local_channel",
    "evolved_closed_form",
    "Method", "ConcurrenceResult", "concurrence_eigen", "concurrence_xstate",
    "c_s1_closed", "c_s2_closed", "concurrence_closed",
    "tensor", "partial_trace_last", "eig_hermitian", "sqrt_psd",
    "check_density_matrix",
    "DeathPoint", "DeathRange", "NoBoundaryError", "boundary_alpha_theta1",
    "boundary_alpha_theta2", "death_range", "find_death_point",
    "compare_death_ranges",
]

__version__ = "0.1.0"
