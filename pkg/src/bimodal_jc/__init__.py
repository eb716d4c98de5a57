"""Two-level atom in a bimodal cavity driven from a two-mode squeezed vacuum.

Closed-form dynamics, atomic entanglement measures (inversion, linear and
von Neumann entropy, Husimi Q-function, Wehrl entropy) and a brute-force
Hamiltonian oracle that cross-checks them.
"""
from .dynamics import AmplitudeTable, evolve, kerr_phase, special_state_t_mpi, trapped_state
from .husimi_wehrl import SphereGrid, atomic_q, wehrl_closed_form_revival, wehrl_entropy
from .model import CapacityError, ModelParams, TmsCoefficients, choose_truncation, rabi_frequency, tms_coefficients
from .observables import (
    AtomDensityMatrix,
    BlochVector,
    bloch_vector,
    inversion_closed_form,
    linear_entropy,
    reduced_density,
    von_neumann_entropy,
)
from .oracle import brute_force_evolve, brute_force_reduced_density

__all__ = [
    "AmplitudeTable", "AtomDensityMatrix", "BlochVector", "CapacityError", "ModelParams",
    "SphereGrid", "TmsCoefficients", "atomic_q", "bloch_vector", "brute_force_evolve",
    "brute_force_reduced_density", "choose_truncation", "evolve", "inversion_closed_form",
    "kerr_phase", "linear_entropy", "rabi_frequency", "reduced_density", "special_state_t_mpi",
    "tms_coefficients", "trapped_state", "von_neumann_entropy", "wehrl_closed_form_revival",
    "wehrl_entropy",
]
