"""
Symplectic forms, pushforwards and the untwisted comparison
"""
from .forms import omega_chart, omega_orbit, omega_orbit_from_generators, solve_generator, omega_orbit_invariance
from .pushforward import jacobian_mu, pushforward_mu, verify_pullback
from .classical import vector_field_chart, classical_moment, hermitian_relations
from .twist import (
    twist_one_form,
    twist_closedness,
    log_det_correction,
    verify_affine_decomposition,
    transported_form_check
)

__all__ = [
    'omega_chart',
    'omega_orbit',
    'omega_orbit_from_generators',
    'solve_generator',
    'omega_orbit_invariance',
    'jacobian_mu',
    'pushforward_mu',
    'verify_pullback',
    'vector_field_chart',
    'classical_moment',
    'hermitian_relations',
    'twist_one_form',
    'twist_closedness',
    'log_det_correction',
    'verify_affine_decomposition',
    'transported_form_check'
]
