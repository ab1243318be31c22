"""
Lie algebra operations on gl_n
"""
from .algebra import (
    bracket,
    trace_form,
    exp_nilpotent,
    log_unipotent,
    inverse_unipotent,
    coadjoint,
    nilradical_element,
    maurer_cartan_coeffs,
    dexp_coeffs,
    characteristic_polynomial,
    orbit_invariant
)

__all__ = [
    'bracket',
    'trace_form',
    'exp_nilpotent',
    'log_unipotent',
    'inverse_unipotent',
    'coadjoint',
    'nilradical_element',
    'maurer_cartan_coeffs',
    'dexp_coeffs',
    'characteristic_polynomial',
    'orbit_invariant'
]
