"""
Twisted moment map, affine action and chart transitions
"""
from .key_relation import solve_w, xi_from_w, solve_u_minus, lower_components
from .moment_map import mu_local, mu_global, mu_inverse, mu_matrix, scale_check
from .affine_action import psi_affine, psi_global, psi_cocycle_check, psi_coordinates, transition

__all__ = [
    # Key relation
    'solve_w',
    'xi_from_w',
    'solve_u_minus',
    'lower_components',

    # Moment map
    'mu_local',
    'mu_global',
    'mu_inverse',
    'mu_matrix',
    'scale_check',

    # Affine action
    'psi_affine',
    'psi_global',
    'psi_cocycle_check',
    'psi_coordinates',
    'transition'
]
