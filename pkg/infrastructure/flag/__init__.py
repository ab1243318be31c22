"""
Flag varieties: parabolic data, chart atlas and big-cell factorization
"""
from .parabolic import build_parabolic, sort_lambda, weyl_cosets, tits_lift, reduced_word, permutation_matrix
from .factorization import factor_uul, u_from_z, z_from_u, u_minus_from_w, w_from_u_minus, locate_chart

__all__ = [
    # Parabolic data
    'build_parabolic',
    'sort_lambda',
    'weyl_cosets',
    'tits_lift',
    'reduced_word',
    'permutation_matrix',

    # Factorization
    'factor_uul',
    'u_from_z',
    'z_from_u',
    'u_minus_from_w',
    'w_from_u_minus',
    'locate_chart'
]
