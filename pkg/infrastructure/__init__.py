"""
Infrastructure Layer - Computational engines, settings and report export
"""
