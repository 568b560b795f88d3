"""Descended Garcia-Stichtenoth tower over F_2: bounds and place counts"""
from .bounds import (
    BoundReport, GenusInfo, NAMED_STEPS, TowerStep,
    bound_derivative, bound_generic, bound_report, bound_simple,
    delta_lower, genus_exact, genus_info, genus_upper, legacy_bounds,
    n0_lower, phi, place_sum_lower, select_step, table_vertices, linear_rank_constant,
)
from .curves import (
    CURVES, CurveStep, PlaceCountError, PlaceCounts,
    affine_points, check_condition2, curve, first_table_step, mobius_inversion,
    place_counts, place_counts_report, rational_points,
)

__all__ = [
    'BoundReport', 'GenusInfo', 'NAMED_STEPS', 'TowerStep',
    'bound_derivative', 'bound_generic', 'bound_report', 'bound_simple',
    'delta_lower', 'genus_exact', 'genus_info', 'genus_upper', 'legacy_bounds',
    'n0_lower', 'phi', 'place_sum_lower', 'select_step', 'table_vertices', 'linear_rank_constant',
    'CURVES', 'CurveStep', 'PlaceCountError', 'PlaceCounts',
    'affine_points', 'check_condition2', 'curve', 'first_table_step', 'mobius_inversion',
    'place_counts', 'place_counts_report', 'rational_points',
]
