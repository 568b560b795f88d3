"""Genus-zero evaluation/interpolation construction of multiplication algorithms"""
from .places import Assignment, EvaluationPlan, INFINITY, Place, inventory, plan_places, plan_to_json
from .evaluation import (
    InconsistentResiduesError, ResidueVector,
    ev_P, evaluate_plan, local_expansion, reconstruct, teichmuller,
)
from .synthesis import synthesize, synthesize_composite, synthesize_from_plan

__all__ = [
    'Assignment', 'EvaluationPlan', 'INFINITY', 'Place', 'inventory', 'plan_places', 'plan_to_json',
    'InconsistentResiduesError', 'ResidueVector',
    'ev_P', 'evaluate_plan', 'local_expansion', 'reconstruct', 'teichmuller',
    'synthesize', 'synthesize_composite', 'synthesize_from_plan',
]
