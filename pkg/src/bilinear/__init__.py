"""Bilinear multiplication algorithms: model, base formulas, composition, verification, codegen"""
from .algorithm import RANK_BUDGET, BilinearAlgorithm, RankBudget, evaluate
from .relative import RelativeAlgorithm, identity, karatsuba, lift
from .compose import compose
from .formulas import base_algorithm, identity1, karatsuba2, nested4, truncated2
from .verify import verify
from .codegen import codegen, interpret, program_stats

__all__ = [
    'RANK_BUDGET', 'BilinearAlgorithm', 'RankBudget', 'evaluate',
    'RelativeAlgorithm', 'identity', 'karatsuba', 'lift',
    'compose',
    'base_algorithm', 'identity1', 'karatsuba2', 'nested4', 'truncated2',
    'verify',
    'codegen', 'interpret', 'program_stats',
]
