"""Handlers package"""
from .algorithms import register_algorithm_handlers
from .tower import register_tower_handlers
from .report import register_report_handlers

__all__ = [
    'register_algorithm_handlers',
    'register_tower_handlers',
    'register_report_handlers'
]
