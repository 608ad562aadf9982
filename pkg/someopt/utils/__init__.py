# utils/__init__.py
"""Shared utilities for the optimizer and experiment harness."""

from .logging_setup import get_logger, log_kv, instrument, set_level

__all__ = [
    'get_logger',
    'log_kv',
    'instrument',
    'set_level'
]
