"""Sunrisesim utilities."""

from sunrisesim.utils.helpers import format_sig, read_yaml, round_sig, significant_digits
from sunrisesim.utils.logging import get_logger, log_context, setup_logging

__all__ = [
    "format_sig",
    "read_yaml",
    "round_sig",
    "significant_digits",
    "setup_logging",
    "log_context",
    "get_logger",
]
