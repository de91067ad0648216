"""Sunrisesim - simulator and analytical toolkit for 3D-stacked near-memory AI accelerators."""

try:
    from ._version import __version__
except ImportError:
    __version__ = "unknown"
