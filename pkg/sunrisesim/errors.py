"""Exception hierarchy for sunrisesim.

Field-level invariants surface as pydantic ``ValidationError``; everything
raised by the domain modules derives from :class:`SunriseSimError`.
"""

from __future__ import annotations


class SunriseSimError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ConfigError(SunriseSimError):
    """An architecture or tool configuration cannot be used."""


class ModelParseError(SunriseSimError):
    """A YAML input is syntactically malformed or has the wrong shape."""


class ModelValidationError(SunriseSimError):
    """A model file breaks the layer dimension chain."""

    def __init__(self, message: str, layer: str | None = None):
        super().__init__(message)
        self.layer = layer


class NoTransitionPathError(SunriseSimError):
    """No chain of process-node transitions connects two nodes."""

    def __init__(self, from_node: float, to_node: float, available: list[float]):
        nodes = ", ".join(f"{n:g}nm" for n in available)
        super().__init__(
            f"No transition path from {from_node:g}nm to {to_node:g}nm. Available nodes: {nodes}"
        )
        self.available = available


class UnknownNodeError(SunriseSimError, KeyError):
    """A process node is missing from a lookup table."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown node"


class UnknownTechError(SunriseSimError, KeyError):
    """An integration technology is missing from a technology file."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown technology"


class UnknownTableError(SunriseSimError):
    """A published table id is not one of T1..T7."""


class PresetNotFoundError(SunriseSimError, FileNotFoundError):
    """A named preset or input file could not be located (CLI exit code 2)."""
