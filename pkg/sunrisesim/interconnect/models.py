"""Data models for 3D-integration data paths."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from sunrisesim.errors import UnknownTechError

BITS_PER_TB = 8e12


class TechKind(str, Enum):
    """The integration technologies the data-path models cover."""
    INTERPOSER = "Interposer"
    TSV = "TSV"
    HITOC = "HITOC"


class Dimensionality(str, Enum):
    """Whether wires are spread along a die edge or over the die face."""
    EDGE_1D = "Edge1D"
    AREA_2D = "Area2D"


LAYOUTS: dict[TechKind, Dimensionality] = {
    TechKind.INTERPOSER: Dimensionality.EDGE_1D,
    TechKind.TSV: Dimensionality.AREA_2D,
    TechKind.HITOC: Dimensionality.AREA_2D,
}


class IntegrationTech(BaseModel):
    """Wire geometry and electrical parameters of one integration technology."""
    model_config = {"frozen": True}

    kind: TechKind
    pitch_x: float = Field(gt=0, description="Wire pitch along x, micrometers")
    pitch_y: float | None = Field(default=None, gt=0, description="Wire pitch along y, micrometers")
    dimensionality: Dimensionality
    energy_per_bit: float = Field(gt=0, description="Transfer energy, pJ/bit")
    max_io_freq: float = Field(default=1.0, gt=0, description="Highest I/O clock, GHz")

    @model_validator(mode="after")
    def check_layout(self) -> IntegrationTech:
        """Interposer wires run along an edge; TSV and HITOC wires cover the face."""
        name = self.kind.value
        expected = LAYOUTS[self.kind]
        if self.dimensionality is not expected:
            raise ValueError(
                f"{name}: dimensionality must be {expected.value}, got {self.dimensionality.value}"
            )
        if self.dimensionality is Dimensionality.AREA_2D and self.pitch_y is None:
            raise ValueError(f"{name}: pitch_y is required for Area2D technologies")
        if self.dimensionality is Dimensionality.EDGE_1D and self.pitch_y is not None:
            raise ValueError(f"{name}: pitch_y must be omitted for Edge1D technologies")
        return self


class ConnectionBudget(BaseModel):
    """How much of a die is given over to inter-die connections."""
    model_config = {"frozen": True}

    die_area: float = Field(default=100.0, gt=0, description="mm²")
    connection_area_fraction: float = Field(default=0.01, ge=0, le=1)
    io_frequency: float = Field(default=1.0, gt=0, description="GHz")
    bits_per_wire_per_cycle: int = Field(default=1, ge=1)
    # Usable edge for Edge1D techs, mm. None -> sqrt(die_area) * fraction * 100.
    edge_length: float | None = Field(default=None, ge=0)

    @property
    def usable_area(self) -> float:
        return self.die_area * self.connection_area_fraction

    @property
    def usable_edge(self) -> float:
        if self.edge_length is not None:
            return self.edge_length
        return self.die_area ** 0.5 * self.connection_area_fraction * 100


class Bandwidth(BaseModel):
    """Aggregate bandwidth, stored in bits per second."""
    model_config = {"frozen": True}

    bits_per_second: float = Field(ge=0)
    wire_count: float = Field(ge=0)

    @property
    def bytes_per_second(self) -> float:
        return self.bits_per_second / 8

    @property
    def terabytes_per_second(self) -> float:
        return self.bits_per_second / BITS_PER_TB


class TechTable(BaseModel):
    """Contents of a technology parameter file."""
    techs: list[IntegrationTech]
    budget: ConnectionBudget = Field(default_factory=ConnectionBudget)

    def get(self, kind: str) -> IntegrationTech:
        for tech in self.techs:
            if tech.kind.value.lower() == kind.lower():
                return tech
        known = ", ".join(t.kind.value for t in self.techs)
        raise UnknownTechError(f"Unknown integration technology '{kind}'. Known: {known}")
