"""Layer and model descriptions."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field, model_validator


class LayerKind(str, Enum):
    CONV2D = "Conv2D"
    FULLY_CONNECTED = "FullyConnected"
    POOL = "Pool"
    ELEMENTWISE = "ElementWise"


class LayerSpec(BaseModel):
    """Geometry of one network layer.

    ``source`` names the earlier layer feeding this one; by default it is
    the layer just before it in the model.
    """
    model_config = {"frozen": True}

    name: str = Field(min_length=1)
    kind: LayerKind
    in_h: int = Field(default=1, ge=1)
    in_w: int = Field(default=1, ge=1)
    in_c: int = Field(ge=1)
    kernel_h: int = Field(default=1, ge=1)
    kernel_w: int = Field(default=1, ge=1)
    out_c: int = Field(ge=1)
    stride: int = Field(default=1, ge=1)
    padding: int = Field(default=0, ge=0)
    bytes_per_weight: int = Field(default=1, ge=1)
    bytes_per_activation: int = Field(default=1, ge=1)
    density: float = Field(default=1.0, gt=0, le=1)
    source: str | None = None

    @property
    def out_h(self) -> int:
        if self.kind is LayerKind.FULLY_CONNECTED:
            return 1
        return (self.in_h + 2 * self.padding - self.kernel_h) // self.stride + 1

    @property
    def out_w(self) -> int:
        if self.kind is LayerKind.FULLY_CONNECTED:
            return 1
        return (self.in_w + 2 * self.padding - self.kernel_w) // self.stride + 1

    @model_validator(mode="after")
    def check_geometry(self) -> LayerSpec:
        if self.out_h < 1 or self.out_w < 1:
            raise ValueError(
                f"layer '{self.name}': kernel {self.kernel_h}x{self.kernel_w} does not fit "
                f"{self.in_h}x{self.in_w} input with padding {self.padding}"
            )
        if self.kind in (LayerKind.POOL, LayerKind.ELEMENTWISE) and self.out_c != self.in_c:
            raise ValueError(
                f"layer '{self.name}': {self.kind.value} layers keep channels (in_c={self.in_c}, out_c={self.out_c})"
            )
        return self


class ModelSpec(BaseModel):
    """An ordered list of layers plus the host payload of one inference."""
    model_config = {"frozen": True}

    name: str
    layers: list[LayerSpec] = Field(default_factory=list)
    input_bytes: int | None = Field(default=None, ge=1)

    @property
    def payload_bytes(self) -> int:
        """Host ingress bytes per inference; defaults to the first layer's input."""
        if self.input_bytes is not None:
            return self.input_bytes
        if not self.layers:
            return 0
        first = self.layers[0]
        return first.in_h * first.in_w * first.in_c * first.bytes_per_activation


class ModelTotals(BaseModel):
    total_macs: int = 0
    total_weight_bytes: int = 0
    max_layer_feature_bytes: int = 0
    total_vector_ops: int = 0
    total_input_bytes: int = 0
    total_output_bytes: int = 0
