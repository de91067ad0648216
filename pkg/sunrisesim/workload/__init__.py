"""Neural-network workload descriptions and operation/byte accounting."""

from sunrisesim.workload.accounting import (
    layer_dense_macs,
    layer_feature_bytes,
    layer_macs,
    layer_output_dims,
    layer_vector_ops,
    layer_weight_bytes,
    model_totals,
)
from sunrisesim.workload.loader import chain_errors, load_model, parse_model
from sunrisesim.workload.models import LayerKind, LayerSpec, ModelSpec, ModelTotals

__all__ = [
    "LayerKind",
    "LayerSpec",
    "ModelSpec",
    "ModelTotals",
    "chain_errors",
    "layer_dense_macs",
    "layer_feature_bytes",
    "layer_macs",
    "layer_output_dims",
    "layer_vector_ops",
    "layer_weight_bytes",
    "load_model",
    "model_totals",
    "parse_model",
]
