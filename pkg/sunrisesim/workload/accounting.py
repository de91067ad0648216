"""MAC, byte and vector-op accounting for layers and models."""

from __future__ import annotations

from sunrisesim.workload.models import LayerKind, LayerSpec, ModelSpec, ModelTotals


def layer_output_dims(layer: LayerSpec) -> tuple[int, int, int]:
    return layer.out_h, layer.out_w, layer.out_c


def layer_dense_macs(layer: LayerSpec) -> int:
    """MACs before the density factor is applied."""
    if layer.kind is LayerKind.CONV2D:
        return layer.out_h * layer.out_w * layer.kernel_h * layer.kernel_w * layer.in_c * layer.out_c
    if layer.kind is LayerKind.FULLY_CONNECTED:
        return layer.in_c * layer.out_c
    return 0


def layer_macs(layer: LayerSpec) -> int:
    """Effective MACs: dense count scaled by density, rounded to the nearest MAC."""
    return round(layer_dense_macs(layer) * layer.density)


def layer_weight_bytes(layer: LayerSpec) -> int:
    if layer.kind is LayerKind.CONV2D:
        return layer.kernel_h * layer.kernel_w * layer.in_c * layer.out_c * layer.bytes_per_weight
    if layer.kind is LayerKind.FULLY_CONNECTED:
        return layer.in_c * layer.out_c * layer.bytes_per_weight
    return 0


def layer_feature_bytes(layer: LayerSpec) -> tuple[int, int]:
    """(input bytes, output bytes) of one inference."""
    inputs = layer.in_h * layer.in_w * layer.in_c * layer.bytes_per_activation
    outputs = layer.out_h * layer.out_w * layer.out_c * layer.bytes_per_activation
    return inputs, outputs


def layer_vector_ops(layer: LayerSpec) -> int:
    """Non-MAC element operations of Pool and ElementWise layers."""
    if layer.kind is LayerKind.POOL:
        return layer.out_h * layer.out_w * layer.out_c * layer.kernel_h * layer.kernel_w
    if layer.kind is LayerKind.ELEMENTWISE:
        return layer.out_h * layer.out_w * layer.out_c
    return 0


def model_totals(model: ModelSpec) -> ModelTotals:
    totals = ModelTotals()
    for layer in model.layers:
        inputs, outputs = layer_feature_bytes(layer)
        totals.total_macs += layer_macs(layer)
        totals.total_weight_bytes += layer_weight_bytes(layer)
        totals.total_vector_ops += layer_vector_ops(layer)
        totals.total_input_bytes += inputs
        totals.total_output_bytes += outputs
        totals.max_layer_feature_bytes = max(totals.max_layer_feature_bytes, inputs, outputs)
    return totals
