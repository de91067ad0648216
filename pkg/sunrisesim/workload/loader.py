"""Model file loading and dimension-chain validation."""

from __future__ import annotations

from pathlib import Path

from pydantic import ValidationError

from sunrisesim.config import Config, resolve_preset
from sunrisesim.errors import ModelParseError, ModelValidationError
from sunrisesim.utils import get_logger, read_yaml
from sunrisesim.workload.models import LayerSpec, ModelSpec

logger = get_logger(__name__)


def chain_errors(model: ModelSpec) -> list[tuple[str, str]]:
    """Return ``(layer name, message)`` for every broken link in the layer chain."""
    errors: list[tuple[str, str]] = []
    seen: dict[str, LayerSpec] = {}
    previous: LayerSpec | None = None

    for layer in model.layers:
        if layer.name in seen:
            errors.append((layer.name, f"duplicate layer name '{layer.name}'"))

        if layer.source is not None:
            feeder = seen.get(layer.source)
            if feeder is None:
                errors.append((layer.name, f"layer '{layer.name}': source '{layer.source}' is not an earlier layer"))
        else:
            feeder = previous

        if feeder is not None:
            expected = (feeder.out_h, feeder.out_w, feeder.out_c)
            actual = (layer.in_h, layer.in_w, layer.in_c)
            if expected != actual:
                errors.append((
                    layer.name,
                    f"layer '{layer.name}': input {actual[0]}x{actual[1]}x{actual[2]} does not match "
                    f"'{feeder.name}' output {expected[0]}x{expected[1]}x{expected[2]}",
                ))

        seen.setdefault(layer.name, layer)
        previous = layer
    return errors


def parse_model(raw: object, origin: str = "<memory>") -> ModelSpec:
    """Validate a parsed model document and its dimension chain."""
    if not isinstance(raw, dict) or not isinstance(raw.get("layers", []), list):
        raise ModelParseError(f"{origin}: expected a mapping with a 'layers' list")

    for index, entry in enumerate(raw.get("layers", [])):
        if not isinstance(entry, dict):
            raise ModelParseError(f"{origin}: layer #{index + 1} is not a mapping")
        try:
            LayerSpec.model_validate(entry)
        except ValidationError as exc:
            name = entry.get("name", f"#{index + 1}")
            raise ModelValidationError(f"{origin}: layer '{name}': {exc}", layer=str(name)) from exc

    raw.setdefault("name", Path(origin).stem)
    model = ModelSpec.model_validate(raw)
    problems = chain_errors(model)
    if problems:
        layer, message = problems[0]
        raise ModelValidationError(f"{origin}: {message}", layer=layer)
    return model


def load_model(path: str | Path, config: Config | None = None) -> ModelSpec:
    """Load a model file or a bundled model by name (``resnet50``).

    Raises:
        ModelParseError: malformed YAML or wrong document shape.
        ModelValidationError: a layer is invalid or breaks the dimension chain.
        PresetNotFoundError: no such file or bundled model.
    """
    resolved = resolve_preset(path, "model", config)
    model = parse_model(read_yaml(resolved), str(resolved))
    logger.debug(
        "Model loaded",
        extra={"model": model.name, "path": str(resolved), "layers": len(model.layers)},
    )
    return model
