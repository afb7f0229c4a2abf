"""``key = value`` parameter files."""
from __future__ import annotations

import enum
import logging
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

from .fuzzy import DomainError
from .model import MODEL_KEYS, ModelParams

log = logging.getLogger(__name__)

DEFAULT_SIGMA = 2.0
RUNTIME_KEYS = ("step", "quadrature_n", "seed", "grid_sizes")


class ConfigError(ValueError):
    pass


class Format(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams
    output_path: Path | None = None
    format: Format = Format.CSV
    step: float = 1.0
    quadrature_n: int = 1024
    grid_sizes: tuple[int, ...] = (100, 200, 400)
    seed: int = 42


def _number(key: str, text: str, lineno: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"line {lineno}: value for {key!r} is not a number: {text!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"line {lineno}: value for {key!r} must be finite")
    return value


def _integer(key: str, value: float, lineno: int) -> int:
    if value != int(value):
        raise ConfigError(f"line {lineno}: {key!r} must be an integer, got {value}")
    return int(value)


def parse_config(source: str) -> RunConfig:
    """Parse parameter-file text into a :class:`RunConfig`.

    Blank lines and ``#`` comments are skipped. Unknown keys are accepted with
    a warning; every model key except ``sigma`` is required.
    """
    model: dict[str, float] = {}
    runtime: dict = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if key in MODEL_KEYS:
            model[key] = _number(key, value, lineno)
        elif key == "grid_sizes":
            sizes = tuple(_integer(key, _number(key, v, lineno), lineno)
                          for v in value.split(","))
            if any(n < 2 for n in sizes):
                raise ConfigError(f"line {lineno}: grid sizes must be >= 2")
            runtime[key] = sizes
        elif key in ("quadrature_n", "seed"):
            runtime[key] = _integer(key, _number(key, value, lineno), lineno)
        elif key == "step":
            runtime[key] = _number(key, value, lineno)
        else:
            warnings.warn(f"line {lineno}: ignoring unknown key {key!r}", UserWarning,
                          stacklevel=2)
    if "sigma" not in model:
        log.info("sigma not given; using the default spread %g", DEFAULT_SIGMA)
        model["sigma"] = DEFAULT_SIGMA
    missing = [k for k in MODEL_KEYS if k not in model]
    if missing:
        raise ConfigError(f"missing required key(s): {', '.join(missing)}")
    try:
        params = ModelParams(**model)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None
    if runtime.get("step", 1.0) <= 0:
        raise ConfigError("step must be positive")
    qn = runtime.get("quadrature_n", 1024)
    if qn < 4 or qn % 2:
        raise ConfigError(f"quadrature_n must be even and >= 4, got {qn}")
    return RunConfig(params=params, **runtime)


def load_config(path) -> RunConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))
