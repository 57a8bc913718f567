from ..cycloweight.config import Config
from .base import BaseRenderer
from .debug import ProgressRenderer
from .structured import CsvRenderer, JsonRenderer
from .text import TextRenderer

RENDERERS = {"text": TextRenderer, "json": JsonRenderer, "csv": CsvRenderer}


def get_renderer(config: Config, stream=None) -> BaseRenderer:
    return RENDERERS[config.output_format](config, stream)


__all__ = [
    "BaseRenderer",
    "CsvRenderer",
    "JsonRenderer",
    "ProgressRenderer",
    "TextRenderer",
    "get_renderer",
]
