"""Multilingual TTS front end over a common phone label set."""

from clsfront.errors import FrontendError

__version__ = "0.1.0"

__all__ = ["FrontendError", "__version__"]
