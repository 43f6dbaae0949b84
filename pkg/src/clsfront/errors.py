"""Exception hierarchy shared by all front-end stages."""

from __future__ import annotations


class FrontendError(Exception):
    """Base class for every error raised by clsfront.

    ``line`` is a 1-based line number in a data or input file, ``offset`` a
    0-based codepoint offset into the utterance being processed. Either may be
    None when it does not apply.
    """

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        self.message = message
        self.line = line
        self.offset = offset
        super().__init__(self._render())

    def _render(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.offset is not None:
            where.append(f"offset {self.offset}")
        return f"{self.message} ({', '.join(where)})" if where else self.message


class InventoryError(FrontendError):
    pass


class SegmentationError(FrontendError):
    pass


class UnsupportedScriptError(SegmentationError):
    def __init__(self, codepoint: int, *, offset: int | None = None):
        self.codepoint = codepoint
        super().__init__(f"unsupported script for codepoint U+{codepoint:04X}", offset=offset)


class ParseError(FrontendError):
    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None,
                 segment_index: int | None = None):
        self.segment_index = segment_index
        super().__init__(message, offset=offset, line=line)

    def _render(self) -> str:
        text = super()._render()
        if self.segment_index is not None:
            text += f" [segment {self.segment_index}]"
        return text


class MappingError(FrontendError):
    pass


class RoutingError(FrontendError):
    pass


class EvaluationError(FrontendError):
    pass


class ConfigError(FrontendError):
    pass
