"""Script detection and code-switch segmentation.

A change of writing script is the only code-switch signal: the input is cut
into maximal same-script runs, and whitespace, punctuation and digits
(the Neutral class) ride along with the run before them.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from clsfront.errors import SegmentationError, UnsupportedScriptError


class ScriptTag(str, Enum):
    DEVANAGARI = "Devanagari"
    BENGALI = "Bengali"
    GURMUKHI = "Gurmukhi"
    GUJARATI = "Gujarati"
    ORIYA = "Oriya"
    TAMIL = "Tamil"
    TELUGU = "Telugu"
    KANNADA = "Kannada"
    MALAYALAM = "Malayalam"
    LATIN = "Latin"
    NEUTRAL = "Neutral"

    def __str__(self) -> str:
        return self.value


_BLOCKS = (
    (0x0900, 0x097F, ScriptTag.DEVANAGARI),
    (0x0980, 0x09FF, ScriptTag.BENGALI),
    (0x0A00, 0x0A7F, ScriptTag.GURMUKHI),
    (0x0A80, 0x0AFF, ScriptTag.GUJARATI),
    (0x0B00, 0x0B7F, ScriptTag.ORIYA),
    (0x0B80, 0x0BFF, ScriptTag.TAMIL),
    (0x0C00, 0x0C7F, ScriptTag.TELUGU),
    (0x0C80, 0x0CFF, ScriptTag.KANNADA),
    (0x0D00, 0x0D7F, ScriptTag.MALAYALAM),
)
# Latin letters and combining diacritics; Latin-block punctuation and symbols are Neutral
_LATIN_RANGES = ((0x0041, 0x005A), (0x0061, 0x007A), (0x00C0, 0x02AF), (0x0300, 0x036F), (0x1E00, 0x1EFF))

ZWNJ = "‌"
ZWJ = "‍"
_NEUTRAL_EXTRA = frozenset({ZWNJ, ZWJ, "​"})


def is_neutral(ch: str) -> bool:
    """Whitespace, punctuation, decimal digits, currency and Latin-1 symbols."""
    if ch.isspace() or ch in _NEUTRAL_EXTRA:
        return True
    cat = unicodedata.category(ch)
    if cat[0] in "ZP" or cat in ("Nd", "Sc"):
        return True
    return cat[0] == "S" and ord(ch) <= 0xFF


def script_of(cp: int | str) -> ScriptTag:
    """Return the script tag of a codepoint (given as int or 1-char str).

    Raises:
        UnsupportedScriptError: for codepoints outside the supported blocks
            that are not Neutral (Perso-Arabic, CJK, emoji, controls, ...).
    """
    code = ord(cp) if isinstance(cp, str) else cp
    if not 0 <= code <= 0x10FFFF or 0xD800 <= code <= 0xDFFF:
        raise UnsupportedScriptError(code)
    ch = chr(code)
    if is_neutral(ch):
        return ScriptTag.NEUTRAL
    for lo, hi, tag in _BLOCKS:
        if lo <= code <= hi:
            return tag
    for lo, hi in _LATIN_RANGES:
        if lo <= code <= hi and unicodedata.category(ch)[0] in "LM":
            return ScriptTag.LATIN
    raise UnsupportedScriptError(code)


@dataclass(frozen=True)
class ScriptLanguageMap:
    """Default language per script, plus every language known per script.

    ``defaults[script]`` is used for segments whose script the primary
    language is not written in; ``languages[script]`` lists all languages
    written in that script, in file order.
    """

    defaults: Mapping[ScriptTag, str]
    languages: Mapping[ScriptTag, tuple[str, ...]]

    def scripts_for(self, lang: str) -> tuple[ScriptTag, ...]:
        return tuple(s for s, langs in self.languages.items() if lang in langs)


def load_script_language_map(text: str) -> ScriptLanguageMap:
    """Parse ``script<TAB>language`` rows; the first row per script is its default."""
    defaults: dict[ScriptTag, str] = {}
    languages: dict[ScriptTag, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in raw.rstrip("\r\n").split("\t")]
        if len(cols) != 2 or not cols[1]:
            raise SegmentationError("expected script<TAB>language", line=lineno)
        try:
            script = ScriptTag(cols[0])
        except ValueError:
            raise SegmentationError(f"unknown script name {cols[0]!r}", line=lineno) from None
        if script is ScriptTag.NEUTRAL:
            raise SegmentationError("Neutral cannot carry a language", line=lineno)
        langs = languages.setdefault(script, [])
        if cols[1] in langs:
            raise SegmentationError(f"duplicate row {cols[0]}/{cols[1]}", line=lineno)
        langs.append(cols[1])
        defaults.setdefault(script, cols[1])
    return ScriptLanguageMap(defaults, {s: tuple(v) for s, v in languages.items()})


DEFAULT_LATIN_LANGUAGE = "en"


def infer_language(seg_script: ScriptTag, primary_language: str, script_map: ScriptLanguageMap) -> str:
    if primary_language in script_map.languages.get(seg_script, ()):
        return primary_language
    if seg_script in script_map.defaults:
        return script_map.defaults[seg_script]
    if seg_script is ScriptTag.LATIN:
        return DEFAULT_LATIN_LANGUAGE
    raise SegmentationError(f"no language configured for {seg_script} text "
                            f"(primary language {primary_language!r})")


@dataclass(frozen=True)
class TextSegment:
    text: str
    script: ScriptTag
    language: str
    start: int = 0

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("empty segment")
        if self.script is ScriptTag.NEUTRAL:
            raise ValueError("segments never carry the Neutral tag")


def segment(text: str, primary_language: str, script_language_map: ScriptLanguageMap) -> list[TextSegment]:
    """Split ``text`` at script changes.

    Neutral runs stay with the segment before them; leading Neutrals join
    the first segment. An all-Neutral utterance (digits, say) becomes one
    segment in the primary language's first script.

    Raises:
        SegmentationError: empty input, or a primary language without any
            configured script for an all-Neutral utterance.
        UnsupportedScriptError: located at the first bad codepoint.
    """
    if not text:
        raise SegmentationError("empty input")
    tags = []
    for i, ch in enumerate(text):
        try:
            tags.append(script_of(ch))
        except UnsupportedScriptError as exc:
            raise UnsupportedScriptError(exc.codepoint, offset=i) from None

    spans: list[list] = []  # [start, end, script]
    for i, tag in enumerate(tags):
        if tag is ScriptTag.NEUTRAL:
            if spans:
                spans[-1][1] = i + 1
            continue
        if spans and spans[-1][2] is tag:
            spans[-1][1] = i + 1
        elif spans:
            spans.append([spans[-1][1], i + 1, tag])
        else:
            spans.append([0, i + 1, tag])
    if not spans:
        scripts = script_language_map.scripts_for(primary_language)
        if not scripts:
            raise SegmentationError(f"no script configured for primary language {primary_language!r}")
        spans = [[0, len(text), scripts[0]]]
    spans[-1][1] = len(text)
    return [
        TextSegment(text[start:end], tag, infer_language(tag, primary_language, script_language_map), start)
        for start, end, tag in spans
    ]
