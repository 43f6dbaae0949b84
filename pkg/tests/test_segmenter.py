from __future__ import annotations

import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clsfront.errors import SegmentationError, UnsupportedScriptError
from clsfront.segmenter import (
    ScriptTag,
    TextSegment,
    infer_language,
    is_neutral,
    load_script_language_map,
    script_of,
    segment,
)
from tests.oracles import DATA, script_by_name

SCRIPT_MAP = load_script_language_map((DATA / "script_languages.tsv").read_text(encoding="utf-8"))

# ranges the segmenter claims to cover
SUPPORTED_RANGES = [(0x0000, 0x02AF), (0x0300, 0x036F), (0x0900, 0x0D7F), (0x1E00, 0x1EFF)]


def supported_codepoints():
    for lo, hi in SUPPORTED_RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) not in ("Cn", "Cs") and script_by_name(ch) is not None:
                yield ch


SUPPORTED = sorted(set(supported_codepoints()))


class TestScriptOf:
    @pytest.mark.parametrize("cp, tag", [
        (0x0915, ScriptTag.DEVANAGARI), (0x0C15, ScriptTag.TELUGU), (0x0020, ScriptTag.NEUTRAL),
        (0x0995, ScriptTag.BENGALI), (0x0A15, ScriptTag.GURMUKHI), (0x0A95, ScriptTag.GUJARATI),
        (0x0B15, ScriptTag.ORIYA), (0x0B95, ScriptTag.TAMIL), (0x0C95, ScriptTag.KANNADA),
        (0x0D15, ScriptTag.MALAYALAM), (ord("a"), ScriptTag.LATIN), (ord("Z"), ScriptTag.LATIN),
        (ord("é"), ScriptTag.LATIN), (ord("7"), ScriptTag.NEUTRAL), (0x0966, ScriptTag.NEUTRAL),
        (0x0964, ScriptTag.NEUTRAL), (ord(","), ScriptTag.NEUTRAL), (0x200C, ScriptTag.NEUTRAL),
        (0x20B9, ScriptTag.NEUTRAL),
    ])
    def test_examples(self, cp, tag):
        assert script_of(cp) is tag
        assert script_of(chr(cp)) is tag

    @pytest.mark.parametrize("cp", [0x0628, 0x4E2D, 0x1F600, 0x0000, 0x0007, 0x0391])
    def test_unsupported(self, cp):
        with pytest.raises(UnsupportedScriptError) as exc:
            script_of(cp)
        assert exc.value.codepoint == cp
        assert f"U+{cp:04X}" in str(exc.value)

    def test_invalid_scalar(self):
        for cp in (0xD800, -1, 0x110000):
            with pytest.raises(UnsupportedScriptError):
                script_of(cp)

    def test_agrees_with_character_names(self):
        # exhaustive over assigned codepoints of the supported ranges
        disagreements = []
        for lo, hi in SUPPORTED_RANGES:
            for cp in range(lo, hi + 1):
                ch = chr(cp)
                if unicodedata.category(ch) in ("Cn", "Cs"):
                    continue
                try:
                    ours = script_of(cp).value
                except UnsupportedScriptError:
                    ours = None
                if ours != script_by_name(ch):
                    disagreements.append(hex(cp))
        assert disagreements == []

    def test_unassigned_in_block_follows_block(self):
        assert unicodedata.category("঄") == "Cn"
        assert script_of(0x0984) is ScriptTag.BENGALI


class TestSegment:
    def test_devanagari_then_latin(self):
        segs = segment("नमस्ते world", "hi", SCRIPT_MAP)
        assert [(s.text, s.script, s.language) for s in segs] == [
            ("नमस्ते ", ScriptTag.DEVANAGARI, "hi"), ("world", ScriptTag.LATIN, "en")]

    def test_single_latin(self):
        segs = segment("hello", "hi", SCRIPT_MAP)
        assert [(s.text, s.script, s.language) for s in segs] == [("hello", ScriptTag.LATIN, "en")]

    def test_telugu_latin_telugu(self):
        text = "మా school లో"
        segs = segment(text, "te", SCRIPT_MAP)
        assert [(s.script, s.language) for s in segs] == [
            (ScriptTag.TELUGU, "te"), (ScriptTag.LATIN, "en"), (ScriptTag.TELUGU, "te")]
        assert "".join(s.text for s in segs) == text

    def test_leading_neutrals_join_first(self):
        segs = segment("  ¡hola", "hi", SCRIPT_MAP)
        assert segs[0].text == "  ¡hola"

    def test_offsets(self):
        text = "१ मैं ok हूँ"
        for s in segment(text, "hi", SCRIPT_MAP):
            assert text[s.start:s.start + len(s.text)] == s.text

    def test_all_neutral_takes_primary_script(self):
        segs = segment("123, 456", "te", SCRIPT_MAP)
        assert [(s.text, s.script, s.language) for s in segs] == [("123, 456", ScriptTag.TELUGU, "te")]

    def test_all_neutral_unknown_primary(self):
        with pytest.raises(SegmentationError, match="xx"):
            segment("42", "xx", SCRIPT_MAP)

    def test_empty(self):
        with pytest.raises(SegmentationError, match="empty input"):
            segment("", "hi", SCRIPT_MAP)

    def test_unsupported_is_located(self):
        with pytest.raises(UnsupportedScriptError) as exc:
            segment("नमस्ते مرحبا", "hi", SCRIPT_MAP)
        assert exc.value.offset == 7
        assert exc.value.codepoint == 0x0645

    def test_devanagari_takes_primary(self):
        for primary in ("hi", "mr", "sa", "kok"):
            assert segment("राम", primary, SCRIPT_MAP)[0].language == primary

    def test_non_devanagari_primary_uses_default(self):
        assert segment("राम", "te", SCRIPT_MAP)[0].language == "hi"

    def test_konkani_in_kannada_script(self):
        assert segment("ಹಾಂವ್", "kok-south-canara", SCRIPT_MAP)[0].language == "kok-south-canara"

    def test_segment_type_rejects_neutral(self):
        with pytest.raises(ValueError):
            TextSegment("x", ScriptTag.NEUTRAL, "en")
        with pytest.raises(ValueError):
            TextSegment("", ScriptTag.LATIN, "en")


class TestInferLanguage:
    def test_examples(self):
        assert infer_language(ScriptTag.KANNADA, "kn", SCRIPT_MAP) == "kn"
        assert infer_language(ScriptTag.DEVANAGARI, "sa", SCRIPT_MAP) == "sa"
        assert infer_language(ScriptTag.LATIN, "hi", SCRIPT_MAP) == "en"

    def test_latin_defaults_to_en_without_row(self):
        m = load_script_language_map("Devanagari\thi\n")
        assert infer_language(ScriptTag.LATIN, "hi", m) == "en"

    def test_latin_override(self):
        m = load_script_language_map("Latin\tkok\n")
        assert infer_language(ScriptTag.LATIN, "hi", m) == "kok"

    def test_unmapped_script(self):
        m = load_script_language_map("Devanagari\thi\n")
        with pytest.raises(SegmentationError, match="Tamil"):
            infer_language(ScriptTag.TAMIL, "hi", m)


class TestMapFile:
    @pytest.mark.parametrize("text, line", [
        ("Klingon\tkl\n", 1), ("Devanagari\thi\nDevanagari\thi\n", 2), ("Neutral\tx\n", 1),
        ("Devanagari\n", 1), ("Devanagari\thi\textra\n", 1),
    ])
    def test_errors(self, text, line):
        with pytest.raises(SegmentationError) as exc:
            load_script_language_map(text)
        assert exc.value.line == line

    def test_first_row_is_default(self):
        assert SCRIPT_MAP.defaults[ScriptTag.DEVANAGARI] == "hi"
        assert "sa" in SCRIPT_MAP.languages[ScriptTag.DEVANAGARI]
        assert ScriptTag.KANNADA in SCRIPT_MAP.scripts_for("kok")


text_st = st.lists(st.sampled_from(SUPPORTED), min_size=1, max_size=40).map("".join)


class TestProperties:
    @settings(max_examples=400, deadline=None)
    @given(text_st)
    def test_lossless_maximal_deterministic(self, text):
        segs = segment(text, "hi", SCRIPT_MAP)
        assert "".join(s.text for s in segs) == text
        assert all(a.script is not b.script for a, b in zip(segs, segs[1:]))
        for s in segs:
            assert all(script_of(c) in (s.script, ScriptTag.NEUTRAL) for c in s.text)
            assert text[s.start:s.start + len(s.text)] == s.text
        assert segment(text, "hi", SCRIPT_MAP) == segs

    @given(st.text(alphabet=st.sampled_from([c for c in SUPPORTED if is_neutral(c)]), min_size=1))
    def test_neutral_only_is_one_segment(self, text):
        segs = segment(text, "hi", SCRIPT_MAP)
        assert len(segs) == 1 and segs[0].text == text
