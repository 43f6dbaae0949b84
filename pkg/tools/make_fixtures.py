#!/usr/bin/env python3
"""Regenerate the frozen test fixtures under tests/fixtures.

Inputs here are independent of the parser: cognates are transliterated by
Unicode block offset (the Brahmic blocks are laid out in parallel) and kept
only where the target script table has a rule for every codepoint; MOS
ratings are built so each cell mean equals a published two-decimal value
exactly. Run once and commit the output:

    python tools/make_fixtures.py [--freeze-goldens]

--freeze-goldens also re-records the parser regression goldens from the
current tables; only use it after deliberately changing a table.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"
SCRIPTS_DIR = ROOT / "src" / "clsfront" / "data" / "scripts"

BLOCKS = {
    "Bengali": 0x0980, "Gurmukhi": 0x0A00, "Gujarati": 0x0A80, "Oriya": 0x0B00,
    "Tamil": 0x0B80, "Telugu": 0x0C00, "Kannada": 0x0C80, "Malayalam": 0x0D00,
}

# Sanskrit vocabulary in Devanagari
COGNATES = """
संस्कृतम् धर्मः कर्म विद्या ज्ञानम् सत्यम् शिवः रामः कृष्णः देवः गुरुः आत्मा ब्रह्म योगः
मन्त्रः शान्तिः प्रकृतिः पुरुषः भारतम् नमः वेदः सूर्यः चन्द्रः अग्निः वायुः जलम् पृथिवी
आकाशः माता पिता भ्राता पुत्रः कन्या विद्यालयः पुस्तकम् गृहम् नगरम् ग्रामः वृक्षः पुष्पम्
फलम् मधुरम् सुन्दरम् आनन्दः प्रेम करुणा दया क्षमा अहिंसा सेवा भक्तिः मुक्तिः लक्ष्मीः
सरस्वती गणेशः हनुमान् महाभारतम् रामायणम् उपनिषद् श्लोकः छन्दः व्याकरणम् ऋषिः ओषधिः
ऐश्वर्यम् औषधम् ईश्वरः ऊर्जा एकम् द्वे त्रीणि
""".split()


def covered_keys(script: str) -> set[str]:
    keys = set()
    for line in (SCRIPTS_DIR / f"{script.lower()}.tsv").read_text(encoding="utf-8").splitlines():
        if not line or line.startswith(("#", "@")):
            continue
        keys.add("".join(chr(int(h, 16)) for h in line.split("\t")[0].split("+")))
    return keys


def transliterate(word: str, base: int) -> str:
    return "".join(chr(ord(ch) - 0x0900 + base) for ch in word)


def write_cognates() -> None:
    rows = ["# id<TAB>script<TAB>word ; rows sharing an id spell one Sanskrit word"]
    for n, word in enumerate(COGNATES, start=1):
        wid = f"w{n:03d}"
        rows.append(f"{wid}\tDevanagari\t{word}")
        for script, base in BLOCKS.items():
            keys = covered_keys(script)
            text = transliterate(word, base)
            if all(ch in keys for ch in text):
                rows.append(f"{wid}\t{script}\t{text}")
    (FIXTURES / "cognates.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")


# per-language cell means, voice order (hi, kn), measure order (intelligibility, naturalness)
TABLE1 = {
    "te": ((413, 319), (422, 385)),
    "hi": ((450, 446), (426, 402)),
    "mr": ((390, 381), (402, 400)),
    "kn": ((267, 203), (430, 435)),
    "or": ((358, 282), (360, 221)),
}
LISTENERS = 100


def scores(hundredths: int) -> list[int]:
    """100 integer scores in 1..5 whose mean is ``hundredths / 100``."""
    base, extra = divmod(hundredths, LISTENERS)
    return [base + 1] * extra + [base] * (LISTENERS - extra)


def write_table1() -> None:
    rows = ["#design\tMOS", "# listener_id<TAB>text_language<TAB>voice_id<TAB>intelligibility<TAB>naturalness"]
    for lang, per_voice in TABLE1.items():
        for voice, (intel, nat) in zip(("hi_indictts", "kn_indictts"), per_voice):
            for k, (i, n) in enumerate(zip(scores(intel), scores(nat))):
                rows.append(f"{lang}{k:03d}\t{lang}\t{voice}\t{i}\t{n}")
    (FIXTURES / "table1_mos.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def _axy_rows(prefix: str, first: str, second: str, prefs_first: str, prefs_second: str) -> list[str]:
    rows = ["#design\tAXY", "# listener_id<TAB>item_id<TAB>system_x<TAB>system_y<TAB>preference"]
    for order, (x, y, prefs) in enumerate(((first, second, prefs_first), (second, first, prefs_second))):
        for k, p in enumerate(prefs):
            item = f"{prefix}{k + 10 * order:02d}"
            rows.append(f"L{k:02d}\t{item}\t{x}\t{y}\t{'neither' if p == 'N' else p}")
    return rows


def write_axy() -> None:
    # Marathi vs Kannada voice in both presentation orders; each dialect group prefers its neighbour
    north = _axy_rows("nc", "mr_indictts", "kn_indictts", "XXXXXXXYYN", "YYYYYYXXXN")
    south = _axy_rows("sc", "kn_indictts", "mr_indictts", "XXXXXXYYYN", "YYYYYYYXXN")
    (FIXTURES / "axy_north_canara.tsv").write_text("\n".join(north) + "\n", encoding="utf-8")
    (FIXTURES / "axy_south_canara.tsv").write_text("\n".join(south) + "\n", encoding="utf-8")


# real words whose parses are locked as regression goldens (--freeze-goldens)
GOLDEN_WORDS = [
    ("hi", "नमस्ते"), ("hi", "कमल"), ("sa", "कमल"), ("hi", "क्या"), ("hi", "हिन्दी"), ("hi", "भाषा"),
    ("hi", "ज़िंदगी"), ("hi", "कंपनी"), ("hi", "हूँ"), ("hi", "मैं"), ("hi", "दुःख"), ("hi", "क्षत्रिय"),
    ("hi", "ज्ञान"), ("hi", "पढ़ाई"), ("hi", "१२३"), ("mr", "महाराष्ट्र"), ("mr", "मराठी"),
    ("sa", "संस्कृतम्"), ("sa", "धर्मक्षेत्रे"), ("sa", "कुरुक्षेत्रे"), ("sa", "ऋषिः"),
    ("bn", "বাংলা"), ("bn", "ভাষা"), ("bn", "কলকাতা"), ("pa", "ਪੰਜਾਬੀ"), ("pa", "ਗੁਰਮੁਖੀ"),
    ("gu", "ગુજરાતી"), ("or", "ଓଡ଼ିଆ"), ("ta", "தமிழ்"), ("ta", "வணக்கம்"), ("te", "తెలుగు"),
    ("te", "క"), ("kn", "ಕನ್ನಡ"), ("ml", "മലയാളം"), ("ml", "എന്റെ"), ("kok-north-canara", "म्हजें"),
    ("hi", "zyx"), ("hi", "hello world"), ("hi", "OK"), ("hi", "don't"), ("hi", "café"),
    ("hi", "मैं ok हूँ"), ("te", "మా school లో"), ("hi", "covid-19"),
]


def write_goldens() -> None:
    from clsfront.config import default_pipeline

    frontend = default_pipeline().frontend
    rows = ["# language<TAB>text<TAB>labels ; regression lock on the authored tables"]
    for lang, text in GOLDEN_WORDS:
        rows.append(f"{lang}\t{text}\t{' '.join(frontend.parse(text, lang).tokens)}")
    (FIXTURES / "golden_parse.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    write_cognates()
    write_table1()
    write_axy()
    if "--freeze-goldens" in sys.argv[1:]:
        write_goldens()


if __name__ == "__main__":
    main()
