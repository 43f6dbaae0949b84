"""Independent reference implementations used to check the package.

Nothing here imports clsfront: the oracles re-read the raw data files and
recompute results the slow, obvious way.
"""

from __future__ import annotations

import unicodedata
from fractions import Fraction
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "clsfront" / "data"

FIELDS = ("length", "vowel_height", "vowel_backness", "place", "manner", "voiced", "aspirated", "nasalized")
ORDINAL_PLACES = ("bilabial", "labiodental", "dental", "alveolar", "retroflex", "palatal", "velar", "glottal")
DEFAULT_WEIGHTS = {"category": 100, "place": 4, "manner": 4, "voiced": 2, "aspirated": 1, "nasalized": 2,
                   "length": 2, "vowel_height": 3, "vowel_backness": 3}


class RawInventory:
    """Plain dict view of an inventory file."""

    def __init__(self, text: str):
        self.phones: dict[str, dict[str, str]] = {}
        self.langs: dict[str, list[str]] = {}
        self.weights = {k: Fraction(v) for k, v in DEFAULT_WEIGHTS.items()}
        self.places = {p: Fraction(i) for i, p in enumerate(ORDINAL_PLACES)}
        for line in text.splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if cols[0] == "@lang":
                self.langs[cols[1]] = [x for x in cols[2].split(",") if x]
            elif cols[0] == "@weight":
                self.weights[cols[1]] = Fraction(cols[2])
            elif cols[0] == "@place":
                self.places[cols[1]] = Fraction(cols[2])
            else:
                feats = {"category": cols[1]}
                for f in FIELDS:
                    feats[f] = "false" if f in ("voiced", "aspirated", "nasalized") else "na"
                for item in (cols[2].split(",") if len(cols) > 2 else []):
                    if item:
                        k, v = item.split("=")
                        feats[k] = "na" if v == "not-applicable" else v
                self.phones[cols[0]] = feats

    def distance(self, a: str, b: str) -> Fraction:
        if a == b:
            return Fraction(0)
        fa, fb = self.phones[a], self.phones[b]
        d = Fraction(0)
        if fa["category"] != fb["category"]:
            d += self.weights["category"]
        for f in FIELDS:
            if fa[f] == fb[f]:
                continue
            if f == "place" and "na" not in (fa[f], fb[f]):
                d += self.weights["place"] * abs(self.places[fa[f]] - self.places[fb[f]])
            else:
                d += self.weights[f]
        return d

    def nearest(self, src: str, candidates) -> tuple[str, Fraction]:
        """Exhaustive argmin: score every candidate, sort, take the first."""
        scored = sorted((self.distance(src, c), c) for c in candidates)
        return scored[0][1], scored[0][0]


def raw_inventory() -> RawInventory:
    return RawInventory((DATA / "cls_inventory.tsv").read_text(encoding="utf-8"))


_NAMED_SCRIPTS = {
    "DEVANAGARI": "Devanagari", "BENGALI": "Bengali", "GURMUKHI": "Gurmukhi", "GUJARATI": "Gujarati",
    "ORIYA": "Oriya", "TAMIL": "Tamil", "TELUGU": "Telugu", "KANNADA": "Kannada", "MALAYALAM": "Malayalam",
}


def script_by_name(ch: str) -> str | None:
    """Script from the Unicode character name; None when unsupported.

    Neutral (whitespace, punctuation, digits, currency, Latin-1 symbols,
    joiners) is decided from the general category before the name is read.
    """
    cat = unicodedata.category(ch)
    if (ch.isspace() or cat[0] in "ZP" or cat in ("Nd", "Sc") or (cat[0] == "S" and ord(ch) < 256)
            or ch in "​‌‍"):
        return "Neutral"
    name = unicodedata.name(ch, "")
    first = name.split(" ")[0] if name else ""
    if first in _NAMED_SCRIPTS and 0x0900 <= ord(ch) < 0x0D80:
        return _NAMED_SCRIPTS[first]
    if first == "LATIN" and cat[0] == "L":
        return "Latin"
    if name.startswith("COMBINING") and 0x0300 <= ord(ch) <= 0x036F:
        return "Latin"
    return None


def recount_accuracy(pairs) -> Fraction:
    hits = 0
    n = 0
    for true, chosen in pairs:
        n += 1
        if true == chosen:
            hits += 1
    return Fraction(hits, n)
