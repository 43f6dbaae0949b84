"""Rewrite label sequences onto a voice's phone inventory.

Phones a voice was never trained on are replaced by the feature-nearest
phone it does have, and every replacement is recorded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Collection, Iterable, Mapping

from clsfront.errors import MappingError
from clsfront.inventory import BOUNDARY, ClsInventory
from clsfront.parser import LabelSequence


class SubstitutionPolicy(str, Enum):
    EXACT = "exact"
    NEAREST = "nearest"
    DROP = "drop"


@dataclass(frozen=True)
class SubstitutionRecord:
    """One changed token.

    ``position`` indexes the input sequence. ``target`` is None only for
    drops; ``distance`` is then the distance to the phone nearest would have
    picked, so drop logs stay comparable with nearest logs.
    """

    position: int
    source: str
    target: str | None
    distance: Fraction

    def __post_init__(self) -> None:
        if self.distance <= 0:
            raise ValueError("identity substitutions are not recorded")

    def to_line(self, utterance_id: str) -> str:
        return format_record(utterance_id, self)


def format_record(utterance_id: str, rec: SubstitutionRecord) -> str:
    target = rec.target if rec.target is not None else "-"
    return f"{utterance_id}\t{rec.position}\t{rec.source}\t{target}\t{rec.distance}"


def nearest_phone(source: str, voice_phones: Iterable[str], inv: ClsInventory) -> tuple[str, Fraction]:
    """Argmin of feature distance over ``voice_phones``, ties to the smallest label."""
    best: tuple[Fraction, str] | None = None
    for lab in voice_phones:
        key = (inv.distance(source, lab), lab)
        if best is None or key < best:
            best = key
    if best is None:
        raise MappingError("empty voice inventory")
    return best[1], best[0]


def load_overrides(text: str, inv: ClsInventory) -> dict[str, str]:
    """Hand-curated ``source<TAB>target`` substitutions.

    When the target is in the voice inventory it wins over nearest search.
    """
    table: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in raw.split("\t")]
        if len(cols) != 2:
            raise MappingError("expected source<TAB>target", line=lineno)
        src, dst = cols
        for lab in (src, dst):
            if lab not in inv:
                raise MappingError(f"unknown label {lab!r}", line=lineno)
        if src == dst:
            raise MappingError(f"override maps {src!r} to itself", line=lineno)
        if src in table:
            raise MappingError(f"duplicate override for {src!r}", line=lineno)
        table[src] = dst
    return table


def map_to_inventory(seq: LabelSequence, voice_phones: Collection[str], inv: ClsInventory,
                     policy: SubstitutionPolicy | str = SubstitutionPolicy.NEAREST, *,
                     overrides: Mapping[str, str] | None = None
                     ) -> tuple[LabelSequence, list[SubstitutionRecord]]:
    """Make ``seq`` speakable by a voice with ``voice_phones``.

    Under drop, a deleted phone that leaves two ``#`` adjacent (or one at
    an edge) also loses the now-empty word's boundary so the output stays a
    valid sequence.

    Raises:
        MappingError: empty inventory, labels outside the superset, or the
            first missing phone under exact.
    """
    policy = SubstitutionPolicy(policy)
    voice = frozenset(voice_phones)
    if not voice:
        raise MappingError("empty voice inventory")
    for lab in sorted(voice):
        if lab not in inv:
            raise MappingError(f"voice phone {lab!r} is not in the CLS superset")
    overrides = overrides or {}
    cache: dict[str, tuple[str, Fraction]] = {}

    def nearest(src: str) -> tuple[str, Fraction]:
        if src not in cache:
            dst = overrides.get(src)
            if dst is not None and dst in voice:
                cache[src] = (dst, inv.distance(src, dst))
            else:
                cache[src] = nearest_phone(src, voice, inv)
        return cache[src]

    out: list[str] = []
    records: list[SubstitutionRecord] = []
    for i, tok in enumerate(seq.tokens):
        if tok == BOUNDARY:
            if out and out[-1] != BOUNDARY:
                out.append(tok)
            continue
        if tok not in inv:
            raise MappingError(f"label {tok!r} at index {i} is not in the CLS superset")
        if tok in voice:
            out.append(tok)
            continue
        if policy is SubstitutionPolicy.EXACT:
            raise MappingError(f"phone {tok!r} at index {i} is not in the voice inventory")
        target, dist = nearest(tok)
        if policy is SubstitutionPolicy.DROP:
            records.append(SubstitutionRecord(i, tok, None, dist))
            continue
        records.append(SubstitutionRecord(i, tok, target, dist))
        out.append(target)
    while out and out[-1] == BOUNDARY:
        out.pop()
    return LabelSequence(tuple(out), seq.utterance_id), records


def oov_profile(seq: LabelSequence, voice_phones: Collection[str]) -> tuple[dict[str, int], Fraction]:
    """Histogram of tokens missing from ``voice_phones`` and their share of all phones."""
    phones = seq.phones
    if not phones:
        raise MappingError("sequence has no phones")
    voice = frozenset(voice_phones)
    missing = Counter(p for p in phones if p not in voice)
    return dict(sorted(missing.items())), Fraction(sum(missing.values()), len(phones))
