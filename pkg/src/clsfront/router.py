"""Pick one synthesizer voice per utterance.

Order of preference: a voice native to the utterance language, then the
similarity table's pairings, then whichever voice leaves the fewest phones
uncovered on the utterance itself.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Sequence

from clsfront.errors import RoutingError
from clsfront.inventory import ClsInventory, check_label
from clsfront.mapper import SubstitutionPolicy, SubstitutionRecord, map_to_inventory, oov_profile
from clsfront.parser import Frontend, LabelSequence, parse_mixed

DEFAULT_SAMPLE_RATE = 48000
DEFAULT_BIT_DEPTH = 16
# voice-manifest inventory column meaning "the language's CLS subset"
LANGUAGE_SUBSET = "-"


@dataclass(frozen=True)
class VoiceProfile:
    voice_id: str
    native_language: str
    phone_labels: frozenset[str]
    sample_rate_hz: int = DEFAULT_SAMPLE_RATE
    bit_depth: int = DEFAULT_BIT_DEPTH

    def __post_init__(self) -> None:
        if self.sample_rate_hz <= 0 or self.bit_depth <= 0:
            raise ValueError("sample rate and bit depth must be positive")
        if not self.phone_labels:
            raise ValueError(f"voice {self.voice_id!r} has no phones")


@dataclass(frozen=True)
class SimilarityTable:
    preferences: Mapping[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        for lang, prefs in self.preferences.items():
            if not prefs:
                raise ValueError(f"empty preference list for {lang!r}")
            if lang in prefs:
                raise ValueError(f"{lang!r} lists itself")
            if len(set(prefs)) != len(prefs):
                raise ValueError(f"duplicate preference for {lang!r}")

    def get(self, lang: str) -> tuple[str, ...]:
        return self.preferences.get(lang, ())

    def __contains__(self, lang: object) -> bool:
        return lang in self.preferences


def load_similarity(text: str) -> SimilarityTable:
    prefs: dict[str, tuple[str, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in raw.split("\t")]
        if len(cols) != 2 or not cols[0]:
            raise RoutingError("expected language<TAB>pref1,pref2,...", line=lineno)
        if cols[0] in prefs:
            raise RoutingError(f"duplicate row for {cols[0]!r}", line=lineno)
        langs = tuple(p.strip() for p in cols[1].split(","))
        if any(not p for p in langs):
            raise RoutingError("empty language in preference list", line=lineno)
        try:
            SimilarityTable({cols[0]: langs})
        except ValueError as exc:
            raise RoutingError(str(exc), line=lineno) from None
        prefs[cols[0]] = langs
    return SimilarityTable(prefs)


def load_voice_manifest(text: str, inv: ClsInventory,
                        read_inventory: Callable[[str], str] | None = None) -> list[VoiceProfile]:
    """Parse ``voice_id<TAB>language<TAB>inventory<TAB>rate<TAB>depth`` rows.

    The inventory column is either ``-`` (take the language's subset of the
    CLS inventory) or a path handed to ``read_inventory``; that file lists
    phone labels separated by whitespace. Rate and depth may be omitted.
    """
    voices: list[VoiceProfile] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in raw.split("\t")]
        if len(cols) not in (3, 5):
            raise RoutingError("expected voice_id<TAB>language<TAB>inventory[<TAB>rate<TAB>depth]", line=lineno)
        voice_id, lang, source = cols[:3]
        if voice_id in seen:
            raise RoutingError(f"duplicate voice {voice_id!r}", line=lineno)
        seen.add(voice_id)
        if source == LANGUAGE_SUBSET:
            if lang not in inv.per_language:
                raise RoutingError(f"no CLS subset for language {lang!r}", line=lineno)
            labels = frozenset(inv.per_language[lang])
        else:
            if read_inventory is None:
                raise RoutingError(f"cannot read inventory file {source!r}", line=lineno)
            try:
                labels = frozenset(read_inventory(source).split())
            except OSError as exc:
                raise RoutingError(f"cannot read inventory file {source!r}: {exc.strerror}", line=lineno) from None
        for lab in sorted(labels):
            try:
                check_label(lab)
            except ValueError as exc:
                raise RoutingError(str(exc), line=lineno) from None
            if lab not in inv:
                raise RoutingError(f"voice {voice_id!r}: unknown label {lab!r}", line=lineno)
        try:
            rate, depth = (int(cols[3]), int(cols[4])) if len(cols) == 5 else (DEFAULT_SAMPLE_RATE,
                                                                               DEFAULT_BIT_DEPTH)
            voices.append(VoiceProfile(voice_id, lang, labels, rate, depth))
        except ValueError as exc:
            raise RoutingError(f"voice {voice_id!r}: {exc}", line=lineno) from None
    if not voices:
        raise RoutingError("voice manifest lists no voices")
    return voices


def read_relative(base: str) -> Callable[[str], str]:
    def read(path: str) -> str:
        with open(os.path.join(base, path), encoding="utf-8") as fh:
            return fh.read()
    return read


def route_by_coverage(seq: LabelSequence, voices: Sequence[VoiceProfile]) -> tuple[VoiceProfile, Fraction]:
    if not voices:
        raise RoutingError("no voices to route to")
    best: tuple[VoiceProfile, Fraction] | None = None
    for voice in voices:
        _, rate = oov_profile(seq, voice.phone_labels)
        if best is None or rate < best[1]:
            best = (voice, rate)
    assert best is not None
    return best


def route(lang: str, voices: Sequence[VoiceProfile], table: SimilarityTable,
          seq: LabelSequence | None = None) -> VoiceProfile:
    """Choose a voice for ``lang``; ``seq`` enables the coverage fallback."""
    if not voices:
        raise RoutingError("no voices to route to")
    for voice in voices:
        if voice.native_language == lang:
            return voice
    for pref in table.get(lang):
        for voice in voices:
            if voice.native_language == pref:
                return voice
    if seq is None:
        raise RoutingError(f"no voice or similarity entry for {lang!r} and no utterance to measure coverage")
    return route_by_coverage(seq, voices)[0]


class RoutedUtterance(NamedTuple):
    voice: VoiceProfile
    sequence: LabelSequence
    records: list[SubstitutionRecord]


def route_utterance(text: str, primary_language: str, voices: Sequence[VoiceProfile], table: SimilarityTable,
                    config: Frontend, *, policy: SubstitutionPolicy | str = SubstitutionPolicy.NEAREST,
                    overrides: Mapping[str, str] | None = None, utterance_id: str = "") -> RoutedUtterance:
    """Parse, pick one voice from the primary language, map onto its phones."""
    seq = parse_mixed(text, primary_language, config, utterance_id=utterance_id)
    voice = route(primary_language, voices, table, seq)
    mapped, records = map_to_inventory(seq, voice.phone_labels, config.inventory, policy, overrides=overrides)
    return RoutedUtterance(voice, mapped, records)
