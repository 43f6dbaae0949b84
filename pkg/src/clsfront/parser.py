"""Text to CLS labels: akshara parsing for Brahmic scripts, lexicon plus
letter-to-sound fallback for Latin, and the mixed-script entry point."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from clsfront.errors import FrontendError, ParseError
from clsfront.inventory import BOUNDARY, ClsInventory
from clsfront.segmenter import (
    ScriptLanguageMap,
    ScriptTag,
    TextSegment,
    is_neutral,
    segment,
)


class GraphemeClass(str, Enum):
    INDEPENDENT_VOWEL = "IndependentVowel"
    VOWEL_SIGN = "VowelSign"
    CONSONANT = "Consonant"
    DEAD_CONSONANT = "DeadConsonant"
    VIRAMA = "Virama"
    ANUSVARA = "Anusvara"
    VISARGA = "Visarga"
    CANDRABINDU = "Candrabindu"
    NUKTA = "Nukta"
    AVAGRAHA = "Avagraha"
    ZWJ = "ZWJ"
    ZWNJ = "ZWNJ"
    DIGIT = "Digit"
    PUNCT = "Punct"


_SILENT = {GraphemeClass.VIRAMA, GraphemeClass.NUKTA, GraphemeClass.AVAGRAHA,
           GraphemeClass.ZWJ, GraphemeClass.ZWNJ, GraphemeClass.PUNCT}
_MODIFIERS = {
    GraphemeClass.ANUSVARA: "anusvara",
    GraphemeClass.VISARGA: "visarga",
    GraphemeClass.CANDRABINDU: "candrabindu",
}


class SchwaPolicy(str, Enum):
    DELETE_FINAL = "delete-final-schwa"
    RETAIN = "retain"


WORD_FINAL = "word-final"
NON_FINAL = "non-final"

# vowel slot value for an akshara that still carries the inherent vowel
INHERENT = "<inherent>"


@dataclass(frozen=True)
class GraphemeRule:
    key: str
    cls: GraphemeClass
    labels: tuple[str, ...]


@dataclass(frozen=True)
class ScriptRules:
    """Grapheme rules for one script, indexed for longest-match lookup."""

    script: ScriptTag
    rules: Mapping[str, GraphemeRule]
    inherent: str = "a"
    nasalized: Mapping[str, str] = field(default_factory=dict)
    modifier_labels: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    homorganic: Mapping[str, str] = field(default_factory=dict)
    stop_places: Mapping[str, str] = field(default_factory=dict)
    digit_names: Mapping[int, tuple[str, ...]] = field(default_factory=dict)
    max_key: int = 1

    def __len__(self) -> int:
        return len(self.rules)

    def match(self, text: str, i: int) -> GraphemeRule | None:
        for n in range(min(self.max_key, len(text) - i), 0, -1):
            rule = self.rules.get(text[i:i + n])
            if rule is not None:
                return rule
        return None

    def emitted_labels(self) -> frozenset[str]:
        out = {lab for r in self.rules.values() for lab in r.labels}
        out.add(self.inherent)
        out.update(self.nasalized.values())
        return frozenset(out)


def _parse_key(text: str) -> str:
    try:
        cps = [int(h, 16) for h in text.split("+")]
    except ValueError:
        raise ValueError(f"bad codepoint key {text!r}") from None
    if not cps or any(not 0 < c <= 0x10FFFF or 0xD800 <= c <= 0xDFFF for c in cps):
        raise ValueError(f"bad codepoint key {text!r}")
    return "".join(map(chr, cps))


def load_script_table(script: ScriptTag, table_text: str, inv: ClsInventory) -> ScriptRules:
    """Load a script table and validate every label against ``inv``.

    Rows are ``HEXCP[+HEXCP...]<TAB>Class<TAB>label label...``; anything in
    a fourth column is ignored. ``@inherent<TAB>label`` sets the inherent
    vowel and ``@nasalize<TAB>vowel<TAB>label`` declares the nasalized
    counterpart used for candrabindu.

    Raises:
        ParseError: with the line number, for unknown labels, duplicate keys,
            class/label mismatches, or a table without rules.
    """
    rules: dict[str, GraphemeRule] = {}
    inherent = "a"
    nasalized: dict[str, str] = {}

    def vowel(lab: str) -> bool:
        return inv[lab].features.category == "vowel"

    for lineno, raw in enumerate(table_text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        try:
            if cols[0] == "@inherent":
                if len(cols) < 2:
                    raise ValueError("expected @inherent<TAB>label")
                inherent = cols[1].strip()
                _require_labels(inv, [inherent])
                if not vowel(inherent):
                    raise ValueError(f"inherent vowel {inherent!r} is not a vowel")
                continue
            if cols[0] == "@nasalize":
                if len(cols) < 3:
                    raise ValueError("expected @nasalize<TAB>vowel<TAB>label")
                src, dst = cols[1].strip(), cols[2].strip()
                _require_labels(inv, [src, dst])
                if not (vowel(src) and vowel(dst)):
                    raise ValueError("@nasalize maps a vowel to a vowel")
                nasalized[src] = dst
                continue
            if cols[0].startswith("@"):
                raise ValueError(f"unknown directive {cols[0]!r}")
            if len(cols) < 2:
                raise ValueError("expected HEXCP<TAB>Class<TAB>labels")
            key = _parse_key(cols[0].strip())
            try:
                cls = GraphemeClass(cols[1].strip())
            except ValueError:
                raise ValueError(f"unknown grapheme class {cols[1].strip()!r}") from None
            labels = tuple(cols[2].split()) if len(cols) > 2 else ()
            _require_labels(inv, labels)
            if key in rules:
                raise ValueError(f"duplicate key {cols[0].strip()}")
            if cls in _SILENT:
                if labels:
                    raise ValueError(f"{cls.value} rules take no labels")
            elif not labels:
                raise ValueError(f"{cls.value} rule needs at least one label")
            if cls in (GraphemeClass.INDEPENDENT_VOWEL, GraphemeClass.VOWEL_SIGN):
                if not vowel(labels[-1]) or any(vowel(lab) for lab in labels[:-1]):
                    raise ValueError(f"{cls.value} labels must be consonants followed by one vowel")
            if cls in (GraphemeClass.CONSONANT, GraphemeClass.DEAD_CONSONANT):
                if any(vowel(lab) for lab in labels):
                    raise ValueError(f"{cls.value} labels must be consonants")
            rules[key] = GraphemeRule(key, cls, labels)
        except ValueError as exc:
            raise ParseError(f"{script}: {exc}", line=lineno) from None
    if not rules:
        raise ParseError(f"{script}: empty table")

    modifier_labels: dict[str, tuple[str, ...]] = {}
    digit_names: dict[int, tuple[str, ...]] = {}
    for key, rule in rules.items():
        if rule.cls in _MODIFIERS:
            modifier_labels.setdefault(_MODIFIERS[rule.cls], rule.labels)
        elif rule.cls is GraphemeClass.DIGIT and len(key) == 1 and key.isascii():
            digit_names[int(key)] = rule.labels

    # nasal consonants this table emits, by place, for anusvara assimilation
    emitted = {lab for r in rules.values() for lab in r.labels}
    homorganic: dict[str, str] = {}
    stop_places: dict[str, str] = {}
    for lab in sorted(emitted):
        f = inv[lab].features
        if f.category != "consonant":
            continue
        if f.manner == "nasal" and not f.nasalized:
            homorganic.setdefault(f.place, lab)
        elif f.manner in ("stop", "affricate"):
            stop_places[lab] = f.place

    return ScriptRules(
        script=script,
        rules=MappingProxyType(rules),
        inherent=inherent,
        nasalized=MappingProxyType(nasalized),
        modifier_labels=MappingProxyType(modifier_labels),
        homorganic=MappingProxyType(homorganic),
        stop_places=MappingProxyType(stop_places),
        digit_names=MappingProxyType(digit_names),
        max_key=max(len(k) for k in rules),
    )


def _require_labels(inv: ClsInventory, labels: Iterable[str]) -> None:
    for lab in labels:
        if lab not in inv:
            raise ValueError(f"unknown label {lab!r}")


@dataclass(frozen=True)
class Akshara:
    onset: tuple[str, ...]
    vowel: str | None
    modifiers: frozenset[str] = frozenset()
    explicit_virama: bool = False
    start: int = 0


class _Builder:
    __slots__ = ("onset", "vowel", "modifiers", "virama", "start", "bare")

    def __init__(self, onset: Sequence[str], vowel: str | None, start: int, *, virama: bool = False,
                 bare: bool = True):
        self.onset = list(onset)
        self.vowel = vowel
        self.modifiers: set[str] = set()
        self.virama = virama
        self.start = start
        # consonant akshara still waiting for a vowel sign
        self.bare = bare

    def build(self) -> Akshara:
        return Akshara(tuple(self.onset), self.vowel, frozenset(self.modifiers), self.virama, self.start)


def tokenize_aksharas(text: str, rules: ScriptRules) -> list[Akshara]:
    """Group ``text`` into orthographic syllables.

    Consonant+virama+consonant chains share one onset, a vowel sign replaces
    the inherent vowel, and modifiers attach to the akshara in progress.
    Neutral characters, digits and punctuation close the current
    akshara and contribute none.

    Raises:
        ParseError: located at the offending codepoint.
    """
    out: list[Akshara] = []
    cur: _Builder | None = None
    cluster_open = False

    def flush() -> None:
        nonlocal cur, cluster_open
        if cur is not None:
            out.append(cur.build())
        cur = None
        cluster_open = False

    i = 0
    while i < len(text):
        rule = rules.match(text, i)
        if rule is None:
            ch = text[i]
            if is_neutral(ch):
                flush()
                i += 1
                continue
            raise ParseError(f"no {rules.script} rule covers U+{ord(ch):04X}", offset=i)
        cls, labels = rule.cls, rule.labels
        if cls is GraphemeClass.CONSONANT:
            if cur is not None and cluster_open:
                cur.onset.extend(labels)
                cur.vowel, cur.virama, cur.bare = INHERENT, False, True
                cluster_open = False
            else:
                flush()
                cur = _Builder(labels, INHERENT, i)
        elif cls is GraphemeClass.DEAD_CONSONANT:
            if cur is not None and cluster_open:
                cur.onset.extend(labels)
            else:
                flush()
                cur = _Builder(labels, None, i, virama=True, bare=False)
            flush()
        elif cls is GraphemeClass.VIRAMA:
            if cur is None or not cur.bare or cur.modifiers:
                raise ParseError("virama without a consonant to attach to", offset=i)
            cur.vowel, cur.virama, cur.bare = None, True, False
            cluster_open = True
        elif cls is GraphemeClass.VOWEL_SIGN:
            if cur is None or not cur.bare or cur.modifiers:
                raise ParseError("vowel sign without a consonant to attach to", offset=i)
            cur.onset.extend(labels[:-1])
            cur.vowel, cur.bare = labels[-1], False
        elif cls is GraphemeClass.INDEPENDENT_VOWEL:
            flush()
            cur = _Builder(labels[:-1], labels[-1], i, bare=False)
        elif cls in _MODIFIERS:
            if cur is None:
                raise ParseError(f"{_MODIFIERS[cls]} without a preceding akshara", offset=i)
            cur.modifiers.add(_MODIFIERS[cls])
            cur.bare = False
            cluster_open = False
        elif cls is GraphemeClass.NUKTA:
            raise ParseError("nukta without a base consonant it can modify", offset=i)
        elif cls in (GraphemeClass.ZWJ, GraphemeClass.ZWNJ):
            pass
        else:  # Avagraha, Digit, Punct
            flush()
        i += len(rule.key)
    flush()
    return out


def akshara_to_phones(a: Akshara, policy: SchwaPolicy, position: str, rules: ScriptRules, *,
                      next_label: str | None = None, assimilate_anusvara: bool = False) -> list[str]:
    """Expand one akshara to CLS labels.

    The inherent vowel is dropped only in word-final position under
    delete-final-schwa, and never when a modifier needs it as a nucleus.
    With ``assimilate_anusvara`` the anusvara becomes the nasal homorganic
    with ``next_label`` when that is a stop or affricate.
    """
    out = list(a.onset)
    if a.vowel is None:
        nucleus = None
    elif a.vowel == INHERENT:
        drop = position == WORD_FINAL and policy is SchwaPolicy.DELETE_FINAL and not a.modifiers
        nucleus = None if drop else rules.inherent
    else:
        nucleus = a.vowel
    tail: list[str] = []
    if "candrabindu" in a.modifiers:
        if nucleus is not None and nucleus in rules.nasalized:
            nucleus = rules.nasalized[nucleus]
        else:
            tail.extend(rules.modifier_labels["candrabindu"])
    if nucleus is not None:
        out.append(nucleus)
    out.extend(tail)
    if "anusvara" in a.modifiers:
        place = rules.stop_places.get(next_label) if assimilate_anusvara and next_label else None
        if place is not None and place in rules.homorganic:
            out.append(rules.homorganic[place])
        else:
            out.extend(rules.modifier_labels["anusvara"])
    if "visarga" in a.modifiers:
        out.extend(rules.modifier_labels["visarga"])
    return out


@dataclass(frozen=True)
class LabelSequence:
    tokens: tuple[str, ...]
    utterance_id: str = ""

    def __post_init__(self) -> None:
        toks = self.tokens
        if toks and (toks[0] == BOUNDARY or toks[-1] == BOUNDARY):
            raise ValueError("label sequence may not begin or end with '#'")
        for prev, tok in zip(toks, toks[1:]):
            if prev == BOUNDARY and tok == BOUNDARY:
                raise ValueError("consecutive '#' in label sequence")
        for tok in toks:
            if not tok or not tok.isascii() or any(c.isspace() for c in tok) or (
                    BOUNDARY in tok and tok != BOUNDARY):
                raise ValueError(f"malformed token {tok!r}")

    @classmethod
    def from_words(cls, words: Iterable[Sequence[str]], utterance_id: str = "") -> LabelSequence:
        toks: list[str] = []
        for word in words:
            if not word:
                continue
            if toks:
                toks.append(BOUNDARY)
            toks.extend(word)
        return cls(tuple(toks), utterance_id)

    @property
    def phones(self) -> list[str]:
        return [t for t in self.tokens if t != BOUNDARY]

    def words(self) -> list[list[str]]:
        out: list[list[str]] = [[]]
        for tok in self.tokens:
            if tok == BOUNDARY:
                out.append([])
            else:
                out[-1].append(tok)
        return [w for w in out if w]

    def to_line(self) -> str:
        return f"{self.utterance_id}\t{' '.join(self.tokens)}"

    def __len__(self) -> int:
        return len(self.tokens)


def parse_label_line(line: str) -> LabelSequence:
    """Inverse of LabelSequence.to_line."""
    utt, sep, rest = line.rstrip("\r\n").partition("\t")
    if not sep:
        raise ValueError("expected utt_id<TAB>labels")
    if rest != " ".join(rest.split()):
        raise ValueError("labels must be separated by single spaces")
    return LabelSequence(tuple(rest.split()), utt)


def check_closure(seq: LabelSequence, inv: ClsInventory) -> None:
    for i, tok in enumerate(seq.tokens):
        if tok != BOUNDARY and tok not in inv:
            raise ParseError(f"label {tok!r} at index {i} is not in the CLS superset")


@dataclass(frozen=True)
class SchwaConfig:
    policies: Mapping[str, SchwaPolicy] = field(default_factory=dict)
    default: SchwaPolicy = SchwaPolicy.RETAIN

    def policy_for(self, lang: str) -> SchwaPolicy:
        return self.policies.get(lang, self.default)

    def with_overrides(self, overrides: Mapping[str, SchwaPolicy]) -> SchwaConfig:
        return SchwaConfig(MappingProxyType({**self.policies, **overrides}), self.default)


def load_schwa_config(text: str) -> SchwaConfig:
    policies: dict[str, SchwaPolicy] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in raw.split("\t")]
        if len(cols) != 2:
            raise ParseError("expected language<TAB>policy", line=lineno)
        try:
            policies[cols[0]] = SchwaPolicy(cols[1])
        except ValueError:
            raise ParseError(f"unknown schwa policy {cols[1]!r}", line=lineno) from None
    return SchwaConfig(MappingProxyType(policies))


def _digit_labels(ch: str, rules_digits: Mapping[int, tuple[str, ...]], where: str,
                  offset: int) -> tuple[str, ...]:
    value = unicodedata.digit(ch)
    try:
        return rules_digits[value]
    except KeyError:
        raise ParseError(f"{where} has no name for digit {value}", offset=offset) from None


def parse_segment(seg: TextSegment, tables: Mapping[ScriptTag, ScriptRules], schwa_config: SchwaConfig,
                  *, assimilate_anusvara: bool = False) -> LabelSequence:
    """Parse one Brahmic-script segment.

    Whitespace and punctuation runs become a single ``#``; each digit is
    spelled out as its own word. Error offsets are relative to the segment.
    """
    if seg.script is ScriptTag.LATIN:
        raise ParseError("Latin segments go through parse_latin")
    try:
        rules = tables[seg.script]
    except KeyError:
        raise ParseError(f"no table loaded for {seg.script}") from None
    policy = schwa_config.policy_for(seg.language)
    text = seg.text
    words: list[list[str]] = []
    word_start: int | None = None

    def close_word(end: int) -> None:
        nonlocal word_start
        if word_start is None:
            return
        start, word_start = word_start, None
        try:
            aksharas = tokenize_aksharas(text[start:end], rules)
        except ParseError as exc:
            raise ParseError(exc.message, offset=start + (exc.offset or 0)) from None
        labels: list[str] = []
        last = len(aksharas) - 1
        for k, a in enumerate(aksharas):
            # single-akshara words keep their vowel
            position = WORD_FINAL if k == last and last > 0 else NON_FINAL
            nxt = aksharas[k + 1].onset[0] if k < last and aksharas[k + 1].onset else None
            labels.extend(akshara_to_phones(a, policy, position, rules, next_label=nxt,
                                            assimilate_anusvara=assimilate_anusvara))
        words.append(labels)

    i = 0
    while i < len(text):
        rule = rules.match(text, i)
        ch = text[i]
        if rule is not None and rule.cls not in (GraphemeClass.DIGIT, GraphemeClass.PUNCT):
            if word_start is None:
                word_start = i
            i += len(rule.key)
            continue
        close_word(i)
        if rule is not None and rule.cls is GraphemeClass.DIGIT:
            words.append(list(rule.labels))
        elif rule is None and unicodedata.category(ch) == "Nd":
            words.append(list(_digit_labels(ch, rules.digit_names, f"{seg.script} table", i)))
        elif rule is None and not is_neutral(ch):
            raise ParseError(f"no {seg.script} rule covers U+{ord(ch):04X}", offset=i)
        i += len(rule.key) if rule is not None else 1
    close_word(len(text))
    seq = LabelSequence.from_words(words)
    if not seq.tokens:
        raise ParseError("empty segment", offset=0)
    return seq


@dataclass(frozen=True)
class LatinRules:
    """Lexicon plus longest-match letter rules for Latin-script words."""

    lexicon: Mapping[str, tuple[str, ...]]
    letters: Mapping[str, tuple[str, ...]]
    max_key: int = 1

    def spell(self, word: str) -> list[str]:
        out: list[str] = []
        i = 0
        while i < len(word):
            for n in range(min(self.max_key, len(word) - i), 0, -1):
                labels = self.letters.get(word[i:i + n])
                if labels is not None:
                    out.extend(labels)
                    i += n
                    break
            else:
                raise KeyError(word[i])
        return out

    def digit(self, value: int) -> tuple[str, ...]:
        return self.letters[str(value)]


def _load_word_table(text: str, inv: ClsInventory, what: str) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = raw.rstrip("\r\n").split("\t")
        if len(cols) != 2 or not cols[0].strip() or not cols[1].split():
            raise ParseError(f"{what}: expected key<TAB>labels", line=lineno)
        key = cols[0].strip().casefold()
        if key in table:
            raise ParseError(f"{what}: duplicate entry {key!r}", line=lineno)
        labels = tuple(cols[1].split())
        for lab in labels:
            if lab not in inv:
                raise ParseError(f"{what}: unknown label {lab!r}", line=lineno)
        table[key] = labels
    return table


def load_latin_rules(lexicon_text: str, letters_text: str, inv: ClsInventory) -> LatinRules:
    lexicon = _load_word_table(lexicon_text, inv, "lexicon")
    letters = _load_word_table(letters_text, inv, "letter rules")
    if not letters:
        raise ParseError("letter rules: empty table")
    return LatinRules(MappingProxyType(lexicon), MappingProxyType(letters), max(map(len, letters)))


def _latin_pieces(word: str) -> list[tuple[str, str]]:
    """Split a whitespace-free chunk into ('alpha'|'digit', text) pieces.

    Apostrophes vanish, other punctuation separates pieces, letters are
    casefolded and stripped of diacritics. Leftover characters that are
    neither ASCII letters nor digits raise ValueError.
    """
    pieces: list[tuple[str, str]] = []
    buf: list[str] = []

    def close() -> None:
        if buf:
            pieces.append(("alpha", "".join(buf)))
            buf.clear()

    for ch in word:
        if ch in "'’":
            continue
        if unicodedata.category(ch) == "Nd":
            close()
            pieces.append(("digit", ch))
            continue
        if is_neutral(ch):
            close()
            continue
        if unicodedata.combining(ch):
            continue
        folded = "".join(c for c in unicodedata.normalize("NFKD", ch.casefold())
                         if not unicodedata.combining(c))
        if not folded or not all("a" <= c <= "z" for c in folded):
            raise ValueError(ch)
        buf.append(folded)
    close()
    return pieces


def parse_latin(seg: TextSegment, rules: LatinRules) -> LabelSequence:
    """Parse a Latin segment: lexicon lookup per word, letter rules on a miss."""
    if seg.script is not ScriptTag.LATIN:
        raise ParseError(f"parse_latin got a {seg.script} segment")
    words: list[list[str]] = []
    pos = 0
    for chunk in seg.text.split():
        offset = seg.text.index(chunk, pos)
        pos = offset + len(chunk)
        try:
            pieces = _latin_pieces(chunk)
        except ValueError:
            raise ParseError(f"word {chunk!r} contains non-alphabetic characters", offset=offset) from None
        for kind, piece in pieces:
            if kind == "digit":
                try:
                    words.append(list(rules.digit(unicodedata.digit(piece))))
                except KeyError:
                    raise ParseError(f"letter rules have no name for digit {piece!r}", offset=offset) from None
                continue
            if piece in rules.lexicon:
                words.append(list(rules.lexicon[piece]))
                continue
            try:
                words.append(rules.spell(piece))
            except KeyError as exc:
                raise ParseError(f"word {chunk!r}: no letter rule for {exc.args[0]!r}", offset=offset) from None
    seq = LabelSequence.from_words(words)
    if not seq.tokens:
        raise ParseError("empty segment", offset=0)
    return seq


@dataclass(frozen=True)
class Frontend:
    """Everything parse_mixed needs, loaded and validated up front."""

    inventory: ClsInventory
    tables: Mapping[ScriptTag, ScriptRules]
    latin: LatinRules
    script_map: ScriptLanguageMap
    schwa: SchwaConfig = field(default_factory=SchwaConfig)
    assimilate_anusvara: bool = False

    def parse(self, text: str, primary_language: str, utterance_id: str = "") -> LabelSequence:
        return parse_mixed(text, primary_language, self, utterance_id=utterance_id)


def parse_any(seg: TextSegment, config: Frontend) -> LabelSequence:
    if seg.script is ScriptTag.LATIN:
        return parse_latin(seg, config.latin)
    return parse_segment(seg, config.tables, config.schwa, assimilate_anusvara=config.assimilate_anusvara)


def parse_mixed(text: str, primary_language: str, config: Frontend, *, utterance_id: str = "") -> LabelSequence:
    """Full front end: segment by script, parse each segment, join with ``#``.

    Raises:
        FrontendError: any segmentation or parse failure, with the offset
            rebased to ``text`` and the segment index attached.
    """
    if not text:
        raise ParseError("empty input", offset=0)
    segments = segment(text, primary_language, config.script_map)
    words: list[Sequence[str]] = []
    for idx, seg in enumerate(segments):
        try:
            part = parse_any(seg, config)
        except ParseError as exc:
            raise ParseError(exc.message, offset=seg.start + (exc.offset or 0), segment_index=idx) from None
        words.append(part.tokens)
    seq = LabelSequence.from_words(words, utterance_id)
    check_closure(seq, config.inventory)
    return seq


__all__ = [
    "Akshara", "Frontend", "FrontendError", "GraphemeClass", "GraphemeRule", "LabelSequence",
    "LatinRules", "SchwaConfig", "SchwaPolicy", "ScriptRules", "akshara_to_phones", "check_closure",
    "load_latin_rules", "load_schwa_config", "load_script_table", "parse_any", "parse_label_line",
    "parse_latin", "parse_mixed", "parse_segment", "tokenize_aksharas",
]
