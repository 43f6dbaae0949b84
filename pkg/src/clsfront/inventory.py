"""Common Label Set phone inventory and articulatory feature distance.

The inventory file is line oriented UTF-8::

    # comment
    k<TAB>consonant<TAB>place=velar,manner=stop,voiced=false,aspirated=false
    @lang<TAB>hi<TAB>a,aa,k,...
    @weight<TAB>place<TAB>4
    @place<TAB>alveolar<TAB>5/2

Phone rows define the superset, ``@lang`` rows the per-language subsets,
``@weight`` rows override the default distance weights and ``@place`` rows
override the position of a place of articulation on the front-to-back axis
used to scale place differences.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from clsfront.errors import InventoryError

NA = "not-applicable"

CATEGORIES = ("vowel", "consonant", "silence")
LENGTHS = ("short", "long", "diphthong", NA)
HEIGHTS = ("high", "mid", "low", NA)
BACKNESS = ("front", "central", "back", NA)
PLACES = ("bilabial", "labiodental", "dental", "alveolar", "retroflex",
          "palatal", "velar", "glottal", NA)
MANNERS = ("stop", "nasal", "fricative", "affricate", "approximant", "lateral",
           "trill", "flap", NA)

_ENUM_FIELDS = {
    "length": LENGTHS,
    "vowel_height": HEIGHTS,
    "vowel_backness": BACKNESS,
    "place": PLACES,
    "manner": MANNERS,
}
_BOOL_FIELDS = ("voiced", "aspirated", "nasalized")
WEIGHT_FIELDS = ("category", "place", "manner", "voiced", "aspirated", "nasalized",
                 "length", "vowel_height", "vowel_backness")

BOUNDARY = "#"


@dataclass(frozen=True)
class PhoneFeatures:
    category: str
    length: str = NA
    vowel_height: str = NA
    vowel_backness: str = NA
    place: str = NA
    manner: str = NA
    voiced: bool = False
    aspirated: bool = False
    nasalized: bool = False

    def __post_init__(self) -> None:
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")
        for name, allowed in _ENUM_FIELDS.items():
            value = getattr(self, name)
            if value not in allowed:
                raise ValueError(f"unknown {name} value {value!r}")
        if self.category == "vowel":
            if self.place != NA or self.manner != NA:
                raise ValueError("vowels take no place or manner")
            if self.length == NA:
                raise ValueError("vowels need a length")
        elif self.category == "consonant":
            if self.vowel_height != NA or self.vowel_backness != NA:
                raise ValueError("consonants take no vowel height or backness")
            if self.place == NA or self.manner == NA:
                raise ValueError("consonants need a place and a manner")
            if self.length != NA:
                raise ValueError("consonants take no length")
        else:
            if any(getattr(self, n) != NA for n in _ENUM_FIELDS) or any(
                    getattr(self, n) for n in _BOOL_FIELDS):
                raise ValueError("silence takes no features")


@dataclass(frozen=True)
class ClsPhone:
    label: str
    features: PhoneFeatures

    def __post_init__(self) -> None:
        check_label(self.label)


def check_label(label: str) -> None:
    if not label:
        raise ValueError("empty label")
    if not label.isascii() or any(c.isspace() for c in label) or BOUNDARY in label:
        raise ValueError(f"label {label!r} must be ASCII without whitespace or '#'")
    if label.startswith("@"):
        raise ValueError(f"label {label!r} may not start with '@'")
    if "," in label:
        raise ValueError(f"label {label!r} may not contain ','")


@dataclass(frozen=True)
class DistanceWeights:
    """Per-field weights plus the place-of-articulation axis.

    ``place`` is multiplied by the distance between the two places'
    positions; every other field contributes its weight when the two values
    differ. ``category`` is charged once for cross-category pairs.
    """

    weights: Mapping[str, Fraction] = field(default_factory=lambda: MappingProxyType(dict(DEFAULT_WEIGHTS)))
    place_positions: Mapping[str, Fraction] = field(
        default_factory=lambda: MappingProxyType(dict(DEFAULT_PLACE_POSITIONS)))

    def __getitem__(self, name: str) -> Fraction:
        return self.weights[name]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceWeights):
            return NotImplemented
        return dict(self.weights) == dict(other.weights) and dict(self.place_positions) == dict(
            other.place_positions)

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.weights.items())), tuple(sorted(self.place_positions.items()))))


DEFAULT_WEIGHTS: dict[str, Fraction] = {
    "category": Fraction(100),
    "place": Fraction(4),
    "manner": Fraction(4),
    "voiced": Fraction(2),
    "aspirated": Fraction(1),
    "nasalized": Fraction(2),
    "length": Fraction(2),
    "vowel_height": Fraction(3),
    "vowel_backness": Fraction(3),
}
DEFAULT_PLACE_POSITIONS: dict[str, Fraction] = {p: Fraction(i) for i, p in enumerate(PLACES[:-1])}


@dataclass(frozen=True, eq=False)
class ClsInventory:
    superset: Mapping[str, ClsPhone]
    per_language: Mapping[str, frozenset[str]]
    weights: DistanceWeights = field(default_factory=DistanceWeights)

    def __contains__(self, label: object) -> bool:
        return label in self.superset

    def __getitem__(self, label: str) -> ClsPhone:
        return self.superset[label]

    def __len__(self) -> int:
        return len(self.superset)

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(self.superset)

    def distance(self, a: str, b: str) -> Fraction:
        return feature_distance(self.superset[a], self.superset[b], self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClsInventory):
            return NotImplemented
        return (dict(self.superset) == dict(other.superset)
                and dict(self.per_language) == dict(other.per_language)
                and self.weights == other.weights)

    __hash__ = None  # type: ignore[assignment]


def feature_distance(a: ClsPhone, b: ClsPhone, weights: DistanceWeights | None = None) -> Fraction:
    """Weighted articulatory distance between two phones.

    Symmetric and zero only for identical labels, provided the phones come
    from one loaded inventory (loading rejects indistinguishable bundles and
    non-positive weights).
    """
    if a.label == b.label:
        return Fraction(0)
    w = weights or DistanceWeights()
    fa, fb = a.features, b.features
    total = Fraction(0)
    if fa.category != fb.category:
        total += w["category"]
    if fa.place != fb.place:
        if NA in (fa.place, fb.place):
            total += w["place"]
        else:
            total += w["place"] * abs(w.place_positions[fa.place] - w.place_positions[fb.place])
    for name in ("manner", "length", "vowel_height", "vowel_backness", *_BOOL_FIELDS):
        if getattr(fa, name) != getattr(fb, name):
            total += w[name]
    return total


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise ValueError(f"expected true or false, got {text!r}")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def _parse_features(category: str, spec: str) -> PhoneFeatures:
    values: dict[str, object] = {}
    for item in filter(None, (s.strip() for s in spec.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {item!r}")
        if key in values:
            raise ValueError(f"feature {key!r} given twice")
        if key in _ENUM_FIELDS:
            if value not in _ENUM_FIELDS[key]:
                raise ValueError(f"unknown {key} value {value!r}")
            values[key] = value
        elif key in _BOOL_FIELDS:
            values[key] = _parse_bool(value)
        else:
            raise ValueError(f"unknown feature key {key!r}")
    return PhoneFeatures(category=category, **values)  # type: ignore[arg-type]


def load_inventory(table_text: str) -> ClsInventory:
    """Parse an inventory file into a validated, immutable ClsInventory.

    Raises:
        InventoryError: on a malformed row, duplicate label, unknown feature
            value, unknown label in an ``@lang`` row, or an empty table. The
            error carries the offending line number.
    """
    phones: dict[str, ClsPhone] = {}
    phone_lines: dict[str, int] = {}
    lang_rows: dict[str, tuple[int, list[str]]] = {}
    weights = dict(DEFAULT_WEIGHTS)
    places = dict(DEFAULT_PLACE_POSITIONS)
    seen_weights: set[str] = set()
    seen_places: set[str] = set()

    for lineno, raw in enumerate(table_text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        try:
            if cols[0] == "@lang":
                if len(cols) != 3:
                    raise ValueError("expected @lang<TAB>code<TAB>labels")
                code = cols[1].strip()
                if not code:
                    raise ValueError("empty language code")
                if code in lang_rows:
                    raise ValueError(f"language {code!r} declared twice")
                labels = [s.strip() for s in cols[2].split(",") if s.strip()]
                if len(set(labels)) != len(labels):
                    raise ValueError(f"language {code!r} lists a label twice")
                lang_rows[code] = (lineno, labels)
            elif cols[0] == "@weight":
                if len(cols) != 3:
                    raise ValueError("expected @weight<TAB>field<TAB>rational")
                name = cols[1].strip()
                if name not in WEIGHT_FIELDS:
                    raise ValueError(f"unknown weight field {name!r}")
                if name in seen_weights:
                    raise ValueError(f"weight {name!r} given twice")
                value = _parse_rational(cols[2])
                if value <= 0:
                    raise ValueError(f"weight {name!r} must be positive")
                weights[name] = value
                seen_weights.add(name)
            elif cols[0] == "@place":
                if len(cols) != 3:
                    raise ValueError("expected @place<TAB>place<TAB>rational")
                name = cols[1].strip()
                if name not in DEFAULT_PLACE_POSITIONS:
                    raise ValueError(f"unknown place {name!r}")
                if name in seen_places:
                    raise ValueError(f"place {name!r} given twice")
                places[name] = _parse_rational(cols[2])
                seen_places.add(name)
            elif cols[0].startswith("@"):
                raise ValueError(f"unknown directive {cols[0]!r}")
            else:
                if len(cols) not in (2, 3):
                    raise ValueError("expected label<TAB>category<TAB>features")
                label, category = cols[0].strip(), cols[1].strip()
                check_label(label)
                if category not in CATEGORIES:
                    raise ValueError(f"unknown category {category!r}")
                if label in phones:
                    raise InventoryError(f"duplicate label {label!r} (first defined on line "
                                         f"{phone_lines[label]})", line=lineno)
                phones[label] = ClsPhone(label, _parse_features(category, cols[2] if len(cols) == 3 else ""))
                phone_lines[label] = lineno
        except ValueError as exc:
            raise InventoryError(str(exc), line=lineno) from None

    if not phones:
        raise InventoryError("no phones defined")
    for code, (lineno, labels) in lang_rows.items():
        unknown = [lab for lab in labels if lab not in phones]
        if unknown:
            raise InventoryError(f"language {code!r} references unknown label {unknown[0]!r}", line=lineno)

    if weights["category"] < max(v for k, v in weights.items() if k != "category"):
        raise InventoryError("category weight must be the largest weight")
    if len(set(places.values())) != len(places):
        raise InventoryError("place positions must be distinct")

    bundles: dict[PhoneFeatures, str] = {}
    for label, phone in phones.items():
        other = bundles.setdefault(phone.features, label)
        if other != label:
            raise InventoryError(f"phones {other!r} and {label!r} have identical features",
                                 line=phone_lines[label])

    return ClsInventory(
        superset=MappingProxyType(phones),
        per_language=MappingProxyType({code: frozenset(labels) for code, (_, labels) in lang_rows.items()}),
        weights=DistanceWeights(MappingProxyType(weights), MappingProxyType(places)),
    )


def _format_features(f: PhoneFeatures) -> str:
    parts = []
    for fl in fields(f):
        if fl.name == "category":
            continue
        value = getattr(f, fl.name)
        if fl.name in _BOOL_FIELDS:
            parts.append(f"{fl.name}={'true' if value else 'false'}")
        elif value != NA:
            parts.append(f"{fl.name}={value}")
    return ",".join(parts)


def dump_inventory(inv: ClsInventory) -> str:
    """Serialize ``inv`` in canonical form (sorted rows, every field explicit)."""
    lines = ["# CLS phone inventory (canonical form)"]
    lines += [f"@weight\t{name}\t{inv.weights[name]}" for name in WEIGHT_FIELDS]
    lines += [f"@place\t{p}\t{inv.weights.place_positions[p]}" for p in PLACES[:-1]]
    for label in sorted(inv.superset):
        phone = inv.superset[label]
        lines.append(f"{label}\t{phone.features.category}\t{_format_features(phone.features)}")
    for code in sorted(inv.per_language):
        lines.append(f"@lang\t{code}\t{','.join(sorted(inv.per_language[code]))}")
    return "\n".join(lines) + "\n"


def phones_for_language(inv: ClsInventory, lang: str) -> frozenset[ClsPhone]:
    try:
        labels = inv.per_language[lang]
    except KeyError:
        raise InventoryError(f"unknown language code {lang!r}") from None
    return frozenset(inv.superset[lab] for lab in labels)


def check_labels(inv: ClsInventory, labels: Iterable[str]) -> None:
    """Raise InventoryError naming the first label absent from the superset."""
    for lab in labels:
        if lab not in inv.superset:
            raise InventoryError(f"unknown CLS label {lab!r}")
