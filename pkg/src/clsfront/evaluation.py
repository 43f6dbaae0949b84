"""Listening-test sheets and rating aggregation (MOS, AXY, language ID).

All arithmetic is exact; rounding happens only when formatting.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from clsfront.errors import EvaluationError


class Design(str, Enum):
    MOS = "MOS"
    AXY = "AXY"
    LANGID = "LangID"


MEASURES = ("intelligibility", "naturalness")
PREFERENCES = ("X", "Y", "neither")


@dataclass(frozen=True)
class MosRecord:
    listener_id: str
    text_language: str
    voice_id: str
    intelligibility: int
    naturalness: int

    def __post_init__(self) -> None:
        for name in MEASURES:
            score = getattr(self, name)
            if isinstance(score, bool) or not isinstance(score, int) or not 1 <= score <= 5:
                raise ValueError(f"{name} score {score!r} outside 1..5")


@dataclass(frozen=True)
class AxyRecord:
    listener_id: str
    item_id: str
    system_x: str
    system_y: str
    preference: str

    def __post_init__(self) -> None:
        if self.system_x == self.system_y:
            raise ValueError("X and Y must be different systems")
        if self.preference not in PREFERENCES:
            raise ValueError(f"preference must be one of {', '.join(PREFERENCES)}")


@dataclass(frozen=True)
class LangIdRecord:
    listener_id: str
    item_id: str
    true_language: str
    chosen_language: str


def round_half_up(x: Fraction, places: int = 2) -> Decimal:
    """Round an exact rational half-up (away from zero for ties) to ``places`` decimals."""
    scaled = abs(Fraction(x)) * 10 ** places + Fraction(1, 2)
    value = scaled.numerator // scaled.denominator
    sign = -1 if x < 0 else 1
    return Decimal(sign * value).scaleb(-places)


def fmt(x: Fraction, places: int = 2) -> str:
    return str(round_half_up(x, places))


def fmt_raw(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class MosTable:
    """Cell means keyed (language, voice, measure); grand means keyed (voice, measure)."""

    cells: Mapping[tuple[str, str, str], Fraction]
    grand: Mapping[tuple[str, str], Fraction]
    counts: Mapping[tuple[str, str], int]

    @property
    def languages(self) -> list[str]:
        return _ordered(k[0] for k in self.cells)

    @property
    def voices(self) -> list[str]:
        return _ordered(k[1] for k in self.cells)


def _ordered(items: Iterable[str]) -> list[str]:
    return sorted(set(items))


def mos_table(records: Sequence[MosRecord]) -> MosTable:
    """Cell means, and per (voice, measure) the unweighted mean of its cells."""
    if not records:
        raise EvaluationError("no MOS records")
    sums: dict[tuple[str, str, str], int] = defaultdict(int)
    counts: Counter[tuple[str, str]] = Counter()
    for r in records:
        counts[(r.text_language, r.voice_id)] += 1
        for m in MEASURES:
            sums[(r.text_language, r.voice_id, m)] += getattr(r, m)
    cells = {k: Fraction(v, counts[k[:2]]) for k, v in sorted(sums.items())}
    per_voice: dict[tuple[str, str], list[Fraction]] = defaultdict(list)
    for (lang, voice, m), mean in cells.items():
        per_voice[(voice, m)].append(mean)
    grand = {k: sum(v, Fraction(0)) / len(v) for k, v in sorted(per_voice.items())}
    return MosTable(cells, grand, dict(sorted(counts.items())))


@dataclass(frozen=True)
class AxyResult:
    x: Fraction
    y: Fraction
    neither: Fraction
    n: int


def axy_preference(records: Sequence[AxyRecord]) -> dict[tuple[str, str], AxyResult]:
    """Preference fractions per ordered (system_x, system_y) pair."""
    if not records:
        raise EvaluationError("no AXY records")
    groups: dict[tuple[str, str], Counter[str]] = defaultdict(Counter)
    for r in records:
        groups[(r.system_x, r.system_y)][r.preference] += 1
    out = {}
    for pair, c in sorted(groups.items()):
        n = sum(c.values())
        out[pair] = AxyResult(Fraction(c["X"], n), Fraction(c["Y"], n), Fraction(c["neither"], n), n)
    return out


def system_preference(results: Mapping[tuple[str, str], AxyResult], a: str, b: str) -> tuple[Fraction, Fraction]:
    """Share of votes for ``a`` and for ``b`` pooled over both presentation orders."""
    votes_a = votes_b = total = Fraction(0)
    for (x, y), r in results.items():
        if (x, y) == (a, b):
            votes_a += r.x * r.n
            votes_b += r.y * r.n
        elif (x, y) == (b, a):
            votes_a += r.y * r.n
            votes_b += r.x * r.n
        else:
            continue
        total += r.n
    if not total:
        raise EvaluationError(f"no AXY records compare {a!r} and {b!r}")
    return votes_a / total, votes_b / total


@dataclass(frozen=True)
class Confusion:
    labels: tuple[str, ...]
    matrix: Mapping[tuple[str, str], int]
    accuracy: Fraction
    total: int

    def row(self, true_language: str) -> list[int]:
        return [self.matrix.get((true_language, c), 0) for c in self.labels]


def langid_confusion(records: Sequence[LangIdRecord], languages: Iterable[str] | None = None) -> Confusion:
    """Confusion counts (rows true, columns chosen) and accuracy."""
    if not records:
        raise EvaluationError("no language-ID records")
    allowed = set(languages) if languages is not None else None
    matrix: Counter[tuple[str, str]] = Counter()
    for r in records:
        if allowed is not None and not {r.true_language, r.chosen_language} <= allowed:
            raise EvaluationError(f"record {r.item_id!r} uses a language outside the configured set")
        matrix[(r.true_language, r.chosen_language)] += 1
    labels = tuple(sorted(allowed if allowed is not None else {x for k in matrix for x in k}))
    correct = sum(n for (t, c), n in matrix.items() if t == c)
    return Confusion(labels, dict(sorted(matrix.items())), Fraction(correct, len(records)), len(records))


@dataclass(frozen=True)
class AxyItem:
    item_id: str
    a: str
    x: str
    y: str


@dataclass(frozen=True)
class SheetRow:
    position: int
    item_id: str
    roles: tuple[str, ...] = ()

    def to_line(self) -> str:
        return "\t".join([str(self.position), self.item_id, *self.roles])


def make_sheet(stimuli: Sequence[str | AxyItem], design: Design | str, seed: int) -> list[SheetRow]:
    """Seeded presentation order; AXY items also get a seeded X/Y swap."""
    design = Design(design)
    if not stimuli:
        raise EvaluationError("no stimuli")
    items = list(stimuli)
    if design is Design.AXY:
        for it in items:
            if not isinstance(it, AxyItem):
                raise EvaluationError("AXY stimuli need (A, X, Y) triples")
            if it.x == it.y:
                raise EvaluationError(f"AXY item {it.item_id!r} has X = Y")
    elif any(isinstance(it, AxyItem) for it in items):
        raise EvaluationError(f"{design.value} stimuli are plain item ids")
    rng = random.Random(seed)
    rng.shuffle(items)
    rows = []
    for pos, it in enumerate(items, start=1):
        if isinstance(it, AxyItem):
            x, y = (it.y, it.x) if rng.random() < 0.5 else (it.x, it.y)
            rows.append(SheetRow(pos, it.item_id, (it.a, x, y)))
        else:
            rows.append(SheetRow(pos, it))
    return rows


def read_stimuli(text: str) -> tuple[Design, list[str | AxyItem]]:
    """Stimulus list: a design header line, then one item per line.

    AXY lines are ``item_id<TAB>A<TAB>X<TAB>Y``; other designs just ``item_id``.
    """
    design, rows = _read_table(text)
    out: list[str | AxyItem] = []
    for lineno, cols in rows:
        want = 4 if design is Design.AXY else 1
        if len(cols) != want:
            raise EvaluationError(f"expected {want} column(s) for {design.value} stimuli", line=lineno)
        out.append(AxyItem(*cols) if design is Design.AXY else cols[0])
    return design, out


_COLUMNS = {
    Design.MOS: ("listener_id", "text_language", "voice_id", "intelligibility", "naturalness"),
    Design.AXY: ("listener_id", "item_id", "system_x", "system_y", "preference"),
    Design.LANGID: ("listener_id", "item_id", "true_language", "chosen_language"),
}


def _read_table(text: str) -> tuple[Design, list[tuple[int, list[str]]]]:
    design: Design | None = None
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if design is None:
            head = line.lstrip("#").split()
            name = head[-1] if head else ""
            try:
                design = Design(name)
            except ValueError:
                raise EvaluationError(f"first line must name the design ({', '.join(d.value for d in Design)})",
                                      line=lineno) from None
            continue
        if line.startswith("#"):
            continue
        rows.append((lineno, [c.strip() for c in raw.rstrip("\r\n").split("\t")]))
    if design is None:
        raise EvaluationError("empty ratings file")
    return design, rows


def read_ratings(text: str, expected: Design | str | None = None) -> tuple[Design, list]:
    """Parse a ratings file whose first line names its design.

    Raises:
        EvaluationError: with the line number, for a wrong column count, a
            score outside 1..5, or a design mismatch with ``expected``.
    """
    design, rows = _read_table(text)
    if expected is not None and Design(expected) is not design:
        raise EvaluationError(f"ratings file is {design.value}, expected {Design(expected).value}")
    records = []
    for lineno, cols in rows:
        if len(cols) != len(_COLUMNS[design]):
            raise EvaluationError(f"expected {len(_COLUMNS[design])} columns for {design.value}", line=lineno)
        try:
            if design is Design.MOS:
                records.append(MosRecord(cols[0], cols[1], cols[2], _score(cols[3]), _score(cols[4])))
            elif design is Design.AXY:
                records.append(AxyRecord(*cols))
            else:
                records.append(LangIdRecord(*cols))
        except ValueError as exc:
            raise EvaluationError(str(exc), line=lineno) from None
    if not records:
        raise EvaluationError("ratings file has no records")
    return design, records


def _score(text: str) -> int:
    if not text.isdigit():
        raise ValueError(f"score {text!r} is not an integer")
    return int(text)


def format_mos(table: MosTable) -> tuple[str, str]:
    """Human-readable table and TSV (rounded plus exact values)."""
    voices, langs = table.voices, table.languages
    cols = [(v, m) for v in voices for m in MEASURES]
    header = ["language", *(f"{v}:{m}" for v, m in cols)]
    lines = [header]
    for lang in langs:
        row = [lang]
        for v, m in cols:
            cell = table.cells.get((lang, v, m))
            row.append(fmt(cell) if cell is not None else "-")
        lines.append(row)
    lines.append(["mean", *(fmt(table.grand[c]) for c in cols)])
    widths = [max(len(r[i]) for r in lines) for i in range(len(header))]
    human = "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in lines) + "\n"

    tsv = ["kind\tlanguage\tvoice\tmeasure\tmean\texact"]
    for (lang, v, m), x in table.cells.items():
        tsv.append(f"cell\t{lang}\t{v}\t{m}\t{fmt(x)}\t{fmt_raw(x)}")
    for (v, m), x in table.grand.items():
        tsv.append(f"grand\t*\t{v}\t{m}\t{fmt(x)}\t{fmt_raw(x)}")
    return human, "\n".join(tsv) + "\n"


def format_axy(results: Mapping[tuple[str, str], AxyResult]) -> tuple[str, str]:
    human = []
    tsv = ["system_x\tsystem_y\tn\tX\tY\tneither\tX_exact\tY_exact\tneither_exact"]
    for (x, y), r in results.items():
        human.append(f"{x} vs {y} (n={r.n}): X {fmt(r.x)}  Y {fmt(r.y)}  neither {fmt(r.neither)}")
        tsv.append(f"{x}\t{y}\t{r.n}\t{fmt(r.x)}\t{fmt(r.y)}\t{fmt(r.neither)}\t"
                   f"{fmt_raw(r.x)}\t{fmt_raw(r.y)}\t{fmt_raw(r.neither)}")
    return "\n".join(human) + "\n", "\n".join(tsv) + "\n"


def format_confusion(c: Confusion) -> tuple[str, str]:
    header = ["true\\chosen", *c.labels]
    rows = [header] + [[t, *map(str, c.row(t))] for t in c.labels]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    human = "\n".join("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows)
    human += f"\naccuracy {fmt(c.accuracy)} ({c.total} responses)\n"
    tsv = ["true_language\tchosen_language\tcount"]
    tsv += [f"{t}\t{ch}\t{n}" for (t, ch), n in c.matrix.items()]
    tsv.append(f"accuracy\t*\t{fmt_raw(c.accuracy)}")
    return human, "\n".join(tsv) + "\n"


def summarize(text: str, expected: Design | str | None = None) -> tuple[Design, str, str]:
    """Read a ratings file and return (design, human text, TSV)."""
    design, records = read_ratings(text, expected)
    if design is Design.MOS:
        human, tsv = format_mos(mos_table(records))
    elif design is Design.AXY:
        human, tsv = format_axy(axy_preference(records))
    else:
        human, tsv = format_confusion(langid_confusion(records))
    return design, human, tsv
