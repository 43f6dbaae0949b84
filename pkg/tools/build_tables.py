#!/usr/bin/env python3
"""Regenerate the bundled data tables under src/clsfront/data.

The tables are configuration, not code: this script only exists so the
nine Brahmic tables stay mutually consistent (they are derived from the
Unicode character names of each block, which are parallel across the
ISCII-derived scripts). Edit the mappings below and re-run:

    python tools/build_tables.py
"""

from __future__ import annotations

import unicodedata
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "clsfront" / "data"

# label, category, features
PHONES: list[tuple[str, str, str]] = [
    ("sil", "silence", ""),
    # vowels
    ("a", "vowel", "length=short,vowel_height=mid,vowel_backness=central,voiced=true"),
    ("aa", "vowel", "length=long,vowel_height=low,vowel_backness=central,voiced=true"),
    ("i", "vowel", "length=short,vowel_height=high,vowel_backness=front,voiced=true"),
    ("ii", "vowel", "length=long,vowel_height=high,vowel_backness=front,voiced=true"),
    ("u", "vowel", "length=short,vowel_height=high,vowel_backness=back,voiced=true"),
    ("uu", "vowel", "length=long,vowel_height=high,vowel_backness=back,voiced=true"),
    ("e", "vowel", "length=short,vowel_height=mid,vowel_backness=front,voiced=true"),
    ("ee", "vowel", "length=long,vowel_height=mid,vowel_backness=front,voiced=true"),
    ("ai", "vowel", "length=diphthong,vowel_height=low,vowel_backness=front,voiced=true"),
    ("o", "vowel", "length=short,vowel_height=mid,vowel_backness=back,voiced=true"),
    ("oo", "vowel", "length=long,vowel_height=mid,vowel_backness=back,voiced=true"),
    ("au", "vowel", "length=diphthong,vowel_height=low,vowel_backness=back,voiced=true"),
    # English-specific vowels
    ("ae", "vowel", "length=short,vowel_height=low,vowel_backness=front,voiced=true"),
    ("aw", "vowel", "length=long,vowel_height=low,vowel_backness=back,voiced=true"),
    ("ey", "vowel", "length=diphthong,vowel_height=mid,vowel_backness=front,voiced=true"),
    ("ow", "vowel", "length=diphthong,vowel_height=mid,vowel_backness=back,voiced=true"),
    # stops, affricates, nasals
    ("k", "consonant", "place=velar,manner=stop"),
    ("kh", "consonant", "place=velar,manner=stop,aspirated=true"),
    ("g", "consonant", "place=velar,manner=stop,voiced=true"),
    ("gh", "consonant", "place=velar,manner=stop,voiced=true,aspirated=true"),
    ("ng", "consonant", "place=velar,manner=nasal,voiced=true"),
    ("c", "consonant", "place=palatal,manner=affricate"),
    ("ch", "consonant", "place=palatal,manner=affricate,aspirated=true"),
    ("j", "consonant", "place=palatal,manner=affricate,voiced=true"),
    ("jh", "consonant", "place=palatal,manner=affricate,voiced=true,aspirated=true"),
    ("nj", "consonant", "place=palatal,manner=nasal,voiced=true"),
    ("tx", "consonant", "place=retroflex,manner=stop"),
    ("txh", "consonant", "place=retroflex,manner=stop,aspirated=true"),
    ("dx", "consonant", "place=retroflex,manner=stop,voiced=true"),
    ("dxh", "consonant", "place=retroflex,manner=stop,voiced=true,aspirated=true"),
    ("nx", "consonant", "place=retroflex,manner=nasal,voiced=true"),
    ("t", "consonant", "place=dental,manner=stop"),
    ("th", "consonant", "place=dental,manner=stop,aspirated=true"),
    ("d", "consonant", "place=dental,manner=stop,voiced=true"),
    ("dh", "consonant", "place=dental,manner=stop,voiced=true,aspirated=true"),
    ("n", "consonant", "place=dental,manner=nasal,voiced=true"),
    ("nd", "consonant", "place=alveolar,manner=nasal,voiced=true"),
    ("p", "consonant", "place=bilabial,manner=stop"),
    ("ph", "consonant", "place=bilabial,manner=stop,aspirated=true"),
    ("b", "consonant", "place=bilabial,manner=stop,voiced=true"),
    ("bh", "consonant", "place=bilabial,manner=stop,voiced=true,aspirated=true"),
    ("m", "consonant", "place=bilabial,manner=nasal,voiced=true"),
    ("nB", "consonant", "place=alveolar,manner=nasal,voiced=true,nasalized=true"),
    # approximants, liquids
    ("y", "consonant", "place=palatal,manner=approximant,voiced=true"),
    ("r", "consonant", "place=alveolar,manner=flap,voiced=true"),
    ("rx", "consonant", "place=alveolar,manner=trill,voiced=true"),
    ("l", "consonant", "place=alveolar,manner=lateral,voiced=true"),
    ("lx", "consonant", "place=retroflex,manner=lateral,voiced=true"),
    ("zh", "consonant", "place=retroflex,manner=approximant,voiced=true"),
    ("w", "consonant", "place=labiodental,manner=approximant,voiced=true"),
    ("ww", "consonant", "place=bilabial,manner=approximant,voiced=true"),
    # fricatives
    ("sh", "consonant", "place=palatal,manner=fricative"),
    ("sx", "consonant", "place=retroflex,manner=fricative"),
    ("s", "consonant", "place=alveolar,manner=fricative"),
    ("h", "consonant", "place=glottal,manner=fricative,voiced=true"),
    ("hq", "consonant", "place=glottal,manner=fricative"),
    ("f", "consonant", "place=labiodental,manner=fricative"),
    ("v", "consonant", "place=labiodental,manner=fricative,voiced=true"),
    ("z", "consonant", "place=alveolar,manner=fricative,voiced=true"),
    ("tf", "consonant", "place=dental,manner=fricative"),
    ("df", "consonant", "place=dental,manner=fricative,voiced=true"),
    ("kq", "consonant", "place=velar,manner=fricative"),
    ("gq", "consonant", "place=velar,manner=fricative,voiced=true"),
    # nukta flaps
    ("dxq", "consonant", "place=retroflex,manner=flap,voiced=true"),
    ("dxhq", "consonant", "place=retroflex,manner=flap,voiced=true,aspirated=true"),
]

NASALIZABLE = ["a", "aa", "i", "ii", "u", "uu", "ee", "ai", "oo", "au", "ae", "aw"]
for _label, _cat, _feats in list(PHONES):
    if _label in NASALIZABLE:
        PHONES.append((_label + "~", _cat, _feats + ",nasalized=true"))

WEIGHTS = [
    ("category", "100"),
    ("place", "4"),
    ("manner", "4"),
    ("voiced", "2"),
    ("aspirated", "1"),
    ("nasalized", "2"),
    ("length", "2"),
    ("vowel_height", "3"),
    ("vowel_backness", "3"),
]

# alveolar sits between dental and retroflex, so coronal neighbours are closer
# to each other than to velars
PLACE_POSITIONS = [
    ("bilabial", "0"),
    ("labiodental", "1"),
    ("dental", "2"),
    ("alveolar", "5/2"),
    ("retroflex", "3"),
    ("palatal", "4"),
    ("velar", "5"),
    ("glottal", "6"),
]

SCRIPTS = {
    "Devanagari": 0x0900,
    "Bengali": 0x0980,
    "Gurmukhi": 0x0A00,
    "Gujarati": 0x0A80,
    "Oriya": 0x0B00,
    "Tamil": 0x0B80,
    "Telugu": 0x0C00,
    "Kannada": 0x0C80,
    "Malayalam": 0x0D00,
}
DRAVIDIAN = {"Tamil", "Telugu", "Kannada", "Malayalam"}
NASALIZING = {"Devanagari", "Bengali", "Gurmukhi", "Gujarati", "Oriya"}

VOWEL_NAMES = {
    "A": "a", "AA": "aa", "I": "i", "II": "ii", "U": "u", "UU": "uu",
    "VOCALIC R": "r i", "VOCALIC RR": "r ii", "VOCALIC L": "l i", "VOCALIC LL": "l ii",
    "CANDRA E": "ae", "SHORT E": "e", "EE": "ee", "AI": "ai",
    "CANDRA O": "aw", "SHORT O": "o", "OO": "oo", "AU": "au", "CANDRA A": "ae",
}

CONSONANT_NAMES = {
    "KA": "k", "KHA": "kh", "GA": "g", "GHA": "gh", "NGA": "ng",
    "CA": "c", "CHA": "ch", "JA": "j", "JHA": "jh", "NYA": "nj",
    "TTA": "tx", "TTHA": "txh", "DDA": "dx", "DDHA": "dxh", "NNA": "nx",
    "TA": "t", "THA": "th", "DA": "d", "DHA": "dh", "NA": "n", "NNNA": "nd",
    "PA": "p", "PHA": "ph", "BA": "b", "BHA": "bh", "MA": "m",
    "YA": "y", "RA": "r", "RRA": "rx", "LA": "l", "LLA": "lx", "LLLA": "zh", "VA": "w",
    "SHA": "sh", "SSA": "sx", "SA": "s", "HA": "h",
    "QA": "k", "KHHA": "kq", "GHHA": "gq", "ZA": "z", "DDDHA": "dxq",
    "RHA": "dxhq", "FA": "f", "YYA": "y", "WA": "w",
    "RA WITH MIDDLE DIAGONAL": "r", "RA WITH LOWER DIAGONAL": "w",
}

CHILLU_NAMES = {
    "NN": "nx", "N": "n", "RR": "r", "L": "l", "LL": "lx", "K": "k",
    "M": "m", "Y": "y", "LLL": "zh",
}

# nukta + base consonant (by block offset) for scripts with a nukta sign;
# Devanagari NNNA/RRA/LLLA come in through their canonical decompositions
NUKTA_BASES = {
    0x15: "k", 0x16: "kq", 0x17: "gq", 0x1C: "z", 0x21: "dxq", 0x22: "dxhq",
    0x2B: "f", 0x2F: "y",
}

DIGIT_NAMES = {
    "Devanagari": ["sh uu n y a", "ee k", "d oo", "t ii n", "c aa r",
                   "p aa n c", "ch a h", "s aa t", "aa txh", "n au"],
    "Bengali": ["sh u n n oo", "ee k", "d u i", "t i n", "c aa r",
                "p aa n c", "ch a y", "s aa t", "aa tx", "n a y"],
    "Gurmukhi": ["s i f a r", "i k", "d oo", "t i n n", "c aa r",
                 "p a n j", "ch ee", "s a t", "a txh", "n au"],
    "Gujarati": ["sh uu n y a", "ee k", "b ee", "t r a nB", "c aa r",
                 "p aa nB c", "ch a", "s aa t", "aa txh", "n a w"],
    "Oriya": ["sh u n y a", "ee k a", "d u i", "t i n i", "c aa r i",
              "p aa n c a", "ch a", "s aa t a", "aa txh a", "n a"],
    "Tamil": ["p uu j y a m", "o n rx u", "i r a nx tx u", "m uu n rx u",
              "n aa n k u", "a y n d u", "aa rx u", "ee zh u", "e tx tx u",
              "o n b a d u"],
    "Telugu": ["s u n n a", "o k a tx i", "r e nx tx u", "m uu tx i",
               "n aa l u g u", "ai d u", "aa r u", "ee d u", "e n m i d i",
               "t o m m i d i"],
    "Kannada": ["s o n n e", "o n d u", "e r a dx u", "m uu r u",
                "n aa l k u", "ai d u", "aa r u", "ee lx u", "e n tx u",
                "o m b a t t u"],
    "Malayalam": ["p uu j y a m", "o n n u", "r a nx tx u", "m uu n n u",
                  "n aa l u", "a nj c u", "aa rx u", "ee zh u", "e tx tx u",
                  "o n p a t u"],
}

EXTRA_RULES: dict[str, list[tuple[str, str, str, str]]] = {
    "Devanagari": [
        ("0964", "Punct", "", "danda"),
        ("0965", "Punct", "", "double danda"),
    ],
    "Gurmukhi": [
        ("0A01", "Candrabindu", "nB", "adak bindi"),
        ("0A02", "Anusvara", "nB", "bindi"),
        ("0A70", "Anusvara", "nB", "tippi"),
        ("0A71", "ZWJ", "", "addak (gemination not modelled)"),
        ("0A72+0A3F", "IndependentVowel", "i", "iri + sihari"),
        ("0A72+0A40", "IndependentVowel", "ii", "iri + bihari"),
        ("0A72+0A47", "IndependentVowel", "ee", "iri + lavan"),
        ("0A73+0A41", "IndependentVowel", "u", "ura + aunkar"),
        ("0A73+0A42", "IndependentVowel", "uu", "ura + dulainkar"),
        ("0A73+0A4B", "IndependentVowel", "oo", "ura + hora"),
    ],
    "Bengali": [
        ("09CE", "DeadConsonant", "t", "khanda ta"),
    ],
    "Tamil": [
        ("0B83+0BAA", "Consonant", "f", "aytham + pa"),
        ("0B83+0B9C", "Consonant", "z", "aytham + ja"),
        ("0B83+0B95", "Consonant", "kq", "aytham + ka"),
    ],
    "Kannada": [
        ("0CDE", "Consonant", "zh", "llla (named FA in Unicode)"),
    ],
}


def _hex(s: str) -> str:
    return "+".join(f"{ord(c):04X}" for c in s)


def script_rules(script: str) -> list[tuple[str, str, str, str]]:
    base = SCRIPTS[script]
    rules: dict[str, tuple[str, str, str]] = {}
    vowel_e = "e" if script in DRAVIDIAN else "ee"
    vowel_o = "o" if script in DRAVIDIAN else "oo"
    explicit = {k for k, *_ in EXTRA_RULES.get(script, [])}
    has_nukta = False
    for off in range(0x80):
        cp = base + off
        name = unicodedata.name(chr(cp), None)
        if name is None or f"{cp:04X}" in explicit:
            continue
        rest = name.split(" ", 1)[1]
        entry = None
        if rest.startswith("LETTER CHILLU "):
            entry = ("DeadConsonant", CHILLU_NAMES[rest[len("LETTER CHILLU "):]])
        elif rest.startswith(("LETTER ", "VOWEL SIGN ", "VOWEL ")):
            sign = rest.startswith("VOWEL SIGN ")
            what = rest[len("VOWEL SIGN "):] if sign else rest.split(" ", 1)[1]
            if what in ("E",):
                labels = vowel_e
            elif what in ("O",):
                labels = vowel_o
            elif what in VOWEL_NAMES:
                labels = VOWEL_NAMES[what]
            elif not sign and what in CONSONANT_NAMES:
                if what == "RRA":
                    labels = "rx" if off == 0x31 else "dxq"
                else:
                    labels = CONSONANT_NAMES[what]
                entry = ("Consonant", labels)
            else:
                continue
            if entry is None:
                entry = ("VowelSign" if sign else "IndependentVowel", labels)
        elif rest in ("SIGN CANDRABINDU",):
            entry = ("Candrabindu", "nB")
        elif rest == "SIGN ANUSVARA":
            entry = ("Anusvara", "nB")
        elif rest == "SIGN VISARGA":
            entry = ("Visarga", "hq")
        elif rest == "SIGN NUKTA":
            entry = ("Nukta", "")
            has_nukta = True
        elif rest == "SIGN VIRAMA":
            entry = ("Virama", "")
        elif rest == "SIGN AVAGRAHA":
            entry = ("Avagraha", "")
        elif rest.startswith("DIGIT "):
            entry = ("Digit", DIGIT_NAMES[script][unicodedata.digit(chr(cp))])
        if entry is None:
            continue
        rules[chr(cp)] = (entry[0], entry[1], name.title())
    for key, cls, labels, note in EXTRA_RULES.get(script, []):
        text = "".join(chr(int(h, 16)) for h in key.split("+"))
        rules[text] = (cls, labels, note)
    # canonical decompositions of precomposed letters and two-part vowel signs
    for text, (cls, labels, note) in list(rules.items()):
        nfd = unicodedata.normalize("NFD", text)
        if nfd != text and nfd not in rules:
            rules[nfd] = (cls, labels, note + " (decomposed)")
    if has_nukta:
        nukta = chr(base + 0x3C)
        for off, label in NUKTA_BASES.items():
            cons = chr(base + off)
            if cons in rules and rules[cons][0] == "Consonant" and cons + nukta not in rules:
                rules[cons + nukta] = ("Consonant", label, rules[cons][2] + " + Nukta")
    for d in range(10):
        rules[str(d)] = ("Digit", DIGIT_NAMES[script][d], f"ASCII digit {d}")
    rules["‌"] = ("ZWNJ", "", "zero width non-joiner")
    rules["‍"] = ("ZWJ", "", "zero width joiner")
    out = [(_hex(k), c, l, n) for k, (c, l, n) in rules.items()]
    out.sort(key=lambda r: [int(h, 16) for h in r[0].split("+")])
    return out


ENGLISH_LETTERS = [
    # digraphs first is only cosmetic: matching is longest-key
    ("th", "tf"), ("sh", "sh"), ("ch", "c"), ("ph", "f"), ("oo", "uu"), ("ee", "ii"),
    ("ck", "k"), ("ng", "ng"), ("qu", "k ww"), ("wh", "ww"), ("ai", "ey"), ("ay", "ey"),
    ("ea", "ii"), ("ou", "au"), ("ow", "ow"), ("oa", "ow"),
    ("ll", "l"), ("ss", "s"), ("tt", "tx"), ("pp", "p"), ("mm", "m"), ("nn", "n"),
    ("ff", "f"), ("rr", "r"), ("dd", "dx"), ("bb", "b"), ("gg", "g"), ("cc", "k"), ("zz", "z"),
    ("a", "ae"), ("b", "b"), ("c", "k"), ("d", "dx"), ("e", "e"), ("f", "f"), ("g", "g"),
    ("h", "h"), ("i", "i"), ("j", "j"), ("k", "k"), ("l", "l"), ("m", "m"), ("n", "n"),
    ("o", "o"), ("p", "p"), ("q", "k"), ("r", "r"), ("s", "s"), ("t", "tx"), ("u", "a"),
    ("v", "v"), ("w", "ww"), ("x", "k s"), ("y", "y"), ("z", "z"),
    ("0", "z ii r ow"), ("1", "ww a n"), ("2", "tx uu"), ("3", "tf r ii"), ("4", "f aw r"),
    ("5", "f ai v"), ("6", "s i k s"), ("7", "s e v a n"), ("8", "ey tx"), ("9", "n ai n"),
]

ENGLISH_LEXICON = """
a a
about a b au tx
after aa f tx a r
again a g e n
all aw l
am ae m
and ae n dx
any e n ii
apple ae p a l
are aa r
at ae tx
bag b ae g
bank b ae ng k
bad b ae dx
be b ii
because b i k aw z
bill b i l
book b u k
bus b a s
but b a tx
busy b i z ii
call k aw l
can k ae n
car k aa r
cat k ae tx
cell s e l
chair c e r
class k l aa s
coffee k aw f ii
college k aw l e j
come k a m
computer k a m p y uu tx a r
could k u dx
day dx ey
did dx i dx
do dx uu
doctor dx aw k tx a r
does dx a z
done dx a n
dont dx ow n tx
email ii m ey l
english i ng g l i sh
evening ii v n i ng
exam i g z ae m
fine f ai n
for f aw r
friend f r e n dx
from f r aw m
get g e tx
go g ow
good g u dx
got g aw tx
great g r ey tx
happy h ae p ii
has h ae z
have h ae v
he h ii
hello h e l ow
help h e l p
here h ii r
hi h ai
home h ow m
hospital h aw s p i tx a l
hotel h ow tx e l
hour au a r
how h au
i ai
in i n
india i n dx i y aa
internet i n tx a r n e tx
is i z
it i tx
job j aw b
just j a s tx
know n ow
late l ey tx
later l ey tx a r
like l ai k
little l i tx a l
live l i v
lunch l a n c
make m ey k
market m aa r k e tx
me m ii
meeting m ii tx i ng
mobile m ow b ai l
money m a n ii
morning m aw r n i ng
movie m uu v ii
my m ai
name n ey m
need n ii dx
new n y uu
news n y uu z
nice n ai s
night n ai tx
no n ow
not n aw tx
now n au
number n a m b a r
of a v
office aw f i s
ok ow k
okay ow k ey
on aw n
online aw n l ai n
only ow n l ii
or aw r
party p aa r tx ii
people p ii p a l
phone f ow n
please p l ii z
problem p r aw b l a m
really r i y a l ii
right r ai tx
road r ow dx
room r uu m
said s e dx
school s k uu l
see s ii
shop sh aw p
so s ow
software s aw f tx ww e r
sorry s aw r ii
station s tx ey sh a n
student s tx y uu dx a n tx
sure sh uu r
system s i s tx a m
table tx ey b a l
take tx ey k
teacher tx ii c a r
thank tf ae ng k
thanks tf ae ng k s
that df ae tx
the df a
there df e r
they df ey
thing tf i ng
think tf i ng k
this df i s
ticket tx i k e tx
time tx ai m
to tx uu
today tx a dx ey
tomorrow tx a m aw r ow
train tx r ey n
very v e r ii
video v i dx i y ow
wait ww ey tx
want ww aw n tx
was ww aw z
watch ww aw c
water ww aw tx a r
way ww ey
we ww ii
weekend ww ii k e n dx
well ww e l
what ww aw tx
when ww e n
where ww e r
who h uu
why ww ai
will ww i l
with ww i df
work ww a r k
world ww a r l dx
yes y e s
you y uu
your y aw r
"""

# language -> (scripts whose tables feed the subset, labels excluded)
LANGUAGES: dict[str, tuple[list[str], set[str]]] = {
    "hi": (["Devanagari"], {"e", "o", "lx", "rx", "zh", "nd", "ae", "ae~"}),
    "mr": (["Devanagari"], {"e", "o", "rx", "zh", "nd"}),
    "sa": (["Devanagari"], {"e", "o", "rx", "zh", "nd", "ae", "ae~", "aw", "aw~",
                            "f", "z", "kq", "gq", "dxq", "dxhq"}),
    "ne": (["Devanagari"], {"e", "o", "lx", "rx", "zh", "nd", "ae", "ae~"}),
    "brx": (["Devanagari"], {"e", "o", "lx", "rx", "zh", "nd", "ae", "ae~"}),
    "raj": (["Devanagari"], {"e", "o", "rx", "zh", "nd", "ae", "ae~"}),
    "kok": (["Devanagari", "Kannada"], {"rx", "zh", "nd"}),
    "kok-north-canara": (["Devanagari", "Kannada"], {"rx", "zh", "nd"}),
    "kok-south-canara": (["Devanagari", "Kannada"], {"rx", "zh", "nd"}),
    "bn": (["Bengali"], {"w"}),
    "as": (["Bengali"], set()),
    "mni": (["Bengali"], {"w"}),
    "pa": (["Gurmukhi"], set()),
    "gu": (["Gujarati"], set()),
    "or": (["Oriya"], set()),
    "ta": (["Tamil"], set()),
    "te": (["Telugu"], {"zh"}),
    "kn": (["Kannada"], {"zh"}),
    "ml": (["Malayalam"], set()),
}

SCRIPT_LANGUAGES = [
    ("Devanagari", ["hi", "mr", "sa", "ne", "brx", "raj", "kok", "kok-north-canara", "kok-south-canara"]),
    ("Bengali", ["bn", "as", "mni"]),
    ("Gurmukhi", ["pa"]),
    ("Gujarati", ["gu"]),
    ("Oriya", ["or"]),
    ("Tamil", ["ta"]),
    ("Telugu", ["te"]),
    ("Kannada", ["kn", "kok", "kok-north-canara", "kok-south-canara"]),
    ("Malayalam", ["ml", "kok"]),
    ("Latin", ["en"]),
]

DELETE_FINAL_SCHWA = {"hi", "mr", "ne", "raj", "kok", "kok-north-canara", "kok-south-canara"}

SIMILARITY = [
    ("sa", ["te", "kn"]),
    ("kok", ["mr"]),
    ("kok-north-canara", ["mr", "kn"]),
    ("kok-south-canara", ["kn", "mr"]),
]

VOICES = ["as", "bn", "brx", "gu", "hi", "kn", "ml", "mni", "mr", "or", "raj", "ta", "te"]


def nasalize_directives(script: str, emitted: set[str]) -> list[str]:
    if script not in NASALIZING:
        return []
    return [f"@nasalize\t{v}\t{v}~" for v in NASALIZABLE if v in emitted]


def main() -> None:
    (DATA / "scripts").mkdir(parents=True, exist_ok=True)
    table_labels: dict[str, set[str]] = {}
    for script in SCRIPTS:
        rules = script_rules(script)
        labels = {lab for _, _, ls, _ in rules for lab in ls.split()}
        labels.add("a")
        lines = [
            f"# {script} grapheme table: HEXCP[+HEXCP]<TAB>Class<TAB>labels",
            "# regenerated by tools/build_tables.py; trailing fields after labels are comments",
            "@inherent\ta",
        ]
        nas = nasalize_directives(script, labels)
        lines += nas
        labels |= {d.split("\t")[2] for d in nas}
        for key, cls, labs, note in rules:
            lines.append(f"{key}\t{cls}\t{labs}\t# {note}")
        (DATA / "scripts" / f"{script.lower()}.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
        table_labels[script] = labels

    lex = [ln.split(" ", 1) for ln in ENGLISH_LEXICON.strip().splitlines()]
    en_labels = {lab for _, labs in lex for lab in labs.split()}
    en_labels |= {lab for _, labs in ENGLISH_LETTERS for lab in labs.split()}
    (DATA / "english_lexicon.tsv").write_text(
        "# word<TAB>labels\n" + "".join(f"{w}\t{l}\n" for w, l in lex), encoding="utf-8")
    (DATA / "english_letters.tsv").write_text(
        "# letter-to-sound fallback: grapheme<TAB>labels (longest match wins)\n"
        + "".join(f"{g}\t{l}\n" for g, l in ENGLISH_LETTERS), encoding="utf-8")

    known = {p[0] for p in PHONES}
    inv = ["# CLS phone inventory", "# label<TAB>category<TAB>features",
           "# @weight<TAB>field<TAB>rational ; @place<TAB>place<TAB>position ; @lang<TAB>code<TAB>labels"]
    inv += [f"@weight\t{f}\t{w}" for f, w in WEIGHTS]
    inv += [f"@place\t{p}\t{v}" for p, v in PLACE_POSITIONS]
    inv += [f"{l}\t{c}\t{f}" for l, c, f in PHONES]
    subsets = {}
    for lang, (scripts, excl) in LANGUAGES.items():
        labs = set().union(*(table_labels[s] for s in scripts)) - excl
        subsets[lang] = labs
    subsets["en"] = en_labels
    order = [p[0] for p in PHONES]
    for lang in sorted(subsets):
        labs = subsets[lang]
        missing = labs - known
        assert not missing, (lang, missing)
        inv.append(f"@lang\t{lang}\t" + ",".join(l for l in order if l in labs))
    (DATA / "cls_inventory.tsv").write_text("\n".join(inv) + "\n", encoding="utf-8")

    (DATA / "script_languages.tsv").write_text(
        "# script<TAB>language ; the first row per script is the default language\n"
        + "".join(f"{s}\t{l}\n" for s, ls in SCRIPT_LANGUAGES for l in ls), encoding="utf-8")
    langs = sorted({l for _, ls in SCRIPT_LANGUAGES for l in ls})
    (DATA / "schwa.tsv").write_text(
        "# language<TAB>delete-final-schwa|retain\n"
        + "".join(f"{l}\t{'delete-final-schwa' if l in DELETE_FINAL_SCHWA else 'retain'}\n" for l in langs),
        encoding="utf-8")
    (DATA / "similarity.tsv").write_text(
        "# language<TAB>preferred voice languages, most preferred first\n"
        + "".join(f"{l}\t{','.join(p)}\n" for l, p in SIMILARITY), encoding="utf-8")
    (DATA / "voices.tsv").write_text(
        "# voice_id<TAB>language<TAB>inventory (- = language subset of the CLS inventory)<TAB>sample_rate<TAB>bit_depth\n"
        + "".join(f"{l}_indictts\t{l}\t-\t48000\t16\n" for l in VOICES), encoding="utf-8")
    cfg = ["# pipeline configuration: key<TAB>value, paths relative to this file",
           "inventory\tcls_inventory.tsv"]
    cfg += [f"table.{s}\tscripts/{s.lower()}.tsv" for s in SCRIPTS]
    cfg += ["lexicon\tenglish_lexicon.tsv", "letters\tenglish_letters.tsv",
            "script_map\tscript_languages.tsv", "schwa\tschwa.tsv",
            "similarity\tsimilarity.tsv", "voices\tvoices.tsv",
            "primary_language\thi", "policy\tnearest", "anusvara\tgeneric"]
    (DATA / "default.cfg").write_text("\n".join(cfg) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
