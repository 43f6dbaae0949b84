from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clsfront.errors import InventoryError
from clsfront.inventory import (
    DEFAULT_WEIGHTS,
    ClsPhone,
    DistanceWeights,
    PhoneFeatures,
    check_labels,
    dump_inventory,
    feature_distance,
    load_inventory,
    phones_for_language,
)
from tests.oracles import DATA, raw_inventory

K_ROW = "k\tconsonant\tplace=velar,manner=stop,voiced=false,aspirated=false"
A_ROW = "a\tvowel\tlength=short,vowel_height=mid,vowel_backness=central,voiced=true"


class TestLoad:
    def test_empty_table(self):
        with pytest.raises(InventoryError, match="no phones defined"):
            load_inventory("")

    def test_comments_only_is_empty(self):
        with pytest.raises(InventoryError, match="no phones defined"):
            load_inventory("# nothing here\n\n")

    def test_two_phones(self):
        inv = load_inventory(f"{A_ROW}\n{K_ROW}\n")
        assert len(inv) == 2
        assert inv["k"].features.place == "velar"

    def test_duplicate_label_reported_at_second_line(self):
        with pytest.raises(InventoryError) as exc:
            load_inventory(f"{K_ROW}\n{K_ROW}\n")
        assert exc.value.line == 2
        assert "duplicate" in str(exc.value)

    @pytest.mark.parametrize("row, needle", [
        ("k\tconsonant\tplace=uvular,manner=stop", "uvular"),
        ("k\tconsonant\tplace=velar,manner=stop,colour=red", "colour"),
        ("k\tconsonant\tplace=velar,manner=stop,voiced=maybe", "maybe"),
        ("k\tconsonat\tplace=velar,manner=stop", "consonat"),
        ("k", "expected"),
        ("k\tconsonant\tplace=velar", "place and a manner"),
        ("e\tvowel\tplace=velar,length=short", "vowels take no place"),
        ("k#\tconsonant\tplace=velar,manner=stop", "'#'"),
        ("@bogus\tx", "unknown directive"),
    ])
    def test_malformed_rows_carry_line(self, row, needle):
        with pytest.raises(InventoryError) as exc:
            load_inventory(f"{A_ROW}\n{row}\n")
        assert exc.value.line == 2
        assert needle in str(exc.value)

    def test_unknown_label_in_language_row(self):
        with pytest.raises(InventoryError) as exc:
            load_inventory(f"{A_ROW}\n@lang\thi\ta,q\n")
        assert exc.value.line == 2
        assert "'q'" in str(exc.value)

    def test_identical_bundles_rejected(self):
        with pytest.raises(InventoryError, match="identical features"):
            load_inventory(f"{K_ROW}\n{K_ROW.replace('k', 'q', 1)}\n")

    @pytest.mark.parametrize("row", ["@weight\tplace\t0", "@weight\tplace\t-1", "@weight\tplace\t200",
                                     "@weight\tcolour\t1", "@weight\tplace\tabc"])
    def test_bad_weights(self, row):
        with pytest.raises(InventoryError):
            load_inventory(f"{A_ROW}\n{row}\n")

    def test_weights_and_places_override(self):
        inv = load_inventory(f"{K_ROW}\n@weight\taspirated\t3/2\n@place\tvelar\t10\n")
        assert inv.weights["aspirated"] == Fraction(3, 2)
        assert inv.weights.place_positions["velar"] == 10

    def test_duplicate_place_positions_rejected(self):
        with pytest.raises(InventoryError, match="distinct"):
            load_inventory(f"{K_ROW}\n@place\tvelar\t0\n")

    def test_load_order_irrelevant(self):
        rows = [A_ROW, K_ROW, "@lang\thi\ta,k", "@weight\tplace\t5"]
        assert load_inventory("\n".join(rows)) == load_inventory("\n".join(reversed(rows)))


class TestBundled:
    def test_every_language_row_resolves(self, inv):
        for lang, labels in inv.per_language.items():
            assert labels <= inv.labels, lang

    def test_round_trip(self, inv):
        again = load_inventory(dump_inventory(inv))
        assert again == inv
        assert dump_inventory(again) == dump_inventory(inv)

    def test_hindi_subset_matches_file_row(self, inv):
        raw = raw_inventory()
        hi = phones_for_language(inv, "hi")
        assert {p.label for p in hi} == set(raw.langs["hi"])
        assert all(isinstance(p, ClsPhone) for p in hi)

    def test_english_only_phones_present(self, inv):
        for lab in ("ae", "ow", "ww", "tf", "df", "z", "f"):
            assert lab in inv

    def test_superset_size_matches_rows(self, inv):
        raw = raw_inventory()
        assert len(inv) == len(raw.phones)


class TestPhonesForLanguage:
    def test_empty_subset(self):
        inv = load_inventory(f"{A_ROW}\n@lang\txx\t\n")
        assert phones_for_language(inv, "xx") == frozenset()

    def test_five_label_subset(self):
        rows = [A_ROW, K_ROW,
                "g\tconsonant\tplace=velar,manner=stop,voiced=true",
                "m\tconsonant\tplace=bilabial,manner=nasal,voiced=true",
                "s\tconsonant\tplace=alveolar,manner=fricative",
                "@lang\thi\ta,k,g,m,s"]
        got = phones_for_language(load_inventory("\n".join(rows)), "hi")
        assert sorted(p.label for p in got) == ["a", "g", "k", "m", "s"]

    def test_undeclared_language(self, inv):
        with pytest.raises(InventoryError, match="zz"):
            phones_for_language(inv, "zz")

    def test_check_labels(self, inv):
        check_labels(inv, ["a", "k"])
        with pytest.raises(InventoryError, match="'q'"):
            check_labels(inv, ["a", "q"])


class TestDistance:
    def test_identity(self, inv):
        assert inv.distance("k", "k") == 0

    def test_aspiration_only(self, inv):
        assert inv.distance("k", "kh") == inv.weights["aspirated"] == DEFAULT_WEIGHTS["aspirated"]

    def test_retroflex_closer_to_dental_than_velar(self, inv):
        raw = raw_inventory()
        pairs = {("tx", "t"), ("tx", "k"), ("t", "k")}
        brute = {p: raw.distance(*p) for p in pairs}
        assert {p: inv.distance(*p) for p in pairs} == brute
        assert brute[("tx", "t")] < brute[("tx", "k")]

    def test_ordinal_places_tie(self):
        # with evenly spaced places retroflex sits as far from dental as from velar
        w = DistanceWeights()
        tx = ClsPhone("tx", PhoneFeatures("consonant", place="retroflex", manner="stop"))
        t = ClsPhone("t", PhoneFeatures("consonant", place="dental", manner="stop"))
        k = ClsPhone("k", PhoneFeatures("consonant", place="velar", manner="stop"))
        assert feature_distance(tx, t, w) == feature_distance(tx, k, w) == 8

    def test_cross_category_dominates(self, inv):
        vowels = [lab for lab in inv.labels if inv[lab].features.category == "vowel"]
        cons = [lab for lab in inv.labels if inv[lab].features.category == "consonant"]
        worst_within = max(inv.distance(a, b) for a, b in combinations(cons, 2))
        best_across = min(inv.distance(v, c) for v in vowels for c in cons)
        assert best_across >= inv.weights["category"]
        assert worst_within < best_across

    def test_matches_oracle_everywhere(self, inv):
        raw = raw_inventory()
        labels = sorted(inv.labels)
        for a in labels:
            for b in labels:
                assert inv.distance(a, b) == raw.distance(a, b), (a, b)

    def test_datafile_is_where_oracle_reads(self):
        assert (DATA / "cls_inventory.tsv").is_file()


labels_st = st.sampled_from(sorted(raw_inventory().phones))


class TestDistanceProperties:
    @settings(max_examples=500, deadline=None)
    @given(labels_st, labels_st)
    def test_symmetric_and_positive(self, inv, a, b):
        d = inv.distance(a, b)
        assert d == inv.distance(b, a)
        assert (d == 0) == (a == b)
        assert d >= 0
