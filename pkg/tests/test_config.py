from __future__ import annotations

import os
import shutil

import pytest

from clsfront.config import (
    build_pipeline,
    default_config_path,
    load_config,
    load_pipeline,
    parse_config,
)
from clsfront.errors import ConfigError
from clsfront.mapper import SubstitutionPolicy
from clsfront.parser import SchwaPolicy
from clsfront.segmenter import ScriptTag
from tests.oracles import DATA

BASE = ("inventory\tinv.tsv\nlexicon\tlex.tsv\nletters\tlet.tsv\nscript_map\tmap.tsv\nsimilarity\tsim.tsv\n"
        "voices\tvoices.tsv\ntable.Devanagari\tdev.tsv\n")


@pytest.fixture
def data_copy(tmp_path):
    dst = tmp_path / "data"
    shutil.copytree(DATA, dst)
    return dst


class TestParseConfig:
    def test_minimal(self):
        cfg = parse_config(BASE, "/base")
        assert cfg.inventory == os.path.join("/base", "inv.tsv")
        assert cfg.tables == {ScriptTag.DEVANAGARI: os.path.join("/base", "dev.tsv")}
        assert cfg.policy is SubstitutionPolicy.NEAREST and cfg.primary_language == "hi"
        assert cfg.schwa is None and cfg.overrides is None

    def test_switches(self):
        cfg = parse_config(BASE + "policy\tdrop\nprimary_language\tsa\nschwa.sa\tdelete-final-schwa\n"
                                  "anusvara\tassimilate\n", "/b")
        assert cfg.policy is SubstitutionPolicy.DROP
        assert cfg.primary_language == "sa"
        assert cfg.schwa_overrides == {"sa": SchwaPolicy.DELETE_FINAL}
        assert cfg.anusvara == "assimilate"

    @pytest.mark.parametrize("extra, needle", [
        ("colour\tred\n", "unknown key"),
        ("inventory\tother.tsv\n", "duplicate"),
        ("table.Klingon\tk.tsv\n", "unknown script"),
        ("table.Devanagari\tagain.tsv\n", "duplicate"),
        ("table.Latin\tl.tsv\n", "bad or duplicate"),
        ("policy\tnearestish\n", "unknown policy"),
        ("schwa.hi\tsometimes\n", "unknown schwa policy"),
        ("anusvara\tloud\n", "unknown anusvara"),
        ("lexicon\n", "key<TAB>value"),
    ])
    def test_errors(self, extra, needle):
        with pytest.raises(ConfigError, match=needle):
            parse_config(BASE + extra, "/b")

    def test_missing_keys(self):
        with pytest.raises(ConfigError, match="missing config keys: voices"):
            parse_config(BASE.replace("voices\tvoices.tsv\n", ""), "/b")

    def test_no_tables(self):
        with pytest.raises(ConfigError, match="no script tables"):
            parse_config(BASE.replace("table.Devanagari\tdev.tsv\n", ""), "/b")


class TestLoad:
    def test_default_config_is_bundled(self):
        assert os.path.isfile(default_config_path())
        cfg = load_config()
        assert set(cfg.tables) == {s for s in ScriptTag if s not in (ScriptTag.LATIN, ScriptTag.NEUTRAL)}

    def test_default_pipeline_loads(self, pipeline):
        assert len(pipeline.voices) == 13
        assert pipeline.inventory is pipeline.frontend.inventory

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(str(tmp_path / "nope.cfg"))

    def test_fail_fast_on_missing_table(self, data_copy):
        os.remove(data_copy / "scripts" / "tamil.tsv")
        with pytest.raises(ConfigError, match="tamil.tsv"):
            load_pipeline(str(data_copy / "default.cfg"))

    def test_fail_fast_on_bad_table_row(self, data_copy):
        path = data_copy / "scripts" / "telugu.tsv"
        path.write_text(path.read_text(encoding="utf-8") + "0C15\tConsonant\tqq\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="telugu.tsv.*'qq'"):
            load_pipeline(str(data_copy / "default.cfg"))

    def test_overrides_file(self, data_copy):
        (data_copy / "ov.tsv").write_text("zh\tr\n", encoding="utf-8")
        cfg_path = data_copy / "default.cfg"
        cfg_path.write_text(cfg_path.read_text(encoding="utf-8") + "overrides\tov.tsv\n", encoding="utf-8")
        assert load_pipeline(str(cfg_path)).overrides == {"zh": "r"}

    def test_schwa_override_applies(self, data_copy):
        cfg_path = data_copy / "default.cfg"
        cfg_path.write_text(cfg_path.read_text(encoding="utf-8") + "schwa.hi\tretain\n", encoding="utf-8")
        pipe = build_pipeline(load_config(str(cfg_path)))
        assert pipe.frontend.parse("कमल", "hi").tokens[-1] == "a"
