"""Pipeline configuration: one ``key<TAB>value`` file naming every data table."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Mapping

from clsfront.errors import ConfigError, FrontendError
from clsfront.inventory import ClsInventory, load_inventory
from clsfront.mapper import SubstitutionPolicy, load_overrides
from clsfront.parser import (
    Frontend,
    SchwaConfig,
    SchwaPolicy,
    load_latin_rules,
    load_schwa_config,
    load_script_table,
)
from clsfront.router import SimilarityTable, VoiceProfile, load_similarity, load_voice_manifest, read_relative
from clsfront.segmenter import ScriptTag, load_script_language_map

ANUSVARA_MODES = ("generic", "assimilate")
_PATH_KEYS = ("inventory", "lexicon", "letters", "script_map", "schwa", "similarity", "voices")
_REQUIRED = ("inventory", "lexicon", "letters", "script_map", "similarity", "voices")


@dataclass(frozen=True)
class PipelineConfig:
    """Resolved paths and switches; paths are absolute."""

    inventory: str
    tables: Mapping[ScriptTag, str]
    lexicon: str
    letters: str
    script_map: str
    similarity: str
    voices: str
    schwa: str | None = None
    overrides: str | None = None
    primary_language: str = "hi"
    schwa_overrides: Mapping[str, SchwaPolicy] = field(default_factory=dict)
    policy: SubstitutionPolicy = SubstitutionPolicy.NEAREST
    anusvara: str = "generic"


def default_config_path() -> str:
    return str(resources.files("clsfront") / "data" / "default.cfg")


def parse_config(text: str, base_dir: str) -> PipelineConfig:
    """Parse config text; relative paths resolve against ``base_dir``.

    Keys: inventory, table.<Script>, lexicon, letters, script_map, schwa,
    similarity, voices, overrides, primary_language, schwa.<lang>, policy,
    anusvara.
    """
    values: dict[str, str] = {}
    tables: dict[ScriptTag, str] = {}
    schwa_overrides: dict[str, SchwaPolicy] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = raw.partition("\t")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigError("expected key<TAB>value", line=lineno)
        if key.startswith("table."):
            try:
                script = ScriptTag(key[len("table."):])
            except ValueError:
                raise ConfigError(f"unknown script in {key!r}", line=lineno) from None
            if script in (ScriptTag.LATIN, ScriptTag.NEUTRAL) or script in tables:
                raise ConfigError(f"bad or duplicate key {key!r}", line=lineno)
            tables[script] = os.path.join(base_dir, value)
        elif key.startswith("schwa."):
            try:
                schwa_overrides[key[len("schwa."):]] = SchwaPolicy(value)
            except ValueError:
                raise ConfigError(f"unknown schwa policy {value!r}", line=lineno) from None
        elif key in (*_PATH_KEYS, "overrides", "primary_language", "policy", "anusvara"):
            if key in values:
                raise ConfigError(f"duplicate key {key!r}", line=lineno)
            values[key] = os.path.join(base_dir, value) if key in (*_PATH_KEYS, "overrides") else value
        else:
            raise ConfigError(f"unknown key {key!r}", line=lineno)
    missing = [k for k in _REQUIRED if k not in values]
    if missing:
        raise ConfigError(f"missing config keys: {', '.join(missing)}")
    if not tables:
        raise ConfigError("no script tables configured")
    try:
        policy = SubstitutionPolicy(values.get("policy", "nearest"))
    except ValueError:
        raise ConfigError(f"unknown policy {values['policy']!r}") from None
    anusvara = values.get("anusvara", "generic")
    if anusvara not in ANUSVARA_MODES:
        raise ConfigError(f"unknown anusvara mode {anusvara!r}")
    return PipelineConfig(
        inventory=values["inventory"],
        tables=MappingProxyType(tables),
        lexicon=values["lexicon"],
        letters=values["letters"],
        script_map=values["script_map"],
        similarity=values["similarity"],
        voices=values["voices"],
        schwa=values.get("schwa"),
        overrides=values.get("overrides"),
        primary_language=values.get("primary_language", "hi"),
        schwa_overrides=MappingProxyType(schwa_overrides),
        policy=policy,
        anusvara=anusvara,
    )


def load_config(path: str | None = None) -> PipelineConfig:
    path = path or default_config_path()
    text = _read(path)
    return parse_config(text, os.path.dirname(os.path.abspath(path)))


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None


@dataclass(frozen=True)
class Pipeline:
    """Everything loaded and validated, ready to process utterances."""

    config: PipelineConfig
    frontend: Frontend
    voices: tuple[VoiceProfile, ...]
    similarity: SimilarityTable
    overrides: Mapping[str, str]

    @property
    def inventory(self) -> ClsInventory:
        return self.frontend.inventory


def _load(path: str, loader, *args):
    try:
        return loader(_read(path), *args)
    except ConfigError:
        raise
    except FrontendError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def build_pipeline(config: PipelineConfig) -> Pipeline:
    """Load every table named by ``config``; any failure is a ConfigError."""
    inv = _load(config.inventory, load_inventory)
    tables = {script: _load(path, lambda text, s=script: load_script_table(s, text, inv))
              for script, path in config.tables.items()}
    latin_text = (_read(config.lexicon), _read(config.letters))
    try:
        latin = load_latin_rules(*latin_text, inv)
    except FrontendError as exc:
        raise ConfigError(f"{config.lexicon} / {config.letters}: {exc}") from None
    script_map = _load(config.script_map, load_script_language_map)
    schwa = _load(config.schwa, load_schwa_config) if config.schwa else SchwaConfig()
    schwa = schwa.with_overrides(config.schwa_overrides)
    similarity = _load(config.similarity, load_similarity)
    voices = _load(config.voices, load_voice_manifest, inv, read_relative(os.path.dirname(config.voices)))
    overrides = _load(config.overrides, load_overrides, inv) if config.overrides else {}
    frontend = Frontend(
        inventory=inv,
        tables=MappingProxyType(tables),
        latin=latin,
        script_map=script_map,
        schwa=schwa,
        assimilate_anusvara=config.anusvara == "assimilate",
    )
    return Pipeline(config, frontend, tuple(voices), similarity, MappingProxyType(overrides))


def load_pipeline(path: str | None = None) -> Pipeline:
    return build_pipeline(load_config(path))


def default_pipeline() -> Pipeline:
    return load_pipeline(None)
