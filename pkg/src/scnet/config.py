"""Pipeline configuration.

The config file is flat ``key = value`` text (``#`` starts a comment).
Relative paths are resolved against the directory holding the file.
Recognised keys::

    documents      work-order file (delimited text with a header row)
    gazetteer      dictionary file with header surface,stakeholder_id
    gold           optional gold file with header doc_id,stakeholder_id
    id_column      default: id
    date_column    default: date
    agency_column  default: agency
    text_column    default: sow
    date_format    "iso" (default) or a strptime pattern such as %m/%d/%Y
    delimiter      default: ,   (use \\t for tab)
    strict         true (default) aborts on bad dates; false skips those rows
    from, to       inclusive ISO dates bounding the analysis window
    output_dir     default: scn_out
    formats        comma list from nodes-csv, edges-csv, mentions-csv, graphml, dot
    jobs           worker processes used for extraction (default 1)
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from datetime import date
from pathlib import Path
from typing import Mapping

from scnet.errors import ConfigError
from scnet.ingestion import ColumnMapping, DateRange

EXPORT_FORMATS = ("nodes-csv", "edges-csv", "mentions-csv", "graphml", "dot")
DEFAULT_FORMATS = ("nodes-csv", "edges-csv", "mentions-csv")

_PATH_KEYS = {"documents", "gazetteer", "gold", "output_dir"}
_MAPPING_KEYS = {"id_column", "date_column", "agency_column", "text_column", "date_format"}
KEYS = _PATH_KEYS | _MAPPING_KEYS | {"delimiter", "strict", "from", "to", "formats", "jobs"}


@dataclass(frozen=True)
class PipelineConfig:
    documents_path: Path | None = None
    gazetteer_path: Path | None = None
    gold_path: Path | None = None
    column_mapping: ColumnMapping = field(default_factory=ColumnMapping)
    date_range: DateRange | None = None
    output_dir: Path = Path("scn_out")
    export_formats: tuple[str, ...] = DEFAULT_FORMATS
    delimiter: str = ","
    strict: bool = True
    jobs: int = 1

    def require_inputs(self, *, gold: bool = False) -> None:
        """Raise ``ConfigError`` unless the input files needed for a run exist."""
        needed = {"documents": self.documents_path, "gazetteer": self.gazetteer_path}
        if gold:
            needed["gold"] = self.gold_path
        for key, path in needed.items():
            if path is None:
                raise ConfigError(f"no {key} file configured")
            if not path.is_file():
                raise ConfigError(f"{key} file not found: {path}")


def parse_formats(value: str) -> tuple[str, ...]:
    formats = tuple(dict.fromkeys(f.strip() for f in value.split(",") if f.strip()))
    unknown = [f for f in formats if f not in EXPORT_FORMATS]
    if unknown:
        raise ConfigError(f"unknown export format(s) {unknown}; choose from {EXPORT_FORMATS}")
    return formats


def _parse_bool(key: str, value: str) -> bool:
    v = value.strip().lower()
    if v in {"1", "true", "yes", "on"}:
        return True
    if v in {"0", "false", "no", "off"}:
        return False
    raise ConfigError(f"{key}: expected a boolean, got {value!r}")


def _parse_day(key: str, value: str) -> date:
    try:
        return date.fromisoformat(value.strip())
    except ValueError:
        raise ConfigError(f"{key}: expected an ISO date (YYYY-MM-DD), got {value!r}") from None


def apply_settings(
    config: PipelineConfig,
    settings: Mapping[str, str | None],
    base_dir: Path | None = None,
) -> PipelineConfig:
    """Overlay string ``settings`` (config-file or CLI values) onto ``config``.

    ``None`` values are ignored so unset CLI flags fall through.
    """
    settings = {k: v for k, v in settings.items() if v is not None}
    unknown = sorted(set(settings) - KEYS)
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")

    def path(v: str) -> Path:
        p = Path(v).expanduser()
        return p if p.is_absolute() or base_dir is None else base_dir / p

    changes: dict[str, object] = {}
    for key, attr in (
        ("documents", "documents_path"),
        ("gazetteer", "gazetteer_path"),
        ("gold", "gold_path"),
        ("output_dir", "output_dir"),
    ):
        if key in settings:
            changes[attr] = path(settings[key])
    mapping_changes = {
        ("doc_id_column" if k == "id_column" else k): settings[k] for k in _MAPPING_KEYS if k in settings
    }
    if mapping_changes:
        changes["column_mapping"] = replace(config.column_mapping, **mapping_changes)
    if "delimiter" in settings:
        delim = settings["delimiter"].replace("\\t", "\t")
        if len(delim) != 1:
            raise ConfigError(f"delimiter must be one character, got {settings['delimiter']!r}")
        changes["delimiter"] = delim
    if "strict" in settings:
        changes["strict"] = _parse_bool("strict", settings["strict"])
    if "formats" in settings:
        changes["export_formats"] = parse_formats(settings["formats"])
    if "jobs" in settings:
        try:
            jobs = int(settings["jobs"])
        except ValueError:
            raise ConfigError(f"jobs must be an integer, got {settings['jobs']!r}") from None
        if jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {jobs}")
        changes["jobs"] = jobs
    if "from" in settings or "to" in settings:
        old = config.date_range
        start = _parse_day("from", settings["from"]) if "from" in settings else (old.start if old else None)
        end = _parse_day("to", settings["to"]) if "to" in settings else (old.end if old else None)
        if start is None or end is None:
            raise ConfigError("a date range needs both 'from' and 'to'")
        changes["date_range"] = DateRange(start, end)
    return replace(config, **changes)


def read_config_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#",), inline_comment_prefixes=("#",))
    parser.optionxform = str
    try:
        parser.read_string("[scnet]\n" + path.read_text(encoding="utf-8"), source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return dict(parser["scnet"])


def load_config(path: str | Path | None = None, overrides: Mapping[str, str | None] | None = None) -> PipelineConfig:
    """Build a config from an optional file, then apply CLI-style overrides."""
    config = PipelineConfig()
    if path is not None:
        config = apply_settings(config, read_config_file(path), base_dir=Path(path).resolve().parent)
    if overrides:
        config = apply_settings(config, overrides)
    return config
