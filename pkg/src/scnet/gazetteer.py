"""Stakeholder dictionary: surface forms linked to canonical stakeholder IDs.

A full agency name and its abbreviation share one ID, so both
"Federal Emergency Management Agency" and "FEMA" resolve to ``FEMA``.
IDs are upper-cased on construction, which keeps ``DoD`` and ``DOD``
from turning into two nodes.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from scnet.errors import ConfigError, GazetteerConflictError, RowError
from scnet.matcher import tokenize

logger = logging.getLogger(__name__)

HEADER = ("surface", "stakeholder_id")


def normalize_surface(s: str) -> tuple[str, ...]:
    """Lowercased token sequence used as the lookup key for a surface form."""
    return tuple(t.text for t in tokenize(s))


@dataclass(frozen=True)
class GazetteerEntry:
    surface: str
    stakeholder_id: str

    def __post_init__(self) -> None:
        if not normalize_surface(self.surface):
            raise ValueError(f"surface {self.surface!r} has no tokens after normalization")
        sid = self.stakeholder_id.strip()
        if not sid or any(ch.isspace() for ch in sid):
            raise ValueError(f"stakeholder_id {self.stakeholder_id!r} must be non-empty without whitespace")
        object.__setattr__(self, "stakeholder_id", sid.upper())

    @property
    def key(self) -> tuple[str, ...]:
        return normalize_surface(self.surface)


class _TrieNode:
    __slots__ = ("children", "stakeholder_id")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.stakeholder_id: str | None = None


@dataclass(frozen=True, eq=False)
class Gazetteer:
    """Validated, immutable dictionary. Build with :meth:`from_entries`."""

    entries: tuple[GazetteerEntry, ...]
    index: Mapping[tuple[str, ...], str] = field(repr=False)

    @classmethod
    def from_entries(cls, entries: Iterable[GazetteerEntry]) -> Gazetteer:
        """Deduplicate and validate ``entries``.

        Entries whose normalized surface repeats with the same ID are dropped
        with a warning. A repeat with a different ID raises
        ``GazetteerConflictError`` naming every conflicting pair.
        """
        kept: list[GazetteerEntry] = []
        index: dict[tuple[str, ...], str] = {}
        first: dict[tuple[str, ...], GazetteerEntry] = {}
        conflicts: list[str] = []
        dupes = 0
        for e in entries:
            key = e.key
            prev = first.get(key)
            if prev is None:
                first[key] = e
                index[key] = e.stakeholder_id
                kept.append(e)
            elif prev.stakeholder_id == e.stakeholder_id:
                dupes += 1
            else:
                conflicts.append(
                    f"{prev.surface!r} -> {prev.stakeholder_id} vs {e.surface!r} -> {e.stakeholder_id}"
                )
        if conflicts:
            raise GazetteerConflictError("conflicting surfaces: " + "; ".join(conflicts))
        if dupes:
            logger.warning("dropped %d duplicate gazetteer entr%s", dupes, "y" if dupes == 1 else "ies")
        return cls(tuple(kept), MappingProxyType(index))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gazetteer):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __reduce__(self):
        return (Gazetteer.from_entries, (self.entries,))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def surface_count(self) -> int:
        return len(self.entries)

    @property
    def stakeholder_ids(self) -> frozenset[str]:
        return frozenset(self.index.values())

    @property
    def id_count(self) -> int:
        return len(self.stakeholder_ids)

    def surfaces_for(self, stakeholder_id: str) -> list[str]:
        sid = stakeholder_id.upper()
        return [e.surface for e in self.entries if e.stakeholder_id == sid]

    def lookup(self, tokens: Sequence[str]) -> str | None:
        return self.index.get(tuple(tokens))

    @cached_property
    def trie(self) -> _TrieNode:
        """Token trie over every normalized surface, built on first use."""
        root = _TrieNode()
        for key, sid in self.index.items():
            node = root
            for tok in key:
                node = node.children.setdefault(tok, _TrieNode())
            node.stakeholder_id = sid
        return root


def add_entry(g: Gazetteer, e: GazetteerEntry) -> Gazetteer:
    """Return a new gazetteer that also contains ``e``.

    Re-adding a surface with its existing ID returns ``g`` itself.
    """
    existing = g.index.get(e.key)
    if existing == e.stakeholder_id:
        return g
    if existing is not None:
        raise GazetteerConflictError(
            f"surface {e.surface!r} already linked to {existing}, cannot link to {e.stakeholder_id}"
        )
    return Gazetteer.from_entries((*g.entries, e))


def load_gazetteer(path: str | Path, *, delimiter: str = ",") -> Gazetteer:
    path = Path(path)
    entries = []
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        header = reader.fieldnames or []
        for column in HEADER:
            if column not in header:
                raise ConfigError(f"{path}: gazetteer header must contain {column!r} (got {header})")
        for row in reader:
            try:
                entries.append(GazetteerEntry(row["surface"] or "", row["stakeholder_id"] or ""))
            except ValueError as exc:
                raise RowError(str(exc), path=path, row=reader.line_num) from None
    g = Gazetteer.from_entries(entries)
    logger.info("%s: %d surfaces, %d stakeholder IDs", path, g.surface_count, g.id_count)
    return g


def write_gazetteer(g: Gazetteer, path: str | Path, *, delimiter: str = ",") -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows((e.surface, e.stakeholder_id) for e in g.entries)
