"""Tokenization and leftmost-longest gazetteer matching.

Matching works on token sequences, never raw substrings, so ``ARC`` can
match the word "arc" but never the inside of "march". Context is ignored:
"FAA regulations" still yields an FAA mention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from scnet.gazetteer import Gazetteer
    from scnet.ingestion import DocumentRecord

LABEL = "stakeholder"

SEPARATORS = ".,/();:'\"-&"
_TOKEN_RE = re.compile(r"[^\s" + re.escape(SEPARATORS) + r"]+")


@dataclass(frozen=True)
class Token:
    text: str
    start_char: int
    end_char: int


@dataclass(frozen=True)
class Mention:
    """A matched gazetteer phrase, linked to its canonical stakeholder ID.

    ``token_span`` is inclusive on both ends. ``start_char``/``end_char``
    index into the original document text, and ``matched_surface`` is that
    slice verbatim.
    """

    doc_id: str
    token_span: tuple[int, int]
    matched_surface: str
    stakeholder_id: str
    start_char: int
    end_char: int
    label: str = LABEL


def tokenize(text: str) -> list[Token]:
    """Split on whitespace and on ``. , / ( ) ; : ' " - &``, lowercasing each token.

    Offsets refer to ``text`` as given; lowercasing happens per token so
    that characters whose lowercase form has a different length cannot
    shift them.
    """
    return [Token(m.group().lower(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def match_entities(
    tokens: Sequence[Token],
    g: Gazetteer,
    *,
    doc_id: str = "",
    text: str | None = None,
) -> list[Mention]:
    """Scan ``tokens`` left to right, taking the longest gazetteer phrase at each position.

    After a match the scan resumes at the token following it, so mentions
    never overlap. Pass the source ``text`` to record the matched surface
    verbatim; otherwise the matched tokens are joined with spaces.
    """
    root = g.trie
    mentions: list[Mention] = []
    n = len(tokens)
    i = 0
    while i < n:
        node = root
        best_end = -1
        best_id = None
        j = i
        while j < n:
            node = node.children.get(tokens[j].text)
            if node is None:
                break
            if node.stakeholder_id is not None:
                best_end, best_id = j, node.stakeholder_id
            j += 1
        if best_id is None:
            i += 1
            continue
        start, end = tokens[i].start_char, tokens[best_end].end_char
        surface = text[start:end] if text is not None else " ".join(t.text for t in tokens[i : best_end + 1])
        mentions.append(Mention(doc_id, (i, best_end), surface, best_id, start, end))
        i = best_end + 1
    return mentions


def extract_stakeholders(doc: DocumentRecord, g: Gazetteer) -> tuple[frozenset[str], list[Mention]]:
    """Return the distinct stakeholder IDs named in ``doc.text`` and every mention."""
    mentions = match_entities(tokenize(doc.text), g, doc_id=doc.doc_id, text=doc.text)
    return frozenset(m.stakeholder_id for m in mentions), mentions
