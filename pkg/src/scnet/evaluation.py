"""Extraction quality against hand-labelled gold annotations.

Two views are reported side by side:

* ``count_ratio`` -- total extracted mentions divided by total desired
  mentions. It compares totals only, so a missed FEMA and a spurious FAA
  cancel out.
* precision / recall / F1 -- per-document multiset overlap of stakeholder
  IDs, which does penalize such mismatches.
"""

from __future__ import annotations

import csv
import random
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from scnet.errors import ConfigError, EvaluationError, RowError
from scnet.ingestion import DocumentRecord
from scnet.matcher import Mention


@dataclass(frozen=True)
class GoldAnnotation:
    doc_id: str
    desired_ids: Counter[str]


@dataclass(frozen=True)
class EvalReport:
    documents: int
    extracted_total: int
    desired_total: int
    true_positives: int
    precision: float
    recall: float
    f1: float

    @property
    def count_ratio(self) -> float | None:
        """Extracted over desired totals; ``None`` when nothing was desired."""
        if self.desired_total == 0:
            return None
        return self.extracted_total / self.desired_total

    @property
    def over_extracted(self) -> bool:
        ratio = self.count_ratio
        return ratio is not None and ratio > 1

    def as_dict(self) -> dict[str, object]:
        ratio = self.count_ratio
        return {
            "documents": self.documents,
            "extracted_total": self.extracted_total,
            "desired_total": self.desired_total,
            "true_positives": self.true_positives,
            "count_ratio_accuracy": "undefined" if ratio is None else f"{ratio:.6f}",
            "over_extraction": str(self.over_extracted).lower(),
            "precision": f"{self.precision:.6f}",
            "recall": f"{self.recall:.6f}",
            "f1": f"{self.f1:.6f}",
        }

    def to_text(self) -> str:
        ratio = self.count_ratio
        acc = "undefined (no desired stakeholders)" if ratio is None else f"{ratio:.2%}"
        if self.over_extracted:
            acc += "  [over-extraction: more mentions extracted than desired]"
        return "\n".join(
            [
                f"documents evaluated      {self.documents}",
                f"extracted stakeholders   {self.extracted_total}",
                f"desired stakeholders     {self.desired_total}",
                f"count-ratio accuracy     {acc}",
                f"precision                {self.precision:.2%}",
                f"recall                   {self.recall:.2%}",
                f"f1                       {self.f1:.2%}",
            ]
        )

    def to_kv(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.as_dict().items())


def sample_documents(records: Sequence[DocumentRecord], n: int, seed: int) -> list[DocumentRecord]:
    """Draw ``n`` records uniformly without replacement from a seeded generator."""
    if not 0 <= n <= len(records):
        raise ConfigError(f"cannot sample {n} of {len(records)} documents")
    return random.Random(seed).sample(list(records), n)


def evaluate(extractions: Mapping[str, Sequence[Mention]], gold: Sequence[GoldAnnotation]) -> EvalReport:
    """Score the extractions of every gold document.

    Documents with extractions but no gold entry are ignored. Raises
    ``EvaluationError`` if a gold document has no extraction entry.
    """
    missing = [a.doc_id for a in gold if a.doc_id not in extractions]
    if missing:
        raise EvaluationError(f"no extraction entry for gold document(s): {', '.join(missing)}")
    extracted = desired = tp = 0
    for ann in gold:
        got = Counter(m.stakeholder_id for m in extractions[ann.doc_id])
        extracted += sum(got.values())
        desired += sum(ann.desired_ids.values())
        tp += sum((got & ann.desired_ids).values())
    precision = tp / extracted if extracted else 0.0
    recall = tp / desired if desired else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return EvalReport(len(gold), extracted, desired, tp, precision, recall, f1)


def load_gold(path: str | Path, *, delimiter: str = ",") -> list[GoldAnnotation]:
    """Read ``doc_id,stakeholder_id`` rows, one per desired mention.

    Documents keep their first-appearance order; IDs are upper-cased to
    match gazetteer IDs.
    """
    path = Path(path)
    per_doc: dict[str, Counter[str]] = {}
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        header = reader.fieldnames or []
        for column in ("doc_id", "stakeholder_id"):
            if column not in header:
                raise ConfigError(f"{path}: gold header must contain {column!r} (got {header})")
        for row in reader:
            doc_id = (row["doc_id"] or "").strip()
            sid = (row["stakeholder_id"] or "").strip().upper()
            if not doc_id or not sid:
                raise RowError("doc_id and stakeholder_id must be non-empty", path=path, row=reader.line_num)
            per_doc.setdefault(doc_id, Counter())[sid] += 1
    return [GoldAnnotation(d, c) for d, c in per_doc.items()]
