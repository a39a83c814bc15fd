"""Scoring of attribution systems against gold labels.

Three metric families, each overall and per grouped information channel:
detection F1 (is the sentence sourced at all), retrieval accuracy over
gold-sourced sentences (did we name a gold source), and end-to-end
accuracy over all sentences. Channel columns restrict the positive-class
universe to gold sentences of that channel while the negatives stay the
full gold-unsourced pool; "All" cells pool counts (micro) rather than
averaging channels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    AttributionMap,
    DocAttribution,
    Document,
    GoldLabel,
    InformationChannel,
    PASSIVE_MARKER,
    Source,
    channel_group,
    group_columns,
)
from .names import names_match, normalize_name


ALL = "All"
UNSOURCED = "No Quote"
PASSIVE_EQUIV = normalize_name(PASSIVE_MARKER)


@dataclass
class DetectionCell:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    support_pos: int = 0
    support_neg: int = 0

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    @property
    def degenerate(self) -> bool:
        return self.support_pos == 0

    def to_dict(self) -> dict:
        return {
            "precision": round(self.precision, 6),
            "recall": round(self.recall, 6),
            "f1": round(self.f1, 6),
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "support_pos": self.support_pos,
            "support_neg": self.support_neg,
            "degenerate": self.degenerate,
        }


@dataclass
class AccuracyCell:
    correct: int = 0
    support: int = 0

    @property
    def accuracy(self) -> float | None:
        return self.correct / self.support if self.support else None

    def to_dict(self) -> dict:
        acc = self.accuracy
        return {
            "accuracy": None if acc is None else round(acc, 6),
            "correct": self.correct,
            "support": self.support,
        }


@dataclass
class EvalReport:
    """Per-channel-group and overall metrics for one system."""

    view: str = "table4"
    aggregation: str = "micro (pooled counts)"
    detection: dict[str, DetectionCell] = field(default_factory=dict)
    retrieval: dict[str, AccuracyCell] = field(default_factory=dict)
    end_to_end: dict[str, AccuracyCell] = field(default_factory=dict)
    skipped_no_gold: int = 0

    def to_dict(self) -> dict:
        return {
            "view": self.view,
            "aggregation": self.aggregation,
            "detection": {k: v.to_dict() for k, v in self.detection.items()},
            "retrieval": {k: v.to_dict() for k, v in self.retrieval.items()},
            "end_to_end": {k: v.to_dict() for k, v in self.end_to_end.items()},
            "skipped_no_gold": self.skipped_no_gold,
        }


def detection_f1(
    pred: list[bool],
    gold: list[bool],
    channel_positive: list[bool] | None = None,
) -> tuple[float, float, float]:
    """Binary P/R/F1 on the sourced class.

    ``channel_positive`` marks which gold-sourced sentences belong to the
    channel under evaluation; gold-sourced sentences outside it leave the
    universe, gold-unsourced sentences all stay as negatives.
    """
    if len(pred) != len(gold):
        raise ValueError(f"length mismatch: {len(pred)} vs {len(gold)}")
    if channel_positive is not None and len(channel_positive) != len(gold):
        raise ValueError("channel filter length mismatch")
    cell = DetectionCell()
    for i, (p, g) in enumerate(zip(pred, gold)):
        in_channel = channel_positive[i] if channel_positive is not None else True
        _tally_detection(cell, p, g, in_channel)
    return cell.precision, cell.recall, cell.f1


def _tally_detection(cell: DetectionCell, pred: bool, gold: bool, in_channel: bool):
    if gold:
        if not in_channel:
            return
        cell.support_pos += 1
        if pred:
            cell.tp += 1
        else:
            cell.fn += 1
    else:
        cell.support_neg += 1
        if pred:
            cell.fp += 1


def _gold_is_passive_only(gold: GoldLabel) -> bool:
    names = [normalize_name(n) for n in gold.source_names]
    return bool(names) and all(n == PASSIVE_EQUIV for n in names)


def _matches_gold(pred_names: list[str], gold: GoldLabel) -> bool:
    """Lenient multi-source rule: any predicted name resolving to any gold
    source counts (intersection non-empty)."""
    for p in pred_names:
        for g in gold.source_names:
            if normalize_name(g) == PASSIVE_EQUIV:
                if normalize_name(p) == PASSIVE_EQUIV:
                    return True
            elif names_match(p, g) > 0:
                return True
    return False


def retrieval_accuracy(
    items: list[tuple[list[str], GoldLabel]], strict_passive: bool = False
) -> float | None:
    """Accuracy over gold-sourced sentences; items are (predicted canonical
    names, gold label) pairs. Returns None when no sentence qualifies."""
    cell = AccuracyCell()
    for pred_names, gold in items:
        if not gold.is_sourced:
            continue
        verdict = _retrieval_verdict(pred_names, gold, strict_passive)
        if verdict is None:
            continue
        cell.support += 1
        cell.correct += int(verdict)
    return cell.accuracy


def _retrieval_verdict(
    pred_names: list[str], gold: GoldLabel, strict_passive: bool
) -> bool | None:
    """True/False correctness, or None when the sentence is excluded."""
    passive_only = _gold_is_passive_only(gold)
    if passive_only and strict_passive:
        return None
    if not pred_names:
        # the null answer is credited only on passive gold (lenient mode)
        return passive_only
    return _matches_gold(pred_names, gold)


def end_to_end_correct(pred_names: list[str], gold: GoldLabel) -> bool:
    if not gold.is_sourced:
        return not pred_names
    return bool(pred_names) and _matches_gold(pred_names, gold)


def gold_attribution(doc: Document) -> DocAttribution:
    """Derive a canonical attribution from the document's gold labels.

    Gold names cluster on exact normalized equality; ids follow first
    appearance. The passive marker becomes a passive source.
    """
    order: list[str] = []
    names: dict[str, str] = {}
    entries: dict[int, set[tuple[int, InformationChannel]]] = {}
    for sent in doc.sentences:
        gold = sent.gold
        if gold is None or not gold.is_sourced:
            continue
        for name in gold.source_names:
            key = normalize_name(name)
            if key not in names:
                names[key] = name
                order.append(key)
            sid = order.index(key)
            entries.setdefault(sent.index, set()).add((sid, gold.channel))
    sources = tuple(
        Source(
            source_id=i,
            canonical_name=names[key],
            is_passive=key == PASSIVE_EQUIV,
        )
        for i, key in enumerate(order)
    )
    return DocAttribution(
        doc_id=doc.doc_id,
        version_id=doc.version_id,
        sources=sources,
        amap=AttributionMap({i: frozenset(p) for i, p in entries.items()}),
    )


def evaluate_documents(
    pairs: list[tuple[Document, DocAttribution | None]],
    view: str = "table4",
    strict_passive: bool = False,
) -> EvalReport:
    """Score one system over gold-labeled documents.

    A missing attribution means the system predicted nothing for that
    document. Sentences without gold labels are skipped and counted.
    """
    groups = group_columns(view)
    report = EvalReport(view=view)
    for name in [ALL, *groups]:
        report.detection[name] = DetectionCell()
        report.retrieval[name] = AccuracyCell()
        report.end_to_end[name] = AccuracyCell()
    report.end_to_end[UNSOURCED] = AccuracyCell()

    for doc, attr in pairs:
        n = doc.n_sentences
        for sent in doc.sentences:
            gold = sent.gold
            if gold is None:
                report.skipped_no_gold += 1
                continue
            pred_names = attr.names_of(sent.index, n) if attr is not None else []
            detected = bool(pred_names)
            group = channel_group(gold.channel, view) if gold.is_sourced else None

            for cell_name in [ALL, *groups]:
                _tally_detection(
                    report.detection[cell_name],
                    detected,
                    gold.is_sourced,
                    group == cell_name or cell_name == ALL,
                )

            if gold.is_sourced:
                verdict = _retrieval_verdict(pred_names, gold, strict_passive)
                if verdict is not None:
                    for cell_name in (ALL, group):
                        cell = report.retrieval[cell_name]
                        cell.support += 1
                        cell.correct += int(verdict)

            correct = end_to_end_correct(pred_names, gold)
            e2e_group = group if gold.is_sourced else UNSOURCED
            for cell_name in (ALL, e2e_group):
                cell = report.end_to_end[cell_name]
                cell.support += 1
                cell.correct += int(correct)
    return report


# --- rendering ----------------------------------------------------------------


def _fmt_pct(value: float | None, support: int) -> str:
    if value is None or support == 0:
        return "–"
    return f"{100 * value:.1f}"


def tabulate(reports: dict[str, EvalReport], view: str = "table4") -> str:
    """Aligned-text grid: one block per metric, one row per system, one
    column per channel group plus the pooled "All" column."""
    columns = [ALL, *group_columns(view)]
    lines: list[str] = []
    name_w = max([len(n) for n in reports] + [12])
    col_w = max(max(len(c) for c in columns), 6)

    def header(title: str) -> None:
        lines.append(title)
        lines.append(
            " " * name_w + "  " + "  ".join(c.rjust(col_w) for c in columns)
        )

    header("Detection (F1 on the sourced class), aggregation: micro (pooled counts)")
    for name, rep in reports.items():
        cells = [
            _fmt_pct(rep.detection[c].f1, rep.detection[c].support_pos)
            for c in columns
        ]
        lines.append(name.ljust(name_w) + "  " + "  ".join(x.rjust(col_w) for x in cells))
    header("Retrieval (accuracy on gold-sourced sentences)")
    for name, rep in reports.items():
        cells = [
            _fmt_pct(rep.retrieval[c].accuracy, rep.retrieval[c].support)
            for c in columns
        ]
        lines.append(name.ljust(name_w) + "  " + "  ".join(x.rjust(col_w) for x in cells))
    header("End-to-end (accuracy on all sentences)")
    for name, rep in reports.items():
        cells = [
            _fmt_pct(rep.end_to_end[c].accuracy, rep.end_to_end[c].support)
            for c in columns
        ]
        lines.append(name.ljust(name_w) + "  " + "  ".join(x.rjust(col_w) for x in cells))
    return "\n".join(lines)
