"""Corpus-level sourcing statistics.

Everything here counts at the assignment level: a sentence attributed to
two sources contributes one assignment to each. Per-document shares and
entropy therefore describe how sourced material distributes over sources,
not how many sentences exist.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .model import AttributionMap, DocAttribution, Document


def source_assignment_counts(amap: AttributionMap) -> Counter:
    counts: Counter = Counter()
    for pairs in amap.entries.values():
        for sid, _channel in pairs:
            counts[sid] += 1
    return counts


def source_entropy(amap: AttributionMap) -> float:
    """Shannon entropy (nats) of the assignment distribution over sources.

    Zero when the map is empty or a single source holds every assignment;
    bounded above by ln(k) for k distinct sources.
    """
    counts = source_assignment_counts(amap)
    total = sum(counts.values())
    if total == 0:
        return 0.0
    h = 0.0
    for c in counts.values():
        p = c / total
        h -= p * math.log(p)
    return h


@dataclass(frozen=True)
class DocStats:
    doc_id: str
    version_id: int
    n_sentences: int
    doc_len_chars: int
    n_sources: int
    pct_sents_sourced: float
    pct_assignments_top: float
    pct_assignments_bottom: float
    entropy: float
    degenerate: bool  # no sources attached anywhere in the document

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "version_id": self.version_id,
            "n_sentences": self.n_sentences,
            "doc_len_chars": self.doc_len_chars,
            "n_sources": self.n_sources,
            "pct_sents_sourced": round(self.pct_sents_sourced, 6),
            "pct_assignments_top": round(self.pct_assignments_top, 6),
            "pct_assignments_bottom": round(self.pct_assignments_bottom, 6),
            "entropy": round(self.entropy, 6),
            "degenerate": self.degenerate,
        }


def doc_stats(doc: Document, attr: DocAttribution) -> DocStats:
    counts = source_assignment_counts(attr.amap)
    total = sum(counts.values())
    top = 100.0 * max(counts.values()) / total if total else 0.0
    bottom = 100.0 * min(counts.values()) / total if total else 0.0
    return DocStats(
        doc_id=doc.doc_id,
        version_id=doc.version_id,
        n_sentences=doc.n_sentences,
        doc_len_chars=len(" ".join(s.text for s in doc.sentences)),
        n_sources=len(attr.sources),
        pct_sents_sourced=100.0 * len(attr.amap) / doc.n_sentences,
        pct_assignments_top=top,
        pct_assignments_bottom=bottom,
        entropy=source_entropy(attr.amap),
        degenerate=total == 0,
    )


@dataclass
class PositionCurve:
    """Likelihood that the sentence at a position is sourced.

    ``by_index[i]`` pools documents longer than ``i`` sentences.
    ``by_percentile`` maps each sentence to the bin min(99, floor(100*i/n))
    so documents of any length contribute to a fixed 100-point axis; bins
    no document reaches hold None.
    """

    by_index: list[float] = field(default_factory=list)
    by_index_support: list[int] = field(default_factory=list)
    by_percentile: list[float | None] = field(default_factory=lambda: [None] * 100)
    by_percentile_support: list[int] = field(default_factory=lambda: [0] * 100)

    def most_sourced_percentile(self) -> int | None:
        """Lowest bin attaining the maximum likelihood, None when empty."""
        best: int | None = None
        for b, v in enumerate(self.by_percentile):
            if v is None:
                continue
            if best is None or v > self.by_percentile[best]:
                best = b
        return best

    def to_dict(self) -> dict:
        return {
            "by_index": [round(v, 6) for v in self.by_index],
            "by_index_support": list(self.by_index_support),
            "by_percentile": [
                None if v is None else round(v, 6) for v in self.by_percentile
            ],
            "by_percentile_support": list(self.by_percentile_support),
            "most_sourced_percentile": self.most_sourced_percentile(),
        }


def position_curve(pairs: list[tuple[Document, DocAttribution]]) -> PositionCurve:
    curve = PositionCurve()
    max_len = max((doc.n_sentences for doc, _ in pairs), default=0)
    sourced_at = [0] * max_len
    docs_at = [0] * max_len
    pct_sourced = [0] * 100
    pct_total = [0] * 100
    for doc, attr in pairs:
        n = doc.n_sentences
        for i in range(n):
            hit = i in attr.amap.entries
            docs_at[i] += 1
            sourced_at[i] += int(hit)
            b = min(99, (100 * i) // n)
            pct_total[b] += 1
            pct_sourced[b] += int(hit)
    curve.by_index = [s / d for s, d in zip(sourced_at, docs_at)]
    curve.by_index_support = docs_at
    curve.by_percentile = [
        (s / t if t else None) for s, t in zip(pct_sourced, pct_total)
    ]
    curve.by_percentile_support = pct_total
    return curve


@dataclass
class VersionCurve:
    """Mean source count by position within a document's version lineage.

    Positions are ranks after sorting by version id (0 = earliest), so
    non-contiguous version ids still line up.
    """

    mean_sources: list[float] = field(default_factory=list)
    lineages_at: list[int] = field(default_factory=list)
    delta_per_version: float | None = None
    single_version_lineages: int = 0

    def to_dict(self) -> dict:
        return {
            "mean_sources": [round(v, 6) for v in self.mean_sources],
            "lineages_at": list(self.lineages_at),
            "delta_per_version": None
            if self.delta_per_version is None
            else round(self.delta_per_version, 6),
            "single_version_lineages": self.single_version_lineages,
        }


def version_curve(attrs: list[DocAttribution]) -> VersionCurve:
    lineages: dict[str, list[tuple[int, int]]] = defaultdict(list)
    for attr in attrs:
        lineages[attr.doc_id].append((attr.version_id, len(attr.sources)))
    curve = VersionCurve()
    by_rank: dict[int, list[int]] = defaultdict(list)
    steps: list[int] = []
    for versions in lineages.values():
        versions.sort()
        if len(versions) < 2:
            curve.single_version_lineages += 1
        for rank, (_vid, n_sources) in enumerate(versions):
            by_rank[rank].append(n_sources)
        for (_, a), (_, b) in zip(versions, versions[1:]):
            steps.append(b - a)
    for rank in sorted(by_rank):
        vals = by_rank[rank]
        curve.mean_sources.append(sum(vals) / len(vals))
        curve.lineages_at.append(len(vals))
    if steps:
        curve.delta_per_version = sum(steps) / len(steps)
    return curve


@dataclass
class CorpusStats:
    """Corpus roll-up of the per-document statistics.

    Share and entropy means exclude documents with no sources (their
    shares are undefined); ``degenerate_docs`` reports how many were
    excluded so the denominator stays visible.
    """

    n_docs: int
    n_sentences: int
    mean_len_sentences: float
    mean_len_chars: float
    mean_n_sources: float
    mean_pct_sourced: float
    mean_pct_top: float
    mean_pct_bottom: float
    mean_entropy: float
    degenerate_docs: int
    sourcing_fraction_hist: list[int]
    sourcing_by_length: list[dict]
    positions: PositionCurve
    versions: VersionCurve
    per_doc: list[DocStats]

    def to_dict(self, include_per_doc: bool = False) -> dict:
        out = {
            "n_docs": self.n_docs,
            "n_sentences": self.n_sentences,
            "mean_len_sentences": round(self.mean_len_sentences, 6),
            "mean_len_chars": round(self.mean_len_chars, 6),
            "mean_n_sources": round(self.mean_n_sources, 6),
            "mean_pct_sourced": round(self.mean_pct_sourced, 6),
            "mean_pct_top": round(self.mean_pct_top, 6),
            "mean_pct_bottom": round(self.mean_pct_bottom, 6),
            "mean_entropy": round(self.mean_entropy, 6),
            "degenerate_docs": self.degenerate_docs,
            "sourcing_fraction_hist": list(self.sourcing_fraction_hist),
            "sourcing_by_length": list(self.sourcing_by_length),
            "positions": self.positions.to_dict(),
            "versions": self.versions.to_dict(),
        }
        if include_per_doc:
            out["per_doc"] = [d.to_dict() for d in self.per_doc]
        return out


def _mean(values: list[float]) -> float:
    return sum(values) / len(values) if values else 0.0


def corpus_stats(pairs: list[tuple[Document, DocAttribution]]) -> CorpusStats:
    if not pairs:
        raise ValueError("corpus_stats needs at least one document")
    per_doc = [doc_stats(doc, attr) for doc, attr in pairs]
    proper = [d for d in per_doc if not d.degenerate]

    hist = [0] * 10
    for d in per_doc:
        hist[min(9, int(d.pct_sents_sourced // 10))] += 1

    by_len_acc: dict[int, list[float]] = defaultdict(list)
    for d in per_doc:
        by_len_acc[min((d.n_sentences - 1) // 10, 9)].append(d.pct_sents_sourced)
    by_length = []
    for b in range(10):
        vals = by_len_acc.get(b, [])
        label = f"{10 * b + 1}-{10 * b + 10}" if b < 9 else "91+"
        by_length.append(
            {
                "sentences": label,
                "n_docs": len(vals),
                "mean_pct_sourced": round(_mean(vals), 6) if vals else None,
            }
        )

    return CorpusStats(
        n_docs=len(per_doc),
        n_sentences=sum(d.n_sentences for d in per_doc),
        mean_len_sentences=_mean([d.n_sentences for d in per_doc]),
        mean_len_chars=_mean([d.doc_len_chars for d in per_doc]),
        mean_n_sources=_mean([d.n_sources for d in per_doc]),
        mean_pct_sourced=_mean([d.pct_sents_sourced for d in per_doc]),
        mean_pct_top=_mean([d.pct_assignments_top for d in proper]),
        mean_pct_bottom=_mean([d.pct_assignments_bottom for d in proper]),
        mean_entropy=_mean([d.entropy for d in proper]),
        degenerate_docs=len(per_doc) - len(proper),
        sourcing_fraction_hist=hist,
        sourcing_by_length=by_length,
        positions=position_curve(pairs),
        versions=version_curve([attr for _, attr in pairs]),
        per_doc=per_doc,
    )


def render_stats(stats: CorpusStats) -> str:
    """Human-oriented text summary of the corpus roll-up."""
    v = stats.versions
    lines = [
        f"documents                 {stats.n_docs}",
        f"sentences                 {stats.n_sentences}",
        f"mean length (sentences)   {stats.mean_len_sentences:.1f}",
        f"mean length (chars)       {stats.mean_len_chars:.1f}",
        f"mean sources per doc      {stats.mean_n_sources:.1f}",
        f"% sentences sourced       {stats.mean_pct_sourced:.1f}",
        f"% assignments, top source {stats.mean_pct_top:.1f}",
        f"% assignments, bottom     {stats.mean_pct_bottom:.1f}",
        f"source entropy (nats)     {stats.mean_entropy:.1f}",
        f"docs with no sources      {stats.degenerate_docs}",
        f"most sourced percentile   {stats.positions.most_sourced_percentile()}",
    ]
    if v.delta_per_version is not None:
        lines.append(f"sources added per version {v.delta_per_version:+.1f}")
    return "\n".join(lines)
