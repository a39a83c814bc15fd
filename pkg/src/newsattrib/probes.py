"""Construction of source-compositionality probe datasets.

Two families:

* Ablation probes: pick a source in a document, remove exactly its
  sentences (positive, label 1) and, as the matched negative, an equal
  count of unattributed sentences from the same document (label 0). A
  classifier that can tell the two apart must notice the missing voice,
  not the shorter text.
* Version probes: pair consecutive article versions; label 1 when the
  later version adds at least two sources the earlier one lacks.

Both emit plain text and an optional source-annotated (+SA) rendering
where every sentence is suffixed with its source names. All randomness
derives from one seed through sha256 child streams, so regeneration is
byte-identical.
"""

from __future__ import annotations

import bisect
import difflib
import hashlib
import random
import re
import statistics
from collections import defaultdict
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .corpus_io import ErrorSink, VersionPairRecord, _dispatch, _write_records
from .lexicons import SignifierLexicon, SpeakingVerbLexicon, contains_speaking_verb
from .model import (
    AttributionMap,
    DocAttribution,
    Document,
    PASSIVE_MARKER,
    Source,
    StructuralError,
    sources_of,
)
from .names import names_match
from .rules import MentionKind, extract_mentions
from .stats_tests import welch_t_test

DIFFICULTIES = ("top", "second", "any")
SECOND_RULES = ("top3", "share10")


def child_rng(seed: int, *parts: object) -> random.Random:
    """Deterministic per-item RNG: sha256 over "seed:part:..." keys."""
    key = ":".join(str(p) for p in (seed, *parts))
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@dataclass(frozen=True)
class ProbeExample:
    """One probe classification example.

    ``origin_version`` is the version id of the document the text was
    built from (for version probes, the earlier version). ``removed``
    holds origin-document sentence indices dropped by ablation; version
    probes and eval-only controls keep it empty.
    """

    probe_id: str
    doc_id: str
    difficulty: str
    label: int
    text: str
    origin_version: int
    removed: tuple[int, ...] = ()
    sa_text: str | None = None
    chosen_source: str | None = None
    version_next: int | None = None
    topic: str | None = None
    eval_only: bool = False
    excluded: bool = False
    stratum: str | None = None

    def __post_init__(self):
        if self.label not in (0, 1):
            raise StructuralError(f"label must be 0 or 1, got {self.label}")
        if self.difficulty not in (*DIFFICULTIES, "newsedits"):
            raise StructuralError(f"unknown difficulty {self.difficulty!r}")
        object.__setattr__(self, "removed", tuple(int(i) for i in self.removed))


@dataclass(frozen=True)
class SkipReason:
    """Why a document yielded no probe pair (a precondition, not an error)."""

    doc_id: str
    version_id: int
    difficulty: str
    reason: str
    detail: str = ""


# --- probe record IO ----------------------------------------------------------


def probe_to_record(ex: ProbeExample) -> dict:
    rec = {
        "probe_id": ex.probe_id,
        "doc_id": ex.doc_id,
        "difficulty": ex.difficulty,
        "label": ex.label,
        "text": ex.text,
        "origin_version": ex.origin_version,
        "removed": list(ex.removed),
        "eval_only": ex.eval_only,
        "excluded": ex.excluded,
    }
    if ex.sa_text is not None:
        rec["sa_text"] = ex.sa_text
    if ex.chosen_source is not None:
        rec["chosen_source"] = ex.chosen_source
    if ex.version_next is not None:
        rec["version_next"] = ex.version_next
    if ex.topic is not None:
        rec["topic"] = ex.topic
    if ex.stratum is not None:
        rec["stratum"] = ex.stratum
    return rec


def parse_probe(obj: dict) -> ProbeExample:
    return ProbeExample(
        probe_id=obj["probe_id"],
        doc_id=obj["doc_id"],
        difficulty=obj["difficulty"],
        label=int(obj["label"]),
        text=obj["text"],
        origin_version=int(obj["origin_version"]),
        removed=tuple(obj.get("removed", ())),
        sa_text=obj.get("sa_text"),
        chosen_source=obj.get("chosen_source"),
        version_next=obj.get("version_next"),
        topic=obj.get("topic"),
        eval_only=bool(obj.get("eval_only", False)),
        excluded=bool(obj.get("excluded", False)),
        stratum=obj.get("stratum"),
    )


def read_probes(
    path: str | Path, on_error: ErrorSink | None = None
) -> Iterator[ProbeExample]:
    yield from _dispatch(path, parse_probe, on_error)  # type: ignore[misc]


def write_probes(examples: Iterable[ProbeExample], path: str | Path) -> int:
    return _write_records(path, (probe_to_record(e) for e in examples))


# --- source selection ---------------------------------------------------------


def sentence_counts(amap: AttributionMap) -> dict[int, int]:
    """Sentences per source (a shared sentence counts once per source)."""
    counts: dict[int, int] = defaultdict(int)
    for pairs in amap.entries.values():
        for sid in {sid for sid, _ in pairs}:
            counts[sid] += 1
    return dict(counts)


def select_source(
    doc: Document,
    attr: DocAttribution,
    difficulty: str,
    rng: random.Random,
    second_rule: str = "top3",
) -> Source | None:
    """Choose the source to ablate.

    top: most sentences, ties to the earliest-mentioned (lowest id).
    second: uniform over the three largest sources ("top3"), or over
    sources covering more than 10% of the document's sentences
    ("share10"). any: uniform over all sources. None when no source
    qualifies.
    """
    if difficulty not in DIFFICULTIES:
        raise ValueError(f"difficulty must be one of {DIFFICULTIES}")
    if second_rule not in SECOND_RULES:
        raise ValueError(f"second_rule must be one of {SECOND_RULES}")
    counts = sentence_counts(attr.amap)
    if not counts:
        return None
    if difficulty == "top":
        sid = min(counts, key=lambda s: (-counts[s], s))
    elif difficulty == "second":
        if second_rule == "top3":
            ranked = sorted(counts, key=lambda s: (-counts[s], s))[:3]
            sid = rng.choice(ranked)
        else:
            cutoff = 0.10 * doc.n_sentences
            qualifying = sorted(s for s in counts if counts[s] > cutoff)
            if not qualifying:
                return None
            sid = rng.choice(qualifying)
    else:
        sid = rng.choice(sorted(counts))
    return attr.source_by_id(sid)


# --- ablation -----------------------------------------------------------------


def remove_sentences(doc: Document, removed: Iterable[int]) -> Document:
    """The document minus the given sentence indices, reindexed from 0."""
    gone = set(removed)
    bad = gone - set(range(doc.n_sentences))
    if bad:
        raise ValueError(f"indices out of range: {sorted(bad)}")
    kept = [s for s in doc.sentences if s.index not in gone]
    if not kept:
        raise ValueError("removal would empty the document")
    return replace(
        doc,
        sentences=tuple(
            replace(sent, index=new) for new, sent in enumerate(kept)
        ),
    )


def ablate(
    doc: Document, attr: DocAttribution, removed: Iterable[int]
) -> tuple[Document, DocAttribution]:
    """Remove sentences and remap the attribution onto the new indices.

    Sources left without any attributed sentence are dropped; surviving
    sources keep their ids so references stay stable across the pair.
    """
    gone = set(removed)
    new_doc = remove_sentences(doc, gone)
    mapping = {}
    new = 0
    for old in range(doc.n_sentences):
        if old not in gone:
            mapping[old] = new
            new += 1
    entries = {
        mapping[i]: pairs
        for i, pairs in attr.amap.entries.items()
        if i not in gone
    }
    used = {sid for pairs in entries.values() for sid, _ in pairs}
    sources = tuple(
        replace(
            s,
            mentions=tuple(
                (mapping[si], a, b) for si, a, b in s.mentions if si not in gone
            ),
        )
        for s in attr.sources
        if s.source_id in used
    )
    return new_doc, DocAttribution(
        doc_id=attr.doc_id,
        version_id=attr.version_id,
        sources=sources,
        amap=AttributionMap(entries),
    )


def build_ablation_pair(
    doc: Document,
    attr: DocAttribution,
    difficulty: str,
    seed: int,
    second_rule: str = "top3",
    with_sa: bool = True,
    control_negatives: bool = False,
) -> tuple[ProbeExample, ProbeExample] | SkipReason:
    """Positive/negative probe pair for one document, or a SkipReason.

    The negative removes an equal-sized seeded-uniform sample of the
    document's unattributed sentences, so both classes shrink by the
    same amount; ``control_negatives`` keeps the negative untouched and
    marks it eval-only instead. Documents where the chosen source covers
    more sentences than remain unattributed are skipped.
    """
    rng = child_rng(seed, doc.doc_id, doc.version_id, difficulty)
    source = select_source(doc, attr, difficulty, rng, second_rule)
    if source is None:
        reason = "no_sources" if not attr.amap.entries else "no_qualifying_source"
        return SkipReason(doc.doc_id, doc.version_id, difficulty, reason)
    n = doc.n_sentences
    q_sents = sorted(
        i for i in attr.amap.entries if source.source_id in sources_of(attr.amap, i, n)
    )
    unattributed = sorted(set(range(n)) - set(attr.amap.entries))
    if len(q_sents) > len(unattributed):
        return SkipReason(
            doc.doc_id,
            doc.version_id,
            difficulty,
            "insufficient_unattributed",
            f"source covers {len(q_sents)} sentences, "
            f"only {len(unattributed)} unattributed",
        )

    pos_doc, pos_attr = ablate(doc, attr, q_sents)
    if control_negatives:
        neg_removed: list[int] = []
    else:
        neg_removed = sorted(rng.sample(unattributed, len(q_sents)))
    neg_doc, neg_attr = ablate(doc, attr, neg_removed)

    base = f"{doc.doc_id}:v{doc.version_id}:{difficulty}"
    pos = ProbeExample(
        probe_id=f"{base}:pos",
        doc_id=doc.doc_id,
        difficulty=difficulty,
        label=1,
        text=" ".join(s.text for s in pos_doc.sentences),
        origin_version=doc.version_id,
        removed=tuple(q_sents),
        sa_text=serialize_with_sa(pos_doc, pos_attr) if with_sa else None,
        chosen_source=source.canonical_name,
        topic=doc.topic,
    )
    neg = ProbeExample(
        probe_id=f"{base}:neg",
        doc_id=doc.doc_id,
        difficulty=difficulty,
        label=0,
        text=" ".join(s.text for s in neg_doc.sentences),
        origin_version=doc.version_id,
        removed=tuple(neg_removed),
        sa_text=serialize_with_sa(neg_doc, neg_attr) if with_sa else None,
        chosen_source=source.canonical_name,
        topic=doc.topic,
        eval_only=control_negatives,
    )
    return pos, neg


# --- source-annotated serialization --------------------------------------------


def serialize_with_sa(doc: Document, attr: DocAttribution | None) -> str:
    """Append " SOURCE: <names>." to every sentence and join with spaces.

    Names are comma-joined in first-mention (id) order; unattributed
    sentences get the literal "None". The rendering is ambiguous when a
    sentence contains " SOURCE: " or a name contains ", " or ". ".
    """
    n = doc.n_sentences
    parts = []
    for sent in doc.sentences:
        names = attr.names_of(sent.index, n) if attr is not None else []
        tag = ", ".join(names) if names else "None"
        parts.append(f"{sent.text} SOURCE: {tag}.")
    return " ".join(parts)


_SA_SEGMENT = re.compile(r"(?s)(.*?) SOURCE: (.*?)\.(?: |$)")


def parse_sa_text(text: str) -> list[tuple[str, list[str]]]:
    """Invert serialize_with_sa: (sentence text, source names) per sentence."""
    out: list[tuple[str, list[str]]] = []
    pos = 0
    while pos < len(text):
        m = _SA_SEGMENT.match(text, pos)
        if m is None:
            raise ValueError(
                f"not a source-annotated serialization at offset {pos}"
            )
        raw = m.group(2)
        out.append((m.group(1), [] if raw == "None" else raw.split(", ")))
        pos = m.end()
    return out


# --- version probes -------------------------------------------------------------


def count_added_sources(prev: DocAttribution, curr: DocAttribution) -> int:
    """Sources of the later version that resolve to nothing in the earlier."""
    added = 0
    for s in curr.sources:
        name = s.canonical_name or PASSIVE_MARKER
        if not any(
            names_match(name, p.canonical_name or PASSIVE_MARKER) > 0
            for p in prev.sources
        ):
            added += 1
    return added


def build_version_pairs(docs: Iterable[Document]) -> list[VersionPairRecord]:
    """Consecutive version pairs with sentence-level edit counts.

    Edits come from aligning the two sentence-text lists: unmatched
    insertions and deletions count as added/deleted, aligned-but-changed
    positions as edited.
    """
    lineages: dict[str, list[Document]] = defaultdict(list)
    for doc in docs:
        lineages[doc.doc_id].append(doc)
    pairs = []
    for doc_id in sorted(lineages):
        versions = sorted(lineages[doc_id], key=lambda d: d.version_id)
        for a, b in zip(versions, versions[1:]):
            texts_a = [s.text for s in a.sentences]
            texts_b = [s.text for s in b.sentences]
            sm = difflib.SequenceMatcher(a=texts_a, b=texts_b, autojunk=False)
            added = deleted = edited = 0
            for tag, i1, i2, j1, j2 in sm.get_opcodes():
                if tag == "insert":
                    added += j2 - j1
                elif tag == "delete":
                    deleted += i2 - i1
                elif tag == "replace":
                    k = min(i2 - i1, j2 - j1)
                    edited += k
                    deleted += (i2 - i1) - k
                    added += (j2 - j1) - k
            pairs.append(
                VersionPairRecord(
                    doc_id=doc_id,
                    version_t=a.version_id,
                    version_t_plus_1=b.version_id,
                    added=added,
                    deleted=deleted,
                    edited=edited,
                )
            )
    return pairs


def build_newsedits_example(
    doc_t: Document,
    attr_t: DocAttribution,
    attr_t1: DocAttribution,
    pair: VersionPairRecord,
    with_sa: bool = True,
) -> ProbeExample:
    """Label 1 iff the later version adds at least two new sources."""
    label = int(count_added_sources(attr_t, attr_t1) >= 2)
    return ProbeExample(
        probe_id=f"{doc_t.doc_id}:v{pair.version_t}-v{pair.version_t_plus_1}:newsedits",
        doc_id=doc_t.doc_id,
        difficulty="newsedits",
        label=label,
        text=" ".join(s.text for s in doc_t.sentences),
        origin_version=pair.version_t,
        sa_text=serialize_with_sa(doc_t, attr_t) if with_sa else None,
        version_next=pair.version_t_plus_1,
        topic=doc_t.topic,
    )


@dataclass(frozen=True)
class NewseditsCandidate:
    """A version-probe example plus the covariates used for balancing."""

    example: ProbeExample
    n_sentences: int
    total_edits: int


def _quantile_binner(values: list[float], n_bins: int) -> Callable[[float], int]:
    if n_bins < 2 or len(values) < 2:
        return lambda v: 0
    edges = statistics.quantiles(values, n=n_bins, method="inclusive")
    return lambda v: bisect.bisect_right(edges, v)


def balance_newsedits(
    candidates: list[NewseditsCandidate],
    seed: int,
    n_length_bins: int = 10,
    n_edit_bins: int = 3,
) -> tuple[list[ProbeExample], list[str]]:
    """Stratified downsampling to exact per-stratum class balance.

    Strata cross a document-length quantile bin, the exact earlier
    version id, and an edit-count quantile bin. Within each stratum both
    classes shrink (seeded-uniformly) to the minority size; surplus and
    single-class examples come back flagged ``excluded`` rather than
    silently dropped. Returns the examples in input order plus warnings
    for strata that contributed nothing.
    """
    len_bin = _quantile_binner([c.n_sentences for c in candidates], n_length_bins)
    edit_bin = _quantile_binner([c.total_edits for c in candidates], n_edit_bins)
    strata: dict[str, list[int]] = defaultdict(list)
    labeled = []
    for idx, cand in enumerate(candidates):
        stratum = (
            f"len{len_bin(cand.n_sentences)}"
            f"|v{cand.example.origin_version}"
            f"|edit{edit_bin(cand.total_edits)}"
        )
        labeled.append(stratum)
        strata[stratum].append(idx)

    keep: set[int] = set()
    warnings: list[str] = []
    for stratum in sorted(strata):
        members = strata[stratum]
        pos = [i for i in members if candidates[i].example.label == 1]
        neg = [i for i in members if candidates[i].example.label == 0]
        n = min(len(pos), len(neg))
        if n == 0:
            warnings.append(
                f"stratum {stratum}: single-class "
                f"({len(pos)} positive / {len(neg)} negative), all excluded"
            )
            continue
        rng = child_rng(seed, "balance", stratum)
        for bucket in (pos, neg):
            chosen = sorted(rng.sample(bucket, n))
            keep.update(chosen)

    return [
        replace(c.example, stratum=labeled[i], excluded=i not in keep)
        for i, c in enumerate(candidates)
    ], warnings


# --- confound audit -------------------------------------------------------------


@dataclass(frozen=True)
class FeatureStat:
    feature: str
    mean_pos: float | None
    mean_neg: float | None
    t: float | None
    p: float | None
    n_pos: int
    n_neg: int

    @property
    def significant(self) -> bool:
        return self.p is not None and self.p < 0.01

    def to_dict(self) -> dict:
        rnd = lambda v: None if v is None else round(v, 6)  # noqa: E731
        return {
            "feature": self.feature,
            "mean_pos": rnd(self.mean_pos),
            "mean_neg": rnd(self.mean_neg),
            "t": rnd(self.t),
            "p": rnd(self.p),
            "n_pos": self.n_pos,
            "n_neg": self.n_neg,
            "significant": self.significant,
        }


@dataclass
class ConfoundReport:
    """Per-feature Welch t-tests comparing positives against negatives."""

    features: list[FeatureStat]
    n_pos: int
    n_neg: int
    n_skipped: int = 0

    @property
    def flagged(self) -> list[FeatureStat]:
        return [f for f in self.features if f.significant]

    def to_dict(self) -> dict:
        return {
            "features": [f.to_dict() for f in self.features],
            "n_pos": self.n_pos,
            "n_neg": self.n_neg,
            "n_skipped": self.n_skipped,
            "flagged": [f.feature for f in self.flagged],
        }

    def render(self) -> str:
        lines = [
            f"{'feature':<18} {'mean+':>10} {'mean-':>10} {'t':>9} {'p':>10}  flag"
        ]
        for f in self.features:
            fmt = lambda v: "  n/a" if v is None else f"{v:.4f}"  # noqa: E731
            lines.append(
                f"{f.feature:<18} {fmt(f.mean_pos):>10} {fmt(f.mean_neg):>10} "
                f"{fmt(f.t):>9} {fmt(f.p):>10}  {'CONFOUND' if f.significant else 'ok'}"
            )
        lines.append(
            f"examples: {self.n_pos} positive, {self.n_neg} negative"
            + (f", {self.n_skipped} skipped" if self.n_skipped else "")
        )
        return "\n".join(lines)


def surface_features(
    doc: Document,
    verbs: SpeakingVerbLexicon,
    signifiers: SignifierLexicon,
) -> dict[str, float]:
    """Shallow cues a length- or style-sensitive classifier could exploit."""
    mentions = extract_mentions(doc, signifiers)
    return {
        "n_sentences": doc.n_sentences,
        "n_chars": len(" ".join(s.text for s in doc.sentences)),
        "speaking_verbs": sum(
            len(contains_speaking_verb(s, verbs)) for s in doc.sentences
        ),
        "person_entities": sum(
            1 for m in mentions if m.kind is MentionKind.PERSON_NE
        ),
        "signifiers": sum(1 for m in mentions if m.kind is MentionKind.SIGNIFIER),
    }


FEATURE_ORDER = ("n_sentences", "n_chars", "speaking_verbs", "person_entities", "signifiers")


def audit_confounds(
    examples: list[ProbeExample],
    docs: dict[tuple[str, int], Document],
    verbs: SpeakingVerbLexicon,
    signifiers: SignifierLexicon,
    include_excluded: bool = False,
) -> ConfoundReport:
    """Test whether surface features separate the probe classes.

    Each example's text document is rebuilt from its origin document
    minus the removed sentences; features are compared across classes
    with Welch t-tests and flagged at p < 0.01. Examples whose origin
    document is missing are skipped and counted.
    """
    by_class: dict[int, list[dict[str, float]]] = {0: [], 1: []}
    skipped = 0
    for ex in examples:
        if ex.excluded and not include_excluded:
            continue
        doc = docs.get((ex.doc_id, ex.origin_version))
        if doc is None:
            skipped += 1
            continue
        if ex.removed:
            doc = remove_sentences(doc, ex.removed)
        by_class[ex.label].append(surface_features(doc, verbs, signifiers))

    stats = []
    for feature in FEATURE_ORDER:
        pos = [f[feature] for f in by_class[1]]
        neg = [f[feature] for f in by_class[0]]
        t, p = welch_t_test(pos, neg)
        stats.append(
            FeatureStat(
                feature=feature,
                mean_pos=statistics.fmean(pos) if pos else None,
                mean_neg=statistics.fmean(neg) if neg else None,
                t=t,
                p=p,
                n_pos=len(pos),
                n_neg=len(neg),
            )
        )
    return ConfoundReport(
        features=stats,
        n_pos=len(by_class[1]),
        n_neg=len(by_class[0]),
        n_skipped=skipped,
    )
