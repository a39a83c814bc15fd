"""Deterministic attribution baselines.

Three rule families over annotated documents:

* co-occurrence: a sentence is attributed to every canonical entity it
  mentions whenever it also contains a speaking verb;
* governance: an entity is attributed only when its mention heads an
  ``nsubj`` dependency whose governor token is a speaking verb;
* pattern matching: lexical quote/speaker templates over the sentence text.

All operations are pure functions of (document, lexicons, patterns);
repeated runs are byte-identical. Pronouns never become sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicons import (
    PatternSet,
    SignifierLexicon,
    SpeakingVerbLexicon,
    contains_speaking_verb,
    find_signifier_spans,
)
from .model import (
    AttributionMap,
    DocAttribution,
    Document,
    InformationChannel,
    Sentence,
    Source,
)
from .names import has_double_quoted_span, normalize_quotes


class MissingAnnotationError(ValueError):
    """The document lacks the dependency annotation governance rules need."""


class MentionKind(Enum):
    PERSON_NE = "person_ne"
    SIGNIFIER = "signifier"


@dataclass(frozen=True)
class EntityMention:
    sentence_index: int
    start: int  # token index, inclusive
    end: int  # token index, exclusive
    surface: str
    kind: MentionKind


@dataclass(frozen=True)
class RuleAttribution:
    """One attribution decision with the trigger that produced it."""

    sentence_index: int
    source_id: int
    rule: str  # "R1", "R2", or "PATTERN(<pattern_id>)"
    trigger_token: int


@dataclass(frozen=True)
class PatternMatch:
    sentence_index: int
    quote_start: int  # codepoint offsets into the sentence text
    quote_end: int
    source: Source
    pattern_id: str


def extract_mentions(
    doc: Document, signifiers: SignifierLexicon
) -> list[EntityMention]:
    """PERSON named entities plus signifier phrases, per sentence.

    Named-entity spans are claimed first; signifiers match only over the
    remaining tokens. Spans containing pronoun tokens are dropped.
    """
    mentions: list[EntityMention] = []
    for sent in doc.sentences:
        claimed: set[int] = set()
        for start, end in _person_spans(sent):
            if any(sent.tokens[i].upos == "PRON" for i in range(start, end)):
                continue
            claimed.update(range(start, end))
            mentions.append(
                EntityMention(
                    sentence_index=sent.index,
                    start=start,
                    end=end,
                    surface=_surface(sent, start, end),
                    kind=MentionKind.PERSON_NE,
                )
            )
        for start, end in find_signifier_spans(sent, signifiers, claimed):
            mentions.append(
                EntityMention(
                    sentence_index=sent.index,
                    start=start,
                    end=end,
                    surface=_surface(sent, start, end),
                    kind=MentionKind.SIGNIFIER,
                )
            )
    return mentions


def _person_spans(sent: Sentence) -> list[tuple[int, int]]:
    spans = []
    start = None
    for tok in sent.tokens:
        tag = tok.entity_tag
        if tag == "B-PERSON":
            if start is not None:
                spans.append((start, tok.index))
            start = tok.index
        elif tag == "I-PERSON":
            if start is None:  # orphan continuation, treat as a new span
                start = tok.index
        else:
            if start is not None:
                spans.append((start, tok.index))
                start = None
    if start is not None:
        spans.append((start, len(sent.tokens)))
    return spans


def _surface(sent: Sentence, start: int, end: int) -> str:
    a, _ = sent.char_span(sent.tokens[start].char_start, sent.tokens[start].char_end)
    _, b = sent.char_span(sent.tokens[end - 1].char_start, sent.tokens[end - 1].char_end)
    return sent.text[a:b]


def canonicalize_entities(
    doc: Document, signifiers: SignifierLexicon
) -> tuple[list[Source], dict[int, list[EntityMention]]]:
    """Cluster mentions into canonical sources.

    PERSON mentions sharing a final name token (case-insensitive) merge;
    the cluster is named by its longest mention. Signifier mentions merge
    on the exact normalized phrase. Source ids follow first-mention order.
    Returns the sources and a source_id -> mentions index.
    """
    mentions = extract_mentions(doc, signifiers)
    clusters: dict[tuple[str, str], list[EntityMention]] = {}
    for m in mentions:
        if m.kind is MentionKind.PERSON_NE:
            key = ("person", m.surface.split()[-1].lower())
        else:
            key = ("signifier", " ".join(m.surface.lower().split()))
        clusters.setdefault(key, []).append(m)

    ordered = sorted(
        clusters.values(), key=lambda ms: (ms[0].sentence_index, ms[0].start)
    )
    sources: list[Source] = []
    by_id: dict[int, list[EntityMention]] = {}
    for sid, ms in enumerate(ordered):
        name = max(ms, key=lambda m: (m.end - m.start, len(m.surface))).surface
        sources.append(
            Source(
                source_id=sid,
                canonical_name=name,
                mentions=tuple((m.sentence_index, m.start, m.end) for m in ms),
            )
        )
        by_id[sid] = ms
    return sources, by_id


def _rule_channel(sent: Sentence) -> InformationChannel:
    if has_double_quoted_span(sent.text):
        return InformationChannel.DIRECT_QUOTE
    return InformationChannel.INDIRECT_QUOTE


def _to_doc_attribution(
    doc: Document,
    sources: list[Source],
    attributions: list[RuleAttribution],
) -> DocAttribution:
    entries: dict[int, set[tuple[int, InformationChannel]]] = {}
    for att in attributions:
        channel = _rule_channel(doc.sentences[att.sentence_index])
        entries.setdefault(att.sentence_index, set()).add((att.source_id, channel))
    used = {sid for pairs in entries.values() for sid, _ in pairs}
    kept = tuple(s for s in sources if s.source_id in used)
    return DocAttribution(
        doc_id=doc.doc_id,
        version_id=doc.version_id,
        sources=kept,
        amap=AttributionMap({i: frozenset(p) for i, p in entries.items()}),
    )


def r1_attribute(
    doc: Document,
    verbs: SpeakingVerbLexicon,
    signifiers: SignifierLexicon,
) -> tuple[DocAttribution, list[RuleAttribution]]:
    """Co-occurrence rule: speaking verb + entity mention in one sentence.

    Every co-occurring source attaches (set semantics)."""
    sources, by_id = canonicalize_entities(doc, signifiers)
    attributions: list[RuleAttribution] = []
    for sent in doc.sentences:
        verb_hits = contains_speaking_verb(sent, verbs)
        if not verb_hits:
            continue
        for src in sources:
            if any(m.sentence_index == sent.index for m in by_id[src.source_id]):
                attributions.append(
                    RuleAttribution(
                        sentence_index=sent.index,
                        source_id=src.source_id,
                        rule="R1",
                        trigger_token=verb_hits[0],
                    )
                )
    return _to_doc_attribution(doc, sources, attributions), attributions


def _span_head(sent: Sentence, start: int, end: int) -> int:
    """Token of a mention span whose syntactic head lies outside the span."""
    for i in range(start, end):
        head = sent.tokens[i].head
        if head is None or not start <= head < end:
            return i
    return end - 1


def r2_attribute(
    doc: Document,
    verbs: SpeakingVerbLexicon,
    signifiers: SignifierLexicon,
    include_passive_subjects: bool = False,
) -> tuple[DocAttribution, list[RuleAttribution]]:
    """Governance rule: mention head is nsubj of a speaking-verb governor."""
    _require_dependencies(doc)
    relations = {"nsubj"}
    if include_passive_subjects:
        relations.add("nsubj:pass")
    sources, by_id = canonicalize_entities(doc, signifiers)
    attributions: list[RuleAttribution] = []
    for src in sources:
        for m in by_id[src.source_id]:
            sent = doc.sentences[m.sentence_index]
            head_tok = sent.tokens[_span_head(sent, m.start, m.end)]
            if head_tok.deprel not in relations or head_tok.head is None:
                continue
            governor = sent.tokens[head_tok.head]
            if governor.lemma.lower() in verbs.lemmas:
                attributions.append(
                    RuleAttribution(
                        sentence_index=m.sentence_index,
                        source_id=src.source_id,
                        rule="R2",
                        trigger_token=governor.index,
                    )
                )
    attributions.sort(key=lambda a: (a.sentence_index, a.source_id))
    return _to_doc_attribution(doc, sources, attributions), attributions


def _require_dependencies(doc: Document) -> None:
    for sent in doc.sentences:
        for tok in sent.tokens:
            if tok.deprel in ("", "_"):
                raise MissingAnnotationError(
                    f"{doc.doc_id}: sentence {sent.index} token {tok.index} "
                    "lacks a dependency relation"
                )


def match_patterns(
    doc: Document,
    patterns: PatternSet,
    signifiers: SignifierLexicon,
) -> tuple[DocAttribution, list[PatternMatch]]:
    """Greedy left-to-right template matching within each sentence.

    The Q slot must land inside a double-quoted span (the templates carry
    the quote marks as literals) and the S slot must cover a canonicalized
    mention. Overlapping candidates resolve earliest-start-then-longest.
    """
    sources, by_id = canonicalize_entities(doc, signifiers)
    matches: list[PatternMatch] = []
    attributions: list[RuleAttribution] = []
    for sent in doc.sentences:
        text = normalize_quotes(sent.text)
        candidates = []
        for pat in patterns.patterns:
            for m in pat.to_regex().finditer(text):
                hit = _mention_in_region(sent, m.span("S"), sources, by_id)
                if hit is None:
                    continue
                candidates.append((m.start(), -m.end(), pat.pattern_id, m, hit))
        candidates.sort(key=lambda c: (c[0], c[1], c[2]))
        taken: list[tuple[int, int]] = []
        for start, neg_end, pattern_id, m, src in candidates:
            end = -neg_end
            if any(start < e and s < end for s, e in taken):
                continue
            taken.append((start, end))
            q_start, q_end = m.span("Q")
            matches.append(
                PatternMatch(
                    sentence_index=sent.index,
                    quote_start=q_start,
                    quote_end=q_end,
                    source=src,
                    pattern_id=pattern_id,
                )
            )
            attributions.append(
                RuleAttribution(
                    sentence_index=sent.index,
                    source_id=src.source_id,
                    rule=f"PATTERN({pattern_id})",
                    trigger_token=_span_head(
                        sent, *_first_mention_span(by_id[src.source_id], sent.index)
                    ),
                )
            )
    return _to_doc_attribution(doc, sources, attributions), matches


def _first_mention_span(
    mentions: list[EntityMention], sentence_index: int
) -> tuple[int, int]:
    for m in mentions:
        if m.sentence_index == sentence_index:
            return m.start, m.end
    return mentions[0].start, mentions[0].end


def _mention_in_region(
    sent: Sentence,
    region: tuple[int, int],
    sources: list[Source],
    by_id: dict[int, list[EntityMention]],
) -> Source | None:
    """Earliest-mentioned source with a mention inside a codepoint region."""
    lo, hi = region
    best: tuple[int, int] | None = None
    for src in sources:
        for m in by_id[src.source_id]:
            if m.sentence_index != sent.index:
                continue
            a, _ = sent.char_span(
                sent.tokens[m.start].char_start, sent.tokens[m.start].char_end
            )
            _, b = sent.char_span(
                sent.tokens[m.end - 1].char_start, sent.tokens[m.end - 1].char_end
            )
            if lo <= a and b <= hi:
                if best is None or a < best[0]:
                    best = (a, src.source_id)
    return None if best is None else next(
        s for s in sources if s.source_id == best[1]
    )
