"""Core domain types: documents, sources, attributions, information channels.

Everything here is immutable after construction and safe to share across
threads. Offsets are UTF-8 *byte* offsets into the sentence text, matching
the on-disk record format (see corpus_io).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources


class StructuralError(ValueError):
    """A document, source list, or attribution map violates an invariant."""


class InformationChannel(Enum):
    """Channel through which information reached the journalist.

    The canonical taxonomy is the sixteen annotation categories plus
    NO_QUOTE for unsourced sentences. DIRECT_QUOTE / INDIRECT_QUOTE are
    accepted refinements of QUOTE (corpora annotated at quote granularity
    use them, and the deterministic attributors emit them); OTHER is the
    bucket every unknown label parses into.
    """

    NO_QUOTE = "no_quote"
    QUOTE = "quote"
    DIRECT_QUOTE = "direct_quote"
    INDIRECT_QUOTE = "indirect_quote"
    BACKGROUND = "background"
    NARRATIVE = "narrative"
    DIRECT_OBSERVATION = "direct_observation"
    PUBLIC_SPEECH = "public_speech"
    COMMUNICATION = "communication"
    PUBLISHED_WORK = "published_work"
    STATEMENT = "statement"
    LAWSUIT = "lawsuit"
    PRICE_SIGNAL = "price_signal"
    VOTE_POLL = "vote_poll"
    DOCUMENT = "document"
    PRESS_REPORT = "press_report"
    SOCIAL_MEDIA_POST = "social_media_post"
    PROPOSAL_ORDER_LAW = "proposal_order_law"
    DECLINED_COMMENT = "declined_comment"
    OTHER = "other"

    def serialize(self) -> str:
        return self.value

    @classmethod
    def parse(cls, label: str) -> "InformationChannel":
        """Parse a channel label; unknown labels map to OTHER."""
        key = re.sub(r"[\s/\-]+", "_", label.strip().lower())
        try:
            return cls(key)
        except ValueError:
            return cls.OTHER


#: The sixteen canonical annotation categories (NO_QUOTE and the quote
#: refinements excluded).
CANONICAL_CHANNELS: tuple[InformationChannel, ...] = (
    InformationChannel.QUOTE,
    InformationChannel.BACKGROUND,
    InformationChannel.NARRATIVE,
    InformationChannel.DIRECT_OBSERVATION,
    InformationChannel.PUBLIC_SPEECH,
    InformationChannel.COMMUNICATION,
    InformationChannel.PUBLISHED_WORK,
    InformationChannel.STATEMENT,
    InformationChannel.LAWSUIT,
    InformationChannel.PRICE_SIGNAL,
    InformationChannel.VOTE_POLL,
    InformationChannel.DOCUMENT,
    InformationChannel.PRESS_REPORT,
    InformationChannel.SOCIAL_MEDIA_POST,
    InformationChannel.PROPOSAL_ORDER_LAW,
    InformationChannel.DECLINED_COMMENT,
)

#: Gold source-name marker for attributions without a named entity.
PASSIVE_MARKER = "passive voice"


@dataclass(frozen=True)
class Token:
    """One token of a sentence with syntactic and entity annotations.

    ``head`` is the 0-based index of the syntactic head within the
    sentence, or None for the root. ``char_start``/``char_end`` are UTF-8
    byte offsets into the sentence text.
    """

    index: int
    form: str
    lemma: str
    upos: str
    head: int | None
    deprel: str
    entity_tag: str
    char_start: int
    char_end: int

    def __post_init__(self):
        if self.head is not None and self.head == self.index:
            raise StructuralError(f"token {self.index} is its own head")
        if not 0 <= self.char_start < self.char_end:
            raise StructuralError(
                f"token {self.index} has invalid span "
                f"[{self.char_start}, {self.char_end})"
            )
        if not _ENTITY_TAG_RE.match(self.entity_tag):
            raise StructuralError(
                f"token {self.index} has malformed entity tag {self.entity_tag!r}"
            )


_ENTITY_TAG_RE = re.compile(r"^(O|[BI]-[A-Za-z_]+)$")


@dataclass(frozen=True)
class GoldLabel:
    """Hand annotation for one sentence."""

    is_sourced: bool
    source_names: tuple[str, ...]
    channel: InformationChannel

    def __post_init__(self):
        object.__setattr__(self, "source_names", tuple(self.source_names))
        if not self.is_sourced:
            if self.source_names:
                raise StructuralError("unsourced gold label carries source names")
            if self.channel is not InformationChannel.NO_QUOTE:
                raise StructuralError("unsourced gold label must use NO_QUOTE")


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[Token, ...]
    gold: GoldLabel | None = None

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        _validate_tokens(self.text, self.tokens)

    def char_span(self, start_byte: int, end_byte: int) -> tuple[int, int]:
        """Translate a byte span into a codepoint span of ``text``."""
        prefix = self.text.encode("utf-8")
        return (
            len(prefix[:start_byte].decode("utf-8")),
            len(prefix[:end_byte].decode("utf-8")),
        )


def _validate_tokens(text: str, tokens: tuple[Token, ...]) -> None:
    encoded = text.encode("utf-8")
    prev_end = 0
    for i, tok in enumerate(tokens):
        if tok.index != i:
            raise StructuralError(f"token index {tok.index} at position {i}")
        if tok.char_start < prev_end:
            raise StructuralError(f"token {i} overlaps or reorders spans")
        gap = encoded[prev_end:tok.char_start]
        if gap and not gap.decode("utf-8").isspace():
            raise StructuralError(f"non-whitespace gap before token {i}")
        if tok.char_end > len(encoded):
            raise StructuralError(f"token {i} span exceeds sentence text")
        if encoded[tok.char_start:tok.char_end] != tok.form.encode("utf-8"):
            raise StructuralError(
                f"token {i} form {tok.form!r} does not match its span"
            )
        if tok.head is not None and not 0 <= tok.head < len(tokens):
            raise StructuralError(f"token {i} head {tok.head} out of range")
        prev_end = tok.char_end
    tail = encoded[prev_end:]
    if tail and not tail.decode("utf-8").isspace():
        raise StructuralError("non-whitespace text after last token")
    roots = [t.index for t in tokens if t.head is None]
    if tokens and len(roots) != 1:
        raise StructuralError(f"expected exactly one root, found {len(roots)}")


@dataclass(frozen=True)
class Document:
    doc_id: str
    version_id: int
    sentences: tuple[Sentence, ...]
    outlet: str | None = None
    topic: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        if not self.doc_id:
            raise StructuralError("doc_id must be non-empty")
        if self.version_id < 0:
            raise StructuralError("version_id must be >= 0")
        if not self.sentences:
            raise StructuralError(f"document {self.doc_id} has zero sentences")
        for i, sent in enumerate(self.sentences):
            if sent.index != i:
                raise StructuralError(
                    f"document {self.doc_id}: sentence index {sent.index} "
                    f"at position {i}"
                )

    @property
    def n_sentences(self) -> int:
        return len(self.sentences)


@dataclass(frozen=True)
class Source:
    """A canonical information source: the entity a sentence is attributed to.

    ``mentions`` are (sentence index, token start, token end) spans, end
    exclusive. Passive sources (an attribution exists but no entity is
    named) carry the literal passive marker as their name.
    """

    source_id: int
    canonical_name: str
    mentions: tuple[tuple[int, int, int], ...] = ()
    is_passive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mentions", tuple(tuple(m) for m in self.mentions))
        if not self.canonical_name and not self.is_passive:
            raise StructuralError("non-passive source needs a canonical name")


@dataclass(frozen=True)
class AttributionMap:
    """The attribution function: sentence index -> set of (source_id, channel).

    A sentence absent from ``entries`` is unattributed. Empty sets are
    normalized away on construction so absence is the only encoding of
    "no source".
    """

    entries: dict[int, frozenset[tuple[int, InformationChannel]]] = field(
        default_factory=dict
    )

    def __post_init__(self):
        normalized: dict[int, frozenset[tuple[int, InformationChannel]]] = {}
        for idx, pairs in self.entries.items():
            if idx < 0:
                raise StructuralError(f"negative sentence index {idx}")
            fs = frozenset((int(sid), ch) for sid, ch in pairs)
            if fs:
                normalized[idx] = fs
        object.__setattr__(self, "entries", normalized)

    def source_ids(self) -> frozenset[int]:
        return frozenset(sid for pairs in self.entries.values() for sid, _ in pairs)

    def __len__(self) -> int:
        return len(self.entries)


def derive_detection(amap: AttributionMap, n_sentences: int) -> list[bool]:
    """Per-sentence detection decisions implied by an attribution map."""
    if n_sentences < 0:
        raise ValueError("n_sentences must be >= 0")
    out = [False] * n_sentences
    for idx in amap.entries:
        if idx >= n_sentences:
            raise StructuralError(
                f"attribution entry for sentence {idx} but document has "
                f"{n_sentences} sentences"
            )
        out[idx] = True
    return out


def sources_of(
    amap: AttributionMap, sentence_index: int, n_sentences: int
) -> frozenset[int]:
    """The set of source ids attributed to one sentence (empty if none)."""
    if not 0 <= sentence_index < n_sentences:
        raise IndexError(f"sentence index {sentence_index} out of range")
    return frozenset(sid for sid, _ in amap.entries.get(sentence_index, ()))


@dataclass(frozen=True)
class DocAttribution:
    """A document's canonical source list plus its attribution map.

    Invariants: every map entry references a listed source, every listed
    source has at least one entry, and source ids are unique.
    """

    doc_id: str
    version_id: int
    sources: tuple[Source, ...]
    amap: AttributionMap

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        ids = [s.source_id for s in self.sources]
        if len(set(ids)) != len(ids):
            raise StructuralError(f"duplicate source ids in {self.doc_id}")
        listed = set(ids)
        used = self.amap.source_ids()
        if not used <= listed:
            raise StructuralError(
                f"{self.doc_id}: attribution references unknown sources "
                f"{sorted(used - listed)}"
            )
        if not listed <= used:
            raise StructuralError(
                f"{self.doc_id}: sources {sorted(listed - used)} have no entries"
            )

    def source_by_id(self, source_id: int) -> Source:
        for s in self.sources:
            if s.source_id == source_id:
                return s
        raise KeyError(source_id)

    def names_of(self, sentence_index: int, n_sentences: int) -> list[str]:
        """Canonical names attributed to a sentence, in source-id order."""
        ids = sorted(sources_of(self.amap, sentence_index, n_sentences))
        return [self.source_by_id(i).canonical_name for i in ids]


# --- channel grouping -------------------------------------------------------

_GROUPS_CACHE: dict | None = None


def _load_groups() -> dict:
    global _GROUPS_CACHE
    if _GROUPS_CACHE is None:
        path = resources.files("newsattrib").joinpath("data/channel_groups.json")
        _GROUPS_CACHE = json.loads(path.read_text(encoding="utf-8"))
    return _GROUPS_CACHE


def group_columns(view: str = "table4") -> list[str]:
    """Column order of a grouped-channel view (excludes the unsourced group)."""
    return list(_load_groups()[view]["columns"])


def channel_group(channel: InformationChannel, view: str = "table4") -> str | None:
    """Map a channel into its grouped-view column; None = unsourced group."""
    return _load_groups()[view]["map"][channel.value]
