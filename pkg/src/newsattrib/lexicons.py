"""Lexical resources for the rules attributors: speaking verbs, noun-phrase
source signifiers, and quote/speaker patterns.

All three load from plain-text files, one entry per line, with full-line
``#`` comments. Loading is order-independent: permuting input lines yields
an identical lexicon.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .model import Sentence


class LexiconError(ValueError):
    """Configuration problem with a lexicon or pattern file."""


@dataclass(frozen=True)
class SpeakingVerbLexicon:
    lemmas: frozenset[str]

    def __post_init__(self):
        _check_entries(self.lemmas, "speaking-verb")

    def __len__(self) -> int:
        return len(self.lemmas)


@dataclass(frozen=True)
class SignifierLexicon:
    """Lowercase noun-phrase source descriptors, possibly multi-token."""

    phrases: frozenset[str]

    def __post_init__(self):
        if not self.phrases:
            raise LexiconError("signifier lexicon is empty")
        for p in self.phrases:
            if p != p.strip().lower() or not p:
                raise LexiconError(f"signifier entry not normalized: {p!r}")

    def __len__(self) -> int:
        return len(self.phrases)

    def max_phrase_tokens(self) -> int:
        return max(len(p.split()) for p in self.phrases)


def _check_entries(entries: frozenset[str], kind: str) -> None:
    if not entries:
        raise LexiconError(f"{kind} lexicon is empty")
    for e in entries:
        if not e or e != e.lower() or any(c.isspace() for c in e):
            raise LexiconError(f"{kind} entry not normalized: {e!r}")


@dataclass(frozen=True)
class QuotePattern:
    """A lexical template over a quote slot Q and a speaker slot S.

    ``parts`` alternates literal strings with the slot markers "Q" and "S";
    exactly one of each, and the slots may not be adjacent (a literal must
    anchor the boundary between them).
    """

    pattern_id: str
    parts: tuple[tuple[str, str], ...]  # ("lit", text) or ("slot", "Q"/"S")

    @classmethod
    def parse(cls, template: str) -> "QuotePattern":
        template = template.strip()
        if not template:
            raise LexiconError("empty pattern template")
        parts: list[tuple[str, str]] = []
        pos = 0
        for m in re.finditer(r"\$([QS])", template):
            if m.start() > pos:
                parts.append(("lit", template[pos:m.start()]))
            parts.append(("slot", m.group(1)))
            pos = m.end()
        if pos < len(template):
            parts.append(("lit", template[pos:]))
        slots = [p[1] for p in parts if p[0] == "slot"]
        if sorted(slots) != ["Q", "S"]:
            raise LexiconError(
                f"pattern must contain exactly one $Q and one $S: {template!r}"
            )
        for a, b in zip(parts, parts[1:]):
            if a[0] == "slot" and b[0] == "slot":
                raise LexiconError(f"pattern slots lack an anchoring literal: {template!r}")
        if not any(p[0] == "lit" and p[1].strip() for p in parts):
            raise LexiconError(f"pattern has no anchoring literal: {template!r}")
        return cls(pattern_id=template, parts=tuple(parts))

    def to_regex(self) -> re.Pattern[str]:
        out = []
        for i, (kind, val) in enumerate(self.parts):
            if kind == "lit":
                out.append(re.escape(val))
            elif val == "Q":
                out.append(r'(?P<Q>[^"]+)')
            else:
                # lazy unless the slot ends the template
                tail = i == len(self.parts) - 1
                out.append(r'(?P<S>[^"]+)' if tail else r'(?P<S>[^"]+?)')
        return re.compile("".join(out))


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[QuotePattern, ...]

    def __post_init__(self):
        if not self.patterns:
            raise LexiconError("pattern set is empty")

    def __len__(self) -> int:
        return len(self.patterns)


def _read_entries(path: str | Path) -> list[str]:
    path = Path(path)
    if not path.is_file():
        raise LexiconError(f"lexicon file not found: {path}")
    entries = []
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            entries.append(stripped)
    return entries


def load_lexicon(
    path: str | Path, kind: str
) -> SpeakingVerbLexicon | SignifierLexicon | PatternSet:
    """Load a lexicon of the given kind ("verbs", "signifiers", "patterns")."""
    entries = _read_entries(path)
    if not entries:
        raise LexiconError(f"lexicon {path} is empty after filtering")
    if kind == "verbs":
        return SpeakingVerbLexicon(frozenset(e.lower() for e in entries))
    if kind == "signifiers":
        return SignifierLexicon(
            frozenset(" ".join(e.lower().split()) for e in entries)
        )
    if kind == "patterns":
        parsed = {p.pattern_id: p for p in map(QuotePattern.parse, entries)}
        return PatternSet(tuple(parsed[k] for k in sorted(parsed)))
    raise LexiconError(f"unknown lexicon kind: {kind}")


def contains_speaking_verb(
    sentence: Sentence, lexicon: SpeakingVerbLexicon
) -> list[int]:
    """Indices of verb tokens whose lemma is in the speaking lexicon."""
    return [
        t.index
        for t in sentence.tokens
        if t.upos == "VERB" and t.lemma.lower() in lexicon.lemmas
    ]


def find_signifier_spans(
    sentence: Sentence,
    lexicon: SignifierLexicon,
    claimed: set[int] | None = None,
) -> list[tuple[int, int]]:
    """Signifier mentions as (token start, token end) spans, end exclusive.

    Longest-match-first over lowercase token windows, scanning left to
    right; matched tokens are consumed so spans never overlap. Tokens in
    ``claimed`` (e.g. named-entity spans) and pronouns are skipped.
    """
    claimed = set() if claimed is None else set(claimed)
    forms = [t.form.lower() for t in sentence.tokens]
    spans: list[tuple[int, int]] = []
    max_len = lexicon.max_phrase_tokens()
    i = 0
    while i < len(forms):
        matched = False
        for length in range(min(max_len, len(forms) - i), 0, -1):
            window = range(i, i + length)
            if any(j in claimed for j in window):
                continue
            if any(sentence.tokens[j].upos == "PRON" for j in window):
                continue
            if " ".join(forms[i:i + length]) in lexicon.phrases:
                spans.append((i, i + length))
                claimed.update(window)
                i += length
                matched = True
                break
        if not matched:
            i += 1
    return spans
