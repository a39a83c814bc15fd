"""Name normalization shared by entity canonicalization, prediction
resolution, and evaluation, so that modeling and scoring agree on when two
source names denote the same entity."""

from __future__ import annotations

import re

_HONORIFICS = {"mr", "ms", "mrs", "dr"}
_ARTICLES = {"the", "a", "an"}

_QUOTE_TRANSLATION = str.maketrans(
    {
        "“": '"',
        "”": '"',
        "„": '"',
        "‟": '"',
        "«": '"',
        "»": '"',
        "‘": "'",
        "’": "'",
        "‚": "'",
        "‛": "'",
    }
)

_PUNCT_RE = re.compile(r"[^\w\s]", re.UNICODE)


def normalize_quotes(text: str) -> str:
    """Map typographic quote marks onto ASCII ones (length-preserving)."""
    return text.translate(_QUOTE_TRANSLATION)


def has_double_quoted_span(text: str) -> bool:
    """True when the text contains a non-empty double-quoted span."""
    marks = [i for i, c in enumerate(normalize_quotes(text)) if c == '"']
    return any(marks[k + 1] - marks[k] > 1 for k in range(0, len(marks) - 1, 2))


def normalize_name(name: str) -> str:
    """Canonical comparison form of a source name.

    Lowercases, strips punctuation, drops honorifics and leading articles,
    and collapses whitespace.
    """
    cleaned = _PUNCT_RE.sub(" ", name.lower())
    tokens = [t for t in cleaned.split() if t not in _HONORIFICS]
    while tokens and tokens[0] in _ARTICLES:
        tokens = tokens[1:]
    return " ".join(tokens)


def last_name_token(name: str) -> str:
    norm = normalize_name(name)
    return norm.rsplit(" ", 1)[-1] if norm else ""


def names_match(raw: str, candidate: str) -> int:
    """Strength of a match between a raw name and a candidate name.

    3 = normalized equality, 2 = last-token equality, 1 = substring
    containment after normalization, 0 = no match. Higher is stronger;
    callers resolve ties by earliest-mentioned candidate.
    """
    a, b = normalize_name(raw), normalize_name(candidate)
    if not a or not b:
        return 0
    if a == b:
        return 3
    if a.rsplit(" ", 1)[-1] == b.rsplit(" ", 1)[-1]:
        return 2
    if a in b or b in a:
        return 1
    return 0


def is_null_answer(raw: str) -> bool:
    """True for the literal null answer "None" (case-insensitive)."""
    return raw.strip().lower() == "none"
