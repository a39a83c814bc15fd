"""Small constructors shared by test modules."""

from __future__ import annotations

from newsattrib.model import (
    AttributionMap,
    DocAttribution,
    Document,
    Sentence,
    Source,
    Token,
)


def make_sentence(
    words: list[str],
    upos: list[str] | None = None,
    lemmas: list[str] | None = None,
    tags: list[str] | None = None,
    heads: list[int | None] | None = None,
    deprels: list[str] | None = None,
    index: int = 0,
    gold=None,
) -> Sentence:
    """Single-space-joined sentence; token 0 is the root unless heads given."""
    n = len(words)
    upos = upos or ["NOUN"] * n
    lemmas = lemmas or [w.lower() for w in words]
    tags = tags or ["O"] * n
    heads = heads if heads is not None else [None] + [0] * (n - 1)
    deprels = deprels or ["root" if h is None else "dep" for h in heads]
    tokens = []
    pos = 0
    for i, w in enumerate(words):
        start = pos
        end = start + len(w.encode("utf-8"))
        tokens.append(
            Token(
                index=i,
                form=w,
                lemma=lemmas[i],
                upos=upos[i],
                head=heads[i],
                deprel=deprels[i],
                char_start=start,
                char_end=end,
                entity_tag=tags[i],
            )
        )
        pos = end + 1
    return Sentence(index=index, text=" ".join(words), tokens=tuple(tokens), gold=gold)


def make_doc(sentences, doc_id="doc", version_id=0, outlet=None, topic=None):
    return Document(
        doc_id=doc_id,
        version_id=version_id,
        sentences=tuple(sentences),
        outlet=outlet,
        topic=topic,
    )


def attr_for(doc, entries, names=None):
    """DocAttribution over the given {sentence: {(sid, channel)}} entries.

    Sources are created for exactly the ids used; ``names`` overrides the
    default "s<id>" canonical names.
    """
    amap = AttributionMap({i: frozenset(p) for i, p in entries.items()})
    used = sorted({sid for pairs in entries.values() for sid, _ in pairs})
    names = names or {}
    return DocAttribution(
        doc_id=doc.doc_id,
        version_id=doc.version_id,
        sources=tuple(
            Source(source_id=i, canonical_name=names.get(i, f"s{i}"))
            for i in used
        ),
        amap=amap,
    )
