"""Line-delimited JSON readers and writers for every on-disk artifact:
annotated documents, attribution outputs, model predictions, version
pairs, and probe examples.

One record per line so large corpora stream; memory use is bounded by the
largest single record. Token offsets are UTF-8 byte offsets into the
sentence text. Floats are written with six decimal places and field order
is fixed, so outputs are byte-deterministic given inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .model import (
    AttributionMap,
    DocAttribution,
    Document,
    GoldLabel,
    InformationChannel,
    Sentence,
    Source,
    StructuralError,
    Token,
)


class RecordError(ValueError):
    """A malformed record, with enough context to locate it."""

    def __init__(self, path: str | Path, line_no: int, message: str):
        self.path = str(path)
        self.line_no = line_no
        self.message = message
        super().__init__(f"{path}:{line_no}: {message}")


ErrorSink = Callable[[RecordError], None]


def _round6(x: float) -> float:
    return float(f"{x:.6f}")


def _iter_records(path: str | Path) -> Iterator[tuple[int, dict]]:
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RecordError(path, line_no, f"invalid JSON: {exc}") from exc
            if not isinstance(obj, dict):
                raise RecordError(path, line_no, "record is not an object")
            yield line_no, obj


def _dispatch(
    path: str | Path,
    parse: Callable[[dict], object],
    on_error: ErrorSink | None,
) -> Iterator[object]:
    for line_no, obj in _iter_records(path):
        try:
            yield parse(obj)
        except RecordError:
            raise
        except (StructuralError, KeyError, TypeError, ValueError) as exc:
            err = RecordError(
                path, line_no, f"{exc} (doc_id={obj.get('doc_id', '?')})"
            )
            if on_error is None:
                raise err from exc
            on_error(err)


# --- documents ---------------------------------------------------------------


def _parse_token(index: int, obj: dict) -> Token:
    return Token(
        index=index,
        form=obj["form"],
        lemma=obj["lemma"],
        upos=obj["upos"],
        head=obj["head"],
        deprel=obj["deprel"],
        entity_tag=obj["entity_tag"],
        char_start=int(obj["char_start"]),
        char_end=int(obj["char_end"]),
    )


def _parse_gold(obj: dict | None) -> GoldLabel | None:
    if obj is None:
        return None
    return GoldLabel(
        is_sourced=bool(obj["is_sourced"]),
        source_names=tuple(obj.get("source_names", ())),
        channel=InformationChannel.parse(obj["channel"]),
    )


def parse_document(obj: dict) -> Document:
    sentences = []
    for i, s in enumerate(obj["sentences"]):
        tokens = tuple(_parse_token(j, t) for j, t in enumerate(s["tokens"]))
        sentences.append(
            Sentence(index=i, text=s["text"], tokens=tokens, gold=_parse_gold(s.get("gold")))
        )
    return Document(
        doc_id=obj["doc_id"],
        version_id=int(obj["version_id"]),
        sentences=tuple(sentences),
        outlet=obj.get("outlet"),
        topic=obj.get("topic"),
    )


def document_to_record(doc: Document) -> dict:
    rec: dict = {"doc_id": doc.doc_id, "version_id": doc.version_id}
    if doc.outlet is not None:
        rec["outlet"] = doc.outlet
    if doc.topic is not None:
        rec["topic"] = doc.topic
    rec["sentences"] = []
    for sent in doc.sentences:
        s: dict = {
            "text": sent.text,
            "tokens": [
                {
                    "form": t.form,
                    "lemma": t.lemma,
                    "upos": t.upos,
                    "head": t.head,
                    "deprel": t.deprel,
                    "entity_tag": t.entity_tag,
                    "char_start": t.char_start,
                    "char_end": t.char_end,
                }
                for t in sent.tokens
            ],
        }
        if sent.gold is not None:
            s["gold"] = {
                "is_sourced": sent.gold.is_sourced,
                "source_names": list(sent.gold.source_names),
                "channel": sent.gold.channel.serialize(),
            }
        rec["sentences"].append(s)
    return rec


def read_documents(
    path: str | Path, on_error: ErrorSink | None = None
) -> Iterator[Document]:
    """Stream validated documents in file order.

    Malformed records raise RecordError naming the line, or are passed to
    ``on_error`` and skipped when a sink is given.
    """
    yield from _dispatch(path, parse_document, on_error)  # type: ignore[misc]


def write_documents(docs: Iterable[Document], path: str | Path) -> int:
    return _write_records(path, (document_to_record(d) for d in docs))


def _write_records(path: str | Path, records: Iterable[dict]) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False))
            fh.write("\n")
            count += 1
    return count


# --- attributions ------------------------------------------------------------


def attribution_to_record(attr: DocAttribution) -> dict:
    return {
        "doc_id": attr.doc_id,
        "version_id": attr.version_id,
        "sources": [
            {
                "source_id": s.source_id,
                "canonical_name": s.canonical_name,
                "mentions": [list(m) for m in s.mentions],
                "is_passive": s.is_passive,
            }
            for s in attr.sources
        ],
        "entries": {
            str(idx): sorted(
                [sid, ch.serialize()] for sid, ch in pairs
            )
            for idx, pairs in sorted(attr.amap.entries.items())
        },
    }


def parse_attribution(obj: dict) -> DocAttribution:
    sources = tuple(
        Source(
            source_id=int(s["source_id"]),
            canonical_name=s["canonical_name"],
            mentions=tuple(tuple(m) for m in s.get("mentions", ())),
            is_passive=bool(s.get("is_passive", False)),
        )
        for s in obj["sources"]
    )
    entries = {
        int(idx): frozenset(
            (int(sid), InformationChannel.parse(ch)) for sid, ch in pairs
        )
        for idx, pairs in obj["entries"].items()
    }
    return DocAttribution(
        doc_id=obj["doc_id"],
        version_id=int(obj["version_id"]),
        sources=sources,
        amap=AttributionMap(entries),
    )


def write_attributions(attrs: Iterable[DocAttribution], path: str | Path) -> int:
    return _write_records(path, (attribution_to_record(a) for a in attrs))


def read_attributions(
    path: str | Path, on_error: ErrorSink | None = None
) -> Iterator[DocAttribution]:
    yield from _dispatch(path, parse_attribution, on_error)  # type: ignore[misc]


# --- predictions -------------------------------------------------------------


@dataclass(frozen=True)
class PredictionRecord:
    """External model output for one sentence.

    At least one of ``detector_score`` (probability the sentence is
    sourced) and ``retrieved_source`` (generated source name, with the
    literal "None" as the null answer) is present. ``version_id``
    defaults to 0 for single-version corpora.
    """

    doc_id: str
    sentence_index: int
    version_id: int = 0
    detector_score: float | None = None
    retrieved_source: str | None = None

    def __post_init__(self):
        if self.detector_score is None and self.retrieved_source is None:
            raise StructuralError(
                "prediction record needs a detector score or a retrieved source"
            )
        if self.detector_score is not None and not 0.0 <= self.detector_score <= 1.0:
            raise StructuralError(
                f"detector score {self.detector_score} outside [0, 1]"
            )
        if self.sentence_index < 0:
            raise StructuralError("negative sentence index")


def parse_prediction(obj: dict) -> PredictionRecord:
    score = obj.get("detector_score")
    return PredictionRecord(
        doc_id=obj["doc_id"],
        sentence_index=int(obj["sentence_index"]),
        version_id=int(obj.get("version_id", 0)),
        detector_score=None if score is None else float(score),
        retrieved_source=obj.get("retrieved_source"),
    )


def prediction_to_record(pred: PredictionRecord) -> dict:
    rec: dict = {
        "doc_id": pred.doc_id,
        "sentence_index": pred.sentence_index,
        "version_id": pred.version_id,
    }
    if pred.detector_score is not None:
        rec["detector_score"] = _round6(pred.detector_score)
    if pred.retrieved_source is not None:
        rec["retrieved_source"] = pred.retrieved_source
    return rec


def read_predictions(
    path: str | Path, on_error: ErrorSink | None = None
) -> Iterator[PredictionRecord]:
    yield from _dispatch(path, parse_prediction, on_error)  # type: ignore[misc]


def write_predictions(preds: Iterable[PredictionRecord], path: str | Path) -> int:
    return _write_records(path, (prediction_to_record(p) for p in preds))


# --- version pairs -----------------------------------------------------------


@dataclass(frozen=True)
class VersionPairRecord:
    """A consecutive pair of article versions with sentence edit counts."""

    doc_id: str
    version_t: int
    version_t_plus_1: int
    added: int
    deleted: int
    edited: int

    def __post_init__(self):
        if self.version_t >= self.version_t_plus_1:
            raise StructuralError(
                f"{self.doc_id}: version_t {self.version_t} must precede "
                f"version_t_plus_1 {self.version_t_plus_1}"
            )
        if min(self.added, self.deleted, self.edited) < 0:
            raise StructuralError("edit counts must be >= 0")


def parse_version_pair(obj: dict) -> VersionPairRecord:
    return VersionPairRecord(
        doc_id=obj["doc_id"],
        version_t=int(obj["version_t"]),
        version_t_plus_1=int(obj["version_t_plus_1"]),
        added=int(obj["added"]),
        deleted=int(obj["deleted"]),
        edited=int(obj["edited"]),
    )


def version_pair_to_record(pair: VersionPairRecord) -> dict:
    return {
        "doc_id": pair.doc_id,
        "version_t": pair.version_t,
        "version_t_plus_1": pair.version_t_plus_1,
        "added": pair.added,
        "deleted": pair.deleted,
        "edited": pair.edited,
    }


def read_version_pairs(
    path: str | Path, on_error: ErrorSink | None = None
) -> Iterator[VersionPairRecord]:
    yield from _dispatch(path, parse_version_pair, on_error)  # type: ignore[misc]


def write_version_pairs(
    pairs: Iterable[VersionPairRecord], path: str | Path
) -> int:
    return _write_records(path, (version_pair_to_record(p) for p in pairs))
