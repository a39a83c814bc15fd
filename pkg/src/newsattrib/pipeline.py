"""Turns external model predictions into attributions.

Detection scores gate sentences at a threshold; retrieved source names are
resolved against the document's canonical source list through a fixed
cascade (exact, last-token, substring) shared with the evaluator. The
+Nones variant lets the retrieval stage's null answer cancel a detection
positive, so its attributions are always a subset of the plain pipeline's.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from enum import Enum

import requests

from .model import (
    AttributionMap,
    DocAttribution,
    Document,
    InformationChannel,
    Source,
)
from .names import has_double_quoted_span, is_null_answer, names_match

log = logging.getLogger(__name__)


class PipelineMode(Enum):
    PIPELINE = "pipeline"
    PIPELINE_PLUS_NONES = "pipeline+nones"


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class EndpointConfig:
    url: str
    token_env: str = "NEWSATTRIB_ENDPOINT_TOKEN"
    timeout: float = 30.0
    retries: int = 3


@dataclass(frozen=True)
class PipelineConfig:
    detection_threshold: float = 0.5
    mode: PipelineMode = PipelineMode.PIPELINE
    coref_variant: bool = False  # inputs are pre-resolved documents
    endpoint: EndpointConfig | None = None
    prefix_examples: tuple[tuple[str, str], ...] = field(default_factory=tuple)
    max_prompt_chars: int | None = None

    def __post_init__(self):
        if not 0.0 < self.detection_threshold < 1.0:
            raise ConfigurationError(
                f"detection threshold {self.detection_threshold} outside (0, 1)"
            )


UNMATCHED = None  # sentinel meaning of ResolvedAttribution.matched_source_id


@dataclass(frozen=True)
class ResolvedAttribution:
    sentence_index: int
    raw: str
    matched_source_id: int | None
    provenance: str  # "file" | "endpoint"


def build_retrieval_prompt(
    doc: Document, sentence_index: int, config: PipelineConfig | None = None
) -> str:
    """The generation prompt: full article text, then the question."""
    if not 0 <= sentence_index < doc.n_sentences:
        raise IndexError(f"sentence index {sentence_index} out of range")
    article = " ".join(s.text for s in doc.sentences)
    sentence = doc.sentences[sentence_index].text
    prompt = f"{article} To which source can we attribute the sentence {sentence}?"
    if config is not None and config.prefix_examples:
        prefix = " ".join(
            f"To which source can we attribute the sentence {s}? {src}"
            for s, src in config.prefix_examples
        )
        prompt = f"{prefix} {prompt}"
    if config is not None and config.max_prompt_chars is not None:
        if len(prompt) > config.max_prompt_chars:
            log.warning(
                "prompt for %s[%d] truncated from %d to %d chars",
                doc.doc_id,
                sentence_index,
                len(prompt),
                config.max_prompt_chars,
            )
            prompt = prompt[-config.max_prompt_chars:]
    return prompt


def resolve_retrieved_name(raw: str, sources: list[Source]) -> int | None:
    """Resolve a generated name to a source id, or UNMATCHED (None).

    Cascade: normalized equality, then last-token equality, then substring
    containment after normalization; ties break toward the earliest-
    mentioned source (lowest id). Total: every string resolves to exactly
    one of {source id, UNMATCHED}.
    """
    best_strength = 0
    best_id: int | None = None
    for src in sorted(sources, key=lambda s: s.source_id):
        strength = names_match(raw, src.canonical_name)
        if strength > best_strength:
            best_strength = strength
            best_id = src.source_id
    return best_id


@dataclass(frozen=True)
class PipelineResult:
    attribution: DocAttribution
    resolutions: tuple[ResolvedAttribution, ...]
    missing_retrieval: tuple[int, ...]  # detected sentences with no prediction


def compose_pipeline(
    doc: Document,
    sources: list[Source],
    detection: dict[int, float],
    retrieval: dict[int, str],
    config: PipelineConfig,
    provenance: str = "file",
) -> PipelineResult:
    """Compose detection and retrieval predictions into an attribution map.

    Sentences at or above the detection threshold take their retrieved
    source; in +Nones mode a retrieved null answer cancels the detection.
    A detected sentence with no retrieval prediction is left unattributed
    and reported in ``missing_retrieval``.
    """
    entries: dict[int, frozenset[tuple[int, InformationChannel]]] = {}
    resolutions: list[ResolvedAttribution] = []
    missing: list[int] = []
    for idx in range(doc.n_sentences):
        score = detection.get(idx)
        if score is None or score < config.detection_threshold:
            continue
        raw = retrieval.get(idx)
        if raw is None:
            missing.append(idx)
            continue
        if config.mode is PipelineMode.PIPELINE_PLUS_NONES and is_null_answer(raw):
            resolutions.append(
                ResolvedAttribution(idx, raw, UNMATCHED, provenance)
            )
            continue
        matched = resolve_retrieved_name(raw, sources)
        resolutions.append(ResolvedAttribution(idx, raw, matched, provenance))
        if matched is None:
            continue
        channel = (
            InformationChannel.DIRECT_QUOTE
            if has_double_quoted_span(doc.sentences[idx].text)
            else InformationChannel.INDIRECT_QUOTE
        )
        entries[idx] = frozenset({(matched, channel)})
    used = {sid for pairs in entries.values() for sid, _ in pairs}
    attribution = DocAttribution(
        doc_id=doc.doc_id,
        version_id=doc.version_id,
        sources=tuple(s for s in sources if s.source_id in used),
        amap=AttributionMap(entries),
    )
    return PipelineResult(
        attribution=attribution,
        resolutions=tuple(resolutions),
        missing_retrieval=tuple(missing),
    )


# --- inference endpoint client -----------------------------------------------


class EndpointError(RuntimeError):
    pass


def _auth_headers(config: EndpointConfig) -> dict[str, str]:
    token = os.environ.get(config.token_env)
    if token is None:
        raise ConfigurationError(
            f"endpoint auth token env var {config.token_env} is not set"
        )
    return {"Authorization": f"Bearer {token}"}


def query_endpoint(
    prompts: list[str], config: EndpointConfig
) -> tuple[list[str | None], list[str]]:
    """POST a prompt batch; returns per-prompt completions and error notes.

    The wire contract is JSON {"prompts": [...]} in, {"completions": [...]}
    out, order preserved. Transient failures (connection errors, 5xx)
    retry with exponential backoff up to the configured count; persistent
    failure yields per-item None results rather than an exception.
    """
    headers = _auth_headers(config)
    if not prompts:
        return [], []
    errors: list[str] = []
    delay = 0.5
    for attempt in range(config.retries + 1):
        try:
            resp = requests.post(
                config.url,
                json={"prompts": prompts},
                headers=headers,
                timeout=config.timeout,
            )
            if resp.status_code >= 500:
                raise EndpointError(f"server error {resp.status_code}")
            if resp.status_code != 200:
                errors.append(f"endpoint rejected batch: HTTP {resp.status_code}")
                return [None] * len(prompts), errors
            completions = resp.json().get("completions")
            if not isinstance(completions, list) or len(completions) != len(prompts):
                errors.append("endpoint returned a malformed completion batch")
                return [None] * len(prompts), errors
            return [str(c) for c in completions], errors
        except (requests.RequestException, EndpointError) as exc:
            if attempt == config.retries:
                errors.append(f"endpoint failed after {attempt + 1} attempts: {exc}")
                return [None] * len(prompts), errors
            log.warning("endpoint attempt %d failed (%s); retrying", attempt + 1, exc)
            time.sleep(delay)
            delay *= 2
    raise AssertionError("unreachable")


def check_endpoint(config: EndpointConfig) -> bool:
    """Health check: an empty batch must round-trip cleanly."""
    headers = _auth_headers(config)
    try:
        resp = requests.post(
            config.url, json={"prompts": []}, headers=headers, timeout=config.timeout
        )
    except requests.RequestException as exc:
        log.error("endpoint unreachable: %s", exc)
        return False
    if resp.status_code != 200:
        log.error("endpoint unhealthy: HTTP %d", resp.status_code)
        return False
    try:
        return resp.json().get("completions") == []
    except ValueError:
        return False
