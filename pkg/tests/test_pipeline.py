import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newsattrib.model import InformationChannel, Source
from newsattrib.pipeline import (
    ConfigurationError,
    EndpointConfig,
    PipelineConfig,
    PipelineMode,
    build_retrieval_prompt,
    check_endpoint,
    compose_pipeline,
    query_endpoint,
    resolve_retrieved_name,
)

from helpers import make_doc, make_sentence

DQ = InformationChannel.DIRECT_QUOTE
IQ = InformationChannel.INDIRECT_QUOTE

SOURCES = [
    Source(source_id=0, canonical_name="Emmanuel Macron"),
    Source(source_id=1, canonical_name="police"),
    Source(source_id=2, canonical_name="Hospital officials"),
]


def two_sentence_doc():
    return make_doc(
        [
            make_sentence(["Police", "spoke", "first"], index=0),
            make_sentence(["Then", '"quoted"', "words"], index=1),
        ]
    )


class TestConfig:
    @pytest.mark.parametrize("threshold", [0.0, 1.0, -0.2, 1.7])
    def test_threshold_must_be_strictly_inside_unit_interval(self, threshold):
        with pytest.raises(ConfigurationError, match="threshold"):
            PipelineConfig(detection_threshold=threshold)

    def test_defaults(self):
        cfg = PipelineConfig()
        assert cfg.detection_threshold == 0.5
        assert cfg.mode is PipelineMode.PIPELINE
        assert cfg.endpoint is None


class TestPrompt:
    def test_article_then_question(self):
        doc = two_sentence_doc()
        prompt = build_retrieval_prompt(doc, 1)
        assert prompt == (
            'Police spoke first Then "quoted" words '
            'To which source can we attribute the sentence Then "quoted" words?'
        )

    def test_out_of_range_index(self):
        with pytest.raises(IndexError):
            build_retrieval_prompt(two_sentence_doc(), 2)

    def test_prefix_examples_prepended(self):
        cfg = PipelineConfig(
            prefix_examples=(("He spoke.", "police"),)
        )
        prompt = build_retrieval_prompt(two_sentence_doc(), 0, cfg)
        assert prompt.startswith(
            "To which source can we attribute the sentence He spoke.? police "
        )

    def test_truncation_keeps_tail(self):
        cfg = PipelineConfig(max_prompt_chars=30)
        prompt = build_retrieval_prompt(two_sentence_doc(), 0, cfg)
        assert len(prompt) == 30
        assert prompt.endswith("Police spoke first?")


class TestNameResolution:
    def test_exact_beats_last_token(self):
        # "police" is an exact match for id 1 even though id 2 contains it.
        assert resolve_retrieved_name("police", SOURCES) == 1

    def test_honorific_stripped_for_exact_match(self):
        assert resolve_retrieved_name("Mr. Emmanuel Macron", SOURCES) == 0

    def test_last_token_match(self):
        assert resolve_retrieved_name("President Macron", SOURCES) == 0

    def test_substring_match(self):
        assert resolve_retrieved_name("officials", SOURCES) == 2

    def test_unmatched_returns_none(self):
        assert resolve_retrieved_name("the weather bureau", SOURCES) is None

    def test_tie_breaks_toward_lowest_id(self):
        pair = [
            Source(source_id=3, canonical_name="city officials"),
            Source(source_id=7, canonical_name="county officials"),
        ]
        assert resolve_retrieved_name("officials", pair) == 3

    def test_empty_string_unmatched(self):
        assert resolve_retrieved_name("", SOURCES) is None


class TestCompose:
    CFG = PipelineConfig(detection_threshold=0.5)
    NONES = PipelineConfig(detection_threshold=0.5, mode=PipelineMode.PIPELINE_PLUS_NONES)

    def test_below_threshold_skipped(self):
        res = compose_pipeline(
            two_sentence_doc(), SOURCES, {0: 0.4}, {0: "police"}, self.CFG
        )
        assert len(res.attribution.amap) == 0 and res.resolutions == ()

    def test_at_threshold_included(self):
        res = compose_pipeline(
            two_sentence_doc(), SOURCES, {0: 0.5}, {0: "police"}, self.CFG
        )
        assert res.attribution.amap.entries[0] == frozenset({(1, IQ)})

    def test_channel_from_quote_marks(self):
        res = compose_pipeline(
            two_sentence_doc(), SOURCES, {1: 0.9}, {1: "police"}, self.CFG
        )
        assert res.attribution.amap.entries[1] == frozenset({(1, DQ)})

    def test_detected_without_retrieval_reported(self):
        res = compose_pipeline(two_sentence_doc(), SOURCES, {0: 0.9}, {}, self.CFG)
        assert res.missing_retrieval == (0,)
        assert len(res.attribution.amap) == 0

    def test_unmatched_name_leaves_unattributed(self):
        res = compose_pipeline(
            two_sentence_doc(), SOURCES, {0: 0.9}, {0: "nobody we know"}, self.CFG
        )
        assert len(res.attribution.amap) == 0
        assert res.resolutions[0].matched_source_id is None

    def test_null_answer_cancels_only_in_plus_nones(self):
        det, ret = {0: 0.9}, {0: "None"}
        plain = compose_pipeline(two_sentence_doc(), SOURCES, det, ret, self.CFG)
        nones = compose_pipeline(two_sentence_doc(), SOURCES, det, ret, self.NONES)
        # Plain mode resolves "None" through the cascade (and misses);
        # +Nones short-circuits before resolution.
        assert len(plain.attribution.amap) == 0
        assert len(nones.attribution.amap) == 0
        assert nones.resolutions[0].matched_source_id is None

    def test_only_used_sources_kept(self):
        res = compose_pipeline(
            two_sentence_doc(), SOURCES, {0: 0.9}, {0: "Macron"}, self.CFG
        )
        assert [s.source_id for s in res.attribution.sources] == [0]

    @given(
        det=st.dictionaries(st.integers(0, 1), st.floats(0, 1, allow_nan=False), max_size=2),
        ret=st.dictionaries(
            st.integers(0, 1),
            st.sampled_from(["None", "none", "police", "Macron", "gibberish", ""]),
            max_size=2,
        ),
    )
    @settings(max_examples=200)
    def test_plus_nones_is_subset_of_plain(self, det, ret):
        doc = two_sentence_doc()
        plain = compose_pipeline(doc, SOURCES, det, ret, self.CFG)
        nones = compose_pipeline(doc, SOURCES, det, ret, self.NONES)
        plain_pairs = {
            (i, sid)
            for i, pairs in plain.attribution.amap.entries.items()
            for sid, _ in pairs
        }
        nones_pairs = {
            (i, sid)
            for i, pairs in nones.attribution.amap.entries.items()
            for sid, _ in pairs
        }
        assert nones_pairs <= plain_pairs


# --- endpoint client over a scripted local server ------------------------------


class _Script:
    """Queue of (status, payload) responses plus a request log."""

    def __init__(self):
        self.responses = []
        self.requests = []


class _Handler(BaseHTTPRequestHandler):
    script: _Script  # assigned per server

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        body = json.loads(self.rfile.read(length) or b"{}")
        self.script.requests.append(
            {"auth": self.headers.get("Authorization"), "body": body}
        )
        status, payload = (
            self.script.responses.pop(0) if self.script.responses else (200, {})
        )
        if callable(payload):
            payload = payload(body)
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, *args):
        pass


@pytest.fixture
def endpoint(monkeypatch):
    script = _Script()
    handler = type("Handler", (_Handler,), {"script": script})
    server = ThreadingHTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    monkeypatch.setenv("NEWSATTRIB_ENDPOINT_TOKEN", "sekrit")
    url = f"http://127.0.0.1:{server.server_port}/complete"
    try:
        yield EndpointConfig(url=url, retries=1, timeout=5.0), script
    finally:
        server.shutdown()
        server.server_close()


def echo_completions(body):
    return {"completions": [f"src for {p[:10]}" for p in body["prompts"]]}


class TestEndpointClient:
    def test_roundtrip_preserves_order(self, endpoint):
        cfg, script = endpoint
        script.responses.append((200, echo_completions))
        out, errors = query_endpoint(["alpha", "beta"], cfg)
        assert out == ["src for alpha", "src for beta"]
        assert errors == []
        assert script.requests[0]["body"] == {"prompts": ["alpha", "beta"]}

    def test_bearer_token_sent(self, endpoint):
        cfg, script = endpoint
        script.responses.append((200, echo_completions))
        query_endpoint(["x"], cfg)
        assert script.requests[0]["auth"] == "Bearer sekrit"

    def test_missing_token_env_is_configuration_error(self, endpoint, monkeypatch):
        cfg, _ = endpoint
        monkeypatch.delenv("NEWSATTRIB_ENDPOINT_TOKEN")
        with pytest.raises(ConfigurationError, match="NEWSATTRIB_ENDPOINT_TOKEN"):
            query_endpoint(["x"], cfg)

    def test_empty_batch_never_hits_network(self, endpoint):
        cfg, script = endpoint
        assert query_endpoint([], cfg) == ([], [])
        assert script.requests == []

    def test_server_error_retries_then_succeeds(self, endpoint):
        cfg, script = endpoint
        script.responses.append((503, {}))
        script.responses.append((200, echo_completions))
        out, errors = query_endpoint(["x"], cfg)
        assert out == ["src for x"] and errors == []
        assert len(script.requests) == 2

    def test_persistent_failure_yields_nones(self, endpoint):
        cfg, script = endpoint
        cfg = EndpointConfig(url=cfg.url, retries=1, timeout=5.0)
        script.responses.extend([(500, {}), (500, {})])
        out, errors = query_endpoint(["a", "b"], cfg)
        assert out == [None, None]
        assert len(errors) == 1 and "2 attempts" in errors[0]

    def test_client_error_fails_without_retry(self, endpoint):
        cfg, script = endpoint
        script.responses.append((403, {}))
        out, errors = query_endpoint(["a"], cfg)
        assert out == [None]
        assert errors and "403" in errors[0]
        assert len(script.requests) == 1

    def test_wrong_completion_count_is_malformed(self, endpoint):
        cfg, script = endpoint
        script.responses.append((200, {"completions": ["only one"]}))
        out, errors = query_endpoint(["a", "b"], cfg)
        assert out == [None, None]
        assert errors and "malformed" in errors[0]

    def test_health_check(self, endpoint):
        cfg, script = endpoint
        script.responses.append((200, {"completions": []}))
        assert check_endpoint(cfg) is True
        script.responses.append((500, {}))
        assert check_endpoint(cfg) is False

    def test_unreachable_endpoint_health_false(self, monkeypatch):
        monkeypatch.setenv("NEWSATTRIB_ENDPOINT_TOKEN", "t")
        cfg = EndpointConfig(url="http://127.0.0.1:9/none", retries=0, timeout=0.5)
        assert check_endpoint(cfg) is False
