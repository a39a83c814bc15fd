import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newsattrib.model import (
    AttributionMap,
    CANONICAL_CHANNELS,
    DocAttribution,
    Document,
    GoldLabel,
    InformationChannel,
    PASSIVE_MARKER,
    Sentence,
    Source,
    StructuralError,
    Token,
    channel_group,
    derive_detection,
    group_columns,
    sources_of,
)
from newsattrib.names import (
    has_double_quoted_span,
    is_null_answer,
    last_name_token,
    names_match,
    normalize_name,
    normalize_quotes,
)

from strategies import attribution_maps, attributed_documents, documents


def tok(i, form, start, end, head=None, **kw):
    defaults = dict(
        lemma=form.lower(),
        upos="NOUN",
        deprel="root" if head is None else "dep",
        entity_tag="O",
    )
    defaults.update(kw)
    return Token(
        index=i, form=form, head=head, char_start=start, char_end=end, **defaults
    )


def two_token_sentence(index=0):
    return Sentence(
        index=index,
        text="Police said",
        tokens=(
            tok(0, "Police", 0, 6, head=1),
            tok(1, "said", 7, 11, head=None, upos="VERB"),
        ),
    )


# --- token / sentence validation ---------------------------------------------


class TestTokenValidation:
    def test_own_head_rejected(self):
        with pytest.raises(StructuralError):
            tok(0, "a", 0, 1, head=0)

    def test_empty_span_rejected(self):
        with pytest.raises(StructuralError):
            tok(0, "a", 3, 3)

    def test_negative_span_rejected(self):
        with pytest.raises(StructuralError):
            tok(0, "a", -1, 1)

    @pytest.mark.parametrize("tag", ["B", "PERSON", "b-person", "I-", "B -X"])
    def test_malformed_entity_tag_rejected(self, tag):
        with pytest.raises(StructuralError):
            tok(0, "a", 0, 1, entity_tag=tag)

    @pytest.mark.parametrize("tag", ["O", "B-PERSON", "I-PERSON", "B-My_Org"])
    def test_wellformed_entity_tag_accepted(self, tag):
        assert tok(0, "a", 0, 1, entity_tag=tag).entity_tag == tag


class TestSentenceValidation:
    def test_two_roots_rejected(self):
        with pytest.raises(StructuralError, match="root"):
            Sentence(
                index=0,
                text="a b",
                tokens=(tok(0, "a", 0, 1), tok(1, "b", 2, 3)),
            )

    def test_zero_roots_rejected(self):
        with pytest.raises(StructuralError, match="root"):
            Sentence(
                index=0,
                text="a b",
                tokens=(tok(0, "a", 0, 1, head=1), tok(1, "b", 2, 3, head=0)),
            )

    def test_form_span_mismatch_rejected(self):
        with pytest.raises(StructuralError, match="does not match"):
            Sentence(index=0, text="ab", tokens=(tok(0, "ba", 0, 2),))

    def test_nonwhitespace_gap_rejected(self):
        with pytest.raises(StructuralError, match="gap"):
            Sentence(
                index=0,
                text="a-b",
                tokens=(tok(0, "a", 0, 1, head=1), tok(1, "b", 2, 3)),
            )

    def test_overlapping_spans_rejected(self):
        with pytest.raises(StructuralError, match="overlap"):
            Sentence(
                index=0,
                text="abc",
                tokens=(tok(0, "ab", 0, 2, head=1), tok(1, "bc", 1, 3)),
            )

    def test_head_out_of_range_rejected(self):
        with pytest.raises(StructuralError, match="head"):
            Sentence(index=0, text="a", tokens=(tok(0, "a", 0, 1, head=5),))

    def test_trailing_garbage_rejected(self):
        with pytest.raises(StructuralError, match="after last token"):
            Sentence(index=0, text="a b", tokens=(tok(0, "a", 0, 1),))

    def test_byte_offsets_for_multibyte_text(self):
        # "São" is four codepoints, five UTF-8 bytes.
        s = Sentence(
            index=0,
            text="São Paulo",
            tokens=(
                tok(0, "São", 0, 4, head=1),
                tok(1, "Paulo", 5, 10),
            ),
        )
        assert s.char_span(5, 10) == (4, 9)
        assert s.text[slice(*s.char_span(0, 4))] == "São"


class TestDocumentValidation:
    def test_empty_doc_id_rejected(self):
        with pytest.raises(StructuralError):
            Document(doc_id="", version_id=0, sentences=(two_token_sentence(),))

    def test_negative_version_rejected(self):
        with pytest.raises(StructuralError):
            Document(doc_id="d", version_id=-1, sentences=(two_token_sentence(),))

    def test_zero_sentences_rejected(self):
        with pytest.raises(StructuralError):
            Document(doc_id="d", version_id=0, sentences=())

    def test_noncontiguous_sentence_indices_rejected(self):
        with pytest.raises(StructuralError):
            Document(
                doc_id="d", version_id=0, sentences=(two_token_sentence(index=1),)
            )


# --- gold labels, sources, channels -------------------------------------------


class TestGoldLabel:
    def test_unsourced_with_names_rejected(self):
        with pytest.raises(StructuralError):
            GoldLabel(False, ("x",), InformationChannel.NO_QUOTE)

    def test_unsourced_with_channel_rejected(self):
        with pytest.raises(StructuralError):
            GoldLabel(False, (), InformationChannel.QUOTE)

    def test_passive_marker_is_a_name(self):
        label = GoldLabel(True, (PASSIVE_MARKER,), InformationChannel.DOCUMENT)
        assert label.source_names == ("passive voice",)


class TestSource:
    def test_empty_name_rejected_unless_passive(self):
        with pytest.raises(StructuralError):
            Source(source_id=0, canonical_name="")
        assert Source(source_id=0, canonical_name="", is_passive=True).is_passive


class TestChannels:
    def test_roundtrip_every_value(self):
        for ch in InformationChannel:
            assert InformationChannel.parse(ch.serialize()) is ch

    def test_unknown_maps_to_other(self):
        assert InformationChannel.parse("flying rumor") is InformationChannel.OTHER

    def test_parse_tolerates_separators_and_case(self):
        assert (
            InformationChannel.parse("Press Report") is InformationChannel.PRESS_REPORT
        )
        assert (
            InformationChannel.parse("proposal/order/law")
            is InformationChannel.PROPOSAL_ORDER_LAW
        )

    def test_sixteen_canonical_categories(self):
        assert len(CANONICAL_CHANNELS) == 16
        assert InformationChannel.NO_QUOTE not in CANONICAL_CHANNELS

    def test_every_channel_has_a_group(self):
        for view in ("table4", "table2"):
            columns = set(group_columns(view))
            for ch in InformationChannel:
                g = channel_group(ch, view)
                assert g is None or g in columns
        assert channel_group(InformationChannel.NO_QUOTE) is None

    def test_table4_quote_split(self):
        assert channel_group(InformationChannel.DIRECT_QUOTE) == "Direct Quote"
        assert channel_group(InformationChannel.INDIRECT_QUOTE) == "Indirect Quote"


# --- attribution maps ----------------------------------------------------------


class TestAttributionMap:
    def test_empty_sets_normalized_away(self):
        amap = AttributionMap(entries={0: frozenset(), 1: {(1, InformationChannel.QUOTE)}})
        assert 0 not in amap.entries
        assert len(amap) == 1

    def test_negative_index_rejected(self):
        with pytest.raises(StructuralError):
            AttributionMap(entries={-1: {(0, InformationChannel.QUOTE)}})

    def test_derive_detection_single_entry(self):
        amap = AttributionMap(entries={0: {(1, InformationChannel.QUOTE)}})
        assert derive_detection(amap, 2) == [True, False]

    def test_derive_detection_empty_map(self):
        assert derive_detection(AttributionMap(), 3) == [False, False, False]

    def test_derive_detection_multi_entry(self):
        amap = AttributionMap(
            entries={
                1: {(1, InformationChannel.QUOTE), (2, InformationChannel.STATEMENT)},
                3: {(1, InformationChannel.QUOTE)},
            }
        )
        assert derive_detection(amap, 4) == [False, True, False, True]

    def test_derive_detection_out_of_range_entry(self):
        amap = AttributionMap(entries={5: {(0, InformationChannel.QUOTE)}})
        with pytest.raises(StructuralError):
            derive_detection(amap, 2)

    def test_sources_of_out_of_range(self):
        with pytest.raises(IndexError):
            sources_of(AttributionMap(), 3, 3)

    def test_sources_of_multi_attribution(self):
        amap = AttributionMap(
            entries={
                0: {(1, InformationChannel.QUOTE), (2, InformationChannel.QUOTE)}
            }
        )
        assert sources_of(amap, 0, 1) == frozenset({1, 2})
        assert sources_of(amap, 0, 1) != frozenset()

    @given(st.data())
    @settings(max_examples=60)
    def test_detection_matches_sources_of(self, data):
        n = data.draw(st.integers(1, 8))
        amap = data.draw(attribution_maps(n, [0, 1, 2]))
        det = derive_detection(amap, n)
        for i in range(n):
            assert det[i] == (len(sources_of(amap, i, n)) > 0)


class TestDocAttribution:
    def test_unknown_source_rejected(self):
        with pytest.raises(StructuralError, match="unknown"):
            DocAttribution(
                doc_id="d",
                version_id=0,
                sources=(),
                amap=AttributionMap(entries={0: {(7, InformationChannel.QUOTE)}}),
            )

    def test_unused_source_rejected(self):
        with pytest.raises(StructuralError, match="no entries"):
            DocAttribution(
                doc_id="d",
                version_id=0,
                sources=(Source(source_id=0, canonical_name="x"),),
                amap=AttributionMap(),
            )

    def test_duplicate_ids_rejected(self):
        with pytest.raises(StructuralError, match="duplicate"):
            DocAttribution(
                doc_id="d",
                version_id=0,
                sources=(
                    Source(source_id=0, canonical_name="x"),
                    Source(source_id=0, canonical_name="y"),
                ),
                amap=AttributionMap(
                    entries={0: {(0, InformationChannel.QUOTE)}}
                ),
            )

    def test_names_of_in_id_order(self):
        attr = DocAttribution(
            doc_id="d",
            version_id=0,
            sources=(
                Source(source_id=2, canonical_name="b"),
                Source(source_id=1, canonical_name="a"),
            ),
            amap=AttributionMap(
                entries={
                    0: {
                        (2, InformationChannel.QUOTE),
                        (1, InformationChannel.QUOTE),
                    }
                }
            ),
        )
        assert attr.names_of(0, 1) == ["a", "b"]
        assert attr.names_of(0, 1)


# --- name handling --------------------------------------------------------------


class TestNames:
    def test_normalize_drops_honorifics_and_articles(self):
        assert normalize_name("Mr. Laurent Lamothe") == "laurent lamothe"
        assert normalize_name("The Commission") == "commission"
        assert normalize_name("Dr Jane  Doe ") == "jane doe"

    def test_normalize_keeps_inner_articles(self):
        assert normalize_name("Bank of the West") == "bank of the west"

    def test_last_name_token(self):
        assert last_name_token("Ms. Elena Okafor") == "okafor"
        assert last_name_token("") == ""

    def test_match_cascade_strengths(self):
        assert names_match("Mr. Obama", "obama") == 3
        assert names_match("Barack Obama", "Michelle Obama") == 2
        assert names_match("Obama", "Obama administration official") == 1
        assert names_match("Trump", "Obama") == 0

    def test_match_empty_never_matches(self):
        assert names_match("", "Obama") == 0
        assert names_match("Obama", "") == 0

    def test_null_answers(self):
        assert is_null_answer("None")
        assert is_null_answer("  none ")
        assert not is_null_answer("Nonesuch")
        assert not is_null_answer("commission")

    def test_quote_normalization(self):
        assert normalize_quotes("“x” ‘y’") == '"x" \'y\''

    def test_double_quoted_span_detection(self):
        assert has_double_quoted_span('he said "stop now" loudly')
        assert has_double_quoted_span("“stop”")
        assert not has_double_quoted_span('empty pair "" here')
        assert not has_double_quoted_span('unpaired " mark')
        assert not has_double_quoted_span("no quotes at all")


# --- serialization round-trips --------------------------------------------------


class TestRoundTrips:
    @given(documents(with_gold=True))
    @settings(max_examples=40)
    def test_document_record_roundtrip(self, doc):
        from newsattrib.corpus_io import document_to_record, parse_document

        rec = json.loads(json.dumps(document_to_record(doc)))
        assert parse_document(rec) == doc

    @given(attributed_documents())
    @settings(max_examples=40)
    def test_attribution_record_roundtrip(self, pair):
        from newsattrib.corpus_io import attribution_to_record, parse_attribution

        _, attr = pair
        rec = json.loads(json.dumps(attribution_to_record(attr)))
        assert parse_attribution(rec) == attr
