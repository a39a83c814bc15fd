import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newsattrib.model import InformationChannel, StructuralError
from newsattrib.probes import (
    NewseditsCandidate,
    ProbeExample,
    SkipReason,
    audit_confounds,
    balance_newsedits,
    build_ablation_pair,
    build_newsedits_example,
    build_version_pairs,
    child_rng,
    count_added_sources,
    parse_probe,
    parse_sa_text,
    probe_to_record,
    remove_sentences,
    select_source,
    sentence_counts,
    serialize_with_sa,
    ablate,
)
from newsattrib.rules import r1_attribute
from newsattrib.stats_tests import welch_t_test

from helpers import attr_for, make_doc, make_sentence

DQ = InformationChannel.DIRECT_QUOTE
IQ = InformationChannel.INDIRECT_QUOTE


def doc_with(n, doc_id="doc", version_id=0, topic=None):
    return make_doc(
        [make_sentence([f"w{i}", "says"], index=i) for i in range(n)],
        doc_id=doc_id,
        version_id=version_id,
        topic=topic,
    )


class TestChildRng:
    def test_same_key_same_stream(self):
        a = child_rng(7, "doc", 1).random()
        b = child_rng(7, "doc", 1).random()
        assert a == b

    def test_different_parts_different_streams(self):
        streams = {
            child_rng(7, "doc", i).random() for i in range(50)
        } | {child_rng(s, "doc", 0).random() for s in range(100, 150)}
        assert len(streams) == 100

    def test_part_boundaries_matter(self):
        assert child_rng(1, "ab", "c").random() != child_rng(1, "a", "bc").random()


class TestProbeExample:
    def test_label_validation(self):
        with pytest.raises(StructuralError, match="label"):
            ProbeExample(
                probe_id="x", doc_id="d", difficulty="top", label=2, text="t",
                origin_version=0,
            )

    def test_difficulty_validation(self):
        with pytest.raises(StructuralError, match="difficulty"):
            ProbeExample(
                probe_id="x", doc_id="d", difficulty="hardest", label=1, text="t",
                origin_version=0,
            )

    def test_record_roundtrip(self):
        ex = ProbeExample(
            probe_id="d:v0:top:pos",
            doc_id="d",
            difficulty="top",
            label=1,
            text="some text",
            origin_version=0,
            removed=(1, 3),
            sa_text="some text SOURCE: None.",
            chosen_source="police",
            topic="crime",
            stratum="len0|v0|edit1",
        )
        assert parse_probe(probe_to_record(ex)) == ex


class TestSourceSelection:
    def test_sentence_counts_ignore_channel_multiplicity(self):
        doc = doc_with(2)
        attr = attr_for(doc, {0: {(0, DQ), (0, IQ)}, 1: {(0, IQ), (1, IQ)}})
        assert sentence_counts(attr.amap) == {0: 2, 1: 1}

    def test_top_picks_most_sentences(self):
        doc = doc_with(4)
        attr = attr_for(doc, {0: {(1, IQ)}, 1: {(1, IQ)}, 2: {(0, IQ)}})
        src = select_source(doc, attr, "top", child_rng(0))
        assert src is not None and src.source_id == 1

    def test_top_tie_breaks_to_lowest_id(self):
        doc = doc_with(2)
        attr = attr_for(doc, {0: {(2, IQ)}, 1: {(5, IQ)}})
        src = select_source(doc, attr, "top", child_rng(0))
        assert src.source_id == 2

    def test_second_top3_stays_in_three_largest(self):
        doc = doc_with(8)
        attr = attr_for(
            doc,
            {
                0: {(0, IQ)}, 1: {(0, IQ)}, 2: {(0, IQ)},
                3: {(1, IQ)}, 4: {(1, IQ)},
                5: {(2, IQ)}, 6: {(2, IQ)},
                7: {(3, IQ)},
            },
        )
        for seed in range(40):
            src = select_source(doc, attr, "second", child_rng(seed))
            assert src.source_id in {0, 1, 2}

    def test_second_share10_requires_coverage(self):
        doc = doc_with(20)
        attr = attr_for(doc, {0: {(0, IQ)}, 1: {(0, IQ)}, 2: {(0, IQ)}, 3: {(1, IQ)}})
        hits = {
            select_source(
                doc, attr, "second", child_rng(s), second_rule="share10"
            ).source_id
            for s in range(40)
        }
        # source 1 covers 1/20 = 5% <= 10%, so only source 0 qualifies
        assert hits == {0}

    def test_second_share10_none_when_nobody_qualifies(self):
        doc = doc_with(30)
        attr = attr_for(doc, {0: {(0, IQ)}, 1: {(1, IQ)}})
        assert (
            select_source(doc, attr, "second", child_rng(0), second_rule="share10")
            is None
        )

    def test_any_covers_all_sources(self):
        doc = doc_with(4)
        attr = attr_for(doc, {0: {(0, IQ)}, 1: {(1, IQ)}, 2: {(2, IQ)}})
        hits = {
            select_source(doc, attr, "any", child_rng(s)).source_id
            for s in range(60)
        }
        assert hits == {0, 1, 2}

    def test_no_sources_returns_none(self):
        doc = doc_with(2)
        assert select_source(doc, attr_for(doc, {}), "top", child_rng(0)) is None

    def test_bad_arguments(self):
        doc = doc_with(2)
        attr = attr_for(doc, {0: {(0, IQ)}})
        with pytest.raises(ValueError, match="difficulty"):
            select_source(doc, attr, "hard", child_rng(0))
        with pytest.raises(ValueError, match="second_rule"):
            select_source(doc, attr, "second", child_rng(0), second_rule="top5")


class TestAblate:
    def test_remove_sentences_reindexes(self):
        doc = doc_with(4)
        out = remove_sentences(doc, [1, 2])
        assert [s.index for s in out.sentences] == [0, 1]
        assert [s.text for s in out.sentences] == ["w0 says", "w3 says"]

    def test_remove_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            remove_sentences(doc_with(2), [5])

    def test_remove_all_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            remove_sentences(doc_with(2), [0, 1])

    def test_entries_remapped_and_sources_pruned(self):
        doc = doc_with(4)
        attr = attr_for(doc, {1: {(0, IQ)}, 3: {(1, IQ)}})
        new_doc, new_attr = ablate(doc, attr, [0, 1])
        assert new_doc.n_sentences == 2
        assert new_attr.amap.entries == {1: frozenset({(1, IQ)})}
        # source 0 lost its only sentence; source 1 keeps its original id
        assert [s.source_id for s in new_attr.sources] == [1]

    def test_mentions_remapped(self):
        doc = doc_with(3)
        attr = attr_for(doc, {0: {(0, IQ)}, 2: {(0, IQ)}})
        attr = attr_for(doc, {0: {(0, IQ)}, 2: {(0, IQ)}})
        from dataclasses import replace

        src = replace(attr.sources[0], mentions=((0, 0, 1), (2, 0, 1)))
        attr = replace(attr, sources=(src,))
        _, new_attr = ablate(doc, attr, [0])
        assert new_attr.sources[0].mentions == ((1, 0, 1),)


def doc_for_pair(doc_id="doc", version_id=0, topic="metro"):
    """Six sentences; source 0 covers two, source 1 covers one, three free."""
    doc = doc_with(6, doc_id=doc_id, version_id=version_id, topic=topic)
    attr = attr_for(
        doc,
        {0: {(0, IQ)}, 2: {(0, IQ)}, 4: {(1, IQ)}},
        names={0: "police", 1: "mayor"},
    )
    return doc, attr


class TestAblationPair:
    def test_equal_removal_counts(self):
        doc, attr = doc_for_pair()
        pos, neg = build_ablation_pair(doc, attr, "top", seed=11)
        assert len(pos.removed) == len(neg.removed) == 2
        assert pos.label == 1 and neg.label == 0

    def test_positive_removes_exactly_the_sources_sentences(self):
        doc, attr = doc_for_pair()
        pos, _ = build_ablation_pair(doc, attr, "top", seed=11)
        assert pos.removed == (0, 2)
        assert pos.chosen_source == "police"
        assert "w0 says" not in pos.text and "w2 says" not in pos.text

    def test_negative_removes_only_unattributed(self):
        doc, attr = doc_for_pair()
        _, neg = build_ablation_pair(doc, attr, "top", seed=11)
        assert set(neg.removed) <= {1, 3, 5}
        for idx in (0, 2, 4):
            assert f"w{idx} says" in neg.text

    def test_deterministic_regeneration(self):
        doc, attr = doc_for_pair()
        first = build_ablation_pair(doc, attr, "top", seed=11)
        second = build_ablation_pair(doc, attr, "top", seed=11)
        assert [probe_to_record(e) for e in first] == [
            probe_to_record(e) for e in second
        ]

    def test_seed_changes_negative_sample(self):
        doc, attr = doc_for_pair()
        negs = {
            build_ablation_pair(doc, attr, "top", seed=s)[1].removed
            for s in range(12)
        }
        assert len(negs) > 1

    def test_skip_when_not_enough_unattributed(self):
        doc = doc_with(3)
        attr = attr_for(doc, {0: {(0, IQ)}, 1: {(0, IQ)}})
        out = build_ablation_pair(doc, attr, "top", seed=0)
        assert isinstance(out, SkipReason)
        assert out.reason == "insufficient_unattributed"

    def test_skip_when_no_sources(self):
        doc = doc_with(3)
        out = build_ablation_pair(doc, attr_for(doc, {}), "top", seed=0)
        assert isinstance(out, SkipReason) and out.reason == "no_sources"

    def test_control_negatives_left_untouched(self):
        doc, attr = doc_for_pair()
        pos, neg = build_ablation_pair(
            doc, attr, "top", seed=11, control_negatives=True
        )
        assert neg.removed == () and neg.eval_only
        assert not pos.eval_only

    def test_sa_text_optional(self):
        doc, attr = doc_for_pair()
        pos, neg = build_ablation_pair(doc, attr, "top", seed=11, with_sa=False)
        assert pos.sa_text is None and neg.sa_text is None

    def test_probe_ids_name_document_and_difficulty(self):
        doc, attr = doc_for_pair(doc_id="abc", version_id=2)
        pos, neg = build_ablation_pair(doc, attr, "any", seed=3)
        assert pos.probe_id == "abc:v2:any:pos"
        assert neg.probe_id == "abc:v2:any:neg"


class TestSaSerialization:
    def test_names_in_id_order_and_none_tag(self):
        doc, attr = doc_for_pair()
        doc3 = make_doc(list(doc.sentences[:3]), doc_id=doc.doc_id)
        attr3 = attr_for(
            doc3, {0: {(1, IQ), (0, IQ)}}, names={0: "police", 1: "mayor"}
        )
        text = serialize_with_sa(doc3, attr3)
        assert text == (
            "w0 says SOURCE: police, mayor. "
            "w1 says SOURCE: None. "
            "w2 says SOURCE: None."
        )

    def test_parse_inverts_serialize(self):
        doc, attr = doc_for_pair()
        parsed = parse_sa_text(serialize_with_sa(doc, attr))
        assert parsed == [
            ("w0 says", ["police"]),
            ("w1 says", []),
            ("w2 says", ["police"]),
            ("w3 says", []),
            ("w4 says", ["mayor"]),
            ("w5 says", []),
        ]

    def test_parse_rejects_plain_text(self):
        with pytest.raises(ValueError, match="source-annotated"):
            parse_sa_text("no annotations here")

    def test_roundtrip_on_rule_attributions(self, mini_docs, lexicons):
        verbs, signifiers, _ = lexicons
        for doc in mini_docs:
            attr, _ = r1_attribute(doc, verbs, signifiers)
            parsed = parse_sa_text(serialize_with_sa(doc, attr))
            assert [p[0] for p in parsed] == [s.text for s in doc.sentences]
            for sent, (_, names) in zip(doc.sentences, parsed):
                assert names == attr.names_of(sent.index, doc.n_sentences)


class TestAddedSources:
    def _attr(self, names, doc_id="d", version_id=0):
        doc = doc_with(len(names) or 1, doc_id=doc_id, version_id=version_id)
        entries = {i: {(i, IQ)} for i in range(len(names))}
        return attr_for(doc, entries, names=dict(enumerate(names)))

    def test_cascade_prevents_false_adds(self):
        prev = self._attr(["Emmanuel Macron"])
        curr = self._attr(["Macron", "the senate"], version_id=1)
        assert count_added_sources(prev, curr) == 1

    def test_all_new(self):
        prev = self._attr(["police"])
        curr = self._attr(["mayor", "governor"], version_id=1)
        assert count_added_sources(prev, curr) == 2

    def test_empty_previous(self):
        prev = self._attr([])
        curr = self._attr(["mayor"], version_id=1)
        assert count_added_sources(prev, curr) == 1


class TestVersionPairs:
    def _doc(self, texts, doc_id="d", version_id=0):
        return make_doc(
            [
                make_sentence(t.split(" "), index=i)
                for i, t in enumerate(texts)
            ],
            doc_id=doc_id,
            version_id=version_id,
        )

    def test_identical_versions(self):
        a = self._doc(["one two", "three four"], version_id=0)
        b = self._doc(["one two", "three four"], version_id=1)
        (pair,) = build_version_pairs([a, b])
        assert (pair.added, pair.deleted, pair.edited) == (0, 0, 0)

    def test_pure_insertion(self):
        a = self._doc(["one two"], version_id=0)
        b = self._doc(["one two", "new stuff"], version_id=1)
        (pair,) = build_version_pairs([a, b])
        assert (pair.added, pair.deleted, pair.edited) == (1, 0, 0)

    def test_replacement_counts_as_edit(self):
        a = self._doc(["one two", "three four"], version_id=0)
        b = self._doc(["one two", "three five"], version_id=1)
        (pair,) = build_version_pairs([a, b])
        assert (pair.added, pair.deleted, pair.edited) == (0, 0, 1)

    def test_unbalanced_replacement_splits(self):
        a = self._doc(["a b", "c d", "e f"], version_id=0)
        b = self._doc(["a b", "x y"], version_id=1)
        (pair,) = build_version_pairs([a, b])
        assert pair.edited == 1 and pair.deleted == 1 and pair.added == 0

    def test_chained_versions_and_ordering(self):
        docs = [
            self._doc(["a b"], doc_id="z", version_id=0),
            self._doc(["a b", "c d"], doc_id="z", version_id=1),
            self._doc(["a b", "c d", "e f"], doc_id="z", version_id=2),
            self._doc(["x y"], doc_id="a", version_id=0),
            self._doc(["x y"], doc_id="a", version_id=3),
        ]
        pairs = build_version_pairs(docs)
        assert [(p.doc_id, p.version_t, p.version_t_plus_1) for p in pairs] == [
            ("a", 0, 3),
            ("z", 0, 1),
            ("z", 1, 2),
        ]

    def test_mini_corpus_has_three_lineage_pairs(self, mini_docs):
        pairs = build_version_pairs(mini_docs)
        assert [(p.doc_id, p.version_t, p.version_t_plus_1) for p in pairs] == [
            ("lineage-a", 0, 1),
            ("lineage-b", 0, 1),
            ("lineage-c", 0, 1),
        ]
        by_id = {p.doc_id: p for p in pairs}
        # lineage-c rephrases one sentence and nothing else
        assert by_id["lineage-c"].edited >= 1
        assert by_id["lineage-c"].added == 0
        assert by_id["lineage-c"].deleted == 0
        # lineage-a adds sentences
        assert by_id["lineage-a"].added >= 2


class TestNewseditsExample:
    def _pair(self, added_names):
        doc0 = doc_with(2, doc_id="d", version_id=0)
        attr0 = attr_for(doc0, {0: {(0, IQ)}}, names={0: "police"})
        doc1 = doc_with(2 + len(added_names), doc_id="d", version_id=1)
        entries = {0: {(0, IQ)}}
        names = {0: "police"}
        for i, name in enumerate(added_names, start=1):
            entries[i] = {(i, IQ)}
            names[i] = name
        attr1 = attr_for(doc1, entries, names=names)
        (pair,) = build_version_pairs([doc0, doc1])
        return build_newsedits_example(doc0, attr0, attr1, pair)

    def test_two_added_sources_is_positive(self):
        ex = self._pair(["mayor", "governor"])
        assert ex.label == 1
        assert ex.difficulty == "newsedits"
        assert ex.version_next == 1

    def test_one_added_source_is_negative(self):
        assert self._pair(["mayor"]).label == 0

    def test_text_comes_from_earlier_version(self):
        ex = self._pair(["mayor", "governor"])
        assert ex.text == "w0 says w1 says"


def candidate(label, idx, n_sentences=10, version=0, edits=2):
    ex = ProbeExample(
        probe_id=f"c{idx}",
        doc_id=f"c{idx}",
        difficulty="newsedits",
        label=label,
        text="t",
        origin_version=version,
    )
    return NewseditsCandidate(example=ex, n_sentences=n_sentences, total_edits=edits)


class TestBalancing:
    def test_exact_balance_within_stratum(self):
        cands = [candidate(1, i) for i in range(5)] + [
            candidate(0, i + 5) for i in range(2)
        ]
        examples, warnings = balance_newsedits(cands, seed=3)
        kept = [e for e in examples if not e.excluded]
        assert sum(e.label for e in kept) == 2
        assert sum(1 - e.label for e in kept) == 2
        assert warnings == []

    def test_single_class_stratum_excluded_with_warning(self):
        cands = [candidate(1, i) for i in range(3)]
        examples, warnings = balance_newsedits(cands, seed=3)
        assert all(e.excluded for e in examples)
        assert len(warnings) == 1 and "single-class" in warnings[0]

    def test_version_is_an_exact_stratum_key(self):
        # balanced within each version, not across
        cands = [
            candidate(1, 0, version=0),
            candidate(1, 1, version=0),
            candidate(0, 2, version=0),
            candidate(0, 3, version=1),
        ]
        examples, warnings = balance_newsedits(cands, seed=3)
        kept = [e for e in examples if not e.excluded]
        assert len(kept) == 2
        assert {e.origin_version for e in kept} == {0}
        assert len(warnings) == 1

    def test_input_order_preserved(self):
        cands = [candidate(i % 2, i) for i in range(6)]
        examples, _ = balance_newsedits(cands, seed=9)
        assert [e.probe_id for e in examples] == [f"c{i}" for i in range(6)]

    def test_deterministic(self):
        cands = [candidate(i % 2, i, n_sentences=5 + i) for i in range(20)]
        a, _ = balance_newsedits(cands, seed=5)
        b, _ = balance_newsedits(cands, seed=5)
        assert [probe_to_record(e) for e in a] == [probe_to_record(e) for e in b]

    def test_stratum_recorded_on_every_example(self):
        cands = [candidate(i % 2, i) for i in range(4)]
        examples, _ = balance_newsedits(cands, seed=1)
        assert all(e.stratum for e in examples)


class TestWelch:
    def test_insufficient_observations(self):
        assert welch_t_test([1.0], [1.0, 2.0]) == (None, None)

    def test_identical_constant_samples(self):
        assert welch_t_test([3.0, 3.0], [3.0, 3.0]) == (0.0, 1.0)

    def test_distinct_constant_samples(self):
        t, p = welch_t_test([3.0, 3.0], [4.0, 4.0])
        assert math.isinf(t) and p == 0.0

    def test_matches_scipy_on_regular_data(self):
        from scipy import stats as sps

        a = [1.0, 2.0, 3.0, 4.0, 7.0]
        b = [2.0, 2.5, 8.0, 1.0]
        t, p = welch_t_test(a, b)
        t2, p2 = sps.ttest_ind(a, b, equal_var=False)
        assert t == pytest.approx(float(t2)) and p == pytest.approx(float(p2))

    @pytest.mark.filterwarnings("ignore::RuntimeWarning")
    @given(
        a=st.lists(st.floats(-50, 50), min_size=2, max_size=30),
        b=st.lists(st.floats(-50, 50), min_size=2, max_size=30),
    )
    @settings(max_examples=100)
    def test_p_value_in_unit_interval(self, a, b):
        _, p = welch_t_test(a, b)
        assert p is not None and 0.0 <= p <= 1.0


class TestConfoundAudit:
    def _examples(self, pos_lens, neg_lens):
        docs = {}
        examples = []
        for i, n in enumerate(pos_lens):
            doc = doc_with(n, doc_id=f"p{i}")
            docs[(doc.doc_id, 0)] = doc
            examples.append(
                ProbeExample(
                    probe_id=f"p{i}", doc_id=doc.doc_id, difficulty="newsedits",
                    label=1, text="t", origin_version=0,
                )
            )
        for i, n in enumerate(neg_lens):
            doc = doc_with(n, doc_id=f"n{i}")
            docs[(doc.doc_id, 0)] = doc
            examples.append(
                ProbeExample(
                    probe_id=f"n{i}", doc_id=doc.doc_id, difficulty="newsedits",
                    label=0, text="t", origin_version=0,
                )
            )
        return examples, docs

    def test_identical_classes_not_flagged(self, lexicons):
        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([4] * 10, [4] * 10)
        report = audit_confounds(examples, docs, verbs, signifiers)
        assert report.flagged == []
        for f in report.features:
            assert f.p == 1.0 and f.t == 0.0

    def test_length_confound_flagged(self, lexicons):
        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([3] * 12, [12] * 12)
        report = audit_confounds(examples, docs, verbs, signifiers)
        assert "n_sentences" in [f.feature for f in report.flagged]
        assert "n_chars" in [f.feature for f in report.flagged]

    def test_missing_origin_documents_skipped(self, lexicons):
        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([4, 4], [4, 4])
        del docs[("p0", 0)]
        report = audit_confounds(examples, docs, verbs, signifiers)
        assert report.n_skipped == 1
        assert report.n_pos == 1 and report.n_neg == 2

    def test_excluded_examples_ignored_by_default(self, lexicons):
        from dataclasses import replace

        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([4, 4], [4, 4])
        examples[0] = replace(examples[0], excluded=True)
        report = audit_confounds(examples, docs, verbs, signifiers)
        assert report.n_pos == 1
        report_all = audit_confounds(
            examples, docs, verbs, signifiers, include_excluded=True
        )
        assert report_all.n_pos == 2

    def test_small_samples_yield_undefined_stats(self, lexicons):
        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([4], [4, 4])
        report = audit_confounds(examples, docs, verbs, signifiers)
        for f in report.features:
            assert f.t is None and f.p is None and not f.significant

    def test_removed_sentences_affect_features(self, lexicons):
        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([6, 6], [6, 6])
        from dataclasses import replace

        examples = [replace(e, removed=(0, 1)) for e in examples[:2]] + examples[2:]
        report = audit_confounds(examples, docs, verbs, signifiers)
        n_sent = next(f for f in report.features if f.feature == "n_sentences")
        assert n_sent.mean_pos == 4.0 and n_sent.mean_neg == 6.0

    def test_render_smoke(self, lexicons):
        verbs, signifiers, _ = lexicons
        examples, docs = self._examples([3] * 5, [9] * 5)
        text = audit_confounds(examples, docs, verbs, signifiers).render()
        assert "CONFOUND" in text and "n_sentences" in text
