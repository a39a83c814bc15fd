#!/usr/bin/env python3
"""Regenerate the bundled mini corpus and its frozen attribution oracle.

The corpus is twenty hand-annotated documents (fourteen single-version
articles plus three two-version lineages) exercising every code path of
the deterministic attributors: person/signifier canonicalization, verb
co-occurrence, subject governance, quote patterns, typographic quotes,
multibyte offsets, passive gold labels, and pronoun blind spots.

The oracle below was derived BY HAND, sentence by sentence, against the
documented rule semantics; it is written as literal data on purpose so
the test suite compares library output against an independent reading
of the rules rather than against the library itself. Regenerating the
files does not re-derive anything.

Usage: python3 scripts/build_minicorpus.py
"""

from __future__ import annotations

import json
from pathlib import Path

from newsattrib.corpus_io import write_documents
from newsattrib.model import (
    Document,
    GoldLabel,
    InformationChannel,
    PASSIVE_MARKER,
    Sentence,
    Token,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "newsattrib" / "data"

# Short aliases keep the gold literals and oracle readable.
DQ = "direct_quote"
IQ = "indirect_quote"
PASSIVE = PASSIVE_MARKER


def toks(text: str, block: str) -> tuple[Token, ...]:
    """Build tokens from one `form lemma upos head deprel ner` line each.

    `.` in the lemma or ner column means the default (lowercased form /
    "O"); head is a 0-based index or `R` for the root. Byte offsets are
    recovered by aligning forms left to right against the sentence text;
    the Sentence validator rejects any misalignment.
    """
    encoded = text.encode("utf-8")
    tokens = []
    pos = 0
    for i, line in enumerate(block.strip().splitlines()):
        form, lemma, upos, head, deprel, ner = line.split()
        raw = form.encode("utf-8")
        start = encoded.index(raw, pos)
        pos = start + len(raw)
        tokens.append(
            Token(
                index=i,
                form=form,
                lemma=form.lower() if lemma == "." else lemma,
                upos=upos,
                head=None if head == "R" else int(head),
                deprel=deprel,
                entity_tag="O" if ner == "." else ner,
                char_start=start,
                char_end=pos,
            )
        )
    return tuple(tokens)


def sent(index: int, text: str, gold, block: str) -> Sentence:
    """gold is None (unsourced) or (channel, name, ...)."""
    if gold is None:
        label = GoldLabel(False, (), InformationChannel.NO_QUOTE)
    else:
        channel, *names = gold
        label = GoldLabel(True, tuple(names), InformationChannel.parse(channel))
    return Sentence(index=index, text=text, tokens=toks(text, block), gold=label)


def doc(doc_id: str, version_id: int, sentences, outlet=None, topic=None) -> Document:
    built = [sent(i, *spec) for i, spec in enumerate(sentences)]
    return Document(
        doc_id=doc_id,
        version_id=version_id,
        sentences=tuple(built),
        outlet=outlet,
        topic=topic,
    )


DOCS = [
    # ------------------------------------------------------------------
    # mini-001: resignation wire story. Statement, press report, direct
    # quote, implicit order, and one unsourced hedge.
    doc(
        "mini-001",
        0,
        [
            (
                "Prime Minister Laurent Lamothe announced his resignation.",
                ("statement", "Laurent Lamothe"),
                """
                Prime . NOUN 1 compound .
                Minister . NOUN 2 compound .
                Laurent . PROPN 4 nsubj B-PERSON
                Lamothe . PROPN 2 flat I-PERSON
                announced announce VERB R root .
                his . PRON 6 nmod:poss .
                resignation . NOUN 4 obj .
                . . PUNCT 4 punct .
                """,
            ),
            (
                "The announcement followed a corruption commission's report.",
                ("press_report", "commission"),
                """
                The . DET 1 det .
                announcement . NOUN 2 nsubj .
                followed follow VERB R root .
                a . DET 7 det .
                corruption . NOUN 5 compound .
                commission . NOUN 7 nmod:poss .
                's . PART 5 case .
                report . NOUN 2 obj .
                . . PUNCT 2 punct .
                """,
            ),
            (
                '"There was no partisan interference" said the commission.',
                ("direct_quote", "commission"),
                """
                " . PUNCT 7 punct .
                There there PRON 2 expl .
                was be AUX 7 ccomp .
                no . DET 5 det .
                partisan . ADJ 5 amod .
                interference . NOUN 2 nsubj .
                " . PUNCT 7 punct .
                said say VERB R root .
                the . DET 9 det .
                commission . NOUN 7 nsubj .
                . . PUNCT 7 punct .
                """,
            ),
            (
                "However, curfews were imposed in cities in anticipation of protests.",
                ("proposal_order_law", PASSIVE),
                """
                However . ADV 4 advmod .
                , . PUNCT 4 punct .
                curfews curfew NOUN 4 nsubj:pass .
                were be AUX 4 aux:pass .
                imposed impose VERB R root .
                in . ADP 6 case .
                cities city NOUN 4 obl .
                in . ADP 8 case .
                anticipation . NOUN 4 obl .
                of . ADP 10 case .
                protests protest NOUN 8 nmod .
                . . PUNCT 4 punct .
                """,
            ),
            (
                "It remains to be seen whether the opposition will coalesce around a new candidate.",
                None,
                """
                It . PRON 1 nsubj .
                remains remain VERB R root .
                to . PART 4 mark .
                be . AUX 4 aux:pass .
                seen see VERB 1 xcomp .
                whether . SCONJ 9 mark .
                the . DET 7 det .
                opposition . NOUN 9 nsubj .
                will . AUX 9 aux .
                coalesce . VERB 4 ccomp .
                around . ADP 13 case .
                a . DET 13 det .
                new . ADJ 13 amod .
                candidate . NOUN 9 obl .
                . . PUNCT 1 punct .
                """,
            ),
        ],
        outlet="wire",
        topic="politics",
    ),
    # ------------------------------------------------------------------
    # mini-002: protest economics. One sentence carries three gold
    # channels in the annotation guide; the label keeps the explicit
    # statement and both named sources.
    doc(
        "mini-002",
        0,
        [
            (
                "Demonstrations have continued in Hong Kong for a third month.",
                None,
                """
                Demonstrations demonstration NOUN 2 nsubj .
                have . AUX 2 aux .
                continued continue VERB R root .
                in . ADP 5 case .
                Hong . PROPN 5 compound B-GPE
                Kong . PROPN 2 obl I-GPE
                for . ADP 9 case .
                a . DET 9 det .
                third . ADJ 9 amod .
                month . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
            (
                "Tourist visits have declined, and the Hong Kong stock market has been "
                "falling for the past several weeks, but protesters called for continued action.",
                ("statement", "Hong Kong stock market", "protesters"),
                """
                Tourist . ADJ 1 amod .
                visits visit NOUN 3 nsubj .
                have . AUX 3 aux .
                declined decline VERB R root .
                , . PUNCT 13 punct .
                and . CCONJ 13 cc .
                the . DET 10 det .
                Hong . PROPN 8 compound B-GPE
                Kong . PROPN 10 compound I-GPE
                stock . NOUN 10 compound .
                market . NOUN 13 nsubj .
                has have AUX 13 aux .
                been be AUX 13 aux .
                falling fall VERB 3 conj .
                for . ADP 18 case .
                the . DET 18 det .
                past . ADJ 18 amod .
                several . ADJ 18 amod .
                weeks week NOUN 13 obl .
                , . PUNCT 22 punct .
                but . CCONJ 22 cc .
                protesters protester NOUN 22 nsubj .
                called call VERB 3 conj .
                for . ADP 25 case .
                continued . ADJ 25 amod .
                action . NOUN 22 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "City officials urged calm.",
                ("statement", "officials"),
                """
                City . NOUN 1 compound .
                officials official NOUN 2 nsubj .
                urged urge VERB R root .
                calm . NOUN 2 obj .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="protests",
    ),
    # ------------------------------------------------------------------
    # mini-003: election litigation. Passive person subject plus a
    # two-token signifier; co-occurrence over-attributes, governance
    # keeps only the grammatical subjects.
    doc(
        "mini-003",
        0,
        [
            (
                "Mr. Trump was handed defeats in Pennsylvania, Arizona and Michigan, "
                "where a state judge in Detroit rejected an unusual Republican attempt "
                "to overturn the results.",
                ("lawsuit", "state judge"),
                """
                Mr. mr. PROPN 1 compound .
                Trump . PROPN 3 nsubj:pass B-PERSON
                was be AUX 3 aux:pass .
                handed hand VERB R root .
                defeats defeat NOUN 3 obj .
                in . ADP 6 case .
                Pennsylvania . PROPN 3 obl B-GPE
                , . PUNCT 8 punct .
                Arizona . PROPN 6 conj B-GPE
                and . CCONJ 10 cc .
                Michigan . PROPN 6 conj B-GPE
                , . PUNCT 18 punct .
                where . ADV 18 advmod .
                a . DET 15 det .
                state . NOUN 15 compound .
                judge . NOUN 18 nsubj .
                in . ADP 17 case .
                Detroit . PROPN 15 nmod B-GPE
                rejected reject VERB 10 acl:relcl .
                an . DET 22 det .
                unusual . ADJ 22 amod .
                Republican . ADJ 22 amod .
                attempt . NOUN 18 obj .
                to . PART 24 mark .
                overturn . VERB 22 acl .
                the . DET 26 det .
                results result NOUN 24 obj .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "The campaign vowed an appeal.",
                ("statement", "campaign"),
                """
                The . DET 1 det .
                campaign . NOUN 2 nsubj .
                vowed vow VERB R root .
                an . DET 4 det .
                appeal . NOUN 2 obj .
                . . PUNCT 2 punct .
                """,
            ),
            (
                "Election administrators in several states certified their totals last week.",
                None,
                """
                Election . NOUN 1 compound .
                administrators administrator NOUN 5 nsubj .
                in . ADP 4 case .
                several . ADJ 4 amod .
                states state NOUN 1 nmod .
                certified certify VERB R root .
                their . PRON 7 nmod:poss .
                totals total NOUN 5 obj .
                last . ADJ 9 amod .
                week . NOUN 5 obl .
                . . PUNCT 5 punct .
                """,
            ),
        ],
        topic="politics",
    ),
    # ------------------------------------------------------------------
    # mini-004: observed scene with an implicit source. No speaking
    # verbs at all, so every attributor stays silent while gold marks
    # the passive observation.
    doc(
        "mini-004",
        0,
        [
            (
                "Mr. Bannon, the former chief strategist for President Trump, was warmly "
                "applauded when he addressed the party congress of the anti-immigrant "
                "National Front, led by Ms. Le Pen.",
                ("direct_observation", PASSIVE),
                """
                Mr. mr. PROPN 1 compound .
                Bannon . PROPN 13 nsubj:pass B-PERSON
                , . PUNCT 6 punct .
                the . DET 6 det .
                former . ADJ 6 amod .
                chief . ADJ 6 amod .
                strategist . NOUN 1 appos .
                for . ADP 9 case .
                President . PROPN 9 compound .
                Trump . PROPN 6 nmod B-PERSON
                , . PUNCT 6 punct .
                was be AUX 13 aux:pass .
                warmly . ADV 13 advmod .
                applauded applaud VERB R root .
                when . ADV 16 advmod .
                he . PRON 16 nsubj .
                addressed address VERB 13 advcl .
                the . DET 19 det .
                party . NOUN 19 compound .
                congress . NOUN 16 obj .
                of . ADP 24 case .
                the . DET 24 det .
                anti-immigrant . ADJ 24 amod .
                National . PROPN 24 compound B-ORG
                Front . PROPN 19 nmod I-ORG
                , . PUNCT 24 punct .
                led lead VERB 24 acl .
                by . ADP 30 case .
                Ms. ms. PROPN 30 compound .
                Le . PROPN 30 compound B-PERSON
                Pen . PROPN 26 obl I-PERSON
                . . PUNCT 13 punct .
                """,
            ),
            (
                "The rally drew thousands of supporters to Lille.",
                None,
                """
                The . DET 1 det .
                rally . NOUN 2 nsubj .
                drew draw VERB R root .
                thousands thousand NOUN 2 obj .
                of . ADP 5 case .
                supporters supporter NOUN 3 nmod .
                to . ADP 7 case .
                Lille . PROPN 2 obl B-GPE
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="politics",
    ),
    # ------------------------------------------------------------------
    # mini-005: product launch. Pattern coverage for comma-quote, colon
    # lead-in, and a quoteless according-to that no rule catches.
    doc(
        "mini-005",
        0,
        [
            (
                "Maria Alvarez, chief executive of Veltro Labs, unveiled the device on Monday.",
                None,
                """
                Maria . PROPN 9 nsubj B-PERSON
                Alvarez . PROPN 0 flat I-PERSON
                , . PUNCT 4 punct .
                chief . ADJ 4 amod .
                executive . NOUN 0 appos .
                of . ADP 7 case .
                Veltro . PROPN 7 compound B-ORG
                Labs . PROPN 4 nmod I-ORG
                , . PUNCT 4 punct .
                unveiled unveil VERB R root .
                the . DET 11 det .
                device . NOUN 9 obj .
                on . ADP 13 case .
                Monday . PROPN 9 obl .
                . . PUNCT 9 punct .
                """,
            ),
            (
                '"The battery lasts for two weeks," said Ms. Alvarez.',
                ("direct_quote", "Maria Alvarez"),
                """
                " . PUNCT 9 punct .
                The . DET 2 det .
                battery . NOUN 3 nsubj .
                lasts last VERB 9 ccomp .
                for . ADP 6 case .
                two . NUM 6 nummod .
                weeks week NOUN 3 obl .
                , . PUNCT 3 punct .
                " . PUNCT 9 punct .
                said say VERB R root .
                Ms. ms. PROPN 11 compound .
                Alvarez . PROPN 9 nsubj B-PERSON
                . . PUNCT 9 punct .
                """,
            ),
            (
                'Analysts said: "This is a bold move."',
                ("direct_quote", "analysts"),
                """
                Analysts analyst NOUN 1 nsubj .
                said say VERB R root .
                : . PUNCT 1 punct .
                " . PUNCT 8 punct .
                This . PRON 8 nsubj .
                is be AUX 8 cop .
                a . DET 8 det .
                bold . ADJ 8 amod .
                move . NOUN 1 ccomp .
                . . PUNCT 8 punct .
                " . PUNCT 8 punct .
                """,
            ),
            (
                "According to the company, the launch was delayed by supply problems.",
                ("statement", "company"),
                """
                According accord VERB 8 case .
                to . ADP 0 fixed .
                the . DET 3 det .
                company . NOUN 8 obl .
                , . PUNCT 8 punct .
                the . DET 6 det .
                launch . NOUN 8 nsubj:pass .
                was be AUX 8 aux:pass .
                delayed delay VERB R root .
                by . ADP 11 case .
                supply . NOUN 11 compound .
                problems problem NOUN 8 obl .
                . . PUNCT 8 punct .
                """,
            ),
            (
                "Veltro Labs shares rose 4 percent.",
                ("price_signal", PASSIVE),
                """
                Veltro . PROPN 1 compound B-ORG
                Labs . PROPN 2 compound I-ORG
                shares share NOUN 3 nsubj .
                rose rise VERB R root .
                4 . NUM 5 nummod .
                percent . NOUN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
        ],
        outlet="wire",
        topic="business",
    ),
    # ------------------------------------------------------------------
    # mini-006: arson investigation. Signifier-dense; object signifiers
    # separate co-occurrence from governance, and a two-token signifier
    # speaks inside a quote pattern.
    doc(
        "mini-006",
        0,
        [
            (
                "Police said the fire started before dawn.",
                ("statement", "police"),
                """
                Police . NOUN 1 nsubj .
                said say VERB R root .
                the . DET 3 det .
                fire . NOUN 4 nsubj .
                started start VERB 1 ccomp .
                before . ADP 6 case .
                dawn . NOUN 4 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "Witnesses told investigators that two men fled the scene.",
                ("statement", "witnesses"),
                """
                Witnesses witness NOUN 1 nsubj .
                told tell VERB R root .
                investigators investigator NOUN 1 obj .
                that . SCONJ 6 mark .
                two . NUM 5 nummod .
                men man NOUN 6 nsubj .
                fled flee VERB 1 ccomp .
                the . DET 8 det .
                scene . NOUN 6 obj .
                . . PUNCT 1 punct .
                """,
            ),
            (
                '"We are treating it as arson," a police spokesman said.',
                ("direct_quote", "police spokesman"),
                """
                " . PUNCT 12 punct .
                We . PRON 3 nsubj .
                are be AUX 3 aux .
                treating treat VERB 12 ccomp .
                it . PRON 3 obj .
                as . ADP 6 case .
                arson . NOUN 3 obl .
                , . PUNCT 3 punct .
                " . PUNCT 12 punct .
                a . DET 11 det .
                police . NOUN 11 compound .
                spokesman . NOUN 12 nsubj .
                said say VERB R root .
                . . PUNCT 12 punct .
                """,
            ),
            (
                "Neighbors described the street as quiet.",
                ("statement", "neighbors"),
                """
                Neighbors neighbor NOUN 1 nsubj .
                described describe VERB R root .
                the . DET 3 det .
                street . NOUN 1 obj .
                as . ADP 5 case .
                quiet . ADJ 1 xcomp .
                . . PUNCT 1 punct .
                """,
            ),
        ],
        topic="crime",
    ),
    # ------------------------------------------------------------------
    # mini-007: pronoun blind spot. The quoted sentence has only "He",
    # so every rule misses it while gold resolves the person.
    doc(
        "mini-007",
        0,
        [
            (
                "Senator Paul Reyes toured the flooded district on Tuesday.",
                None,
                """
                Senator . PROPN 1 compound .
                Paul . PROPN 3 nsubj B-PERSON
                Reyes . PROPN 1 flat I-PERSON
                toured tour VERB R root .
                the . DET 6 det .
                flooded . ADJ 6 amod .
                district . NOUN 3 obj .
                on . ADP 8 case .
                Tuesday . PROPN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                'He said, "The damage is worse than we feared."',
                ("direct_quote", "Paul Reyes"),
                """
                He . PRON 1 nsubj .
                said say VERB R root .
                , . PUNCT 1 punct .
                " . PUNCT 7 punct .
                The . DET 5 det .
                damage . NOUN 7 nsubj .
                is be AUX 7 cop .
                worse . ADJ 1 ccomp .
                than . SCONJ 10 mark .
                we . PRON 10 nsubj .
                feared fear VERB 7 advcl .
                . . PUNCT 7 punct .
                " . PUNCT 7 punct .
                """,
            ),
            (
                "Reyes asked residents to document their losses.",
                ("statement", "Paul Reyes"),
                """
                Reyes . PROPN 1 nsubj B-PERSON
                asked ask VERB R root .
                residents resident NOUN 1 obj .
                to . PART 4 mark .
                document . VERB 1 xcomp .
                their . PRON 6 nmod:poss .
                losses loss NOUN 4 obj .
                . . PUNCT 1 punct .
                """,
            ),
        ],
        topic="weather",
    ),
    # ------------------------------------------------------------------
    # mini-008: pure narrative, zero sources anywhere.
    doc(
        "mini-008",
        0,
        [
            (
                "Rain swept across the northern plains overnight.",
                None,
                """
                Rain . NOUN 1 nsubj .
                swept sweep VERB R root .
                across . ADP 5 case .
                the . DET 5 det .
                northern . ADJ 5 amod .
                plains plain NOUN 1 obl .
                overnight . ADV 1 advmod .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "Temperatures dropped twelve degrees in three hours.",
                None,
                """
                Temperatures temperature NOUN 1 nsubj .
                dropped drop VERB R root .
                twelve . NUM 3 nummod .
                degrees degree NOUN 1 obj .
                in . ADP 6 case .
                three . NUM 6 nummod .
                hours hour NOUN 1 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "Road crews treated bridges with salt before the morning commute.",
                None,
                """
                Road . NOUN 1 compound .
                crews crew NOUN 2 nsubj .
                treated treat VERB R root .
                bridges bridge NOUN 2 obj .
                with . ADP 5 case .
                salt . NOUN 2 obl .
                before . ADP 9 case .
                the . DET 9 det .
                morning . NOUN 9 compound .
                commute . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="weather",
    ),
    # ------------------------------------------------------------------
    # mini-009: typographic quotes. The pattern matcher and the channel
    # heuristic must both see the curly quotes as double quotes.
    doc(
        "mini-009",
        0,
        [
            (
                "The education ministry unveiled new testing guidelines on Thursday.",
                ("document", "ministry"),
                """
                The . DET 2 det .
                education . NOUN 2 compound .
                ministry . NOUN 3 nsubj .
                unveiled unveil VERB R root .
                new . ADJ 6 amod .
                testing . NOUN 6 compound .
                guidelines guideline NOUN 3 obj .
                on . ADP 8 case .
                Thursday . PROPN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "“Schools need time to adapt,” said Minister Elena Okafor.",
                ("direct_quote", "Elena Okafor"),
                """
                “ . PUNCT 8 punct .
                Schools school NOUN 2 nsubj .
                need . VERB 8 ccomp .
                time . NOUN 2 obj .
                to . PART 5 mark .
                adapt . VERB 3 acl .
                , . PUNCT 2 punct .
                ” . PUNCT 8 punct .
                said say VERB R root .
                Minister . PROPN 11 compound .
                Elena . PROPN 8 nsubj B-PERSON
                Okafor . PROPN 10 flat I-PERSON
                . . PUNCT 8 punct .
                """,
            ),
            (
                "Okafor noted that rural districts would receive extra funding.",
                ("indirect_quote", "Elena Okafor"),
                """
                Okafor . PROPN 1 nsubj B-PERSON
                noted note VERB R root .
                that . SCONJ 6 mark .
                rural . ADJ 4 amod .
                districts district NOUN 6 nsubj .
                would . AUX 6 aux .
                receive . VERB 1 ccomp .
                extra . ADJ 8 amod .
                funding . NOUN 6 obj .
                . . PUNCT 1 punct .
                """,
            ),
        ],
        topic="education",
    ),
    # ------------------------------------------------------------------
    # mini-010: last-name clustering across three sentences plus a
    # reporters-pattern quote.
    doc(
        "mini-010",
        0,
        [
            (
                "President Emmanuel Macron arrived in Berlin for emergency talks.",
                None,
                """
                President . PROPN 2 compound .
                Emmanuel . PROPN 3 nsubj B-PERSON
                Macron . PROPN 1 flat I-PERSON
                arrived arrive VERB R root .
                in . ADP 5 case .
                Berlin . PROPN 3 obl B-GPE
                for . ADP 8 case .
                emergency . NOUN 8 compound .
                talks talk NOUN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Macron told reporters that the talks had stalled.",
                ("indirect_quote", "Emmanuel Macron"),
                """
                Macron . PROPN 1 nsubj B-PERSON
                told tell VERB R root .
                reporters reporter NOUN 1 obj .
                that . SCONJ 7 mark .
                the . DET 5 det .
                talks talk NOUN 7 nsubj .
                had have AUX 7 aux .
                stalled stall VERB 1 ccomp .
                . . PUNCT 1 punct .
                """,
            ),
            (
                '"Every option remains on the table," Macron told reporters.',
                ("direct_quote", "Emmanuel Macron"),
                """
                " . PUNCT 10 punct .
                Every . DET 2 det .
                option . NOUN 3 nsubj .
                remains remain VERB 10 ccomp .
                on . ADP 6 case .
                the . DET 6 det .
                table . NOUN 3 obl .
                , . PUNCT 3 punct .
                " . PUNCT 10 punct .
                Macron . PROPN 10 nsubj B-PERSON
                told tell VERB R root .
                reporters reporter NOUN 10 obj .
                . . PUNCT 10 punct .
                """,
            ),
            (
                "The German government warned that time was running short.",
                ("statement", "government"),
                """
                The . DET 2 det .
                German . ADJ 2 amod .
                government . NOUN 3 nsubj .
                warned warn VERB R root .
                that . SCONJ 7 mark .
                time . NOUN 7 nsubj .
                was be AUX 7 aux .
                running run VERB 3 ccomp .
                short . ADJ 7 xcomp .
                . . PUNCT 3 punct .
                """,
            ),
        ],
        outlet="wire",
        topic="diplomacy",
    ),
    # ------------------------------------------------------------------
    # mini-011: governance contrast. A person is the subject of a
    # non-speaking verb inside a reported clause, so co-occurrence
    # over-attributes and governance does not. Gold resolves "the
    # mayor" to the person, which no rule can do.
    doc(
        "mini-011",
        0,
        [
            (
                "Mayor Dana Whitfield visited the shelter after the storm.",
                None,
                """
                Mayor . PROPN 2 compound .
                Dana . PROPN 3 nsubj B-PERSON
                Whitfield . PROPN 1 flat I-PERSON
                visited visit VERB R root .
                the . DET 5 det .
                shelter . NOUN 3 obj .
                after . ADP 8 case .
                the . DET 8 det .
                storm . NOUN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Residents recalled how Whitfield organized the evacuation.",
                ("statement", "residents"),
                """
                Residents resident NOUN 1 nsubj .
                recalled recall VERB R root .
                how . ADV 4 advmod .
                Whitfield . PROPN 4 nsubj B-PERSON
                organized organize VERB 1 ccomp .
                the . DET 6 det .
                evacuation . NOUN 4 obj .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "The mayor pledged a full review of drainage systems.",
                ("statement", "Dana Whitfield"),
                """
                The . DET 1 det .
                mayor . NOUN 2 nsubj .
                pledged pledge VERB R root .
                a . DET 5 det .
                full . ADJ 5 amod .
                review . NOUN 2 obj .
                of . ADP 8 case .
                drainage . NOUN 8 compound .
                systems system NOUN 5 nmod .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="weather",
    ),
    # ------------------------------------------------------------------
    # mini-012: court story with a declined comment and a passive
    # document source. "Bank" in a compound becomes an unused cluster,
    # so kept source ids are non-contiguous.
    doc(
        "mini-012",
        0,
        [
            (
                "Prosecutors charged the former treasurer with embezzlement on Friday.",
                ("lawsuit", "prosecutors"),
                """
                Prosecutors prosecutor NOUN 1 nsubj .
                charged charge VERB R root .
                the . DET 4 det .
                former . ADJ 4 amod .
                treasurer . NOUN 1 obj .
                with . ADP 6 case .
                embezzlement . NOUN 1 obl .
                on . ADP 8 case .
                Friday . PROPN 1 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "Bank records were reviewed by state auditors last year.",
                ("document", PASSIVE),
                """
                Bank . NOUN 1 compound .
                records record NOUN 3 nsubj:pass .
                were be AUX 3 aux:pass .
                reviewed review VERB R root .
                by . ADP 6 case .
                state . NOUN 6 compound .
                auditors auditor NOUN 3 obl .
                last . ADJ 8 amod .
                year . NOUN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Mr. Chen declined to comment on the new charges.",
                ("declined_comment", "Chen"),
                """
                Mr. mr. PROPN 1 compound .
                Chen . PROPN 2 nsubj B-PERSON
                declined decline VERB R root .
                to . PART 4 mark .
                comment . VERB 2 xcomp .
                on . ADP 8 case .
                the . DET 8 det .
                new . ADJ 8 amod .
                charges charge NOUN 4 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="crime",
    ),
    # ------------------------------------------------------------------
    # mini-013: two quotes in one sentence. Only the said-quote has a
    # matching template; the wrote-quote shows a pattern lexicon gap.
    doc(
        "mini-013",
        0,
        [
            (
                "The senator and the governor clashed over the budget on social media.",
                None,
                """
                The . DET 1 det .
                senator . NOUN 5 nsubj .
                and . CCONJ 4 cc .
                the . DET 4 det .
                governor . NOUN 1 conj .
                clashed clash VERB R root .
                over . ADP 8 case .
                the . DET 8 det .
                budget . NOUN 5 obl .
                on . ADP 11 case .
                social . ADJ 11 amod .
                media . NOUN 5 obl .
                . . PUNCT 5 punct .
                """,
            ),
            (
                '"The plan is reckless," Governor Ida Maru wrote, and "We will not '
                'fund it," said Senator Bo Keane.',
                ("direct_quote", "Ida Maru", "Bo Keane"),
                """
                " . PUNCT 10 punct .
                The . DET 2 det .
                plan . NOUN 4 nsubj .
                is be AUX 4 cop .
                reckless . ADJ 10 ccomp .
                , . PUNCT 4 punct .
                " . PUNCT 10 punct .
                Governor . PROPN 9 compound .
                Ida . PROPN 10 nsubj B-PERSON
                Maru . PROPN 8 flat I-PERSON
                wrote write VERB R root .
                , . PUNCT 10 punct .
                and . CCONJ 21 cc .
                " . PUNCT 21 punct .
                We . PRON 17 nsubj .
                will . AUX 17 aux .
                not . PART 17 advmod .
                fund . VERB 21 ccomp .
                it . PRON 17 obj .
                , . PUNCT 17 punct .
                " . PUNCT 21 punct .
                said say VERB 10 conj .
                Senator . PROPN 24 compound .
                Bo . PROPN 21 nsubj B-PERSON
                Keane . PROPN 23 flat I-PERSON
                . . PUNCT 10 punct .
                """,
            ),
            (
                "Maru wrote on social media that the vote was rushed.",
                ("social_media_post", "Ida Maru"),
                """
                Maru . PROPN 1 nsubj B-PERSON
                wrote write VERB R root .
                on . ADP 4 case .
                social . ADJ 4 amod .
                media . NOUN 1 obl .
                that . SCONJ 9 mark .
                the . DET 7 det .
                vote . NOUN 9 nsubj:pass .
                was be AUX 9 aux:pass .
                rushed rush VERB 1 ccomp .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "Budget talks resume next week.",
                None,
                """
                Budget . NOUN 1 compound .
                talks talk NOUN 2 nsubj .
                resume . VERB R root .
                next . ADJ 4 amod .
                week . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="politics",
    ),
    # ------------------------------------------------------------------
    # mini-014: multibyte stress. Diacritics and curly quotes shift
    # byte offsets away from codepoint offsets before the mentions.
    doc(
        "mini-014",
        0,
        [
            (
                "Organizers expected thousands at the festival in São Paulo.",
                ("statement", "organizers"),
                """
                Organizers organizer NOUN 1 nsubj .
                expected expect VERB R root .
                thousands thousand NOUN 1 obj .
                at . ADP 5 case .
                the . DET 5 det .
                festival . NOUN 1 obl .
                in . ADP 7 case .
                São são PROPN 8 compound B-GPE
                Paulo . PROPN 5 nmod I-GPE
                . . PUNCT 1 punct .
                """,
            ),
            (
                "“A cidade está pronta,” organizer"
                " Inês Duarte said, smiling.",
                ("direct_quote", "Inês Duarte"),
                """
                “ . PUNCT 10 punct .
                A a X 4 det .
                cidade . X 4 nsubj .
                está estar X 4 cop .
                pronta . X 10 ccomp .
                , . PUNCT 4 punct .
                ” . PUNCT 10 punct .
                organizer . NOUN 9 compound .
                Inês . PROPN 10 nsubj B-PERSON
                Duarte . PROPN 8 flat I-PERSON
                said say VERB R root .
                , . PUNCT 10 punct .
                smiling smile VERB 10 advcl .
                . . PUNCT 10 punct .
                """,
            ),
            (
                "The city expects the parade to draw two million people.",
                None,
                """
                The . DET 1 det .
                city . NOUN 2 nsubj .
                expects expect VERB R root .
                the . DET 4 det .
                parade . NOUN 2 obj .
                to . PART 6 mark .
                draw . VERB 2 xcomp .
                two . NUM 9 nummod .
                million . NUM 9 nummod .
                people . NOUN 6 obj .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        topic="culture",
    ),
    # ------------------------------------------------------------------
    # lineage-a: chemical fire. The update adds two newly quoted
    # sources and drops the injury sentence.
    doc(
        "lineage-a",
        0,
        [
            (
                "A chemical fire forced evacuations near the river port on Sunday.",
                None,
                """
                A a DET 2 det .
                chemical . ADJ 2 amod .
                fire . NOUN 3 nsubj .
                forced force VERB R root .
                evacuations evacuation NOUN 3 obj .
                near . ADP 8 case .
                the . DET 8 det .
                river . NOUN 8 compound .
                port . NOUN 3 obl .
                on . ADP 10 case .
                Sunday . PROPN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Authorities said the blaze began in a storage warehouse.",
                ("statement", "authorities"),
                """
                Authorities authority NOUN 1 nsubj .
                said say VERB R root .
                the . DET 3 det .
                blaze . NOUN 4 nsubj .
                began begin VERB 1 ccomp .
                in . ADP 8 case .
                a a DET 8 det .
                storage . NOUN 8 compound .
                warehouse . NOUN 4 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "No injuries were reported.",
                ("press_report", PASSIVE),
                """
                No no DET 1 det .
                injuries injury NOUN 3 nsubj:pass .
                were be AUX 3 aux:pass .
                reported report VERB R root .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Firefighters worked through the night.",
                None,
                """
                Firefighters firefighter NOUN 1 nsubj .
                worked work VERB R root .
                through . ADP 4 case .
                the . DET 4 det .
                night . NOUN 1 obl .
                . . PUNCT 1 punct .
                """,
            ),
        ],
        outlet="metro",
        topic="disaster",
    ),
    doc(
        "lineage-a",
        1,
        [
            (
                "A chemical fire forced evacuations near the river port on Sunday.",
                None,
                """
                A a DET 2 det .
                chemical . ADJ 2 amod .
                fire . NOUN 3 nsubj .
                forced force VERB R root .
                evacuations evacuation NOUN 3 obj .
                near . ADP 8 case .
                the . DET 8 det .
                river . NOUN 8 compound .
                port . NOUN 3 obl .
                on . ADP 10 case .
                Sunday . PROPN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Authorities said the blaze began in a storage warehouse.",
                ("statement", "authorities"),
                """
                Authorities authority NOUN 1 nsubj .
                said say VERB R root .
                the . DET 3 det .
                blaze . NOUN 4 nsubj .
                began begin VERB 1 ccomp .
                in . ADP 8 case .
                a a DET 8 det .
                storage . NOUN 8 compound .
                warehouse . NOUN 4 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                '"The air readings are back to normal," Fire Chief Ana Sosa said.',
                ("direct_quote", "Ana Sosa"),
                """
                " . PUNCT 14 punct .
                The . DET 3 det .
                air . NOUN 3 compound .
                readings reading NOUN 5 nsubj .
                are be AUX 5 cop .
                back . ADV 14 ccomp .
                to . ADP 7 case .
                normal . NOUN 5 obl .
                , . PUNCT 5 punct .
                " . PUNCT 14 punct .
                Fire . PROPN 11 compound .
                Chief . PROPN 12 compound .
                Ana . PROPN 14 nsubj B-PERSON
                Sosa . PROPN 12 flat I-PERSON
                said say VERB R root .
                . . PUNCT 14 punct .
                """,
            ),
            (
                "Hospital officials confirmed that twelve workers were treated for smoke inhalation.",
                ("statement", "officials"),
                """
                Hospital . NOUN 1 compound .
                officials official NOUN 2 nsubj .
                confirmed confirm VERB R root .
                that . SCONJ 7 mark .
                twelve . NUM 5 nummod .
                workers worker NOUN 7 nsubj:pass .
                were be AUX 7 aux:pass .
                treated treat VERB 2 ccomp .
                for . ADP 10 case .
                smoke . NOUN 10 compound .
                inhalation . NOUN 7 obl .
                . . PUNCT 2 punct .
                """,
            ),
            (
                "Firefighters worked through the night.",
                None,
                """
                Firefighters firefighter NOUN 1 nsubj .
                worked work VERB R root .
                through . ADP 4 case .
                the . DET 4 det .
                night . NOUN 1 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "The port reopened on Tuesday.",
                None,
                """
                The . DET 1 det .
                port . NOUN 2 nsubj .
                reopened reopen VERB R root .
                on . ADP 4 case .
                Tuesday . PROPN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        outlet="metro",
        topic="disaster",
    ),
    # ------------------------------------------------------------------
    # lineage-b: housing vote. The update edits the lede and adds one
    # newly quoted source; the quote pattern picks the title signifier
    # over the person because it starts earlier in the speaker region.
    doc(
        "lineage-b",
        0,
        [
            (
                "The city council approved a housing plan after a lengthy debate.",
                ("vote_poll", "council"),
                """
                The . DET 2 det .
                city . NOUN 2 compound .
                council . NOUN 3 nsubj .
                approved approve VERB R root .
                a a DET 6 det .
                housing . NOUN 6 compound .
                plan . NOUN 3 obj .
                after . ADP 10 case .
                a a DET 10 det .
                lengthy . ADJ 10 amod .
                debate . NOUN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Councilwoman Rita Vale said the plan would add four hundred units.",
                ("indirect_quote", "Rita Vale"),
                """
                Councilwoman . PROPN 2 compound .
                Rita . PROPN 3 nsubj B-PERSON
                Vale . PROPN 1 flat I-PERSON
                said say VERB R root .
                the . DET 5 det .
                plan . NOUN 7 nsubj .
                would . AUX 7 aux .
                add . VERB 3 ccomp .
                four . NUM 9 nummod .
                hundred . NUM 10 nummod .
                units unit NOUN 7 obj .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Opponents warned of rising rents.",
                ("statement", "opponents"),
                """
                Opponents opponent NOUN 1 nsubj .
                warned warn VERB R root .
                of . ADP 4 case .
                rising . ADJ 4 amod .
                rents rent NOUN 1 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                "Construction could begin next spring.",
                None,
                """
                Construction . NOUN 2 nsubj .
                could . AUX 2 aux .
                begin . VERB R root .
                next . ADJ 4 amod .
                spring . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        outlet="metro",
        topic="housing",
    ),
    doc(
        "lineage-b",
        1,
        [
            (
                "The city council approved a revised housing plan after a lengthy debate.",
                ("vote_poll", "council"),
                """
                The . DET 2 det .
                city . NOUN 2 compound .
                council . NOUN 3 nsubj .
                approved approve VERB R root .
                a a DET 7 det .
                revised . ADJ 7 amod .
                housing . NOUN 7 compound .
                plan . NOUN 3 obj .
                after . ADP 11 case .
                a a DET 11 det .
                lengthy . ADJ 11 amod .
                debate . NOUN 3 obl .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Councilwoman Rita Vale said the plan would add four hundred units.",
                ("indirect_quote", "Rita Vale"),
                """
                Councilwoman . PROPN 2 compound .
                Rita . PROPN 3 nsubj B-PERSON
                Vale . PROPN 1 flat I-PERSON
                said say VERB R root .
                the . DET 5 det .
                plan . NOUN 7 nsubj .
                would . AUX 7 aux .
                add . VERB 3 ccomp .
                four . NUM 9 nummod .
                hundred . NUM 10 nummod .
                units unit NOUN 7 obj .
                . . PUNCT 3 punct .
                """,
            ),
            (
                "Opponents warned of rising rents.",
                ("statement", "opponents"),
                """
                Opponents opponent NOUN 1 nsubj .
                warned warn VERB R root .
                of . ADP 4 case .
                rising . ADJ 4 amod .
                rents rent NOUN 1 obl .
                . . PUNCT 1 punct .
                """,
            ),
            (
                '"We finally have a path to more housing," Mayor Tom Abel said.',
                ("direct_quote", "Tom Abel"),
                """
                " . PUNCT 14 punct .
                We . PRON 3 nsubj .
                finally . ADV 3 advmod .
                have . VERB 14 ccomp .
                a a DET 5 det .
                path . NOUN 3 obj .
                to . ADP 8 case .
                more . ADJ 8 amod .
                housing . NOUN 5 nmod .
                , . PUNCT 3 punct .
                " . PUNCT 14 punct .
                Mayor . PROPN 13 compound .
                Tom . PROPN 14 nsubj B-PERSON
                Abel . PROPN 12 flat I-PERSON
                said say VERB R root .
                . . PUNCT 14 punct .
                """,
            ),
            (
                "Construction could begin next spring.",
                None,
                """
                Construction . NOUN 2 nsubj .
                could . AUX 2 aux .
                begin . VERB R root .
                next . ADJ 4 amod .
                spring . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        outlet="metro",
        topic="housing",
    ),
    # ------------------------------------------------------------------
    # lineage-c: service alert. Pure rewording between versions; the
    # source set is unchanged.
    doc(
        "lineage-c",
        0,
        [
            (
                "Transit officials announced weekend closures on the Blue Line.",
                ("statement", "officials"),
                """
                Transit . NOUN 1 compound .
                officials official NOUN 2 nsubj .
                announced announce VERB R root .
                weekend . NOUN 4 compound .
                closures closure NOUN 2 obj .
                on . ADP 8 case .
                the . DET 8 det .
                Blue . PROPN 8 compound .
                Line . PROPN 4 nmod .
                . . PUNCT 2 punct .
                """,
            ),
            (
                "Shuttle buses will replace trains between Ashmont and Braintree.",
                None,
                """
                Shuttle . NOUN 1 compound .
                buses bus NOUN 3 nsubj .
                will . AUX 3 aux .
                replace . VERB R root .
                trains train NOUN 3 obj .
                between . ADP 6 case .
                Ashmont . PROPN 3 obl B-GPE
                and . CCONJ 8 cc .
                Braintree . PROPN 6 conj B-GPE
                . . PUNCT 3 punct .
                """,
            ),
            (
                "The agency apologized for the disruption.",
                ("statement", "agency"),
                """
                The . DET 1 det .
                agency . NOUN 2 nsubj .
                apologized apologize VERB R root .
                for . ADP 5 case .
                the . DET 5 det .
                disruption . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        outlet="metro",
        topic="transit",
    ),
    doc(
        "lineage-c",
        1,
        [
            (
                "Transit officials announced full weekend closures on the Blue Line.",
                ("statement", "officials"),
                """
                Transit . NOUN 1 compound .
                officials official NOUN 2 nsubj .
                announced announce VERB R root .
                full . ADJ 5 amod .
                weekend . NOUN 5 compound .
                closures closure NOUN 2 obj .
                on . ADP 9 case .
                the . DET 9 det .
                Blue . PROPN 9 compound .
                Line . PROPN 5 nmod .
                . . PUNCT 2 punct .
                """,
            ),
            (
                "Shuttle buses will replace trains between Ashmont and Braintree.",
                None,
                """
                Shuttle . NOUN 1 compound .
                buses bus NOUN 3 nsubj .
                will . AUX 3 aux .
                replace . VERB R root .
                trains train NOUN 3 obj .
                between . ADP 6 case .
                Ashmont . PROPN 3 obl B-GPE
                and . CCONJ 8 cc .
                Braintree . PROPN 6 conj B-GPE
                . . PUNCT 3 punct .
                """,
            ),
            (
                "The agency apologized to riders for the disruption.",
                ("statement", "agency"),
                """
                The . DET 1 det .
                agency . NOUN 2 nsubj .
                apologized apologize VERB R root .
                to . ADP 4 case .
                riders rider NOUN 2 obl .
                for . ADP 7 case .
                the . DET 7 det .
                disruption . NOUN 2 obl .
                . . PUNCT 2 punct .
                """,
            ),
        ],
        outlet="metro",
        topic="transit",
    ),
]


# Hand-derived expected output per backend. Sources are [id, name] with
# the canonical ids assigned over ALL mention clusters in first-mention
# order (unused clusters still consume an id, which is why some kept
# ids are non-contiguous). Entries map sentence index -> [id, channel].
ORACLE = {
    "mini-001:v0": {
        "r1": {
            "sources": [[0, "Laurent Lamothe"], [1, "commission"]],
            "entries": {"0": [[0, IQ]], "2": [[1, DQ]]},
        },
        "r2": {
            "sources": [[0, "Laurent Lamothe"], [1, "commission"]],
            "entries": {"0": [[0, IQ]], "2": [[1, DQ]]},
        },
        "patterns": {
            "sources": [[1, "commission"]],
            "entries": {"2": [[1, DQ]]},
        },
    },
    "mini-002:v0": {
        "r1": {
            "sources": [[0, "protesters"], [1, "officials"]],
            "entries": {"1": [[0, IQ]], "2": [[1, IQ]]},
        },
        "r2": {
            "sources": [[0, "protesters"], [1, "officials"]],
            "entries": {"1": [[0, IQ]], "2": [[1, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-003:v0": {
        "r1": {
            "sources": [[0, "Trump"], [1, "state judge"], [2, "campaign"]],
            "entries": {"0": [[0, IQ], [1, IQ]], "1": [[2, IQ]]},
        },
        "r2": {
            "sources": [[1, "state judge"], [2, "campaign"]],
            "entries": {"0": [[1, IQ]], "1": [[2, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-004:v0": {
        "r1": {"sources": [], "entries": {}},
        "r2": {"sources": [], "entries": {}},
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-005:v0": {
        "r1": {
            "sources": [[0, "Maria Alvarez"], [1, "Analysts"]],
            "entries": {"1": [[0, DQ]], "2": [[1, DQ]]},
        },
        "r2": {
            "sources": [[0, "Maria Alvarez"], [1, "Analysts"]],
            "entries": {"1": [[0, DQ]], "2": [[1, DQ]]},
        },
        "patterns": {
            "sources": [[0, "Maria Alvarez"], [1, "Analysts"]],
            "entries": {"1": [[0, DQ]], "2": [[1, DQ]]},
        },
    },
    "mini-006:v0": {
        "r1": {
            "sources": [
                [0, "Police"],
                [1, "Witnesses"],
                [2, "investigators"],
                [3, "police spokesman"],
                [4, "Neighbors"],
            ],
            "entries": {
                "0": [[0, IQ]],
                "1": [[1, IQ], [2, IQ]],
                "2": [[3, DQ]],
                "3": [[4, IQ]],
            },
        },
        "r2": {
            "sources": [
                [0, "Police"],
                [1, "Witnesses"],
                [3, "police spokesman"],
                [4, "Neighbors"],
            ],
            "entries": {
                "0": [[0, IQ]],
                "1": [[1, IQ]],
                "2": [[3, DQ]],
                "3": [[4, IQ]],
            },
        },
        "patterns": {
            "sources": [[3, "police spokesman"]],
            "entries": {"2": [[3, DQ]]},
        },
    },
    "mini-007:v0": {
        "r1": {
            "sources": [[0, "Paul Reyes"], [1, "residents"]],
            "entries": {"2": [[0, IQ], [1, IQ]]},
        },
        "r2": {
            "sources": [[0, "Paul Reyes"]],
            "entries": {"2": [[0, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-008:v0": {
        "r1": {"sources": [], "entries": {}},
        "r2": {"sources": [], "entries": {}},
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-009:v0": {
        "r1": {
            "sources": [[1, "Elena Okafor"]],
            "entries": {"1": [[1, DQ]], "2": [[1, IQ]]},
        },
        "r2": {
            "sources": [[1, "Elena Okafor"]],
            "entries": {"1": [[1, DQ]], "2": [[1, IQ]]},
        },
        "patterns": {
            "sources": [[1, "Elena Okafor"]],
            "entries": {"1": [[1, DQ]]},
        },
    },
    "mini-010:v0": {
        "r1": {
            "sources": [[0, "Emmanuel Macron"], [1, "government"]],
            "entries": {"1": [[0, IQ]], "2": [[0, DQ]], "3": [[1, IQ]]},
        },
        "r2": {
            "sources": [[0, "Emmanuel Macron"], [1, "government"]],
            "entries": {"1": [[0, IQ]], "2": [[0, DQ]], "3": [[1, IQ]]},
        },
        "patterns": {
            "sources": [[0, "Emmanuel Macron"]],
            "entries": {"2": [[0, DQ]]},
        },
    },
    "mini-011:v0": {
        "r1": {
            "sources": [[0, "Mayor"], [1, "Dana Whitfield"], [2, "Residents"]],
            "entries": {"1": [[1, IQ], [2, IQ]], "2": [[0, IQ]]},
        },
        "r2": {
            "sources": [[0, "Mayor"], [2, "Residents"]],
            "entries": {"1": [[2, IQ]], "2": [[0, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-012:v0": {
        "r1": {
            "sources": [[0, "Prosecutors"], [2, "Chen"]],
            "entries": {"0": [[0, IQ]], "2": [[2, IQ]]},
        },
        "r2": {
            "sources": [[0, "Prosecutors"], [2, "Chen"]],
            "entries": {"0": [[0, IQ]], "2": [[2, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "mini-013:v0": {
        "r1": {
            "sources": [[0, "governor"], [1, "Ida Maru"], [2, "Bo Keane"]],
            "entries": {"1": [[0, DQ], [1, DQ], [2, DQ]], "2": [[1, IQ]]},
        },
        "r2": {
            "sources": [[1, "Ida Maru"], [2, "Bo Keane"]],
            "entries": {"1": [[1, DQ], [2, DQ]], "2": [[1, IQ]]},
        },
        "patterns": {
            "sources": [[2, "Bo Keane"]],
            "entries": {"1": [[2, DQ]]},
        },
    },
    "mini-014:v0": {
        "r1": {
            "sources": [[1, "Inês Duarte"]],
            "entries": {"1": [[1, DQ]]},
        },
        "r2": {
            "sources": [[1, "Inês Duarte"]],
            "entries": {"1": [[1, DQ]]},
        },
        "patterns": {
            "sources": [[1, "Inês Duarte"]],
            "entries": {"1": [[1, DQ]]},
        },
    },
    "lineage-a:v0": {
        "r1": {
            "sources": [[0, "Authorities"]],
            "entries": {"1": [[0, IQ]]},
        },
        "r2": {
            "sources": [[0, "Authorities"]],
            "entries": {"1": [[0, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "lineage-a:v1": {
        "r1": {
            "sources": [
                [0, "Authorities"],
                [1, "Ana Sosa"],
                [2, "Hospital"],
                [3, "officials"],
            ],
            "entries": {
                "1": [[0, IQ]],
                "2": [[1, DQ]],
                "3": [[2, IQ], [3, IQ]],
            },
        },
        "r2": {
            "sources": [[0, "Authorities"], [1, "Ana Sosa"], [3, "officials"]],
            "entries": {"1": [[0, IQ]], "2": [[1, DQ]], "3": [[3, IQ]]},
        },
        "patterns": {
            "sources": [[1, "Ana Sosa"]],
            "entries": {"2": [[1, DQ]]},
        },
    },
    "lineage-b:v0": {
        "r1": {
            "sources": [[1, "Rita Vale"]],
            "entries": {"1": [[1, IQ]]},
        },
        "r2": {
            "sources": [[1, "Rita Vale"]],
            "entries": {"1": [[1, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "lineage-b:v1": {
        "r1": {
            "sources": [[1, "Rita Vale"], [2, "Mayor"], [3, "Tom Abel"]],
            "entries": {"1": [[1, IQ]], "3": [[2, DQ], [3, DQ]]},
        },
        "r2": {
            "sources": [[1, "Rita Vale"], [3, "Tom Abel"]],
            "entries": {"1": [[1, IQ]], "3": [[3, DQ]]},
        },
        "patterns": {
            "sources": [[2, "Mayor"]],
            "entries": {"3": [[2, DQ]]},
        },
    },
    "lineage-c:v0": {
        "r1": {
            "sources": [[0, "officials"]],
            "entries": {"0": [[0, IQ]]},
        },
        "r2": {
            "sources": [[0, "officials"]],
            "entries": {"0": [[0, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
    "lineage-c:v1": {
        "r1": {
            "sources": [[0, "officials"]],
            "entries": {"0": [[0, IQ]]},
        },
        "r2": {
            "sources": [[0, "officials"]],
            "entries": {"0": [[0, IQ]]},
        },
        "patterns": {"sources": [], "entries": {}},
    },
}


def main() -> None:
    corpus_path = DATA_DIR / "minicorpus.jsonl"
    oracle_path = DATA_DIR / "minicorpus_oracle.json"
    n = write_documents(DOCS, corpus_path)
    with open(oracle_path, "w", encoding="utf-8") as fh:
        json.dump(ORACLE, fh, ensure_ascii=False, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {n} documents -> {corpus_path}")
    print(f"wrote oracle for {len(ORACLE)} doc versions -> {oracle_path}")


if __name__ == "__main__":
    main()
