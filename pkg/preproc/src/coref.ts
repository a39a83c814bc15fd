import { annotateSentence } from "./annotate.js";
import { tokenize } from "./tokenize.js";
import { DocumentRecord, byteLength } from "./types.js";

const SUBJECT_OBJECT = new Set(["he", "she", "they", "him", "them"]);
const POSSESSIVE = new Set(["his", "their"]);
// "her" is possessive before a nominal, objective otherwise

export interface Replacement {
  doc_id: string;
  version_id: number;
  sentence_index: number;
  pronoun: string;
  replacement: string;
  /** UTF-8 byte span of the substituted text in the NEW sentence text */
  char_start: number;
  char_end: number;
}

interface PlannedEdit {
  start: number; // UTF-16 offsets in the old sentence text
  end: number;
  pronoun: string;
  replacement: string;
}

function mentionSurface(text: string, start: number, end: number): string {
  return text.slice(start, end);
}

/** Replace third-person pronouns with the nearest preceding person mention.
 *
 * Pronouns before any mention stay untouched. Edited sentences are fully
 * re-annotated so token offsets are recomputed rather than patched. A
 * document without replacements is returned as-is.
 */
export function resolveCoref(doc: DocumentRecord): {
  doc: DocumentRecord;
  log: Replacement[];
} {
  let lastMention: string | null = null;
  const log: Replacement[] = [];
  const sentences = [...doc.sentences];
  let changed = false;

  sentences.forEach((sent, si) => {
    const raw = tokenize(sent.text);
    const edits: PlannedEdit[] = [];
    let spanStart = -1;

    sent.tokens.forEach((tok, i) => {
      if (tok.entity_tag.startsWith("B-")) {
        if (spanStart >= 0)
          lastMention = mentionSurface(
            sent.text,
            raw[spanStart].start,
            raw[i - 1].end,
          );
        spanStart = i;
      } else if (!tok.entity_tag.startsWith("I-")) {
        if (spanStart >= 0)
          lastMention = mentionSurface(
            sent.text,
            raw[spanStart].start,
            raw[i - 1].end,
          );
        spanStart = -1;
      }
      if (tok.upos !== "PRON" || lastMention === null) return;
      const lower = tok.form.toLowerCase();
      const nextIsNominal = ["NOUN", "PROPN", "ADJ"].includes(
        sent.tokens[i + 1]?.upos ?? "",
      );
      let replacement: string | null = null;
      if (SUBJECT_OBJECT.has(lower)) replacement = lastMention;
      else if (POSSESSIVE.has(lower) || (lower === "her" && nextIsNominal))
        replacement = `${lastMention}'s`;
      else if (lower === "her") replacement = lastMention;
      if (replacement !== null)
        edits.push({
          start: raw[i].start,
          end: raw[i].end,
          pronoun: tok.form,
          replacement,
        });
    });
    if (spanStart >= 0)
      lastMention = mentionSurface(
        sent.text,
        raw[spanStart].start,
        raw[raw.length - 1].end,
      );
    if (edits.length === 0) return;

    changed = true;
    let newText = sent.text;
    for (const e of [...edits].reverse())
      newText = newText.slice(0, e.start) + e.replacement + newText.slice(e.end);
    sentences[si] = annotateSentence(newText);

    let shift = 0;
    for (const e of edits) {
      const newStart = e.start + shift;
      const prefix = byteLength(newText.slice(0, newStart));
      log.push({
        doc_id: doc.doc_id,
        version_id: doc.version_id,
        sentence_index: si,
        pronoun: e.pronoun,
        replacement: e.replacement,
        char_start: prefix,
        char_end: prefix + byteLength(e.replacement),
      });
      shift += e.replacement.length - (e.end - e.start);
    }
  });

  if (!changed) return { doc, log };
  return { doc: { ...doc, sentences }, log };
}
