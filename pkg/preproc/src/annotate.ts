import { lemmatize } from "./lemma.js";
import { tagEntities } from "./ner.js";
import { parseDependencies } from "./parse.js";
import { tagUpos } from "./postag.js";
import { splitSentences, tokenize } from "./tokenize.js";
import {
  DocumentRecord,
  RawArticle,
  SentenceRecord,
  validateDocument,
} from "./types.js";

export const ANNOTATOR_NAME = "newsattrib-preproc/heuristic";
export const ANNOTATOR_VERSION = "0.1.0";

export class AnnotationError extends Error {
  constructor(message: string, readonly docId?: string) {
    super(docId ? `${docId}: ${message}` : message);
    this.name = "AnnotationError";
  }
}

export function annotateSentence(text: string): SentenceRecord {
  const raw = tokenize(text);
  if (raw.length === 0)
    throw new AnnotationError(`sentence has no tokens: ${JSON.stringify(text)}`);
  const upos = tagUpos(raw);
  const entityTags = tagEntities(raw, upos);
  const arcs = parseDependencies(raw, upos, entityTags);
  return {
    text,
    tokens: raw.map((tok, i) => ({
      form: tok.form,
      lemma: lemmatize(tok.form, upos[i]),
      upos: upos[i],
      head: arcs[i].head,
      deprel: arcs[i].deprel,
      entity_tag: entityTags[i],
      char_start: tok.charStart,
      char_end: tok.charEnd,
    })),
  };
}

/** Raw article text to a fully annotated document record.
 *
 * Throws AnnotationError on empty text or text that segments to nothing;
 * the produced record is re-checked against the consumer's structural
 * rules before being returned.
 */
export function annotate(raw: RawArticle): DocumentRecord {
  if (raw.text.trim() === "")
    throw new AnnotationError("empty article text", raw.doc_id);
  const pieces = splitSentences(raw.text);
  if (pieces.length === 0)
    throw new AnnotationError("no sentences after segmentation", raw.doc_id);
  const doc: DocumentRecord = {
    doc_id: raw.doc_id,
    version_id: raw.version_id,
    ...(raw.outlet !== undefined ? { outlet: raw.outlet } : {}),
    ...(raw.topic !== undefined ? { topic: raw.topic } : {}),
    sentences: pieces.map(annotateSentence),
  };
  const issues = validateDocument(doc);
  if (issues.length > 0)
    throw new AnnotationError(`invalid output: ${issues[0]}`, raw.doc_id);
  return doc;
}

/** Serialize with the same key order the downstream reader writes. */
export function documentToJson(doc: DocumentRecord): string {
  const rec: Record<string, unknown> = {
    doc_id: doc.doc_id,
    version_id: doc.version_id,
  };
  if (doc.outlet !== undefined) rec.outlet = doc.outlet;
  if (doc.topic !== undefined) rec.topic = doc.topic;
  rec.sentences = doc.sentences.map((s) => ({
    text: s.text,
    tokens: s.tokens,
  }));
  return JSON.stringify(rec);
}
