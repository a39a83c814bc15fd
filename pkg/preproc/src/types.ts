import { Buffer } from "node:buffer";
import { z } from "zod";

export const RawArticleSchema = z.object({
  doc_id: z.string().min(1),
  version_id: z.number().int().nonnegative().default(0),
  text: z.string(),
  outlet: z.string().optional(),
  topic: z.string().optional(),
});

export type RawArticle = z.infer<typeof RawArticleSchema>;

export const ENTITY_TAG_RE = /^(O|[BI]-[A-Za-z_]+)$/;

export const TokenRecordSchema = z.object({
  form: z.string().min(1),
  lemma: z.string().min(1),
  upos: z.string().min(1),
  head: z.number().int().nullable(),
  deprel: z.string().min(1),
  entity_tag: z.string().regex(ENTITY_TAG_RE),
  char_start: z.number().int().nonnegative(),
  char_end: z.number().int().positive(),
});

export type TokenRecord = z.infer<typeof TokenRecordSchema>;

export const SentenceRecordSchema = z.object({
  text: z.string().min(1),
  tokens: z.array(TokenRecordSchema).min(1),
});

export type SentenceRecord = z.infer<typeof SentenceRecordSchema>;

export const DocumentRecordSchema = z.object({
  doc_id: z.string().min(1),
  version_id: z.number().int().nonnegative(),
  outlet: z.string().optional(),
  topic: z.string().optional(),
  sentences: z.array(SentenceRecordSchema).min(1),
});

export type DocumentRecord = z.infer<typeof DocumentRecordSchema>;

export function byteLength(s: string): number {
  return Buffer.byteLength(s, "utf8");
}

/** Structural issues the downstream reader would reject; empty means valid.
 *
 * Mirrors the consumer's validation: token spans are UTF-8 byte offsets
 * into the sentence text, non-overlapping and in order, separated only by
 * whitespace, each matching its form byte-for-byte; heads stay in range
 * with no self-loops and exactly one root per sentence.
 */
export function validateDocument(doc: DocumentRecord): string[] {
  const issues: string[] = [];
  const where = (si: number, ti: number) =>
    `${doc.doc_id} sentence ${si} token ${ti}`;
  doc.sentences.forEach((sent, si) => {
    const encoded = Buffer.from(sent.text, "utf8");
    let prevEnd = 0;
    let roots = 0;
    sent.tokens.forEach((tok, ti) => {
      if (tok.head === null) roots += 1;
      if (tok.head === ti) issues.push(`${where(si, ti)}: self-headed`);
      if (tok.head !== null && (tok.head < 0 || tok.head >= sent.tokens.length))
        issues.push(`${where(si, ti)}: head ${tok.head} out of range`);
      if (tok.char_start >= tok.char_end)
        issues.push(`${where(si, ti)}: empty span`);
      if (tok.char_start < prevEnd)
        issues.push(`${where(si, ti)}: overlapping spans`);
      if (tok.char_end > encoded.length)
        issues.push(`${where(si, ti)}: span exceeds text`);
      else {
        const gap = encoded.subarray(prevEnd, tok.char_start).toString("utf8");
        if (gap.trim() !== "")
          issues.push(`${where(si, ti)}: non-whitespace gap`);
        const slice = encoded
          .subarray(tok.char_start, tok.char_end)
          .toString("utf8");
        if (slice !== tok.form)
          issues.push(`${where(si, ti)}: form ${JSON.stringify(tok.form)} != span ${JSON.stringify(slice)}`);
      }
      prevEnd = Math.max(prevEnd, tok.char_end);
    });
    const tail = encoded.subarray(prevEnd).toString("utf8");
    if (tail.trim() !== "")
      issues.push(`${doc.doc_id} sentence ${si}: text after last token`);
    if (roots !== 1)
      issues.push(`${doc.doc_id} sentence ${si}: ${roots} roots`);
  });
  return issues;
}
