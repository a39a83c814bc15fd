import { byteLength } from "./types.js";

// titles and common abbreviations that do not end a sentence
const ABBREVIATIONS = new Set([
  "mr", "ms", "mrs", "dr", "prof", "gen", "sen", "rep", "gov", "lt", "col",
  "sgt", "capt", "rev", "jr", "sr", "st", "mt", "inc", "corp", "co", "ltd",
  "vs", "etc", "no", "dept", "univ", "assn", "bros", "jan", "feb", "mar",
  "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec", "a.m",
  "p.m", "u.s", "u.k", "u.n", "e.g", "i.e",
]);

const CLOSERS = "\"'”’)»]";

function isBoundary(text: string, i: number): boolean {
  // i points at a sentence-final mark [.!?]
  let j = i + 1;
  while (j < text.length && CLOSERS.includes(text[j])) j += 1;
  if (j >= text.length) return true;
  if (!/\s/.test(text[j])) return false;
  while (j < text.length && /\s/.test(text[j])) j += 1;
  if (j >= text.length) return true;
  // the next sentence starts with a capital, digit, or opening quote
  if (!/[\p{Lu}\p{N}"'“‘(«]/u.test(text[j])) return false;
  if (text[i] !== ".") return true;
  // period: guard against abbreviations and initials
  const before = text.slice(0, i);
  const m = before.match(/([\p{L}.]+)$/u);
  if (m) {
    const word = m[1].toLowerCase().replace(/\.+$/, "");
    if (ABBREVIATIONS.has(word)) return false;
    if (/^\p{Lu}$/u.test(m[1])) return false; // single initial, "J."
  }
  return true;
}

/** Split text into trimmed sentence strings (no empty entries). */
export function splitSentences(text: string): string[] {
  const out: string[] = [];
  let start = 0;
  for (let i = 0; i < text.length; i += 1) {
    if (".!?".includes(text[i]) && isBoundary(text, i)) {
      let end = i + 1;
      while (end < text.length && CLOSERS.includes(text[end])) end += 1;
      const piece = text.slice(start, end).trim();
      if (piece) out.push(piece);
      start = end;
    }
  }
  const rest = text.slice(start).trim();
  if (rest) out.push(rest);
  return out;
}

export interface RawToken {
  form: string;
  /** codepoint-safe UTF-16 index into the sentence string */
  start: number;
  end: number;
  /** UTF-8 byte offsets into the sentence string */
  charStart: number;
  charEnd: number;
}

// a word (letters/digits, optional internal apostrophe part) or any
// single non-space character
const TOKEN_RE = /[\p{L}\p{N}]+(?:['’][\p{L}]+)*|[^\s]/gu;

export function tokenize(sentence: string): RawToken[] {
  const tokens: RawToken[] = [];
  let cursor = 0; // UTF-16 units consumed
  let bytes = 0; // UTF-8 bytes consumed
  for (const m of sentence.matchAll(TOKEN_RE)) {
    const start = m.index ?? 0;
    bytes += byteLength(sentence.slice(cursor, start));
    const width = byteLength(m[0]);
    tokens.push({
      form: m[0],
      start,
      end: start + m[0].length,
      charStart: bytes,
      charEnd: bytes + width,
    });
    bytes += width;
    cursor = start + m[0].length;
  }
  return tokens;
}
