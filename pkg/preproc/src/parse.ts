import { RawToken } from "./tokenize.js";

export interface DepArc {
  head: number | null;
  deprel: string;
}

const POSSESSIVES = new Set(["his", "her", "their", "its", "my", "our", "your"]);

function findRight(upos: string[], from: number, wanted: Set<string>): number {
  for (let k = from + 1; k < upos.length; k += 1)
    if (wanted.has(upos[k])) return k;
  return -1;
}

function nearestVerb(upos: string[], i: number): number {
  let best = -1;
  for (let k = 0; k < upos.length; k += 1) {
    if (upos[k] !== "VERB") continue;
    if (best < 0 || Math.abs(k - i) < Math.abs(best - i)) best = k;
  }
  return best;
}

const NOMINAL = new Set(["NOUN", "PROPN"]);
const NOMINAL_OR_PRON = new Set(["NOUN", "PROPN", "PRON"]);

/** Single-root heuristic dependency arcs.
 *
 * One verb anchors the sentence; nominal runs chain by compound into
 * their last token, whose arc to the nearest verb is nsubj for the first
 * unclaimed subject and obj otherwise. Guarantees: exactly one root, all
 * heads in range, never self-headed. No tree or projectivity claim.
 */
export function parseDependencies(
  tokens: RawToken[],
  upos: string[],
  entityTags: string[],
): DepArc[] {
  const n = tokens.length;
  let root = upos.indexOf("VERB");
  if (root < 0) root = upos.indexOf("AUX");
  if (root < 0) root = upos.findIndex((u) => NOMINAL.has(u));
  if (root < 0) root = 0;

  const arcs: DepArc[] = tokens.map(() => ({ head: root, deprel: "dep" }));
  arcs[root] = { head: null, deprel: "root" };
  const hasSubject = new Set<number>();

  const attachNominal = (i: number) => {
    const v = nearestVerb(upos, i);
    if (v < 0 || v === i) {
      if (i !== root) arcs[i] = { head: root, deprel: "nmod" };
      return;
    }
    if (!hasSubject.has(v)) {
      hasSubject.add(v);
      arcs[i] = { head: v, deprel: "nsubj" };
    } else {
      arcs[i] = { head: v, deprel: "obj" };
    }
  };

  let i = 0;
  while (i < n) {
    if (i === root) {
      i += 1;
      continue;
    }
    const u = upos[i];
    if (NOMINAL.has(u)) {
      // a nominal run: inner tokens chain forward, last token takes the
      // grammatical role; entity continuations attach flat instead
      let j = i;
      while (j + 1 < n && NOMINAL.has(upos[j + 1]) && j + 1 !== root) j += 1;
      for (let k = i; k < j; k += 1)
        arcs[k] = {
          head: k + 1,
          deprel: entityTags[k + 1].startsWith("I-") ? "flat" : "compound",
        };
      if (j !== root) attachNominal(j);
      i = j + 1;
      continue;
    }
    if (u === "PUNCT") arcs[i] = { head: root, deprel: "punct" };
    else if (u === "PRON") {
      const lower = tokens[i].form.toLowerCase();
      if (POSSESSIVES.has(lower)) {
        const noun = findRight(upos, i, NOMINAL);
        arcs[i] = noun >= 0 ? { head: noun, deprel: "nmod:poss" } : { head: root, deprel: "nmod" };
      } else {
        attachNominal(i);
      }
    } else if (u === "DET") {
      const noun = findRight(upos, i, NOMINAL_OR_PRON);
      arcs[i] = noun >= 0 ? { head: noun, deprel: "det" } : { head: root, deprel: "det" };
    } else if (u === "ADJ") {
      const noun = findRight(upos, i, NOMINAL);
      arcs[i] = noun >= 0 ? { head: noun, deprel: "amod" } : { head: root, deprel: "amod" };
    } else if (u === "NUM") {
      const noun = findRight(upos, i, NOMINAL);
      arcs[i] = noun >= 0 ? { head: noun, deprel: "nummod" } : { head: root, deprel: "nummod" };
    } else if (u === "ADP") {
      const noun = findRight(upos, i, NOMINAL_OR_PRON);
      arcs[i] = noun >= 0 ? { head: noun, deprel: "case" } : { head: root, deprel: "case" };
    } else if (u === "ADV") arcs[i] = { head: root, deprel: "advmod" };
    else if (u === "AUX") arcs[i] = { head: root, deprel: "aux" };
    else if (u === "PART") {
      const verb = findRight(upos, i, new Set(["VERB"]));
      arcs[i] =
        tokens[i].form.toLowerCase() === "to" && verb >= 0
          ? { head: verb, deprel: "mark" }
          : { head: root, deprel: "advmod" };
    } else if (u === "CCONJ") arcs[i] = { head: root, deprel: "cc" };
    else if (u === "SCONJ") arcs[i] = { head: root, deprel: "mark" };
    else if (u === "VERB") arcs[i] = { head: root, deprel: "conj" };
    i += 1;
  }
  return arcs;
}
