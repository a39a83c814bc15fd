const IRREGULAR: Record<string, string> = {
  said: "say", says: "say", told: "tell", spoke: "speak", spoken: "speak",
  wrote: "write", written: "write", met: "meet", went: "go", goes: "go",
  made: "make", took: "take", taken: "take", gave: "give", given: "give",
  got: "get", came: "come", saw: "see", seen: "see", knew: "know",
  known: "know", thought: "think", found: "find", left: "leave",
  felt: "feel", kept: "keep", held: "hold", began: "begin", ran: "run",
  paid: "pay", sat: "sit", stood: "stand", lost: "lose", won: "win",
  sent: "send", built: "build", fell: "fall", rose: "rise", led: "lead",
  brought: "bring", bought: "buy", caught: "catch", taught: "teach",
  sought: "seek", fought: "fight", did: "do", does: "do", done: "do",
  was: "be", were: "be", is: "be", are: "be", been: "be", being: "be",
  am: "be", has: "have", had: "have", having: "have", became: "become",
  children: "child", people: "people", men: "man", women: "woman",
  died: "die", dies: "die", dying: "die", lying: "lie", tying: "tie",
};

// lemmas that end in silent -e, so -ed/-ing stripping must restore it
const E_FINAL = new Set([
  "accuse", "acknowledge", "advise", "agree", "allege", "announce",
  "argue", "assure", "blame", "charge", "cite", "concede", "conclude",
  "continue", "criticize", "declare", "decline", "describe", "disclose",
  "dispute", "elaborate", "emphasize", "estimate", "note", "observe",
  "pledge", "promise", "propose", "reiterate", "speculate", "state",
  "urge", "write", "arrive", "believe", "change", "close", "face", "file",
  "include", "issue", "move", "praise", "provide", "raise", "receive",
  "reduce", "release", "rule", "schedule", "serve", "vote", "merge",
  "decide", "organize", "recognize", "require", "resolve", "retire",
  "settle", "share", "size", "use",
]);

function restoreStem(stem: string): string {
  if (E_FINAL.has(stem + "e")) return stem + "e";
  // undo consonant doubling (planned -> plan) but keep -ll/-ss stems
  if (/([^aeiou\Wls])\1$/.test(stem)) return stem.slice(0, -1);
  return stem;
}

function verbLemma(lower: string): string {
  if (lower.endsWith("ies") && lower.length > 4)
    return lower.slice(0, -3) + "y";
  if (/(?:ss|sh|ch|x|z)es$/.test(lower)) return lower.slice(0, -2);
  if (lower.endsWith("s") && !lower.endsWith("ss") && lower.length > 3)
    return lower.slice(0, -1);
  if (lower.endsWith("ied") && lower.length > 4)
    return lower.slice(0, -3) + "y";
  if (lower.endsWith("eed")) return lower.slice(0, -1);
  if (lower.endsWith("ed") && lower.length > 4)
    return restoreStem(lower.slice(0, -2));
  if (lower.endsWith("ing") && lower.length > 5)
    return restoreStem(lower.slice(0, -3));
  return lower;
}

function nounLemma(lower: string): string {
  if (lower.endsWith("ies") && lower.length > 4)
    return lower.slice(0, -3) + "y";
  if (/(?:ss|sh|ch|x|z)es$/.test(lower)) return lower.slice(0, -2);
  if (lower.endsWith("s") && !/(?:ss|us|is|news)$/.test(lower) && lower.length > 3)
    return lower.slice(0, -1);
  return lower;
}

/** Lowercased lemma; proper nouns lowercase their form unchanged. */
export function lemmatize(form: string, upos: string): string {
  const lower = form.toLowerCase();
  if (upos === "PUNCT" || upos === "NUM" || upos === "PROPN") return lower;
  if (IRREGULAR[lower]) return IRREGULAR[lower];
  if (upos === "VERB" || upos === "AUX") return verbLemma(lower);
  if (upos === "NOUN") return nounLemma(lower);
  return lower;
}
