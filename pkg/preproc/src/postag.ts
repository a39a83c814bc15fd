import { RawToken } from "./tokenize.js";

const PRONOUNS = new Set([
  "i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves",
  "you", "your", "yours", "yourself", "he", "him", "his", "himself", "she",
  "her", "hers", "herself", "it", "its", "itself", "they", "them", "their",
  "theirs", "themselves", "who", "whom", "whose", "which", "what", "this",
  "everyone", "someone", "anyone", "nobody", "something", "nothing",
]);

const DETERMINERS = new Set([
  "the", "a", "an", "this", "that", "these", "those", "each", "every",
  "some", "any", "no", "both", "either", "neither", "all", "several",
]);

const AUXILIARIES = new Set([
  "is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
  "had", "having", "do", "does", "did", "will", "would", "shall", "should",
  "can", "could", "may", "might", "must", "don't", "doesn't", "didn't",
  "won't", "can't", "couldn't", "wouldn't", "shouldn't", "isn't", "aren't",
  "wasn't", "weren't", "hasn't", "haven't", "hadn't",
]);

const ADPOSITIONS = new Set([
  "in", "on", "at", "by", "for", "with", "about", "against", "between",
  "among", "into", "through", "during", "before", "after", "above", "below",
  "from", "up", "down", "of", "off", "over", "under", "near", "across",
  "around", "behind", "beyond", "despite", "amid", "within", "without",
  "toward", "towards", "outside", "inside", "per", "via",
]);

const COORDINATORS = new Set(["and", "but", "or", "nor", "so", "yet", "plus"]);

const SUBORDINATORS = new Set([
  "because", "although", "though", "while", "if", "unless", "since",
  "whereas", "until", "once", "whether", "as",
]);

const PARTICLES = new Set(["not", "to", "n't"]);

// frequent news verbs whose forms defeat pure suffix rules
const VERB_FORMS = new Set([
  "said", "says", "say", "saying", "told", "tells", "tell", "telling",
  "added", "adds", "add", "warned", "warns", "warn", "announced",
  "announces", "announce", "reported", "reports", "report", "stated",
  "states", "state", "noted", "notes", "note", "claimed", "claims", "claim",
  "denied", "denies", "deny", "confirmed", "confirms", "confirm",
  "declined", "declines", "decline", "spoke", "speaks", "speak", "asked",
  "asks", "ask", "called", "calls", "call", "described", "describes",
  "describe", "argued", "argues", "argue", "urged", "urges", "urge",
  "wrote", "writes", "write", "testified", "testifies", "testify",
  "resigned", "resigns", "resign", "met", "meets", "meet", "won", "wins",
  "win", "lost", "loses", "lose", "voted", "votes", "vote", "passed",
  "passes", "pass", "ruled", "rules", "rule", "filed", "files", "file",
  "signed", "signs", "sign", "began", "begins", "begin", "continued",
  "continues", "continue", "remains", "remain", "became", "becomes",
  "become", "went", "goes", "go", "came", "comes", "come", "took", "takes",
  "take", "made", "makes", "make", "found", "finds", "find", "held",
  "holds", "hold", "gave", "gives", "give", "got", "gets", "get", "saw",
  "sees", "see", "knew", "knows", "know", "responded", "responds",
  "respond", "insisted", "insists", "insist", "alleged", "alleges",
  "allege", "acknowledged", "acknowledges", "acknowledge", "estimated",
  "estimates", "estimate", "predicted", "predicts", "predict", "vowed",
  "vows", "vow", "pledged", "pledges", "pledge", "promised", "promises",
  "promise", "accused", "accuses", "accuse", "agreed", "agrees", "agree",
  "arrived", "arrives", "arrive", "died", "dies", "die", "fell", "falls",
  "fall", "rose", "rises", "rise",
]);

function isCapitalized(form: string): boolean {
  return /^\p{Lu}/u.test(form);
}

function suffixGuess(lower: string): string {
  if (lower.endsWith("ly") && lower.length > 4) return "ADV";
  if (/(?:ed|ing)$/.test(lower) && lower.length > 4) return "VERB";
  if (/(?:izes?|ised?|ifies)$/.test(lower)) return "VERB";
  if (/(?:ous|ful|ive|ible|able|ical)$/.test(lower) && lower.length > 5)
    return "ADJ";
  return "NOUN";
}

/** Heuristic universal POS tags; deterministic, closed-class driven. */
export function tagUpos(tokens: RawToken[]): string[] {
  return tokens.map((tok, i) => {
    const form = tok.form;
    const lower = form.toLowerCase();
    if (/^[^\p{L}\p{N}]+$/u.test(form)) return "PUNCT";
    if (/^[\p{N}][\p{N},.:%–-]*$/u.test(form)) return "NUM";
    if (PRONOUNS.has(lower)) return "PRON";
    if (DETERMINERS.has(lower)) return "DET";
    if (AUXILIARIES.has(lower)) return "AUX";
    if (PARTICLES.has(lower)) return "PART";
    if (ADPOSITIONS.has(lower)) return "ADP";
    if (COORDINATORS.has(lower)) return "CCONJ";
    if (SUBORDINATORS.has(lower)) return "SCONJ";
    if (isCapitalized(form) && !VERB_FORMS.has(lower)) {
      if (i > 0) return "PROPN";
      // sentence-initial: proper when another capital or a finite verb
      // follows (likely a name in subject position)
      const next = tokens[i + 1];
      if (next && (isCapitalized(next.form) || VERB_FORMS.has(next.form.toLowerCase())))
        return "PROPN";
    }
    if (VERB_FORMS.has(lower)) return "VERB";
    return suffixGuess(lower);
  });
}
