import { RawToken } from "./tokenize.js";

// internal tagger labels -> the tag inventory the consumer validates
export const TAG_MAP: Record<string, string> = { PER: "PERSON" };

const HONORIFICS = new Set(["mr", "ms", "mrs", "dr"]);

const GIVEN_NAMES = new Set([
  "maria", "john", "elena", "omar", "ana", "james", "mary", "robert",
  "michael", "linda", "david", "sarah", "daniel", "laura", "carlos",
  "sofia", "ahmed", "fatima", "wei", "yuki", "ivan", "olga", "pierre",
  "claire", "hans", "greta", "luis", "carmen", "paulo", "ines", "sean",
  "aoife", "emma", "noah", "liam", "olivia", "william", "susan", "joseph",
  "patricia", "thomas", "barbara", "charles", "jennifer", "richard",
  "elizabeth", "marco", "lucia", "amir", "leila", "kofi", "amara",
  "laurent", "emmanuel", "donald", "steve", "dana", "angela", "boris",
  "pedro", "rosa", "tomas", "eva", "karl", "nina", "samuel", "ruth",
  "victor", "alice", "hugo", "clara", "felix", "ida", "oscar", "vera",
  "anton", "irene", "jorge", "paula", "andre", "silvia", "peter", "helen",
  "frank", "diane", "george", "nancy", "edward", "karen", "henry",
  "monica", "arthur", "julia", "walter", "diana", "raymond", "gloria",
]);

// verbs whose proper-noun subject is very likely a person (speech verbs
// plus common animate-subject news verbs)
const PERSON_SUBJECT_VERBS = new Set([
  "said", "says", "say", "told", "tells", "announced", "announces",
  "warned", "warns", "added", "adds", "stated", "states", "noted",
  "notes", "claimed", "claims", "denied", "denies", "confirmed",
  "confirms", "declined", "declines", "argued", "argues", "urged",
  "urges", "insisted", "insists", "testified", "testifies", "responded",
  "responds", "acknowledged", "acknowledges", "wrote", "writes", "spoke",
  "speaks", "pledged", "vowed", "promised", "estimated", "predicted",
  "alleged", "accused", "agreed", "reported", "reports", "explained",
  "explains", "replied", "replies", "asked", "asks", "resigned",
  "resigns", "arrived", "arrives", "died", "dies", "met", "meets",
  "won", "wins", "lost", "loses", "voted", "votes", "visited", "visits",
  "returned", "returns",
]);

function honorificBefore(tokens: RawToken[], i: number): boolean {
  if (i >= 1 && HONORIFICS.has(tokens[i - 1].form.toLowerCase()))
    return true;
  return (
    i >= 2 &&
    tokens[i - 1].form === "." &&
    HONORIFICS.has(tokens[i - 2].form.toLowerCase())
  );
}

/** BIO tags over the core inventory; only person sources are emitted.
 *
 * A run of consecutive proper nouns is a person when an honorific or a
 * known given name opens it, or a reporting verb follows it.
 */
export function tagEntities(tokens: RawToken[], upos: string[]): string[] {
  const tags = new Array<string>(tokens.length).fill("O");
  let i = 0;
  while (i < tokens.length) {
    if (upos[i] !== "PROPN") {
      i += 1;
      continue;
    }
    let j = i;
    while (j < tokens.length && upos[j] === "PROPN") j += 1;
    const after = tokens[j]?.form.toLowerCase() ?? "";
    const isPerson =
      honorificBefore(tokens, i) ||
      GIVEN_NAMES.has(tokens[i].form.toLowerCase()) ||
      PERSON_SUBJECT_VERBS.has(after);
    if (isPerson) {
      tags[i] = `B-${TAG_MAP.PER}`;
      for (let k = i + 1; k < j; k += 1) tags[k] = `I-${TAG_MAP.PER}`;
    }
    i = j;
  }
  return tags;
}
