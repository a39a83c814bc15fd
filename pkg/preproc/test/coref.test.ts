import { Buffer } from "node:buffer";
import { describe, expect, it } from "vitest";

import { annotate } from "../src/annotate.js";
import { resolveCoref } from "../src/coref.js";
import { validateDocument } from "../src/types.js";

function article(text: string) {
  return annotate({ doc_id: "c-1", version_id: 0, text });
}

describe("resolveCoref", () => {
  it("rewrites a subject pronoun with the preceding mention", () => {
    const { doc, log } = resolveCoref(
      article("Lamothe resigned. He said the budget would pass."),
    );
    expect(doc.sentences[1].text).toBe(
      "Lamothe said the budget would pass.",
    );
    expect(log).toHaveLength(1);
    expect(log[0]).toMatchObject({
      sentence_index: 1,
      pronoun: "He",
      replacement: "Lamothe",
      char_start: 0,
      char_end: Buffer.byteLength("Lamothe", "utf8"),
    });
  });

  it("rewrites possessives with a trailing 's", () => {
    const { doc } = resolveCoref(
      article("Maria Alvarez arrived early. Her statement drew applause."),
    );
    expect(doc.sentences[1].text).toBe(
      "Maria Alvarez's statement drew applause.",
    );
  });

  it("resolves within a sentence, left to right", () => {
    const { doc } = resolveCoref(
      article("Maria Alvarez said she wrote the report herself."),
    );
    // "she" follows the mention in the same sentence
    expect(doc.sentences[0].text).toContain("Maria Alvarez wrote");
  });

  it("leaves pronouns before any mention untouched", () => {
    const original = article("He spoke first. Maria Alvarez replied.");
    const { doc, log } = resolveCoref(original);
    expect(doc.sentences[0].text).toBe("He spoke first.");
    expect(log).toHaveLength(0);
    expect(doc).toBe(original);
  });

  it("returns the identical record when nothing changes", () => {
    const original = article("Officials warned residents about delays.");
    const { doc, log } = resolveCoref(original);
    expect(doc).toBe(original);
    expect(log).toEqual([]);
  });

  it("leaves no pronoun tokens inside replaced spans and stays valid", () => {
    const { doc, log } = resolveCoref(
      article(
        "Maria Alvarez spoke at city hall. " +
          'She said "the budget will pass" after the vote. ' +
          "Officials praised her remarks. " +
          "They expect a final vote this week.",
      ),
    );
    expect(validateDocument(doc)).toEqual([]);
    expect(log.length).toBeGreaterThanOrEqual(2);
    for (const rec of log) {
      const sent = doc.sentences[rec.sentence_index];
      const inside = sent.tokens.filter(
        (t) => t.char_start < rec.char_end && rec.char_start < t.char_end,
      );
      expect(inside.length).toBeGreaterThan(0);
      for (const tok of inside) expect(tok.upos).not.toBe("PRON");
      const encoded = Buffer.from(sent.text, "utf8");
      expect(
        encoded.subarray(rec.char_start, rec.char_end).toString("utf8"),
      ).toBe(rec.replacement);
    }
  });

  it("recomputes offsets after multiple replacements in one sentence", () => {
    const { doc } = resolveCoref(
      article("Omar Reyes met the board. He said they trusted him."),
    );
    expect(validateDocument(doc)).toEqual([]);
    expect(doc.sentences[1].text.startsWith("Omar Reyes said")).toBe(true);
  });
});
