#!/usr/bin/env node
import { createHash } from "node:crypto";
import { readFileSync, renameSync, writeFileSync } from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import {
  ANNOTATOR_NAME,
  ANNOTATOR_VERSION,
  annotate,
  documentToJson,
} from "./annotate.js";
import { Replacement, resolveCoref } from "./coref.js";
import { RawArticleSchema } from "./types.js";

const EXIT_OK = 0;
const EXIT_USAGE = 1;
const EXIT_PARTIAL = 2;

function sha256(path: string): string {
  return createHash("sha256").update(readFileSync(path)).digest("hex");
}

function writeAtomic(path: string, content: string): void {
  const tmp = `${path}.tmp`;
  writeFileSync(tmp, content, "utf8");
  renameSync(tmp, path);
}

function writeManifest(
  outPath: string,
  inPath: string,
  coref: boolean,
  shard: string | undefined,
): void {
  const manifest = {
    tool: "newsattrib-preproc",
    version: ANNOTATOR_VERSION,
    command: "annotate",
    config: {
      coref,
      shard: shard ?? null,
      models: {
        annotator: `${ANNOTATOR_NAME}@${ANNOTATOR_VERSION}`,
        coref: coref ? `${ANNOTATOR_NAME}-coref@${ANNOTATOR_VERSION}` : null,
      },
    },
    inputs: { [inPath]: sha256(inPath) },
    created_utc: new Date().toISOString(),
  };
  writeAtomic(`${outPath}.manifest.json`, JSON.stringify(manifest, null, 2) + "\n");
}

function parseShard(spec: string): [number, number] {
  const m = spec.match(/^(\d+)\/(\d+)$/);
  if (!m) throw new Error(`shard must look like k/n, got ${spec}`);
  const [k, n] = [Number(m[1]), Number(m[2])];
  if (n < 1 || k < 0 || k >= n) throw new Error(`shard ${spec} out of range`);
  return [k, n];
}

interface AnnotateArgs {
  in: string;
  out: string;
  coref: boolean;
  log?: string;
  shard?: string;
  manifest: boolean;
}

function runAnnotate(args: AnnotateArgs): number {
  const [shardIdx, shardCount] = args.shard ? parseShard(args.shard) : [0, 1];
  const lines = readFileSync(args.in, "utf8").split("\n");
  const outLines: string[] = [];
  const logEntries: Replacement[] = [];
  const errors: string[] = [];
  let record = -1;
  lines.forEach((line, lineNo) => {
    if (line.trim() === "") return;
    record += 1;
    if (record % shardCount !== shardIdx) return;
    let doc;
    try {
      const obj = JSON.parse(line);
      const raw = RawArticleSchema.parse(obj);
      doc = annotate(raw);
    } catch (err) {
      errors.push(`${args.in}:${lineNo + 1}: ${(err as Error).message}`);
      return;
    }
    if (args.coref) {
      try {
        const resolved = resolveCoref(doc);
        doc = resolved.doc;
        logEntries.push(...resolved.log);
      } catch (err) {
        // resolver failure: pass the unresolved record through
        process.stderr.write(
          `warning: coref failed for ${doc.doc_id}, passing through: ` +
            `${(err as Error).message}\n`,
        );
      }
    }
    outLines.push(documentToJson(doc));
  });

  writeAtomic(args.out, outLines.map((l) => l + "\n").join(""));
  if (args.coref && args.log)
    writeAtomic(
      args.log,
      logEntries.map((e) => JSON.stringify(e) + "\n").join(""),
    );
  if (args.manifest) writeManifest(args.out, args.in, args.coref, args.shard);

  if (errors.length > 0) {
    for (const e of errors.slice(0, 20)) process.stderr.write(e + "\n");
    process.stderr.write(
      `${errors.length} record(s) skipped, ${outLines.length} written\n`,
    );
    return EXIT_PARTIAL;
  }
  return EXIT_OK;
}

export function main(argv: string[]): number {
  let code = EXIT_OK;
  yargs(argv)
    .scriptName("newsattrib-preproc")
    .command(
      "annotate",
      "annotate raw articles into document records",
      (y) =>
        y
          .option("in", { type: "string", demandOption: true, describe: "raw article JSONL" })
          .option("out", { type: "string", demandOption: true, describe: "document record JSONL" })
          .option("coref", { type: "boolean", default: false, describe: "replace pronouns with their antecedents" })
          .option("log", { type: "string", describe: "replacement log JSONL (with --coref)" })
          .option("shard", { type: "string", describe: "process shard k/n of the input records" })
          .option("manifest", { type: "boolean", default: true, describe: "write <out>.manifest.json" }),
      (args) => {
        try {
          code = runAnnotate(args as unknown as AnnotateArgs);
        } catch (err) {
          process.stderr.write(`${(err as Error).message}\n`);
          code = EXIT_USAGE;
        }
      },
    )
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
      process.stderr.write(`${msg ?? err?.message}\n`);
      code = EXIT_USAGE;
    })
    .exitProcess(false)
    .parseSync();
  return code;
}

const isDirectRun =
  process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");
if (isDirectRun) process.exit(main(hideBin(process.argv)));
