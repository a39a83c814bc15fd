"""Command-line entry points.

Subcommands: attribute (run a rule backend or compose model predictions),
evaluate (score attributions against gold labels), stats (corpus sourcing
roll-up), build-probes (ablation and version-pair probe datasets), audit
(probe confound check), serve-check (endpoint health).

Every command that writes an output file also writes
``<out>.manifest.json`` (atomically) recording the command, resolved
configuration, input digests, seed, and tool version. Exit codes: 0
success, 1 invalid usage or configuration, 2 finished but skipped some
records (counts go to stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from . import __version__
from .analytics import corpus_stats, render_stats
from .corpus_io import (
    RecordError,
    read_attributions,
    read_documents,
    read_predictions,
    read_version_pairs,
    write_attributions,
    write_version_pairs,
)
from .evaluation import evaluate_documents, gold_attribution, tabulate
from .lexicons import LexiconError, load_lexicon
from .model import StructuralError
from .pipeline import (
    ConfigurationError,
    EndpointConfig,
    EndpointError,
    PipelineConfig,
    PipelineMode,
    build_retrieval_prompt,
    check_endpoint,
    compose_pipeline,
    query_endpoint,
)
from .probes import (
    NewseditsCandidate,
    SkipReason,
    audit_confounds,
    balance_newsedits,
    build_ablation_pair,
    build_newsedits_example,
    build_version_pairs,
    read_probes,
    write_probes,
)
from .rules import (
    MissingAnnotationError,
    canonicalize_entities,
    match_patterns,
    r1_attribute,
    r2_attribute,
)

log = logging.getLogger("newsattrib")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARTIAL = 2

BACKENDS = ("r1", "r2", "patterns", "pipeline", "pipeline+nones")


# --- shared plumbing -----------------------------------------------------------


def default_lexicon_dir() -> Path:
    return Path(str(resources.files("newsattrib").joinpath("data")))


def load_lexicons(directory: Path):
    verbs = load_lexicon(directory / "speaking_verbs.txt", "verbs")
    signifiers = load_lexicon(directory / "signifiers.txt", "signifiers")
    patterns = load_lexicon(directory / "patterns.txt", "patterns")
    return verbs, signifiers, patterns


def _sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(
    out_path: str | Path,
    command: str,
    args: argparse.Namespace,
    inputs: list[str | Path],
    seed: int | None = None,
) -> Path:
    """Atomic sidecar manifest describing how an output file was produced."""
    config = {
        k: (os.fspath(v) if isinstance(v, Path) else v)
        for k, v in sorted(vars(args).items())
        if k != "func" and not callable(v)
    }
    manifest = {
        "tool": "newsattrib",
        "version": __version__,
        "command": command,
        "config": config,
        "inputs": {
            os.fspath(p): _sha256_file(p) for p in inputs if Path(p).is_file()
        },
        "seed": seed,
        "created_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    path = Path(os.fspath(out_path) + ".manifest.json")
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    os.replace(tmp, path)
    return path


def _collect_errors():
    errors: list[RecordError] = []
    return errors, errors.append


def _report_partial(errors: list, what: str) -> int:
    if not errors:
        return EXIT_OK
    print(f"skipped {len(errors)} {what}:", file=sys.stderr)
    for err in errors[:20]:
        print(f"  {err}", file=sys.stderr)
    if len(errors) > 20:
        print(f"  ... and {len(errors) - 20} more", file=sys.stderr)
    return EXIT_PARTIAL


def _load_attr_lookup(args, docs):
    """(doc_id, version_id) -> DocAttribution from --attr or gold labels."""
    errors, sink = _collect_errors()
    if getattr(args, "use_gold", False):
        lookup = {(d.doc_id, d.version_id): gold_attribution(d) for d in docs}
    else:
        lookup = {
            (a.doc_id, a.version_id): a
            for a in read_attributions(args.attr, on_error=sink)
        }
    return lookup, errors


# --- attribute -----------------------------------------------------------------


def _load_few_shot(path: str) -> tuple[tuple[str, str], ...]:
    """JSON array of [sentence, answer] pairs (or objects with those keys)."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise ConfigurationError("few-shot file must be a JSON array")
    out = []
    for item in data:
        if isinstance(item, dict):
            out.append((str(item["sentence"]), str(item["source"])))
        else:
            sent, src = item
            out.append((str(sent), str(src)))
    return tuple(out)


def _pipeline_config(args) -> PipelineConfig:
    endpoint = None
    if args.endpoint_url:
        endpoint = EndpointConfig(
            url=args.endpoint_url,
            token_env=args.token_env,
            timeout=args.timeout,
            retries=args.retries,
        )
    mode = (
        PipelineMode.PIPELINE_PLUS_NONES
        if args.backend == "pipeline+nones"
        else PipelineMode.PIPELINE
    )
    return PipelineConfig(
        detection_threshold=args.threshold,
        mode=mode,
        endpoint=endpoint,
        prefix_examples=_load_few_shot(args.few_shot) if args.few_shot else (),
        max_prompt_chars=args.max_prompt_chars,
    )


def _predictions_by_doc(path: str):
    """Split a prediction file into detection and retrieval lookups."""
    errors, sink = _collect_errors()
    detection: dict[tuple[str, int], dict[int, float]] = {}
    retrieval: dict[tuple[str, int], dict[int, str]] = {}
    for pred in read_predictions(path, on_error=sink):
        key = (pred.doc_id, pred.version_id)
        if pred.detector_score is not None:
            detection.setdefault(key, {})[pred.sentence_index] = pred.detector_score
        if pred.retrieved_source is not None:
            retrieval.setdefault(key, {})[pred.sentence_index] = pred.retrieved_source
    return detection, retrieval, errors


def _run_pipeline_doc(doc, signifiers, detection, retrieval, config):
    sources, _ = canonicalize_entities(doc, signifiers)
    if config.endpoint is not None:
        pending = [
            i
            for i, score in sorted(detection.items())
            if score >= config.detection_threshold and i not in retrieval
        ]
        if pending:
            prompts = [build_retrieval_prompt(doc, i, config) for i in pending]
            completions, errors = query_endpoint(prompts, config.endpoint)
            for note in errors:
                log.warning("%s: %s", doc.doc_id, note)
            retrieval = dict(retrieval)
            for i, completion in zip(pending, completions):
                if completion is not None:
                    retrieval[i] = completion
    result = compose_pipeline(
        doc,
        sources,
        detection,
        retrieval,
        config,
        provenance="endpoint" if config.endpoint else "file",
    )
    return result.attribution


def cmd_attribute(args) -> int:
    verbs, signifiers, patterns = load_lexicons(args.lexicons)
    errors, sink = _collect_errors()
    docs = list(read_documents(args.input, on_error=sink))
    if not docs:
        print("no valid documents in input", file=sys.stderr)
        return EXIT_USAGE

    if args.backend in ("pipeline", "pipeline+nones"):
        config = _pipeline_config(args)
        if args.predictions:
            detection, retrieval, pred_errors = _predictions_by_doc(args.predictions)
            errors.extend(pred_errors)
        else:
            detection, retrieval = {}, {}

        def run_one(doc):
            key = (doc.doc_id, doc.version_id)
            return _run_pipeline_doc(
                doc,
                signifiers,
                detection.get(key, {}),
                retrieval.get(key, {}),
                config,
            )
    else:

        def run_one(doc):
            if args.backend == "r1":
                return r1_attribute(doc, verbs, signifiers)[0]
            if args.backend == "r2":
                return r2_attribute(
                    doc,
                    verbs,
                    signifiers,
                    include_passive_subjects=args.include_passive_subjects,
                )[0]
            return match_patterns(doc, patterns, signifiers)[0]

    def safe(doc):
        try:
            return run_one(doc)
        except MissingAnnotationError as exc:
            errors.append(f"{doc.doc_id} v{doc.version_id}: {exc}")
            return None

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(safe, docs))
    else:
        results = [safe(d) for d in docs]

    attrs = [a for a in results if a is not None]
    n = write_attributions(attrs, args.output)
    write_manifest(
        args.output,
        "attribute",
        args,
        [args.input, args.predictions] if args.predictions else [args.input],
    )
    print(f"wrote {n} attributions to {args.output}")
    return _report_partial(errors, "records")


# --- evaluate -------------------------------------------------------------------


def cmd_evaluate(args) -> int:
    errors, sink = _collect_errors()
    docs = list(read_documents(args.gold, on_error=sink))
    if not docs:
        print("no valid gold documents", file=sys.stderr)
        return EXIT_USAGE
    attrs = {
        (a.doc_id, a.version_id): a
        for a in read_attributions(args.pred, on_error=sink)
    }
    doc_keys = {(d.doc_id, d.version_id) for d in docs}
    orphans = [k for k in attrs if k not in doc_keys]
    for key in orphans:
        errors.append(
            RecordError(args.pred, 0, f"attribution for unknown document {key}")
        )
    pairs = [(d, attrs.get((d.doc_id, d.version_id))) for d in docs]
    report = evaluate_documents(
        pairs, view=args.view, strict_passive=args.strict_passive
    )
    print(tabulate({args.name: report}, view=args.view))
    if report.skipped_no_gold:
        print(
            f"note: {report.skipped_no_gold} sentences had no gold label",
            file=sys.stderr,
        )
    if args.out:
        Path(args.out).write_text(
            json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8"
        )
        write_manifest(args.out, "evaluate", args, [args.gold, args.pred])
    return _report_partial(errors, "records")


# --- stats ----------------------------------------------------------------------


def cmd_stats(args) -> int:
    errors, sink = _collect_errors()
    docs = list(read_documents(args.input, on_error=sink))
    if not docs:
        print("no valid documents in input", file=sys.stderr)
        return EXIT_USAGE
    lookup, attr_errors = _load_attr_lookup(args, docs)
    errors.extend(attr_errors)
    pairs = []
    for doc in docs:
        attr = lookup.get((doc.doc_id, doc.version_id))
        if attr is None:
            errors.append(
                RecordError(
                    args.attr or args.input,
                    0,
                    f"no attribution for {doc.doc_id} v{doc.version_id}",
                )
            )
            continue
        pairs.append((doc, attr))
    if not pairs:
        print("no documents with attributions", file=sys.stderr)
        return EXIT_USAGE
    stats = corpus_stats(pairs)
    print(render_stats(stats))
    if args.out:
        Path(args.out).write_text(
            json.dumps(stats.to_dict(include_per_doc=args.per_doc), indent=2) + "\n",
            encoding="utf-8",
        )
        inputs = [args.input] + ([args.attr] if args.attr else [])
        write_manifest(args.out, "stats", args, inputs)
    return _report_partial(errors, "records")


# --- build-probes ---------------------------------------------------------------


def _cmd_probes_ablation(args, docs, lookup, errors) -> int:
    examples = []
    skips: list[SkipReason] = []
    for doc in docs:
        attr = lookup.get((doc.doc_id, doc.version_id))
        if attr is None:
            errors.append(
                RecordError(
                    args.attr or args.input,
                    0,
                    f"no attribution for {doc.doc_id} v{doc.version_id}",
                )
            )
            continue
        result = build_ablation_pair(
            doc,
            attr,
            args.difficulty,
            args.seed,
            second_rule=args.second_rule,
            with_sa=not args.no_sa,
            control_negatives=args.control_negatives,
        )
        if isinstance(result, SkipReason):
            skips.append(result)
            continue
        examples.extend(result)
    n = write_probes(examples, args.output)
    print(f"wrote {n} probe examples ({n // 2} pairs) to {args.output}")
    if skips:
        by_reason: dict[str, int] = {}
        for s in skips:
            by_reason[s.reason] = by_reason.get(s.reason, 0) + 1
        summary = ", ".join(f"{k}={v}" for k, v in sorted(by_reason.items()))
        print(f"skipped {len(skips)} documents ({summary})", file=sys.stderr)
    return EXIT_OK


def _cmd_probes_newsedits(args, docs, lookup, errors) -> int:
    doc_lookup = {(d.doc_id, d.version_id): d for d in docs}
    if args.pairs:
        pair_errors, sink = _collect_errors()
        pairs = list(read_version_pairs(args.pairs, on_error=sink))
        errors.extend(pair_errors)
    else:
        pairs = build_version_pairs(docs)
    candidates = []
    for pair in pairs:
        doc_t = doc_lookup.get((pair.doc_id, pair.version_t))
        attr_t = lookup.get((pair.doc_id, pair.version_t))
        attr_t1 = lookup.get((pair.doc_id, pair.version_t_plus_1))
        if doc_t is None or attr_t is None or attr_t1 is None:
            errors.append(
                RecordError(
                    args.input,
                    0,
                    f"incomplete version pair {pair.doc_id} "
                    f"v{pair.version_t}->v{pair.version_t_plus_1}",
                )
            )
            continue
        example = build_newsedits_example(
            doc_t, attr_t, attr_t1, pair, with_sa=not args.no_sa
        )
        candidates.append(
            NewseditsCandidate(
                example=example,
                n_sentences=doc_t.n_sentences,
                total_edits=pair.added + pair.deleted + pair.edited,
            )
        )
    if args.no_balance:
        examples = [c.example for c in candidates]
        warnings = []
    else:
        examples, warnings = balance_newsedits(
            candidates,
            args.seed,
            n_length_bins=args.length_bins,
            n_edit_bins=args.edit_bins,
        )
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    n = write_probes(examples, args.output)
    kept = sum(1 for e in examples if not e.excluded)
    print(f"wrote {n} probe examples ({kept} kept after balancing) to {args.output}")
    if args.emit_pairs:
        write_version_pairs(pairs, args.emit_pairs)
        print(f"wrote {len(pairs)} version pairs to {args.emit_pairs}")
    return EXIT_OK


def cmd_build_probes(args) -> int:
    errors, sink = _collect_errors()
    docs = list(read_documents(args.input, on_error=sink))
    if not docs:
        print("no valid documents in input", file=sys.stderr)
        return EXIT_USAGE
    lookup, attr_errors = _load_attr_lookup(args, docs)
    errors.extend(attr_errors)
    if args.probe == "ablation":
        rc = _cmd_probes_ablation(args, docs, lookup, errors)
    else:
        rc = _cmd_probes_newsedits(args, docs, lookup, errors)
    if rc != EXIT_OK:
        return rc
    inputs = [args.input] + ([args.attr] if args.attr else [])
    if getattr(args, "pairs", None):
        inputs.append(args.pairs)
    write_manifest(args.output, f"build-probes:{args.probe}", args, inputs, args.seed)
    return _report_partial(errors, "records")


# --- audit ----------------------------------------------------------------------


def cmd_audit(args) -> int:
    verbs, signifiers, _ = load_lexicons(args.lexicons)
    errors, sink = _collect_errors()
    examples = list(read_probes(args.probes, on_error=sink))
    docs = {
        (d.doc_id, d.version_id): d
        for d in read_documents(args.corpus, on_error=sink)
    }
    if not examples:
        print("no valid probe examples", file=sys.stderr)
        return EXIT_USAGE
    report = audit_confounds(
        examples, docs, verbs, signifiers, include_excluded=args.include_excluded
    )
    print(report.render())
    if report.n_skipped:
        errors.append(
            RecordError(
                args.probes, 0, f"{report.n_skipped} examples missing origin document"
            )
        )
    if args.out:
        Path(args.out).write_text(
            json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8"
        )
        write_manifest(args.out, "audit", args, [args.probes, args.corpus])
    return _report_partial(errors, "records")


# --- serve-check ----------------------------------------------------------------


def cmd_serve_check(args) -> int:
    config = EndpointConfig(
        url=args.endpoint_url,
        token_env=args.token_env,
        timeout=args.timeout,
        retries=args.retries,
    )
    ok = check_endpoint(config)
    print("endpoint ok" if ok else "endpoint unhealthy")
    return EXIT_OK if ok else EXIT_USAGE


# --- parser ----------------------------------------------------------------------


def _add_lexicon_arg(parser):
    parser.add_argument(
        "--lexicons",
        type=Path,
        default=default_lexicon_dir(),
        help="directory with speaking_verbs.txt, signifiers.txt, patterns.txt",
    )


def _add_attr_source(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--attr", help="attribution JSONL to pair with the corpus")
    group.add_argument(
        "--use-gold",
        action="store_true",
        help="derive attributions from the corpus gold labels",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newsattrib",
        description="Attribute news sentences to their informational sources.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("attribute", help="run an attribution backend over a corpus")
    p.add_argument("-i", "--input", required=True, help="document JSONL")
    p.add_argument("-o", "--output", required=True, help="attribution JSONL out")
    p.add_argument("--backend", choices=BACKENDS, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.add_argument(
        "--include-passive-subjects",
        action="store_true",
        help="let passive subjects satisfy the governance rule",
    )
    p.add_argument("--predictions", help="model prediction JSONL (pipeline backends)")
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--endpoint-url", help="retrieval generation endpoint")
    p.add_argument("--token-env", default="NEWSATTRIB_ENDPOINT_TOKEN")
    p.add_argument("--timeout", type=float, default=30.0)
    p.add_argument("--retries", type=int, default=3)
    p.add_argument("--few-shot", help="JSON file of [sentence, source] pairs")
    p.add_argument("--max-prompt-chars", type=int)
    _add_lexicon_arg(p)
    p.set_defaults(func=cmd_attribute)

    p = sub.add_parser("evaluate", help="score attributions against gold labels")
    p.add_argument("--gold", required=True, help="gold document JSONL")
    p.add_argument("--pred", required=True, help="attribution JSONL")
    p.add_argument("--view", default="table4", help="channel grouping view")
    p.add_argument("--strict-passive", action="store_true")
    p.add_argument("--name", default="system", help="row label in the table")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="corpus-level sourcing statistics")
    p.add_argument("-i", "--input", required=True, help="document JSONL")
    _add_attr_source(p)
    p.add_argument("--out", help="write the JSON roll-up here")
    p.add_argument("--per-doc", action="store_true", help="include per-doc stats")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("build-probes", help="construct probe datasets")
    p.add_argument("--probe", choices=("ablation", "newsedits"), required=True)
    p.add_argument("-i", "--input", required=True, help="document JSONL")
    p.add_argument("-o", "--output", required=True, help="probe JSONL out")
    _add_attr_source(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--difficulty", choices=("top", "second", "any"), default="top")
    p.add_argument("--second-rule", choices=("top3", "share10"), default="top3")
    p.add_argument("--no-sa", action="store_true", help="skip the +SA rendering")
    p.add_argument(
        "--control-negatives",
        action="store_true",
        help="eval-only negatives keep the full document",
    )
    p.add_argument("--pairs", help="version-pair JSONL (else derived from the corpus)")
    p.add_argument("--emit-pairs", help="write derived version pairs here")
    p.add_argument("--length-bins", type=int, default=10)
    p.add_argument("--edit-bins", type=int, default=3)
    p.add_argument("--no-balance", action="store_true")
    p.set_defaults(func=cmd_build_probes)

    p = sub.add_parser("audit", help="confound audit of a probe dataset")
    p.add_argument("--probes", required=True, help="probe JSONL")
    p.add_argument("--corpus", required=True, help="origin document JSONL")
    p.add_argument("--include-excluded", action="store_true")
    p.add_argument("--out", help="write the JSON report here")
    _add_lexicon_arg(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("serve-check", help="probe the generation endpoint")
    p.add_argument("--endpoint-url", required=True)
    p.add_argument("--token-env", default="NEWSATTRIB_ENDPOINT_TOKEN")
    p.add_argument("--timeout", type=float, default=10.0)
    p.add_argument("--retries", type=int, default=0)
    p.set_defaults(func=cmd_serve_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    # argparse exits 2 on bad usage; remap so 2 stays reserved for
    # partial results.
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (
        ConfigurationError,
        LexiconError,
        StructuralError,
        RecordError,
        EndpointError,
        FileNotFoundError,
        NotADirectoryError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
