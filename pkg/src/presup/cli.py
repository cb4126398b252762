"""Command-line entry point: infer, eval, morph and stats subcommands."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from collections import Counter
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .corpus import parse_gold, preprocess, read_dataset
from .errors import FormatError, ParseError
from .evaluation import (
    HeadlineEval,
    MatchConfig,
    MatchMode,
    match,
    normalize,
    report_dict,
    score_by_trigger,
    score_headline,
    trigger_table,
)
from .ingest import ParsedHeadline, parse_conllu, parse_stanford_json
from .lexicon import default_lexicon, load_lexicon
from .morphology import VerbForm, conjugate
from .rules import (
    DEFAULT_RULES,
    EngineConfig,
    Inference,
    LEXICAL_CLASSES,
    RULE_IDS,
    infer_all,
)

LEXICON_DIR_ENV = "PRESUP_LEXICON_DIR"
LEXICON_FILENAME = "trigger_lexicon.tsv"

_FORM_NAMES = {
    "base": VerbForm.BASE,
    "past": VerbForm.PAST,
    "participle": VerbForm.PAST_PARTICIPLE,
    "past-participle": VerbForm.PAST_PARTICIPLE,
    "gerund": VerbForm.GERUND,
    "present3sg": VerbForm.PRESENT_3SG,
    "3sg": VerbForm.PRESENT_3SG,
}


def _read_config_file(path: str) -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(Path(path).read_text("utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise FormatError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _expand_rules(spec: str) -> tuple[str, ...]:
    out: list[str] = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if item == "lexical":
            out.extend(f"lexical.{c}" for c in LEXICAL_CLASSES)
        elif item == "all":
            out.extend(RULE_IDS)
        else:
            out.append(item)
    deduped = tuple(dict.fromkeys(out))
    unknown = [r for r in deduped if r not in RULE_IDS]
    if unknown:
        raise FormatError(f"unknown rule ids: {', '.join(unknown)}")
    return deduped


def _resolve_lexicon(explicit: str | None):
    if explicit:
        return load_lexicon(explicit)
    env_dir = os.environ.get(LEXICON_DIR_ENV)
    if env_dir:
        candidate = Path(env_dir) / LEXICON_FILENAME
        if candidate.exists():
            return load_lexicon(candidate)
    return default_lexicon()


def _build_engine_config(args) -> EngineConfig:
    values = _read_config_file(args.config) if getattr(args, "config", None) else {}
    rules_spec = args.rules or values.get("rules")
    rules = _expand_rules(rules_spec) if rules_spec else DEFAULT_RULES
    if getattr(args, "relaxed_nmod", False) and "nmod_relaxed" not in rules:
        rules = rules + ("nmod_relaxed",)
    verb_pattern = values.get("verb_pattern", "relaxed")
    if verb_pattern not in ("strict", "relaxed"):
        raise FormatError(f"verb_pattern must be strict or relaxed, got {verb_pattern!r}")
    if getattr(args, "strict_verbs", False):
        verb_pattern = "strict"
    return EngineConfig(
        rules=rules,
        lexicon=_resolve_lexicon(args.lexicon or values.get("lexicon")),
        strict_verbs=verb_pattern == "strict",
        compound_mode=values.get("compound_mode", "both"),
    )


def load_parses(path: str) -> list[ParsedHeadline]:
    """Read a sidecar parse file: CoNLL-U by extension, else Stanford JSON
    (single object, array of objects, or JSON Lines)."""
    text = Path(path).read_text("utf-8")
    if Path(path).suffix in (".conllu", ".conll"):
        return parse_conllu(text)
    stripped = text.strip()
    if not stripped:
        return []
    if stripped.startswith("["):
        payload = json.loads(stripped)
        return [parse_stanford_json(obj) for obj in payload]
    try:
        payload = json.loads(stripped)
    except json.JSONDecodeError:
        payload = None
    if isinstance(payload, dict):
        return [parse_stanford_json(payload)]
    parses = []
    for line in stripped.splitlines():
        if line.strip():
            parses.append(parse_stanford_json(line))
    return parses


def _spans_for_tokens(h: ParsedHeadline, preprocessed) -> tuple[tuple[int, int], ...]:
    # Word offsets line up with token indices only when the parse tokenized
    # the cleaned text one word per token.
    if len(preprocessed.cleaned.split()) != len(h.tokens):
        return ()
    return tuple(
        (s.start_word + 1, s.end_word + 1) for s in preprocessed.quoted_spans
    )


def cmd_infer(args) -> int:
    try:
        cfg = _build_engine_config(args)
        records = read_dataset(Path(args.dataset).read_text("utf-8"))
        parses = load_parses(args.parses)
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: file not found", file=sys.stderr)
        return 1
    except (FormatError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    by_id = {}
    for h in parses:
        by_id.setdefault(h.headline_id, h)
    skipped: list[dict] = []
    lines: list[str] = []
    headline_counts: list[dict] = []
    trigger_counts: Counter = Counter()
    for i, record in enumerate(records, start=1):
        h = by_id.get(str(i))
        if h is None and i - 1 < len(parses):
            h = parses[i - 1]
        if h is None:
            skipped.append({"line": i, "headline": record.text, "reason": "no parse"})
            continue
        p = preprocess(record.text)
        h = replace(
            h,
            headline_id=str(i),
            raw_text=record.text,
            quoted_spans=_spans_for_tokens(h, p),
        )
        inferences = infer_all(h, p, cfg)
        trigger_counts.update(inf.trigger for inf in inferences)
        headline_counts.append({"line": i, "inferences": len(inferences)})
        lines.append(
            json.dumps(
                {
                    "headline": record.text,
                    "inferences": [inf.to_dict() for inf in inferences],
                },
                ensure_ascii=False,
            )
        )
    out_path = Path(args.out)
    out_path.write_text("".join(line + "\n" for line in lines), "utf-8")
    manifest = {
        "tool": "presup",
        "version": __version__,
        "dataset": str(args.dataset),
        "parses": str(args.parses),
        "config_hash": hashlib.sha256(cfg.fingerprint().encode("utf-8")).hexdigest(),
        "rules": list(cfg.rules),
        "headlines": len(records),
        "inferred": len(lines),
        "inference_counts": dict(sorted(trigger_counts.items())),
        "headline_counts": headline_counts,
        "skipped": skipped,
        "generated_at": datetime.now(timezone.utc).isoformat(),
    }
    Path(str(out_path) + ".manifest.json").write_text(
        json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", "utf-8"
    )
    for entry in skipped:
        print(
            f"warning: line {entry['line']}: no parse for {entry['headline']!r}",
            file=sys.stderr,
        )
    if skipped and args.strict:
        print(f"error: {len(skipped)} headline(s) without a parse", file=sys.stderr)
        return 1
    return 0


def _read_inference_file(path: str) -> dict[str, list[Inference]]:
    computed: dict[str, list[Inference]] = {}
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        computed[normalize(obj["headline"])] = [
            Inference.from_dict(d) for d in obj.get("inferences", ())
        ]
    return computed


def _read_labels_file(path: str) -> dict[str, dict]:
    labels: dict[str, dict] = {}
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        labels[normalize(obj["headline"])] = {
            "incorrect": frozenset(obj.get("incorrect", ())),
            "matched": tuple(tuple(pair) for pair in obj.get("matched", ())),
        }
    return labels


def cmd_eval(args) -> int:
    try:
        gold = parse_gold(Path(args.gold).read_text("utf-8"))
        computed_by_headline = _read_inference_file(args.inferences)
        labels = _read_labels_file(args.labels) if args.labels else None
        cfg = MatchConfig(
            mode=MatchMode(args.match_mode),
            jaccard_threshold=args.jaccard_threshold,
        )
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: file not found", file=sys.stderr)
        return 1
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    headline_scores = []
    items = []
    for annotation in gold:
        key = normalize(annotation.headline)
        computed = computed_by_headline.get(key)
        if computed is None:
            print(
                f"warning: no computed inferences for {annotation.headline!r}; "
                "counting all gold as missing",
                file=sys.stderr,
            )
            computed = []
        entry = labels.get(key, {"incorrect": frozenset(), "matched": ()}) if labels is not None else None
        judged = entry["matched"] if entry else ()
        incorrect = entry["incorrect"] if entry is not None else None
        alignment = match(computed, annotation, cfg, judged_pairs=judged)
        headline_scores.append(
            score_headline(alignment, incorrect, headline=annotation.headline)
        )
        items.append(
            HeadlineEval(
                headline=annotation.headline,
                computed=tuple(computed),
                gold=annotation,
                alignment=alignment,
                incorrect_labels=incorrect,
            )
        )
    trigger_scores = score_by_trigger(items)
    report = report_dict(headline_scores, trigger_scores)
    if args.out:
        Path(args.out).write_text(
            json.dumps(report, indent=2, ensure_ascii=False) + "\n", "utf-8"
        )
    if args.table:
        Path(args.table).write_text(trigger_table(trigger_scores), "utf-8")
    for s in headline_scores:
        print(
            f"{s.headline}\n  gold={s.gold_count} computed={s.computed_count} "
            f"matched={s.matched_count} correct={s.percent_correct:.1f}% "
            f"incorrect={s.percent_incorrect:.1f}%"
        )
    if trigger_scores:
        print()
        print(trigger_table(trigger_scores), end="")
    return 0


def cmd_morph(args) -> int:
    print(conjugate(args.verb.lower(), _FORM_NAMES[args.form]))
    return 0


def cmd_stats(args) -> int:
    try:
        records = read_dataset(Path(args.dataset).read_text("utf-8"))
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: file not found", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"headlines: {len(records)}")
    for source, count in sorted(Counter(r.source for r in records).items()):
        print(f"  {source or '(unknown)'}: {count}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="presup",
        description="Compute context-independent inferences from dependency-parsed "
        "news headlines and score them against gold annotations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_infer = sub.add_parser("infer", help="run the rules over a dataset")
    p_infer.add_argument("--dataset", required=True, help="headline dataset file")
    p_infer.add_argument("--parses", required=True, help="CoNLL-U or Stanford JSON parses")
    p_infer.add_argument("--config", help="key=value engine config file")
    p_infer.add_argument("--out", required=True, help="output JSONL path")
    p_infer.add_argument("--strict", action="store_true", help="fail if any headline lacks a parse")
    p_infer.add_argument("--rules", help="comma-separated rule ids to enable")
    p_infer.add_argument("--relaxed-nmod", action="store_true", dest="relaxed_nmod",
                         help="also emit 'X has Y' for every noun-noun nmod")
    p_infer.add_argument("--strict-verbs", action="store_true", dest="strict_verbs",
                         help="exclude the bare VB tag from verb matching")
    p_infer.add_argument("--lexicon", help="trigger lexicon TSV path")
    p_infer.set_defaults(func=cmd_infer)

    p_eval = sub.add_parser("eval", help="score computed inferences against gold")
    p_eval.add_argument("--inferences", required=True, help="JSONL from 'infer'")
    p_eval.add_argument("--gold", required=True, help="gold annotation file")
    p_eval.add_argument("--labels", help="JSONL with human incorrect/matched judgments")
    p_eval.add_argument("--match-mode", choices=[m.value for m in MatchMode],
                        default=MatchMode.EXACT_NORMALIZED.value)
    p_eval.add_argument("--jaccard-threshold", type=float, default=0.6)
    p_eval.add_argument("--out", help="report JSON path")
    p_eval.add_argument("--table", help="per-trigger TSV table path")
    p_eval.set_defaults(func=cmd_eval)

    p_morph = sub.add_parser("morph", help="conjugate a verb")
    p_morph.add_argument("verb")
    p_morph.add_argument("form", choices=sorted(_FORM_NAMES))
    p_morph.set_defaults(func=cmd_morph)

    p_stats = sub.add_parser("stats", help="dataset headline/source counts")
    p_stats.add_argument("--dataset", required=True)
    p_stats.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
