"""The inference rules: trigger matching over a parsed headline plus string
realization of the licensed inferences.

Each rule is a pure function from a ParsedHeadline (and, where needed, the
preprocessed text or the trigger lexicon) to a list of Inference values.
``infer_all`` runs the configured rules in registry order and deduplicates
the rendered texts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .corpus import PreprocessedHeadline
from .ingest import (
    ParsedHeadline,
    Token,
    edge_for_dependent,
    edges_governed_by,
    edges_with,
    is_verb_tag,
    nouns_of,
    verbs_of,
)
from .lexicon import TriggerLexicon, default_lexicon
from .morphology import VerbForm, conjugate, lemma


class InferenceKind(Enum):
    PRESUPPOSITION = ">>"
    CONVENTIONAL_IMPLICATURE = "~="
    EXPLICIT_TRIPLE = "triple"


@dataclass(frozen=True)
class Inference:
    kind: InferenceKind
    text: str
    trigger: str
    span: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "text": self.text,
            "trigger": self.trigger,
            "span": list(self.span),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "Inference":
        return cls(
            kind=InferenceKind(obj["kind"]),
            text=obj["text"],
            trigger=obj.get("trigger", ""),
            span=tuple(obj.get("span", ())),
        )


LEXICAL_CLASSES = (
    "iterative",
    "change_of_state",
    "factive",
    "implicative",
    "judging",
)

RULE_IDS = (
    "future",
    "but",
    "again",
    "further",
    "compound",
    "past",
    "nmod_of",
    "nmod_relaxed",
    *(f"lexical.{c}" for c in LEXICAL_CLASSES),
    "temporal",
    "question",
    "quotes",
    "triple",
)

# The relaxed any-nmod rule over-generates, so it is opt-in.
DEFAULT_RULES = tuple(r for r in RULE_IDS if r != "nmod_relaxed")

COMPOUND_MODES = ("both", "can_be", "can_have")
_COMPOUND_CONNECTOR = {
    "both": "can be/can have",
    "can_be": "can be",
    "can_have": "can have",
}


@dataclass(frozen=True)
class EngineConfig:
    rules: tuple[str, ...] = DEFAULT_RULES
    lexicon: TriggerLexicon = field(default_factory=default_lexicon)
    strict_verbs: bool = False
    compound_mode: str = "both"

    def __post_init__(self):
        unknown = [r for r in self.rules if r not in RULE_IDS]
        if unknown:
            raise ValueError(f"unknown rule ids: {unknown}")
        if self.compound_mode not in COMPOUND_MODES:
            raise ValueError(f"unknown compound mode {self.compound_mode!r}")
        object.__setattr__(self, "rules", tuple(self.rules))

    def fingerprint(self) -> str:
        return "\n".join(
            [
                "rules=" + ",".join(self.rules),
                f"strict_verbs={self.strict_verbs}",
                f"compound_mode={self.compound_mode}",
                self.lexicon.fingerprint(),
            ]
        )


_SUBJ_MODS = ("compound", "amod", "nummod")
_OBJ_MODS = ("compound", "amod", "nummod", "det")
_PARTICLE_DEPS = ("compound:prt", "prt")
_COMP_DEPS = ("xcomp", "ccomp")

_SPEECH_VERBS = frozenset({"say", "tell", "claim", "add", "warn", "announce"})
_CESSATION_VERBS = frozenset({"stop", "cease", "finish", "quit", "halt"})

_WH_SUBSTITUTE = {
    "what": "something",
    "who": "someone",
    "where": "somewhere",
    "how": "somehow",
    "when": "sometime",
}
_AUX_SURFACES = frozenset(
    """
    is are was were am do does did can could will would shall should may
    might must has have had
    """.split()
)


def _merge(*spans: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    out: set[int] = set()
    for s in spans:
        out.update(s)
    return tuple(sorted(out))


def _phrase(
    h: ParsedHeadline, head: int, mods: tuple[str, ...] = _SUBJ_MODS
) -> tuple[str, tuple[int, ...]]:
    """Head token with its flat premodifiers, in surface order."""
    idxs = sorted(
        [head]
        + [e.dependent for e in h.edges if e.governor == head and e.dep in mods]
    )
    return " ".join(h.token_at(i).surface for i in idxs), tuple(idxs)


def _verb_surface(
    h: ParsedHeadline, verb: int, with_aux: bool = False
) -> tuple[str, tuple[int, ...]]:
    """Verb as it appears in the headline, with particles (and optionally its
    auxiliaries/negator) in surface order."""
    parts = [(verb, h.token_at(verb).surface)]
    for e in edges_governed_by(h, verb):
        if e.dep in _PARTICLE_DEPS:
            parts.append((e.dependent, e.dependent_gloss))
        elif with_aux and (
            e.dep in ("aux", "auxpass", "neg")
            or (e.dep == "advmod" and e.dependent_gloss.lower() == "not")
        ):
            parts.append((e.dependent, e.dependent_gloss))
    parts.sort()
    return " ".join(s for _, s in parts), tuple(i for i, _ in parts)


def _particle_tail(h: ParsedHeadline, verb: int) -> tuple[str, tuple[int, ...]]:
    parts = sorted(
        (e.dependent, e.dependent_gloss)
        for e in edges_governed_by(h, verb)
        if e.dep in _PARTICLE_DEPS
    )
    return " ".join(s for _, s in parts), tuple(i for i, _ in parts)


def _nmod_attachments(
    h: ParsedHeadline, head: int
) -> list[tuple[str, str, tuple[int, ...]]]:
    """(preposition, phrase, span) for each case-marked nmod under ``head``."""
    out = []
    for e in edges_governed_by(h, head, "nmod"):
        cases = edges_governed_by(h, e.dependent, "case")
        if not cases:
            continue
        phrase, span = _phrase(h, e.dependent)
        out.append(
            (cases[0].dependent_gloss, phrase, _merge(span, (cases[0].dependent,)))
        )
    return out


def _object_tail(h: ParsedHeadline, verb: int) -> tuple[str, tuple[int, ...]]:
    """Direct object plus case-marked nominal attachments of a verb."""
    parts: list[str] = []
    span: tuple[int, ...] = ()
    dobjs = edges_governed_by(h, verb, "dobj")
    if dobjs:
        p, s = _phrase(h, dobjs[0].dependent, _OBJ_MODS)
        parts.append(p)
        span = _merge(span, s)
    for case_word, p, s in _nmod_attachments(h, verb):
        parts.append(f"{case_word} {p}")
        span = _merge(span, s)
    return " ".join(parts), span


def _is_negated(h: ParsedHeadline, index: int) -> bool:
    for e in edges_governed_by(h, index):
        if e.dep == "neg":
            return True
        if e.dep == "advmod" and e.dependent_gloss.lower() == "not":
            return True
    return False


def _first(edges):
    return edges[0] if edges else None


def rule_future(h: ParsedHeadline) -> list[Inference]:
    """aux 'will' plus a co-governed direct object: the event is still ahead."""
    out = []
    for d in edges_with(h, "aux", dependent_gloss="will"):
        verb = h.token_at(d.governor)
        participle = conjugate(lemma(verb.surface, verb.pos), VerbForm.PAST_PARTICIPLE)
        for nd in edges_governed_by(h, d.governor, "dobj"):
            text = f"{nd.dependent_gloss} is not yet {participle}"
            out.append(
                Inference(
                    InferenceKind.PRESUPPOSITION,
                    text,
                    "future",
                    _merge((d.dependent, d.governor, nd.dependent)),
                )
            )
    return out


def rule_but(h: ParsedHeadline) -> list[Inference]:
    """conj:but carries the contrast implicature: the first conjunct raised an
    expectation about the second."""
    out = []
    for d in edges_with(h, "conj:but"):
        dep = h.token_at(d.dependent)
        gerund = conjugate(lemma(dep.surface, dep.pos), VerbForm.GERUND)
        expecting = "was not expecting" if _is_negated(h, d.dependent) else "was expecting"
        text = f"being {d.governor_gloss} {expecting} {gerund}"
        out.append(
            Inference(
                InferenceKind.CONVENTIONAL_IMPLICATURE,
                text,
                "but",
                _merge((d.governor, d.dependent)),
            )
        )
    return out


def rule_again(h: ParsedHeadline) -> list[Inference]:
    """advmod 'again' on a verb with a subject: it happened before."""
    out = []
    for d in edges_with(h, "advmod", dependent_gloss="again"):
        subj = _first(edges_governed_by(h, d.governor, "nsubj"))
        if subj is None:
            continue
        verb = h.token_at(d.governor)
        subj_p, subj_s = _phrase(h, subj.dependent)
        participle = conjugate(lemma(verb.surface, verb.pos), VerbForm.PAST_PARTICIPLE)
        obj_p, obj_s = "", ()
        dobj = _first(edges_governed_by(h, d.governor, "dobj"))
        if dobj is not None:
            obj_p, obj_s = _phrase(h, dobj.dependent)
        text = " ".join(filter(None, [subj_p, "has", participle, obj_p, "before"]))
        out.append(
            Inference(
                InferenceKind.PRESUPPOSITION,
                text,
                "again",
                _merge(subj_s, obj_s, (d.governor, d.dependent)),
            )
        )
    return out


def rule_further(h: ParsedHeadline, strict_verbs: bool = False) -> list[Inference]:
    """advmod 'further' on a verb: the subject is already in that state."""
    out = []
    for d in edges_with(h, "advmod", dependent_gloss="further"):
        if d.governor == 0:
            continue
        verb = h.token_at(d.governor)
        if not is_verb_tag(verb.pos, strict_verbs):
            continue
        subj = _first(edges_governed_by(h, d.governor, "nsubj"))
        if subj is not None:
            subj_gloss, subj_index = subj.dependent_gloss, subj.dependent
        else:
            preceding = [t for t in nouns_of(h) if t.index < verb.index]
            if not preceding:
                continue
            subj_gloss, subj_index = preceding[-1].surface, preceding[-1].index
        text = f"{subj_gloss} is already {lemma(verb.surface, verb.pos)}"
        out.append(
            Inference(
                InferenceKind.PRESUPPOSITION,
                text,
                "further",
                _merge((subj_index, d.governor, d.dependent)),
            )
        )
    return out


def rule_noun_compound(h: ParsedHeadline, mode: str = "both") -> list[Inference]:
    """Noun compound N1 N2: N1 can be / can have N2."""
    connector = _COMPOUND_CONNECTOR[mode]
    out = []
    for e in edges_with(h, "compound"):
        if e.governor == 0:
            continue
        if not (
            h.token_at(e.governor).pos.startswith("N")
            and h.token_at(e.dependent).pos.startswith("N")
        ):
            continue
        text = f"{e.dependent_gloss} {connector} {e.governor_gloss}"
        out.append(
            Inference(
                InferenceKind.PRESUPPOSITION,
                text,
                "compound",
                _merge((e.governor, e.dependent)),
            )
        )
    return out


def rule_past_tense(h: ParsedHeadline) -> list[Inference]:
    """Main-clause simple past: the event already happened."""
    out = []
    for t in h.tokens:
        if t.pos != "VBD":
            continue
        incoming = edge_for_dependent(h, t.index)
        if incoming is not None and incoming.dep in ("advcl", "ccomp"):
            continue
        subj = _first(edges_governed_by(h, t.index, "nsubj"))
        if subj is None:
            continue
        participle = conjugate(lemma(t.surface, t.pos), VerbForm.PAST_PARTICIPLE)
        prt, prt_s = _particle_tail(h, t.index)
        obj_p, obj_s = "", ()
        dobj = _first(edges_governed_by(h, t.index, "dobj"))
        if dobj is not None:
            obj_p, obj_s = _phrase(h, dobj.dependent, _OBJ_MODS)
        text = " ".join(
            filter(None, [subj.dependent_gloss, "has", participle, prt, obj_p])
        )
        out.append(
            Inference(
                InferenceKind.PRESUPPOSITION,
                text,
                "past",
                _merge((subj.dependent, t.index), prt_s, obj_s),
            )
        )
    return out


def rule_nmod_of(h: ParsedHeadline) -> list[Inference]:
    """nmod with case 'of': the dependent has the governor."""
    out = []
    for e in edges_with(h, "nmod"):
        cases = [
            c
            for c in edges_governed_by(h, e.dependent, "case")
            if c.dependent_gloss.lower() == "of"
        ]
        if not cases:
            continue
        text = f"{e.dependent_gloss} has {e.governor_gloss}"
        out.append(
            Inference(
                InferenceKind.PRESUPPOSITION,
                text,
                "nmod_of",
                _merge((e.governor, e.dependent, cases[0].dependent)),
            )
        )
    return out


def rule_nmod_relaxed(h: ParsedHeadline) -> list[Inference]:
    """Any noun-governed nmod between nouns: the dependent has the governor.

    Over-generates by design; ships disabled by default.
    """
    out = []
    for e in edges_with(h, "nmod"):
        if e.governor == 0:
            continue
        if not (
            h.token_at(e.governor).pos.startswith("N")
            and h.token_at(e.dependent).pos.startswith("N")
        ):
            continue
        text = f"{e.dependent_gloss} has {e.governor_gloss}"
        out.append(
            Inference(
                InferenceKind.PRESUPPOSITION,
                text,
                "nmod_relaxed",
                _merge((e.governor, e.dependent)),
            )
        )
    return out


def _class_matches(
    h: ParsedHeadline, lex: TriggerLexicon, class_id: str, verb: Token, vlemma: str
) -> bool:
    for entry in lex.words(class_id):
        words = entry.split()
        head = words[0]
        if vlemma not in {head, lemma(head, "VBD"), lemma(head, "VBZ")}:
            continue
        if len(words) == 1:
            return True
        following = [
            t.surface.lower()
            for t in h.tokens[verb.index : verb.index + len(words) - 1]
        ]
        if following == words[1:]:
            return True
    return False


def _complement(h: ParsedHeadline, verb: int):
    return _first([e for e in h.edges if e.governor == verb and e.dep in _COMP_DEPS])


def _render_lexical(
    h: ParsedHeadline, class_id: str, verb: Token, vlemma: str
) -> Inference | None:
    subj = _first(edges_governed_by(h, verb.index, "nsubj"))
    comp = _complement(h, verb.index)
    dobj = _first(edges_governed_by(h, verb.index, "dobj"))
    trigger = f"lexical.{class_id}"

    def presup(text: str, span) -> Inference:
        return Inference(InferenceKind.PRESUPPOSITION, text, trigger, span)

    if class_id in ("factive", "implicative"):
        if comp is not None:
            comp_tok = h.token_at(comp.dependent)
            comp_subj = _first(edges_governed_by(h, comp.dependent, "nsubj")) or subj
            if comp_subj is None:
                return None
            subj_p, subj_s = _phrase(h, comp_subj.dependent)
            past = conjugate(lemma(comp_tok.surface, comp_tok.pos), VerbForm.PAST)
            tail, tail_s = _object_tail(h, comp.dependent)
            text = " ".join(filter(None, [subj_p, past, tail]))
            return presup(text, _merge(subj_s, tail_s, (verb.index, comp.dependent)))
        if class_id == "factive" and dobj is not None:
            obj_p, obj_s = _phrase(h, dobj.dependent, _OBJ_MODS)
            return presup(f"There exists {obj_p}", _merge(obj_s, (verb.index,)))
        return None

    if class_id == "change_of_state":
        if comp is None or subj is None:
            return None
        comp_tok = h.token_at(comp.dependent)
        subj_p, subj_s = _phrase(h, subj.dependent)
        aux = "had been" if vlemma in _CESSATION_VERBS else "was"
        gerund = conjugate(lemma(comp_tok.surface, comp_tok.pos), VerbForm.GERUND)
        tail, tail_s = _object_tail(h, comp.dependent)
        text = " ".join(filter(None, [subj_p, aux, gerund, tail]))
        return presup(text, _merge(subj_s, tail_s, (verb.index, comp.dependent)))

    if class_id == "judging":
        if subj is None or dobj is None:
            return None
        subj_p, subj_s = _phrase(h, subj.dependent)
        obj_p, obj_s = _phrase(h, dobj.dependent, _OBJ_MODS)
        text = f"{subj_p} thinks that {obj_p} is bad"
        return presup(text, _merge(subj_s, obj_s, (verb.index,)))

    if class_id == "iterative":
        attachments = _nmod_attachments(h, verb.index)
        if subj is not None and comp is not None:
            comp_tok = h.token_at(comp.dependent)
            subj_p, subj_s = _phrase(h, subj.dependent)
            participle = conjugate(
                lemma(comp_tok.surface, comp_tok.pos), VerbForm.PAST_PARTICIPLE
            )
            tail, tail_s = _object_tail(h, comp.dependent)
            text = " ".join(filter(None, [subj_p, "had", participle, tail, "previously"]))
            return presup(text, _merge(subj_s, tail_s, (verb.index, comp.dependent)))
        if subj is not None and attachments:
            _, phrase, span = attachments[0]
            subj_p, subj_s = _phrase(h, subj.dependent)
            text = f"{subj_p} had been in {phrase} previously"
            return presup(text, _merge(subj_s, span, (verb.index,)))
        if subj is not None:
            subj_p, subj_s = _phrase(h, subj.dependent)
            return presup(f"{subj_p} has happened before", _merge(subj_s, (verb.index,)))
        if dobj is not None:
            obj_p, obj_s = _phrase(h, dobj.dependent)
            return presup(f"{obj_p} has happened before", _merge(obj_s, (verb.index,)))
        if attachments:
            _, phrase, span = attachments[0]
            return presup(f"{phrase} has happened before", _merge(span, (verb.index,)))
        return None

    return None


def rule_lexical(
    h: ParsedHeadline,
    lex: TriggerLexicon,
    classes: tuple[str, ...] = LEXICAL_CLASSES,
    strict_verbs: bool = False,
) -> list[Inference]:
    """Lexicon-driven triggers: a headline verb whose lemma belongs to a class
    licenses that class's template over its complement/objects."""
    out = []
    for class_id in classes:
        for verb in verbs_of(h, strict_verbs):
            vlemma = lemma(verb.surface, verb.pos)
            if not _class_matches(h, lex, class_id, verb, vlemma):
                continue
            inf = _render_lexical(h, class_id, verb, vlemma)
            if inf is not None:
                out.append(inf)
    return out


def rule_temporal(h: ParsedHeadline, lex: TriggerLexicon) -> list[Inference]:
    """Temporal case/mark words presuppose the embedded thing existed/happened."""
    temporal = lex.words("temporal")
    out = []
    for e in h.edges:
        if e.dep not in ("case", "mark"):
            continue
        if e.dependent_gloss.lower() not in temporal or e.governor == 0:
            continue
        gov = h.token_at(e.governor)
        if is_verb_tag(gov.pos):
            subj = _first(edges_governed_by(h, gov.index, "nsubj"))
            if subj is None:
                continue
            subj_p, subj_s = _phrase(h, subj.dependent)
            past = conjugate(lemma(gov.surface, gov.pos), VerbForm.PAST)
            tail, tail_s = _object_tail(h, gov.index)
            text = " ".join(filter(None, [subj_p, past, tail]))
            span = _merge(subj_s, tail_s, (gov.index, e.dependent))
        else:
            phrase, p_span = _phrase(h, gov.index)
            text = f"There was {phrase}"
            span = _merge(p_span, (e.dependent,))
        out.append(Inference(InferenceKind.PRESUPPOSITION, text, "temporal", span))
    return out


def _undo_inversion(h: ParsedHeadline, substitute: str, words: list[str]) -> list[str]:
    aux_edge = edge_for_dependent(h, 2)
    if aux_edge is None:
        return [substitute] + words
    main = aux_edge.governor
    subj = _first(edges_governed_by(h, main, "nsubj"))
    if subj is None or subj.dependent <= 2:
        return [substitute] + words
    head = subj.dependent
    surfaces = [t.surface for t in h.tokens]
    return surfaces[2:head] + [words[0]] + surfaces[head:] + [substitute]


def rule_question(h: ParsedHeadline) -> list[Inference]:
    """Wh-questions presuppose the indefinite counterpart; yes/no questions
    presuppose nothing."""
    if "?" not in h.raw_text or not h.tokens:
        return []
    words = [t.surface for t in h.tokens]
    first = words[0].lower()
    wh = None
    contracted = False
    if first in _WH_SUBSTITUTE:
        wh = first
    elif first.endswith("'s") and first[:-2] in _WH_SUBSTITUTE:
        wh, contracted = first[:-2], True
    if wh is None:
        return []
    substitute = _WH_SUBSTITUTE[wh]
    rest = words[1:]
    if contracted:
        rendered = [substitute, "is"] + rest
    elif rest and rest[0].lower() in ("'s", "’s"):
        rendered = [substitute, "is"] + rest[1:]
    elif rest and rest[0].lower() in _AUX_SURFACES:
        rendered = _undo_inversion(h, substitute, rest)
    else:
        rendered = [substitute] + rest
    return [
        Inference(
            InferenceKind.PRESUPPOSITION,
            " ".join(rendered),
            "question",
            tuple(t.index for t in h.tokens),
        )
    ]


def rule_quotes(
    h: ParsedHeadline, p: PreprocessedHeadline, strict_verbs: bool = False
) -> list[Inference]:
    """A quoted span longer than two words means something was said."""
    out = []
    for span in p.quoted_spans:
        if span.word_count <= 2:
            continue
        token_span = tuple(
            i
            for i in range(span.start_word + 1, span.end_word + 2)
            if 1 <= i <= len(h.tokens)
        )
        speaker = None
        for verb in verbs_of(h, strict_verbs):
            if lemma(verb.surface, verb.pos) not in _SPEECH_VERBS:
                continue
            subj = _first(edges_governed_by(h, verb.index, "nsubj"))
            if subj is not None:
                speaker = (verb, subj)
                break
        if speaker is not None:
            verb, subj = speaker
            subj_p, subj_s = _phrase(h, subj.dependent)
            text = f'{subj_p} says "{span.text}"'
            out.append(
                Inference(
                    InferenceKind.PRESUPPOSITION,
                    text,
                    "quotes",
                    _merge(subj_s, token_span, (verb.index,)),
                )
            )
        else:
            fallback = token_span or tuple(t.index for t in h.tokens)
            out.append(
                Inference(InferenceKind.PRESUPPOSITION, "something is said", "quotes", fallback)
            )
    return out


def extract_triplets(h: ParsedHeadline, strict_verbs: bool = False) -> list[Inference]:
    """Subject-verb-object statements read directly off the parse: the bare
    S-V-dobj triple plus one extension per case-marked nominal attachment."""
    out = []
    for verb in verbs_of(h, strict_verbs):
        subj = _first(edges_governed_by(h, verb.index, "nsubj"))
        if subj is None:
            continue
        subj_p, subj_s = _phrase(h, subj.dependent)
        verb_p, verb_s = _verb_surface(h, verb.index, with_aux=True)
        obj_p, obj_s = "", ()
        dobj = _first(edges_governed_by(h, verb.index, "dobj"))
        if dobj is not None:
            obj_p, obj_s = _phrase(h, dobj.dependent, _OBJ_MODS)
            out.append(
                Inference(
                    InferenceKind.EXPLICIT_TRIPLE,
                    f"{subj_p} {verb_p} {obj_p}",
                    "triple",
                    _merge(subj_s, verb_s, obj_s),
                )
            )
        attachments = _nmod_attachments(h, verb.index)
        if dobj is not None:
            attachments += _nmod_attachments(h, dobj.dependent)
        for case_word, phrase, span in attachments:
            stem = " ".join(filter(None, [subj_p, verb_p, obj_p]))
            out.append(
                Inference(
                    InferenceKind.EXPLICIT_TRIPLE,
                    f"{stem} {case_word} {phrase}",
                    "triple",
                    _merge(subj_s, verb_s, obj_s, span),
                )
            )
    return out


def _run_rule(
    rule_id: str, h: ParsedHeadline, p: PreprocessedHeadline, cfg: EngineConfig
) -> list[Inference]:
    if rule_id == "future":
        return rule_future(h)
    if rule_id == "but":
        return rule_but(h)
    if rule_id == "again":
        return rule_again(h)
    if rule_id == "further":
        return rule_further(h, cfg.strict_verbs)
    if rule_id == "compound":
        return rule_noun_compound(h, cfg.compound_mode)
    if rule_id == "past":
        return rule_past_tense(h)
    if rule_id == "nmod_of":
        return rule_nmod_of(h)
    if rule_id == "nmod_relaxed":
        return rule_nmod_relaxed(h)
    if rule_id.startswith("lexical."):
        return rule_lexical(
            h, cfg.lexicon, (rule_id.split(".", 1)[1],), cfg.strict_verbs
        )
    if rule_id == "temporal":
        return rule_temporal(h, cfg.lexicon)
    if rule_id == "question":
        return rule_question(h)
    if rule_id == "quotes":
        return rule_quotes(h, p, cfg.strict_verbs)
    if rule_id == "triple":
        return extract_triplets(h, cfg.strict_verbs)
    raise ValueError(f"unknown rule id {rule_id!r}")


def generate_all(
    h: ParsedHeadline, p: PreprocessedHeadline, cfg: EngineConfig
) -> list[Inference]:
    """All enabled rules' outputs in registry order, before deduplication."""
    out = []
    for rule_id in RULE_IDS:
        if rule_id not in cfg.rules:
            continue
        produced = _run_rule(rule_id, h, p, cfg)
        produced.sort(key=lambda inf: inf.span)
        out.extend(produced)
    return out


def infer_all(
    h: ParsedHeadline, p: PreprocessedHeadline, cfg: EngineConfig
) -> list[Inference]:
    """Deduplicated inference list; the first rule to render a text keeps it."""
    seen: set[str] = set()
    out = []
    for inf in generate_all(h, p, cfg):
        key = inf.text.lower()
        if key in seen:
            continue
        seen.add(key)
        out.append(inf)
    return out
