"""Trigger lexicon: word/phrase lists per lexical trigger class."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

CLASS_IDS = (
    "iterative",
    "change_of_state",
    "factive",
    "implicative",
    "judging",
    "temporal",
)


@dataclass(frozen=True)
class TriggerLexicon:
    entries: dict[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        filled = {cid: frozenset() for cid in CLASS_IDS}
        for cid, words in self.entries.items():
            filled[cid] = frozenset(w.lower() for w in words)
        object.__setattr__(self, "entries", filled)

    def words(self, class_id: str) -> frozenset[str]:
        return self.entries[class_id]

    def fingerprint(self) -> str:
        return "\n".join(
            f"{cid}\t{word}"
            for cid in CLASS_IDS
            for word in sorted(self.entries[cid])
        )


def parse_lexicon(document: str) -> TriggerLexicon:
    """Read a 'class<TAB>entry' TSV; '#' comment and blank lines are skipped."""
    entries: dict[str, set[str]] = {cid: set() for cid in CLASS_IDS}
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise ValueError(f"lexicon line {lineno}: expected 'class<TAB>entry'")
        cid, entry = line.split("\t", 1)
        cid, entry = cid.strip(), entry.strip()
        if cid not in entries:
            raise ValueError(f"lexicon line {lineno}: unknown class {cid!r}")
        if entry:
            entries[cid].add(entry.lower())
    return TriggerLexicon(entries={c: frozenset(w) for c, w in entries.items()})


def load_lexicon(path: str | Path) -> TriggerLexicon:
    return parse_lexicon(Path(path).read_text("utf-8"))


@lru_cache(maxsize=1)
def default_lexicon() -> TriggerLexicon:
    """The bundled lexicon."""
    text = resources.files(__package__).joinpath("data/trigger_lexicon.tsv").read_text("utf-8")
    return parse_lexicon(text)
