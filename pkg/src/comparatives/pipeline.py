"""Sentence-level orchestration: parse, judge, compose."""
from __future__ import annotations

from dataclasses import dataclass

from .grammar import Lexicon, NotSupported, Tree, classify_construction, default_lexicon, parse
from .lf import Judgment, judge
from .semantics import CompositionError, QuantifiedComplement, SemLexicon, readings

_SEMS: dict = {}


def _sem_for(lexicon: Lexicon) -> SemLexicon:
    key = id(lexicon)
    if key not in _SEMS:
        _SEMS[key] = SemLexicon(lexicon)
    return _SEMS[key]


@dataclass(frozen=True)
class Analysis:
    tree: Tree
    tag: str
    judgment: Judgment
    readings: tuple = ()
    skipped: str = ""  # why no readings were composed


def analyze(sentence, lexicon: Lexicon | None = None, force: bool = False) -> list:
    """One :class:`Analysis` per parse, in construction-tag order.

    Parses judged bad are not composed unless ``force`` is set.
    """
    lexicon = lexicon or default_lexicon()
    sem = _sem_for(lexicon)
    out = []
    for tree in parse(sentence, lexicon):
        tag = classify_construction(tree)
        j = judge(tree, lexicon)
        if j.verdict == "bad" and not force:
            out.append(Analysis(tree, tag, j, skipped="judged bad; not composed"))
            continue
        try:
            out.append(Analysis(tree, tag, j, tuple(readings(tree, sem))))
        except (QuantifiedComplement, NotSupported, CompositionError) as exc:
            out.append(Analysis(tree, tag, j, skipped=f"{type(exc).__name__}: {exc}"))
    return out
