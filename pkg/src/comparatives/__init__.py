"""Compositional semantics for English comparative constructions.

Parse a sentence, build its logical form, compose readings in a typed
lambda calculus and evaluate them in finite models::

    >>> from comparatives import analyze, evaluate, load_fixture
    >>> [r.scope for a in analyze("George owns a faster car than Bill") for r in a.readings]
    ['WH>NP', 'direct']
"""
from .grammar import NoParse, NotSupported, UnknownWord, default_lexicon, parse
from .heim import HeimForm, build_heim, eval_heim
from .lf import judge, judge_sentence, reconstruct
from .models import Model, accessibility, degree_grid, evaluate, load_fixture
from .pipeline import analyze
from .semantics import Reading, compose_nra, compose_pred, compose_wra, readings, resolve_p0
from .termio import pretty, read_term, show

__all__ = [
    "HeimForm", "Model", "NoParse", "NotSupported", "Reading", "UnknownWord", "accessibility",
    "analyze", "build_heim", "compose_nra", "compose_pred", "compose_wra", "default_lexicon",
    "degree_grid", "eval_heim", "evaluate", "judge", "judge_sentence", "load_fixture", "parse",
    "pretty", "read_term", "readings", "reconstruct", "resolve_p0", "show",
]
