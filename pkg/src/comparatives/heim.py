"""The direct (er_than) analysis, kept as a runnable contrast.

``er_than(<a, b>)(f)`` is true iff ``f(a) > f(b)``, where ``f`` maps an
individual to the maximal degree satisfying a property built from the
whole matrix clause.  Building cardinal determiners into that property is
what makes the analysis go wrong for "at least two faster cars than".
"""
from __future__ import annotations

from dataclasses import dataclass

from .grammar import NotSupported, Tree, classify_construction
from .lf import complement_np, lower_topic
from .models import Model, Undefined, evaluate
from .semantics import SemLexicon, default_semlexicon
from .termio import ATTR, EDT
from .terms import D, E, Const, Exists, Greater, Iota, Lam, Term, Var, apply_fa, conj, normalize


@dataclass(frozen=True)
class HeimForm:
    correlate: Term | None  # None when the correlate is bound by ``frame``
    complement: Term
    degree_property: Term   # lam x . iota d . ...
    tag: str
    frame: Term | None = None  # lam y . <matrix with y>, for the narrow attributive case

    def as_term(self) -> Term:
        f = self.degree_property
        if self.frame is None:
            return normalize(Greater(f(self.correlate), f(self.complement)))
        y = Var("y", E)
        return normalize(Exists(y, conj(Greater(f(y), f(self.complement)), self.frame(y))))

    def __str__(self):
        a = self.correlate.name if self.correlate is not None else "y"
        core = f"er_than(<{a}, {self.complement.name}>)({self.degree_property})"
        return core if self.frame is None else f"exists y:e . {core} & {normalize(self.frame(Var('y', E)))}"


def _name(np: Tree, sem: SemLexicon) -> Const:
    if np.word is None:
        raise NotSupported("direct analysis needs referential correlate and complement")
    return Const(sem.entry(np).key, E)


def build_heim(tree: Tree, sem: SemLexicon | None = None) -> HeimForm:
    sem = sem or default_semlexicon()
    tree = lower_topic(tree)
    tag = classify_construction(tree)
    if tree.label != "IP" or tag not in ("PRED", "WRA", "NRA"):
        raise NotSupported(f"no direct-analysis structure for {tag}")
    subj, verb, _ = [c for c in tree.children if c.label not in ("Adv", "Punct")]
    x, d = Var("x", E), Var("d", D)
    host = tree.find_tag(tag)
    correlate = _name(subj, sem)
    complement = _name(complement_np(host), sem)
    if tag == "PRED":
        a = sem.entry(host.children[0].children[0])
        body = Const(a.key, EDT)(x, d)
        return HeimForm(correlate, complement, Lam(x, Iota(d, body)), tag)
    det, nbar = host.children[0].children
    a, n = (sem.entry(k) for k in nbar.children)
    y = Var("y", E)
    restrictor = Lam(y, Const(a.key, ATTR)(sem[n.key], y, d))
    verb_rel = sem[sem.entry(verb).key]
    if tag == "NRA":
        if sem.entry(det).det_class != "indefinite":
            raise NotSupported("direct narrow analysis is only defined for the indefinite article")
        prop = Lam(x, Iota(d, restrictor(x)))
        return HeimForm(None, complement, normalize(prop), tag, normalize(Lam(y, verb_rel(correlate, y))))
    # the whole matrix, determiner included, goes inside the degree description
    body = apply_fa(apply_fa(sem[sem.entry(det).key], restrictor), Lam(y, verb_rel(x, y)))
    return HeimForm(correlate, complement, normalize(Lam(x, Iota(d, body))), tag)


def eval_heim(form: HeimForm, model: Model):
    """True/False, or None when a maximal degree does not exist."""
    if form.frame is None:
        try:
            return evaluate(form.as_term(), model)
        except Undefined:
            return None
    # narrow attributive: a witness without a maximal degree just fails
    f, b = form.degree_property, form.complement
    try:
        evaluate(Greater(f(b), f(b)), model)
    except Undefined:
        return None
    probe = Const("_y", E)
    for ent in model.entities:
        local = Model(model.entities, model.sorts, model.relations, model.measures,
                      {**model.constants, probe.name: ent}, model.name)
        try:
            if evaluate(normalize(conj(Greater(f(probe), f(b)), form.frame(probe))), local):
                return True
        except Undefined:
            continue
    return False
