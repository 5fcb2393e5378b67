"""Semantic lexicon and composition.

Composition walks an LF (WRA) or surface tree (NRA, PRED, PLAIN) and
combines meanings by functional application (FA), generalized functional
application (GFA) and quantifying-in (QI).  Every step is recorded, so a
:class:`Reading` can be replayed through :mod:`comparatives.terms`.

The comparative complement's WH operator carries both the anaphoric
relation ``P0`` and the universal degree quantifier; ``P0`` is resolved at
the end against the comparative's N' (``fast'(car')``) or, for predicative
and post-nominal uses, the bare adjective (``rich'``).  Two alternatives
that split this content over separate empty positions (an anaphoric object
NP plus a degree operator, or a raised anaphoric NP) give the same
complement meaning but need extra syntax, so they are not modelled.

The degree quantifier is universal.  A maximality operator (``d' >
max{d | ...}``) would agree wherever the complement set is non-empty.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .grammar import (
    LexEntry, NotSupported, Tree, classify_construction, default_lexicon, render,
)
from .lf import (
    DIRECT, NP_WIDE, WH_WIDE, LfTree, complement_np, enumerate_scopes, lower_topic, reconstruct,
)
from .termio import ATTR, EDT, read_term
from .terms import (
    E, ET, App, Const, Lam, Term, Var, alpha_equal, apply_fa, apply_gfa, constants,
    free_vars, gfa_split, normalize, pull_existentials, quantify_in, rename_const, type_of,
    NoGfaSplit,
)

P0 = Const("P0", EDT)


class CompositionError(TypeError):
    pass


class QuantifiedComplement(ValueError):
    pass


class NoAntecedent(ValueError):
    pass


# ---------------------------------------------------------------- lexicon

_DETS = {
    "indefinite": "lam P:<e,t> . lam Q:<e,t> . exists x:e . P x & Q x",
    "npi": "lam P:<e,t> . lam Q:<e,t> . exists x:e . P x & Q x",
    "universal": "lam P:<e,t> . lam Q:<e,t> . forall x:e . P x -> Q x",
    # Russellian: at most one P, and some P is Q
    "definite": "lam P:<e,t> . lam Q:<e,t> . (atmost 1 x:e . P x) & (exists x:e . P x & Q x)",
}

ER = read_term("lam D:<d,t> . lam P:<<d,t>,t> . exists d':d . P (lam d:d . d' > d) & D d'")
# positive degree: existential closure, no contextual standard
POS = read_term("lam D:<d,t> . exists d:d . D d")
COPULA = read_term("lam P:<e,t> . lam x:e . P x")
INTERSECT = read_term("lam P:<e,t> . lam R:<e,t> . lam x:e . P x & R x")
OR = read_term("lam X:<<e,t>,t> . lam Y:<<e,t>,t> . lam Q:<e,t> . X Q | Y Q")
WH_WRA = read_term("lam Q:<e,t> . lam D':<d,t> . forall d:d . (exists y:e . P0 y d & Q y) -> D' d")
WH_DIRECT = read_term("lam P:<<e,t>,t> . lam D:<d,t> . forall d:d . P (lam x:e . P0 x d) -> D d")


class SemLexicon:
    """Semantic key -> closed, well-typed term."""

    def __init__(self, lexicon=None):
        self.lexicon = lexicon or default_lexicon()
        self.terms = {"er": ER, "pos": POS, "is": COPULA, "or": OR,
                      "wh-wra": WH_WRA, "wh-direct": WH_DIRECT}
        for e in self.lexicon.entries:
            t = self._term(e)
            if t is not None:
                self.terms.setdefault(e.key, t)

    def _term(self, e: LexEntry):
        if e.category == "ProperName":
            return read_term(f"lam Q:<e,t> . Q {e.key}", {e.key: E})
        if e.category in ("Det", "NPI"):
            return read_term(_DETS[e.det_class])
        if e.category == "CardDet":
            return read_term(f"lam P:<e,t> . lam Q:<e,t> . {e.get('kind')} {e.get('n')} x:e . P x & Q x")
        if e.category == "N":
            return Const(e.key, ET)
        if e.category == "V":
            return read_term(f"lam x:e . lam y:e . {e.key} x y", {e.key: ET.__class__(E, ET)})
        if e.category == "A":
            return self.attributive(e.key)
        return None

    def __getitem__(self, key) -> Term:
        return self.terms[key]

    def attributive(self, key: str) -> Term:
        return read_term(f"lam d:d . lam Q:<e,t> . lam x:e . {key} Q x d", {key: ATTR})

    def predicative(self, key: str) -> Term:
        return read_term(f"lam d:d . lam x:e . {key} x d", {key: EDT})

    def entry(self, node: Tree) -> LexEntry:
        return self.lexicon.lookup(node.word)


_SEM = None


def default_semlexicon() -> SemLexicon:
    global _SEM
    if _SEM is None:
        _SEM = SemLexicon()
    return _SEM


# ---------------------------------------------------------------- readings

@dataclass(frozen=True)
class Step:
    node: str
    mode: str  # FA | GFA | QI | P0
    fn: Term
    arg: Term
    result: Term
    target: Var | None = None


@dataclass(frozen=True)
class Reading:
    form: Term
    scope: str
    tag: str
    antecedent: Term | None
    complement: Term | None
    steps: tuple
    tree: object = None

    def __str__(self):
        return str(self.form)


def combine(mode: str, fn: Term, arg: Term, target: Var | None = None) -> Term:
    if mode == "FA":
        out = apply_fa(fn, arg)
    elif mode == "GFA":
        out = apply_gfa(fn, arg)
    elif mode == "QI":
        out = quantify_in(fn, arg, target)
    elif mode == "P0":
        out = normalize(rename_const(fn, P0, arg))
    else:
        raise ValueError(f"unknown combination mode {mode!r}")
    return pull_existentials(out)


def replay(reading: Reading) -> bool:
    """Recompute every recorded step; true iff all results match."""
    return all(alpha_equal(combine(s.mode, s.fn, s.arg, s.target), s.result) for s in reading.steps)


def resolve_p0(reading: Reading, antecedent: Term | None = None) -> Reading:
    """Instantiate the anaphoric relation ``P0`` with the antecedent's degree relation."""
    antecedent = antecedent if antecedent is not None else reading.antecedent
    if P0 not in constants(reading.form):
        return reading
    if antecedent is None:
        raise NoAntecedent("P0 has no antecedent")
    if type_of(antecedent) != EDT:
        raise NoAntecedent(f"antecedent must be a relation of type {EDT}")
    form = combine("P0", reading.form, antecedent)
    step = Step("P0", "P0", reading.form, antecedent, form)
    return replace(reading, form=form, antecedent=antecedent, steps=reading.steps + (step,))


class _Composer:
    def __init__(self, sem: SemLexicon, scope=DIRECT, resolve=lambda i: i):
        self.sem = sem
        self.scope = scope
        self.resolve = resolve
        self.steps = []
        self.complement = None
        self.pending = []  # (quantifier, trace var) raised to the clause

    def rec(self, mode, node, fn, arg, target=None):
        out = combine(mode, fn, arg, target)
        self.steps.append(Step(render(node) if node is not None else "", mode, fn, arg, out, target))
        return out

    def apply(self, node, fn, arg):
        """FA when the types fit, GFA otherwise."""
        ft, at = type_of(fn), type_of(arg)
        if ft.arg == at:
            return self.rec("FA", node, fn, arg)
        try:
            gfa_split(fn, arg)
        except NoGfaSplit as exc:
            raise CompositionError(f"cannot combine {ft} with {at} at {render(node)}") from exc
        return self.rec("GFA", node, fn, arg)

    def trace_var(self, index) -> Var:
        return Var(f"t_{self.resolve(index)}", E)

    # clauses
    def clause(self, node: Tree) -> Term:
        kids = [c for c in node.children if c.label not in ("Adv", "Punct")]
        if len(kids) == 2 and kids[0].index is not None:
            binder, body = kids
            scope = self.clause(body)
            return self.rec("QI", node, self.np(binder.with_(index=None)), scope,
                            self.trace_var(binder.index))
        if len(kids) != 3:
            raise CompositionError(f"unexpected clause shape {render(node)}")
        subj, verb, pred = kids
        entry = self.sem.entry(verb)
        if entry.category == "Copula":
            vp = self.predicate(pred)
            out = self.subject_vp(node, subj, vp)
        else:
            s, sq = self.argument(subj, "t_s")
            o, oq = self.argument(pred, "t_o")
            out = self.rec("FA", node, self.rec("FA", verb, self.sem[entry.key], s), o)
            if oq is not None:
                out = self.rec("QI", node, oq, out, o)
            if sq is not None:
                out = self.rec("QI", node, sq, out, s)
        for q, var in self.pending:
            out = self.rec("QI", node, q, out, var)
        self.pending = []
        return out

    def subject_vp(self, node, subj, vp):
        if subj.label == "t":
            return self.rec("FA", node, vp, self.trace_var(subj.index))
        return self.rec("FA", node, self.np(subj), vp)

    def argument(self, np: Tree, name: str):
        if np.label == "t":
            return self.trace_var(np.index), None
        return Var(name, E), self.np(np)

    # noun phrases
    def np(self, node: Tree) -> Term:
        if node.word is not None:
            return self.sem[self.sem.entry(node).key]
        kids = node.children
        if any(k.label == "Coord" for k in kids):
            left, coord, right = kids
            return self.rec("FA", node, self.rec("FA", node, self.sem["or"], self.np(left)), self.np(right))
        if node.tag in ("WRA", "NRA"):
            base, pp = kids
            return self.rec("FA", node, self.np(base), self.than_phrase(pp))
        det, nbar = kids
        return self.apply(node, self.sem[self.sem.entry(det).key], self.nbar(nbar))

    def nbar(self, node: Tree) -> Term:
        if node.word is not None:
            return self.sem[self.sem.entry(node).key]
        first, second = node.children
        if first.label == "A":
            entry = self.sem.entry(first)
            deg = self.sem["er"] if entry.comparative else self.sem["pos"]
            adj = self.rec("GFA", first, deg, self.sem.attributive(entry.key))
            return self.rec("FA", node, adj, self.nbar(second))
        # N [AP A [PP than NP]]: post-nominal, interpreted like the predicative case
        noun = self.nbar(first)
        ap = self.postnominal(second)
        return self.rec("FA", node, self.rec("FA", node, INTERSECT, noun), ap)

    def postnominal(self, ap: Tree) -> Term:
        a, pp = ap.children
        entry = self.sem.entry(a)
        head = self.rec("GFA", a, self.sem["er"], self.sem.predicative(entry.key))
        head = self.rec("GFA", ap, self.sem["is"], head)
        compl = pp.children[1]
        if compl.word is None:
            raise NotSupported("post-nominal comparatives are composed for referential complements only")
        c = self.rec("FA", pp, self.sem["wh-direct"], self.np(compl))
        self.complement = c
        return self.rec("FA", ap, head, c)

    # predicates
    def predicate(self, ap: Tree) -> Term:
        if ap.tag == "PRED":
            inner, pp = ap.children
            entry = self.sem.entry(inner.children[0])
            head = self.rec("GFA", inner, self.sem["er"], self.sem.predicative(entry.key))
            head = self.rec("GFA", ap, self.sem["is"], head)
            return self.rec("FA", ap, head, self.than_phrase(pp))
        entry = self.sem.entry(ap.children[0])
        if entry.comparative:
            raise NotSupported("comparative without complement: no contextual standard")
        adj = self.rec("GFA", ap, self.sem["pos"], self.sem.predicative(entry.key))
        return self.rec("FA", ap, self.sem["is"], adj)

    # complements
    def than_phrase(self, pp: Tree) -> Term:
        body = pp.children[1]  # "than" is semantically empty
        if body.label == "CP":
            c = self.wra_complement(body)
        elif body.label == "SC":
            c = self.small_clause(body)
        else:
            raise CompositionError(f"unreconstructed WRA complement {render(pp)}; run lf.reconstruct first")
        self.complement = c
        return c

    def small_clause(self, sc: Tree) -> Term:
        _, np = sc.children
        if np.word is not None:
            return self.rec("FA", sc, self.sem["wh-direct"], self.np(np))
        # quantified complement: raise it to the clause, leave a trace in SC
        var = Var("t_2", E)
        self.pending.append((self.np(np), var))
        lifted = Lam(Var("Q", ET), App(Var("Q", ET), var))
        return self.rec("FA", sc, self.sem["wh-direct"], lifted)

    def wra_complement(self, cp: Tree) -> Term:
        wh, _, ip = cp.children
        np, inner_ip = ip.children
        inner = self.clause(inner_ip)
        gap = self.trace_var(wh.index)
        subj = self.trace_var(np.index)
        q = self.np(np.with_(index=None))
        if self.scope == NP_WIDE:
            w = self.rec("QI", cp, self.sem["wh-wra"], inner, gap)
            return self.rec("GFA", ip, q, Lam(subj, w))
        s = self.rec("QI", ip, q, inner, subj)
        return self.rec("QI", cp, self.sem["wh-wra"], s, gap)


def _attributive_antecedent(host: Tree, sem: SemLexicon) -> Term:
    a, n = host.children[0].children[1].children
    return App(Const(sem.entry(a).key, ATTR), sem[sem.entry(n).key])


def _finish(c: _Composer, form, scope, tag, antecedent, tree) -> Reading:
    if free_vars(form):
        raise CompositionError(f"open form: free {sorted(v.name for v in free_vars(form))}")
    r = Reading(form, scope, tag, antecedent, c.complement, tuple(c.steps), tree)
    return resolve_p0(r)


def compose_wra(lf: LfTree, scope: str = WH_WIDE, sem: SemLexicon | None = None) -> Reading:
    sem = sem or default_semlexicon()
    if scope not in (WH_WIDE, NP_WIDE):
        raise ValueError(f"bad scope assignment {scope!r}")
    c = _Composer(sem, scope, lf.resolve)
    form = c.clause(lf.root)
    host = lf.root.find_tag("WRA")
    return _finish(c, form, scope, "WRA", _attributive_antecedent(host, sem), lf)


def compose_nra(tree: Tree, sem: SemLexicon | None = None) -> Reading:
    sem = sem or default_semlexicon()
    tree = lower_topic(tree)
    host = tree.find_tag("NRA")
    if host is None:
        raise CompositionError("not an NRA structure")
    if complement_np(host).word is None:
        raise QuantifiedComplement("narrow attributive complements admit only referential NPs")
    c = _Composer(sem)
    form = c.clause(tree)
    return _finish(c, form, DIRECT, "NRA", _attributive_antecedent(host, sem), tree)


def compose_pred(tree: Tree, sem: SemLexicon | None = None) -> Reading:
    sem = sem or default_semlexicon()
    host = tree.find_tag("PRED")
    if host is None:
        raise CompositionError("not a predicative comparative")
    c = _Composer(sem)
    form = c.clause(tree)
    a = sem.entry(host.children[0].children[0])
    return _finish(c, form, DIRECT, "PRED", Const(a.key, EDT), tree)


def compose_plain(tree: Tree, sem: SemLexicon | None = None) -> Reading:
    sem = sem or default_semlexicon()
    tree = lower_topic(tree)
    if tree.label != "IP":
        raise NotSupported("not a clause")
    for n in tree.walk():
        if n.label == "A" and sem.entry(n).comparative and classify_construction(tree) == "PLAIN":
            raise NotSupported("comparative without complement: no contextual standard")
    c = _Composer(sem)
    form = c.clause(tree)
    antecedent = None
    host = tree.find_tag("POSTNOM")
    if host is not None:
        antecedent = Const(sem.entry(host.children[0]).key, EDT)
    return _finish(c, form, DIRECT, classify_construction(tree), antecedent, tree)


def readings(tree: Tree, sem: SemLexicon | None = None) -> list:
    """All readings of one parse, deduplicated up to alpha-equivalence."""
    sem = sem or default_semlexicon()
    tag = classify_construction(tree)
    if lower_topic(tree).label != "IP":
        raise NotSupported("only clauses have truth conditions")
    if tag == "WRA":
        lf = reconstruct(tree)
        out = []
        for scope in enumerate_scopes(lf, sem.lexicon):
            r = compose_wra(lf, scope, sem)
            if not any(alpha_equal(r.form, o.form) for o in out):
                out.append(r)
        return out
    if tag == "NRA":
        return [compose_nra(tree, sem)]
    if tag == "PRED":
        return [compose_pred(tree, sem)]
    return [compose_plain(tree, sem)]
