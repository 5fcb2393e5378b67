import random

import pytest

from goldens import FAST_CAR, FORMS
from comparatives.grammar import NotSupported, classify_construction, parse
from comparatives.lf import NP_WIDE, WH_WIDE, LfTree, reconstruct
from comparatives.semantics import (
    P0, CompositionError, NoAntecedent, QuantifiedComplement, Reading, SemLexicon, combine,
    compose_nra, compose_plain, compose_pred, compose_wra, readings, replay, resolve_p0,
)
from comparatives.termio import EDT, read_term
from comparatives.terms import (
    D, E, T, And, Const, Exists, Forall, Implies, Var, alpha_equal, constants, free_vars,
    substitute, type_of,
)


def parse_tag(sentence, tag):
    return next(t for t in parse(sentence) if classify_construction(t) == tag)


def only_reading(sentence, tag="WRA"):
    (r,) = readings(parse_tag(sentence, tag))
    return r


def has_step(reading, golden) -> bool:
    return any(alpha_equal(s.result, golden) for s in reading.steps)


# ---------------------------------------------------------------- lexicon

def test_lexicon_entries_are_closed_and_typed():
    sem = SemLexicon()
    for key, term in sem.terms.items():
        type_of(term)
        assert not free_vars(term), key
    assert alpha_equal(sem["er"], FORMS["er"])
    assert alpha_equal(sem["fast'"], FORMS["fast_attr"])
    assert alpha_equal(sem["wh-wra"], FORMS["wh_attr"])
    assert alpha_equal(sem["wh-direct"], FORMS["wh_direct"])
    assert alpha_equal(sem["a"], read_term("lam P:<e,t> . lam Q:<e,t> . exists x:e . P x & Q x"))
    assert alpha_equal(sem["atleast2"], read_term("lam P:<e,t> . lam Q:<e,t> . atleast 2 x:e . P x & Q x"))
    assert alpha_equal(sem["atmost1"], read_term("lam P:<e,t> . lam Q:<e,t> . atmost 1 x:e . P x & Q x"))
    assert alpha_equal(sem["every"], read_term("lam P:<e,t> . lam Q:<e,t> . forall x:e . P x -> Q x"))
    assert alpha_equal(sem["g*"], read_term("lam Q:<e,t> . Q g*"))
    assert alpha_equal(sem.predicative("rich'"), read_term("lam d:d . lam x:e . rich' x d"))


# ---------------------------------------------------------------- the standard example

def test_standard_example_chain():
    r = only_reading("George owns a faster car than Bill")
    assert alpha_equal(r.form, FORMS["standard"])
    assert alpha_equal(r.complement, FORMS["complement_open"])
    for k in ("er_fast", "faster_car", "a_faster_car", "faster_car_than_bill"):
        assert has_step(r, FORMS[k]), k
    assert alpha_equal(combine("P0", r.complement, FAST_CAR), FORMS["complement"])
    assert str(r.antecedent) == "(fast' car')"


def test_proper_name_scopes_collapse():
    lf = reconstruct(parse_tag("George owns a faster car than Bill", "WRA"))
    wide, narrow = compose_wra(lf, WH_WIDE), compose_wra(lf, NP_WIDE)
    assert alpha_equal(wide.form, narrow.form)


def test_cardinal_example():
    assert alpha_equal(only_reading("George owns at least two faster cars than Bill").form, FORMS["at_least_two"])


def test_npi_complement_takes_narrow_scope():
    r = only_reading("George has a faster car than any policeman")
    assert r.scope == WH_WIDE
    assert alpha_equal(r.complement, FORMS["complement_any"])
    assert alpha_equal(r.form, FORMS["than_any"])


def test_universal_complement_takes_wide_scope():
    r = only_reading("George has a faster car than every policeman")
    assert r.scope == NP_WIDE
    assert alpha_equal(r.complement, FORMS["complement_every_wide"])
    assert alpha_equal(r.form, FORMS["than_every"])
    # the WH operator applied to the open clause before quantifying in
    open63 = [s.result for s in r.steps if s.mode == "QI" and type_of(s.result) != T]
    assert any(alpha_equal(substitute(t, Var("t_2", E), Var("x", E)), FORMS["complement_has_x"]) for t in open63)


def test_narrow_universal_would_be_the_rejected_reading():
    lf = reconstruct(parse_tag("George has a faster car than every policeman", "WRA"))
    assert alpha_equal(compose_wra(lf, WH_WIDE).complement, FORMS["complement_every_narrow"])


def test_coordination_is_ambiguous():
    rs = readings(parse_tag("George owns a faster car than Bill or Richard", "WRA"))
    assert [r.scope for r in rs] == [WH_WIDE, NP_WIDE]
    assert alpha_equal(rs[0].form, FORMS["both"])
    assert alpha_equal(rs[1].form, FORMS["either"])


def test_topicalized_sentence_means_the_same():
    r = only_reading("A faster car than Bill, George owns indeed")
    assert alpha_equal(r.form, FORMS["standard"])


# ---------------------------------------------------------------- direct analyses

def test_narrow_attributive():
    r = compose_nra(parse_tag("George owns a faster car than this BMW", "NRA"))
    assert alpha_equal(r.complement, FORMS["complement_bmw"])
    assert alpha_equal(r.form, FORMS["than_bmw"])


def test_narrow_attributive_with_name_complement():
    r = compose_nra(parse_tag("George owns a faster car than Bill", "NRA"))
    expected = read_term("exists x:e . exists d':d . (forall d:d . fast' car' b* d -> d' > d)"
                         " & fast' car' x d' & own' g* x")
    assert alpha_equal(r.form, expected)


def test_narrow_attributive_rejects_quantified_complement():
    with pytest.raises(QuantifiedComplement):
        compose_nra(parse_tag("George owns a faster car than every BMW", "NRA"))


def test_predicative():
    r = compose_pred(parse_tag("George is richer than Bill", "PRED"))
    assert alpha_equal(combine("P0", r.complement, Const("rich'", EDT)), FORMS["complement_rich"])
    assert alpha_equal(r.form, FORMS["richer"])


def test_predicative_with_quantified_complement_raises_it():
    r = compose_pred(parse_tag("George is richer than every professor", "PRED"))
    expected = read_term("forall z:e . professor' z -> (exists d':d . (forall d:d . rich' z d -> d' > d)"
                         " & rich' g* d')")
    assert alpha_equal(r.form, expected)


def test_postnominal_composition():
    (tree,) = parse("George owns a building higher than the ET")
    r = compose_plain(tree)
    expected = read_term("exists x:e . building' x & (exists d':d . (forall d:d . high' et* d -> d' > d)"
                         " & high' x d') & own' g* x")
    assert alpha_equal(r.form, expected)


def test_positive_adjective_closes_degree_existentially():
    (tree,) = parse("George owns a fast car")
    r = compose_plain(tree)
    assert alpha_equal(r.form, read_term("exists x:e . exists d:d . fast' car' x d & own' g* x"))


def test_complement_free_comparative_is_not_supported():
    with pytest.raises(NotSupported):
        readings(parse("George owns a faster car")[0])


def test_definite_article():
    (tree,) = parse("George owns the fast car")
    r = compose_plain(tree)
    assert isinstance(r.form, And)


def test_wra_needs_reconstruction():
    with pytest.raises(CompositionError):
        compose_wra(LfTree(parse_tag("George owns a faster car than Bill", "WRA")))


# ---------------------------------------------------------------- P0 resolution

def test_resolve_p0_examples():
    bare = Reading(FORMS["complement_open"], "direct", "WRA", None, None, ())
    assert alpha_equal(resolve_p0(bare, read_term("fast' car'")).form, FORMS["complement"])
    nra = Reading(FORMS["complement_bmw"], "direct", "NRA", None, None, ())
    out = resolve_p0(nra, read_term("fast' car'")).form
    assert alpha_equal(out, read_term("lam D:<d,t> . forall d:d . fast' car' bmw* d -> D d"))
    plain = Reading(FORMS["standard"], "direct", "WRA", None, None, ())
    assert resolve_p0(plain, read_term("fast' car'")) is plain


def test_resolve_p0_errors():
    bare = Reading(FORMS["complement_open"], "direct", "WRA", None, None, ())
    with pytest.raises(NoAntecedent):
        resolve_p0(bare)
    with pytest.raises(NoAntecedent):
        resolve_p0(bare, Const("car'", read_term("car'").type))


# ---------------------------------------------------------------- invariants

SENTENCES = [
    "George owns a faster car than Bill",
    "George owns at least two faster cars than Bill",
    "George owns at most one faster car than Richard",
    "George has a faster car than any policeman",
    "George has a faster car than every policeman",
    "George owns a faster car than Bill or Richard",
    "Bill owns a faster car than Richard or George",
    "A faster car than Bill, George owns indeed",
]


def all_readings(sentence):
    return [r for t in parse(sentence) for r in _safe(t)]


def _safe(tree):
    try:
        return readings(tree)
    except (QuantifiedComplement, NotSupported):
        return []


@pytest.mark.parametrize("sentence", SENTENCES)
def test_readings_are_closed_resolved_and_replayable(sentence):
    for r in all_readings(sentence):
        assert type_of(r.form) == T
        assert not free_vars(r.form)
        assert P0 not in constants(r.form)
        assert {s.mode for s in r.steps} <= {"FA", "GFA", "QI", "P0"}
        assert replay(r)
        assert alpha_equal(r.steps[-1].result, r.form)


def _matrix_core(form):
    """Strip the top-level individual and degree existentials."""
    binders = []
    while isinstance(form, Exists) or getattr(form, "kind", None):
        binders.append(form.var)
        form = form.body
    return binders, form


@pytest.mark.parametrize("sentence", [s for s in SENTENCES if "or" not in s.split() and "every" not in s])
def test_wra_shape_universal_degree_inside_top_level_existential(sentence):
    r = only_reading(sentence)
    binders, core = _matrix_core(r.form)
    assert [v.type for v in binders] == [E, D]
    dprime = binders[1]
    assert isinstance(core, And)
    univ = core.args[0]
    assert isinstance(univ, Forall) and univ.var.type == D
    assert isinstance(univ.body, Implies)
    restriction, scope = univ.body.left, univ.body.right
    assert isinstance(restriction, Exists) and restriction.var.type == E
    assert free_vars(scope) == {dprime, univ.var}


def test_replay_detects_tampering():
    r = only_reading("George owns a faster car than Bill")
    bad = r.steps[0].__class__(r.steps[0].node, "FA", r.steps[0].fn, r.steps[0].arg, FORMS["standard"])
    assert not replay(Reading(r.form, r.scope, r.tag, r.antecedent, r.complement, (bad,) + r.steps[1:]))


def test_random_wra_sentences_compose():
    rng = random.Random(7)
    for _ in range(30):
        s = random_wra_sentence(rng)
        assert all_readings(s), s


def random_wra_sentence(rng):
    """A random sentence from the attributive part of the fragment."""
    subj = rng.choice(["George", "Bill", "Richard"])
    verb = rng.choice(["owns", "has"])
    det, noun = rng.choice([("a", "car"), ("at least two", "cars"), ("at most one", "car"), ("a", "BMW")])
    adj = rng.choice(["faster", "richer", "higher"])
    comp = rng.choice(["Bill", "Richard", "George", "every policeman", "any policeman", "Bill or Richard",
                       "a professor", "at least two policemen"])
    return f"{subj} {verb} {det} {adj} {noun} than {comp}"
