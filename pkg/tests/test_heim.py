import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from goldens import FORMS
from comparatives.grammar import NotSupported, classify_construction, parse
from comparatives.heim import build_heim, eval_heim
from comparatives.models import Model, evaluate, load_fixture, random_car_model
from comparatives.terms import alpha_equal

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def heim(sentence, tag="WRA"):
    return build_heim(next(t for t in parse(sentence) if classify_construction(t) == tag))


@pytest.mark.parametrize("sentence,tag,key", [
    ("George is richer than Bill", "PRED", "heim_rich"),
    ("George owns a faster car than Bill", "WRA", "heim_fast_car"),
    ("George owns at least two faster cars than Bill", "WRA", "heim_two_cars"),
])
def test_degree_properties(sentence, tag, key):
    assert alpha_equal(heim(sentence, tag).degree_property, FORMS[key])


def test_rendering():
    assert str(heim("George is richer than Bill", "PRED")) == "er_than(<g*, b*>)((lam x:e . (iota d:d . (rich' x d))))"


def test_predicative_truth():
    m = Model.from_dict({"entities": ["g", "b"], "measures": {"wealth": {"g": 5, "b": 3}},
                         "constants": {"g*": "g", "b*": "b"}})
    assert eval_heim(heim("George is richer than Bill", "PRED"), m) is True
    assert eval_heim(heim("Bill is richer than George", "PRED"), m) is False


def test_cardinal_counterexample_separates_the_analyses():
    md = load_fixture("Mdagger")
    assert eval_heim(heim("George owns at least two faster cars than Bill"), md) is True
    assert evaluate(FORMS["at_least_two"], md) is False


def test_undefined_when_complement_owns_nothing():
    m2 = load_fixture("M2")
    assert eval_heim(heim("George owns a faster car than Bill"), m2) is None


def test_narrow_attributive():
    f = heim("George owns a faster car than this BMW", "NRA")
    assert f.frame is not None and f.correlate is None
    assert eval_heim(f, load_fixture("M2")) is True
    assert eval_heim(f, load_fixture("M2").with_measure("speed", "george_car1", 100)) is False


def test_quantified_arguments_not_supported():
    with pytest.raises(NotSupported):
        heim("George has a faster car than every policeman")
    with pytest.raises(NotSupported):
        heim("George is richer than every professor", "PRED")
    with pytest.raises(NotSupported):
        heim("George owns at least two faster cars than Bill", "NRA")


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_predicative_agrees_with_arithmetic(seed):
    rng = random.Random(seed)
    m = Model.from_dict({"entities": ["g", "b"], "measures": {"wealth": {"g": rng.randint(0, 5), "b": rng.randint(0, 5)}},
                         "constants": {"g*": "g", "b*": "b"}})
    assert eval_heim(heim("George is richer than Bill", "PRED"), m) == oracles.richer(m)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_cardinal_compares_second_best_cars(seed):
    m = random_car_model(random.Random(seed))
    assert eval_heim(heim("George owns at least two faster cars than Bill"), m) == oracles.heim_at_least_two(m)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_indefinite_matches_the_quantificational_analysis_when_defined(seed):
    m = random_car_model(random.Random(seed), min_cars=1)
    assert eval_heim(heim("George owns a faster car than Bill"), m) == evaluate(FORMS["standard"], m)
