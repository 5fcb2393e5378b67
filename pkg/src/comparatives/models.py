"""Finite models, truth evaluation and discourse-referent accessibility.

Model files are JSON (format version 1)::

    {"entities": ["george", "bill", "c1"],
     "sorts": {"car": ["c1"]},
     "relations": {"own": [["george", "c1"]]},
     "measures": {"speed": {"c1": 200}},
     "constants": {"g*": "george", "b*": "bill"}}

Sort and relation names are the logical constants without the prime
(``car'`` -> ``car``).  Degree atoms follow a downward-closed ontology: ``x``
is ``d``-fast iff ``speed(x) >= d``; an entity without a speed falsifies
every speed atom.  Degree quantifiers range over the measure values of the
dimensions mentioned, which suffices because every degree atom is a
threshold test against one of those values.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .grammar import default_lexicon
from .terms import (
    D, E, And, App, Arrow, CardQuant, Const, Exists, Forall, Greater, Implies, Iota,
    Lam, Not, Or, Term, Var, constants, free_vars, subterms,
)

FORMAT_VERSION = 1


class ModelError(ValueError):
    """Missing or malformed model file."""


class MissingDenotation(KeyError):
    pass


class DimensionMismatch(ValueError):
    pass


class Undefined(ValueError):
    """An iota term with no (unique) satisfier."""


def _num(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, float, str)):
        raise ModelError(f"measure value {v!r} is not a number")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ModelError(f"measure value {v!r} is not a finite rational") from exc


@dataclass(frozen=True)
class Model:
    entities: tuple
    sorts: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)
    measures: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)
    name: str = ""

    @classmethod
    def from_dict(cls, data: dict, name: str = "") -> Model:
        if not isinstance(data, dict) or "entities" not in data:
            raise ModelError("model must be a JSON object with an 'entities' list")
        version = data.get("version", FORMAT_VERSION)
        if version != FORMAT_VERSION:
            raise ModelError(f"unsupported model format version {version}")
        ents = tuple(data["entities"])
        known = set(ents)

        def check(e, where):
            if e not in known:
                raise ModelError(f"unknown entity {e!r} in {where}")
            return e

        try:
            sorts = {k: frozenset(check(e, k) for e in v) for k, v in data.get("sorts", {}).items()}
            rels = {k: frozenset(tuple(check(e, k) for e in pair) for pair in v)
                    for k, v in data.get("relations", {}).items()}
            if any(len(p) != 2 for ps in rels.values() for p in ps):
                raise ModelError("relations must be lists of pairs")
            meas = {dim: {check(e, dim): _num(v) for e, v in vals.items()}
                    for dim, vals in data.get("measures", {}).items()}
            consts = {k: check(v, k) for k, v in data.get("constants", {}).items()}
        except (AttributeError, TypeError) as exc:
            raise ModelError(f"malformed model: {exc}") from exc
        return cls(ents, sorts, rels, meas, consts, name or data.get("name", ""))

    @classmethod
    def load(cls, path) -> Model:
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise ModelError(f"model file not found: {path}") from exc
        except (OSError, json.JSONDecodeError) as exc:
            raise ModelError(f"cannot read model {path}: {exc}") from exc
        return cls.from_dict(data, path.stem)

    def to_dict(self) -> dict:
        return {
            "version": FORMAT_VERSION,
            "entities": list(self.entities),
            "sorts": {k: sorted(v) for k, v in sorted(self.sorts.items())},
            "relations": {k: sorted(map(list, v)) for k, v in sorted(self.relations.items())},
            "measures": {d: {e: _jsonnum(x) for e, x in sorted(m.items())} for d, m in sorted(self.measures.items())},
            "constants": dict(sorted(self.constants.items())),
        }

    def with_measure(self, dim: str, entity, value) -> Model:
        meas = {d: dict(m) for d, m in self.measures.items()}
        meas.setdefault(dim, {})[entity] = Fraction(value)
        return Model(self.entities, self.sorts, self.relations, meas, self.constants, self.name)

    def measure(self, dim: str, entity):
        return self.measures.get(dim, {}).get(entity)

    def entity(self, name: str):
        for key in (name, name.rstrip("*")):
            if key in self.constants:
                return self.constants[key]
        raise MissingDenotation(name)


def _jsonnum(x: Fraction):
    return int(x) if x.denominator == 1 else float(x)


def load_fixture(name: str) -> Model:
    """Shipped fixture model by name (``M0`` ... ``M5``, ``Mdagger``, ...)."""
    from importlib import resources
    ref = resources.files("comparatives") / "data" / "models" / f"{name}.json"
    if not ref.is_file():
        raise ModelError(f"no fixture model {name!r}")
    return Model.from_dict(json.loads(ref.read_text(encoding="utf-8")), name)


# ---------------------------------------------------------------- evaluation

def _dimension_map() -> dict:
    return default_lexicon().dimensions()


def dimensions(form: Term, dims: dict | None = None) -> set:
    dims = dims if dims is not None else _dimension_map()
    return {dims[c.name] for c in constants(form) if c.name in dims}


def degree_grid(form: Term, model: Model, dims: dict | None = None) -> frozenset:
    """Measure values for every dimension the form mentions."""
    return frozenset(v for dim in dimensions(form, dims) for v in model.measures.get(dim, {}).values())


def evaluate(form: Term, model: Model, extra_degrees=(), dims: dict | None = None) -> bool:
    """Truth value of a closed type-t form.

    ``extra_degrees`` widens the degree domain beyond the grid; the result
    must not change (grid soundness).
    """
    dims = dims if dims is not None else _dimension_map()
    used = dimensions(form, dims)
    if len(used) > 1:
        raise DimensionMismatch(f"form compares degrees across dimensions {sorted(used)}")
    grid = sorted(degree_grid(form, model, dims) | {Fraction(x) for x in extra_degrees})
    return bool(_Evaluator(model, dims, grid).ev(form, {}))


class _Evaluator:
    def __init__(self, model, dims, grid):
        self.m = model
        self.dims = dims
        self.grid = grid

    def domain(self, ty):
        if ty == E:
            return self.m.entities
        if ty == D:
            return self.grid
        raise TypeError(f"cannot quantify over type {ty}")

    def const(self, c: Const):
        m, name = self.m, c.name
        if name == "P0":
            raise MissingDenotation("P0 is unresolved")
        if c.type == E:
            return m.entity(name)
        base = name.rstrip("'")
        if name in self.dims:
            dim = self.dims[name]

            def holds(x, d):
                v = m.measure(dim, x)
                return v is not None and v >= d

            if isinstance(c.type.arg, Arrow):  # attributive A'(Q)(x,d)
                return lambda q: lambda x: lambda d: bool(q(x)) and holds(x, d)
            return lambda x: lambda d: holds(x, d)
        if base in m.sorts:
            s = m.sorts[base]
            return lambda x: x in s
        if base in m.relations:
            r = m.relations[base]
            return lambda x: lambda y: (x, y) in r
        raise MissingDenotation(name)

    def ev(self, t, env):
        if isinstance(t, Var):
            try:
                return env[t]
            except KeyError:
                raise ValueError(f"free variable {t.name}") from None
        if isinstance(t, Const):
            return self.const(t)
        if isinstance(t, App):
            return self.ev(t.fn, env)(self.ev(t.arg, env))
        if isinstance(t, Lam):
            return lambda v: self.ev(t.body, {**env, t.var: v})
        if isinstance(t, Exists):
            return any(self.ev(t.body, {**env, t.var: v}) for v in self.domain(t.var.type))
        if isinstance(t, Forall):
            return all(self.ev(t.body, {**env, t.var: v}) for v in self.domain(t.var.type))
        if isinstance(t, CardQuant):
            n = sum(1 for v in self.domain(t.var.type) if self.ev(t.body, {**env, t.var: v}))
            return n >= t.n if t.kind == "atleast" else n <= t.n
        if isinstance(t, Iota):
            sat = [v for v in self.domain(t.var.type) if self.ev(t.body, {**env, t.var: v})]
            if t.var.type == D:
                if not sat:
                    raise Undefined("empty degree set")
                return max(sat)
            if len(sat) != 1:
                raise Undefined(f"{len(sat)} satisfiers for iota")
            return sat[0]
        if isinstance(t, And):
            return all(self.ev(a, env) for a in t.args)
        if isinstance(t, Or):
            return any(self.ev(a, env) for a in t.args)
        if isinstance(t, Implies):
            return (not self.ev(t.left, env)) or bool(self.ev(t.right, env))
        if isinstance(t, Not):
            return not self.ev(t.body, env)
        if isinstance(t, Greater):
            return self.ev(t.left, env) > self.ev(t.right, env)
        raise TypeError(f"not a term: {t!r}")


def unmeasured(form: Term, model: Model, dims: dict | None = None) -> list:
    """Named individuals the form measures but the model gives no value.

    Their degree atoms are false, which can make a comparison vacuously true.
    """
    dims = dims if dims is not None else _dimension_map()
    out = set()

    def walk(t):
        if isinstance(t, App):
            head, args = t, []
            while isinstance(head, App):
                args.append(head.arg)
                head = head.fn
            if isinstance(head, Const) and head.name in dims:
                for a in args:
                    if isinstance(a, Const) and a.type == E:
                        try:
                            value = model.measure(dims[head.name], model.entity(a.name))
                        except MissingDenotation:
                            value = None
                        if value is None:
                            out.add((a.name, dims[head.name]))
        for s in subterms(t):
            walk(s)

    walk(form)
    return sorted(out)


# ---------------------------------------------------------------- accessibility

@dataclass(frozen=True)
class Referent:
    var: Var
    content: tuple  # conjuncts restricting the referent
    position: str   # binder path from the root
    quantifier: str

    def __str__(self):
        body = " & ".join(str(c) for c in self.content)
        return f"{self.quantifier} {self.var.name} @ {self.position}: {body}"


@dataclass(frozen=True)
class AccessibilityReport:
    accessible: tuple
    inaccessible: tuple

    def names(self, accessible=True):
        return [r.var.name for r in (self.accessible if accessible else self.inaccessible)]


def _content(var, body):
    parts = body.args if isinstance(body, And) else (body,)
    return tuple(p for p in parts if var in free_vars(p))


def accessibility(reading) -> AccessibilityReport:
    """Individual referents, split by whether a later pronoun can reach them.

    A referent is accessible iff its binder is reached from the root through
    existentials and conjunctions only.
    """
    form = getattr(reading, "form", reading)
    acc, inacc = [], []

    def walk(t, path, open_):
        if isinstance(t, (Exists, CardQuant)):
            kind = "exists" if isinstance(t, Exists) else f"{t.kind} {t.n}"
            here = f"{path}/{kind} {t.var.name}"
            if t.var.type == E:
                reachable = open_ and (isinstance(t, Exists) or t.kind == "atleast")
                (acc if reachable else inacc).append(Referent(t.var, _content(t.var, _strip(t.body)), here, kind))
            walk(t.body, here, open_)
        elif isinstance(t, And):
            for k, a in enumerate(t.args):
                walk(a, f"{path}/&{k}", open_)
        elif isinstance(t, (Forall, Iota, Lam)):
            walk(t.body, f"{path}/{type(t).__name__.lower()} {t.var.name}", False)
        elif isinstance(t, Implies):
            walk(t.left, f"{path}/->L", False)
            walk(t.right, f"{path}/->R", False)
        elif isinstance(t, Or):
            for k, a in enumerate(t.args):
                walk(a, f"{path}/|{k}", False)
        elif isinstance(t, Not):
            walk(t.body, f"{path}/~", False)
        elif isinstance(t, App):
            walk(t.fn, path, False)
            walk(t.arg, path, False)

    walk(form, "", True)
    return AccessibilityReport(tuple(acc), tuple(inacc))


def _strip(body):
    """Skip directly nested existential binders to reach the restricting conjunction."""
    while isinstance(body, (Exists, CardQuant)):
        body = body.body
    return body


def check_reading_pair(readings, model: Model) -> list:
    """``(scope, truth value)`` for each reading of an ambiguous sentence."""
    return [(r.scope, evaluate(r.form, model)) for r in readings]


# ---------------------------------------------------------------- random models

def random_car_model(rng: random.Random, people=("g*", "b*"), max_cars=3, speeds=range(1, 11),
                     min_cars=0, unmeasured=0.0) -> Model:
    """People owning random cars with random (integer) speeds."""
    ents, sorts, own, speed, consts = [], [], [], {}, {}
    for p in people:
        name = p.rstrip("*")
        ents.append(name)
        consts[p] = name
        for k in range(rng.randint(min_cars, max_cars)):
            c = f"{name}_car{k}"
            ents.append(c)
            sorts.append(c)
            own.append([name, c])
            if rng.random() >= unmeasured:
                speed[c] = rng.choice(list(speeds))
    data = {"entities": ents, "sorts": {"car": sorts}, "relations": {"own": own, "has": own},
            "measures": {"speed": speed}, "constants": consts}
    return Model.from_dict(data, "random")
