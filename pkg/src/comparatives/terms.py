"""Simply typed lambda terms over entities (e), degrees (d) and truth values (t).

Terms are immutable dataclasses.  Variables are identified by name *and*
type, so ``x:e`` and ``x:d`` are different variables.  Conjunction and
disjunction are n-ary and kept flat by the :func:`conj` / :func:`disj`
constructors, which makes ``a & (b & c)`` and ``(a & b) & c`` the same term.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Union


# ---------------------------------------------------------------- types

@dataclass(frozen=True)
class Basic:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Arrow:
    arg: SemType
    res: SemType

    def __str__(self):
        return f"<{self.arg},{self.res}>"


SemType = Union[Basic, Arrow]

E = Basic("e")
D = Basic("d")
T = Basic("t")


def arrow(*types: SemType) -> SemType:
    """``arrow(a, b, c)`` is ``<a,<b,c>>``."""
    if len(types) == 1:
        return types[0]
    return Arrow(types[0], arrow(*types[1:]))


ET = arrow(E, T)
DT = arrow(D, T)


# ---------------------------------------------------------------- errors

class IllTyped(TypeError):
    def __init__(self, location: str, expected, found):
        self.location = location
        self.expected = expected
        self.found = found
        super().__init__(f"ill-typed at {location or 'top'}: expected {expected}, found {found}")


class NoGfaSplit(TypeError):
    pass


class NotFree(ValueError):
    pass


# ---------------------------------------------------------------- terms

class Term:
    __slots__ = ()

    def __call__(self, *args: Term) -> Term:
        out = self
        for a in args:
            out = App(out, a)
        return out

    def __str__(self):
        from .termio import show
        return show(self)


@dataclass(frozen=True)
class Var(Term):
    name: str
    type: SemType

    def __repr__(self):
        return f"Var({self.name}:{self.type})"


@dataclass(frozen=True)
class Const(Term):
    name: str
    type: SemType

    def __repr__(self):
        return f"Const({self.name}:{self.type})"


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True)
class Lam(Term):
    var: Var
    body: Term


@dataclass(frozen=True)
class Forall(Term):
    var: Var
    body: Term


@dataclass(frozen=True)
class Exists(Term):
    var: Var
    body: Term


@dataclass(frozen=True)
class Iota(Term):
    var: Var
    body: Term


@dataclass(frozen=True)
class CardQuant(Term):
    kind: str  # "atleast" | "atmost"
    n: int
    var: Var
    body: Term

    def __post_init__(self):
        if self.kind not in ("atleast", "atmost"):
            raise ValueError(f"unknown cardinality quantifier {self.kind!r}")
        if self.n < 1:
            raise ValueError("cardinality must be a positive integer")


@dataclass(frozen=True)
class And(Term):
    args: tuple


@dataclass(frozen=True)
class Or(Term):
    args: tuple


@dataclass(frozen=True)
class Implies(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Term):
    body: Term


@dataclass(frozen=True)
class Greater(Term):
    left: Term
    right: Term


BINDERS = (Lam, Forall, Exists, Iota, CardQuant)


def conj(*terms: Term) -> Term:
    flat = []
    for t in terms:
        flat.extend(t.args if isinstance(t, And) else (t,))
    if not flat:
        raise ValueError("empty conjunction")
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(*terms: Term) -> Term:
    flat = []
    for t in terms:
        flat.extend(t.args if isinstance(t, Or) else (t,))
    if not flat:
        raise ValueError("empty disjunction")
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def lam(*parts) -> Term:
    """``lam(x, y, body)`` is ``Lam(x, Lam(y, body))``."""
    *vs, body = parts
    for v in reversed(vs):
        body = Lam(v, body)
    return body


def subterms(t: Term) -> tuple:
    if isinstance(t, App):
        return (t.fn, t.arg)
    if isinstance(t, BINDERS):
        return (t.body,)
    if isinstance(t, (And, Or)):
        return t.args
    if isinstance(t, (Implies, Greater)):
        return (t.left, t.right)
    if isinstance(t, Not):
        return (t.body,)
    return ()


def rebuild(t: Term, parts: Iterable[Term]) -> Term:
    """Rebuild a non-leaf term with new immediate subterms (binders keep their variable)."""
    parts = tuple(parts)
    if isinstance(t, App):
        return App(*parts)
    if isinstance(t, BINDERS):
        return replace(t, body=parts[0])
    if isinstance(t, And):
        return conj(*parts)
    if isinstance(t, Or):
        return disj(*parts)
    if isinstance(t, Implies):
        return Implies(*parts)
    if isinstance(t, Greater):
        return Greater(*parts)
    if isinstance(t, Not):
        return Not(parts[0])
    return t


# ---------------------------------------------------------------- typing

def type_of(term: Term, _loc: str = "") -> SemType:
    if isinstance(term, (Var, Const)):
        return term.type
    if isinstance(term, App):
        ft = type_of(term.fn, _loc + "0")
        at = type_of(term.arg, _loc + "1")
        if not isinstance(ft, Arrow):
            raise IllTyped(_loc + "0", "function type", ft)
        if ft.arg != at:
            raise IllTyped(_loc + "1", ft.arg, at)
        return ft.res
    if isinstance(term, Lam):
        return Arrow(term.var.type, type_of(term.body, _loc + "0"))
    if isinstance(term, (Forall, Exists, CardQuant)):
        _expect(term.body, T, _loc + "0")
        return T
    if isinstance(term, Iota):
        if term.var.type != D:
            raise IllTyped(_loc, D, term.var.type)
        _expect(term.body, T, _loc + "0")
        return D
    if isinstance(term, (And, Or)):
        for i, a in enumerate(term.args):
            _expect(a, T, _loc + str(i))
        return T
    if isinstance(term, Implies):
        _expect(term.left, T, _loc + "0")
        _expect(term.right, T, _loc + "1")
        return T
    if isinstance(term, Not):
        _expect(term.body, T, _loc + "0")
        return T
    if isinstance(term, Greater):
        _expect(term.left, D, _loc + "0")
        _expect(term.right, D, _loc + "1")
        return T
    raise TypeError(f"not a term: {term!r}")


def _expect(term, ty, loc):
    found = type_of(term, loc)
    if found != ty:
        raise IllTyped(loc, ty, found)


# ---------------------------------------------------------------- variables

@lru_cache(maxsize=None)
def free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t,))
    if isinstance(t, BINDERS):
        return free_vars(t.body) - {t.var}
    out = frozenset()
    for s in subterms(t):
        out |= free_vars(s)
    return out


@lru_cache(maxsize=None)
def var_names(t: Term) -> frozenset:
    """Names of all variables in ``t``, free or bound."""
    if isinstance(t, Var):
        return frozenset((t.name,))
    out = frozenset((t.var.name,)) if isinstance(t, BINDERS) else frozenset()
    for s in subterms(t):
        out |= var_names(s)
    return out


def constants(t: Term) -> frozenset:
    if isinstance(t, Const):
        return frozenset((t,))
    out = frozenset()
    for s in subterms(t):
        out |= constants(s)
    return out


_NAME = re.compile(r"^(.*?)(\d*)('*)$")


def fresh(var: Var, avoid) -> Var:
    """Rename ``var`` with the smallest numeric suffix not in ``avoid`` (x -> x1, d' -> d1')."""
    stem, _, primes = _NAME.match(var.name).groups()
    k = 1
    while f"{stem}{k}{primes}" in avoid:
        k += 1
    return Var(f"{stem}{k}{primes}", var.type)


# ---------------------------------------------------------------- substitution

def substitute(term: Term, var: Var, value: Term) -> Term:
    """Capture-avoiding ``term[var := value]``."""
    vt = type_of(value)
    if vt != var.type:
        raise IllTyped("substitution", var.type, vt)
    return _subst(term, var, value)


def _subst(t: Term, var: Var, value: Term) -> Term:
    if isinstance(t, Var):
        return value if t == var else t
    if isinstance(t, Const):
        return t
    if var not in free_vars(t):
        return t
    if isinstance(t, BINDERS):
        bound, body = t.var, t.body
        if bound in free_vars(value):
            new = fresh(bound, var_names(body) | var_names(value) | {var.name})
            body = _subst(body, bound, new)
            bound = new
        return replace(t, var=bound, body=_subst(body, var, value))
    return rebuild(t, (_subst(s, var, value) for s in subterms(t)))


def rename_const(term: Term, const: Const, value: Term) -> Term:
    """Replace every occurrence of a constant (constants are never bound)."""
    fv = free_vars(value)
    if isinstance(term, Const):
        return value if term == const else term
    if isinstance(term, Var) or const not in constants(term):
        return term
    if isinstance(term, BINDERS) and term.var in fv:
        new = fresh(term.var, var_names(term.body) | var_names(value))
        term = replace(term, var=new, body=_subst(term.body, term.var, new))
    return rebuild(term, (rename_const(s, const, value) for s in subterms(term)))


# ---------------------------------------------------------------- reduction

def normalize(term: Term) -> Term:
    """Beta-normal form (normal-order reduction; no eta)."""
    if isinstance(term, App):
        fn = normalize(term.fn)
        if isinstance(fn, Lam):
            return normalize(_subst(fn.body, fn.var, term.arg))
        return App(fn, normalize(term.arg))
    if isinstance(term, (Var, Const)):
        return term
    return rebuild(term, (normalize(s) for s in subterms(term)))


def alpha_equal(a: Term, b: Term) -> bool:
    return _aeq(a, b, {}, {}, 0)


def _aeq(a, b, ea, eb, depth):
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        ia, ib = ea.get(a), eb.get(b)
        if ia is None and ib is None:
            return a == b
        return ia == ib
    if isinstance(a, Const):
        return a == b
    if isinstance(a, BINDERS):
        if a.var.type != b.var.type:
            return False
        if isinstance(a, CardQuant) and (a.kind, a.n) != (b.kind, b.n):
            return False
        return _aeq(a.body, b.body, {**ea, a.var: depth}, {**eb, b.var: depth}, depth + 1)
    sa, sb = subterms(a), subterms(b)
    return len(sa) == len(sb) and all(_aeq(x, y, ea, eb, depth) for x, y in zip(sa, sb))


def pull_existentials(term: Term) -> Term:
    """Rewrite ``(exists v. A) & B`` to ``exists v. (A & B)`` wherever the
    existential is the *first* conjunct.

    This is the prenexing that turns the article applied to a comparative
    N' into the flat ``exists x exists d' [... & Q(x)]`` shape.  Existentials
    in later conjuncts stay where they are, so a complement like
    ``exists y [P0(y,d) & exists x [policeman'(x) & has'(x,y)]]`` is
    untouched.
    """
    if isinstance(term, (Var, Const)):
        return term
    term = rebuild(term, (pull_existentials(s) for s in subterms(term)))
    if isinstance(term, And) and isinstance(term.args[0], Exists):
        ex, rest = term.args[0], term.args[1:]
        bound, body = ex.var, ex.body
        rest_fv = set().union(*(free_vars(r) for r in rest))
        if bound in rest_fv:
            new = fresh(bound, var_names(term))
            body = _subst(body, bound, new)
            bound = new
        return Exists(bound, pull_existentials(conj(body, *rest)))
    return term


# ---------------------------------------------------------------- combination modes

def apply_fa(f: Term, a: Term) -> Term:
    """Functional application, beta-normalized."""
    ft, at = type_of(f), type_of(a)
    if not isinstance(ft, Arrow):
        raise IllTyped("function", "function type", ft)
    if ft.arg != at:
        raise IllTyped("argument", ft.arg, at)
    return normalize(App(f, a))


def _prefix_names(t: Term) -> list:
    names = []
    while isinstance(t, Lam):
        names.append(t.var.name)
        t = t.body
    return names


def gfa_split(f: Term, a: Term) -> tuple:
    """Return ``(v_type, residual_types)`` for ``f . a``, peeling the fewest
    argument positions of ``a`` that make its result match what ``f`` wants."""
    ft, at = type_of(f), type_of(a)
    if not (isinstance(ft, Arrow) and isinstance(ft.arg, Arrow)):
        raise NoGfaSplit(f"function type {ft} does not take a function argument")
    alpha, beta = ft.arg.arg, ft.arg.res
    if not (isinstance(at, Arrow) and at.arg == alpha):
        raise NoGfaSplit(f"argument type {at} does not start with {alpha}")
    residual, cur = [], at.res
    while cur != beta:
        if not isinstance(cur, Arrow):
            raise NoGfaSplit(f"no residual prefix of {at} leaves {beta}")
        residual.append(cur.arg)
        cur = cur.res
    return alpha, tuple(residual)


def _pick(name: str, ty: SemType, avoid: set) -> Var:
    v = Var(name, ty)
    if name in avoid:
        v = fresh(v, avoid)
    avoid.add(v.name)
    return v


def apply_gfa(f: Term, a: Term) -> Term:
    """Generalized functional application ``f . a``.

    With ``a = lam v s1 .. sn . body`` the result is
    ``lam s1 .. sn . f(lam v . a(v)(s1)..(sn))``; the residual prefix is the
    shortest one that makes the types line up.  With no residual prefix this
    is plain application.
    """
    alpha, residual = gfa_split(f, a)
    if not residual:
        return apply_fa(f, a)
    names = _prefix_names(normalize(a))
    avoid = {v.name for v in free_vars(f) | free_vars(a)}
    v = _pick(names[0] if names else "v", alpha, avoid)
    sigma = []
    for k, ty in enumerate(residual):
        sigma.append(_pick(names[k + 1] if k + 1 < len(names) else "s", ty, avoid))
    inner = App(a, v)
    for s in sigma:
        inner = App(inner, s)
    return normalize(lam(*sigma, App(f, Lam(v, inner))))


def apply_fc(f: Term, g: Term) -> Term:
    """Functional composition ``lam x . f(g(x))``."""
    ft, gt = type_of(f), type_of(g)
    if not isinstance(ft, Arrow) or not isinstance(gt, Arrow):
        raise IllTyped("composition", "function types", (ft, gt))
    if gt.res != ft.arg:
        raise IllTyped("composition", ft.arg, gt.res)
    names = _prefix_names(normalize(g))
    avoid = {v.name for v in free_vars(f) | free_vars(g)}
    x = _pick(names[0] if names else "x", gt.arg, avoid)
    return normalize(Lam(x, App(f, App(g, x))))


def quantify_in(quantifier: Term, scope: Term, target: Var) -> Term:
    """Bind ``target`` in ``scope`` by ``quantifier``: ``quantifier(lam target . scope)``.

    The quantifier must take a ``<tau,t>`` argument; its result type is free,
    so degree operators such as the comparative WH operator bind traces the
    same way as ordinary NP quantifiers.
    """
    qt = type_of(quantifier)
    if type_of(scope) != T:
        raise IllTyped("scope", T, type_of(scope))
    if target not in free_vars(scope):
        raise NotFree(f"{target.name} is not free in the scope")
    want = Arrow(target.type, T)
    if not (isinstance(qt, Arrow) and qt.arg == want):
        raise IllTyped("quantifier", Arrow(want, "..."), qt)
    return normalize(App(quantifier, Lam(target, scope)))
