"""Textual syntax for terms.

Canonical (machine) syntax, fully parenthesized by :func:`show`::

    (lam Q:<e,t> . (exists x:e . ((car' x) & (Q x))))
    (forall d:d . ((exists y:e . ((fast' car' y d) & (own' b* y))) -> (d' > d)))
    (atleast 2 x:e . ...)   (atmost 1 x:e . ...)   (iota d:d . ...)   (~ p)

:func:`read_term` also accepts the unparenthesized form with the usual
precedences (``~`` > ``&`` > ``|`` > ``->``; binders extend to the right).
Free variables are written with a type annotation (``d:d``); bare
identifiers resolve to the innermost binder of that name, otherwise to a
constant in the signature.  :func:`pretty` renders the bracket-and-lambda
notation used in the linguistics literature and is output-only.
"""
from __future__ import annotations

import re

from .terms import (
    App, And, Arrow, Basic, CardQuant, Const, D, E, Exists, Forall, Greater, Iota,
    Implies, Lam, Not, Or, T, Var, arrow, conj, disj, type_of,
)

ET, EET = arrow(E, T), arrow(E, E, T)
EDT = arrow(E, D, T)
ATTR = arrow(ET, E, D, T)

#: constant name -> admissible types.  Degree adjectives have an attributive
#: type <<e,t>,<e,<d,t>>> and a predicative type <e,<d,t>>.
SIGNATURE: dict = {
    "g*": (E,), "b*": (E,), "r*": (E,), "bmw*": (E,), "et*": (E,),
    "car'": (ET,), "policeman'": (ET,), "professor'": (ET,), "building'": (ET,),
    "bmw'": (ET,),
    "own'": (EET,), "has'": (EET,),
    "fast'": (ATTR, EDT), "rich'": (ATTR, EDT), "high'": (ATTR, EDT),
    "P0": (EDT,),
}

KEYWORDS = {"lam", "forall", "exists", "iota", "atleast", "atmost"}


class TermSyntaxError(ValueError):
    pass


# ---------------------------------------------------------------- printing

def show_type(ty) -> str:
    return str(ty)


def show(term) -> str:
    return _show(term, {})


def _show(t, scope):
    if isinstance(t, Var):
        return t.name if scope.get(t.name) == t else f"{t.name}:{t.type}"
    if isinstance(t, Const):
        return t.name
    if isinstance(t, App):
        spine = []
        while isinstance(t, App):
            spine.append(t.arg)
            t = t.fn
        parts = [_show(t, scope)] + [_show(a, scope) for a in reversed(spine)]
        return "(" + " ".join(parts) + ")"
    if isinstance(t, CardQuant):
        inner = {**scope, t.var.name: t.var}
        return f"({t.kind} {t.n} {t.var.name}:{t.var.type} . {_show(t.body, inner)})"
    if isinstance(t, (Lam, Forall, Exists, Iota)):
        kw = {Lam: "lam", Forall: "forall", Exists: "exists", Iota: "iota"}[type(t)]
        inner = {**scope, t.var.name: t.var}
        return f"({kw} {t.var.name}:{t.var.type} . {_show(t.body, inner)})"
    if isinstance(t, And):
        return "(" + " & ".join(_show(a, scope) for a in t.args) + ")"
    if isinstance(t, Or):
        return "(" + " | ".join(_show(a, scope) for a in t.args) + ")"
    if isinstance(t, Implies):
        return f"({_show(t.left, scope)} -> {_show(t.right, scope)})"
    if isinstance(t, Greater):
        return f"({_show(t.left, scope)} > {_show(t.right, scope)})"
    if isinstance(t, Not):
        return f"(~ {_show(t.body, scope)})"
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------- pretty

def pretty(term) -> str:
    """Logician-style rendering, e.g. ``∃x∃d'[∀d[...] ∧ fast'(car')(x,d')]``."""
    return _pretty(term)


_SYM = {Lam: "λ", Forall: "∀", Exists: "∃", Iota: "ι"}


def _pretty(t, top=True):
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, App):
        spine = []
        while isinstance(t, App):
            spine.append(t.arg)
            t = t.fn
        spine.reverse()
        head = _pretty(t, False)
        if isinstance(t, (Lam,)):
            head = f"({head})"
        groups, cur = [], []
        for a in spine:
            ty = type_of(a)
            if ty in (E, D):
                cur.append(_pretty(a, True))
            else:
                if cur:
                    groups.append(cur)
                    cur = []
                groups.append([_pretty(a, True)])
        if cur:
            groups.append(cur)
        return head + "".join("(" + ",".join(g) + ")" for g in groups)
    if isinstance(t, (Lam, Forall, Exists, Iota, CardQuant)):
        if isinstance(t, CardQuant):
            sym = ("∃≥" if t.kind == "atleast" else "∃≤") + str(t.n)
        else:
            sym = _SYM[type(t)]
        body = t.body
        inner = _pretty(body, True)
        if isinstance(body, (Lam, Forall, Exists, Iota, CardQuant)):
            return f"{sym}{t.var.name}{inner}"
        if isinstance(t, Lam) and isinstance(body, (App, Var, Const)):
            return f"{sym}{t.var.name}.{inner}"
        return f"{sym}{t.var.name}[{inner}]"
    if isinstance(t, (And, Or)):
        op = " ∧ " if isinstance(t, And) else " ∨ "
        out = op.join(_wrap(a, t) for a in t.args)
        return out if top else f"({out})"
    if isinstance(t, Implies):
        out = f"{_wrap(t.left, t)} → {_wrap(t.right, t)}"
        return out if top else f"({out})"
    if isinstance(t, Greater):
        return f"{_pretty(t.left)} > {_pretty(t.right)}"
    if isinstance(t, Not):
        return "¬" + _pretty(t.body, False)
    raise TypeError(f"not a term: {t!r}")


def _wrap(child, parent):
    if isinstance(child, (And, Or, Implies)) and type(child) is not type(parent):
        return "(" + _pretty(child, True) + ")"
    return _pretty(child, False) if isinstance(child, (And, Or, Implies)) else _pretty(child, True)


# ---------------------------------------------------------------- reading

_TOKEN = re.compile(r"""
    \s*(?:
      (?P<arrow>->)
    | (?P<num>\d+)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*['*]*)
    | (?P<punct>[().:<>,&|~])
    )""", re.VERBOSE)


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TermSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def read_type(text: str):
    p = _Reader(_tokenize(text), SIGNATURE)
    ty = p.type_()
    p.end()
    return ty


def read_term(text: str, signature: dict | None = None):
    """Parse the textual term syntax; ``signature`` adds or overrides constants."""
    sig = dict(SIGNATURE)
    for k, v in (signature or {}).items():
        sig[k] = v if isinstance(v, tuple) else (v,)
    p = _Reader(_tokenize(text), sig)
    t = p.expr({})
    p.end()
    type_of(t)
    return t


class _Reader:
    def __init__(self, toks, sig):
        self.toks = toks
        self.i = 0
        self.sig = sig

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None)

    def take(self, value=None):
        kind, val = self.peek()
        if kind is None or (value is not None and val != value):
            raise TermSyntaxError(f"expected {value or 'token'}, got {val!r}")
        self.i += 1
        return val

    def end(self):
        if self.i != len(self.toks):
            raise TermSyntaxError(f"trailing input at token {self.peek()[1]!r}")

    def type_(self):
        kind, val = self.peek()
        if val == "<":
            self.take("<")
            a = self.type_()
            self.take(",")
            b = self.type_()
            self.take(">")
            return Arrow(a, b)
        if val in ("e", "d", "t"):
            self.take()
            return Basic(val)
        raise TermSyntaxError(f"bad type at {val!r}")

    def expr(self, scope):
        left = self.disj(scope)
        if self.peek()[1] == "->":
            self.take()
            return Implies(left, self.expr(scope))
        return left

    def disj(self, scope):
        parts = [self.conj(scope)]
        while self.peek()[1] == "|":
            self.take()
            parts.append(self.conj(scope))
        return disj(*parts) if len(parts) > 1 else parts[0]

    def conj(self, scope):
        parts = [self.neg(scope)]
        while self.peek()[1] == "&":
            self.take()
            parts.append(self.neg(scope))
        return conj(*parts) if len(parts) > 1 else parts[0]

    def neg(self, scope):
        if self.peek()[1] == "~":
            self.take()
            return Not(self.neg(scope))
        left = self.app(scope)
        if self.peek()[1] == ">":
            self.take()
            return Greater(left, self.app(scope))
        return left

    def app(self, scope):
        items = [self.atom(scope)]
        while True:
            kind, val = self.peek()
            if kind == "ident" or val == "(":
                items.append(self.atom(scope))
            else:
                break
        head, args = items[0], items[1:]
        if isinstance(head, tuple):  # overloaded constant awaiting its arguments
            head = self._resolve_overload(head, args)
        out = head
        for a in args:
            if isinstance(a, tuple):
                raise TermSyntaxError(f"ambiguous constant {a[0]} used as an argument")
            out = App(out, a)
        return out

    def _resolve_overload(self, pending, args):
        name, types = pending
        if not args:
            raise TermSyntaxError(f"ambiguous constant {name} without arguments")
        first = type_of(args[0]) if not isinstance(args[0], tuple) else None
        for ty in types:
            if isinstance(ty, Arrow) and ty.arg == first:
                return Const(name, ty)
        raise TermSyntaxError(f"no type of {name} accepts {first}")

    def atom(self, scope):
        kind, val = self.peek()
        if val == "(":
            self.take()
            t = self.expr(scope)
            self.take(")")
            return t
        if kind == "ident" and val in KEYWORDS:
            return self.binder(scope)
        if kind == "ident":
            self.take()
            if self.peek()[1] == ":":
                self.take()
                return Var(val, self.type_())
            if val in scope:
                return scope[val]
            if val in self.sig:
                types = self.sig[val]
                return Const(val, types[0]) if len(types) == 1 else (val, types)
            raise TermSyntaxError(f"unbound identifier {val!r}")
        raise TermSyntaxError(f"unexpected token {val!r}")

    def binder(self, scope):
        kw = self.take()
        n = None
        if kw in ("atleast", "atmost"):
            n = int(self.take())
        name = self.take()
        self.take(":")
        v = Var(name, self.type_())
        self.take(".")
        body = self.expr({**scope, name: v})
        if kw == "lam":
            return Lam(v, body)
        if kw == "forall":
            return Forall(v, body)
        if kw == "exists":
            return Exists(v, body)
        if kw == "iota":
            return Iota(v, body)
        return CardQuant(kw, n, v, body)
