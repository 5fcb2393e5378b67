"""Lexicon and parser for the English comparative fragment.

The parser is a small backtracking recognizer over a fixed set of
constructions; it returns every structure the fragment allows, each with
the comparative-hosting node tagged:

* ``WRA``     ``[NP [NP Det [N' A N]] [PP than NP]]``           complement adjoined to NP
* ``NRA``     ``[NP [NP Det [N' A N]] [PP than [SC WH NP]]]``   small-clause complement
* ``PRED``    ``[AP [AP A] [PP than [SC WH NP]]]``             predicative
* ``POSTNOM`` ``[NP Det [N' N [AP A [PP than NP]]]]``          post-nominal, AP-internal
* ``PLAIN``   no comparative complement
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from importlib import resources
from typing import Iterator, Sequence

TAGS = ("WRA", "NRA", "PRED", "POSTNOM", "PLAIN")

CATEGORIES = {
    "ProperName", "Det", "CardDet", "NPI", "N", "A", "V", "Copula",
    "CompParticle", "Coord", "Adv", "Punct", "Temporal",
}

# lexical category -> tree label of its preterminal
_LABEL = {
    "ProperName": "NP", "Det": "Det", "CardDet": "Det", "NPI": "Det", "N": "N",
    "A": "A", "V": "V", "Copula": "V", "CompParticle": "P", "Coord": "Coord",
    "Adv": "Adv", "Punct": "Punct",
}


class UnknownWord(ValueError):
    pass


class NoParse(ValueError):
    pass


class NotSupported(ValueError):
    pass


# ---------------------------------------------------------------- lexicon

@dataclass(frozen=True)
class LexEntry:
    form: str
    category: str
    key: str
    attrs: tuple = ()

    def get(self, name, default=None):
        for k, v in self.attrs:
            if k == name:
                return v
        return default

    def has(self, name) -> bool:
        return any(k == name for k, _ in self.attrs)

    @property
    def det_class(self):
        return self.get("class")

    @property
    def dimension(self):
        return self.get("dim")

    @property
    def comparative(self) -> bool:
        return self.get("degree") == "comparative"

    @property
    def number(self):
        return self.get("num", "any")

    @property
    def animate(self) -> bool:
        return self.has("animate")


def _parse_attrs(text: str) -> tuple:
    out = []
    for item in filter(None, (p.strip() for p in text.split(";"))):
        k, _, v = item.partition("=")
        out.append((k, v or True))
    return tuple(out)


class Lexicon:
    def __init__(self, entries: Sequence[LexEntry]):
        self.entries = tuple(entries)
        self._by_form = {}
        for e in self.entries:
            if e.category not in CATEGORIES:
                raise ValueError(f"unknown category {e.category!r} for {e.form!r}")
            if e.category == "A" and not e.dimension:
                raise ValueError(f"gradable adjective {e.form!r} has no dimension")
            self._by_form.setdefault(e.form.lower(), e)
        self.max_len = max(len(e.form.split()) for e in self.entries)

    @classmethod
    def from_text(cls, text: str) -> Lexicon:
        entries = []
        for line in text.splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t") + ["", "", ""]
            form, cat, key, attrs = (c.strip() for c in cols[:4])
            entries.append(LexEntry(form, cat, key, _parse_attrs(attrs)))
        return cls(entries)

    @classmethod
    def from_file(cls, path) -> Lexicon:
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def lookup(self, form: str) -> LexEntry:
        try:
            return self._by_form[form.lower()]
        except KeyError:
            raise UnknownWord(form) from None

    def dimensions(self) -> dict:
        """Adjective constant name -> measure dimension."""
        return {e.key: e.dimension for e in self.entries if e.category == "A"}

    def tokenize(self, sentence) -> list:
        words = split_words(sentence) if isinstance(sentence, str) else list(sentence)
        out, i = [], 0
        while i < len(words):
            for n in range(min(self.max_len, len(words) - i), 0, -1):
                form = " ".join(words[i:i + n]).lower()
                if form in self._by_form:
                    out.append(self._by_form[form])
                    i += n
                    break
            else:
                raise UnknownWord(words[i])
        return out


def split_words(sentence: str) -> list:
    return re.findall(r"[^\s,.]+|,", sentence.strip().rstrip("."))


_DEFAULT = None


def default_lexicon() -> Lexicon:
    global _DEFAULT
    if _DEFAULT is None:
        text = resources.files("comparatives").joinpath("data/lexicon.tsv").read_text("utf-8")
        _DEFAULT = Lexicon.from_text(text)
    return _DEFAULT


# ---------------------------------------------------------------- trees

@dataclass(frozen=True)
class Tree:
    """Constituent tree node.  Preterminals carry ``word``; empty categories
    are ``t`` (trace), ``WH`` and ``C``."""
    label: str
    children: tuple = ()
    word: str | None = None
    index: str | None = None
    tag: str | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def with_(self, **kw) -> Tree:
        return replace(self, **kw)

    def words(self) -> list:
        if self.word is not None:
            return self.word.split()
        return [w for c in self.children for w in c.words()]

    def walk(self) -> Iterator[Tree]:
        yield self
        for c in self.children:
            yield from c.walk()

    def find_tag(self, *tags) -> Tree | None:
        for n in self.walk():
            if n.tag in tags:
                return n
        return None

    def __str__(self):
        return render(self)


def trace(index: str) -> Tree:
    return Tree("t", index=index)


def leaf(entry: LexEntry, index=None) -> Tree:
    return Tree(_LABEL[entry.category], word=entry.form, index=index)


def classify_construction(tree: Tree) -> str:
    node = tree.find_tag("WRA", "NRA", "PRED", "POSTNOM")
    return node.tag if node is not None else "PLAIN"


# ---------------------------------------------------------------- printing

def bracket(tree: Tree) -> str:
    """Full labeled bracketing; :func:`read_bracket` inverts it exactly."""
    suffix = f"_{tree.index}" if tree.index is not None else ""
    if tree.label == "t":
        return f"t{suffix}"
    if tree.label in ("WH", "C") and tree.is_leaf and tree.word is None:
        return f"{tree.label}{suffix}"
    label = tree.label + (f":{tree.tag}" if tree.tag else "")
    if tree.word is not None:
        return f"[{label} {tree.word}]{suffix}"
    return f"[{label} " + " ".join(bracket(c) for c in tree.children) + f"]{suffix}"


_TRANSPARENT = {"V", "Det", "A", "N", "P", "Coord", "Adv", "Punct", "N'", "VP"}


def render(tree: Tree) -> str:
    """Labeled bracketing in the compact style of the linguistics literature,
    e.g. ``[IP George owns [NP [NP a faster car] [PP than Bill]]]``."""
    suffix = f"_{tree.index}" if tree.index is not None else ""
    if tree.label == "t":
        return f"t{suffix}"
    if tree.label in ("WH", "C") and tree.word is None and tree.is_leaf:
        return f"{tree.label}{suffix}"
    if tree.word is not None:
        return tree.word + suffix
    inner = " ".join(render(c) for c in tree.children)
    if tree.label in _TRANSPARENT:
        return inner
    return f"[{tree.label} {inner}]{suffix}"


_BTOK = re.compile(r"\[|\](?:_[^\s\[\]]+)?|[^\s\[\]]+")


def read_bracket(text: str) -> Tree:
    toks = _BTOK.findall(text)
    tree, i = _read_node(toks, 0)
    if i != len(toks):
        raise ValueError(f"trailing material in bracketing: {toks[i:]}")
    return tree


def _special(tok: str) -> Tree:
    name, _, idx = tok.partition("_")
    return Tree(name, index=idx or None)


def _read_node(toks, i):
    if toks[i] != "[":
        return _special(toks[i]), i + 1
    label, _, tag = toks[i + 1].partition(":")
    i += 2
    items = []
    while not toks[i].startswith("]"):
        if toks[i] == "[":
            kid, i = _read_node(toks, i)
            items.append(kid)
        else:
            items.append(toks[i])
            i += 1
    index = toks[i][2:] or None
    if all(isinstance(x, str) for x in items):
        return Tree(label, word=" ".join(items), index=index, tag=tag or None), i + 1
    kids = tuple(_special(x) if isinstance(x, str) else x for x in items)
    return Tree(label, kids, index=index, tag=tag or None), i + 1


# ---------------------------------------------------------------- parsing

def parse(sentence, lexicon: Lexicon | None = None) -> list:
    """All fragment structures for ``sentence`` (a string or word list), ordered by construction tag."""
    lexicon = lexicon or default_lexicon()
    toks = lexicon.tokenize(sentence)
    if any(t.category == "Temporal" for t in toks):
        raise NotSupported("temporal comparative complements are not covered by the analysis")
    p = _Parser(toks)
    trees = []
    for tree, j in p.sentence(0):
        if j == len(toks) and tree not in trees:
            trees.append(tree)
    if not trees:
        raise NoParse(" ".join(t.form for t in toks))
    return sorted(trees, key=lambda t: TAGS.index(classify_construction(t)))


class _Parser:
    def __init__(self, toks):
        self.toks = toks

    def at(self, i, *cats):
        return i < len(self.toks) and self.toks[i].category in cats

    def sentence(self, i):
        yield from self.clause(i)
        yield from self.topicalized(i)
        yield from ((np, j) for np, j, _ in self.object_np(i))

    def clause(self, i):
        if not self.at(i, "ProperName"):
            return
        subj = leaf(self.toks[i])
        if self.at(i + 1, "V") and self.toks[i + 1].number in ("sg", "any"):
            verb = leaf(self.toks[i + 1])
            for obj, j, _ in self.object_np(i + 2):
                yield Tree("IP", (subj, verb, obj)), j
        if self.at(i + 1, "Copula"):
            cop = leaf(self.toks[i + 1])
            for ap, j in self.pred_ap(i + 2):
                yield Tree("IP", (subj, cop, ap)), j

    def topicalized(self, i):
        for obj, j, _ in self.object_np(i):
            if not (self.at(j, "Punct") and self.at(j + 1, "ProperName") and self.at(j + 2, "V")
                    and self.at(j + 3, "Adv")):
                continue
            subj, verb, adv = (leaf(self.toks[k]) for k in (j + 1, j + 2, j + 3))
            inner = Tree("IP", (subj, verb, trace("k"), adv))
            yield Tree("IP", (obj.with_(index="k"), leaf(self.toks[j]), inner)), j + 4

    def pred_ap(self, i):
        if not self.at(i, "A"):
            return
        a = self.toks[i]
        head = Tree("AP", (leaf(a),))
        yield head.with_(tag="PLAIN"), i + 1
        if a.comparative and self.at(i + 1, "CompParticle"):
            than = leaf(self.toks[i + 1])
            for np, j, info in self.complement(i + 2):
                pp = Tree("PP", (than, Tree("SC", (Tree("WH"), np))))
                yield Tree("AP", (head, pp), tag="PRED"), j

    def determiner(self, i):
        return self.toks[i] if self.at(i, "Det", "CardDet", "NPI") else None

    def object_np(self, i):
        """Yield (tree, next, info) for object / standalone NPs."""
        det = self.determiner(i)
        if det is None:
            return
        d = leaf(det)
        # Det N  /  Det A N
        if self.at(i + 1, "N") and _agree(det, self.toks[i + 1]):
            n = self.toks[i + 1]
            yield Tree("NP", (d, leaf(n)), tag="PLAIN"), i + 2, None
            # post-nominal: Det N A-er than NP
            if self.at(i + 2, "A") and self.toks[i + 2].comparative and self.at(i + 3, "CompParticle"):
                a, than = leaf(self.toks[i + 2]), leaf(self.toks[i + 3])
                for np, j, info in self.complement(i + 4):
                    ap = Tree("AP", (a, Tree("PP", (than, np))), tag="POSTNOM")
                    yield Tree("NP", (d, Tree("N'", (leaf(n), ap)))), j, info
        if self.at(i + 1, "A") and self.at(i + 2, "N") and _agree(det, self.toks[i + 2]):
            a, n = self.toks[i + 1], self.toks[i + 2]
            base = Tree("NP", (d, Tree("N'", (leaf(a), leaf(n)))))
            yield base.with_(tag="PLAIN"), i + 3, None
            if a.comparative and self.at(i + 3, "CompParticle"):
                than = leaf(self.toks[i + 3])
                for np, j, info in self.complement(i + 4):
                    if info["animate"]:
                        yield Tree("NP", (base, Tree("PP", (than, np))), tag="WRA"), j, info
                    sc = Tree("SC", (Tree("WH"), np))
                    yield Tree("NP", (base, Tree("PP", (than, sc))), tag="NRA"), j, info

    def complement(self, i):
        """Complement NPs: names, name coordinations, Det N."""
        if self.at(i, "ProperName"):
            e = self.toks[i]
            yield leaf(e), i + 1, {"referential": True, "animate": e.animate}
            if self.at(i + 1, "Coord") and self.at(i + 2, "ProperName"):
                e2 = self.toks[i + 2]
                np = Tree("NP", (leaf(e), leaf(self.toks[i + 1]), leaf(e2)))
                yield np, i + 3, {"referential": False, "animate": e.animate and e2.animate}
        det = self.determiner(i)
        if det is not None and self.at(i + 1, "N") and _agree(det, self.toks[i + 1]):
            n = self.toks[i + 1]
            yield (Tree("NP", (leaf(det), leaf(n))), i + 2,
                   {"referential": False, "animate": n.animate})


def _agree(det: LexEntry, noun: LexEntry) -> bool:
    return det.number == "any" or det.number == noun.number
