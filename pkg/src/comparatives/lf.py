"""Logical-form construction for wide-reading attributive comparatives.

The derivation runs in a fixed order, each step logged with a snapshot::

    surface   [IP George owns [NP [NP a faster car] [PP than Bill]]]
    QR NP     [IP [NP ...]_i [IP George owns t_i]]
    QR subj   [IP [NP ...]_i [IP George_1 [IP t_1 owns t_i]]]
    copy IP   ... [PP than [IP Bill_2 [IP t_2 owns t_?]]] ...
    WH        ... [PP than [CP WH_j C [IP Bill_2 [IP t_2 owns t_j]]]] ...   (j = i)

Index allocation is fixed: the comparative NP chain is ``i``, the matrix
subject ``1``, the complement NP ``2`` and the WH operator ``j``, which is
resolved to ``i`` because the copied object trace is a strict copy.
"""
from __future__ import annotations

from dataclasses import dataclass

from .grammar import (
    Tree, classify_construction, default_lexicon, parse, render, trace,
)

WH_WIDE = "WH>NP"
NP_WIDE = "NP>WH"
DIRECT = "direct"

VERDICTS = ("ok", "marginal", "bad")


class NotApplicable(ValueError):
    pass


class RedundantQr(ValueError):
    pass


@dataclass(frozen=True)
class LfTree:
    root: Tree
    log: tuple = ()
    aliases: tuple = ()

    def resolve(self, index):
        return dict(self.aliases).get(index, index)

    def step(self, name: str, root: Tree, aliases=()) -> LfTree:
        return LfTree(root, self.log + ((name, render(root)),), self.aliases + tuple(aliases))

    def derivation(self) -> str:
        return "\n".join(f"({k}) {name}: {snap}" for k, (name, snap) in enumerate(self.log, 1))

    def __str__(self):
        return render(self.root)


def lower_topic(tree: Tree) -> Tree:
    """Put a topicalized object back into its trace position."""
    kids = tree.children
    if tree.label == "IP" and kids and kids[0].index == "k" and kids[-1].label == "IP":
        topic = kids[0].with_(index=None)
        inner = kids[-1]
        return inner.with_(children=tuple(
            topic if (c.label == "t" and c.index == "k") else c for c in inner.children))
    return tree


def start(tree) -> LfTree:
    if isinstance(tree, LfTree):
        return tree
    root = lower_topic(tree)
    return LfTree(root, (("surface", render(root)),))


def qr_comparative_np(tree) -> LfTree:
    """Adjoin the WRA comparative NP to IP, leaving ``t_i``."""
    lf = start(tree)
    root = lf.root
    tag = classify_construction(root)
    if tag == "PLAIN":
        return lf
    if tag != "WRA":
        raise NotApplicable(f"no comparative NP movement for {tag} structures")
    kids = root.children
    if root.label != "IP" or len(kids) < 3 or kids[2].tag != "WRA":
        if root.label == "IP" and kids and kids[0].index == "i":
            raise RedundantQr("comparative NP already raised")
        raise NotApplicable("comparative NP is not a clausal object")
    np = kids[2]
    inner = root.with_(children=kids[:2] + (trace("i"),) + kids[3:])
    return lf.step("QR comparative NP", Tree("IP", (np.with_(index="i"), inner)))


def qr_correlate(lf: LfTree) -> LfTree:
    """Adjoin the subject correlate to the matrix IP, leaving ``t_1``."""
    root = lf.root
    if not (root.label == "IP" and len(root.children) == 2 and root.children[0].index == "i"):
        raise NotApplicable("expects the output of qr_comparative_np")
    matrix = root.children[1]
    subj = matrix.children[0]
    if subj.index is not None or subj.label == "t":
        raise RedundantQr("correlate already raised")
    lowered = Tree("IP", (trace("1"),) + matrix.children[1:])
    raised = Tree("IP", (subj.with_(index="1"), lowered))
    return lf.step("QR correlate", root.with_(children=(root.children[0], raised)))


def _retrace(node: Tree, mapping: dict) -> Tree:
    if node.label == "t":
        return node.with_(index=mapping.get(node.index, node.index))
    return node.with_(children=tuple(_retrace(c, mapping) for c in node.children if c.label != "Adv"))


def acd_reconstruct(lf: LfTree) -> LfTree:
    """Copy the matrix IP into the complement and bind its gap by WH."""
    root = lf.root
    tag = classify_construction(root)
    if tag != "WRA":
        raise NotApplicable(f"reconstruction does not apply to {tag} structures")
    try:
        np, matrix = root.children
        corr, target = matrix.children
        base, pp = np.children
        than, compl = pp.children
    except ValueError:
        raise NotApplicable("expects the output of qr_correlate") from None
    if corr.index != "1" or target.label != "IP" or np.index != "i" or compl.label in ("IP", "CP"):
        raise NotApplicable("expects the output of qr_correlate")
    # subject trace: i-copy, re-indexed by the complement NP; object trace: strict copy, index pending
    compl = compl.with_(index="2")
    copied = _retrace(target, {"1": "2", "i": "?"})
    pp46 = pp.with_(children=(than, Tree("IP", (compl, copied))))
    lf = lf.step("copy IP", root.with_(children=(np.with_(children=(base, pp46)), matrix)))
    # WH_j is antecedent-linked to the comparative NP, so the strict copy's index j is i
    bound = _retrace(target, {"1": "2", "i": "j"})
    cp = Tree("CP", (Tree("WH", index="j"), Tree("C"), Tree("IP", (compl, bound))))
    pp49 = pp.with_(children=(than, cp))
    return lf.step("WH binding", root.with_(children=(np.with_(children=(base, pp49)), matrix)),
                   aliases=(("j", "i"),))


def reconstruct(tree) -> LfTree:
    """Full WRA derivation from a surface tree."""
    return acd_reconstruct(qr_correlate(qr_comparative_np(tree)))


def binding_errors(lf: LfTree) -> list:
    """Traces not bound by exactly one c-commanding indexed NP or WH."""
    errors = []

    def walk(node, env):
        kids = node.children
        for k, kid in enumerate(kids):
            local = env + [lf.resolve(s.index) for j, s in enumerate(kids)
                           if j != k and s.index is not None and s.label != "t"]
            if kid.label == "t":
                n = local.count(lf.resolve(kid.index))
                if n != 1:
                    errors.append((kid.index, n))
            else:
                walk(kid, local)

    walk(lf.root, [])
    return errors


def complement_cp(lf: LfTree) -> Tree | None:
    for n in lf.root.walk():
        if n.label == "CP":
            return n
    return None


def _np_kind(np: Tree, lexicon) -> str:
    if np.word is not None:
        return "name"
    if any(c.label == "Coord" for c in np.children):
        return "coord"
    return lexicon.lookup(np.children[0].word).det_class


def enumerate_scopes(tree, lexicon=None) -> list:
    """Relative scope of the complement NP and the WH operator."""
    lexicon = lexicon or default_lexicon()
    cp = complement_cp(tree) if isinstance(tree, LfTree) else None
    if cp is None:
        return [DIRECT]
    np = cp.children[2].children[0]
    kind = _np_kind(np, lexicon)
    if kind == "npi":
        return [WH_WIDE]  # needs the downward-entailing restriction of the degree quantifier
    if kind == "universal":
        return [NP_WIDE]
    return [WH_WIDE, NP_WIDE]


# ---------------------------------------------------------------- acceptability

@dataclass(frozen=True)
class Judgment:
    verdict: str
    rule: str
    explanation: str

    def __str__(self):
        return f"{self.verdict} ({self.rule})"


def complement_np(host: Tree) -> Tree:
    pp = host.children[1]
    inner = pp.children[1]
    return inner.children[1] if inner.label == "SC" else inner


def judge(tree: Tree, lexicon=None) -> Judgment:
    """Acceptability of a parsed structure from its determiner, tag and complement position."""
    lexicon = lexicon or default_lexicon()
    tag = classify_construction(tree)
    if tag == "PLAIN":
        return Judgment("ok", "no-complement", "no comparative complement, determiner unrestricted")
    if tag in ("PRED", "POSTNOM"):
        return Judgment("ok", "ap-internal", "complement inside AP, outside the determiner's scope")
    host = tree.find_tag(tag)
    det = lexicon.lookup(host.children[0].children[0].word)
    cls = det.det_class
    if cls in ("universal", "definite"):
        return Judgment("bad", "indefiniteness-effect",
                        f"{cls} determiner '{det.form}' with an NP-adjoined complement")
    if cls == "npi":
        return Judgment("bad", "unlicensed-npi", f"'{det.form}' outside a downward-entailing context")
    if tag == "NRA" and _np_kind(complement_np(host), lexicon) != "name":
        return Judgment("bad", "nra-nonreferential",
                        "narrow attributive complements admit only referential NPs")
    if cls == "cardinal":
        return Judgment("marginal", "english-cardinal", f"'{det.form}' on an English attributive comparative")
    return Judgment("ok", "indefinite", "indefinite comparative NP with adjoined complement")


def judge_sentence(sentence, lexicon=None) -> Judgment:
    """Best judgment over all parses of a sentence."""
    verdicts = [judge(t, lexicon) for t in parse(sentence, lexicon)]
    return min(verdicts, key=lambda j: VERDICTS.index(j.verdict))
