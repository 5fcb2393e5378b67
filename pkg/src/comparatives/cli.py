"""Command-line front end.

    comparatives parse  "George owns a faster car than Bill"
    comparatives judge  --corpus
    comparatives lf     "George owns a faster car than Bill" --derivation
    comparatives eval   "George is richer than Bill" --model M0
    comparatives baseline heim "George owns at least two faster cars than Bill" --model Mdagger
    comparatives access "George owns a faster car than Bill"

Exit status: 0 success, 1 unknown word / no parse / unsupported input,
2 model or evaluation error.
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .grammar import NoParse, NotSupported, UnknownWord, bracket, classify_construction, parse, render
from .heim import build_heim, eval_heim
from .lf import NotApplicable, judge_sentence, reconstruct
from .models import (
    DimensionMismatch, MissingDenotation, Model, ModelError, Undefined, accessibility,
    evaluate, load_fixture, unmeasured,
)
from .pipeline import analyze
from .termio import pretty, show

OK, INPUT_ERROR, EVAL_ERROR = 0, 1, 2


class _EvalError(Exception):
    pass


def _corpus(path):
    if path == "-":
        text = resources.files("comparatives").joinpath("data/corpus.tsv").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    items = []
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            cols = line.split("\t")
            items.append((cols[0], cols[1]))
    return items


def load_model(name: str) -> Model:
    """A model file path, or the name of a shipped fixture."""
    if Path(name).exists() or name.endswith(".json"):
        return Model.load(name)
    return load_fixture(name)


class Printer:
    def __init__(self, machine: bool, out):
        self.machine = machine
        self.out = out

    def emit(self, kind, *fields, plain=None):
        if self.machine:
            print("\t".join([kind, *map(str, fields)]), file=self.out)
        else:
            print(plain if plain is not None else f"{kind}: {' '.join(map(str, fields))}", file=self.out)

    def form(self, term):
        return show(term) if self.machine else pretty(term)


def _truth(v):
    return "undefined" if v is None else str(bool(v)).lower()


def _run_one(args, sentence, p: Printer, model):
    cmd = args.command
    if cmd == "judge":
        j = judge_sentence(sentence)
        p.emit("judgment", j.verdict, j.rule, plain=f"{j.verdict}\t{j.rule}\t{j.explanation}")
        return
    if cmd == "parse":
        for k, tree in enumerate(parse(sentence), 1):
            p.emit("parse", k, classify_construction(tree), bracket(tree),
                   plain=f"[{k}] {classify_construction(tree)} {render(tree)}")
        return
    if cmd == "baseline":
        _baseline(sentence, p, model, args.force)
        return
    for k, a in enumerate(analyze(sentence, force=args.force), 1):
        p.emit("parse", k, a.tag, bracket(a.tree), plain=f"[{k}] {a.tag} {render(a.tree)}")
        p.emit("judgment", k, a.judgment.verdict, a.judgment.rule,
               plain=f"  judgment: {a.judgment.verdict} ({a.judgment.rule})")
        if cmd == "lf" and args.derivation and a.tag == "WRA":
            for line in reconstruct(a.tree).derivation().splitlines():
                p.emit("derivation", k, line, plain=f"  {line}")
        if a.skipped:
            p.emit("skipped", k, a.skipped, plain=f"  skipped: {a.skipped}")
        for r in a.readings:
            p.emit("reading", k, r.scope, p.form(r.form), plain=f"  reading {r.scope}: {p.form(r.form)}")
            if cmd == "lf" and args.trace:
                for s in r.steps:
                    p.emit("step", k, r.scope, s.mode, s.node, p.form(s.result),
                           plain=f"    {s.mode:<3} {s.node}  =>  {p.form(s.result)}")
            if cmd == "eval":
                p.emit("truth", k, r.scope, _truth(_evaluate(r.form, model)),
                       plain=f"    truth: {_truth(_evaluate(r.form, model))}")
                for name, dim in unmeasured(r.form, model):
                    p.emit("note", k, r.scope, f"{name} has no {dim}", plain=f"    note: {name} has no {dim}")
            if cmd == "access":
                rep = accessibility(r)
                for ref in rep.accessible:
                    p.emit("accessible", k, r.scope, ref.var.name, _content(ref, p),
                           plain=f"    accessible   {ref.var.name}: {_content(ref, p)}")
                for ref in rep.inaccessible:
                    p.emit("inaccessible", k, r.scope, ref.var.name, _content(ref, p),
                           plain=f"    inaccessible {ref.var.name}: {_content(ref, p)}")


def _content(ref, p):
    return " & ".join(p.form(c) for c in ref.content)


def _evaluate(form, model):
    try:
        return evaluate(form, model)
    except (MissingDenotation, DimensionMismatch, Undefined) as exc:
        raise _EvalError(f"{type(exc).__name__}: {exc}") from exc


def _baseline(sentence, p, model, force):
    for k, a in enumerate(analyze(sentence, force=force), 1):
        p.emit("parse", k, a.tag, bracket(a.tree), plain=f"[{k}] {a.tag} {render(a.tree)}")
        try:
            h = build_heim(a.tree)
        except NotSupported as exc:
            p.emit("heim", k, "unsupported", exc, plain=f"  heim: unsupported ({exc})")
        else:
            p.emit("heim", k, h, _truth(eval_heim(h, model)),
                   plain=f"  heim: {h}\n    truth: {_truth(eval_heim(h, model))}")
        if a.skipped:
            p.emit("skipped", k, a.skipped, plain=f"  skipped: {a.skipped}")
        for r in a.readings:
            v = _truth(_evaluate(r.form, model))
            p.emit("reading", k, r.scope, p.form(r.form), v,
                   plain=f"  reading {r.scope}: {p.form(r.form)}\n    truth: {v}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="comparatives", description="Analyse English comparative sentences.")
    opts = argparse.ArgumentParser(add_help=False)
    opts.add_argument("--corpus", nargs="?", const="-", metavar="FILE",
                      help="run over a TSV corpus (default: the shipped one)")
    opts.add_argument("--force", action="store_true", help="compose parses judged bad")
    opts.add_argument("--format", choices=("plain", "machine"), default="plain")
    sentence = argparse.ArgumentParser(add_help=False)
    sentence.add_argument("sentence", nargs="?", help="sentence to analyse")
    common = [sentence, opts]
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("parse", parents=common, help="labeled bracketings")
    sub.add_parser("judge", parents=common, help="acceptability")
    lf = sub.add_parser("lf", parents=common, help="logical forms")
    lf.add_argument("--derivation", action="store_true", help="print LF derivation steps")
    lf.add_argument("--trace", action="store_true", help="print composition steps")
    ev = sub.add_parser("eval", parents=common, help="truth in a model")
    ev.add_argument("--model", required=True, help="model JSON file or fixture name")
    bl = sub.add_parser("baseline", parents=[opts], help="direct-analysis comparison")
    bl.add_argument("which", choices=("heim",))
    bl.add_argument("sentence", nargs="?", help="sentence to analyse")
    bl.add_argument("--model", required=True, help="model JSON file or fixture name")
    sub.add_parser("access", parents=common, help="discourse referent accessibility")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if (args.sentence is None) == (args.corpus is None):
        print("error: give exactly one of SENTENCE or --corpus", file=sys.stderr)
        return INPUT_ERROR
    model = None
    if hasattr(args, "model"):
        try:
            model = load_model(args.model)
        except ModelError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EVAL_ERROR
    try:
        items = _corpus(args.corpus) if args.corpus is not None else [(None, args.sentence)]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    p = Printer(args.format == "machine", out)
    status = OK
    for ident, sentence in items:
        if ident is not None:
            p.emit("sentence", ident, sentence, plain=f"# {ident} {sentence}")
        try:
            _run_one(args, sentence, p, model)
        except (UnknownWord, NoParse, NotSupported, NotApplicable) as exc:
            p.emit("error", type(exc).__name__, exc, plain=f"error: {type(exc).__name__}: {exc}")
            status = max(status, INPUT_ERROR)
        except _EvalError as exc:
            p.emit("error", "evaluation", exc, plain=f"error: {exc}")
            status = EVAL_ERROR
    return status


def main_exit():  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
