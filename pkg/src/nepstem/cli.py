"""Command-line entry point.

Machine-readable output (tab separated, LF terminated) goes to stdout or
``--output``; human-readable summaries and diagnostics go to stderr.

Exit status: 0 success, 1 usage error, 2 data error.
"""

import argparse
import contextlib
import sys
from pathlib import Path

from . import __version__
from .classify import (
    build_features,
    evaluate_model,
    load_model,
    save_model,
    split_corpus,
    train,
)
from .errors import EmptyAfterNormalization, NepstemError
from .ir import build_index, load_index, query, save_index
from .normalize import normalize_text
from .paice import evaluate, format_percent, load_concept_groups
from .rules import default_rules_dir, load_rule_set, rule_file_checksums, validate_rule_set
from .stemmer import stem
from .text import load_corpus

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _err(msg):
    print(msg, file=sys.stderr)


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _input_lines(path):
    if path is None or path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _rules(path):
    directory = Path(path) if path else default_rules_dir()
    if not directory.is_dir():
        raise NepstemError(f"rules directory not found: {directory}")
    return load_rule_set(directory)


def cmd_normalize(args):
    with _output(args.output) as out:
        for line in _input_lines(args.input):
            out.write(normalize_text(line.strip()) + "\n")


def cmd_stem(args):
    rs = _rules(args.rules)
    with _output(args.output) as out:
        for line in _input_lines(args.input):
            word = line.strip()
            if not word:
                continue
            try:
                result = stem(word, rs)
            except EmptyAfterNormalization:
                _err(f"skipped {word!r}: empty after normalization")
                continue
            out.write(f"{word}\t{result.stem}\n")
            if args.trace:
                for step in result.trace:
                    out.write(step.to_tsv() + "\n")


def cmd_validate_rules(args):
    diagnostics = validate_rule_set(_rules(args.rules))
    with _output(args.output) as out:
        for d in diagnostics:
            out.write(f"{d}\n")
    _err(f"{len(diagnostics)} diagnostic(s)")


def cmd_eval_paice(args):
    rs = _rules(args.rules)
    groups = load_concept_groups(args.groups)
    report = evaluate(groups, rs)
    with _output(args.output) as out:
        for name, value in report.rows():
            out.write(f"{name}\t{value:.6f}\n" if isinstance(value, float) else f"{name}\t{value}\n")
    _err(
        f"{len(groups.groups)} groups, {len(groups.words)} words: "
        f"UI = {format_percent(report.ui)}, OI = {format_percent(report.oi)}"
    )


def cmd_ir_index(args):
    rs = _rules(args.rules) if args.rules else None
    ix = build_index(load_corpus(args.corpus), rs)
    save_index(ix, args.out)
    mode = "stemmed" if ix.stemmed else "unstemmed"
    _err(f"indexed {ix.n_docs} documents, {len(ix.df)} terms ({mode})")


def cmd_ir_query(args):
    ix = load_index(args.index)
    rs = _rules(args.rules) if ix.stemmed else None
    if args.rules and not ix.stemmed:
        raise NepstemError("index is unstemmed; --rules cannot be used with it")
    with _output(args.output) as out:
        for r in query(ix, args.query, rs, args.k):
            out.write(f"{r.rank}\t{r.doc_id}\t{r.score:.6f}\n")


def cmd_classify_train(args):
    rs = _rules(args.rules) if args.rules else None
    corpus = load_corpus(args.corpus)
    train_set, test_set = split_corpus(corpus, args.split, args.seed)
    features = build_features(train_set, rs, raw_counts=args.raw_counts)
    model = train(features, [d.label for d in train_set], alpha=args.alpha)
    model.train_ids = [d.id for d in train_set]
    save_model(model, args.out)
    _err(
        f"trained on {len(train_set)} documents ({len(test_set)} held out), "
        f"{len(model.classes)} classes, vocabulary {len(model.vocabulary)}"
    )


def cmd_classify_eval(args):
    model = load_model(args.model)
    rs = _rules(args.rules) if model.stemmed else None
    if args.rules and not model.stemmed:
        raise NepstemError("model is unstemmed; --rules cannot be used with it")
    corpus = load_corpus(args.corpus)
    # documents the model was trained on are never scored
    seen = set(model.train_ids)
    test = type(corpus)([d for d in corpus if d.id not in seen])
    if not len(test):
        raise NepstemError("no held-out documents left to evaluate")
    metrics = evaluate_model(model, test, rs)
    with _output(args.output) as out:
        out.write(f"micro_f1\t{metrics.micro_f1:.6f}\n")
        out.write(f"accuracy\t{metrics.accuracy:.6f}\n")
        out.write(f"vocabulary_size\t{metrics.vocabulary_size}\n")
        out.write(f"n_documents\t{metrics.n_documents}\n")
        out.write("confusion\t" + "\t".join(metrics.classes) + "\n")
        for label, row in zip(metrics.classes, metrics.confusion):
            out.write(label + "\t" + "\t".join(map(str, row)) + "\n")
    _err(f"micro-F1 {metrics.micro_f1:.4f} on {metrics.n_documents} documents")


def _version_text():
    lines = [f"nepstem {__version__}"]
    for name, digest in sorted(rule_file_checksums(default_rules_dir()).items()):
        lines.append(f"{name}\tsha256:{digest}")
    return "\n".join(lines)


def build_parser():
    parser = _Parser(prog="nepstem", description="Rule-based Nepali stemmer and evaluation tools.")
    parser.add_argument("--version", action="store_true", help="print version and rule checksums")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_text, subparsers=sub):
        p = subparsers.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write results here instead of stdout")
        return p

    p = add("normalize", cmd_normalize, "normalize words, one per line")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")

    p = add("stem", cmd_stem, "stem words, one per line")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--rules", help="rules directory (default: bundled seed rules)")
    p.add_argument("--trace", action="store_true", help="emit the applied rule steps")

    p = add("validate-rules", cmd_validate_rules, "list diagnostics for a rules directory")
    p.add_argument("--rules", help="rules directory (default: bundled seed rules)")

    p = add("eval-paice", cmd_eval_paice, "Paice under-/over-stemming evaluation")
    p.add_argument("--rules", help="rules directory (default: bundled seed rules)")
    p.add_argument("--groups", required=True, help="concept group file")

    ir = sub.add_parser("ir", help="tf-idf retrieval")
    ir_sub = ir.add_subparsers(dest="ir_command", parser_class=_Parser)
    p = add("index", cmd_ir_index, "build an index", ir_sub)
    p.add_argument("--corpus", required=True)
    p.add_argument("--rules", help="stem with these rules (omit for an unstemmed index)")
    p.add_argument("--out", required=True)
    p = add("query", cmd_ir_query, "rank documents for a query", ir_sub)
    p.add_argument("--index", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("-k", type=int, default=10)
    p.add_argument("--rules", help="rules for a stemmed index (default: bundled seed rules)")

    cl = sub.add_parser("classify", help="naive Bayes topic classification")
    cl_sub = cl.add_subparsers(dest="classify_command", parser_class=_Parser)
    p = add("train", cmd_classify_train, "train a model on a stratified split", cl_sub)
    p.add_argument("--corpus", required=True)
    p.add_argument("--rules", help="stem with these rules (omit for an unstemmed model)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--split", type=float, default=0.7, help="training fraction")
    p.add_argument("--alpha", type=float, default=1.0, help="Laplace smoothing constant")
    p.add_argument("--raw-counts", action="store_true", help="use term counts instead of tf-idf")
    p.add_argument("--out", required=True)
    p = add("eval", cmd_classify_eval, "evaluate a model on held-out documents", cl_sub)
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--rules", help="rules for a stemmed model (default: bundled seed rules)")
    return parser


def _utf8_stdio():
    for stream in (sys.stdin, sys.stdout, sys.stderr):
        with contextlib.suppress(AttributeError, ValueError):
            stream.reconfigure(encoding="utf-8")


def run(argv=None) -> int:
    _utf8_stdio()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.version:
            print(_version_text())
            return EXIT_OK
        if getattr(args, "func", None) is None:
            raise UsageError(parser.format_usage().strip())
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    try:
        args.func(args)
    except (NepstemError, OSError, UnicodeDecodeError) as exc:
        _err(f"nepstem: error: {exc}")
        return EXIT_DATA
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
