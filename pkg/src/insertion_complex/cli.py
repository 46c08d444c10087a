"""Command-line front end: ``insertion-complex <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource guard.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .blocks import InvalidBlockError, canonicalize, format_block, is_valid, parse_block
from .classification import UnsupportedDimension, classify
from .complex import build_complex, insertion_graph, read_words
from .cubical import cubical_homology, cubical_to_words, parse_cubical_document
from .homology import homology_Z, homology_Z2
from .words import GuardExceeded, WordSyntaxError, format_word

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

DEFAULT_MAX_WORD_LENGTH = 64
DEFAULT_MAX_CYCLE_LENGTH = 10
DEFAULT_SPHERE_N = 5
SUITES = ("cycles", "null-homology", "sphere-search", "word-equations")


class InputError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_words(path: str, fmt: str) -> list[str]:
    words = read_words(_read(path), fmt)
    limit = _env_int("INSCOMPLEX_MAX_WORD_LENGTH", DEFAULT_MAX_WORD_LENGTH)
    long = [w for w in words if len(w) > limit]
    if long:
        raise GuardExceeded(f"{path}: word of length {len(long[0])} exceeds the guard {limit}")
    return words


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- commands -----------------------------------------------------------------
# Each returns (exit code, text to print).


def cmd_homology(args) -> tuple[int, str]:
    docs, lines = [], []
    for path in args.inputs:
        words = _load_words(path, args.format)
        K = build_complex(words, args.max_dim)
        doc: dict = {"input": path, "words": len(K.words), "blocks": K.counts()}
        lines.append(f"{path}: {len(K.words)} words, blocks {K.counts()}")
        H = homology_Z(K) if args.coefficients in ("Z", "both") else None
        b2 = homology_Z2(K) if args.coefficients in ("Z2", "both") else None
        if H is not None:
            doc["homology"] = H.to_dict()
        if b2 is not None:
            doc["betti_mod2"] = list(b2)
        header = "  k  blocks  " + ("betti  torsion  " if H else "") + ("betti_Z2" if b2 is not None else "")
        lines.append(header.rstrip())
        for k, n in enumerate(K.counts()):
            row = f"  {k:<2} {n:<7} "
            if H:
                row += f"{H.betti[k]:<6} {','.join(map(str, H.torsion[k])) or '-':<8} "
            if b2 is not None:
                row += str(b2[k])
            lines.append(row.rstrip())
        euler = sum((-1) ** k * n for k, n in enumerate(K.counts()))
        lines.append(f"  euler {euler}")
        if H:
            lines.append(f"  H = {H}")
        docs.append(doc)
    return EXIT_OK, _dump(docs[0] if len(docs) == 1 else docs) if args.json else "\n".join(lines) + "\n"


def cmd_blocks(args) -> tuple[int, str]:
    K = build_complex(_load_words(args.input, args.format), args.max_dim)
    if args.json:
        return EXIT_OK, _dump({"dims": [{"k": k, "blocks": [format_block(b) for b in K.k_blocks(k)]} for k in range(K.dim + 1)]})
    lines = []
    for k in range(K.dim + 1):
        lines.append(f"dim {k} ({len(K.k_blocks(k))})")
        lines.extend(f"  {format_block(b)}" for b in K.k_blocks(k))
    return EXIT_OK, "\n".join(lines) + ("\n" if lines else "")


def cmd_graph(args) -> tuple[int, str]:
    G = insertion_graph(_load_words(args.input, args.format))
    if args.json:
        return EXIT_OK, _dump({
            "nodes": [format_word(w) for w in G.nodes],
            "edges": [[format_word(u), format_word(v), format_block(b)] for u, v, b in G.edges],
        })
    return EXIT_OK, G.to_dot()


def cmd_canon(args) -> tuple[int, str]:
    sigma = canonicalize(parse_block(args.block))
    text = format_block(sigma)
    if args.json:
        return EXIT_OK, _dump({"block": args.block, "canonical": text, "valid": is_valid(sigma), "dim": sigma.dim})
    return EXIT_OK, text + ("" if is_valid(sigma) else "  (not valid)") + "\n"


def cmd_classify(args) -> tuple[int, str]:
    cls = classify(parse_block(args.block))
    if args.json:
        return EXIT_OK, _dump({"block": args.block, "dim": cls.dimension, "class": cls.label,
                               "representative": format_block(cls.representative)})
    return EXIT_OK, f"{cls.label} {format_block(cls.representative)}\n"


def cmd_cubical(args) -> tuple[int, str]:
    Q = parse_cubical_document(_read(args.input))
    words = sorted(cubical_to_words(Q), key=lambda w: (len(w), w))
    doc: dict = {"ambient": Q.ambient, "cubes": len(Q.cubes), "words": [format_word(w) for w in words]}
    code = EXIT_OK
    if args.check:
        Hc = cubical_homology(Q)
        Hw = homology_Z(build_complex(words))
        agree = Hc.trimmed() == Hw.trimmed()
        doc["check"] = {"cubical": str(Hc), "words": str(Hw), "agree": agree}
        code = EXIT_OK if agree else EXIT_FAIL
    if args.json:
        return code, _dump(doc)
    lines = [format_word(w) for w in words]
    if args.check:
        c = doc["check"]
        lines.append(f"# cubical {c['cubical']}  words {c['words']}  {'PASS' if c['agree'] else 'FAIL'}")
    return code, "\n".join(lines) + "\n"


def _verify_cycles(args) -> tuple[bool, dict]:
    from .verify.cycles import brute_force_cycle_classification

    limit = _env_int("INSCOMPLEX_MAX_CYCLE_LENGTH", DEFAULT_MAX_CYCLE_LENGTH)
    report = brute_force_cycle_classification(args.max_len or 5, limit)
    return report.passed, report.to_dict()


def _verify_null(args) -> tuple[bool, dict]:
    from .verify.vanishing import check_null_homology, random_interval

    rng = random.Random(args.seed)
    pairs = [("ab", "abab")] + [random_interval(rng, "abc", args.max_len or 8, unique=not args.conjecture)
                                for _ in range(args.count)]
    reports = [check_null_homology(u, v) for u, v in pairs]
    passed = all(r.passed for r in reports)
    return passed, {"seed": args.seed, "pairs": [r.to_dict() for r in reports], "passed": passed}


def _verify_sphere(args) -> tuple[bool, dict]:
    from .verify.sphere_search import search_min_sphere

    n = args.n or DEFAULT_SPHERE_N
    if n > DEFAULT_SPHERE_N and not args.long_run:
        raise GuardExceeded(f"n = {n} needs --long-run")
    reports = search_min_sphere(n, max_length=args.max_len or 5)
    # at most five words never realize a surviving pattern; larger n is reported only
    passed = all(not r.realizations for r in reports if r.n <= DEFAULT_SPHERE_N)
    return passed, {"n": n, "reports": [r.to_dict() for r in reports], "passed": passed}


def _verify_equations(args) -> tuple[bool, dict]:
    from .verify.word_equations import check_word_equations

    report = check_word_equations(args.max_len or 4, equal_symbols=args.equal_symbols)
    return report.passed, report.to_dict()


def cmd_verify(args) -> tuple[int, str]:
    run = {
        "cycles": _verify_cycles,
        "null-homology": _verify_null,
        "sphere-search": _verify_sphere,
        "word-equations": _verify_equations,
    }[args.suite]
    passed, doc = run(args)
    doc = {"suite": args.suite, **doc}
    code = EXIT_OK if passed else EXIT_FAIL
    if args.json:
        return code, _dump(doc)
    lines = [f"{args.suite}: {'PASS' if passed else 'FAIL'}"]
    for key, value in doc.items():
        if key in ("suite", "passed"):
            continue
        if isinstance(value, list) and value:
            lines.append(f"  {key}:")
            lines.extend(f"    {json.dumps(item, ensure_ascii=False)}" for item in value)
        else:
            lines.append(f"  {key}: {json.dumps(value, ensure_ascii=False)}")
    return code, "\n".join(lines) + "\n"


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--output", "-o", help="write the report to a file instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker cap (output never depends on it)")

    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    words.add_argument("--max-dim", type=int, default=None)

    p = argparse.ArgumentParser(prog="insertion-complex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", parents=[common, words], help="homology of word-set files")
    h.add_argument("inputs", nargs="+", help="word-set files ('-' for stdin)")
    h.add_argument("--coefficients", choices=("Z", "Z2", "both"), default="Z")
    h.set_defaults(func=cmd_homology)

    b = sub.add_parser("blocks", parents=[common, words], help="list canonical blocks by dimension")
    b.add_argument("input")
    b.set_defaults(func=cmd_blocks)

    g = sub.add_parser("graph", parents=[common, words], help="insertion graph as DOT")
    g.add_argument("input")
    g.set_defaults(func=cmd_graph)

    c = sub.add_parser("canon", parents=[common], help="canonical form of a block expression")
    c.add_argument("block")
    c.set_defaults(func=cmd_canon)

    k = sub.add_parser("classify", parents=[common], help="isomorphism class of a block (dim <= 4)")
    k.add_argument("block")
    k.set_defaults(func=cmd_classify)

    q = sub.add_parser("cubical", parents=[common], help="word set of a cubical complex document")
    q.add_argument("input")
    q.add_argument("--check", action="store_true", help="compare with cubical homology")
    q.set_defaults(func=cmd_cubical)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=20, help="random cases (null-homology)")
    v.add_argument("--max-len", type=int, default=None, help="word length bound of the suite")
    v.add_argument("--n", type=int, default=None, help="vertex count (sphere-search)")
    v.add_argument("--long-run", action="store_true", help="allow sphere-search beyond n = 5")
    v.add_argument("--conjecture", action="store_true", help="null-homology: include non-unique embeddings")
    v.add_argument("--equal-symbols", action="store_true", help="word-equations: also run a = b")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, text = args.func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, WordSyntaxError, InvalidBlockError, UnsupportedDimension, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
