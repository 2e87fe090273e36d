"""``dsa`` command-line front end.

Exit codes: 0 success or affirmative answer, 1 negative decision or
counterexample found, 2 usage, parse, or resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constants import DEFAULT_MAX_EXPONENT, compute_constants
from .core import AutomatonError, ResourceLimitError, export_dot, parse_automaton
from .decide import NotDeterminizable, decide
from .determinize import determinize
from .gaps import enumerate_gaps
from .oracle import equivalent_up_to
from .semantics import evaluate, format_value, value_to_json

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2
DEFAULT_MAX_VECTORS = 10_000_000


class UsageError(Exception):
    pass


def _max_vectors(arg):
    if arg is not None:
        return arg
    env = os.environ.get("DSA_MAX_VECTORS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"DSA_MAX_VECTORS must be an integer, got {env!r}")
    return DEFAULT_MAX_VECTORS


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    try:
        return parse_automaton(text)
    except AutomatonError as e:
        raise UsageError(f"{path}: {e}")


def _word(a, text, sep):
    if sep is None:
        word = tuple(text)
    else:
        word = tuple(s for s in text.split(sep)) if text else ()
    for s in word:
        if s not in a.alphabet:
            raise UsageError(f"symbol {s!r} not in alphabet {' '.join(a.alphabet)}")
    return word


def _show_word(w, sep=""):
    return sep.join(w) if w else "ε"


def cmd_eval(args, out):
    a = _load(args.file)
    val = evaluate(a, _word(a, args.word, args.sep))
    if args.json:
        print(json.dumps(value_to_json(val)), file=out)
    else:
        print(format_value(val, decimal=args.decimal), file=out)
    return EXIT_OK


def cmd_constants(args, out):
    a = _load(args.file)
    c = compute_constants(a, args.max_exponent)

    def show(sym, exact):
        if args.full or sym is None:
            return str(exact)
        return str(sym)

    print(f"m_A = {c.m_a}", file=out)
    print(f"M = {c.big_m}", file=out)
    print(f"N = {show(c.n_symbolic, c.big_n)}", file=out)
    print(f"C = {show(c.c_symbolic, c.big_c)}", file=out)
    return EXIT_OK


def cmd_gaps(args, out):
    a = _load(args.file)
    recs = enumerate_gaps(a, args.max_word, args.max_suffix)
    if args.json:
        print(json.dumps([r.to_json() for r in recs]), file=out)
    else:
        for r in recs:
            print(f"w={_show_word(r.w)} q_u={r.q_u} q_l={r.q_l} gap={r.gap} z={_show_word(r.z)}",
                  file=out)
    return EXIT_OK


def cmd_determinize(args, out):
    a = _load(args.file)
    limit = _max_vectors(args.max_vectors)
    if args.auto:
        outcome = decide(a, limit)
        if isinstance(outcome, NotDeterminizable):
            print("not determinizable; no deterministic equivalent exists", file=sys.stderr)
            return EXIT_NEGATIVE
        bound = outcome.bound
    else:
        if args.bound < 0:
            raise UsageError("--bound must be non-negative")
        bound = args.bound
    text = determinize(a, bound, limit).serialize()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_decide(args, out):
    a = _load(args.file)
    if args.cutoff is not None:
        print("warning: --cutoff overrides the sound cutoff; a 'determinizable' answer "
              "is NOT guaranteed", file=sys.stderr)
    outcome = decide(a, _max_vectors(args.max_vectors), cutoff=args.cutoff,
                     max_exponent=args.max_exponent)
    negative = isinstance(outcome, NotDeterminizable)
    if args.json:
        doc = {
            "determinizable": not negative,
            "bound": None if negative else str(outcome.bound),
            "witness": outcome.witness.to_json(a) if negative else None,
        }
        if args.cutoff is not None:
            doc["unsound_cutoff"] = str(args.cutoff)
        print(json.dumps(doc), file=out)
    elif negative:
        w = outcome.witness
        states = lambda s: "{" + ",".join(q for q in a.states if q in s) + "}"
        print("not determinizable", file=out)
        print(f"  w = {_summarize(w.w)}", file=out)
        print(f"  U = {states(w.u_set)}  L = {states(w.l_set)}  q_u = {w.q_u}", file=out)
        print(f"  z = {_show_word(w.z)}", file=out)
    else:
        print(f"determinizable (bound ⌊N⌋ = {_short_int(outcome.bound)})", file=out)
    return EXIT_NEGATIVE if negative else EXIT_OK


def _summarize(w):
    """Run-length form (``a^4612 b``) so long witnesses stay readable."""
    if not w:
        return "ε"
    parts, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return " ".join(parts)


def _short_int(n: int) -> str:
    s = str(n)
    return s if len(s) <= 40 else f"{s[:12]}...{s[-12:]} ({len(s)} digits)"


def cmd_equiv(args, out):
    a, b = _load(args.file1), _load(args.file2)
    if set(a.alphabet) != set(b.alphabet):
        raise UsageError("automata have different alphabets")
    w = equivalent_up_to(a, b, args.max_len)
    if w is None:
        print(f"no counterexample up to length {args.max_len}", file=out)
        return EXIT_OK
    print(f"counterexample: {_show_word(w)}  ({format_value(evaluate(a, w))} vs "
          f"{format_value(evaluate(b, w))})", file=out)
    return EXIT_NEGATIVE


def cmd_export_dot(args, out):
    out.write(export_dot(_load(args.file)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dsa", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="exact value of a word")
    e.add_argument("file")
    e.add_argument("word", help="letters written contiguously ('' is the empty word)")
    e.add_argument("--sep", default=None, help="separator for multi-character symbols")
    e.add_argument("--json", action="store_true", help="print {num, lambda_exp}")
    e.add_argument("--decimal", action="store_true", help="exact decimal when one exists")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("constants", help="print m_A, M, N, C")
    c.add_argument("file")
    c.add_argument("--full", action="store_true", help="print N and C in full")
    c.add_argument("--max-exponent", type=int, default=DEFAULT_MAX_EXPONENT,
                   help="cap on |Q|^2 * 2^(|Q|^2) (default %(default)s)")
    c.set_defaults(func=cmd_constants)

    g = sub.add_parser("gaps", help="enumerate recoverable gaps (bounded)")
    g.add_argument("file")
    g.add_argument("--max-word", type=int, required=True)
    g.add_argument("--max-suffix", type=int, required=True)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gaps)

    d = sub.add_parser("determinize", help="build a deterministic automaton")
    d.add_argument("file")
    mode = d.add_mutually_exclusive_group(required=True)
    mode.add_argument("--bound", type=int, help="gap cutoff B")
    mode.add_argument("--auto", action="store_true", help="decide first, then use floor(N)")
    d.add_argument("--out", help="write to this file instead of stdout")
    d.add_argument("--max-vectors", type=int, default=None,
                   help="node limit (default $DSA_MAX_VECTORS or 10000000)")
    d.set_defaults(func=cmd_determinize)

    dc = sub.add_parser("decide", help="decide determinizability")
    dc.add_argument("file")
    dc.add_argument("--max-vectors", type=int, default=None,
                    help="node limit (default $DSA_MAX_VECTORS or 10000000)")
    dc.add_argument("--json", action="store_true")
    dc.add_argument("--cutoff", type=int, default=None,
                    help="UNSOUND: replace the cutoff C, for experiments only")
    dc.add_argument("--max-exponent", type=int, default=DEFAULT_MAX_EXPONENT,
                    help="cap on |Q|^2 * 2^(|Q|^2) (default %(default)s)")
    dc.set_defaults(func=cmd_decide)

    q = sub.add_parser("equiv", help="search for a word on which two automata differ")
    q.add_argument("file1")
    q.add_argument("file2")
    q.add_argument("--max-len", type=int, required=True)
    q.set_defaults(func=cmd_equiv)

    x = sub.add_parser("export-dot", help="Graphviz output")
    x.add_argument("file")
    x.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"dsa: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except ResourceLimitError as e:
        print(f"dsa: resource limit: {e}", file=sys.stderr)
        return EXIT_ERROR


run = main

if __name__ == "__main__":
    sys.exit(main())
