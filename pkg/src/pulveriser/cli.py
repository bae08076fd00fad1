"""Command-line interface.

Usage::

    pulveriser <subcommand> <args...> [--json] [--trace[=PATH]] [--base B]

Results go to stdout, diagnostics to stderr.  ``--json`` prints one JSON
object with every number as a decimal string.  ``--trace`` interleaves the
JSON-lines derivation trace with stdout, each line prefixed ``TRACE ``;
``--trace=PATH`` writes it to a file instead.

Exit codes: 0 success, 2 usage error, 3 domain error (the error's class
name is printed on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import comparative, diophantine, prosody, roots, triples
from .errors import OutOfRange, PulveriserError
from .exactnum import parse_rational
from .trace import JsonLinesSink

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

TRACE_PREFIX = "TRACE "


class UsageError(Exception):
    pass


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q with q > 0: {text!r}") from None


def _s(value: Any) -> str:
    return str(value)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.format_usage().rstrip()}\n{self.prog}: error: {message}")


# handlers take (namespace, sink) and return (plain_lines, json_object)


def _triples(ns, sink):
    found = triples.enumerate_primitive_triples(ns.c_max, sink=sink)
    plain = [f"{t.a} {t.b} {t.c}" for t in found]
    return plain, {"c_max": _s(ns.c_max),
                   "triples": [{"a": _s(t.a), "b": _s(t.b), "c": _s(t.c)} for t in found]}


def _pothayanar(ns, sink):
    est = triples.pothayanar_estimate(ns.a, ns.b)
    exact = triples.pothayanar_is_exact(ns.a, ns.b)
    plain = [f"{est} ({'exact' if exact else 'inexact'})"]
    return plain, {"a": _s(ns.a), "b": _s(ns.b), "estimate": _s(est), "exact": exact}


def _prastara(ns, sink):
    rows = prosody.enumerate_prastara(ns.n, sink=sink)
    plain = [f"{i} {p}" for i, p in enumerate(rows, start=1)]
    return plain, {"n": _s(ns.n), "patterns": [str(p) for p in rows]}


def _nashta(ns, sink):
    p = prosody.index_to_pattern(ns.index, ns.n, sink=sink)
    return [str(p)], {"index": _s(ns.index), "n": _s(ns.n), "pattern": str(p)}


def _uddishta(ns, sink):
    try:
        p = prosody.MeterPattern.from_text(ns.pattern)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    i = prosody.pattern_to_index(p)
    return [_s(i)], {"pattern": str(p), "index": _s(i)}


def _matra(ns, sink):
    count = prosody.matra_count(ns.n)
    plain = [_s(count)]
    out: dict = {"n": _s(ns.n), "count": _s(count)}
    if ns.n <= prosody.MAX_MATRA_CADENCE:
        patterns = [str(p) for p in prosody.enumerate_matra(ns.n)]
        plain += patterns
        out["patterns"] = patterns
    return plain, out


def _meru(ns, sink):
    row = prosody.meru_row(ns.n, sink=sink)
    return [" ".join(map(str, row))], {"n": _s(ns.n), "row": [_s(v) for v in row]}


def _exp(ns, sink):
    if ns.x == 2:
        value = prosody.exp2(ns.n, sink=sink)
    else:
        value = prosody.exp(ns.x, ns.n, sink=sink)
    return [_s(value)], {"x": _s(ns.x), "n": _s(ns.n), "value": _s(value)}


def _points(ns, sink):
    share = prosody.points_share(ns.r, ns.s)
    return [f"{share} {1 - share}"], {"r": _s(ns.r), "s": _s(ns.s),
                                      "share_a": _s(share), "share_b": _s(1 - share)}


def _sqrt(ns, sink):
    root, rem, _ = roots.aryabhata_sqrt(ns.n, base=ns.base, sink=sink)
    return [f"{root} remainder {rem}"], {"n": _s(ns.n), "base": _s(ns.base),
                                         "root": _s(root), "remainder": _s(rem)}


def _iteration(method):
    def handler(ns, sink):
        steps = roots.iterate(method, ns.n, ns.x0, ns.steps, sink=sink)
        plain = [f"{s.index} {s.estimate} {s.error_bound}" for s in steps]
        return plain, {"method": method, "n": _s(ns.n), "x0": _s(ns.x0),
                       "steps": [{"index": _s(s.index), "estimate": _s(s.estimate),
                                  "error_bound": _s(s.error_bound)} for s in steps]}
    return handler


def _kuttaka(ns, sink):
    sol = diophantine.kuttaka(ns.a, ns.b, ns.c, sink=sink)
    plain = [f"x = {sol.x} + {sol.x_period}t, y = {sol.y} - {sol.y_period}t"]
    return plain, {"x": _s(sol.x), "y": _s(sol.y), "x_period": _s(sol.x_period),
                   "y_period": _s(sol.y_period), "g": _s(sol.g)}


def _chakravala(ns, sink):
    sol, trace = diophantine.chakravala(ns.n, sink=sink)
    return [f"{sol.x} {sol.y}"], {"N": _s(ns.n), "x": _s(sol.x), "y": _s(sol.y),
                                  "steps": _s(len(trace) - 1)}


def _egyptian(ns, sink):
    q = ns.q
    if q <= 0:
        raise OutOfRange(f"expected q > 0, got {q}")
    whole = q.numerator // q.denominator
    frac = q - whole
    terms = list(comparative.egyptian_decompose(frac, sink=sink)) if frac else []
    parts = ([str(whole)] if whole else []) + [str(t) for t in terms]
    return [" + ".join(parts)], {"q": _s(q), "integer_part": _s(whole),
                                 "terms": [str(t) for t in terms]}


def _sieve(ns, sink):
    primes = comparative.sieve(ns.limit, sink=sink)
    return [" ".join(map(str, primes))], {"limit": _s(ns.limit),
                                          "primes": [_s(p) for p in primes]}


def _euclid(ns, sink):
    witness, new = comparative.euclid_new_prime(ns.primes, sink=sink)
    return [f"{witness} {new}"], {"primes": [_s(p) for p in ns.primes],
                                  "witness": _s(witness), "new_prime": _s(new)}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object")
    common.add_argument("--trace", metavar="PATH",
                        help="emit the derivation trace ('-' or bare --trace: stdout)")

    parser = _Parser(prog="pulveriser", description="Exact classical number-theory algorithms.")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>", parser_class=_Parser)
    sub.required = True

    def add(name, handler, help_, *args):
        p = sub.add_parser(name, parents=[common], help=help_)
        for arg_name, kind, *rest in args:
            p.add_argument(arg_name, type=kind, **(rest[0] if rest else {}))
        p.set_defaults(handler=handler)
        return p

    add("triples", _triples, "primitive Pythagorean triples up to a hypotenuse",
        ("c_max", _integer))
    add("pothayanar", _pothayanar, "Pothayanar hypotenuse estimate 7a/8 + b/2",
        ("a", _rational), ("b", _rational))
    add("prastara", _prastara, "all guru/laghu patterns of a length", ("n", _integer))
    add("nashta", _nashta, "pattern at a prastara row", ("index", _integer), ("n", _integer))
    add("uddishta", _uddishta, "prastara row of a pattern", ("pattern", str))
    add("matra", _matra, "patterns of a given cadence", ("n", _integer))
    add("meru", _meru, "row of the Meru Prastara", ("n", _integer))
    add("exp", _exp, "x**n by halving the exponent", ("x", _integer), ("n", _integer))
    add("points", _points, "fair division for the problem of points",
        ("r", _integer), ("s", _integer))
    p = add("sqrt", _sqrt, "digit-by-digit integer square root", ("n", _integer))
    p.add_argument("--base", type=_integer, default=10)
    for method in ("heron", "bakhshali"):
        add(method, _iteration(method), f"{method} iteration for sqrt(N)",
            ("n", _rational), ("x0", _rational), ("steps", _integer))
    add("kuttaka", _kuttaka, "solve a*x + b*y = c",
        ("a", _integer), ("b", _integer), ("c", _integer))
    add("chakravala", _chakravala, "solve x**2 - N*y**2 = 1", ("n", _integer))
    add("egyptian", _egyptian, "greedy Egyptian fraction", ("q", _rational))
    add("sieve", _sieve, "primes up to a limit", ("limit", _integer))
    add("euclid", _euclid, "a prime outside a given list",
        ("primes", _integer, {"nargs": "+"}))
    return parser


def _normalize(argv: Sequence[str]) -> list[str]:
    # bare --trace means stdout; rewrite it so argparse never swallows a
    # following positional as the path
    return ["--trace=-" if a == "--trace" else a for a in argv]


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(_normalize(argv))
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    sink = None
    if ns.trace is not None:
        if ns.trace == "-":
            sink = JsonLinesSink(stdout, prefix=TRACE_PREFIX)
        else:
            try:
                stream = open(ns.trace, "w", encoding="utf-8")
            except OSError as exc:
                print(f"pulveriser: cannot open trace file: {exc}", file=stderr)
                return EXIT_USAGE
            sink = JsonLinesSink(stream, owns_stream=True)
        sink.start()

    try:
        plain, structured = ns.handler(ns, sink)
    except UsageError as exc:
        print(f"pulveriser {ns.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except PulveriserError as exc:
        print(type(exc).__name__, file=stderr)
        if str(exc):
            print(f"pulveriser {ns.command}: {exc}", file=stderr)
        return EXIT_DOMAIN
    finally:
        if sink is not None:
            sink.close()

    if ns.json:
        stdout.write(json.dumps(structured, separators=(",", ":")) + "\n")
    else:
        for line in plain:
            stdout.write(line + "\n")
    return EXIT_OK


def main() -> None:
    # outputs such as 2**100000 exceed the default int-to-str digit cap
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
