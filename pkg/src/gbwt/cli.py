"""Command line interface.

All row indices printed or stored are 0-based.
"""

from __future__ import annotations

import argparse
import random
import sys

from .errors import GBWTError, NotPrimitive, SentinelByteClash
from .formats import TransformFile, read_scheme, write_scheme
from .inversion import invert, invert_generic, invert_local
from .oracles import naive_circular_count
from .orderings import Kind, OrderingScheme
from .query import QueryIndex, count, count_generic, count_local
from .runmin import DEFAULT_MAX_SIGMA, count_runs, entropy0, min_runs
from .transform import is_primitive, transform_fast, transform_naive

SENTINEL = 0
ORACLE_MAX_N = 4096


def _read(path) -> bytes:
    with open(path, "rb") as f:
        return f.read()


def _write(path, data: bytes):
    with open(path, "wb") as f:
        f.write(data)


def _scheme(args) -> OrderingScheme:
    return read_scheme(args.scheme) if args.scheme else OrderingScheme.standard()


def _prepare(data: bytes, scheme: OrderingScheme, sentinel):
    """Text and effective scheme to transform, appending 0x00 when asked or needed."""
    if sentinel is None:
        sentinel = not data or not is_primitive(data)
    if sentinel:
        if SENTINEL in data:
            raise SentinelByteClash("input contains byte 0x00; cannot append the sentinel")
        return data + bytes([SENTINEL]), scheme.with_sentinel(SENTINEL), True
    if not data or not is_primitive(data):
        raise NotPrimitive("input is not primitive; drop --no-sentinel to append a terminator")
    return data, scheme, False


def _effective(tf: TransformFile, scheme: OrderingScheme) -> OrderingScheme:
    if tf.fingerprint and tf.fingerprint != scheme.fingerprint():
        print(f"warning: scheme fingerprint {scheme.fingerprint()} does not match "
              f"transform header {tf.fingerprint}", file=sys.stderr)
    return scheme.with_sentinel(SENTINEL) if tf.sentinel else scheme


def _strip(text: bytes, sentinel: bool) -> bytes:
    if not sentinel:
        return text
    if not text.endswith(bytes([SENTINEL])):
        raise GBWTError("inverted text does not end with the sentinel")
    return text[:-1]


def cmd_transform(args) -> int:
    scheme = _scheme(args)
    text, eff, sentinel = _prepare(_read(args.input), scheme, args.sentinel)
    out = transform_fast(text, eff)
    _write(args.output, TransformFile(out.L, out.I, scheme.fingerprint(), sentinel).to_bytes())
    return 0


def cmd_invert(args) -> int:
    tf = TransformFile.from_bytes(_read(args.input))
    eff = _effective(tf, _scheme(args))
    text = invert(tf.L, tf.I, eff) if tf.L else b""
    _write(args.output, _strip(text, tf.sentinel))
    return 0


def cmd_count(args) -> int:
    tf = TransformFile.from_bytes(_read(args.input))
    eff = _effective(tf, _scheme(args))
    pattern = bytes.fromhex(args.pattern_hex) if args.pattern_hex is not None \
        else args.pattern.encode("latin-1")
    rng = count(QueryIndex(tf.L, eff), pattern)
    print(f"{rng.b} {rng.len}")
    return 0 if rng.len else 1


def cmd_runmin(args) -> int:
    data = _read(args.input)
    res = min_runs(data, max_sigma=args.max_sigma)
    print(f"opt={res.opt}")
    write_scheme(args.output, res.scheme)
    if args.emit_transform:
        out = res.transform
        _write(args.emit_transform,
               TransformFile(out.L, out.I, res.scheme.fingerprint()).to_bytes())
    return 0


def _verify_checks(data: bytes, scheme: OrderingScheme, tfile, guard: int):
    """Yield ``(name, ok, detail)`` for every check run by ``verify``."""
    text, eff, sentinel = _prepare(data, scheme, None)
    out = transform_fast(text, eff)
    back = _strip(invert(out.L, out.I, eff), sentinel)
    yield "round trip", back == data, ""

    if tfile is not None:
        tf = TransformFile.from_bytes(_read(tfile))
        same = (tf.L, tf.I, tf.sentinel) == (out.L, out.I, sentinel)
        yield "transform file matches input", same, ""
        try:
            ok = _strip(invert(tf.L, tf.I, _effective(tf, scheme)), tf.sentinel) == data
        except (GBWTError, IndexError, KeyError, ValueError):
            ok = False
        yield "transform file inverts to input", ok, ""

    if len(text) <= guard:
        naive = transform_naive(text, eff)
        yield "naive transform agrees", (naive.L, naive.I) == (out.L, out.I), ""
        qi = QueryIndex(out.L, eff)
        rnd = random.Random(len(text))
        n = len(text)
        bad = 0
        for _ in range(32):
            p = text[rnd.randrange(n):][:rnd.randint(1, 8)]
            rng = count_generic(qi, p)
            bad += rng.len != naive_circular_count(text, p)
            if qi.pairs is not None:
                bad += count_local(qi, p) != rng
        yield "pattern counts agree with naive scan", bad == 0, f"{bad} mismatches"
        if eff.kind is Kind.LOCAL1:
            yield "local and generic inversion agree", \
                invert_local(out.L, out.I, eff) == invert_generic(out.L, out.I, eff), ""

    L = out.L
    yield "report", True, f"n={len(L)} runs={count_runs(L)} H0={entropy0(L):.6f} bits/symbol"


def cmd_verify(args) -> int:
    failed = 0
    for name, ok, detail in _verify_checks(_read(args.input), _scheme(args),
                                           args.transform, args.max_oracle_n):
        failed += not ok
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        print(f"{line}: {detail}" if detail else line)
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbwt", description="Context-adaptive Burrows-Wheeler transforms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="compute L and the row index of the input")
    p.add_argument("input")
    p.add_argument("--scheme", help="scheme file (default: standard byte order)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sentinel", dest="sentinel", action="store_true", default=None,
                   help="append byte 0x00 (default when the input is not primitive)")
    g.add_argument("--no-sentinel", dest="sentinel", action="store_false")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("invert", help="recover the input from a transform file")
    p.add_argument("input")
    p.add_argument("--scheme")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("count", help="print '<first row> <count>' of a pattern")
    p.add_argument("input")
    p.add_argument("--scheme")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern")
    g.add_argument("--pattern-hex")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("runmin", help="find the scheme minimising the runs of L")
    p.add_argument("input")
    p.add_argument("--max-sigma", type=int, default=DEFAULT_MAX_SIGMA)
    p.add_argument("-o", "--output", required=True, help="scheme file to write")
    p.add_argument("--emit-transform", help="also write the optimal transform file")
    p.set_defaults(func=cmd_runmin)

    p = sub.add_parser("verify", help="round trip and oracle cross-checks on a file")
    p.add_argument("input")
    p.add_argument("--scheme")
    p.add_argument("--transform", help="transform file to check against the input")
    p.add_argument("--max-oracle-n", type=int, default=ORACLE_MAX_N)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GBWTError, OSError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
