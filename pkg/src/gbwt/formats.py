"""On-disk formats: scheme files and transform files.

Scheme file (text, line based)::

    #GBWT-SCHEME1
    type: explicit
    base: abc
    ctx "": bac
    ctx "a": cab

Symbols outside ``!``..``~`` as well as ``\\``, ``"`` and ``:`` are written
``\\xNN``.  Transform file: one header line
``#GBWT1 n=<len> I=<row> scheme=<hex>`` (plus `` sentinel=1`` when a 0x00
terminator was appended), a newline, then the raw bytes of ``L``.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass

from .errors import MalformedInput, SchemeFormatError
from .orderings import Kind, OrderingScheme, Permutation

SCHEME_HEADER = "#GBWT-SCHEME1"
TRANSFORM_MAGIC = b"#GBWT1"

_PLAIN = frozenset(range(0x21, 0x7F)) - {0x5C, 0x22, 0x3A}
_ESCAPE = re.compile(r"\\(x[0-9a-fA-F]{2}|.)")


def escape(data: bytes) -> str:
    return "".join(chr(b) if b in _PLAIN else f"\\x{b:02x}" for b in data)


def unescape(text: str) -> bytes:
    def sub(m):
        tok = m.group(1)
        if tok[0] == "x" and len(tok) == 3:
            return chr(int(tok[1:], 16))
        return tok

    try:
        return _ESCAPE.sub(sub, text).encode("latin-1")
    except UnicodeEncodeError:
        raise SchemeFormatError(f"non-byte character in {text!r}") from None


_LINE_RES = [
    ("type", re.compile(r"type:\s*(\S+)$")),
    ("alphabet", re.compile(r"alphabet:\s*(\S+)$")),
    ("base", re.compile(r"base:\s*(\S+)$")),
    ("sym", re.compile(r"sym\s+(\S+?):\s*(\S+)$")),
    ("ctx", re.compile(r'ctx\s+"((?:[^"\\]|\\.)*)":\s*(\S+)$')),
]


def parse_scheme(text: str) -> OrderingScheme:
    lines = text.splitlines()
    if not lines or lines[0].strip() != SCHEME_HEADER:
        raise SchemeFormatError(f"missing {SCHEME_HEADER} header")
    kind = alphabet = base = None
    syms: dict = {}
    ctxs: dict = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for name, rx in _LINE_RES:
            m = rx.match(line)
            if m:
                break
        else:
            raise SchemeFormatError(f"line {lineno}: unknown directive {line!r}")
        if name == "type":
            if kind is not None:
                raise SchemeFormatError(f"line {lineno}: duplicate type")
            try:
                kind = Kind(m.group(1))
            except ValueError:
                raise SchemeFormatError(f"line {lineno}: unknown type {m.group(1)!r}") from None
        elif name == "alphabet":
            if alphabet is not None:
                raise SchemeFormatError(f"line {lineno}: duplicate alphabet")
            alphabet = unescape(m.group(1))
        elif name == "base":
            if base is not None:
                raise SchemeFormatError(f"line {lineno}: duplicate base")
            base = unescape(m.group(1))
        elif name == "sym":
            key = unescape(m.group(1))
            if len(key) != 1:
                raise SchemeFormatError(f"line {lineno}: sym key must be one byte")
            if key[0] in syms:
                raise SchemeFormatError(f"line {lineno}: duplicate sym {escape(key)}")
            syms[key[0]] = unescape(m.group(2))
        else:
            key = unescape(m.group(1))
            if key in ctxs:
                raise SchemeFormatError(f'line {lineno}: duplicate ctx "{escape(key)}"')
            ctxs[key] = unescape(m.group(2))
    if kind is None:
        raise SchemeFormatError("missing type directive")
    if syms and kind is not Kind.LOCAL1:
        raise SchemeFormatError("sym directives require type local1")
    if ctxs and kind is not Kind.EXPLICIT:
        raise SchemeFormatError("ctx directives require type explicit")

    perms = [*syms.values(), *ctxs.values()]
    if alphabet is not None:
        symbols = sorted(set(alphabet))
        if len(symbols) != len(alphabet) or list(alphabet) != symbols:
            raise SchemeFormatError("alphabet must list distinct symbols in increasing order")
    elif base is not None:
        symbols = sorted(set(base))
    elif perms:
        symbols = sorted(set(perms[0]))
    else:
        symbols = list(range(256))
    for p in ([base] if base is not None else []) + perms:
        if sorted(p) != symbols:
            raise SchemeFormatError(f"{escape(p)!r} is not a permutation of the alphabet")
    base_perm = Permutation(tuple(base) if base is not None else tuple(symbols))
    return OrderingScheme(kind, base_perm,
                          per_symbol={k: Permutation(tuple(v)) for k, v in syms.items()},
                          per_context={k: Permutation(tuple(v)) for k, v in ctxs.items()})


def format_scheme(scheme: OrderingScheme) -> str:
    """Canonical text form; ``parse_scheme`` of the result rebuilds ``scheme``."""
    out = [SCHEME_HEADER, f"type: {scheme.kind.value}"]
    if scheme.base.symbol_at != tuple(range(256)):
        out.append(f"base: {escape(bytes(scheme.base.symbol_at))}")
    for c in sorted(scheme.per_symbol):
        out.append(f"sym {escape(bytes([c]))}: {escape(bytes(scheme.per_symbol[c].symbol_at))}")
    for k in sorted(scheme.per_context):
        out.append(f'ctx "{escape(k)}": {escape(bytes(scheme.per_context[k].symbol_at))}')
    return "\n".join(out) + "\n"


def scheme_fingerprint(scheme: OrderingScheme) -> str:
    return hashlib.sha256(format_scheme(scheme).encode("ascii")).hexdigest()[:16]


def read_scheme(path) -> OrderingScheme:
    with open(path, encoding="latin-1") as f:
        return parse_scheme(f.read())


def write_scheme(path, scheme: OrderingScheme) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(format_scheme(scheme))


@dataclass(frozen=True)
class TransformFile:
    L: bytes
    I: int
    fingerprint: str
    sentinel: bool = False

    def to_bytes(self) -> bytes:
        header = f"#GBWT1 n={len(self.L)} I={self.I} scheme={self.fingerprint}"
        if self.sentinel:
            header += " sentinel=1"
        return header.encode("ascii") + b"\n" + self.L

    @classmethod
    def from_bytes(cls, data: bytes) -> "TransformFile":
        header, nl, payload = data.partition(b"\n")
        m = re.fullmatch(rb"#GBWT1 n=(\d+) I=(\d+) scheme=([0-9a-f]*)( sentinel=([01]))?", header)
        if not nl or m is None:
            raise MalformedInput("not a GBWT1 transform file")
        n, row = int(m.group(1)), int(m.group(2))
        if len(payload) != n:
            raise MalformedInput(f"header says n={n} but payload has {len(payload)} bytes")
        if n and not 0 <= row < n:
            raise MalformedInput(f"row index {row} outside 0..{n - 1}")
        return cls(payload, row, m.group(3).decode(), m.group(5) == b"1")
