"""digraph6 and edge-list text codecs."""
from __future__ import annotations

from typing import Iterable, Iterator

from .core import Digraph, from_arcs
from .errors import FormatError, MalformedHeader, OrderTooLarge, TrailingBitsNonzero, TruncatedPayload

HEADER = ">>digraph6<<"
D6_MAX_ORDER = 62


def encode_digraph6(d: Digraph) -> str:
    n = d.n
    if n > D6_MAX_ORDER:
        raise OrderTooLarge(f"digraph6 short form limited to n <= {D6_MAX_ORDER}")
    bits = [(d.out_rows[i] >> j) & 1 for i in range(n) for j in range(n)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "&" + "".join(chars)


def decode_digraph6(text: str) -> Digraph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line.startswith("&") or len(line) < 2:
        raise MalformedHeader(f"not a digraph6 line: {text!r}")
    n = ord(line[1]) - 63
    if not 0 <= n <= D6_MAX_ORDER:
        raise MalformedHeader(f"unsupported order byte {line[1]!r}")
    payload = line[2:]
    need = (n * n + 5) // 6
    if len(payload) < need:
        raise TruncatedPayload(f"expected {need} payload bytes, got {len(payload)}")
    if len(payload) > need:
        raise MalformedHeader("trailing characters after payload")
    bits = []
    for ch in payload:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise MalformedHeader(f"character {ch!r} outside the printable range")
        bits += [(val >> s) & 1 for s in range(5, -1, -1)]
    if any(bits[n * n:]):
        raise TrailingBitsNonzero("padding bits must be zero")
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            if bits[i * n + j]:
                r |= 1 << j
        rows.append(r)
    return Digraph(n, rows)


def encode_edge_list(d: Digraph) -> str:
    arcs = d.arcs()
    lines = [f"{d.n} {len(arcs)}"] + [f"{u} {v}" for u, v in arcs]
    return "\n".join(lines) + "\n"


def _edge_list_records(lines: list[str]) -> Iterator[Digraph]:
    tokens = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    i = 0
    while i < len(tokens):
        head = tokens[i]
        try:
            n, m = int(head[0]), int(head[1])
        except (IndexError, ValueError):
            raise FormatError(f"bad edge-list header {' '.join(head)!r}") from None
        body = tokens[i + 1:i + 1 + m]
        if len(body) != m:
            raise TruncatedPayload(f"edge list declares {m} arcs, found {len(body)}")
        try:
            arcs = [(int(t[0]), int(t[1])) for t in body]
        except (IndexError, ValueError):
            raise FormatError("bad arc line in edge list") from None
        yield from_arcs(n, arcs)
        i += 1 + m


def read_digraphs(lines: Iterable[str]) -> Iterator[Digraph]:
    """Parse digraph6 lines or edge-list records, chosen by the first significant byte."""
    lines = list(lines)
    first = next((ln.lstrip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")), "")
    if first.startswith("&") or first.startswith(">"):
        for ln in lines:
            if ln.strip():
                yield decode_digraph6(ln)
    elif first[:1].isdigit():
        yield from _edge_list_records(lines)
    elif first:
        raise MalformedHeader(f"cannot detect input format from {first[:20]!r}")
