"""graph6 / sparse6 codecs, a plain edge-list format, and DOT export.

graph6 and sparse6 follow the format description shipped with nauty
(``formats.txt``). The edge-list format is::

    n m
    u v        (m lines, 0-based; repeated pairs are parallel edges)

Parsers reject malformed input with ``GraphFormatError`` and never repair it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .graph import MultiGraph


class GraphFormatError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedFormatError(ValueError):
    """The graph cannot be expressed in the requested format."""


def _as_bytes(line: str | bytes) -> bytes:
    if isinstance(line, str):
        line = line.encode("ascii", errors="strict")
    return line.rstrip(b"\r\n")


# -- size field ----------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes([(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return b"~~" + bytes([(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def _decode_n(data: bytes, start: int) -> tuple[int, int]:
    """Returns ``(n, index of first byte after the size field)``."""

    def six(i):
        if i >= len(data):
            raise GraphFormatError("truncated size field", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c} outside 63..126", i)
        return c - 63

    if six(start) != 63:
        return six(start), start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        n = 0
        for i in range(start + 2, start + 8):
            n = (n << 6) | six(i)
        return n, start + 8
    n = 0
    for i in range(start + 1, start + 4):
        n = (n << 6) | six(i)
    return n, start + 4


def _six_bits(data: bytes, start: int) -> list[int]:
    out = []
    for i in range(start, len(data)):
        c = data[i]
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c} outside 63..126", i)
        out.append(c - 63)
    return out


def _pack(bits: list[int]) -> bytes:
    bits = bits + [0] * (-len(bits) % 6)
    return bytes(
        63 + sum(bits[i + j] << (5 - j) for j in range(6)) for i in range(0, len(bits), 6)
    )


# -- graph6 ----------------------------------------------------------------

def parse_graph6(line: str | bytes) -> MultiGraph:
    data = _as_bytes(line)
    start = 10 if data.startswith(b">>graph6<<") else 0
    if start >= len(data):
        raise GraphFormatError("empty graph6 record", start)
    n, pos = _decode_n(data, start)
    if n < 1:
        raise GraphFormatError("graph6 record with zero vertices", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    groups = _six_bits(data, pos)
    if len(groups) != need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, got {len(groups)}", pos)
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if groups[k // 6] >> (5 - k % 6) & 1:
                pairs.append((i, j))
            k += 1
    pad = need * 6 - nbits
    if pad and groups[-1] & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", pos + need - 1)
    return MultiGraph.from_pairs(n, pairs)


def emit_graph6(G: MultiGraph) -> str:
    if not G.is_simple():
        raise UnsupportedFormatError("graph6 cannot express parallel edges; use the edge-list format")
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(1 if G.adjacent(i, j) else 0)
    return (_encode_n(G.n) + _pack(bits)).decode("ascii")


# -- sparse6 ---------------------------------------------------------------

def _sparse6_width(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def parse_sparse6(line: str | bytes) -> MultiGraph:
    data = _as_bytes(line)
    start = 11 if data.startswith(b">>sparse6<<") else 0
    if data[start:start + 1] != b":":
        raise GraphFormatError("sparse6 record must start with ':'", start)
    n, pos = _decode_n(data, start + 1)
    if n < 1:
        raise GraphFormatError("sparse6 record with zero vertices", start + 1)
    groups = _six_bits(data, pos)
    k = _sparse6_width(n)
    bits = [g >> (5 - j) & 1 for g in groups for j in range(6)]
    pairs = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for j in range(k):
            x = (x << 1) | bits[i + 1 + j]
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise GraphFormatError("sparse6 loop not supported", pos + i // 6)
            pairs.append((x, v))
    return MultiGraph.from_pairs(n, pairs)


def emit_sparse6(G: MultiGraph) -> str:
    """sparse6 line; parallel edges allowed (loops never occur)."""
    n = G.n
    k = _sparse6_width(n)

    def enc(x):
        return [x >> (k - 1 - j) & 1 for j in range(k)]

    bits: list[int] = []
    cur = 0
    for hi, lo in sorted((max(e.u, e.v), min(e.u, e.v)) for e in G.edges):
        if hi == cur:
            bits += [0] + enc(lo)
        elif hi == cur + 1:
            cur += 1
            bits += [1] + enc(lo)
        else:
            cur = hi
            bits += [1] + enc(hi) + [0] + enc(lo)
    pad = -len(bits) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        # all-ones padding would otherwise read as one more edge to n-1
        bits.append(0)
        pad = -len(bits) % 6
    bits += [1] * pad
    return (b":" + _encode_n(n) + _pack(bits)).decode("ascii")


def parse_any(line: str | bytes) -> MultiGraph:
    data = _as_bytes(line)
    if data.startswith(b":") or data.startswith(b">>sparse6<<"):
        return parse_sparse6(data)
    return parse_graph6(data)


def read_graph6_stream(lines: Iterable[str | bytes]) -> Iterator[MultiGraph]:
    """Skip blank lines; raise on the first bad record with its line number."""
    for lineno, line in enumerate(lines, 1):
        data = _as_bytes(line).strip()
        if not data:
            continue
        try:
            yield parse_any(data)
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc


# -- edge list ---------------------------------------------------------------

def parse_edge_list(text: str) -> MultiGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge list", 0)
    try:
        n, m = (int(x) for x in rows[0])
    except ValueError:
        raise GraphFormatError("header must be 'n m'", 0) from None
    if n < 1 or m < 0:
        raise GraphFormatError("header needs n >= 1 and m >= 0", 0)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    pairs = []
    for idx, row in enumerate(rows[1:], 1):
        if len(row) != 2:
            raise GraphFormatError(f"edge line {idx} must hold two integers")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError:
            raise GraphFormatError(f"edge line {idx} must hold two integers") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"edge line {idx}: bad endpoints {u} {v}")
        pairs.append((u, v))
    return MultiGraph.from_pairs(n, pairs)


def emit_edge_list(G: MultiGraph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{e.u} {e.v}" for e in G.edges]
    return "\n".join(lines) + "\n"


# -- DOT -----------------------------------------------------------------------

_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4")


def emit_dot(
    G: MultiGraph,
    highlights: Sequence[Iterable[int]] = (),
    labels: Mapping[int, str] | None = None,
    name: str = "G",
) -> str:
    """Undirected DOT; each highlight group (e.g. a removable class) gets a colour."""
    colour: dict[int, tuple[str, int]] = {}
    for k, group in enumerate(highlights):
        for eid in group:
            colour[eid] = (_PALETTE[k % len(_PALETTE)], k)
    out = [f"graph {name} {{"]
    for v in range(G.n):
        lab = f' [label="{labels[v]}"]' if labels and v in labels else ""
        out.append(f"  {v}{lab};")
    for e in G.edges:
        if e.id in colour:
            c, k = colour[e.id]
            out.append(f'  {e.u} -- {e.v} [id="e{e.id}", color={c}, penwidth=3, class="h{k}"];')
        else:
            out.append(f'  {e.u} -- {e.v} [id="e{e.id}"];')
    out.append("}")
    return "\n".join(out) + "\n"
