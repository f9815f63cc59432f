"""graph6 text codec.

Bit-exact implementation of the standard format: a size header (one byte
63+n for n <= 62, or '~' plus three bytes of an 18-bit big-endian count),
followed by the upper adjacency triangle in column-major order packed
big-endian into 6-bit groups, each offset by 63.  The final group is
zero-padded and the padding must decode to zero.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, from_edge_mask, upper_pairs

_OFFSET = 63


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(_OFFSET + n)]
    elif n <= 258047:
        out = ["~", chr(_OFFSET + (n >> 12 & 63)), chr(_OFFSET + (n >> 6 & 63)), chr(_OFFSET + (n & 63))]
    else:
        raise Graph6Error(f"vertex count {n} beyond supported header sizes")
    acc = 0
    nbits = 0
    for i, j in upper_pairs(n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(_OFFSET + acc))
            acc = 0
            nbits = 0
    if nbits:
        out.append(chr(_OFFSET + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - _OFFSET for c in s]
    if any(not 0 <= v <= 63 for v in data):
        raise Graph6Error("character outside the graph6 alphabet")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("unsupported or truncated size header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"body has {len(body)} groups, expected {expected} for n={n}")
    bits = 0
    for v in body:
        bits = bits << 6 | v
    total_bits = expected * 6
    pad = total_bits - npairs
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    # bits now holds the pairs with the first pair in the highest position
    mask = 0
    for k in range(npairs):
        if bits >> (npairs - 1 - k) & 1:
            mask |= 1 << k
    try:
        return from_edge_mask(n, mask)
    except GraphError as exc:  # pragma: no cover
        raise Graph6Error(str(exc)) from exc
