"""Standard graph6 text interchange.

One graph per line, no header, trailing newline.  Orders up to 62 use the
single-byte size prefix, larger orders (up to the extended build cap) the
'~' + 3 byte form.  Bit order follows the format definition: upper
triangle, column by column.
"""

from __future__ import annotations

from .bitgraph import MAX_VERTICES_EXTENDED, Graph
from .errors import MalformedInput, OrderTooLarge


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise OrderTooLarge(f"graph6 order {n} not supported")
    chunk = 0
    filled = 0
    out = [head]
    for col in range(1, n):
        rcol = g.rows[col]
        for row in range(col):
            chunk = chunk << 1 | (rcol >> row & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(line: str, max_vertices: int = MAX_VERTICES_EXTENDED) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise MalformedInput("empty graph6 line")
    if any(not (63 <= ord(c) <= 126) for c in line):
        raise MalformedInput(f"invalid graph6 characters in {line!r}")
    if line[0] == "~":
        if len(line) < 4 or line[1] == "~":
            raise MalformedInput("unsupported graph6 size prefix")
        n = ((ord(line[1]) - 63) << 12) | ((ord(line[2]) - 63) << 6) | (ord(line[3]) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n > max_vertices:
        raise OrderTooLarge(f"graph6 order {n} exceeds cap {max_vertices}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedInput(f"graph6 body length {len(body)} wrong for order {n}")
    bits_val = 0
    for c in body:
        bits_val = bits_val << 6 | (ord(c) - 63)
    pad = len(body) * 6 - nbits
    if bits_val & ((1 << pad) - 1):
        raise MalformedInput("nonzero padding bits in graph6 line")
    bits_val >>= pad
    rows = [0] * n
    pos = nbits
    for col in range(1, n):
        for row in range(col):
            pos -= 1
            if bits_val >> pos & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
    return Graph(n, rows)


def write_graph6_file(path, graphs) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode_graph6(g))
            fh.write("\n")
            count += 1
    return count


def read_graph6_file(path, max_vertices: int = MAX_VERTICES_EXTENDED):
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield decode_graph6(line, max_vertices)
