"""Text formats: ideal files, graph files.

Ideal file grammar (UTF-8, ``#`` starts a comment anywhere on a line):

    line 1:   n=<int>              one block of variables x1..xn
         or:  vars=s,t n=<int>     two blocks s1..sn, t1..tn over 2n positions
    lines:    one squarefree monomial each, ``*``-separated variable
              tokens, e.g. ``x1*x4*x5`` or ``s2*t1*t3``; the token ``1``
              denotes the unit generator (empty support)

With ``vars=s,t`` the ambient width is 2n and positions map as s_i -> i,
t_i -> n+i.  An ideal file with no monomial lines is the zero ideal.

Graph file grammar:

    line 1:   n=<int>
    lines:    ``u v`` with 1 <= u < v <= n, one edge per line
"""

from __future__ import annotations

import re

from .errors import ParseError
from .graphs import Graph
from .ideals import MonomialIdeal, minimalize
from .subsets import VarSet

_TOKEN_RE = re.compile(r"^([a-zA-Z]+)(\d+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_header(line: str, lineno: int) -> tuple[int, bool]:
    """Return (n, two_block) from the header line."""
    fields = line.split()
    two_block = False
    n = None
    for field in fields:
        if field.startswith("vars="):
            spec = field[len("vars="):]
            if spec == "s,t":
                two_block = True
            elif spec == "x":
                two_block = False
            else:
                raise ParseError(f"unknown variable block spec {spec!r}", lineno)
        elif field.startswith("n="):
            try:
                n = int(field[len("n="):])
            except ValueError:
                raise ParseError(f"bad variable count {field!r}", lineno) from None
        else:
            raise ParseError(f"unexpected header field {field!r}", lineno)
    if n is None:
        raise ParseError("header must declare n=<int>", lineno)
    if n < 0:
        raise ParseError(f"variable count must be >= 0, got {n}", lineno)
    return n, two_block


def _parse_monomial(line: str, n: int, two_block: bool, width: int, lineno: int) -> VarSet:
    if line == "1":
        return VarSet.empty(width)
    positions = []
    for token in line.split("*"):
        token = token.strip()
        m = _TOKEN_RE.match(token)
        if not m:
            raise ParseError(f"bad variable token {token!r}", lineno)
        name, idx = m.group(1), int(m.group(2))
        if not 1 <= idx <= n:
            raise ParseError(f"variable index {idx} outside 1..{n}", lineno)
        if two_block:
            if name == "s":
                positions.append(idx)
            elif name == "t":
                positions.append(n + idx)
            else:
                raise ParseError(f"expected s/t variable, got {token!r}", lineno)
        else:
            if name != "x":
                raise ParseError(f"expected x variable, got {token!r}", lineno)
            positions.append(idx)
    if len(set(positions)) != len(positions):
        raise ParseError(f"monomial {line!r} is not squarefree", lineno)
    return VarSet.from_positions(positions, width)


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse an ideal file; generators are minimalized on the way in."""
    header_seen = False
    n = width = 0
    two_block = False
    gens: list[VarSet] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if not header_seen:
            n, two_block = _parse_header(line, lineno)
            width = 2 * n if two_block else n
            header_seen = True
            continue
        gens.append(_parse_monomial(line, n, two_block, width, lineno))
    if not header_seen:
        raise ParseError("missing header line (n=<int>)")
    return minimalize(gens, width)


def parse_ideal_file(path) -> MonomialIdeal:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal_text(fh.read())


def format_ideal(ideal: MonomialIdeal, two_block_n: int | None = None) -> str:
    """Render an ideal back to file text.

    With ``two_block_n=n`` the ideal must live in 2n positions and is
    printed with s/t names; otherwise x names are used.
    """
    lines = []
    if two_block_n is not None:
        n = two_block_n
        if ideal.n != 2 * n:
            raise ValueError(f"two-block rendering needs ambient 2*{n}, got {ideal.n}")
        lines.append(f"vars=s,t n={n}")

        def name(p: int) -> str:
            return f"s{p}" if p <= n else f"t{p - n}"
    else:
        lines.append(f"n={ideal.n}")

        def name(p: int) -> str:
            return f"x{p}"

    for mask in ideal.generator_masks():
        vs = VarSet(mask, ideal.n)
        lines.append("*".join(name(p) for p in vs.positions()) if mask else "1")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError("graph file must start with n=<int>", lineno)
            try:
                n = int(line[len("n="):])
            except ValueError:
                raise ParseError(f"bad vertex count {line!r}", lineno) from None
            if n < 0:
                raise ParseError(f"vertex count must be >= 0, got {n}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v' edge line, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge endpoints {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"loop edge {u} {v} not allowed", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge {u} {v} outside vertex range 1..{n}", lineno)
        edges.append((min(u, v), max(u, v)))
    if n is None:
        raise ParseError("missing header line (n=<int>)")
    return Graph(n, frozenset(edges))


def parse_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def format_graph(graph: Graph) -> str:
    lines = [f"n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"
