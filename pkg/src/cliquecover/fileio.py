"""Plain-text graph and cover files.

Graph files: a header line "n m" followed by m lines "u v".  Cover files:
a header line "k" followed by k lines "size v1 ... vsize".  Blank lines and
lines starting with '#' are skipped.  Writers emit edges in lexicographic
order and covers in their stored order, so parse(write(x)) == x.
"""

from __future__ import annotations

from .graph import Clique, CliqueCover, Graph


def _payload_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ValueError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_graph_file(text: str) -> Graph:
    lines = _payload_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ValueError("graph file has no header line") from None
    fields = _ints(header, lineno)
    if len(fields) != 2:
        raise ValueError(f"line {lineno}: graph header must be 'n m', got {header!r}")
    n, m = fields
    if n < 0 or m < 0:
        raise ValueError(f"line {lineno}: negative counts in header {header!r}")

    edges = set()
    for lineno, line in lines:
        if len(edges) == m:
            raise ValueError(f"line {lineno}: more than {m} edge lines")
        fields = _ints(line, lineno)
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        u, v = fields
        for w in (u, v):
            if not 0 <= w < n:
                raise ValueError(f"line {lineno}: vertex {w} out of range for n={n}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop {u} {v}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise ValueError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add(e)
    if len(edges) < m:
        raise ValueError(f"expected {m} edge lines, found {len(edges)}")
    return Graph(n, frozenset(edges))


def write_graph_file(g: Graph) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"


def parse_cover_file(text: str, n: int | None = None) -> CliqueCover:
    """Parse a cover file; n defaults to 1 + the largest vertex mentioned."""
    lines = _payload_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ValueError("cover file has no header line") from None
    fields = _ints(header, lineno)
    if len(fields) != 1:
        raise ValueError(f"line {lineno}: cover header must be 'k', got {header!r}")
    k = fields[0]
    if k < 0:
        raise ValueError(f"line {lineno}: negative clique count {k}")

    cliques = []
    for lineno, line in lines:
        if len(cliques) == k:
            raise ValueError(f"line {lineno}: more than {k} clique lines")
        fields = _ints(line, lineno)
        if not fields:
            raise ValueError(f"line {lineno}: empty clique line")
        size, verts = fields[0], fields[1:]
        if size != len(verts):
            raise ValueError(
                f"line {lineno}: declared size {size} but {len(verts)} vertices"
            )
        try:
            cliques.append(Clique(tuple(verts)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if len(cliques) < k:
        raise ValueError(f"expected {k} clique lines, found {len(cliques)}")

    if n is None:
        n = 1 + max((c.vertices[-1] for c in cliques), default=-1)
        n = max(n, 0)
    return CliqueCover(n, tuple(cliques))


def write_cover_file(cover: CliqueCover) -> str:
    out = [f"{len(cover.cliques)}"]
    for c in cover.cliques:
        out.append(f"{c.size} " + " ".join(str(v) for v in c.vertices))
    return "\n".join(out) + "\n"
