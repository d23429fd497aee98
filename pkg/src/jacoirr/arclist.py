"""Plain-text arc lists.

::

    # comment
    vertices 5
    1 2
    2 3

The ``vertices N`` header is optional; without it the vertex count is the
largest label that appears.
"""

from __future__ import annotations

from .graph import Digraph, GraphError, make_digraph


class ArcListError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_arc_list(text: str) -> Digraph:
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0].lower() == "vertices":
            if n is not None or arcs:
                raise ArcListError("'vertices' header must come before any arc", lineno)
            if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                raise ArcListError(f"bad header {raw.strip()!r}", lineno)
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise ArcListError(f"expected 'tail head', got {raw.strip()!r}", lineno)
        try:
            tail, head = int(fields[0]), int(fields[1])
        except ValueError:
            raise ArcListError(f"non-integer label in {raw.strip()!r}", lineno) from None
        arcs.append((tail, head))
    if n is None:
        if not arcs:
            raise ArcListError("no arcs and no 'vertices' header")
        n = max(max(a) for a in arcs)
    try:
        return make_digraph(n, arcs)
    except GraphError as exc:
        line = None
        if exc.arc is not None and exc.arc in arcs:
            # report the second occurrence for duplicates
            hits = [i for i, a in enumerate(arcs) if a == exc.arc]
            line = _arc_line(text, hits[-1])
        raise ArcListError(str(exc), line) from None


def _arc_line(text: str, arc_index: int) -> int | None:
    seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line and not line.lower().startswith("vertices"):
            seen += 1
            if seen == arc_index:
                return lineno
    return None


def format_arc_list(g: Digraph) -> str:
    lines = [f"vertices {g.n}"] + [f"{t} {h}" for t, h in g.arcs]
    return "\n".join(lines) + "\n"


def read_arc_list(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_arc_list(fh.read())
