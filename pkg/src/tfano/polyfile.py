"""Plain-text polytope files.

Format: UTF-8 text, '#' starts a comment line, blank lines are ignored.
The first data line is "v d" (vertex count and dimension), followed by v
lines of d whitespace-separated integers, one vertex per line.
"""

from __future__ import annotations

from pathlib import Path

from .linalg import Vec
from .polytope import LatticePolytope, convex_hull


class PolytopeFileError(ValueError):
    """Malformed polytope file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_polytope(text: str) -> list[Vec]:
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            data.append((lineno, line))
    if not data:
        raise PolytopeFileError("no data lines", 1)
    headno, head = data[0]
    parts = head.split()
    if len(parts) != 2:
        raise PolytopeFileError("expected header 'v d'", headno)
    try:
        nv, dim = int(parts[0]), int(parts[1])
    except ValueError:
        raise PolytopeFileError("header values must be integers", headno) from None
    if dim not in (2, 3):
        raise PolytopeFileError("dimension must be 2 or 3", headno)
    if nv < 1:
        raise PolytopeFileError("vertex count must be positive", headno)
    if len(data) - 1 != nv:
        lineno = data[-1][0]
        raise PolytopeFileError(
            f"expected {nv} vertex lines, found {len(data) - 1}", lineno
        )
    vertices = []
    for lineno, line in data[1:]:
        fields = line.split()
        if len(fields) != dim:
            raise PolytopeFileError(f"expected {dim} coordinates", lineno)
        try:
            vertices.append(tuple(int(x) for x in fields))
        except ValueError:
            raise PolytopeFileError("coordinates must be integers", lineno) from None
    return vertices


def load_polytope(path) -> LatticePolytope:
    text = Path(path).read_text(encoding="utf-8")
    return convex_hull(parse_polytope(text))


def format_polytope(vertices, comment: str | None = None) -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    vs = list(vertices)
    lines.append(f"{len(vs)} {len(vs[0])}")
    for v in vs:
        lines.append(" ".join(str(x) for x in v))
    return "\n".join(lines) + "\n"


def save_polytope(path, vertices, comment: str | None = None) -> None:
    Path(path).write_text(format_polytope(vertices, comment), encoding="utf-8")
