"""Plain-text graph and certificate files.

Graph file: first line ``n m``, then ``m`` lines ``u v`` with 0-based ids.
Certificate file: one ``keep drop`` pair per line, applied in order.
In both, ``#`` starts a comment and blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Tuple, Union

from .trigraph import ContractionSequence, ContractionStep, Trigraph

PathLike = Union[str, Path]


class FormatError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body.split()))
    return out


def _ints(source: str, no: int, parts: List[str], count: int) -> List[int]:
    if len(parts) != count:
        raise FormatError(source, no, f"expected {count} integers, got {len(parts)} fields")
    try:
        vals = [int(x) for x in parts]
    except ValueError:
        raise FormatError(source, no, f"not an integer in {' '.join(parts)!r}") from None
    if any(v < 0 for v in vals):
        raise FormatError(source, no, "negative value")
    return vals


def parse_graph(text: str, source: str = "<graph>") -> Trigraph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(source, 1, "missing 'n m' header")
    no, head = lines[0]
    n, m = _ints(source, no, head, 2)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(source, no, f"header announces {m} edges, found {len(body)}")
    edges = []
    for no, parts in body:
        u, v = _ints(source, no, parts, 2)
        if u >= n or v >= n:
            raise FormatError(source, no, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise FormatError(source, no, "self-loop")
        edges.append((u, v))
    G = Trigraph(range(n), edges)
    if G.num_edges() != m:
        raise FormatError(source, lines[0][0], "duplicate edges")
    return G


def format_graph(G: Trigraph) -> str:
    if not G.is_plain():
        raise ValueError("graph files hold graphs without red edges")
    vs = G.vertices
    if vs != list(range(len(vs))):
        raise ValueError("graph files need vertices 0..n-1")
    edges = G.edges
    return "".join([f"{len(vs)} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_certificate(text: str, source: str = "<certificate>") -> ContractionSequence:
    return [ContractionStep(*_ints(source, no, parts, 2)) for no, parts in _content_lines(text)]


def format_certificate(seq: Iterable) -> str:
    return "".join(f"{int(s[0])} {int(s[1])}\n" for s in seq)


def read_graph(path: PathLike) -> Trigraph:
    return parse_graph(Path(path).read_text(), str(path))


def write_graph(G: Trigraph, path: PathLike) -> None:
    Path(path).write_text(format_graph(G))


def read_certificate(path: PathLike) -> ContractionSequence:
    return parse_certificate(Path(path).read_text(), str(path))


def write_certificate(seq: Iterable, path: PathLike) -> None:
    Path(path).write_text(format_certificate(seq))
