"""Jackson graphs and the shorthand universal cycles they spell.

Vertices of ``J(n)`` are arrangements of ``n-2`` distinct letters. There is
an edge ``u -> v`` labelled ``u[0]`` when ``u[1:] == v[:-1]`` and
``u[0] != v[-1]``. Every Eulerian cycle spells a universal Lyndon word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import CapacityError, DomainError, Word, format_letters

MAX_ENUMERATION_DEGREE = 5


@dataclass(frozen=True, order=True)
class Edge:
    source: tuple[int, ...]
    target: tuple[int, ...]
    label: int


@dataclass(frozen=True)
class JacksonGraph:
    degree: int
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    def out_edges(self, v: tuple[int, ...]) -> list[Edge]:
        return [e for e in self.edges if e.source == v]

    def adjacency(self) -> dict[tuple[int, ...], list[Edge]]:
        adj: dict[tuple[int, ...], list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.source].append(e)
        for out in adj.values():
            out.sort()
        return adj

    def to_dot(self) -> str:
        n = self.degree
        lines = [f"digraph J{n} {{"]
        for v in self.vertices:
            lines.append(f'  "{format_letters(v, n)}";')
        for e in self.edges:
            lines.append(
                f'  "{format_letters(e.source, n)}" -> "{format_letters(e.target, n)}" [label="{e.label}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_jackson_graph(n: int) -> JacksonGraph:
    if n <= 2:
        raise DomainError(f"Jackson graphs need degree > 2, got {n}")
    letters = range(1, n + 1)
    vertices = tuple(itertools.permutations(letters, n - 2))
    edges = []
    for u in vertices:
        # the two letters missing from u give the two successors
        for b in letters:
            if b in u:
                continue
            v = u[1:] + (b,)
            edges.append(Edge(u, v, u[0]))
    return JacksonGraph(n, vertices, tuple(sorted(edges)))


def is_strongly_connected(g: JacksonGraph) -> bool:
    adj = g.adjacency()
    radj: dict = {v: [] for v in g.vertices}
    for e in g.edges:
        radj[e.target].append(e.source)
    start = g.vertices[0]
    for nbrs in ({v: [e.target for e in es] for v, es in adj.items()}, radj):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for x in nbrs[v]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        if len(seen) != len(g.vertices):
            return False
    return True


def find_eulerian_cycle(g: JacksonGraph) -> list[Edge]:
    """Hierholzer's algorithm, always leaving by the smallest unused edge."""
    adj = g.adjacency()
    nxt = {v: 0 for v in g.vertices}
    start = min(g.vertices)
    stack: list[tuple[tuple[int, ...], Edge | None]] = [(start, None)]
    circuit: list[Edge] = []
    while stack:
        v, via = stack[-1]
        if nxt[v] < len(adj[v]):
            e = adj[v][nxt[v]]
            nxt[v] += 1
            stack.append((e.target, e))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return circuit


def enumerate_eulerian_cycles(g: JacksonGraph) -> Iterator[list[Edge]]:
    """Every Eulerian cycle, each starting with the least edge of ``g``."""
    if g.degree > MAX_ENUMERATION_DEGREE:
        raise CapacityError(
            f"Eulerian cycle enumeration limited to n <= {MAX_ENUMERATION_DEGREE}"
        )
    adj = g.adjacency()
    anchor = min(g.edges)
    total = len(g.edges)
    used: set[Edge] = {anchor}
    path = [anchor]

    def extend(v):
        if len(path) == total:
            if v == anchor.source:
                yield list(path)
            return
        for e in adj[v]:
            if e in used:
                continue
            used.add(e)
            path.append(e)
            yield from extend(e.target)
            path.pop()
            used.discard(e)

    yield from extend(anchor.target)


def word_from_cycle(cycle: Sequence[Edge], degree: int | None = None) -> Word:
    """Concatenate the labels of a closed walk."""
    if not cycle:
        raise DomainError("empty walk")
    for k, e in enumerate(cycle):
        nxt = cycle[(k + 1) % len(cycle)]
        if e.target != nxt.source:
            raise DomainError(f"edge {k} ends at {e.target}, next edge starts at {nxt.source}")
    if len(set(cycle)) != len(cycle):
        raise DomainError("walk repeats an edge")
    if degree is None:
        degree = len(cycle[0].source) + 2
    return Word(tuple(e.label for e in cycle), degree)


def jackson_ulw(n: int) -> Word:
    """One Jackson-type universal Lyndon word of degree ``n`` (any ``n >= 1``)."""
    if n == 1:
        return Word((1,), 1)
    if n == 2:
        return Word((1, 2), 2)
    return word_from_cycle(find_eulerian_cycle(build_jackson_graph(n)), n)
