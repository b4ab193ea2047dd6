"""Lex-codes, their S_X digraphs and the synthesis of universal Lyndon words.

A lex-code of degree ``n`` is a finite word set in which every member is
the lexicographic minimum of the set for exactly one alphabet order, and
every proper prefix of a member prefixes at least two members. The code is
Hamiltonian when the digraph ``x -> y`` (``x`` a prefix of ``a y`` for some
letter ``a``) has a Hamiltonian cycle; reading the witness letters around
such a cycle spells a universal Lyndon word whose shortest unrepeated
prefixes are exactly the code.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .core import (
    MAX_ORDER_DEGREE,
    CapacityError,
    DomainError,
    TotalOrder,
    Word,
    WordLike,
    all_orders,
    format_letters,
    is_prefix_code,
    word,
)

MAX_SEARCH_DEGREE = 4

Letters = tuple[int, ...]


class ScriptError(DomainError):
    """A refinement script step does not apply to the current state."""

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class LexCode:
    degree: int
    words: frozenset[Letters]

    @classmethod
    def of(cls, words: Iterable[WordLike], degree: int) -> "LexCode":
        return cls(degree, frozenset(word(x, degree).letters for x in words))

    def sorted_words(self) -> list[Letters]:
        return sorted(self.words)

    def as_words(self) -> list[Word]:
        return [Word(x, self.degree) for x in self.sorted_words()]

    def to_text(self) -> str:
        return "".join(
            (format_letters(x, self.degree) or "-") + "\n" for x in self.sorted_words()
        )

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class LexCodeReport:
    valid: bool
    minimizer: dict[TotalOrder, Letters]
    violations: list[str] = field(default_factory=list)


@dataclass(frozen=True, order=True)
class SxEdge:
    source: Letters
    target: Letters
    letter: int


@dataclass(frozen=True)
class SxDigraph:
    degree: int
    vertices: tuple[Letters, ...]
    edges: tuple[SxEdge, ...]

    def adjacency(self) -> dict[Letters, list[SxEdge]]:
        adj: dict[Letters, list[SxEdge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.source].append(e)
        return adj

    def to_dot(self) -> str:
        n = self.degree

        def name(x):
            return format_letters(x, n) or "ε"

        lines = [f"digraph SX{n} {{"]
        lines += [f'  "{name(v)}";' for v in self.vertices]
        lines += [
            f'  "{name(e.source)}" -> "{name(e.target)}" [label="{e.letter}"];' for e in self.edges
        ]
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _min_under(words: Iterable[Letters], order: TotalOrder) -> Letters:
    rank = order.ranks()
    return min(words, key=lambda x: [rank[a] for a in x] + [-1])


def validate_lex_code(words: Iterable[WordLike], n: int) -> LexCodeReport:
    X = {word(x, n).letters for x in words}
    if not X:
        raise DomainError("a lex-code is non-empty")
    if n > MAX_ORDER_DEGREE:
        raise CapacityError(f"lex-code validation enumerates {n}! orders; limit is {MAX_ORDER_DEGREE}")
    violations = []
    minimizer = {o: _min_under(X, o) for o in all_orders(n)}
    wins: dict[Letters, list[TotalOrder]] = {x: [] for x in X}
    for o, x in minimizer.items():
        wins[x].append(o)
    for x in sorted(X):
        if len(wins[x]) != 1:
            violations.append(
                f"condition 1: {format_letters(x, n) or '-'} is the minimum for {len(wins[x])} orders"
            )
    for x in sorted(X):
        for k in range(1, len(x)):
            p = x[:k]
            if sum(1 for y in X if y[:k] == p) < 2:
                violations.append(
                    f"condition 2: prefix {format_letters(p, n)} of {format_letters(x, n)} "
                    "prefixes only one word"
                )
    nonempty = [x for x in X if x]
    if len(nonempty) == len(X) and not is_prefix_code(Word(x, n) for x in X):
        violations.append("not a prefix code")
    return LexCodeReport(not violations, minimizer, violations)


# ---------------------------------------------------------------------------
# S_X digraph and Hamiltonian cycles
# ---------------------------------------------------------------------------


def sx_digraph(code: LexCode) -> SxDigraph:
    """Edges ``(x, y, a)`` with ``x`` a prefix of ``a y``; every witness kept."""
    n = code.degree
    X = code.sorted_words()
    edges = []
    for x in X:
        for y in X:
            for a in range(1, n + 1):
                ay = (a,) + y
                if len(x) <= len(ay) and ay[: len(x)] == x:
                    edges.append(SxEdge(x, y, a))
    return SxDigraph(n, tuple(X), tuple(edges))


def iter_hamiltonian_cycles(g: SxDigraph) -> Iterator[list[SxEdge]]:
    """All Hamiltonian cycles through the least vertex, successors in order.

    Parallel edges with different witness letters give different cycles.
    """
    if not g.vertices:
        return
    adj = g.adjacency()
    for out in adj.values():
        out.sort(key=lambda e: (e.target, e.letter))
    start = g.vertices[0]
    total = len(g.vertices)
    on_path = {start}
    path: list[SxEdge] = []

    def extend(v):
        for e in adj[v]:
            if len(path) + 1 == total:
                if e.target == start:
                    path.append(e)
                    yield list(path)
                    path.pop()
                continue
            if e.target in on_path:
                continue
            on_path.add(e.target)
            path.append(e)
            yield from extend(e.target)
            path.pop()
            on_path.discard(e.target)

    yield from extend(start)


def find_hamiltonian_cycle(g: SxDigraph) -> Optional[list[SxEdge]]:
    return next(iter_hamiltonian_cycles(g), None)


def synthesize_ulw(code: LexCode, cycle: Sequence[SxEdge]) -> Word:
    """Read the witness letters around a Hamiltonian cycle of ``S_X``."""
    X = code.words
    if len(cycle) != len(X) or {e.source for e in cycle} != set(X):
        raise DomainError("cycle does not visit every code word exactly once")
    for k, e in enumerate(cycle):
        nxt = cycle[(k + 1) % len(cycle)]
        if e.target != nxt.source:
            raise DomainError(f"edge {k} does not meet edge {k + 1}")
        ay = (e.letter,) + e.target
        if len(e.source) > len(ay) or ay[: len(e.source)] != e.source:
            raise DomainError(f"edge {k}: letter {e.letter} does not witness the edge")
    return Word(tuple(e.letter for e in cycle), code.degree)


def conjugate_cycle(w: WordLike) -> list[SxEdge]:
    """The Hamiltonian cycle of ``S_MT(w)`` visited by consecutive conjugates."""
    from .ulw import mt_sequence

    w = word(w)
    xs = [x.letters for x in mt_sequence(w)]
    N = len(xs)
    return [SxEdge(xs[i], xs[(i + 1) % N], w.letters[i]) for i in range(N)]


# ---------------------------------------------------------------------------
# partition refinement
# ---------------------------------------------------------------------------


def _split(cell: frozenset, gamma: Iterable[int]) -> dict[int, frozenset]:
    """Group the orders of ``cell`` by their least letter of ``gamma``."""
    gamma = set(gamma)
    parts: dict[int, set] = {}
    for ranking in cell:
        a = next(b for b in ranking if b in gamma)
        parts.setdefault(a, set()).add(ranking)
    return {a: frozenset(p) for a, p in parts.items()}


def _initial_cells(n: int) -> dict[Letters, frozenset]:
    if n > MAX_ORDER_DEGREE:
        raise CapacityError(f"refinement works on all {n}! orders; limit is {MAX_ORDER_DEGREE}")
    return {(): frozenset(itertools.permutations(range(1, n + 1)))}


def refine_lex_code(
    n: int, script: Sequence[tuple[WordLike, Iterable[int]]]
) -> LexCode:
    """Run the refinement procedure with the given ``(x, Gamma)`` choices.

    Start from ``X = {ε}`` with all ``n!`` orders in one cell. A step
    replaces ``x`` by the words ``x a`` (``a`` in ``Gamma``) that are the
    least ``Gamma`` letter for some order of ``x``'s cell.
    """
    cells = _initial_cells(n)
    for k, (x, gamma) in enumerate(script, start=1):
        xs = word(x, n).letters if not isinstance(x, tuple) else x
        gamma = set(gamma)
        if xs not in cells:
            raise ScriptError(k, f"{format_letters(xs, n) or '-'} is not in X")
        if len(cells[xs]) < 2:
            raise ScriptError(k, f"cell of {format_letters(xs, n) or '-'} is a singleton")
        if not gamma or not gamma <= set(range(1, n + 1)):
            raise ScriptError(k, f"Gamma {sorted(gamma)} is not a non-empty subset of 1..{n}")
        cell = cells.pop(xs)
        for a, part in _split(cell, gamma).items():
            cells[xs + (a,)] = part
    unfinished = [x for x, c in cells.items() if len(c) > 1]
    if unfinished:
        names = ", ".join(format_letters(x, n) or "-" for x in sorted(unfinished))
        raise ScriptError(len(script) + 1, f"script ends with non-singleton cells: {names}")
    return LexCode(n, frozenset(cells))


def parse_script(text: str, degree: int | None = None) -> tuple[int, list[tuple[Letters, list[int]]]]:
    """Parse ``x : a1,a2,...`` lines (``-`` for the empty word, ``#`` comments).

    Returns the degree (largest letter seen unless given) and the steps.
    """
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.count(":") != 1:
            raise DomainError(f"line {lineno}: expected 'x : a1,a2,...'")
        left, right = (part.strip() for part in body.split(":"))
        try:
            x = Word.parse(left, degree=99).letters
            gamma = [int(tok) for tok in right.split(",") if tok.strip()]
        except (DomainError, ValueError) as exc:
            raise DomainError(f"line {lineno}: {exc}") from None
        if not gamma:
            raise DomainError(f"line {lineno}: empty Gamma")
        raw.append((lineno, x, gamma))
    if degree is None:
        degree = max((max(g) for _, _, g in raw), default=1)
        degree = max([degree] + [max(x) for _, x, _ in raw if x])
    for lineno, x, gamma in raw:
        bad = [a for a in list(x) + gamma if not 1 <= a <= degree]
        if bad:
            raise DomainError(f"line {lineno}: letter {bad[0]} outside 1..{degree}")
    return degree, [(x, g) for _, x, g in raw]


# ---------------------------------------------------------------------------
# exhaustive search over refinement scripts
# ---------------------------------------------------------------------------


def _ends_with_square(x: Letters) -> bool:
    L = len(x)
    return any(x[L - 2 * h : L - h] == x[L - h :] for h in range(1, L // 2 + 1))


def _options(x: Letters, cell: frozenset, n: int, max_len: int, strategy: str):
    """Distinct splits of ``cell`` available when refining ``x``."""
    if len(x) + 1 > max_len:
        return
    if strategy == "exhaustive":
        seen = set()
        for size in range(1, n + 1):
            for gamma in itertools.combinations(range(1, n + 1), size):
                parts = _split(cell, gamma)
                key = frozenset(parts.items())
                if key in seen:
                    continue
                seen.add(key)
                yield parts
        return
    # Shortest unrepeated prefixes of a ULW: a node's cell is every order
    # extending the node's defined order, so a node either repeats a letter
    # it already holds (one child) or branches on every new letter.
    # Members are square-free cyclic factors.
    present = set(x)
    if len(present) >= n - 1:
        return
    for b in sorted(present):
        if not _ends_with_square(x + (b,)):
            yield {b: cell}
    fresh = [a for a in range(1, n + 1) if a not in present]
    yield _split(cell, fresh)


def iter_lex_codes(
    n: int, max_len: int | None = None, strategy: str = "structural"
) -> Iterator[LexCode]:
    """Every lex-code reachable by refinement scripts, words of length <= ``max_len``.

    The least multi-order cell is always refined next. ``strategy`` is
    ``"exhaustive"`` (every ``Gamma``) or ``"structural"`` (only the
    refinements that can end in a Hamiltonian code).
    """
    if strategy not in ("structural", "exhaustive"):
        raise DomainError(f"unknown strategy {strategy!r}")
    if max_len is None:
        max_len = math.factorial(n)
    max_len = min(max_len, math.factorial(n))

    def rec(cells: dict[Letters, frozenset]):
        pending = [x for x, c in cells.items() if len(c) > 1]
        if not pending:
            yield LexCode(n, frozenset(cells))
            return
        x = min(pending)
        cell = cells[x]
        for parts in _options(x, cell, n, max_len, strategy):
            nxt = dict(cells)
            del nxt[x]
            for a, part in parts.items():
                nxt[x + (a,)] = part
            yield from rec(nxt)

    yield from rec(_initial_cells(n))


def search_hamiltonian_lex_codes(
    n: int, max_len: int | None = None, strategy: str = "structural"
) -> Iterator[LexCode]:
    if n > MAX_SEARCH_DEGREE:
        raise CapacityError(f"lex-code search limited to n <= {MAX_SEARCH_DEGREE}")
    for code in iter_lex_codes(n, max_len, strategy):
        if find_hamiltonian_cycle(sx_digraph(code)) is not None:
            yield code


@dataclass(frozen=True)
class LexCodeCensus:
    degree: int
    codes_examined: int
    hamiltonian_codes: int
    words: tuple[Word, ...]
    multiplicity: dict[Word, int]


def lexcode_census(
    n: int, max_len: int | None = None, strategy: str = "structural", progress=None
) -> LexCodeCensus:
    """Canonical ULWs synthesised from every Hamiltonian cycle of every code."""
    from .ulw import canonicalize, is_ulw

    if n > MAX_SEARCH_DEGREE:
        raise CapacityError(f"lex-code search limited to n <= {MAX_SEARCH_DEGREE}")
    examined = hamiltonian = 0
    mult: dict[Word, int] = {}
    for code in iter_lex_codes(n, max_len, strategy):
        examined += 1
        g = sx_digraph(code)
        found = False
        for cycle in iter_hamiltonian_cycles(g):
            found = True
            w = synthesize_ulw(code, cycle)
            if not is_ulw(w, "counting"):
                raise AssertionError(f"synthesis produced a non-ULW {w}")
            c = canonicalize(w).canonical
            mult[c] = mult.get(c, 0) + 1
        hamiltonian += found
        if progress is not None and examined % 512 == 0:
            progress(f"lexcode search: {examined} codes, {len(mult)} words")
    words = tuple(sorted(mult, key=lambda w: w.letters))
    return LexCodeCensus(n, examined, hamiltonian, words, mult)
