"""Words over {1..n}, alphabet orders and the basic combinatorics on them.

Letters are plain ints. A :class:`Word` carries its ambient degree so that
mixing words of different degrees fails loudly instead of coercing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_ORDER_DEGREE = 8


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(DomainError):
    """The requested degree is too large for an exhaustive routine."""


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if self.degree < 1:
            raise DomainError(f"degree must be positive, got {self.degree}")
        for pos, a in enumerate(self.letters):
            if not isinstance(a, int) or not 1 <= a <= self.degree:
                raise DomainError(
                    f"letter {a!r} at position {pos + 1} is outside 1..{self.degree}"
                )

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Word":
        """Parse ``"212313"`` or, for large alphabets, ``"1,2,10,3"``.

        ``"-"`` and the empty string denote the empty word. Without an
        explicit degree it is taken to be the largest letter.
        """
        text = text.strip()
        if text in ("", "-", "ε"):
            letters: list[int] = []
        elif "," in text:
            letters = []
            for pos, part in enumerate(text.split(",")):
                part = part.strip()
                if not part.isdigit():
                    raise DomainError(f"malformed letter {part!r} at position {pos + 1}")
                letters.append(int(part))
        else:
            letters = []
            for pos, ch in enumerate(text):
                if not ch.isdigit():
                    raise DomainError(f"malformed letter {ch!r} at position {pos + 1}")
                letters.append(int(ch))
        if degree is None:
            degree = max(letters, default=1)
        for pos, a in enumerate(letters):
            if a == 0:
                raise DomainError(f"letter 0 at position {pos + 1}; letters start at 1")
        return cls(tuple(letters), degree)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(self.letters[key], self.degree)
        return self.letters[key]

    def __add__(self, other: "Word") -> "Word":
        _same_degree(self, other)
        return Word(self.letters + other.letters, self.degree)

    def __str__(self) -> str:
        return format_letters(self.letters, self.degree)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, degree={self.degree})"

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.letters)

    def rotate(self, i: int) -> "Word":
        i %= max(len(self.letters), 1)
        return Word(self.letters[i:] + self.letters[:i], self.degree)

    def rename(self, mapping: Sequence[int]) -> "Word":
        """Apply the letter bijection ``a -> mapping[a - 1]``."""
        return Word(tuple(mapping[a - 1] for a in self.letters), self.degree)


WordLike = Union[Word, str, Sequence[int]]


def format_letters(letters: Sequence[int], degree: int) -> str:
    if not letters:
        return ""
    if degree <= 9:
        return "".join(map(str, letters))
    return ",".join(map(str, letters))


def word(w: WordLike, degree: int | None = None) -> Word:
    """Coerce a string or letter sequence to a :class:`Word`."""
    if isinstance(w, Word):
        if degree is not None and degree != w.degree:
            raise DomainError(f"degree mismatch: word {w.degree}, expected {degree}")
        return w
    if isinstance(w, str):
        return Word.parse(w, degree)
    letters = tuple(w)
    return Word(letters, degree if degree is not None else max(letters, default=1))


def _same_degree(*items) -> int:
    degrees = {x.degree for x in items}
    if len(degrees) != 1:
        raise DomainError(f"degree mismatch: {sorted(degrees)}")
    return degrees.pop()


# ---------------------------------------------------------------------------
# Orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TotalOrder:
    """A total order on {1..n}; ``ranking[0]`` is the smallest letter."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))
        if sorted(self.ranking) != list(range(1, len(self.ranking) + 1)):
            raise DomainError(f"{self.ranking} is not a permutation of 1..{len(self.ranking)}")

    @classmethod
    def parse(cls, text: str) -> "TotalOrder":
        text = text.strip()
        if "<" in text:
            parts = text.split("<")
        elif "," in text:
            parts = text.split(",")
        else:
            parts = list(text)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise DomainError(f"malformed order {text!r}") from exc

    @classmethod
    def natural(cls, n: int) -> "TotalOrder":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.ranking)

    def ranks(self) -> list[int]:
        """``ranks()[a]`` is the position of letter ``a`` (index 0 unused)."""
        r = [0] * (len(self.ranking) + 1)
        for pos, a in enumerate(self.ranking):
            r[a] = pos
        return r

    def __str__(self) -> str:
        return "<".join(map(str, self.ranking))


@dataclass(frozen=True, eq=False)
class PartialAlphabetOrder:
    """Letters of ``chain`` in that order, all before the remaining letters.

    The remaining letters are pairwise incomparable. Two orders compare equal
    when they are the same relation, so a chain listing all ``n`` letters
    equals the chain without its last letter.
    """

    chain: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(self.chain))
        if len(set(self.chain)) != len(self.chain):
            raise DomainError(f"repeated letter in chain {self.chain}")
        for a in self.chain:
            if not 1 <= a <= self.degree:
                raise DomainError(f"letter {a} outside 1..{self.degree}")

    @property
    def size(self) -> int:
        return len(self.chain)

    @property
    def letters(self) -> frozenset[int]:
        return frozenset(self.chain)

    @property
    def is_total(self) -> bool:
        return len(self.chain) >= self.degree - 1

    @property
    def reduced_chain(self) -> tuple[int, ...]:
        """The chain with a redundant final letter dropped."""
        return self.chain[: self.degree - 1] if self.is_total else self.chain

    def _key(self) -> tuple[tuple[int, ...], int]:
        return self.reduced_chain, self.degree

    def __eq__(self, other):
        if not isinstance(other, PartialAlphabetOrder):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def to_total(self) -> TotalOrder:
        if not self.is_total:
            raise DomainError(f"order of size {self.size} is not total in degree {self.degree}")
        rest = [a for a in range(1, self.degree + 1) if a not in self.chain]
        return TotalOrder(self.chain + tuple(rest))

    def is_extended_by(self, order: TotalOrder) -> bool:
        """True when ``order`` contains this partial order."""
        chain = self.reduced_chain
        return order.ranking[: len(chain)] == chain

    def __str__(self) -> str:
        return "<".join(map(str, self.chain))


def all_orders(n: int) -> list[TotalOrder]:
    if n > MAX_ORDER_DEGREE:
        raise CapacityError(f"refusing to enumerate {n}! orders (limit n <= {MAX_ORDER_DEGREE})")
    return [TotalOrder(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# Lexicographic order and conjugates
# ---------------------------------------------------------------------------


def compare_lex(u: WordLike, v: WordLike, order: TotalOrder) -> int:
    """Return -1, 0 or 1 as ``u`` is below, equal to or above ``v``.

    A proper prefix is smaller than the word it prefixes.
    """
    u, v = word(u, order.degree), word(v, order.degree)
    rank = order.ranks()
    for a, b in zip(u.letters, v.letters):
        if a != b:
            return -1 if rank[a] < rank[b] else 1
    return (len(u) > len(v)) - (len(u) < len(v))


def conjugates(w: WordLike) -> list[Word]:
    """All rotations of ``w``; index 0 is ``w`` itself."""
    w = word(w)
    if not w.letters:
        raise DomainError("the empty word has no conjugates")
    return [w.rotate(i) for i in range(len(w))]


def count_occurrences(w: WordLike, u: WordLike, cyclic: bool = False) -> int:
    """Number of possibly overlapping occurrences of ``u`` in ``w``.

    In cyclic mode occurrences are counted in ``ww`` at start positions
    ``0..|w|-1``.
    """
    w, u = word(w), word(u)
    if not u.letters:
        raise DomainError("cannot count occurrences of the empty word")
    m, N = len(u), len(w)
    if cyclic:
        if m > N:
            raise DomainError(f"cyclic factor length {m} exceeds word length {N}")
        text = w.letters + w.letters[: m - 1]
        starts = range(N)
    else:
        text = w.letters
        starts = range(N - m + 1)
    pat = u.letters
    return sum(1 for i in starts if text[i : i + m] == pat)


def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the least rotation of ``seq``."""
    s = list(seq) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def defined_order(u: WordLike, degree: int | None = None) -> PartialAlphabetOrder:
    """The order in which letters first appear in ``u``."""
    u = word(u, degree)
    seen: dict[int, None] = {}
    for a in u.letters:
        seen.setdefault(a, None)
    return PartialAlphabetOrder(tuple(seen), u.degree)


def is_lyndon(w: WordLike, order: TotalOrder) -> bool:
    """Strictly smaller than every proper conjugate under ``order``."""
    w = word(w, order.degree)
    if not w.letters:
        raise DomainError("the empty word is not a Lyndon word")
    return all(compare_lex(w, c, order) < 0 for c in conjugates(w)[1:])


def lyndon_orders(w: WordLike) -> list[TotalOrder]:
    """Brute force: every total order for which ``w`` is Lyndon."""
    w = word(w)
    if not w.letters:
        raise DomainError("the empty word is not a Lyndon word")
    return [o for o in all_orders(w.degree) if is_lyndon(w, o)]


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WordPredicates:
    primitive: bool
    unbordered: bool
    cyclically_square_free: bool


def is_primitive(letters: Sequence[int]) -> bool:
    t = tuple(letters)
    N = len(t)
    return all(t[p:] + t[:p] != t for p in range(1, N) if N % p == 0)


def is_unbordered(letters: Sequence[int]) -> bool:
    t = tuple(letters)
    return all(t[:k] != t[-k:] for k in range(1, len(t)))


def is_cyclically_square_free(letters: Sequence[int]) -> bool:
    t = tuple(letters)
    N = len(t)
    ww = t + t
    for half in range(1, N // 2 + 1):
        for i in range(N):
            if ww[i : i + half] == ww[i + half : i + 2 * half]:
                return False
    return True


def word_predicates(w: WordLike) -> WordPredicates:
    w = word(w)
    if not w.letters:
        raise DomainError("predicates are defined for non-empty words")
    t = w.letters
    return WordPredicates(is_primitive(t), is_unbordered(t), is_cyclically_square_free(t))


def is_prefix_code(words: Iterable[WordLike]) -> bool:
    ws = sorted({word(x).letters for x in words})
    if ws and not ws[0]:
        raise DomainError("a prefix code cannot contain the empty word")
    # in sorted order a prefix immediately precedes some extension of it
    return all(ws[i + 1][: len(ws[i])] != ws[i] for i in range(len(ws) - 1))


def factorial(n: int) -> int:
    return math.factorial(n)
