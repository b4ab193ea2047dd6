"""Verification and structure of universal Lyndon words.

A word of length ``n!`` over ``{1..n}`` is universal Lyndon when each of its
conjugates is a Lyndon word for some alphabet order. Three independent
checks are offered (see :func:`is_ulw`); they agree on every input.

Conjugate indices are 0-based throughout: index ``i`` is the rotation
starting at ``w[i]``.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    MAX_ORDER_DEGREE,
    CapacityError,
    DomainError,
    PartialAlphabetOrder,
    TotalOrder,
    Word,
    WordLike,
    all_orders,
    defined_order,
    is_primitive,
    least_rotation,
    word,
)

MODES = ("definitional", "order_defining", "counting")
_MODE_ALIASES = {
    "definitional": "definitional",
    "order_defining": "order_defining",
    "order-defining": "order_defining",
    "orderDefining": "order_defining",
    "counting": "counting",
}

# beyond this degree the per-order Lyndon table costs too much for a diagnostic
DIAGNOSIS_MAX_DEGREE = 6


@dataclass(frozen=True)
class Witness:
    reason: str
    conjugate_index: Optional[int] = None
    conjugate: Optional[Word] = None
    lyndon_orders: Optional[tuple[TotalOrder, ...]] = None
    rival_index: Optional[int] = None
    rival_orders: Optional[tuple[TotalOrder, ...]] = None
    factor: Optional[Word] = None
    factor_count: Optional[int] = None
    expected_count: Optional[int] = None

    def to_dict(self) -> dict:
        def orders(os):
            return None if os is None else [str(o) for o in os]

        return {
            "reason": self.reason,
            "conjugate_index": self.conjugate_index,
            "conjugate": None if self.conjugate is None else str(self.conjugate),
            "lyndon_orders": orders(self.lyndon_orders),
            "rival_index": self.rival_index,
            "rival_orders": orders(self.rival_orders),
            "factor": None if self.factor is None else str(self.factor),
            "factor_count": self.factor_count,
            "expected_count": self.expected_count,
        }


@dataclass(frozen=True)
class UlwReport:
    is_ulw: bool
    mode: str
    degree: int
    length: int
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.is_ulw

    def to_dict(self) -> dict:
        return {
            "is_ulw": self.is_ulw,
            "mode": self.mode,
            "degree": self.degree,
            "length": self.length,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass(frozen=True, order=True)
class CyclicWord:
    """A conjugacy class, stored as its least rotation under 1<2<...<n."""

    canonical: Word = field(compare=False)
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", (self.canonical.degree, self.canonical.letters))

    @property
    def degree(self) -> int:
        return self.canonical.degree

    def __str__(self) -> str:
        return str(self.canonical)


# ---------------------------------------------------------------------------
# small helpers on letter tuples
# ---------------------------------------------------------------------------


def _cyclic(letters: tuple, i: int, length: int) -> tuple:
    N = len(letters)
    i %= N
    if i + length <= N:
        return letters[i : i + length]
    return letters[i:] + letters[: (i + length) - N]


def _text(letters) -> str:
    return "".join(chr(0x100 + a) for a in letters)


def _has_cyclic_factor(letters: tuple, u: tuple) -> bool:
    if len(u) > len(letters):
        return False
    doubled = _text(letters + letters[: len(u) - 1]) if u else ""
    return _text(u) in doubled


def cyclic_factors(w: WordLike, length: int | None = None) -> set[Word]:
    """All non-empty cyclic factors of ``w`` (optionally of one length)."""
    w = word(w)
    N = len(w)
    lengths = range(1, N + 1) if length is None else [length]
    return {
        Word(_cyclic(w.letters, i, L), w.degree) for L in lengths for i in range(N)
    }


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _count_violation(letters: tuple, n: int):
    """First cyclic factor whose count differs from ``(n - |alp|)!``.

    Returns ``(start, length, count, expected)`` or ``None``. Factors are
    scanned by increasing length; classes of equal factors are refined one
    letter at a time, and the scan stops once every factor is unique (all
    longer factors are then unique as well and contain at least as many
    letters).
    """
    N = len(letters)
    budget = [math.factorial(n - k) for k in range(n + 1)]
    counts = Counter(letters)
    for a in range(1, n + 1):
        if counts[a] != budget[1]:
            start = letters.index(a) if counts[a] else None
            return (start, (a,), counts[a], budget[1])
    cls = list(letters)
    masks = [1 << a for a in letters]
    if len(counts) == N:
        return None
    for L in range(2, N + 1):
        table: dict = {}
        nxt = []
        for i in range(N):
            b = letters[(i + L - 1) % N]
            masks[i] |= 1 << b
            nxt.append(table.setdefault((cls[i], b), len(table)))
        cls = nxt
        sizes = Counter(cls)
        for i in range(N):
            expected = budget[_popcount(masks[i])]
            if sizes[cls[i]] != expected:
                return (i, _cyclic(letters, i, L), sizes[cls[i]], expected)
        if len(sizes) == N:
            return None
    return None


@functools.lru_cache(maxsize=4096)
def _passes_counting(letters: tuple, n: int) -> bool:
    return bool(letters) and _count_violation(letters, n) is None


def _require_ulw(w: Word) -> None:
    if not _passes_counting(w.letters, w.degree):
        report = is_ulw(w, "counting")
        detail = report.witness.to_dict() if report.witness else {}
        raise DomainError(f"{w} is not a universal Lyndon word (counting check: {detail})")


def _lyndon_index_by_order(letters: tuple, n: int) -> dict[TotalOrder, Optional[int]]:
    """For each total order, the conjugate index that is Lyndon for it.

    A primitive word has exactly one Lyndon conjugate per order, namely its
    least rotation; a non-primitive word has none.
    """
    primitive = is_primitive(letters)
    result: dict[TotalOrder, Optional[int]] = {}
    for order in all_orders(n):
        if not primitive:
            result[order] = None
            continue
        rank = order.ranks()
        result[order] = least_rotation([rank[a] for a in letters])
    return result


def _conjugate_defined_chain(letters: tuple, i: int, n: int) -> tuple[int, ...]:
    """First-occurrence order of the rotation starting at ``i``."""
    N = len(letters)
    seen: dict[int, None] = {}
    for k in range(N):
        a = letters[(i + k) % N]
        if a not in seen:
            seen[a] = None
            if len(seen) >= n - 1:
                break
    return tuple(seen)


def lyndon_orders_by_conjugate(w: WordLike) -> list[list[TotalOrder]]:
    """For each conjugate index, the orders making that conjugate Lyndon."""
    w = word(w)
    if w.degree > MAX_ORDER_DEGREE:
        raise CapacityError(f"degree {w.degree} exceeds {MAX_ORDER_DEGREE}")
    table: list[list[TotalOrder]] = [[] for _ in range(len(w))]
    for order, idx in _lyndon_index_by_order(w.letters, w.degree).items():
        if idx is not None:
            table[idx].append(order)
    return table


def _diagnose(w: Word) -> Optional[Witness]:
    """Blame a conjugate that is Lyndon for no order.

    When some conjugate is Lyndon for two or more orders it takes an order
    away from the conjugate that defines it; that conjugate is reported,
    along with the one that took its order.
    """
    n = w.degree
    table = lyndon_orders_by_conjugate(w)
    definer: dict[tuple, int] = {}
    for i in range(len(w)):
        chain = _conjugate_defined_chain(w.letters, i, n)
        if len(chain) >= n - 1:
            definer.setdefault(PartialAlphabetOrder(chain, n).to_total().ranking, i)
    for j, orders in enumerate(table):
        if len(orders) < 2:
            continue
        for order in orders:
            i = definer.get(order.ranking)
            if i is not None and i != j and not table[i]:
                return Witness(
                    "lyndon",
                    conjugate_index=i,
                    conjugate=w.rotate(i),
                    lyndon_orders=(),
                    rival_index=j,
                    rival_orders=tuple(orders),
                )
    for i, orders in enumerate(table):
        if not orders:
            return Witness("lyndon", conjugate_index=i, conjugate=w.rotate(i), lyndon_orders=())
    for i, orders in enumerate(table):
        if len(orders) > 1:
            return Witness(
                "lyndon", conjugate_index=i, conjugate=w.rotate(i), lyndon_orders=tuple(orders)
            )
    return None


# ---------------------------------------------------------------------------
# the three checks
# ---------------------------------------------------------------------------


def _check_definitional(w: Word) -> Optional[Witness]:
    n = w.degree
    if n > MAX_ORDER_DEGREE:
        raise CapacityError(f"definitional check enumerates {n}! orders; limit is n <= {MAX_ORDER_DEGREE}")
    if len(w) != math.factorial(n):
        return Witness("length", expected_count=math.factorial(n))
    table = lyndon_orders_by_conjugate(w)
    if all(len(orders) == 1 for orders in table):
        return None
    return _diagnose(w)


def _check_order_defining(w: Word) -> Optional[Witness]:
    n = w.degree
    letters = w.letters
    if len(w) != math.factorial(n):
        return Witness("length", expected_count=math.factorial(n))
    primitive = is_primitive(letters)
    least: dict[tuple, int] = {}
    for i in range(len(w)):
        chain = _conjugate_defined_chain(letters, i, n)
        ok = len(chain) >= n - 1 and primitive
        if ok:
            order = PartialAlphabetOrder(chain, n).to_total()
            if order.ranking not in least:
                rank = order.ranks()
                least[order.ranking] = least_rotation([rank[a] for a in letters])
            ok = least[order.ranking] == i
        if not ok:
            return Witness("order_defining", conjugate_index=i, conjugate=w.rotate(i))
    return None


def _check_counting(w: Word) -> Optional[Witness]:
    found = _count_violation(w.letters, w.degree)
    if found is None:
        return None
    start, factor, count, expected = found
    return Witness(
        "count",
        conjugate_index=start,
        conjugate=None if start is None else w.rotate(start),
        factor=Word(factor, w.degree),
        factor_count=count,
        expected_count=expected,
    )


def is_ulw(w: WordLike, mode: str = "counting") -> UlwReport:
    """Decide whether ``w`` is a universal Lyndon word.

    ``definitional`` tests every conjugate against all ``n!`` orders;
    ``order_defining`` tests every conjugate against the order of first
    letter occurrences; ``counting`` checks that each cyclic factor ``u``
    occurs exactly ``(n - |alp(u)|)!`` times (every letter of the alphabet
    included).

    On failure of a word of length ``n!`` with ``n <= 6`` the witness names
    a conjugate that is Lyndon for no order, whichever mode ran.
    """
    w = word(w)
    if not w.letters:
        raise DomainError("the empty word is not a universal Lyndon word")
    try:
        mode = _MODE_ALIASES[mode]
    except KeyError:
        raise DomainError(f"unknown mode {mode!r}; expected one of {MODES}") from None
    missing = [a for a in range(1, w.degree + 1) if a not in w.alphabet]
    if missing:
        # (n-1)! occurrences of every letter are required; reject up front
        witness = Witness(
            "missing_letters",
            factor=Word((missing[0],), w.degree),
            factor_count=0,
            expected_count=math.factorial(w.degree - 1),
        )
        return UlwReport(False, mode, w.degree, len(w), witness)
    check = {
        "definitional": _check_definitional,
        "order_defining": _check_order_defining,
        "counting": _check_counting,
    }[mode]
    witness = check(w)
    if (
        witness is not None
        and witness.reason not in ("length", "missing_letters")
        and len(w) == math.factorial(w.degree)
        and w.degree <= DIAGNOSIS_MAX_DEGREE
        and witness.lyndon_orders is None
    ):
        blame = _diagnose(w)
        if blame is not None:
            witness = Witness(
                witness.reason,
                conjugate_index=blame.conjugate_index,
                conjugate=blame.conjugate,
                lyndon_orders=blame.lyndon_orders,
                rival_index=blame.rival_index,
                rival_orders=blame.rival_orders,
                factor=witness.factor,
                factor_count=witness.factor_count,
                expected_count=witness.expected_count,
            )
    return UlwReport(witness is None, mode, w.degree, len(w), witness)


# ---------------------------------------------------------------------------
# structure of a ULW
# ---------------------------------------------------------------------------


def _unrepeated_prefix_lengths(letters: tuple) -> list[int]:
    """Length of the shortest prefix of each rotation that occurs once."""
    N = len(letters)
    result = [0] * N
    cls = list(letters)
    pending = set(range(N))
    L = 1
    while pending:
        sizes = Counter(cls)
        for i in list(pending):
            if sizes[cls[i]] == 1:
                result[i] = L
                pending.discard(i)
        if not pending or L == N:
            break
        L += 1
        table: dict = {}
        cls = [table.setdefault((cls[i], letters[(i + L - 1) % N]), len(table)) for i in range(N)]
    for i in pending:
        result[i] = N
    return result


def shortest_unrepeated_prefix(w: WordLike, i: int) -> Word:
    """Shortest prefix of conjugate ``i`` occurring once as a cyclic factor."""
    w = word(w)
    _require_ulw(w)
    if not 0 <= i < len(w):
        raise DomainError(f"conjugate index {i} outside 0..{len(w) - 1}")
    L = _unrepeated_prefix_lengths(w.letters)[i]
    return Word(_cyclic(w.letters, i, L), w.degree)


def mt_sequence(w: WordLike) -> list[Word]:
    """Shortest unrepeated prefixes of the conjugates, in conjugate order."""
    w = word(w)
    _require_ulw(w)
    lengths = _unrepeated_prefix_lengths(w.letters)
    return [Word(_cyclic(w.letters, i, L), w.degree) for i, L in enumerate(lengths)]


def mt(w: WordLike) -> frozenset[Word]:
    """The minimal total order-defining cyclic factors of a ULW."""
    return frozenset(mt_sequence(w))


def _order_arg(p, n: int) -> PartialAlphabetOrder:
    if isinstance(p, PartialAlphabetOrder):
        if p.degree != n:
            raise DomainError(f"degree mismatch: order {p.degree}, word {n}")
        return p
    if isinstance(p, TotalOrder):
        return PartialAlphabetOrder(p.ranking, n)
    return PartialAlphabetOrder(tuple(p), n)


def _minimal_order_defining_brute(w: Word, p: PartialAlphabetOrder) -> Word:
    if p.size == 0:
        return Word((), w.degree)
    N = len(w)
    for L in range(1, N + 1):
        hits = {
            _cyclic(w.letters, i, L)
            for i in range(N)
            if defined_order(Word(_cyclic(w.letters, i, L), w.degree)) == p
        }
        if hits:
            if len(hits) > 1:
                raise DomainError(f"order {p} has {len(hits)} minimal defining words in {w}")
            return Word(hits.pop(), w.degree)
    raise DomainError(f"no cyclic factor of {w} defines {p}")


def minimal_order_defining_word(w: WordLike, p, method: str = "prefix") -> Word:
    """The unique minimal cyclic factor of ``w`` defining the order ``p``.

    ``p`` may be a :class:`PartialAlphabetOrder`, a :class:`TotalOrder` or a
    plain chain of letters. ``method="prefix"`` reads the answer off the
    conjugate whose own order extends ``p``; ``method="brute"`` scans every
    cyclic factor by length.
    """
    w = word(w)
    _require_ulw(w)
    p = _order_arg(p, w.degree)
    if method == "brute":
        return _minimal_order_defining_brute(w, p)
    if method != "prefix":
        raise DomainError(f"unknown method {method!r}")
    chain = p.reduced_chain
    if not chain:
        return Word((), w.degree)
    n, N = w.degree, len(w)
    target = set(chain)
    for i in range(N):
        if _conjugate_defined_chain(w.letters, i, n)[: len(chain)] == chain:
            seen: set[int] = set()
            for k in range(N):
                seen.add(w.letters[(i + k) % N])
                if seen == target:
                    return Word(_cyclic(w.letters, i, k + 1), n)
    return _minimal_order_defining_brute(w, p)


def stretch_extensions(w: WordLike, u: WordLike) -> frozenset[Word]:
    """Stretches of ``w`` containing ``u`` and having the same alphabet.

    A stretch is a cyclic factor ``v`` such that ``a v b`` is a cyclic factor
    (so ``|v| + 2 <= |w|``) for letters ``a, b`` outside ``alp(v)``.
    """
    w = word(w)
    u = word(u, w.degree)
    if not u.letters or not _has_cyclic_factor(w.letters, u.letters):
        raise DomainError(f"{u} is not a cyclic factor of {w}")
    alphabet = set(u.letters)
    N = len(w)
    outside = [i for i in range(N) if w.letters[i] not in alphabet]
    found: set[Word] = set()
    for k, start in enumerate(outside):
        stop = outside[(k + 1) % len(outside)] if outside else start
        run_len = (stop - start - 1) % N if len(outside) > 1 else N - 1
        if run_len == 0 or run_len + 2 > N:
            continue
        run = _cyclic(w.letters, start + 1, run_len)
        if set(run) == alphabet and _text(u.letters) in _text(run):
            found.add(Word(run, w.degree))
    return frozenset(found)


def check_stretch_closure(w: WordLike) -> bool:
    """If ``a s a`` (``a`` not in ``s``) occurs, so does ``b s b`` for each
    letter ``b`` outside ``s``."""
    w = word(w)
    letters = w.letters
    N = len(letters)
    doubled = _text(letters + letters)
    n = w.degree
    for i in range(N):
        a = letters[i]
        for j in range(1, N):
            if letters[(i + j) % N] == a:
                break
        else:
            continue
        if j + 1 > N:
            continue
        s = _cyclic(letters, i + 1, j - 1)
        inner = set(s)
        for b in range(1, n + 1):
            if b not in inner and _text((b,) + s + (b,)) not in doubled[: 2 * N - 1]:
                return False
    return True


def canonicalize(w: WordLike, up_to_isomorphism: bool = False) -> CyclicWord:
    """Least rotation, optionally minimised over every renaming of letters."""
    w = word(w)
    if not w.letters:
        return CyclicWord(w)
    if not up_to_isomorphism:
        return CyclicWord(w.rotate(least_rotation(w.letters)))
    if w.degree > MAX_ORDER_DEGREE:
        raise CapacityError(f"isomorphism canonicalization limited to n <= {MAX_ORDER_DEGREE}")
    best = None
    for perm in itertools.permutations(range(1, w.degree + 1)):
        renamed = tuple(perm[a - 1] for a in w.letters)
        k = least_rotation(renamed)
        cand = renamed[k:] + renamed[:k]
        if best is None or cand < best:
            best = cand
    return CyclicWord(Word(best, w.degree))


def is_jackson_type(w: WordLike) -> bool:
    """Every arrangement of ``n-1`` distinct letters occurs exactly once."""
    w = word(w)
    _require_ulw(w)
    n = w.degree
    if n <= 1:
        return True
    windows = Counter(
        f for f in (_cyclic(w.letters, i, n - 1) for i in range(len(w))) if len(set(f)) == n - 1
    )
    return len(windows) == math.factorial(n) and all(c == 1 for c in windows.values())


def is_universal_order_word(w: WordLike) -> bool:
    """Every conjugate defines a total order, and no two the same."""
    w = word(w)
    n = w.degree
    if len(w) != math.factorial(n):
        raise DomainError(f"length {len(w)} is not {n}! = {math.factorial(n)}")
    seen = set()
    for i in range(len(w)):
        chain = _conjugate_defined_chain(w.letters, i, n)
        if len(chain) < n - 1 or chain in seen:
            return False
        seen.add(chain)
    return True


def reverse(w: WordLike) -> Word:
    w = word(w)
    return Word(w.letters[::-1], w.degree)
