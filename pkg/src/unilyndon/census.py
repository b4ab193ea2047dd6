"""Exhaustive enumeration and classification of universal Lyndon words."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from . import kernels
from .core import CapacityError, DomainError, Word, WordLike, word
from .ulw import _passes_counting, canonicalize, is_jackson_type, is_ulw

MAX_CENSUS_DEGREE = 4


@dataclass(frozen=True)
class UlwCensus:
    degree: int
    words: tuple[Word, ...]
    iso_class: tuple[int, ...]
    classes: tuple[Word, ...]
    class_is_jackson: tuple[bool, ...]
    jackson_by_convention: bool = False

    @property
    def labeled_count(self) -> int:
        return len(self.words)

    @property
    def iso_class_count(self) -> int:
        return len(self.classes)

    @property
    def jackson_count(self) -> int:
        return sum(self.class_is_jackson)

    @property
    def non_jackson_count(self) -> int:
        return self.iso_class_count - self.jackson_count

    @property
    def jackson_classes(self) -> tuple[Word, ...]:
        return tuple(c for c, j in zip(self.classes, self.class_is_jackson) if j)

    @property
    def non_jackson_classes(self) -> tuple[Word, ...]:
        return tuple(c for c, j in zip(self.classes, self.class_is_jackson) if not j)

    def summary(self) -> dict:
        return {
            "degree": self.degree,
            "labeled": self.labeled_count,
            "iso": self.iso_class_count,
            "jackson": self.jackson_count,
            "non_jackson": self.non_jackson_count,
            "jackson_by_convention": self.jackson_by_convention,
        }

    def summary_line(self) -> str:
        return (
            f"labeled={self.labeled_count} iso={self.iso_class_count} "
            f"jackson={self.jackson_count} non_jackson={self.non_jackson_count}"
        )

    def to_jsonl(self) -> str:
        lines = [
            json.dumps(
                {
                    "word": str(w),
                    "iso_class_id": k,
                    "jackson": self.class_is_jackson[k],
                }
            )
            for w, k in zip(self.words, self.iso_class)
        ]
        lines.append(json.dumps({"summary": self.summary()}))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Classification:
    degree: int
    jackson: tuple[Word, ...]
    non_jackson: tuple[Word, ...]
    by_convention: bool = False


def _search(args):
    n, prefix = args
    return kernels.search_candidates(n, prefix)


def _prefixes(n: int) -> list[tuple[int, ...]]:
    if n < 3:
        return [()]
    return [(1, a) for a in range(2, n + 1)]


def enumerate_ulws(
    n: int, workers: int = 1, progress: Optional[Callable[[str], None]] = None
) -> UlwCensus:
    """All universal Lyndon words of degree ``n`` up to rotation, classified.

    Candidates come from the pruned necklace search in :mod:`.kernels`;
    each is confirmed by the counting check, which also covers factors
    that wrap around the end of the word.
    """
    if not 1 <= n <= MAX_CENSUS_DEGREE:
        raise CapacityError(f"exhaustive enumeration supports 1 <= n <= {MAX_CENSUS_DEGREE}")
    jobs = [(n, p) for p in _prefixes(n)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            chunks = list(pool.map(_search, jobs))
    else:
        chunks = [_search(j) for j in jobs]
    candidates = sorted(set(t for chunk in chunks for t in chunk))
    if progress:
        progress(f"degree {n}: {len(candidates)} candidates from {kernels.BACKEND} search")
    found = [Word(t, n) for t in candidates if _passes_counting(t, n)]
    if progress:
        progress(f"degree {n}: {len(found)} verified")
    return _build_census(n, found)


def _build_census(n: int, found: list[Word]) -> UlwCensus:
    words = tuple(sorted((canonicalize(w).canonical for w in found), key=lambda w: w.letters))
    reps = [canonicalize(w, up_to_isomorphism=True).canonical for w in words]
    classes = tuple(sorted(set(reps), key=lambda w: w.letters))
    index = {c: k for k, c in enumerate(classes)}
    jackson = tuple(is_jackson_type(c) for c in classes)
    return UlwCensus(
        degree=n,
        words=words,
        iso_class=tuple(index[r] for r in reps),
        classes=classes,
        class_is_jackson=jackson,
        jackson_by_convention=n <= 2,
    )


def census_from_words(words: Iterable[WordLike], degree: int | None = None) -> UlwCensus:
    """Census of an external word list; every entry must be a ULW."""
    checked = []
    for x in words:
        w = word(x, degree)
        if not is_ulw(w, "counting"):
            raise DomainError(f"{w} is not a universal Lyndon word")
        checked.append(w)
    if not checked:
        raise DomainError("empty word list")
    degrees = {w.degree for w in checked}
    if len(degrees) != 1:
        raise DomainError(f"mixed degrees {sorted(degrees)}")
    unique = {canonicalize(w).canonical: None for w in checked}
    return _build_census(degrees.pop(), list(unique))


def classify_ulws(source: Union[UlwCensus, Iterable[WordLike]], degree: int | None = None) -> Classification:
    """Split isomorphism classes into Jackson and non-Jackson representatives.

    Degrees 1 and 2 have no Jackson graph; their single class is reported
    as Jackson by convention and flagged.
    """
    census = source if isinstance(source, UlwCensus) else census_from_words(source, degree)
    return Classification(
        census.degree,
        census.jackson_classes,
        census.non_jackson_classes,
        census.jackson_by_convention,
    )
