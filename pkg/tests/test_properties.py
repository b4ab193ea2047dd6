import itertools
import math

from hypothesis import given, settings
from hypothesis import strategies as st

from unilyndon.core import (
    TotalOrder,
    Word,
    all_orders,
    compare_lex,
    conjugates,
    count_occurrences,
    is_lyndon,
    least_rotation,
    word_predicates,
)
from unilyndon.lexcode import _initial_cells, _split, refine_lex_code, validate_lex_code
from unilyndon.ulw import canonicalize, is_ulw, mt, reverse


def words(max_degree=4, min_size=1, max_size=12):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.lists(st.integers(1, n), min_size=min_size, max_size=max_size).map(
            lambda xs: Word(tuple(xs), n)
        )
    )


def orders(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: TotalOrder(tuple(p)))


@given(words())
def test_text_round_trip(w):
    assert Word.parse(str(w), w.degree) == w


@given(words(), st.data())
def test_cyclic_count_matches_conjugates(w, data):
    n = len(w)
    i = data.draw(st.integers(0, n - 1))
    L = data.draw(st.integers(1, n))
    u = Word(tuple(w.letters[(i + k) % n] for k in range(L)), w.degree)
    naive = sum(1 for c in conjugates(w) if c.letters[:L] == u.letters)
    assert count_occurrences(w, u, cyclic=True) == naive >= 1


@given(words())
def test_letter_counts_sum_to_length(w):
    total = sum(count_occurrences(w, Word((a,), w.degree), cyclic=True) for a in range(1, w.degree + 1))
    assert total == len(w)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=16))
def test_least_rotation_is_minimum(xs):
    k = least_rotation(xs)
    assert xs[k:] + xs[:k] == min(xs[i:] + xs[:i] for i in range(len(xs)))


@given(words(), st.data())
def test_canonical_form_rotation_invariant(w, data):
    i = data.draw(st.integers(0, len(w) - 1))
    c = canonicalize(w)
    assert canonicalize(w.rotate(i)) == c == canonicalize(c.canonical)


@given(words(max_degree=4, max_size=8), st.data())
def test_iso_form_renaming_invariant(w, data):
    p = data.draw(st.permutations(list(range(1, w.degree + 1))))
    assert canonicalize(w.rename(p), True) == canonicalize(w, True)


@given(words(max_degree=3, max_size=8), st.data())
def test_compare_lex_is_a_total_preorder(w, data):
    v = data.draw(words(max_degree=w.degree, max_size=8).map(lambda x: Word(x.letters, w.degree)))
    order = data.draw(orders(w.degree))
    assert compare_lex(w, v, order) == -compare_lex(v, w, order)
    assert (compare_lex(w, v, order) == 0) == (w == v)


@given(words(max_degree=3, max_size=8), st.data())
def test_lyndon_words_are_primitive_and_unbordered(w, data):
    order = data.draw(orders(w.degree))
    if is_lyndon(w, order):
        p = word_predicates(w)
        assert p.primitive and (len(w) == 1 or p.unbordered)


@settings(max_examples=300)
@given(st.lists(st.integers(1, 4), min_size=24, max_size=24))
def test_modes_agree_on_random_degree4_words(xs):
    w = Word(tuple(xs), 4)
    verdicts = {m: is_ulw(w, m).is_ulw for m in ("definitional", "order_defining", "counting")}
    assert len(set(verdicts.values())) == 1


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_ulw_closed_under_symmetries(census4, data):
    w = data.draw(st.sampled_from(census4.words))
    p = data.draw(st.permutations([1, 2, 3, 4]))
    i = data.draw(st.integers(0, 23))
    for v in (w.rename(p), w.rotate(i), reverse(w)):
        assert is_ulw(v)
    assert mt(w.rename(p)) == frozenset(u.rename(p) for u in mt(w))


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 3), st.data())
def test_random_refinement_scripts_give_lex_codes(n, data):
    cells = _initial_cells(n)
    script = []
    while True:
        pending = sorted(x for x, c in cells.items() if len(c) > 1)
        if not pending:
            break
        x = data.draw(st.sampled_from(pending))
        splitting = [
            g
            for size in range(2, n + 1)
            for g in itertools.combinations(range(1, n + 1), size)
            if len(_split(cells[x], g)) > 1
        ]
        gamma = data.draw(st.sampled_from(splitting))
        script.append((x, set(gamma)))
        cell = cells.pop(x)
        for a, part in _split(cell, gamma).items():
            cells[x + (a,)] = part
    code = refine_lex_code(n, script)
    assert code.words == frozenset(cells)
    report = validate_lex_code(code.words, n)
    assert report.valid and len(code) == math.factorial(n)
    # each word is the minimum for exactly the orders of its final cell
    for x, cell in cells.items():
        (ranking,) = cell
        assert report.minimizer[TotalOrder(ranking)] == x
    assert len(all_orders(n)) == len(code)
