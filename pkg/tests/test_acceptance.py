"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal summary
(see ``conftest.py``), then asserts.
"""

import itertools
import math
import time
from collections import Counter

from conftest import ACCEPTANCE
from reference_data import (
    DOUBLE_LYNDON_CONJUGATE,
    J4_EDGES,
    JACKSON_DEGREE4,
    NON_JACKSON_DEGREE4,
    NOT_ULW_DEGREE4,
    ORPHAN_CONJUGATE,
    SPARSE_ULW,
    SPARSE_ULW_MISSING,
    UNIVERSAL_ORDER_NOT_ULW,
)

from unilyndon.census import enumerate_ulws
from unilyndon.cli import main
from unilyndon.core import (
    TotalOrder,
    Word,
    count_occurrences,
    defined_order,
    is_lyndon,
    lyndon_orders,
    word_predicates,
)
from unilyndon.jackson import (
    build_jackson_graph,
    enumerate_eulerian_cycles,
    find_eulerian_cycle,
    word_from_cycle,
)
from unilyndon.lexcode import (
    LexCode,
    conjugate_cycle,
    find_hamiltonian_cycle,
    parse_script,
    refine_lex_code,
    sx_digraph,
    synthesize_ulw,
    validate_lex_code,
)
from unilyndon.ulw import (
    canonicalize,
    check_stretch_closure,
    cyclic_factors,
    is_jackson_type,
    is_ulw,
    is_universal_order_word,
    mt,
    reverse,
    stretch_extensions,
)

MODES = ("definitional", "order_defining", "counting")


def record(key, ok, detail):
    ACCEPTANCE[key] = (bool(ok), detail)
    assert ok, detail


def iso_set(words, n=4):
    return {canonicalize(Word.parse(w, n), up_to_isomorphism=True).canonical for w in words}


def test_criterion_1_census_counts(capsys):
    expected_labeled = {1: 1, 2: 1, 3: 3, 4: 492}
    labeled, timings, lines = {}, {}, {}
    for n in (1, 2, 3, 4):
        t0 = time.perf_counter()
        rc = main(["enumerate", "--degree", str(n)])
        timings[n] = time.perf_counter() - t0
        assert rc == 0
        lines[n] = capsys.readouterr().out.strip().splitlines()[-1]
        labeled[n] = enumerate_ulws(n).labeled_count
    c4 = enumerate_ulws(4)
    fast = all(timings[n] < 1.0 for n in (1, 2, 3)) and timings[4] < 300
    ok = (
        labeled == expected_labeled
        and (c4.iso_class_count, c4.jackson_count, c4.non_jackson_count) == (41, 20, 21)
        and lines[4] == "labeled=492 iso=41 jackson=20 non_jackson=21"
        and fast
    )
    detail = (
        f"labeled {[labeled[n] for n in (1, 2, 3, 4)]} (want 1,1,3,492); "
        f"n=4 iso={c4.iso_class_count} jackson={c4.jackson_count} "
        f"non_jackson={c4.non_jackson_count}; times "
        + ", ".join(f"n={n}:{timings[n]:.2f}s" for n in timings)
    )
    record(1, ok, detail)


def test_criterion_2_table_fidelity(census4):
    jackson = set(census4.jackson_classes) == iso_set(JACKSON_DEGREE4)
    non_jackson = set(census4.non_jackson_classes) == iso_set(NON_JACKSON_DEGREE4)
    record(
        2,
        jackson and non_jackson and len(JACKSON_DEGREE4) == 20 and len(NON_JACKSON_DEGREE4) == 21,
        f"jackson classes equal: {jackson}; non-jackson classes equal: {non_jackson}",
    )


def test_criterion_3_counterexamples():
    checks = {}
    for mode in MODES:
        rep = is_ulw(NOT_ULW_DEGREE4, mode)
        checks[f"rejected ({mode})"] = (
            not rep.is_ulw and str(rep.witness.conjugate) == ORPHAN_CONJUGATE
        )
    orders = set(lyndon_orders(DOUBLE_LYNDON_CONJUGATE))
    checks["double Lyndon orders"] = orders == {
        TotalOrder.parse("3<1<2<4"),
        TotalOrder.parse("3<1<4<2"),
    }
    checks["universal order word"] = is_universal_order_word(UNIVERSAL_ORDER_NOT_ULW)
    checks["universal order word not ULW"] = not any(
        is_ulw(UNIVERSAL_ORDER_NOT_ULW, m).is_ulw for m in MODES
    )
    checks["sparse word is ULW"] = all(is_ulw(SPARSE_ULW, m).is_ulw for m in MODES)
    present = {str(f) for f in cyclic_factors(SPARSE_ULW, 3)}
    checks["sparse word lacks six factors"] = not present & set(SPARSE_ULW_MISSING)
    failed = [k for k, v in checks.items() if not v]
    record(3, not failed, f"{len(checks) - len(failed)}/{len(checks)} checks; failed: {failed}")


def test_criterion_4_mode_equivalence(census4):
    t0 = time.perf_counter()
    disagreements = []
    for letters in itertools.product((1, 2, 3), repeat=6):
        w = Word(letters, 3)
        verdicts = {is_ulw(w, m).is_ulw for m in MODES}
        if len(verdicts) != 1:
            disagreements.append(str(w))
    accepted = 0
    for w in census4.words:
        verdicts = [is_ulw(w, m).is_ulw for m in MODES]
        accepted += all(verdicts)
        if not all(verdicts):
            disagreements.append(str(w))
    elapsed = time.perf_counter() - t0
    record(
        4,
        not disagreements and accepted == census4.labeled_count,
        f"729 degree-3 words + {census4.labeled_count} degree-4 census words, "
        f"{len(disagreements)} disagreements, {elapsed:.1f}s",
    )


def _count_violations(w: Word) -> int:
    # independent of the library's counting check: tally every window of ww
    letters, N, n = w.letters, len(w), w.degree
    doubled = letters + letters
    bad = 0
    for L in range(1, N + 1):
        counts = Counter(doubled[i : i + L] for i in range(N))
        for u, c in counts.items():
            if c != math.factorial(n - len(set(u))):
                bad += 1
    return bad


def _invariant_violations(census):
    v = Counter()
    n = census.degree
    canon = {w.letters for w in census.words}
    for w in census.words:
        v["occurrence_counts"] += _count_violations(w) > 0
        for i in range(len(w)):
            c = w.rotate(i)
            if not is_lyndon(c, defined_order(c).to_total()):
                v["lyndon_defined_order"] += 1
                break
        for u in cyclic_factors(w):
            if len(u.alphabet) < n:
                ext = stretch_extensions(w, u)
                if len(ext) != 1:
                    v["stretch_unique"] += 1
                    break
                (s,) = ext
                if count_occurrences(s, u) != 1:
                    v["stretch_occurrence"] += 1
                    break
        v["stretch_closure"] += not check_stretch_closure(w)
        v["square_free"] += not all(
            word_predicates(w.rotate(i)).cyclically_square_free for i in range(len(w))
        )
        v["reversal"] += canonicalize(reverse(w)).canonical.letters not in canon
    return v


def test_criterion_5_invariant_suites(census3, census4):
    totals = Counter()
    for census in (census3, census4):
        totals.update(_invariant_violations(census))
    bad = {k: c for k, c in totals.items() if c}
    record(
        5,
        not bad,
        f"{census3.labeled_count + census4.labeled_count} census words; violations: {bad or 'none'}",
    )


SCRIPT_A = "- : 1,2\n1 : 1,3\n2 : 2,3\n11 : 2,3\n22 : 1,3\n"
SCRIPT_B = "- : 1,2,3\n1 : 2,3\n2 : 1,3\n3 : 1,2\n"


def test_criterion_6_lexcode_pipeline(census3, census4):
    checks = {}
    code_a = refine_lex_code(*parse_script(SCRIPT_A))
    checks["script A words"] = code_a == LexCode.of(["13", "23", "112", "113", "221", "223"], 3)
    checks["script A not Hamiltonian"] = find_hamiltonian_cycle(sx_digraph(code_a)) is None
    code_b = refine_lex_code(*parse_script(SCRIPT_B))
    checks["script B words"] = code_b == LexCode.of(["12", "13", "21", "23", "31", "32"], 3)
    cycle = find_hamiltonian_cycle(sx_digraph(code_b))
    checks["script B Hamiltonian"] = cycle is not None
    if cycle is not None:
        w = synthesize_ulw(code_b, cycle)
        checks["synthesis isomorphic to 212313"] = (
            canonicalize(w, True) == canonicalize("212313", True) and is_ulw(w).is_ulw
        )
    failures = Counter()
    for census in (census3, census4):
        for w in census.words:
            code = LexCode.of(mt(w), w.degree)
            if not validate_lex_code(code.words, w.degree).valid:
                failures["invalid"] += 1
            if find_hamiltonian_cycle(sx_digraph(code)) is None:
                failures["not hamiltonian"] += 1
            back = synthesize_ulw(code, conjugate_cycle(w))
            if canonicalize(back) != canonicalize(w):
                failures["round trip"] += 1
    checks["census mt codes"] = not failures
    failed = [k for k, v in checks.items() if not v]
    record(
        6,
        not failed,
        f"{len(checks) - len(failed)}/{len(checks)} checks; census failures: {dict(failures) or 'none'}",
    )


def test_criterion_7_jackson_pipeline():
    g = build_jackson_graph(4)
    got = {(str(Word(e.source, 4)), str(Word(e.target, 4)), e.label) for e in g.edges}
    edges_match = got == set(J4_EDGES) and len(g.vertices) == 12 and len(g.edges) == 24
    cycles = 0
    bad = 0
    classes = set()
    for cycle in enumerate_eulerian_cycles(g):
        cycles += 1
        w = word_from_cycle(cycle, 4)
        if not (is_ulw(w).is_ulw and is_jackson_type(w)):
            bad += 1
        classes.add(canonicalize(w, True).canonical)
    classes_match = classes == iso_set(JACKSON_DEGREE4)
    record(
        7,
        edges_match and bad == 0 and classes_match,
        f"edges match: {edges_match}; {cycles} Eulerian cycles, {bad} failing; "
        f"{len(classes)} iso classes match table: {classes_match}",
    )


def test_degree5_smoke():
    t0 = time.perf_counter()
    w = word_from_cycle(find_eulerian_cycle(build_jackson_graph(5)), 5)
    ok = len(w) == 120 and is_ulw(w, "counting").is_ulw
    elapsed = time.perf_counter() - t0
    record("n=5 smoke", ok and elapsed < 1.0, f"120-letter Jackson word verified in {elapsed:.3f}s")
