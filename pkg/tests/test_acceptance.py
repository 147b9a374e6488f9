"""Acceptance suite: each test implements one acceptance criterion at its
stated tolerance and prints a PASS line when it holds."""

import random
import time
from math import factorial
from pathlib import Path

import pytest

from multibraid import perm
from multibraid.bounds import (
    bounds_tsv,
    derive_bounds,
    markov_parity_example_check,
)
from multibraid.braid import BraidWord, closure_components, expand
from multibraid.construct import (
    conj_same_cycle_type,
    convert_even_with_audit,
    even_pair_product,
    seq_send_first_to,
)
from multibraid.corpus import CORPUS, MULTI_COMPONENT_NAMES
from multibraid.errors import OddImpossible
from multibraid.group import classify_crossing_group, crossing_generators, enumerate_elements
from multibraid.oddn import (
    convert_odd_with_audit,
    mixed_pair_8k5,
    same_parity_pairs_product,
)
from multibraid.triple import convert_triple_with_audit
from multibraid.verify.bracket import (
    bracket_state_sum,
    jones,
    kauffman_bracket_closure,
)
from multibraid.verify.laurent import LaurentPoly
from multibraid.verify.report import equivalence_report


def _announce(criterion: str):
    print(f"ACCEPTANCE {criterion}: PASS")


def test_criterion_1_generation_classifications():
    expectations = []
    for n in (6, 10, 14, 18):
        expectations.append((n, n + 2, "Symmetric", factorial(n + 2)))
    for n in (4, 8, 12, 16):
        expectations.append((n, n + 2, "Alternating", factorial(n + 2) // 2))
    for n in (7, 11, 15):
        half = (n + 3) // 2
        expectations.append(
            (n, n + 3, "ParityProductSymmetric", factorial(half) ** 2)
        )
    for n in (5, 13, 21):
        half = (n + 3) // 2
        expectations.append(
            (n, n + 3, "ParityProductEvenSubgroup", factorial(half) ** 2 // 2)
        )
    for n in (9, 17, 25):
        half = (n + 3) // 2
        expectations.append(
            (n, n + 3, "ParityProductAlternating", (factorial(half) // 2) ** 2)
        )
    for n, m, tag, order in expectations:
        started = time.monotonic()
        c = classify_crossing_group(n, m)
        elapsed = time.monotonic() - started
        assert c.tag == tag, (n, m, c.tag, tag)
        assert c.order == order, (n, m, c.order, order)
        assert elapsed < 5.0, f"cell ({n},{m}) took {elapsed:.2f}s"
    # BFS cross-check on the three smallest cells (degrees <= 10 pick the
    # degree-6 and the two degree-8 cells).
    for n, m in [(4, 6), (5, 8), (6, 8)]:
        gens = crossing_generators(n, m)
        assert classify_crossing_group(n, m).order == len(enumerate_elements(gens))
    _announce("1 generation-classifications")


def test_criterion_2_lemma_replay_suites():
    started = time.monotonic()
    # point transport: exhaustive over widths and targets.
    for n in (4, 6, 8, 10, 12):
        for target in range(1, 3 * n // 2 + 1):
            sched = seq_send_first_to(n, target)
            assert sched.result(1) == target
    # edge pair product: exhaustive even widths up to 40.
    for n in range(4, 41, 2):
        m = 5 * n // 2 - 1
        sched = even_pair_product(n, m)
        assert sched.result == perm.from_cycles(m, [(1, n), (2 * n - 1, 2 * n)])
    # cycle-type steering: 500 random same-type pairs per width.
    rng = random.Random(20260809)
    for n in (4, 6, 8):
        degree = 8 + 3 * n - 3
        for _ in range(500):
            shape = rng.choice([(2,), (3,), (2, 2), (4,), (3, 2), (2, 2, 2)])
            pts_a = rng.sample(range(1, degree + 1), sum(shape))
            pts_b = rng.sample(range(1, degree + 1), sum(shape))
            cycs_a, cycs_b, at = [], [], 0
            for length in shape:
                cycs_a.append(tuple(pts_a[at : at + length]))
                cycs_b.append(tuple(pts_b[at : at + length]))
                at += length
            tau = perm.from_cycles(degree, cycs_a)
            target = perm.from_cycles(degree, cycs_b)
            assert conj_same_cycle_type(tau, target, n).result == target
    # same-parity base pairs: exhaustive odd widths up to 21.
    for n in range(5, 22, 2):
        m = (5 * n - 1) // 2
        odd, even = same_parity_pairs_product(n, m)
        assert odd.result == perm.from_cycles(m, [(3, n), (2 * n - 1, 2 * n + 1)])
        assert even.result == perm.from_cycles(m, [(2, n + 1), (2 * n, 2 * n + 2)])
    # mixed pairs: exhaustive over both widths at minimum strand count.
    for n in (5, 13):
        m = 4 * n - 4
        for l_a in range(1, m - 2):
            for l_b in range(l_a + 3, m - 1):
                if (l_a + l_b) % 2 == 0 or l_b + 2 > m:
                    continue
                sched = mixed_pair_8k5(n, l_a, l_b, m)
                assert sched.result == perm.from_cycles(
                    m, [(l_a, l_a + 2), (l_b, l_b + 2)]
                )
    elapsed = time.monotonic() - started
    assert elapsed < 60.0, f"lemma replay suites took {elapsed:.1f}s"
    _announce("2 lemma-replay-suites")


def test_criterion_3_conversions_end_to_end():
    for n in (4, 6):
        for name, word in CORPUS.items():
            started = time.monotonic()
            out, audit = convert_even_with_audit(word, n)
            assert out.width == n
            assert all(c.width == n for c in out.crossings)
            # stabilize to 3n+1 strands, plus at most one for letter parity.
            assert out.strands <= max(3 * n + 1, word.strands) + 1
            report = equivalence_report(word, out, audit)
            assert report.verdict != "Mismatch", (n, name)
            assert report.jones_match, (n, name)
            assert time.monotonic() - started < 120.0
    for n in (3, 5, 7):
        for name, word in CORPUS.items():
            started = time.monotonic()
            if name not in MULTI_COMPONENT_NAMES:
                with pytest.raises(OddImpossible):
                    if n == 3:
                        convert_triple_with_audit(word)
                    else:
                        convert_odd_with_audit(word, n)
                continue
            if n == 3:
                out, audit = convert_triple_with_audit(word)
                assert out.strands == max(3, word.strands)
            else:
                out, audit = convert_odd_with_audit(word, n)
            assert out.width == n
            assert all(c.width == n for c in out.crossings)
            report = equivalence_report(word, out, audit)
            assert report.verdict != "Mismatch", (n, name)
            assert report.jones_match, (n, name)
            assert time.monotonic() - started < 120.0
    _announce("3 conversion-end-to-end")


def test_criterion_4_invariant_oracle_soundness():
    rng = random.Random(414243)
    for _ in range(200):
        m = rng.randint(1, 5)
        c = rng.randint(0, 12) if m > 1 else 0
        w = BraidWord(
            m, tuple(rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(c))
        )
        assert kauffman_bracket_closure(w) == bracket_state_sum(w)
    from multibraid.braid import conjugate_word, stabilize

    for _ in range(100):
        m = rng.randint(2, 4)
        w = BraidWord(
            m, tuple(rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(6))
        )
        value = jones(w)
        moved = w
        for _ in range(rng.randint(1, 5)):
            if rng.random() < 0.5:
                moved = conjugate_word(
                    moved, rng.choice([1, -1]) * rng.randint(1, moved.strands - 1)
                )
            else:
                moved = stabilize(moved, rng.choice([1, -1]))
        assert jones(moved) == value
    assert jones(BraidWord(2, (1, 1, 1))) == LaurentPoly({-8: -1, -6: 1, -2: 1})
    assert jones(BraidWord(2, (1, 1))) == LaurentPoly({-5: -1, -1: -1})
    _announce("4 invariant-oracle-soundness")


def test_criterion_5_bound_table_golden():
    golden = (Path(__file__).parent / "golden_bounds_14.tsv").read_text()
    first, gaps = derive_bounds(14)
    assert not gaps
    assert bounds_tsv(first) == golden
    second, _ = derive_bounds(14)
    assert bounds_tsv(second) == golden
    have = {(b.lhs_n, b.rhs_m, b.constant) for b in first}
    assert (4, 6, 1) in have
    for n in range(3, 15):
        assert (2, n, 0) in have
    _announce("5 bound-table-golden")


def test_criterion_6_markov_parity():
    for seed in range(250):
        assert markov_parity_example_check(BraidWord(2, (1, 1, 1)), 4, seed)
    rng = random.Random(6)
    for seed in range(750):
        m = rng.randint(2, 5)
        w = BraidWord(
            m,
            tuple(
                rng.choice([1, -1]) * rng.randint(1, m - 1)
                for _ in range(rng.randint(0, 6))
            ),
        )
        assert markov_parity_example_check(w, 3, seed)
    _announce("6 markov-parity")
