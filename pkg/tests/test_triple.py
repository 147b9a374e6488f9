import random

import pytest

from multibraid import perm
from multibraid.braid import (
    BraidWord,
    MultiBraidWord,
    MultiCrossing,
    closure_components,
    expand,
    strand_flow,
)
from multibraid.errors import OddImpossible
from multibraid.triple import (
    convert_triple,
    convert_triple_with_audit,
    normalize_parity,
    to_level_position,
)
from multibraid.verify.bracket import jones
from multibraid.verify.garside import braids_equal


def random_word(rng, m, length):
    return BraidWord(
        m, tuple(rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(length))
    )


def random_parity_normalized(rng, m, length):
    """A random word that already preserves position parity and has a
    multi-component closure: built from doubled letters (clasps) and
    same-parity swap patterns."""
    while True:
        letters = []
        for _ in range(length // 2):
            i = rng.randint(1, m - 1)
            s = rng.choice([1, -1])
            letters += [s * i, s * i] if rng.random() < 0.6 else [s * i, -s * i]
        w = BraidWord(m, tuple(letters))
        if perm.preserves_position_parity(strand_flow(w)):
            return w


def test_normalize_parity_hopf_already_alternating():
    out = normalize_parity(BraidWord(2, (1, 1)))
    assert perm.preserves_position_parity(strand_flow(out.word))
    assert set(out.component_parity.values()) == {"odd", "even"}


def test_normalize_parity_rejects_knots():
    with pytest.raises(OddImpossible):
        normalize_parity(BraidWord(2, (1, 1, 1)))
    with pytest.raises(OddImpossible):
        normalize_parity(BraidWord(1))


def test_normalize_parity_three_component_word():
    # 3-component link with twists: components sized {2, 2, 1} on 5 strands.
    w = BraidWord(5, (1, 1, 3, 3, -4, 4))
    out = normalize_parity(w)
    flow = strand_flow(out.word)
    assert perm.preserves_position_parity(flow)
    assert jones(out.word) == jones(w)


def test_normalize_parity_stabilizes_when_sizes_do_not_fit():
    # components sized {3, 1}: no subset fills 2 odd positions, so a
    # stabilization must grow one component first.
    w = BraidWord(4, (1, 2, 1, -2))
    assert closure_components(w) == 2
    out = normalize_parity(w)
    flow = strand_flow(out.word)
    assert perm.preserves_position_parity(flow)
    assert jones(out.word) == jones(w)


def test_to_level_position_already_level():
    w = normalize_parity(BraidWord(3, (1, 1)))
    # sigma_1 sigma_1 over identity arrangement: first letter level-fine,
    # second crosses strands 2,1 entering positions 1,2 so positive is a
    # violation -- unless the relabelling already fixed signs; just check
    # the contract instead of the internals.
    prefix, suffix = to_level_position(w)
    assert braids_equal(expand(prefix) * suffix, w.word)


def test_to_level_position_wrong_sense_letter():
    w = normalize_parity(BraidWord(3, (1, -1)))
    prefix, suffix = to_level_position(w)
    assert braids_equal(expand(prefix) * suffix, w.word)


def test_to_level_position_random_words():
    rng = random.Random(131)
    checked = 0
    for _ in range(100):
        w = random_parity_normalized(rng, 4, 8)
        from multibraid.triple import ParityNormalizedBraid

        wrapped = ParityNormalizedBraid(w, {})
        prefix, suffix = to_level_position(wrapped)
        assert braids_equal(expand(prefix) * suffix, w)
        # suffix letters all level-correct.
        arrangement = list(range(1, 5))
        for x in suffix.letters:
            i = abs(x)
            a, b = arrangement[i - 1], arrangement[i]
            assert (x > 0) == (a < b)
            arrangement[i - 1], arrangement[i] = b, a
        checked += 1
    assert checked == 100


def test_convert_triple_hopf():
    w = BraidWord(2, (1, 1))
    out = convert_triple(w)
    assert out.width == 3
    assert out.strands == 3
    assert closure_components(out) == 2
    assert jones(expand(out)) == jones(w)


def test_convert_triple_two_component_unlink():
    w = BraidWord(2)
    out = convert_triple(w)
    assert out.strands == 3
    assert jones(expand(out)) == jones(w)


def test_convert_triple_solomon():
    w = BraidWord(2, (1, 1, 1, 1))
    out = convert_triple(w)
    assert out.width == 3 and out.strands == 3
    assert jones(expand(out)) == jones(w)


def test_convert_triple_trefoil_impossible():
    with pytest.raises(OddImpossible):
        convert_triple(BraidWord(2, (1, 1, 1)))


def test_convert_triple_random_multicomponent():
    rng = random.Random(137)
    done = 0
    while done < 12:
        w = random_word(rng, rng.choice([2, 3, 4]), rng.randint(0, 6))
        if closure_components(w) < 2:
            continue
        out, audit = convert_triple_with_audit(w)
        assert out.width == 3
        assert closure_components(out) == closure_components(w)
        assert jones(expand(out)) == jones(w)
        assert audit["schema"] == 1
        done += 1


def test_convert_triple_strand_count():
    assert convert_triple(BraidWord(2, (1, 1))).strands == 3
    w4 = BraidWord(4, (1, 1, 3, 3))
    assert convert_triple(w4).strands == 4
