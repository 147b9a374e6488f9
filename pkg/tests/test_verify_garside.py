import random

from multibraid.braid import BraidWord
from multibraid.verify.garside import braids_equal, canonical_word, normal_form


def random_word(rng, m, length):
    return BraidWord(
        m, tuple(rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(length))
    )


def test_braid_relation():
    u = BraidWord(3, (1, 2, 1))
    v = BraidWord(3, (2, 1, 2))
    assert normal_form(u) == normal_form(v)
    assert braids_equal(u, v)


def test_far_commutation():
    assert braids_equal(BraidWord(5, (1, 3)), BraidWord(5, (3, 1)))
    assert braids_equal(BraidWord(5, (1, -4)), BraidWord(5, (-4, 1)))


def test_free_cancellation():
    w = BraidWord(3, (1, -1))
    nf = normal_form(w)
    assert nf.is_trivial()
    assert braids_equal(w, BraidWord(3))


def test_distinct_words_differ():
    assert not braids_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    assert not braids_equal(BraidWord(3, (1,)), BraidWord(3, (-1,)))


def test_strand_count_mismatch():
    assert not braids_equal(BraidWord(3, (1,)), BraidWord(4, (1,)))


def test_inverse_gives_trivial_form():
    rng = random.Random(31)
    for _ in range(60):
        m = rng.randint(2, 6)
        w = random_word(rng, m, rng.randint(0, 12))
        assert normal_form(w * w.inverse_word()).is_trivial()


def test_random_relation_insertions_preserve_form():
    rng = random.Random(33)
    for _ in range(60):
        m = rng.randint(3, 6)
        w = random_word(rng, m, rng.randint(0, 10))
        letters = list(w.letters)
        pos = rng.randint(0, len(letters))
        kind = rng.random()
        if kind < 0.4:
            g = rng.choice([1, -1]) * rng.randint(1, m - 1)
            ins = [g, -g]
        elif kind < 0.7:
            i = rng.randint(1, m - 2)
            ins = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
        else:
            pool = [i for i in range(1, m - 1) for j in range(i + 2, m)]
            if not pool:
                continue
            i = rng.randint(1, m - 3)
            j = rng.randint(i + 2, m - 1)
            ins = [i, j, -i, -j]
        v = BraidWord(m, tuple(letters[:pos] + ins + letters[pos:]))
        assert braids_equal(w, v)


def test_canonical_word_is_equal_and_stable():
    rng = random.Random(37)
    for _ in range(40):
        m = rng.randint(2, 5)
        w = random_word(rng, m, rng.randint(0, 8))
        c = canonical_word(w)
        assert braids_equal(w, c)
        assert canonical_word(c) == c


def test_single_strand():
    assert normal_form(BraidWord(1)).is_trivial()
