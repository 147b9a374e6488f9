"""Left-greedy (Garside) normal form for braid words.

A positive permutation braid, in which every pair of strands crosses at
most once and always positively, is determined by its image in the
symmetric group; we represent factors directly as permutations with the
convention that concatenating braids composes their projections left to
right (rightmost acting first, as everywhere in this package).  The half
twist Δ corresponds to the order-reversing permutation.

The normal form of a word is Δ^p · A_1 ··· A_k with every factor a
non-trivial, non-Δ permutation braid and every adjacent pair
left-weighted: the starting set of A_{i+1} is contained in the finishing
set of A_i.  Two words are equal in the braid group exactly when their
normal forms coincide, which makes this the package's exact equality
oracle for braids on the same strand count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import perm
from ..braid import BraidWord
from ..perm import Permutation


def _w0(m: int) -> Permutation:
    return Permutation(tuple(range(m, 0, -1)))


def _starting_set(p: Permutation) -> set[int]:
    """Generators that can begin a reduced word for p (left descents)."""
    inv = perm.inverse(p)
    return {i for i in range(1, p.degree) if inv(i) > inv(i + 1)}


def _finishing_set(p: Permutation) -> set[int]:
    """Generators that can end a reduced word for p (right descents)."""
    return {i for i in range(1, p.degree) if p(i) > p(i + 1)}


def _tau(p: Permutation) -> Permutation:
    """Conjugation by the half twist: flips generator indices i -> m-i."""
    w0 = _w0(p.degree)
    return perm.compose(w0, perm.compose(p, w0))


@dataclass(frozen=True)
class NormalForm:
    """Δ^delta_power followed by left-weighted permutation-braid factors."""

    strands: int
    delta_power: int
    factors: tuple[Permutation, ...]

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self) -> str:
        body = " . ".join(perm.format_cycles(f) for f in self.factors) or "e"
        return f"Δ^{self.delta_power} {body}"


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy normal form; identical forms characterise equal braids."""
    m = w.strands
    if m == 1:
        return NormalForm(1, 0, ())
    w0 = _w0(m)
    negatives_after = [0] * (len(w.letters) + 1)
    for i in range(len(w.letters) - 1, -1, -1):
        negatives_after[i] = negatives_after[i + 1] + (1 if w.letters[i] < 0 else 0)

    delta_power = -negatives_after[0]
    factors: list[Permutation] = []
    for i, x in enumerate(w.letters):
        g = perm.transposition(m, abs(x), abs(x) + 1)
        # σ_i contributes the one-crossing factor; σ_i⁻¹ contributes
        # Δ⁻¹ · (the braid completing σ_i to a half twist on the left).
        factor = g if x > 0 else perm.compose(w0, g)
        # every Δ⁻¹ arising to the right of this factor passes it on the
        # way to the front, conjugating by the half twist each time.
        if negatives_after[i + 1] % 2 == 1:
            factor = _tau(factor)
        factors.append(factor)

    factors = [f for f in factors if not f.is_identity()]
    delta_power += _normalize(factors, m)
    return NormalForm(m, delta_power, tuple(factors))


def _normalize(factors: list[Permutation], m: int) -> int:
    """Left-weight the factor list in place; return the Δ-power absorbed."""
    w0 = _w0(m)
    absorbed = 0
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(factors) - 1:
            a, b = factors[i], factors[i + 1]
            moved = _starting_set(b) - _finishing_set(a)
            while moved:
                g = perm.transposition(m, min(moved), min(moved) + 1)
                a = perm.compose(a, g)
                b = perm.compose(g, b)
                changed = True
                if b.is_identity():
                    break
                moved = _starting_set(b) - _finishing_set(a)
            factors[i] = a
            if b.is_identity():
                del factors[i + 1]
            else:
                factors[i + 1] = b
            i += 1
        # absorb any full twists into the delta power, flipping factors
        # they pass on the way to the front.
        i = 0
        while i < len(factors):
            if factors[i] == w0:
                for j in range(i):
                    factors[j] = _tau(factors[j])
                del factors[i]
                absorbed += 1
                changed = True
            else:
                i += 1
    return absorbed


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    """Exact braid-group equality (same strand count required)."""
    if u.strands != v.strands:
        return False
    return normal_form(u) == normal_form(v)


def _lift(p: Permutation) -> list[int]:
    """The lexicographically smallest reduced word for a permutation braid."""
    letters: list[int] = []
    cur = p
    while not cur.is_identity():
        i = min(_starting_set(cur))
        letters.append(i)
        cur = perm.compose(perm.transposition(p.degree, i, i + 1), cur)
    return letters


def canonical_word(w: BraidWord) -> BraidWord:
    """A canonical braid word: the normal form flattened back to letters.

    Words are equal in the braid group iff their canonical words are
    identical letter for letter.
    """
    nf = normal_form(w)
    m = w.strands
    letters: list[int] = []
    if m > 1:
        delta_letters = _lift(_w0(m))
        if nf.delta_power >= 0:
            letters.extend(delta_letters * nf.delta_power)
        else:
            inverse_delta = [-x for x in reversed(delta_letters)]
            letters.extend(inverse_delta * (-nf.delta_power))
    for f in nf.factors:
        letters.extend(_lift(f))
    return BraidWord(m, tuple(letters))
