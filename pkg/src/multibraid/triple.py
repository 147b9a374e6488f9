"""Conversion of multi-component braid closures into triple-crossing form.

Pipeline:

1. ``normalize_parity`` relabels strands by a conjugation (stabilizing if
   the component sizes cannot fill the odd and even positions) so that
   odd positions carry one set of closure components and even positions
   the other.  The strand flow of the result preserves position parity.
2. ``to_level_position`` walks the word with index-levels (strand i lives
   on level i, smaller = nearer the top).  Letters whose sign disagrees
   with the levels are crossing changes: each one costs a clasp -- the
   level prefix L conjugating a doubled letter, L·σ²·L⁻¹ -- which is
   emitted as triple crossings, after which the letter continues with
   its sign corrected.  The pure braid L·σ²·L⁻¹ pulled taut is a clasp
   between the two strand levels with every intermediate strand draped
   over or under it according to its position at the clasp; that taut
   word is rebuilt combinatorially and checked against the original
   block with the exact normal-form oracle.
3. The clasp words are resolved into genuine width-3 crossings by local
   identities (each verified against the normal form in the tests):
   intermediate strands are consumed in pairs, one head and one tail
   triple per pair, and the residue - a clasp with at most one strand
   between - becomes two triples via the threading or borrowed-strand
   identities.
4. ``convert_triple`` finishes by sorting the level-position suffix with
   adjacent same-parity transpositions, one triple crossing each.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .braid import (
    BraidWord,
    MultiBraidWord,
    MultiCrossing,
    closure_components,
    expand,
    phi,
    stabilize,
    strand_flow,
)
from .errors import ContractError, OddImpossible
from .verify.garside import braids_equal


@dataclass(frozen=True)
class ParityNormalizedBraid:
    """A braid word whose strand flow preserves position parity, with the
    closure components split into an odd-position and an even-position
    class (keyed by each component's smallest strand)."""

    word: BraidWord
    component_parity: dict[int, str]


def _components(w: BraidWord) -> list[tuple[int, ...]]:
    flow = strand_flow(w)
    seen = [False] * w.strands
    comps = []
    for start in range(1, w.strands + 1):
        if seen[start - 1]:
            continue
        cyc = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cyc.append(x)
            x = flow(x)
        comps.append(tuple(cyc))
    return comps


def _find_partition(sizes: list[int], target: int) -> list[int] | None:
    """Indices of a sub-multiset of sizes summing to target (first-fit
    dynamic program, deterministic)."""
    reachable: dict[int, list[int]] = {0: []}
    for idx, s in enumerate(sizes):
        updates = {}
        for total, picked in reachable.items():
            if total + s not in reachable and total + s <= target:
                updates[total + s] = picked + [idx]
        reachable.update(updates)
        if target in reachable:
            return reachable[target]
    return reachable.get(target)


def _sorting_letters(goal: perm.Permutation) -> list[int]:
    """Positive letters whose strand flow equals goal."""
    m = goal.degree
    arrangement = list(range(1, m + 1))
    target = [0] * m
    for strand in range(1, m + 1):
        target[goal(strand) - 1] = strand
    letters = []
    for pos in range(m):
        want = target[pos]
        at = arrangement.index(want)
        while at > pos:
            letters.append(at)  # letter index = left position of the swap
            arrangement[at - 1], arrangement[at] = arrangement[at], arrangement[at - 1]
            at -= 1
    if arrangement != target:
        raise ContractError("sorting network failed to reach the target flow")
    return letters


def normalize_parity(w: BraidWord) -> ParityNormalizedBraid:
    """Conjugate (stabilizing if necessary) so that one class of closure
    components owns the odd positions and the other the even positions."""
    if closure_components(w) < 2:
        raise OddImpossible(
            "single-component closure: odd-width crossings preserve position "
            "parity, so the closure of an odd-width braid has >= 2 components"
        )
    word = w
    for _ in range(2 * w.strands + 8):
        comps = _components(word)
        sizes = [len(c) for c in comps]
        odd_quota = (word.strands + 1) // 2
        picked = _find_partition(sizes, odd_quota)
        if picked is not None:
            break
        # grow a component chosen so the sizes can split afterwards (a
        # stabilization enlarges the component of the last strand, so
        # conjugate a strand of the chosen component there first).
        next_quota = (word.strands + 2) // 2
        grow = None
        for idx in range(len(comps)):
            grown = list(sizes)
            grown[idx] += 1
            if _find_partition(grown, next_quota) is not None:
                grow = idx
                break
        if grow is None:
            grow = min(range(len(comps)), key=lambda k: (sizes[k], comps[k][0]))
        mover = comps[grow][0]
        m = word.strands
        if mover != m:
            swap = perm.transposition(m, mover, m)
            swap_letters = _sorting_letters(swap)
            word = BraidWord(
                m,
                tuple(swap_letters)
                + word.letters
                + tuple(-x for x in reversed(swap_letters)),
            )
        word = stabilize(word)
    else:
        raise ContractError("could not balance component sizes onto parities")

    comps = _components(word)
    picked = _find_partition([len(c) for c in comps], (word.strands + 1) // 2)
    odd_class = set(picked)
    odd_strands = sorted(s for i in odd_class for s in comps[i])
    even_strands = sorted(
        s for i in range(len(comps)) if i not in odd_class for s in comps[i]
    )
    relabel = {}
    for k, s in enumerate(odd_strands):
        relabel[s] = 2 * k + 1
    for k, s in enumerate(even_strands):
        relabel[s] = 2 * k + 2
    pi = perm.Permutation(
        tuple(relabel[s] for s in range(1, word.strands + 1))
    )
    # conjugate by a positive lift rho with strand flow pi^-1, so the new
    # strand flow is the pi-relabelling of the old one.
    rho_letters = _sorting_letters(perm.inverse(pi))
    inverse_rho = tuple(-x for x in reversed(rho_letters))
    conjugated = BraidWord(
        word.strands, tuple(rho_letters) + word.letters + inverse_rho
    )
    flow = strand_flow(conjugated)
    if not perm.preserves_position_parity(flow):
        raise ContractError("parity normalization failed to align components")
    parity_of: dict[int, str] = {}
    for comp in _components(conjugated):
        parity_of[min(comp)] = "odd" if min(comp) % 2 == 1 else "even"
    return ParityNormalizedBraid(conjugated, parity_of)


# ---------------------------------------------------------------------------
# Clasp resolution tables.  Each entry was checked against the normal
# form: the listed triple crossings expand to a word braid-equal to the
# clasp word they stand for.

# bare clasp at positions (p, p+1), borrowed strand at p+2:
#     σ_p^{2η}  =  T(p, first) · T(p, second)
_BARE_RIGHT = {1: ((1, 2, 3), (3, 1, 2)), -1: ((3, 2, 1), (1, 3, 2))}
# bare clasp at (p, p+1), borrowed strand at p-1: triples at p-1.
_BARE_LEFT = {1: ((3, 1, 2), (1, 2, 3)), -1: ((1, 3, 2), (3, 2, 1))}
# threading: σ_c^{g} σ_{c+1}^{2η} σ_c^{-g} = T(c, ·)²
_THREAD = {
    (1, 1): (1, 3, 2),
    (1, -1): (2, 3, 1),
    (-1, 1): (2, 1, 3),
    (-1, -1): (3, 1, 2),
}
# signed words on the letter pattern (j, j+1, j) that form one triple
# crossing, keyed by their sign triple; the two missing sign patterns do
# not arise from level assignments.
_JJ1J_LEVELS = {
    (1, 1, 1): (1, 2, 3),
    (-1, -1, -1): (3, 2, 1),
    (-1, 1, 1): (2, 1, 3),
    (1, 1, -1): (1, 3, 2),
    (-1, -1, 1): (3, 1, 2),
    (1, -1, -1): (2, 3, 1),
}


def _resolve_hook_top(
    lo: int, hook_pos: int, g: dict[int, int], eta: int, m: int
) -> list[MultiCrossing]:
    """Resolve the word
        σ_lo^{-g[lo]} ... σ_{hook_pos-1}^{-g[hook_pos-1]}
        σ_{hook_pos}^{2η}
        σ_{hook_pos-1}^{g[hook_pos-1]} ... σ_lo^{g[lo]}
    into triple crossings."""
    if lo > hook_pos - 1:
        # bare clasp at (hook_pos, hook_pos+1).
        if hook_pos + 2 <= m:
            first, second = _BARE_RIGHT[eta]
            return [
                MultiCrossing(hook_pos, 3, first),
                MultiCrossing(hook_pos, 3, second),
            ]
        if hook_pos - 1 >= 1:
            first, second = _BARE_LEFT[eta]
            return [
                MultiCrossing(hook_pos - 1, 3, first),
                MultiCrossing(hook_pos - 1, 3, second),
            ]
        raise ContractError("no strand available to borrow for a bare clasp")
    if lo == hook_pos - 1:
        levels = _THREAD[(-g[lo], eta)]
        return [MultiCrossing(lo, 3, levels), MultiCrossing(lo, 3, levels)]
    s1, s2 = -g[lo], -g[lo + 1]
    a = s2 if s1 != s2 else s1
    head = _JJ1J_LEVELS[(s1, s2, a)]
    tail = _JJ1J_LEVELS[(-a, -s2, -s1)]
    inner = _resolve_hook_top(lo + 2, hook_pos, g, eta, m)
    return (
        [MultiCrossing(lo, 3, head)] + inner + [MultiCrossing(lo, 3, tail)]
    )


def _clasp_triples(
    level_letters: list[int], arrangement: list[int], i: int, sign: int, m: int
) -> list[MultiCrossing]:
    """Triple crossings braid-equal to L·σ_i^{2·sign}·L⁻¹, where L is the
    level-respecting prefix with the given final arrangement.

    Pulled taut, the block is a clasp between the two strands' home
    levels u < v: strand v runs up to level u, hooks twice with sign, and
    returns, passing each intermediate level on the side recorded by that
    strand's position at the clasp (beyond the clasp: in front; before
    it: behind)."""
    a, b = arrangement[i - 1], arrangement[i]
    u, v = min(a, b), max(a, b)
    g: dict[int, int] = {}
    for c in range(u + 1, v):
        pos = arrangement.index(c) + 1
        if pos == i or pos == i + 1:
            raise ContractError("intermediate strand sits inside the clasp")
        g[c - 1] = -1 if pos < i else 1
    # hook-at-top form: the slide signs index by position; middle at home
    # level c crosses at position c-1 after the swap normalisation.
    triples = _resolve_hook_top(u, v - 1, g, sign, m)
    block = BraidWord(
        m,
        tuple(level_letters)
        + (sign * i, sign * i)
        + tuple(-x for x in reversed(level_letters)),
    )
    resolved = expand(MultiBraidWord(m, 3, tuple(triples)))
    if not braids_equal(resolved, block):
        raise ContractError("clasp resolution failed the normal-form oracle")
    return triples


def to_level_position(
    normalized: ParityNormalizedBraid,
) -> tuple[MultiBraidWord, BraidWord]:
    """Rewrite as triple crossings followed by a word in level position
    (every letter's over-strand is the one with the smaller index)."""
    w = normalized.word
    m = w.strands
    if m < 3:
        raise ContractError("level conversion needs at least 3 strands")
    prefix: list[MultiCrossing] = []
    suffix: list[int] = []
    arrangement = list(range(1, m + 1))
    for x in w.letters:
        i = abs(x)
        sign = 1 if x > 0 else -1
        a, b = arrangement[i - 1], arrangement[i]
        correct = 1 if a < b else -1
        if sign != correct:
            prefix.extend(_clasp_triples(suffix, arrangement, i, sign, m))
        suffix.append(correct * i)
        arrangement[i - 1], arrangement[i] = b, a
    prefix_word = MultiBraidWord(m, 3, tuple(prefix))
    suffix_word = BraidWord(m, tuple(suffix))
    if not braids_equal(expand(prefix_word) * suffix_word, w):
        raise ContractError("level-position rewrite failed the equality oracle")
    return prefix_word, suffix_word


def _level_sort_triples(suffix: BraidWord) -> list[MultiCrossing]:
    """Triple crossings realizing a level-position word: its strand flow
    splits into an odd-position and an even-position permutation, each
    sorted by adjacent same-parity transpositions (one triple each)."""
    m = suffix.strands
    flow = strand_flow(suffix)
    if not perm.preserves_position_parity(flow):
        raise ContractError("level suffix mixes position parities")
    target = [0] * m
    for strand in range(1, m + 1):
        target[flow(strand) - 1] = strand
    arrangement = list(range(1, m + 1))
    triples: list[MultiCrossing] = []
    for pos in range(m):
        want = target[pos]
        at = arrangement.index(want)
        while at > pos:
            j = at - 1  # crossing position (1-based): swaps at-2 <-> at
            block = arrangement[j - 1 : j + 2]
            order = sorted(range(3), key=lambda t: block[t])
            levels = [0, 0, 0]
            for rank, t in enumerate(order, start=1):
                levels[t] = rank
            triples.append(MultiCrossing(j, 3, tuple(levels)))
            arrangement[at - 2], arrangement[at] = arrangement[at], arrangement[at - 2]
            at -= 2
    if arrangement != target:
        raise ContractError("parity sort failed to reach the suffix flow")
    return triples


def convert_triple(w: BraidWord) -> MultiBraidWord:
    return convert_triple_with_audit(w)[0]


def convert_triple_with_audit(w: BraidWord) -> tuple[MultiBraidWord, dict]:
    """Present the closure of w (at least two components) as a braid in
    which every crossing is a triple crossing."""
    if closure_components(w) < 2:
        raise OddImpossible(
            "single-component closure cannot take a triple-crossing form"
        )
    widened = w
    while widened.strands < 3:
        widened = stabilize(widened)
    normalized = normalize_parity(widened)
    prepared = normalized.word
    prefix, suffix = to_level_position(normalized)
    m = prepared.strands
    sort_triples = _level_sort_triples(suffix)
    out = MultiBraidWord(m, 3, prefix.crossings + tuple(sort_triples))
    if not braids_equal(expand(out), prepared):
        raise ContractError("triple conversion failed the equality oracle")
    audit = {
        "schema": 1,
        "kind": "triple",
        "width": 3,
        "input": {"strands": w.strands, "letters": list(w.letters)},
        "prepared": {"strands": m, "letters": list(prepared.letters)},
        "component_parity": {str(k): v for k, v in normalized.component_parity.items()},
        "prefix_crossings": len(prefix.crossings),
        "output_strands": m,
    }
    return out, audit
