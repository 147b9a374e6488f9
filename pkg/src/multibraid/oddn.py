"""Odd-width constructions: same-parity transposition pairs, the mixed
pair for widths 8k+5, and the conversion of triple-crossing braids into
width-n form for odd n >= 5.

Odd-width crossing permutations preserve position parity, so they act on
the odd-position strings and the even-position strings separately.  On
the strings of one parity, a width-n crossing acts as a block reversal of
even width: (n+1)/2 when n = 4k+3 (based at a position of the same
parity), (n-1)/2 when n = 4k+1 (based at the opposite parity, which makes
the first and last strings unreachable).  ``VirtualDomain`` packages this
correspondence so the even-width conjugation engine from
:mod:`multibraid.construct` drives all entry steering; every virtual step
maps back to a concrete crossing position.

Targets whose entries touch unreachable edge strings are handled with a
short bridge found by breadth-first search over entry tuples: conjugate
the target into the reachable interior, build it there, and undo the
bridge.

The conversion pads a triple-crossing word with 3-stabilizations to the
width-appropriate strand bound, then realizes triple crossings through
schedules: one at a time for n = 4k+3, and in strand-disjoint same-parity
pairs for n = 4k+1, where an auxiliary cancelling dummy crossing far from
its partner bridges crossings that share strands or alternate parity.
For n = 4k+1 the crossing counts of each parity are first made even by
3-stabilizations chosen from the variant table.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import perm
from .braid import (
    BraidWord,
    MultiBraidWord,
    MultiCrossing,
    closure_components,
    multi_three_stabilize,
)
from .construct import (
    Schedule,
    conjugate_step,
    conjugation_to,
    multiply_step,
    realize_levels,
)
from .errors import ContractError, OddImpossible, RangeError
from .perm import Permutation
from .triple import convert_triple_with_audit


@dataclass(frozen=True)
class VirtualDomain:
    """The strings of one parity on which odd-width crossings act as an
    even-width reversal."""

    n: int
    m: int
    width: int
    strings: tuple[int, ...]

    def degree(self) -> int:
        return len(self.strings)

    def real_conj_position(self, v: int) -> int:
        if not 1 <= v <= self.degree() - self.width + 1:
            raise ContractError(f"virtual position {v} out of range")
        s = self.strings[v - 1]
        j = s if self.n % 4 == 3 else s - 1
        if not 1 <= j <= self.m - self.n + 1:
            raise ContractError(
                f"virtual position {v} needs real crossing at {j}, outside range"
            )
        return j

    def virtual_point(self, string: int) -> int:
        try:
            return self.strings.index(string) + 1
        except ValueError:
            raise ContractError(f"string {string} outside the virtual domain")

    def virtualize(self, p: Permutation) -> Permutation:
        img = list(range(1, self.degree() + 1))
        for i, s in enumerate(self.strings):
            t = p(s)
            if t != s:
                img[i] = self.virtual_point(t)
        for s in range(1, self.m + 1):
            if s not in self.strings and p(s) != s:
                raise ContractError("permutation moves strings outside the domain")
        return Permutation(tuple(img))

    def embed_steps(self, steps) -> list:
        return [
            conjugate_step(self.real_conj_position(st.position))
            if st.kind == "C"
            else multiply_step(self.real_conj_position(st.position))
            for st in steps
        ]


def virtual_domain(
    n: int, m: int, parity: int, lo: int = 1, hi: int | None = None
) -> VirtualDomain:
    """Strings of the given parity (1 odd, 0 even) within [lo, hi] that
    the even-width action can reach."""
    if n % 2 == 0 or n < 5:
        raise ContractError(f"virtual domains exist for odd widths >= 5, got {n}")
    hi = m if hi is None else hi
    strings = [s for s in range(lo, hi + 1) if s % 2 == parity]
    if n % 4 == 3:
        width = (n + 1) // 2
    else:
        width = (n - 1) // 2
        # crossings based one to the left cannot reach the edge strings.
        strings = [s for s in strings if s != 1 and s != m]
    return VirtualDomain(n, m, width, tuple(strings))


def _crossing(n: int, j: int, m: int) -> Permutation:
    return perm.crossing_perm(n, j, m)


# ---------------------------------------------------------------------------
# Base pairs.


def same_parity_pairs_product(n: int, m: int) -> tuple[Schedule, Schedule]:
    """Products of width-n crossing permutations over m points equal to
    (3,n)(2n-1,2n+1) [odd strings] and (2,n+1)(2n,2n+2) [even strings].

    Both walk the extreme entries of an edge crossing permutation
    outward by conjugation and then multiply by that crossing once so
    the middle transpositions cancel.
    """
    if n % 2 == 0 or n < 5:
        raise ContractError(f"need odd width >= 5, got {n}")
    if m < (5 * n - 1) // 2:
        raise RangeError(f"need at least {(5 * n - 1) // 2} points, got {m}")
    odd_steps = [
        conjugate_step(n),
        conjugate_step((3 * n + 1) // 2),
        conjugate_step(1),
        conjugate_step(n),
        multiply_step(1),
        conjugate_step((n - 1) // 2),
        conjugate_step(1),
    ]
    odd_result = perm.from_cycles(m, [(3, n), (2 * n - 1, 2 * n + 1)])
    odd = Schedule.from_word(m, n, (1,), odd_steps, odd_result)
    even_steps = [
        conjugate_step(n + 1),
        conjugate_step((3 * n - 1) // 2),
        conjugate_step((3 * n + 1) // 2),
        conjugate_step(2),
        conjugate_step(n + 1),
        multiply_step(2),
    ]
    even_result = perm.from_cycles(m, [(2, n + 1), (2 * n, 2 * n + 2)])
    even = Schedule.from_word(m, n, (2,), even_steps, even_result)
    return odd, even


def _entry_bridge(n, m, entries, goal, cap=6, node_limit=300_000):
    """Breadth-first search for a short conjugation word carrying the
    entry tuple into the goal region.  Returns (new_entries, positions)
    where applying the positions' crossings in order maps the original
    entries onto the new ones."""
    start = tuple(entries)
    if goal(start):
        return start, []
    seen = {start}
    queue = deque([(start, [])])
    crossings = [
        (j, _crossing(n, j, m)) for j in range(1, m - n + 2)
    ]
    while queue:
        state, path = queue.popleft()
        if len(path) >= cap:
            continue
        for j, pi in crossings:
            nxt = tuple(pi(x) for x in state)
            if nxt in seen:
                continue
            if goal(nxt):
                return nxt, path + [j]
            if len(seen) < node_limit:
                seen.add(nxt)
                queue.append((nxt, path + [j]))
    raise ContractError("no short bridge into the reachable interior exists")


def any_same_parity_pair(
    n: int, targets: tuple[tuple[int, int], tuple[int, int]], m: int
) -> Schedule:
    """Schedule whose product is exactly (a,b)(c,d) for two transpositions
    on strings of one parity."""
    (a, b), (c, d) = targets
    entries = (a, b, c, d)
    if len(set(entries)) != 4:
        raise ContractError("pair entries must be four distinct strings")
    parities = {x % 2 for x in entries}
    if len(parities) != 1:
        raise ContractError(f"entries mix parities: {entries}")
    parity = parities.pop()
    if min(entries) < 1 or max(entries) > m:
        raise RangeError(f"entries outside 1..{m}")
    bound = 3 * n + 5 if n % 4 == 3 else 3 * n - 2
    if m < bound:
        raise RangeError(f"width {n} needs at least {bound} strings, got {m}")

    target = perm.from_cycles(m, [(a, b), (c, d)])
    dom = virtual_domain(n, m, parity)
    reachable = set(dom.strings)

    work_entries, bridge = _entry_bridge(
        n, m, entries, lambda st: all(x in reachable for x in st)
    )
    pre_target = perm.from_cycles(
        m, [(work_entries[0], work_entries[1]), (work_entries[2], work_entries[3])]
    )

    odd_base, even_base = same_parity_pairs_product(n, m)
    base = odd_base if parity == 1 else even_base
    tau_v = dom.virtualize(base.result)
    target_v = dom.virtualize(pre_target)
    steps = dom.embed_steps(conjugation_to(tau_v, target_v, dom.width))
    steps += [conjugate_step(j) for j in reversed(bridge)]
    return Schedule.from_word(m, n, base.flatten(), steps, target)


# ---------------------------------------------------------------------------
# Width 8k+5 extras.


def triple_move_8k5(n: int, target: tuple[int, int], degree: int) -> Schedule:
    """Conjugation schedule moving (1,3) to an odd-string transposition
    (2i-1, 2i+1), using crossings supported within the first (3n-1)/2
    points."""
    if n % 8 != 5:
        raise ContractError(f"width must be 5 mod 8, got {n}")
    lo, hi = target
    if hi != lo + 2 or lo % 2 == 0:
        raise ContractError(f"target must be an odd-string (j, j+2), got {target}")
    span = (3 * n - 1) // 2
    if hi > span:
        raise RangeError(f"target {target} beyond the {span}-point window")
    if degree < span:
        raise RangeError(f"need degree >= {span}")

    def steps_to(lo_t: int) -> list:
        if lo_t == 1:
            return []
        if lo_t + 2 <= n:
            i = (lo_t + 1) // 2
            return [conjugate_step(1), conjugate_step((n + 1) // 2), conjugate_step(i + 1)]
        if lo_t == n:
            return [conjugate_step(1), conjugate_step((n + 1) // 2)]
        base = lo_t
        rungs = []
        while base > n:
            base -= n - 1
            rungs.append(base)
        out = steps_to(base)
        for x in rungs[::-1]:
            out += [conjugate_step(x + 2), conjugate_step(x)]
        return out

    start = perm.from_cycles(degree, [(1, 3)])
    result = perm.from_cycles(degree, [(lo, hi)])
    return Schedule.conjugating(n, start, steps_to(lo), result)


_IMAGE_CACHE: dict[tuple[int, int], dict[int, tuple[int, ...]]] = {}


def _crossing_images(n: int, m: int) -> dict[int, tuple[int, ...]]:
    key = (n, m)
    if key not in _IMAGE_CACHE:
        _IMAGE_CACHE[key] = {
            j: perm.crossing_perm(n, j, m).image for j in range(1, m - n + 2)
        }
    return _IMAGE_CACHE[key]


def _restricted_pair_bfs(
    n: int, m: int, start: tuple[int, int], goal: tuple[int, int], forbidden: set[int]
) -> list[int]:
    """Complete search for conjugation positions carrying one transposition's
    entry pair onto another, using only crossings whose blocks avoid the
    forbidden strings.  Returns positions in application order."""
    start_s = tuple(sorted(start))
    goal_s = tuple(sorted(goal))
    images = {
        j: img
        for j, img in _crossing_images(n, m).items()
        if not any(j <= f <= j + n - 1 for f in forbidden)
    }
    if start_s == goal_s:
        return []
    seen = {start_s: None}
    queue = deque([start_s])
    while queue:
        st = queue.popleft()
        for j, img in images.items():
            nxt = tuple(sorted((img[st[0] - 1], img[st[1] - 1])))
            if nxt in seen:
                continue
            seen[nxt] = (st, j)
            if nxt == goal_s:
                path = []
                cur = nxt
                while seen[cur] is not None:
                    prev, pos = seen[cur]
                    path.append(pos)
                    cur = prev
                return list(reversed(path))
            queue.append(nxt)
    raise ContractError(
        f"pair {start} cannot reach {goal} avoiding strings {sorted(forbidden)}"
    )


_MIXED_PREFIX_CACHE: dict[tuple[int, int, bool], tuple] = {}


def _mixed_pair_prefix(n: int, m: int, low_odd: bool) -> tuple:
    """Shared prefix of every mixed-pair schedule with this low parity:
    isolate the inner mixed pair by cancellations and the separation
    chain, then park the high pair at the top of the braid.  Returns
    (start_pos, steps, state, park, low_tracked)."""
    key = (n, m, low_odd)
    if key in _MIXED_PREFIX_CACHE:
        return _MIXED_PREFIX_CACHE[key]
    start_pos = (n + 1) // 2 if low_odd else (n + 3) // 2
    start_perm = _crossing(n, start_pos, m)

    steps: list = []
    state = start_perm

    # cancel outer transpositions in same-parity pairs, keeping the two
    # innermost (one of each parity).
    trans = perm.cycles(start_perm)  # outermost first
    groups: dict[int, list] = {0: [], 1: []}
    for t in trans[:-2]:
        groups[t[0] % 2].append(t)
    for par in (1, 0):
        bucket = groups[par]
        if len(bucket) % 2 != 0:
            raise ContractError("same-parity cancellation needs even counts")
        for idx in range(0, len(bucket), 2):
            t1, t2 = bucket[idx], bucket[idx + 1]
            pair_sched = any_same_parity_pair(n, (tuple(t1), tuple(t2)), m)
            for j in pair_sched.flatten():
                steps.append(multiply_step(j))
            state = perm.compose(state, perm.from_cycles(m, [t1, t2]))
    if state != perm.from_cycles(m, [tuple(trans[-2]), tuple(trans[-1])]):
        raise ContractError("cancellation left the wrong residue")

    def conj(positions):
        nonlocal state
        for j in positions:
            steps.append(conjugate_step(j))
            state = perm.conjugate(state, _crossing(n, j, m))

    if low_odd:
        # (n-2, n+2)(n-1, n+1) -> (n-2, n)(n+1, n+3) -> (1,3)(4,6)
        conj([n - 1] if n == 5 else
             [n - 1, 2 * n - 4, (3 * n - 7) // 2, n - 1, 2 * n - 3, n + 1])
        if state != perm.from_cycles(m, [(n - 2, n), (n + 1, n + 3)]):
            raise ContractError("separation chain failed")
        conj([1, 4])
        low_now, high_now = (1, 3), (4, 6)
    else:
        # (n-1, n+3)(n, n+2) -> (n-1, n+1)(n+2, n+4) -> (2,4)(5,7)
        if n == 5:
            conj([5, 2, 5])
        else:
            conj([n, 2 * n - 3, (3 * n - 5) // 2, n, 2 * n - 2, n + 2])
            if state != perm.from_cycles(m, [(n - 1, n + 1), (n + 2, n + 4)]):
                raise ContractError("separation chain failed")
            conj([2, 5])
        low_now, high_now = (2, 4), (5, 7)
    if state != perm.from_cycles(m, [low_now, high_now]):
        raise ContractError("isolation did not reach the adjacent mixed pair")

    result = (start_pos, tuple(steps), state, low_now, high_now)
    _MIXED_PREFIX_CACHE[key] = result
    return result


def mixed_pair_8k5(n: int, l_a: int, l_b: int, m: int) -> Schedule:
    """Schedule whose product is (l_a, l_a+2)(l_b, l_b+2), one odd-string
    and one even-string transposition with l_a + 2 < l_b, for n = 8k+5.

    Isolation follows the separation sequence: start from a central
    crossing permutation, cancel its transpositions in same-parity pairs
    from the outside until one of each parity remains, then walk them to
    the adjacent mixed pair (1,3)(4,6) (odd low) or (2,4)(5,7) (even
    low).  The high pair is then steered - by a complete search over
    crossings whose blocks avoid the still-parked low pair - either
    straight to its target or, when there is room above it, to the
    hoisted spot (l_b+2n-6, l_b+2n-4); the low pair is then placed by a
    second restricted search avoiding the high strings, and the hoisted
    pair descends through two fixed conjugations whose blocks stay above
    everything placed.
    """
    if n % 8 != 5:
        raise ContractError(f"width must be 5 mod 8, got {n}")
    if m < 4 * n - 4:
        raise RangeError(f"need at least {4 * n - 4} strings, got {m}")
    if l_a + 2 >= l_b:
        raise ContractError("low pair must sit strictly below the high pair")
    if (l_a + l_b) % 2 == 0:
        raise ContractError("pairs must have opposite parities")
    if l_b + 2 > m or l_a < 1:
        raise RangeError("pair entries exceed the strand range")

    low_odd = l_a % 2 == 1
    start_pos, prefix_steps, state, low_now, high_now = _mixed_pair_prefix(
        n, m, low_odd
    )
    steps = list(prefix_steps)

    def conj(positions):
        nonlocal state
        for j in positions:
            steps.append(conjugate_step(j))
            state = perm.conjugate(state, _crossing(n, j, m))

    hoist = l_b + 2 * n - 4 <= m
    high_spot = (l_b + 2 * n - 6, l_b + 2 * n - 4) if hoist else (l_b, l_b + 2)
    conj(_restricted_pair_bfs(n, m, high_now, high_spot, set(low_now)))
    conj(_restricted_pair_bfs(n, m, low_now, (l_a, l_a + 2), set(high_spot)))
    if hoist:
        # descend: both blocks live in [l_b, l_b+2n-4], above the low pair.
        conj([l_b + n - 3, l_b])

    target = perm.from_cycles(m, [(l_a, l_a + 2), (l_b, l_b + 2)])
    if state != target:
        raise ContractError(
            f"mixed pair chain produced {perm.format_cycles(state)}, "
            f"wanted {perm.format_cycles(target)}"
        )
    return Schedule.from_word(m, n, (start_pos,), steps, target)


# ---------------------------------------------------------------------------
# Single triple-crossing realization for widths 4k+3.


def single_parity_transposition_schedule(n: int, j_target: int, m: int) -> Schedule:
    """Schedule with product (j, j+2) for n = 4k+3: start from an edge
    crossing permutation whose target-parity transposition count is odd,
    cancel everything else pairwise, and steer the survivor."""
    if n % 4 != 3:
        raise ContractError(f"single transpositions need width 3 mod 4, got {n}")
    target_parity = j_target % 2
    k = (n - 3) // 4
    # the crossing permutation at 1 carries k+1 odd- and k even-string
    # transpositions; at 2 the counts swap roles.
    if (k % 2 == 0) == (target_parity == 1):
        start_pos = 1
    else:
        start_pos = 2
    start_perm = _crossing(n, start_pos, m)
    trans = perm.cycles(start_perm)
    same = [t for t in trans if t[0] % 2 == target_parity]
    other = [t for t in trans if t[0] % 2 != target_parity]
    if len(same) % 2 != 1 or len(other) % 2 != 0:
        raise ContractError("start crossing has the wrong parity counts")
    steps: list = []
    for bucket, keep_last in ((other, False), (same, True)):
        cancel = bucket[:-1] if keep_last else bucket
        for idx in range(0, len(cancel), 2):
            t1, t2 = cancel[idx], cancel[idx + 1]
            pair_sched = any_same_parity_pair(n, (tuple(t1), tuple(t2)), m)
            for j in pair_sched.flatten():
                steps.append(multiply_step(j))
    keep = same[-1]
    target = perm.from_cycles(m, [(j_target, j_target + 2)])
    dom = virtual_domain(n, m, target_parity)
    steps += dom.embed_steps(
        conjugation_to(
            dom.virtualize(perm.from_cycles(m, [keep])),
            dom.virtualize(target),
            dom.width,
        )
    )
    return Schedule.from_word(m, n, (start_pos,), steps, target)


# ---------------------------------------------------------------------------
# Pairing with cancelling dummies for widths 4k+1.


_DUMMY_LEVELS = (1, 2, 3)
_DUMMY_UNDO_LEVELS = (3, 2, 1)


def _dummy_pairing(crossings, m):
    """Arrange triple crossings into consecutive same-parity pairs by
    weaving in cancelling dummy crossings.

    Every pair contains at least one dummy, so pair disjointness is a
    constraint on dummy positions only.  A dummy must also commute past
    everything between it and its undo; relays keep those spans to at
    most four crossings.  Placement is resolved after the symbolic pass,
    assigning dummies in reverse creation order so every constraint is
    checked against an already-placed neighbour.
    """
    pending = {0: None, 1: None}
    span_load = {0: 0, 1: 0}
    dummies: list[dict] = []
    sequence: list = []  # real MultiCrossings or ("d", idx) / ("u", idx)

    def new_dummy(parity):
        idx = len(dummies)
        dummies.append({"parity": parity, "position": None})
        return idx

    def emit(*items):
        for parity in (0, 1):
            if pending[parity] is not None:
                span_load[parity] += len(items)
        sequence.extend(items)

    for c in crossings:
        p = c.position % 2
        q = 1 - p
        if pending[q] is not None and span_load[q] >= 2:
            # relay before the span grows further: close the waiting dummy
            # against a fresh one of the same parity.
            relay = new_dummy(q)
            old = pending[q]
            pending[q] = None
            emit(("u", old), ("d", relay))
            pending[q] = relay
            span_load[q] = 0
        if pending[p] is None:
            d = new_dummy(p)
            emit(c, ("d", d))
            pending[p] = d
            span_load[p] = 0
        else:
            old = pending[p]
            pending[p] = None
            emit(("u", old), c)
    if pending[0] is not None or pending[1] is not None:
        raise ContractError("parity counts were not balanced before pairing")

    # spans and partners for the placement constraints.
    first = {}
    last = {}
    for idx, item in enumerate(sequence):
        if isinstance(item, tuple):
            kind, d = item
            (first if kind == "d" else last)[d] = idx
    constraints: dict[int, set[int]] = {d: set() for d in range(len(dummies))}
    blocked_strands: dict[int, set[int]] = {d: set() for d in range(len(dummies))}
    for d in range(len(dummies)):
        partner_idx = first[d] + (-1 if first[d] % 2 == 1 else 1)
        for spot in (partner_idx, last[d] + (1 if last[d] % 2 == 0 else -1)):
            item = sequence[spot]
            if isinstance(item, tuple):
                constraints[d].add(item[1])
            else:
                blocked_strands[d] |= set(item.strand_positions)
        for between in range(first[d] + 1, last[d]):
            item = sequence[between]
            if isinstance(item, tuple):
                constraints[d].add(item[1])
            else:
                blocked_strands[d] |= set(item.strand_positions)

    for d in reversed(range(len(dummies))):
        blocked = set(blocked_strands[d])
        for other in constraints[d]:
            if dummies[other]["position"] is not None:
                p = dummies[other]["position"]
                blocked |= {p, p + 1, p + 2}
        parity = dummies[d]["parity"]
        position = None
        # prefer positions whose entries avoid the edge strings, but use
        # them if nothing else fits (the pair schedules can bridge edges).
        for allow_edges in (False, True):
            for cand in range(m - 2, 0, -1):
                if cand % 2 != parity:
                    continue
                if not allow_edges and (cand == 1 or cand + 2 == m):
                    continue
                if {cand, cand + 1, cand + 2} & blocked:
                    continue
                position = cand
                break
            if position is not None:
                break
        if position is None:
            raise ContractError("no admissible position for a dummy crossing")
        dummies[d]["position"] = position

    out: list[tuple[MultiCrossing, MultiCrossing]] = []
    flat: list[MultiCrossing] = []
    for idx in range(0, len(sequence), 2):
        pair = []
        for item in sequence[idx : idx + 2]:
            if isinstance(item, tuple):
                kind, d = item
                levels = _DUMMY_LEVELS if kind == "d" else _DUMMY_UNDO_LEVELS
                pair.append(MultiCrossing(dummies[d]["position"], 3, levels))
            else:
                pair.append(item)
        out.append((pair[0], pair[1]))
        flat += pair
    return out, flat


def _count_parities(word: MultiBraidWord) -> tuple[int, int]:
    odd = sum(1 for c in word.crossings if c.position % 2 == 1)
    return odd, len(word.crossings) - odd


def balance_triple_parities(word: MultiBraidWord) -> tuple[MultiBraidWord, list[str]]:
    """3-stabilize until both parity counts of triple crossings are even.

    A stabilization at the right edge adds an odd-position crossing when
    the strand count is even (and even-position when odd); one at the
    left edge shifts every position by one and adds a crossing at 1.  At
    most three moves are needed.
    """
    moves: list[str] = []
    for _ in range(4):
        odd, even = _count_parities(word)
        if odd % 2 == 0 and even % 2 == 0:
            return word, moves
        if odd % 2 == 1 and even % 2 == 1:
            variant = "second_string"
        elif even % 2 == 1:
            variant = "second_string"
        else:  # odd count is odd
            variant = "right" if word.strands % 2 == 0 else "second_string"
        word = multi_three_stabilize(word, variant)
        moves.append(variant)
    odd, even = _count_parities(word)
    if odd % 2 or even % 2:
        raise ContractError("parity balancing failed")
    return word, moves


# ---------------------------------------------------------------------------
# The odd conversion.


def convert_odd(w: BraidWord, n: int) -> MultiBraidWord:
    return convert_odd_with_audit(w, n)[0]


def convert_odd_with_audit(w: BraidWord, n: int) -> tuple[MultiBraidWord, dict]:
    """Present the closure of w (at least two components) as a braid of
    width-n crossings, n odd >= 5."""
    if n % 2 == 0 or n < 5:
        raise ContractError(f"odd conversion needs odd width >= 5, got {n}")
    if closure_components(w) < 2:
        raise OddImpossible(
            "odd-width crossings preserve position parity; a knot closure "
            "cannot take this form"
        )
    triple_word, triple_audit = convert_triple_with_audit(w)
    original_triple = triple_word
    bound = 3 * n + 5 if n % 4 == 3 else 3 * n - 2
    prep_moves: list[str] = []
    while triple_word.strands < bound:
        triple_word = multi_three_stabilize(triple_word, "right")
        prep_moves.append("right")
    if n % 4 == 1:
        triple_word, balance = balance_triple_parities(triple_word)
        prep_moves.extend(balance)
        # the dummy weaving needs elbow room; when the strand bound is too
        # tight for an admissible placement, pad further and rebalance.
        for _ in range(6):
            try:
                _dummy_pairing(triple_word.crossings, triple_word.strands)
                break
            except ContractError:
                for _ in range(2):
                    triple_word = multi_three_stabilize(triple_word, "right")
                    prep_moves.append("right")
                triple_word, extra = balance_triple_parities(triple_word)
                prep_moves.extend(extra)
        else:
            raise ContractError("could not place dummy crossings after padding")
    m = triple_word.strands

    blocks: list[dict] = []
    crossings: list[MultiCrossing] = []

    def emit(targets, positions):
        realized = realize_levels(list(targets), positions, n, m)
        crossings.extend(realized.crossings)
        blocks.append(
            {
                "targets": [
                    {"j": c.position, "width": c.width, "levels": list(c.levels)}
                    for c in targets
                ],
                "schedule": list(positions),
            }
        )

    if n % 4 == 3:
        for c in triple_word.crossings:
            sched = single_parity_transposition_schedule(n, c.position, m)
            emit([c], list(sched.flatten()))
        realized_target = triple_word.crossings
    else:
        pairs, flat = _dummy_pairing(triple_word.crossings, m)
        for c1, c2 in pairs:
            sched = any_same_parity_pair(
                n,
                ((c1.position, c1.position + 2), (c2.position, c2.position + 2)),
                m,
            )
            emit([c1, c2], list(sched.flatten()))
        realized_target = tuple(flat)

    out = MultiBraidWord(m, n, tuple(crossings))
    want = perm.word_product(
        (perm.crossing_perm(3, c.position, m) for c in realized_target), m
    )
    got = perm.word_product(
        (perm.crossing_perm(n, c.position, m) for c in out.crossings), m
    )
    if want != got:
        raise ContractError("odd conversion lost the projected permutation")
    audit = {
        "schema": 1,
        "kind": "odd",
        "width": n,
        "input": {"strands": w.strands, "letters": list(w.letters)},
        "triple": triple_audit,
        "triple_word": {
            "strands": original_triple.strands,
            "crossings": [
                {"j": c.position, "levels": list(c.levels)}
                for c in original_triple.crossings
            ],
        },
        "prep_moves": prep_moves,
        "triple_crossings": [
            {"j": c.position, "levels": list(c.levels)} for c in realized_target
        ],
        "prepared_strands": m,
        "blocks": blocks,
        "output_strands": m,
    }
    return out, audit
