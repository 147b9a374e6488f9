"""Constructive schedules over crossing permutations, level realization,
and the even-width conversion of braids into multi-crossing form.

A Schedule is a replayable recipe: starting from a declared permutation
(either an explicit word of crossing positions or an abstract start),
apply conjugation and multiplication steps by crossing permutations.
Schedules are the machine-checkable core of every conversion:
``replay`` recomputes the result exactly, and ``flatten`` exposes the
underlying word of crossing positions whose product equals the result,
which is what the level realization consumes.

The step constructions work over an even width n:

- ``ascend_word`` produces a word sending a point q to q+offset while
  touching nothing below q, by combining three increments (n-1 with one
  crossing, an even jump 2s with two, a jump of 1 with three) and a
  ladder of (n-1)-rungs for long ranges.
- ``canonicalize_conjugation`` packs any permutation to the canonical
  form (1,2,...,l1)(l1+1,...)... of its cycle type by walking entries
  down with ``ascend_word`` reversed; because every move only touches
  points at or above the slot being filled, already-placed points are
  never disturbed.  Running one chain forward and another backward
  carries any permutation onto any other of the same cycle type, inside
  the degree budget size + 3n - 3.

Level realization (``realize_levels``) turns a schedule whose product
equals the projection of a sequence of disjoint target crossings into
genuine n-crossings: target strands get the highest levels block by
block, every other strand keeps one fixed height, and each scheduled
crossing reads its level assignment off the current height order.  The
expansion of the result is then braid-equal to the target because every
strand pair crosses with a consistent over/under everywhere, so all
auxiliary crossings cancel in pairs when the strings are pulled taut.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .braid import BraidWord, MultiBraidWord, MultiCrossing, phi, stabilize
from .errors import ContractError, RangeError
from .perm import Permutation


@dataclass(frozen=True)
class Step:
    kind: str  # "C" (conjugate) or "M" (multiply)
    position: int

    def __post_init__(self):
        if self.kind not in ("C", "M"):
            raise RangeError(f"unknown step kind {self.kind!r}")


def conjugate_step(j: int) -> Step:
    return Step("C", j)


def multiply_step(j: int) -> Step:
    return Step("M", j)


@dataclass(frozen=True)
class Schedule:
    """Start state, conjugate/multiply steps, and the claimed result.

    ``start_word`` roots the schedule in an explicit word of crossing
    positions and makes it flattenable; ``start_perm`` roots it in an
    abstract permutation (the pure-conjugation operations transform a
    given permutation, which the caller embeds into a larger flattenable
    schedule).
    """

    degree: int
    width: int
    start_word: tuple[int, ...] | None
    start_perm: Permutation | None
    steps: tuple[Step, ...]
    result: Permutation

    @staticmethod
    def from_word(degree, width, word, steps, result) -> "Schedule":
        return Schedule(degree, width, tuple(word), None, tuple(steps), result).verify()

    @staticmethod
    def conjugating(width, start_perm, steps, result) -> "Schedule":
        if any(s.kind != "C" for s in steps):
            raise ContractError("abstract-start schedules must be conjugation only")
        return Schedule(
            start_perm.degree, width, None, start_perm, tuple(steps), result
        ).verify()

    def start(self) -> Permutation:
        if self.start_perm is not None:
            return self.start_perm
        return perm.word_product(
            (perm.crossing_perm(self.width, j, self.degree) for j in self.start_word),
            self.degree,
        )

    def replay(self) -> Permutation:
        state = self.start()
        for step in self.steps:
            pi = perm.crossing_perm(self.width, step.position, self.degree)
            if step.kind == "C":
                state = perm.conjugate(state, pi)
            else:
                state = perm.compose(state, pi)
        return state

    def flatten(self) -> tuple[int, ...]:
        """The word of crossing positions whose product equals result."""
        if self.start_word is None:
            raise ContractError(
                "schedule rooted at an abstract permutation cannot be flattened"
            )
        word = list(self.start_word)
        for step in self.steps:
            if step.kind == "C":
                word = [step.position] + word + [step.position]
            else:
                word = word + [step.position]
        return tuple(word)

    def verify(self) -> "Schedule":
        replayed = self.replay()
        if replayed != self.result:
            raise ContractError(
                f"schedule replay mismatch: got {perm.format_cycles(replayed)}, "
                f"declared {perm.format_cycles(self.result)}"
            )
        if self.start_word is not None:
            flat = perm.word_product(
                (
                    perm.crossing_perm(self.width, j, self.degree)
                    for j in self.flatten()
                ),
                self.degree,
            )
            if flat != self.result:
                raise ContractError("flattened word product differs from result")
        return self


def _check_position(j: int, n: int, degree: int):
    if not 1 <= j <= degree - n + 1:
        raise ContractError(
            f"crossing position {j} outside 1..{degree - n + 1} "
            f"(width {n}, degree {degree})"
        )


def ascend_word(q: int, offset: int, n: int, degree: int) -> list[int]:
    """Positions of width-n crossings whose product sends q to q+offset,
    touching only points >= q.  Requires even n; at width 2 the ladder of
    (n-1)-rungs degenerates to a chain of adjacent transpositions."""
    if n % 2 != 0 or n < 2:
        raise ContractError(f"ascend_word needs even width >= 2, got {n}")
    if offset < 0:
        raise ContractError("ascend_word moves upward only")
    if offset == 0:
        return []
    half = n // 2
    window = 3 * half - 1  # largest reachable offset without a ladder

    def base(off: int) -> list[int]:
        if off == 0:
            return []
        if off == n - 1:
            return [q]
        if off == 1:
            return [q + 1, q + half, q]
        if off % 2 == 0 and 2 <= off <= n - 2:
            return [q + off // 2, q]
        if off % 2 == 1 and off < n - 1:
            s = (off - 1) // 2
            return [q + 1 + s, q + 1, q + 1, q + half, q]
        if n - 1 < off <= window:
            rest = off - (n - 1)
            return [q + rest] + base(rest)
        raise ContractError(f"offset {off} beyond single window {window}")

    if offset <= window:
        word = base(offset)
    else:
        residual = offset % (n - 1)
        word = base(residual)
        x = residual
        rungs = []
        while x < offset:
            rungs.append(q + x)
            x += n - 1
        word = list(reversed(rungs)) + word
    for j in word:
        _check_position(j, n, degree)
    return word


def descend_word(e: int, v: int, n: int, degree: int) -> list[int]:
    """Word sending e down to v (v <= e), touching only points >= v."""
    if e < v:
        raise ContractError("descend_word moves downward only")
    return list(reversed(ascend_word(v, e - v, n, degree)))


def conj_steps_for_word(word: list[int]) -> list[Step]:
    """Conjugating by a word means conjugating by its factors, rightmost
    (first-acting) factor first."""
    return [conjugate_step(j) for j in reversed(word)]


def canonical_of_cycle_type(ctype: tuple[int, ...], degree: int) -> Permutation:
    """The packed representative (1..l1)(l1+1..l2)... with lengths sorted
    descending."""
    cycs = []
    next_point = 1
    for length in sorted(ctype, reverse=True):
        cycs.append(tuple(range(next_point, next_point + length)))
        next_point += length
    return perm.from_cycles(degree, cycs)


def canonicalize_conjugation(p: Permutation, n: int) -> tuple[list[Step], Permutation]:
    """Conjugation steps carrying p to the packed canonical form of its
    cycle type.  Every move's support stays at or above the slot being
    filled, so placed points are final."""
    state = p
    steps: list[Step] = []
    plan = sorted(
        ((len(c), min(c)) for c in perm.cycles(p)), key=lambda t: (-t[0], t[1])
    )
    slot = 1
    for length, _ in plan:
        for k in range(length):
            if k == 0:
                candidates = [
                    c for c in perm.cycles(state) if len(c) == length and min(c) >= slot
                ]
                if not candidates:
                    raise ContractError("canonicalization lost track of a cycle")
                entry = min(min(c) for c in candidates)
            else:
                entry = state(slot - 1)
            if entry < slot:
                raise ContractError("entry slipped below its slot")
            if entry > slot:
                conj_steps = conj_steps_for_word(descend_word(entry, slot, n, p.degree))
                for step in conj_steps:
                    pi = perm.crossing_perm(n, step.position, p.degree)
                    state = perm.conjugate(state, pi)
                steps.extend(conj_steps)
            slot += 1
    expected = canonical_of_cycle_type(perm.cycle_type(p), p.degree)
    if state != expected:
        raise ContractError("canonicalization did not reach the packed form")
    return steps, state


def conjugation_to(tau: Permutation, target: Permutation, n: int) -> list[Step]:
    """Conjugation steps carrying tau exactly onto target (same cycle
    type), via the shared canonical form; reversing a conjugation chain
    undoes it because crossing permutations are involutions."""
    if perm.cycle_type(tau) != perm.cycle_type(target):
        raise ContractError(
            f"cycle types differ: {perm.cycle_type(tau)} vs {perm.cycle_type(target)}"
        )
    down, _ = canonicalize_conjugation(tau, n)
    up, _ = canonicalize_conjugation(target, n)
    return down + list(reversed(up))


# ---------------------------------------------------------------------------
# The named schedule constructions.


def seq_send_first_to(n: int, target: int) -> Schedule:
    """A product of width-n crossing permutations over 3n/2 points whose
    product sends 1 to the target point."""
    if n % 2 != 0 or n < 4:
        raise ContractError(f"width must be even and >= 4, got {n}")
    degree = 3 * n // 2
    if not 1 <= target <= degree:
        raise RangeError(f"target {target} outside 1..{degree}")
    word = ascend_word(1, target - 1, n, degree)
    result = perm.word_product((perm.crossing_perm(n, j, degree) for j in word), degree)
    if result(1) != target:
        raise ContractError(f"send-first schedule maps 1 to {result(1)}, not {target}")
    return Schedule.from_word(degree, n, word, (), result)


def conj_move_max(tau: Permutation, n: int, target: int) -> Schedule:
    """Move the largest entry of a permutation to ``target`` by
    conjugation, leaving all other entries in place."""
    entries = sorted(perm.support(tau))
    if not entries:
        raise ContractError("permutation has no entries to move")
    top = entries[-1]
    if not top <= target <= tau.degree:
        raise RangeError(f"target {target} outside {top}..{tau.degree}")
    steps = conj_steps_for_word(ascend_word(top, target - top, n, tau.degree))
    relabel = {top: target}
    expected = perm.from_cycles(
        tau.degree, [tuple(relabel.get(x, x) for x in c) for c in perm.cycles(tau)]
    )
    return Schedule.conjugating(n, tau, steps, expected)


def conj_move_all(tau: Permutation, n: int, targets: list[int]) -> Schedule:
    """Conjugate a permutation so that its i-th smallest entry becomes
    targets[i], preserving the cycle structure."""
    entries = sorted(perm.support(tau))
    if len(targets) != len(entries):
        raise ContractError(f"{len(entries)} entries but {len(targets)} targets")
    if any(a >= b for a, b in zip(targets, targets[1:])):
        raise ContractError("targets must be strictly ascending")
    if targets and (targets[0] < 1 or targets[-1] > tau.degree):
        raise RangeError("targets outside the degree")
    relabel = dict(zip(entries, targets))
    target_perm = perm.from_cycles(
        tau.degree, [tuple(relabel[x] for x in c) for c in perm.cycles(tau)]
    )
    steps = conjugation_to(tau, target_perm, n)
    return Schedule.conjugating(n, tau, steps, target_perm)


def conj_same_cycle_type(tau: Permutation, target: Permutation, n: int) -> Schedule:
    """Conjugate tau exactly onto any permutation of the same cycle type."""
    steps = conjugation_to(tau, target, n)
    return Schedule.conjugating(n, tau, steps, target)


def even_pair_product(n: int, m: int) -> Schedule:
    """A width-n crossing-permutation word over m points with product
    (1,n)(2n-1,2n): conjugate the first crossing permutation to walk its
    extreme entries out to 2n-1, 2n, then multiply by it once so the
    middle transpositions cancel."""
    if n % 2 != 0 or n < 4:
        raise ContractError(f"width must be even and >= 4, got {n}")
    if m < 5 * n // 2 - 1:
        raise RangeError(f"need at least {5 * n // 2 - 1} points, got {m}")
    steps = [
        conjugate_step(n),
        conjugate_step(3 * n // 2),
        conjugate_step(1),
        conjugate_step(n),
        multiply_step(1),
    ]
    result = perm.from_cycles(m, [(1, n), (2 * n - 1, 2 * n)])
    return Schedule.from_word(m, n, (1,), steps, result)


# ---------------------------------------------------------------------------
# Level realization.


def realize_levels(
    targets: list[MultiCrossing],
    schedule_positions: list[int] | tuple[int, ...],
    n: int,
    m: int,
) -> MultiBraidWord:
    """Assign levels to a word of width-n crossings so the result equals
    a sequence of disjoint target crossings.

    Heights: the strands of the first target crossing take the highest
    levels (in the crossing's own level order), the next crossing the
    next block, and the leftover strands follow in position order.  Each
    scheduled crossing then reads its level permutation off the heights
    of the strands entering it, so every strand keeps one height
    throughout and all auxiliary crossings cancel when pulled taut.
    """
    occupied: set[int] = set()
    widths = {c.width for c in targets}
    if len(widths) > 1:
        raise ContractError(f"target crossings must share one width, got {widths}")
    for c in targets:
        span = set(c.strand_positions)
        if span & occupied:
            raise ContractError("target crossings are not disjoint")
        if c.position + c.width - 1 > m:
            raise RangeError("target crossing overflows the strand count")
        occupied |= span

    target_perm = perm.word_product(
        (perm.crossing_perm(c.width, c.position, m) for c in targets), m
    )
    schedule_perm = perm.word_product(
        (perm.crossing_perm(n, j, m) for j in schedule_positions), m
    )
    if target_perm != schedule_perm:
        raise ContractError(
            "schedule product does not equal the projection of the targets"
        )

    height: dict[int, int] = {}
    next_height = 1
    for c in targets:
        for offset, pos in enumerate(c.strand_positions):
            height[pos] = next_height + c.levels[offset] - 1
        next_height += c.width
    for pos in range(1, m + 1):
        if pos not in height:
            height[pos] = next_height
            next_height += 1

    arrangement = list(range(1, m + 1))  # arrangement[p-1] = strand id
    crossings = []
    for j in schedule_positions:
        _check_position(j, n, m)
        block = arrangement[j - 1 : j + n - 1]
        order = sorted(range(n), key=lambda t: height[block[t]])
        levels = [0] * n
        for rank, t in enumerate(order, start=1):
            levels[t] = rank
        crossings.append(MultiCrossing(j, n, tuple(levels)))
        arrangement[j - 1 : j + n - 1] = list(reversed(block))
    return MultiBraidWord(m, n, tuple(crossings))


# ---------------------------------------------------------------------------
# Even-width conversion.


def _double_crossing(i: int, sign: int) -> MultiCrossing:
    return MultiCrossing(i, 2, (1, 2) if sign > 0 else (2, 1))


def transposition_pair_word(
    first: tuple[int, int], second: tuple[int, int], n: int, m: int
) -> list[int]:
    """Word of width-n crossing positions with product exactly
    (first)(second), two disjoint transpositions."""
    a, b = sorted(first)
    c, d = sorted(second)
    if len({a, b, c, d}) != 4:
        raise ContractError("transposition pair must involve four distinct points")
    base = even_pair_product(n, m)
    target = perm.from_cycles(m, [(a, b), (c, d)])
    steps = conjugation_to(base.result, target, n)
    sched = Schedule.from_word(m, n, base.flatten(), steps, target)
    return list(sched.flatten())


def single_transposition_schedule(i: int, n: int, m: int) -> Schedule:
    """Schedule with product (i, i+1) for widths n = 4k+2: the first
    crossing permutation contributes an odd number of transpositions;
    cancel them in pairs from the outside and steer the survivor."""
    if n % 4 != 2 or n < 6:
        raise ContractError(f"single transpositions need width 2 mod 4, got {n}")
    pi1 = perm.crossing_perm(n, 1, m)
    trans = perm.cycles(pi1)  # outermost first: (1,n), (2,n-1), ...
    steps: list[Step] = []
    for idx in range(0, len(trans) - 1, 2):
        t1, t2 = trans[idx], trans[idx + 1]
        for j in transposition_pair_word(tuple(t1), tuple(t2), n, m):
            steps.append(multiply_step(j))
    keep = trans[-1]
    target = perm.from_cycles(m, [(i, i + 1)])
    steps.extend(conjugation_to(perm.from_cycles(m, [keep]), target, n))
    return Schedule.from_word(m, n, (1,), steps, target)


def pair_transposition_schedule(
    first: tuple[int, int], second: tuple[int, int], n: int, m: int
) -> Schedule:
    """Schedule with product (first)(second) for widths n = 4k: the first
    crossing permutation has an even number of transpositions; cancel all
    but the two innermost and steer them."""
    if n % 4 != 0:
        raise ContractError(f"disjoint pairs need width 0 mod 4, got {n}")
    pi1 = perm.crossing_perm(n, 1, m)
    trans = perm.cycles(pi1)
    steps: list[Step] = []
    for idx in range(0, len(trans) - 2, 2):
        t1, t2 = trans[idx], trans[idx + 1]
        for j in transposition_pair_word(tuple(t1), tuple(t2), n, m):
            steps.append(multiply_step(j))
    kept = perm.from_cycles(m, [trans[-2], trans[-1]])
    target = perm.from_cycles(m, [first, second])
    steps.extend(conjugation_to(kept, target, n))
    return Schedule.from_word(m, n, (1,), steps, target)


def _dummy_position(m: int, blocked: set[int]) -> int:
    """Highest adjacent pair (d, d+1) disjoint from the blocked points."""
    for d in range(m - 1, 0, -1):
        if d not in blocked and d + 1 not in blocked:
            return d
    raise ContractError("no room for a dummy crossing")


def convert_even(w: BraidWord, n: int) -> MultiBraidWord:
    return convert_even_with_audit(w, n)[0]


def convert_even_with_audit(w: BraidWord, n: int) -> tuple[MultiBraidWord, dict]:
    """Present the closure of w as a braid of width-n crossings, n even.

    The word is stabilized to at least 3n+1 strands.  For n = 4k+2 each
    letter is realized on its own from a schedule whose product is the
    single adjacent transposition; for n = 4k the letters are taken in
    disjoint pairs (an extra stabilization makes the count even, and a
    cancelling dummy pair decouples letters that share a strand).
    """
    if n % 2 != 0 or n < 4:
        raise ContractError(f"conversion width must be even and >= 4, got {n}")
    prepared = w
    stabilizations = 0
    while prepared.strands < 3 * n + 1:
        prepared = stabilize(prepared)
        stabilizations += 1
    if n % 4 == 0 and prepared.crossing_count % 2 == 1:
        prepared = stabilize(prepared)
        stabilizations += 1
    m = prepared.strands

    blocks: list[dict] = []
    crossings: list[MultiCrossing] = []

    def emit(targets: list[MultiCrossing], positions: list[int], letters: list[int]):
        word = realize_levels(targets, positions, n, m)
        crossings.extend(word.crossings)
        blocks.append(
            {
                "letters": letters,
                "targets": [
                    {"j": c.position, "width": c.width, "levels": list(c.levels)}
                    for c in targets
                ],
                "schedule": list(positions),
            }
        )

    if n % 4 == 2:
        for x in prepared.letters:
            sched = single_transposition_schedule(abs(x), n, m)
            emit([_double_crossing(abs(x), x)], list(sched.flatten()), [x])
    else:
        letters = list(prepared.letters)
        for k in range(0, len(letters), 2):
            x, y = letters[k], letters[k + 1]
            span_x = {abs(x), abs(x) + 1}
            span_y = {abs(y), abs(y) + 1}
            if span_x & span_y:
                d = _dummy_position(m, span_x | span_y)
                sched1 = pair_transposition_schedule(
                    (abs(x), abs(x) + 1), (d, d + 1), n, m
                )
                emit(
                    [_double_crossing(abs(x), x), _double_crossing(d, 1)],
                    list(sched1.flatten()),
                    [x],
                )
                sched2 = pair_transposition_schedule(
                    (d, d + 1), (abs(y), abs(y) + 1), n, m
                )
                emit(
                    [_double_crossing(d, -1), _double_crossing(abs(y), y)],
                    list(sched2.flatten()),
                    [y],
                )
            else:
                sched = pair_transposition_schedule(
                    (abs(x), abs(x) + 1), (abs(y), abs(y) + 1), n, m
                )
                emit(
                    [_double_crossing(abs(x), x), _double_crossing(abs(y), y)],
                    list(sched.flatten()),
                    [x, y],
                )

    out = MultiBraidWord(m, n, tuple(crossings))
    if phi(prepared) != perm.word_product(
        (perm.crossing_perm(n, c.position, m) for c in out.crossings), m
    ):
        raise ContractError("conversion lost the projected permutation")
    audit = {
        "schema": 1,
        "kind": "even",
        "width": n,
        "input": {"strands": w.strands, "letters": list(w.letters)},
        "moves": [{"move": "stabilize", "sign": 1}] * stabilizations,
        "prepared": {"strands": m, "letters": list(prepared.letters)},
        "blocks": blocks,
        "output_strands": m,
    }
    return out, audit
