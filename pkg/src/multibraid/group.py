"""Stabilizer chains for permutation groups and classification of the
groups generated by crossing permutations.

The chain is the classic deterministic Schreier-Sims construction: an
ordered base of points, one orbit/transversal per base point, and full
Schreier-generator closure (no randomization), so orders and membership
answers are exact and bit-reproducible.  Degrees here stay small (a few
dozen points), so no shallow-tree or other performance tricks are
needed; orders are Python integers and may be arbitrarily large.

Classification recognises the handful of group shapes that arise from
crossing permutations: the full symmetric group, the alternating group,
and - for odd widths, where generators preserve position parity - the
product of two symmetric groups on the odd and even positions, its
index-2 equal-sign subgroup, and the product of the two alternating
groups.  Anything else is reported as Other with its exact order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import perm
from .errors import DegreeMismatchError, RangeError
from .perm import Permutation


class _Chain:
    """Base points, strong generators tagged with the deepest level whose
    base prefix they fix, and one transversal per level."""

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[tuple[Permutation, int]] = []  # (gen, level)
        self.transversals: list[dict[int, Permutation]] = []

    def gens_at(self, i: int) -> list[Permutation]:
        return [g for g, lvl in self.strong if lvl >= i]

    def append_base_point(self, point: int):
        self.base.append(point)
        self.transversals.append({point: perm.identity(self.degree)})

    def rebuild_transversal(self, i: int):
        t = {self.base[i]: perm.identity(self.degree)}
        gens = self.gens_at(i)
        queue = [self.base[i]]
        while queue:
            a = queue.pop(0)
            rep = t[a]
            for g in gens:
                b = g(a)
                if b not in t:
                    t[b] = perm.compose(g, rep)
                    queue.append(b)
        self.transversals[i] = t

    def strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Sift g through levels >= start; return (residue, stuck_level).
        stuck_level is where the orbit test failed, or the level count if
        g stripped all the way (residue may still be non-identity)."""
        h = g
        for i in range(start, len(self.base)):
            b = h(self.base[i])
            if b not in self.transversals[i]:
                return h, i
            h = perm.compose(perm.inverse(self.transversals[i][b]), h)
        return h, len(self.base)

    def add_strong_generator(self, g: Permutation, level: int):
        """Register g as a strong generator fixing base[:level]."""
        while level >= len(self.base):
            moved = next(x for x in range(1, self.degree + 1) if g(x) != x)
            self.append_base_point(moved)
        self.strong.append((g, level))


def _schreier_sims(chain: _Chain):
    """Bottom-up closure: after return, every Schreier generator of every
    level sifts to the identity, so transversal sizes multiply to the
    exact order."""
    i = len(chain.base) - 1
    while i >= 0:
        chain.rebuild_transversal(i)
        clean = True
        for a in sorted(chain.transversals[i]):
            rep = chain.transversals[i][a]
            for s in chain.gens_at(i):
                image = s(a)
                schreier = perm.compose(
                    perm.inverse(chain.transversals[i][image]), perm.compose(s, rep)
                )
                if schreier.is_identity():
                    continue
                residue, stuck = chain.strip(schreier, i + 1)
                if residue.is_identity():
                    continue
                chain.add_strong_generator(residue, stuck)
                clean = False
                i = stuck
                break
            if not clean:
                break
        if clean:
            i -= 1


@dataclass
class GeneratedGroup:
    """A permutation group with a base and strong generating set."""

    degree: int
    generators: list[Permutation]
    _chain: _Chain

    @property
    def base(self) -> list[int]:
        return list(self._chain.base)

    @property
    def strong_generators(self) -> list[Permutation]:
        return [g for g, _ in self._chain.strong]

    def order(self) -> int:
        n = 1
        for t in self._chain.transversals:
            n *= len(t)
        return n

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatchError(f"degrees {g.degree} != {self.degree}")
        residue, _ = self._chain.strip(g)
        return residue.is_identity()


def build_chain(generators: list[Permutation]) -> GeneratedGroup:
    """Deterministic base and strong generating set for the generated
    group.  Base points are chosen as the smallest moved point each time
    a new one is needed, so results are reproducible."""
    if not generators:
        raise RangeError("need at least one generator")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatchError("generators of mixed degree")

    chain = _Chain(degree)
    for g in generators:
        if not g.is_identity():
            residue, stuck = chain.strip(g)
            if not residue.is_identity():
                chain.add_strong_generator(residue, stuck)
    for i in range(len(chain.base)):
        chain.rebuild_transversal(i)
    _schreier_sims(chain)
    return GeneratedGroup(degree, list(generators), chain)


def enumerate_elements(
    generators: list[Permutation], limit: int = 5_000_000
) -> set[tuple[int, ...]]:
    """BFS closure of the generated group; the independent order oracle
    for small degrees."""
    degree = generators[0].degree
    seen = {perm.identity(degree).image}
    queue = [perm.identity(degree)]
    while queue:
        p = queue.pop()
        for g in generators:
            q = perm.compose(g, p)
            if q.image not in seen:
                if len(seen) >= limit:
                    raise RangeError("BFS enumeration limit exceeded")
                seen.add(q.image)
                queue.append(q)
    return seen


TAGS = (
    "Symmetric",
    "Alternating",
    "ParityProductSymmetric",
    "ParityProductEvenSubgroup",
    "ParityProductAlternating",
    "Other",
)


@dataclass(frozen=True)
class GroupClassification:
    tag: str
    order: int
    parity_block_sizes: tuple[int, int] | None = None


def crossing_generators(n: int, m: int) -> list[Permutation]:
    """All width-n crossing permutations over m points."""
    if n > m:
        raise RangeError(f"width {n} exceeds degree {m}")
    return [perm.crossing_perm(n, j, m) for j in range(1, m - n + 2)]


def classify_group(generators: list[Permutation]) -> GroupClassification:
    """Classify the generated group against the recognised shapes.

    The parity-block analysis is structural (does every generator
    preserve position parity?) and runs before any order comparison, so
    an unrelated group of coincidentally equal order cannot be
    mislabelled.
    """
    chain = build_chain(generators)
    m = chain.degree
    order = chain.order()
    odd_points = [i for i in range(1, m + 1) if i % 2 == 1]
    even_points = [i for i in range(1, m + 1) if i % 2 == 0]
    blocks = (len(odd_points), len(even_points))

    if all(perm.preserves_position_parity(g) for g in generators):
        a, b = blocks
        if order == factorial(a) * factorial(b):
            return GroupClassification("ParityProductSymmetric", order, blocks)
        all_even = all(perm.is_even(g) for g in generators)
        if all_even and order == factorial(a) * factorial(b) // 2:
            return GroupClassification("ParityProductEvenSubgroup", order, blocks)
        blockwise_even = all(
            perm.restricted_parity(g, odd_points) == "even"
            and perm.restricted_parity(g, even_points) == "even"
            for g in generators
        )
        if blockwise_even and order == (factorial(a) // 2) * (factorial(b) // 2):
            return GroupClassification("ParityProductAlternating", order, blocks)
        return GroupClassification("Other", order, blocks)

    if order == factorial(m):
        return GroupClassification("Symmetric", order)
    if order == factorial(m) // 2 and all(perm.is_even(g) for g in generators):
        return GroupClassification("Alternating", order)
    return GroupClassification("Other", order)


def classify_crossing_group(n: int, m: int) -> GroupClassification:
    """What do the width-n crossing permutations generate over m points?"""
    if not 2 <= n <= m:
        raise RangeError(f"need 2 <= n <= m, got n={n} m={m}")
    return classify_group(crossing_generators(n, m))
