"""Exact permutation algebra on the points {1..m}.

Conventions used throughout the package:

- Points are 1-based, matching the usual labelling of braid strands from
  the left.  A ``Permutation`` of degree m stores ``image`` of length m
  where ``image[i-1]`` is the image of point i.
- Composition is function composition: ``compose(p, q)`` applies q first,
  then p.  Products of words of generators are folded left to right with
  this convention (see :func:`word_product`), so the written product
  ``p1 p2 ... pk`` has ``pk`` acting first on points, exactly as in cycle
  arithmetic done by hand.
- Cycle notation is canonical: every cycle starts at its minimum element,
  cycles are sorted by minimum, and 1-cycles are dropped.  The identity
  prints as ``()``.

The distinguished generators are the *crossing permutations*: the
involution induced by an n-strand crossing at position j reverses the
block of points j..j+n-1 and fixes everything else.  For odd n the centre
point of the block is fixed, so an odd crossing permutation never mixes
points of different parity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, RangeError


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..m}; ``image[i-1]`` is where point i maps."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise RangeError(f"not a bijection on 1..{len(self.image)}: {self.image}")

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise RangeError(f"point {point} outside 1..{self.degree}")
        return self.image[point - 1]

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))


def identity(m: int) -> Permutation:
    """The identity permutation on {1..m}."""
    if m < 0:
        raise RangeError(f"degree must be non-negative, got {m}")
    return Permutation(tuple(range(1, m + 1)))


def transposition(m: int, a: int, b: int) -> Permutation:
    """The transposition (a b) in degree m."""
    if not (1 <= a <= m and 1 <= b <= m) or a == b:
        raise RangeError(f"bad transposition ({a} {b}) in degree {m}")
    img = list(range(1, m + 1))
    img[a - 1], img[b - 1] = b, a
    return Permutation(tuple(img))


def crossing_perm(n: int, j: int, m: int) -> Permutation:
    """The crossing permutation of width n at position j in degree m.

    Reverses the block j..j+n-1: point j+t maps to j+n-1-t.  It is an
    involution made of floor(n/2) transpositions; for odd n the centre
    point j+(n-1)/2 is fixed.

    >>> str(crossing_perm(4, 1, 6))
    '(1 4)(2 3)'
    >>> str(crossing_perm(3, 2, 5))
    '(2 4)'
    """
    if n < 2:
        raise RangeError(f"crossing width must be >= 2, got {n}")
    if n > m:
        raise RangeError(f"width {n} exceeds degree {m}")
    if not 1 <= j <= m - n + 1:
        raise RangeError(f"position {j} outside 1..{m - n + 1} for width {n} in degree {m}")
    img = list(range(1, m + 1))
    for t in range(n):
        img[j + t - 1] = j + n - 1 - t
    return Permutation(tuple(img))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Function composition p∘q: apply q first, then p."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degrees {p.degree} != {q.degree}")
    return Permutation(tuple(p.image[q.image[i] - 1] for i in range(p.degree)))


def inverse(p: Permutation) -> Permutation:
    img = [0] * p.degree
    for i, v in enumerate(p.image):
        img[v - 1] = i + 1
    return Permutation(tuple(img))


def conjugate(p: Permutation, s: Permutation) -> Permutation:
    """The conjugate s·p·s⁻¹; relabels every point of p by s.

    Cycle type is preserved.  When s is a crossing permutation it equals
    its own inverse, so the result is s·p·s.
    """
    if p.degree != s.degree:
        raise DegreeMismatchError(f"degrees {p.degree} != {s.degree}")
    img = [0] * p.degree
    for i in range(1, p.degree + 1):
        img[s.image[i - 1] - 1] = s.image[p.image[i - 1] - 1]
    return Permutation(tuple(img))


def word_product(perms: Iterable[Permutation], m: int | None = None) -> Permutation:
    """Product of a word of permutations, rightmost factor acting first.

    ``word_product([a, b, c])`` is a∘b∘c.  An empty word needs the degree.
    """
    acc: Permutation | None = None
    for g in perms:
        acc = g if acc is None else compose(acc, g)
    if acc is None:
        if m is None:
            raise RangeError("empty word needs an explicit degree")
        return identity(m)
    return acc


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles of length >= 2, each starting at its minimum,
    sorted by minimum."""
    seen = [False] * p.degree
    out = []
    for start in range(1, p.degree + 1):
        if seen[start - 1] or p.image[start - 1] == start:
            continue
        cyc = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cyc.append(x)
            x = p.image[x - 1]
        out.append(tuple(cyc))
    return out


def from_cycles(m: int, cycs: Sequence[Sequence[int]]) -> Permutation:
    """Build a permutation of degree m from disjoint cycles.

    >>> str(from_cycles(6, [(1, 4), (2, 3)]))
    '(1 4)(2 3)'
    """
    img = list(range(1, m + 1))
    used: set[int] = set()
    for cyc in cycs:
        for x in cyc:
            if not 1 <= x <= m:
                raise RangeError(f"cycle entry {x} outside 1..{m}")
            if x in used:
                raise RangeError(f"cycles not disjoint at {x}")
            used.add(x)
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)]
    return Permutation(tuple(img))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Multiset of cycle lengths >= 2, sorted descending.  Conjugation
    invariant."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def size(p: Permutation) -> int:
    """Number of non-fixed points: the count of distinct entries in cycle
    notation once 1-cycles are dropped.

    >>> size(from_cycles(9, [(1, 4), (7, 8)]))
    4
    """
    return sum(1 for i, v in enumerate(p.image) if v != i + 1)


def parity(p: Permutation) -> str:
    """'even' or 'odd': sign of the permutation as (-1)^(#transpositions)."""
    transpositions = sum(len(c) - 1 for c in cycles(p))
    return "even" if transpositions % 2 == 0 else "odd"


def is_even(p: Permutation) -> bool:
    return parity(p) == "even"


def preserves_position_parity(p: Permutation) -> bool:
    """True when every point maps to a point of the same parity."""
    return all((i + 1) % 2 == v % 2 for i, v in enumerate(p.image))


def support(p: Permutation) -> set[int]:
    return {i + 1 for i, v in enumerate(p.image) if v != i + 1}


def restricted_parity(p: Permutation, points: Sequence[int]) -> str:
    """Parity of p restricted to an invariant subset of points.

    The subset must be closed under p; points are relabelled 1..k in the
    given order before the sign is taken.
    """
    index = {x: i + 1 for i, x in enumerate(points)}
    img = []
    for x in points:
        y = p.image[x - 1]
        if y not in index:
            raise RangeError(f"subset not invariant: {x} maps outside")
        img.append(index[y])
    return parity(Permutation(tuple(img)))


def format_cycles(p: Permutation) -> str:
    """Canonical cycle-notation text, e.g. ``(1 4)(2 3)``; identity is ``()``."""
    cycs = cycles(p)
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, m: int) -> Permutation:
    """Parse canonical cycle notation into a permutation of degree m."""
    stripped = text.strip()
    if stripped == "()" or stripped == "":
        return identity(m)
    if not re.fullmatch(r"(\([^()]*\))+", stripped):
        raise RangeError(f"cannot parse cycle notation: {text!r}")
    cycs = []
    for body in _CYCLE_RE.findall(stripped):
        entries = [int(tok) for tok in body.split()]
        if entries:
            cycs.append(entries)
    return from_cycles(m, cycs)
