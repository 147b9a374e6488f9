"""Braid words, multi-crossing braid words, and the moves between them.

Conventions:

- A braid word on m strands is a sequence of nonzero integers; letter i
  (1 <= i <= m-1) is the Artin generator crossing positions i and i+1,
  and -i is its inverse.  Sign convention: in a positive letter the
  strand entering at position i (moving left to right) passes OVER the
  strand entering at position i+1.
- A width-n crossing at position j carries a level assignment: levels[t]
  is the level (1 = top) of the strand entering the crossing at position
  j+t.  Expanding the crossing yields the staircase reduced word for the
  block reversal, one letter per strand pair, each pair crossing exactly
  once; a pair's letter is positive exactly when the strand with the
  smaller level number is the one moving left to right.
- The projection ``phi`` to the symmetric group forgets signs and levels:
  a letter maps to the adjacent transposition, an n-crossing to the
  block-reversal crossing permutation.  Word products fold with the
  rightmost factor acting first (see perm.word_product); every consumer
  in this package uses the same convention, so schedule products and
  projected braids compare exactly.

Text formats:

- braid file: header ``braid m=<strands>``, then whitespace-separated
  signed letters (may span lines).
- multi-crossing file: header ``multibraid m=<strands> n=<width>``, then
  one crossing per line: ``j=<pos> levels=<l1,l2,...,ln>``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .errors import RangeError, StructuralError


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands``."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise RangeError(f"strand count must be >= 1, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise RangeError(f"letter {x} invalid on {self.strands} strands")

    @property
    def crossing_count(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise RangeError("concatenation needs equal strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse_word(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def free_reduce(self) -> "BraidWord":
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(self.strands, tuple(out))

    def shift(self, k: int, strands: int) -> "BraidWord":
        """The same word with all generator indices raised by k, on a new
        strand count."""
        return BraidWord(strands, tuple(x + k if x > 0 else x - k for x in self.letters))

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class MultiCrossing:
    """A width-n crossing at position ``position`` with a level for each
    entering strand (1 = top)."""

    position: int
    width: int
    levels: tuple[int, ...]

    def __post_init__(self):
        if self.width < 2:
            raise RangeError(f"crossing width must be >= 2, got {self.width}")
        if self.position < 1:
            raise RangeError(f"position must be >= 1, got {self.position}")
        if sorted(self.levels) != list(range(1, self.width + 1)):
            raise RangeError(f"levels must be a bijection on 1..{self.width}: {self.levels}")

    @property
    def strand_positions(self) -> range:
        return range(self.position, self.position + self.width)


@dataclass(frozen=True)
class MultiBraidWord:
    """A braid word in which every crossing has the same width."""

    strands: int
    width: int
    crossings: tuple[MultiCrossing, ...] = ()

    def __post_init__(self):
        if self.width > self.strands:
            raise RangeError(f"width {self.width} exceeds {self.strands} strands")
        for c in self.crossings:
            if c.width != self.width:
                raise RangeError(f"crossing width {c.width} != word width {self.width}")
            if c.position + c.width - 1 > self.strands:
                raise RangeError(f"crossing at {c.position} overflows {self.strands} strands")

    def __str__(self) -> str:
        return format_multibraid(self)


def phi(w: BraidWord) -> perm.Permutation:
    """Project a braid word to the symmetric group, forgetting signs."""
    return perm.word_product(
        (perm.transposition(w.strands, abs(x), abs(x) + 1) for x in w.letters), w.strands
    )


def phi_multi(w: MultiBraidWord) -> perm.Permutation:
    """Project a multi-crossing word: the product of its crossing
    permutations, independent of levels."""
    return perm.word_product(
        (perm.crossing_perm(c.width, c.position, w.strands) for c in w.crossings), w.strands
    )


def strand_flow(w: BraidWord) -> perm.Permutation:
    """Where each top position exits at the bottom, following strands."""
    return perm.word_product(
        (perm.transposition(w.strands, abs(x), abs(x) + 1) for x in reversed(w.letters)),
        w.strands,
    )


def closure_components(w) -> int:
    """Number of components of the braid closure: cycles of the projected
    permutation, counting fixed points."""
    p = phi_multi(w) if isinstance(w, MultiBraidWord) else phi(w)
    return len(perm.cycles(p)) + sum(1 for i, v in enumerate(p.image) if v == i + 1)


def expand_crossing(c: MultiCrossing, strands: int) -> BraidWord:
    """Expand one width-n crossing into its staircase word of n(n-1)/2
    letters realizing the block reversal.

    The staircase for the block at position j is
    (s_{j+n-2} .. s_j)(s_{j+n-2} .. s_{j+1}) ... (s_{j+n-2}); every strand
    pair of the block crosses exactly once, and the letter is positive
    when the smaller-level strand enters from the left.
    """
    j, n = c.position, c.width
    level_at = {j + t: c.levels[t] for t in range(n)}
    letters = []
    for start in range(j, j + n - 1):
        for pos in range(j + n - 2, start - 1, -1):
            a, b = level_at[pos], level_at[pos + 1]
            letters.append(pos if a < b else -pos)
            level_at[pos], level_at[pos + 1] = b, a
    return BraidWord(strands, tuple(letters))


def expand(w: MultiBraidWord) -> BraidWord:
    """Expand every crossing; the projections agree:
    phi(expand(w)) == phi_multi(w)."""
    out = BraidWord(w.strands)
    for c in w.crossings:
        out = out * expand_crossing(c, w.strands)
    return out


def conjugate_word(w: BraidWord, g: int) -> BraidWord:
    """Markov conjugation w -> g·w·g⁻¹ by a signed generator letter."""
    if g == 0 or abs(g) > w.strands - 1:
        raise RangeError(f"letter {g} invalid on {w.strands} strands")
    return BraidWord(w.strands, (g,) + w.letters + (-g,))


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: add one strand and the letter ±σ_m; both the
    strand and crossing counts grow by one."""
    if sign not in (1, -1):
        raise RangeError("stabilization sign must be +1 or -1")
    m = w.strands
    return BraidWord(m + 1, w.letters + (sign * m,))


def destabilize(w: BraidWord) -> BraidWord:
    """Undo a stabilization: the last letter must be ±σ_{m-1} and that
    index must not occur elsewhere."""
    m = w.strands
    if m < 2 or not w.letters or abs(w.letters[-1]) != m - 1:
        raise StructuralError("word does not end with ±σ_{m-1}")
    if any(abs(x) == m - 1 for x in w.letters[:-1]):
        raise StructuralError(f"generator {m - 1} occurs before the final letter")
    return BraidWord(m - 1, w.letters[:-1])


THREE_STAB_VARIANTS = ("right", "second_string", "second_last")


def three_stabilize(w: BraidWord, variant: str = "right") -> BraidWord:
    """Add one strand and three letters groupable into a single triple
    crossing, preserving the closure.

    The move is a Type II slide of one edge string over its neighbour
    followed by a stabilization of the arc that became outermost.  The
    'right'/'second_last' variants act on strands m-1, m and append
    σ_{m-1} σ_m σ_{m-1}⁻¹, a triple crossing at position m-1.  The
    'second_string' variant is the mirror at the left edge: the new
    strand enters at position 1 (all letters shift up) and the appended
    triple crossing σ_2 σ_1 σ_2⁻¹ sits at position 1.
    """
    if variant not in THREE_STAB_VARIANTS:
        raise RangeError(f"unknown variant {variant!r}")
    m = w.strands
    if m < 2:
        raise RangeError("three_stabilize needs at least 2 strands")
    if variant == "second_string":
        shifted = w.shift(1, m + 1)
        return BraidWord(m + 1, shifted.letters + (2, 1, -2))
    return BraidWord(m + 1, w.letters + (m - 1, m, -(m - 1)))


def three_stab_crossing(variant: str, strands_before: int) -> MultiCrossing:
    """The triple crossing the corresponding three letters group into."""
    m = strands_before
    if variant == "second_string":
        # σ_2 σ_1 σ_2⁻¹ is the staircase with signs (+,+,-): levels (2,1,3).
        return MultiCrossing(1, 3, (2, 1, 3))
    # σ_{m-1} σ_m σ_{m-1}⁻¹ equals σ_m⁻¹ σ_{m-1} σ_m: signs (-,+,+),
    # the staircase at position m-1 with levels (1,3,2).
    return MultiCrossing(m - 1, 3, (1, 3, 2))


def multi_three_stabilize(w: MultiBraidWord, variant: str = "right") -> MultiBraidWord:
    """three_stabilize on a width-3 word, staying in multi-crossing form."""
    if w.width != 3:
        raise RangeError("multi-crossing 3-stabilization needs width 3")
    if variant not in THREE_STAB_VARIANTS:
        raise RangeError(f"unknown variant {variant!r}")
    m = w.strands
    if variant == "second_string":
        shifted = tuple(
            MultiCrossing(c.position + 1, c.width, c.levels) for c in w.crossings
        )
        return MultiBraidWord(m + 1, 3, shifted + (three_stab_crossing(variant, m),))
    return MultiBraidWord(m + 1, 3, w.crossings + (three_stab_crossing(variant, m),))


def format_braid(w: BraidWord) -> str:
    lines = [f"braid m={w.strands}"]
    if w.letters:
        lines.append(" ".join(str(x) for x in w.letters))
    return "\n".join(lines) + "\n"


def parse_braid(text: str) -> BraidWord:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("braid "):
        raise RangeError("missing 'braid m=<strands>' header")
    header = lines[0].split()
    fields = dict(tok.split("=", 1) for tok in header[1:] if "=" in tok)
    if "m" not in fields:
        raise RangeError("braid header needs m=<strands>")
    m = int(fields["m"])
    letters = tuple(int(tok) for ln in lines[1:] for tok in ln.split())
    return BraidWord(m, letters)


def format_multibraid(w: MultiBraidWord) -> str:
    lines = [f"multibraid m={w.strands} n={w.width}"]
    for c in w.crossings:
        lines.append(f"j={c.position} levels={','.join(str(l) for l in c.levels)}")
    return "\n".join(lines) + "\n"


def parse_multibraid(text: str) -> MultiBraidWord:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("multibraid "):
        raise RangeError("missing 'multibraid m=<strands> n=<width>' header")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:] if "=" in tok)
    if "m" not in fields or "n" not in fields:
        raise RangeError("multibraid header needs m= and n=")
    m, n = int(fields["m"]), int(fields["n"])
    crossings = []
    for ln in lines[1:]:
        fs = dict(tok.split("=", 1) for tok in ln.split() if "=" in tok)
        if "j" not in fs or "levels" not in fs:
            raise RangeError(f"bad crossing line: {ln!r}")
        levels = tuple(int(tok) for tok in fs["levels"].split(","))
        crossings.append(MultiCrossing(int(fs["j"]), n, levels))
    return MultiBraidWord(m, n, tuple(crossings))
