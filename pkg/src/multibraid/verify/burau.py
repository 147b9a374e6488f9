"""Unreduced Burau representation with exact Laurent-polynomial entries.

The generator σ_i acts on the free module of rank m as the identity
outside rows/columns i, i+1 and as the block

    [[1-t, t],
     [1,   0]]

there; its inverse letter maps to the inverse block [[0, 1], [t⁻¹,
1-t⁻¹]].  The map is multiplicative over concatenation, so it separates
many braids that the symmetric-group projection identifies, while being
far cheaper than a normal form on long words.
"""

from __future__ import annotations

from ..braid import BraidWord
from .laurent import LaurentPoly

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


def identity_matrix(m: int) -> tuple[tuple[LaurentPoly, ...], ...]:
    return tuple(
        tuple(_ONE if i == j else _ZERO for j in range(m)) for i in range(m)
    )


def matrix_mul(
    a: tuple[tuple[LaurentPoly, ...], ...], b: tuple[tuple[LaurentPoly, ...], ...]
) -> tuple[tuple[LaurentPoly, ...], ...]:
    m = len(a)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = _ZERO
            for k in range(m):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def generator_matrix(m: int, letter: int) -> tuple[tuple[LaurentPoly, ...], ...]:
    i = abs(letter)
    rows = [list(row) for row in identity_matrix(m)]
    if letter > 0:
        rows[i - 1][i - 1] = LaurentPoly({0: 1, 1: -1})  # 1 - t
        rows[i - 1][i] = LaurentPoly.monomial(1)  # t
        rows[i][i - 1] = _ONE
        rows[i][i] = _ZERO
    else:
        rows[i - 1][i - 1] = _ZERO
        rows[i - 1][i] = _ONE
        rows[i][i - 1] = LaurentPoly.monomial(-1)  # t^-1
        rows[i][i] = LaurentPoly({0: 1, -1: -1})  # 1 - t^-1
    return tuple(tuple(r) for r in rows)


def burau(w: BraidWord) -> tuple[tuple[LaurentPoly, ...], ...]:
    """Image of the word, multiplying generator matrices in word order."""
    out = identity_matrix(w.strands)
    for x in w.letters:
        out = matrix_mul(out, generator_matrix(w.strands, x))
    return out


def determinant(matrix: tuple[tuple[LaurentPoly, ...], ...]) -> LaurentPoly:
    """Cofactor-expansion determinant; fine for the small sizes tests use."""
    m = len(matrix)
    if m == 1:
        return matrix[0][0]
    total = _ZERO
    for j in range(m):
        if matrix[0][j].is_zero():
            continue
        minor = tuple(
            tuple(matrix[i][k] for k in range(m) if k != j) for i in range(1, m)
        )
        term = matrix[0][j] * determinant(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total
