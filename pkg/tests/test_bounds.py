import pytest

from multibraid.bounds import (
    BoundStatement,
    beta3_from_beta2,
    bounds_tsv,
    compute_classifications,
    derive_bounds,
    markov_parity_example_check,
    transitive_closure,
)
from multibraid.braid import BraidWord
from multibraid.errors import RangeError
from multibraid.group import GroupClassification


def test_beta3_from_beta2():
    assert beta3_from_beta2(2) == 3
    assert beta3_from_beta2(3) == 3
    assert beta3_from_beta2(5) == 5
    with pytest.raises(RangeError):
        beta3_from_beta2(1)


def test_derive_bounds_includes_expected_statements():
    statements, gaps = derive_bounds(10)
    assert not gaps
    have = {(b.lhs_n, b.rhs_m, b.constant) for b in statements}
    assert (6, 8, 0) in have  # width-6 against width-8
    assert (4, 6, 1) in have  # width-4 against width-6 plus one
    assert (4, 8, 0) in have  # parity refinement at m = 8
    for n in range(3, 11):
        assert (2, n, 0) in have
    assert (8, 29, 0) in have  # wide corollary 4n-3 at n=8


def test_derive_bounds_gap_reporting():
    # drop one hypothesis cell: its grid statements must vanish and be
    # reported, with everything else intact.
    classifications = compute_classifications(10)
    del classifications[(6, 8)]
    statements, gaps = derive_bounds(10, classifications)
    assert any("(6, 8)" in g for g in gaps)
    assert not any(
        b.lhs_n == 6 and b.source == "even-grid" for b in statements
    )
    assert any(b.lhs_n == 4 and b.source == "even-grid" for b in statements)


def test_derive_bounds_rejects_wrong_tag():
    classifications = compute_classifications(10)
    classifications[(6, 8)] = GroupClassification("Other", 123)
    statements, gaps = derive_bounds(10, classifications)
    assert any("needed Symmetric" in g for g in gaps)
    assert not any(
        b.lhs_n == 6 and b.source == "even-grid" for b in statements
    )


def test_bounds_deterministic():
    a, _ = derive_bounds(14)
    b, _ = derive_bounds(14)
    assert bounds_tsv(a) == bounds_tsv(b)


def test_odd_grid_statements():
    statements, gaps = derive_bounds(14)
    assert not gaps
    have = {(b.lhs_n, b.rhs_m, b.constant, b.scope) for b in statements}
    assert (5, 8, 1, "MultiComponent") in have
    assert (5, 9, 0, "MultiComponent") in have  # m = 9 is 1 mod 4
    assert (7, 10, 0, "MultiComponent") in have
    assert (9, 12, 3, "MultiComponent") in have
    assert (3, 2, 1, "MultiComponent") in have
    assert (3, 5, 0, "MultiComponent") in have


def test_transitive_closure_chains():
    base = [
        BoundStatement(4, 6, 1, "AllLinks", "even-grid"),
        BoundStatement(6, 8, 0, "AllLinks", "even-grid"),
    ]
    closed = transitive_closure(base)
    have = {(b.lhs_n, b.rhs_m, b.constant) for b in closed}
    assert (4, 8, 1) in have


def test_markov_parity_example():
    for seed in range(50):
        assert markov_parity_example_check(BraidWord(2, (1, 1, 1)), 20, seed)
    assert markov_parity_example_check(BraidWord(3, (1, -2)), 50, 7)
