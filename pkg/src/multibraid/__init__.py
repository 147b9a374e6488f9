"""Multi-crossing braid constructions, permutation-group classification,
and exact link-invariant verification."""

__version__ = "0.1.0"
