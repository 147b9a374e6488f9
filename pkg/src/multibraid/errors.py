"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: ContractError and its subclasses
(including OddImpossible) are "theory" errors (exit 2), ResourceGuardError
is a resource refusal (exit 3), and plain OSError/ValueError from file
handling stay exit 1.
"""


class MultibraidError(Exception):
    """Base class for all package-specific errors."""


class RangeError(MultibraidError):
    """An index, width or degree is outside its documented range."""


class DegreeMismatchError(MultibraidError):
    """Two objects that must share a degree/strand count do not."""


class ContractError(MultibraidError):
    """A documented precondition or postcondition was violated."""


class StructuralError(MultibraidError):
    """A word-level move (e.g. destabilization) is not applicable."""


class OddImpossible(ContractError):
    """A knot cannot be presented as an odd multi-crossing braid.

    Odd-width crossings only mix strands of equal position parity, so any
    odd-width braid closure has at least two components.
    """


class ResourceGuardError(MultibraidError):
    """A computation was refused because it would exceed the size guard."""
