"""Named desk-scale instances used by the test suite and the CLI.

Two rings here only exist as explicit tables: the 2x2 upper
triangular matrices over Z/2 (the standard small ring with no
generating character) and the chain ring Z/2[t] with t^2 = 0.
"""

from __future__ import annotations

from .finring import MatrixRing, Ring, TableRing, Zmod, build_ring
from .galg import GroupAlgebra
from .grp import CyclicGroup, SymmetricGroup, build_group

_UPPER_TRIANGULAR_MUL = (
    (0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 2, 3, 0, 1, 2, 3),
    (0, 0, 0, 0, 2, 2, 2, 2),
    (0, 1, 2, 3, 2, 3, 0, 1),
    (0, 0, 0, 0, 4, 4, 4, 4),
    (0, 1, 2, 3, 4, 5, 6, 7),
    (0, 0, 0, 0, 6, 6, 6, 6),
    (0, 1, 2, 3, 6, 7, 4, 5),
)

_CHAIN_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 0, 2),
    (0, 3, 2, 1),
)


def upper_triangular() -> Ring:
    """2x2 upper triangular matrices over Z/2, as an 8-element table ring.

    Coordinates are (strictly-upper entry, then the two diagonal
    entries); the identity lands at index 5. This ring has no
    generating character, making it the canonical negative control
    for duality statements.
    """
    return build_ring(TableRing((2, 2, 2), _UPPER_TRIANGULAR_MUL, label="UT2(Z2)"))


def chain_square_zero() -> Ring:
    """Z/2[t]/(t^2): a local chain ring with radical {0, t} and t^2 = 0."""
    return build_ring(TableRing((2, 2), _CHAIN_MUL, label="Z2[t]/(t^2)"))


# ---------------------------------------------------------------------------
# desk-scale group algebras
#
# Every instance that the test suite and the CLI exercise exhaustively.
# Keys are lowercase short names; each call builds a fresh algebra so
# callers may not worry about shared mutable state (all tables are
# frozen anyway, but identity of objects stays per-call).

_DESK_BUILDERS = {
    # semisimple / separable territory
    "f2c2": lambda: GroupAlgebra(build_ring(Zmod(2)), build_group(CyclicGroup(2))),
    "f3c2": lambda: GroupAlgebra(build_ring(Zmod(3)), build_group(CyclicGroup(2))),
    "f2c3": lambda: GroupAlgebra(build_ring(Zmod(2)), build_group(CyclicGroup(3))),
    "f2s3": lambda: GroupAlgebra(build_ring(Zmod(2)), build_group(SymmetricGroup(3))),
    # local coefficient rings with a nontrivial radical
    "z4c2": lambda: GroupAlgebra(build_ring(Zmod(4)), build_group(CyclicGroup(2))),
    "z4c3": lambda: GroupAlgebra(build_ring(Zmod(4)), build_group(CyclicGroup(3))),
    "f2x2c2": lambda: GroupAlgebra(chain_square_zero(), build_group(CyclicGroup(2))),
    # noncommutative coefficient rings
    "m2f2c2": lambda: GroupAlgebra(
        build_ring(MatrixRing(2, Zmod(2))), build_group(CyclicGroup(2))),
    "m2f2c3": lambda: GroupAlgebra(
        build_ring(MatrixRing(2, Zmod(2))), build_group(CyclicGroup(3))),
}

DESK_NAMES = tuple(_DESK_BUILDERS)


def desk_algebra(name: str) -> GroupAlgebra:
    """Build one of the named desk instances; KeyError lists valid names."""
    try:
        builder = _DESK_BUILDERS[name]
    except KeyError:
        raise KeyError(
            f"unknown desk instance {name!r}; choose one of {', '.join(DESK_NAMES)}"
        ) from None
    return builder()
