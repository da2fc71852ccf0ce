"""Plane partitions in a box, symmetry classes, orbits, and signs.

A plane partition is stored as its a x b height matrix; the cell set view
(1-based coordinates (i, j, k)) is derived on demand.  Symmetry classes
are defined through two sets of box self-maps: `sym` maps that members
must be invariant under, and `anti` maps that send a member onto the
complement of its image cell set.  The sign of a member is (-1)^d where d
counts orbits on which it differs from the class reference partition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import (
    DimensionError,
    InvalidInputError,
    ShapeError,
    UnsupportedClassError,
)

Cell = tuple[int, int, int]


@dataclass(frozen=True)
class BoxDims:
    """Sidelengths of the containing box; degenerate (zero) sides allowed."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 0:
            raise InvalidInputError(f"box sides must be nonnegative: {self}")

    def cells(self) -> Iterator[Cell]:
        for i in range(1, self.a + 1):
            for j in range(1, self.b + 1):
                for k in range(1, self.c + 1):
                    yield (i, j, k)

    def volume(self) -> int:
        return self.a * self.b * self.c


class SymmetryClass(Enum):
    PLAIN = "plain"
    SYMMETRIC = "symmetric"
    CYCLIC = "cyclic"
    TOTALLY_SYMMETRIC = "totally-symmetric"
    SC = "sc"
    TC = "tc"
    STC = "stc"
    CSTC = "cstc"
    CSSC = "cssc"
    TSSC = "tssc"

    @property
    def has_complementation(self) -> bool:
        return self in _COMPLEMENTATION_CLASSES

    @property
    def is_symmetric(self) -> bool:
        return self in (
            SymmetryClass.SYMMETRIC,
            SymmetryClass.TOTALLY_SYMMETRIC,
            SymmetryClass.STC,
            SymmetryClass.TSSC,
        )

    @property
    def is_cyclic(self) -> bool:
        return self in (
            SymmetryClass.CYCLIC,
            SymmetryClass.TOTALLY_SYMMETRIC,
            SymmetryClass.CSTC,
            SymmetryClass.CSSC,
            SymmetryClass.TSSC,
        )


_COMPLEMENTATION_CLASSES = frozenset(
    {
        SymmetryClass.SC,
        SymmetryClass.TC,
        SymmetryClass.STC,
        SymmetryClass.CSTC,
        SymmetryClass.CSSC,
        SymmetryClass.TSSC,
    }
)

# classes whose complementation component reflects through the box center
_POINT_COMPLEMENT = frozenset(
    {SymmetryClass.SC, SymmetryClass.CSSC, SymmetryClass.TSSC}
)
# classes whose complementation component also transposes (i <-> j)
_TRANSPOSE_COMPLEMENT = frozenset(
    {SymmetryClass.TC, SymmetryClass.STC, SymmetryClass.CSTC}
)


def check_box_shape(box: BoxDims, cls: SymmetryClass) -> None:
    """Raise ShapeError unless the box can hold members of the class."""
    a, b, c = box.a, box.b, box.c
    if cls in (SymmetryClass.SYMMETRIC, SymmetryClass.TC, SymmetryClass.STC):
        if a != b:
            raise ShapeError(f"{cls.value} needs a square base, got {box}")
    if cls in (
        SymmetryClass.CYCLIC,
        SymmetryClass.TOTALLY_SYMMETRIC,
        SymmetryClass.CSTC,
        SymmetryClass.CSSC,
        SymmetryClass.TSSC,
    ):
        if not (a == b == c):
            raise ShapeError(f"{cls.value} needs a cubical box, got {box}")
    if cls in (SymmetryClass.TC, SymmetryClass.STC) and c % 2 != 0:
        raise ShapeError(f"{cls.value} needs an even height, got {box}")
    if cls in (SymmetryClass.CSTC, SymmetryClass.CSSC, SymmetryClass.TSSC):
        if a % 2 != 0:
            raise ShapeError(f"{cls.value} needs even sides, got {box}")


@dataclass(frozen=True)
class PlanePartition:
    """A plane partition given by its weakly decreasing height matrix."""

    box: BoxDims
    heights: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_heights(heights: Sequence[Sequence[int]], box: BoxDims) -> "PlanePartition":
        rows = tuple(tuple(row) for row in heights)
        if not is_valid_pp(rows, box):
            raise InvalidInputError("heights are not a plane partition in this box")
        return PlanePartition(box, rows)

    def contains(self, cell: Cell) -> bool:
        i, j, k = cell
        return 1 <= k <= self.heights[i - 1][j - 1]

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self.heights, start=1):
            for j, h in enumerate(row, start=1):
                for k in range(1, h + 1):
                    yield (i, j, k)

    def size(self) -> int:
        return sum(sum(row) for row in self.heights)

    def to_json(self) -> str:
        return json.dumps([list(row) for row in self.heights])

    @staticmethod
    def from_json(text: str, box: BoxDims) -> "PlanePartition":
        return PlanePartition.from_heights(json.loads(text), box)


def is_valid_pp(heights: Sequence[Sequence[int]], box: BoxDims) -> bool:
    """True iff the matrix is a x b, weakly decreasing both ways, entries in [0, c]."""
    rows = [tuple(r) for r in heights]
    if len(rows) != box.a or any(len(r) != box.b for r in rows):
        raise DimensionError(
            f"height matrix must be {box.a} x {box.b}, got {len(rows)} rows"
        )
    for i, row in enumerate(rows):
        for j, h in enumerate(row):
            if not 0 <= h <= box.c:
                return False
            if j + 1 < box.b and h < row[j + 1]:
                return False
            if i + 1 < box.a and h < rows[i + 1][j]:
                return False
    return True


# ---------------------------------------------------------------------------
# symmetry maps


def _maps_for(box: BoxDims, cls: SymmetryClass) -> tuple[
    tuple[Callable[[Cell], Cell], ...], tuple[Callable[[Cell], Cell], ...]
]:
    """(sym, anti) cell maps generating the class's combined group."""
    a, b, c = box.a, box.b, box.c

    def tau(cell: Cell) -> Cell:
        i, j, k = cell
        return (j, i, k)

    def rho(cell: Cell) -> Cell:
        i, j, k = cell
        return (j, k, i)

    def rho2(cell: Cell) -> Cell:
        i, j, k = cell
        return (k, i, j)

    def kappa(cell: Cell) -> Cell:
        i, j, k = cell
        return (a + 1 - i, b + 1 - j, c + 1 - k)

    def taukappa(cell: Cell) -> Cell:
        i, j, k = cell
        return (a + 1 - j, a + 1 - i, c + 1 - k)

    sym: list[Callable[[Cell], Cell]] = []
    if cls.is_symmetric:
        sym.append(tau)
    if cls.is_cyclic:
        sym.extend([rho, rho2])
    anti: list[Callable[[Cell], Cell]] = []
    if cls in _POINT_COMPLEMENT:
        anti.append(kappa)
    elif cls in _TRANSPOSE_COMPLEMENT:
        anti.append(taukappa)
    return tuple(sym), tuple(anti)


def satisfies(pp: PlanePartition, cls: SymmetryClass) -> bool:
    """Check every membership condition of the class for every cell.

    The checks are phrased on the height matrix: transposition invariance
    is h == h^T, the cyclic condition is h[i][j] == #{k : h[j][k] >= i},
    and complementation conditions pair opposite heights to sum to c.
    """
    check_box_shape(pp.box, cls)
    a, b, c = pp.box.a, pp.box.b, pp.box.c
    h = pp.heights

    if cls.is_symmetric:
        if any(h[i][j] != h[j][i] for i in range(a) for j in range(i + 1, b)):
            return False
    if cls.is_cyclic:
        for j in range(a):
            row = h[j]
            for i in range(a):
                if h[i][j] != sum(1 for v in row if v >= i + 1):
                    return False
    if cls in _POINT_COMPLEMENT:
        for i in range(a):
            for j in range(b):
                if h[i][j] + h[a - 1 - i][b - 1 - j] != c:
                    return False
    elif cls in _TRANSPOSE_COMPLEMENT:
        for i in range(a):
            for j in range(a):
                if h[i][j] + h[a - 1 - j][a - 1 - i] != c:
                    return False
    return True


# ---------------------------------------------------------------------------
# orbits and signs


@dataclass(frozen=True)
class Orbit:
    """One combined-group orbit, split into the halves swapped by complementation."""

    half_a: frozenset[Cell]
    half_b: frozenset[Cell]

    def cells(self) -> frozenset[Cell]:
        return self.half_a | self.half_b


@dataclass(frozen=True)
class OrbitDecomposition:
    box: BoxDims
    cls: SymmetryClass
    orbits: tuple[Orbit, ...]


@lru_cache(maxsize=None)
def orbit_decomposition(box: BoxDims, cls: SymmetryClass) -> OrbitDecomposition:
    """Orbits of <class symmetries, complementation> on the box cells.

    Each orbit splits into two equal halves; a class member contains
    exactly one half of each orbit.
    """
    if not cls.has_complementation:
        raise UnsupportedClassError(f"{cls.value} has no complementation component")
    check_box_shape(box, cls)
    sym, anti = _maps_for(box, cls)

    def sym_orbit(seed: Cell) -> frozenset[Cell]:
        seen = {seed}
        stack = [seed]
        while stack:
            cell = stack.pop()
            for g in sym:
                image = g(cell)
                if image not in seen:
                    seen.add(image)
                    stack.append(image)
        return frozenset(seen)

    orbits: list[Orbit] = []
    assigned: set[Cell] = set()
    for cell in box.cells():
        if cell in assigned:
            continue
        half_a = sym_orbit(cell)
        half_b = sym_orbit(anti[0](cell))
        if half_a & half_b:
            raise InvalidInputError(
                f"orbit of {cell} does not split into two halves under {cls.value}"
            )
        assert len(half_a) == len(half_b)
        orbits.append(Orbit(half_a, half_b))
        assigned |= half_a | half_b
    assert len(assigned) == box.volume()
    return OrbitDecomposition(box, cls, tuple(orbits))


def reference_partition(box: BoxDims, cls: SymmetryClass) -> PlanePartition:
    """The class member assigned weight +1.

    TC/STC/SC use the half-full partition {k <= c/2}; the triple classes
    TSSC/CSSC/CSTC use the majority partition {>= 2 coordinates <= a/2}.
    """
    if not cls.has_complementation:
        raise UnsupportedClassError(f"{cls.value} has no complementation component")
    check_box_shape(box, cls)
    a, b, c = box.a, box.b, box.c
    if cls in (SymmetryClass.TC, SymmetryClass.STC, SymmetryClass.SC):
        if c % 2 != 0:
            raise UnsupportedClassError(
                "no half-full reference in a box of odd height; "
                "signed counts are then fixed only up to a global sign"
            )
        heights = tuple(tuple(c // 2 for _ in range(b)) for _ in range(a))
    else:
        alpha = a // 2
        heights = tuple(
            tuple(
                c
                if i <= alpha and j <= alpha
                else (alpha if (i <= alpha) != (j <= alpha) else 0)
                for j in range(1, b + 1)
            )
            for i in range(1, a + 1)
        )
    pp = PlanePartition(box, heights)
    assert satisfies(pp, cls)
    return pp


def orbit_difference(
    pp: PlanePartition, cls: SymmetryClass, reference: PlanePartition | None = None
) -> int:
    """Number of orbits whose half chosen by pp differs from the reference."""
    if reference is None:
        reference = reference_partition(pp.box, cls)
    decomposition = orbit_decomposition(pp.box, cls)
    differing = 0
    for orbit in decomposition.orbits:
        rep = next(iter(orbit.half_a))
        if pp.contains(rep) != reference.contains(rep):
            differing += 1
    return differing


def sign_weight(
    pp: PlanePartition, cls: SymmetryClass, reference: PlanePartition | None = None
) -> int:
    """(-1)^d with d the orbit difference from the reference partition."""
    if not satisfies(pp, cls):
        raise InvalidInputError("plane partition does not satisfy the class predicate")
    return -1 if orbit_difference(pp, cls, reference) % 2 else 1


def region_count(pp: PlanePartition, cls: SymmetryClass) -> int:
    """Cubes of pp in the class's sign-carrying region.

    TC counts the upper half (k > c/2), STC the upper right quarter
    (k > c/2 and i <= j), CSTC one of the mixed octants
    (i <= a/2 < j, k).  Each differing orbit meets the region exactly once,
    so (-1)^region_count reproduces the orbit sign.
    """
    a, c = pp.box.a, pp.box.c
    h = pp.heights
    half = c // 2
    if cls is SymmetryClass.TC:
        return sum(max(v - half, 0) for row in h for v in row)
    if cls is SymmetryClass.STC:
        return sum(
            max(h[i][j] - half, 0) for i in range(a) for j in range(i, a)
        )
    if cls is SymmetryClass.CSTC:
        alpha = a // 2
        return sum(
            max(h[i][j] - alpha, 0) for i in range(alpha) for j in range(alpha, a)
        )
    raise UnsupportedClassError(f"region count is defined for TC/STC/CSTC, not {cls.value}")
