import pytest

from ppsign import core
from ppsign.core import BoxDims, PlanePartition, SymmetryClass
from ppsign.errors import (
    DimensionError,
    InvalidInputError,
    ShapeError,
    UnsupportedClassError,
)
from ppsign.oracle import enumerate_class

from oracles import cellset_satisfies, cellset_to_pp, cells_of

SC = SymmetryClass

COMPLEMENTATION_BOXES = [
    (SC.SC, BoxDims(2, 2, 2)),
    (SC.SC, BoxDims(3, 2, 2)),
    (SC.SC, BoxDims(2, 3, 3)),
    (SC.TC, BoxDims(2, 2, 2)),
    (SC.TC, BoxDims(3, 3, 2)),
    (SC.TC, BoxDims(4, 4, 4)),
    (SC.STC, BoxDims(2, 2, 2)),
    (SC.STC, BoxDims(3, 3, 4)),
    (SC.STC, BoxDims(4, 4, 2)),
    (SC.CSTC, BoxDims(2, 2, 2)),
    (SC.CSTC, BoxDims(4, 4, 4)),
    (SC.CSSC, BoxDims(2, 2, 2)),
    (SC.CSSC, BoxDims(4, 4, 4)),
    (SC.TSSC, BoxDims(2, 2, 2)),
    (SC.TSSC, BoxDims(4, 4, 4)),
]


def test_box_rejects_negative_sides():
    with pytest.raises(InvalidInputError):
        BoxDims(1, -1, 1)


def test_is_valid_pp():
    box = BoxDims(2, 2, 2)
    assert core.is_valid_pp([[2, 1], [1, 0]], box)
    assert not core.is_valid_pp([[0, 1], [0, 0]], box)
    assert not core.is_valid_pp([[3, 0], [0, 0]], box)
    with pytest.raises(DimensionError):
        core.is_valid_pp([[1, 1]], box)


def test_satisfies_examples():
    box = BoxDims(2, 2, 2)
    assert core.satisfies(PlanePartition(box, ((1, 1), (1, 1))), SC.TC)
    assert core.satisfies(PlanePartition(box, ((2, 1), (1, 0))), SC.SC)
    assert not core.satisfies(PlanePartition(box, ((2, 2), (0, 0))), SC.CYCLIC)


def test_satisfies_shape_errors():
    with pytest.raises(ShapeError):
        core.satisfies(PlanePartition(BoxDims(2, 3, 2), ((0,) * 3,) * 2), SC.TC)
    with pytest.raises(ShapeError):
        core.satisfies(PlanePartition(BoxDims(2, 2, 3), ((0, 0), (0, 0))), SC.STC)
    with pytest.raises(ShapeError):
        core.check_box_shape(BoxDims(3, 3, 3), SC.TSSC)


@pytest.mark.parametrize("cls,box", COMPLEMENTATION_BOXES + [
    (SC.SYMMETRIC, BoxDims(3, 3, 2)),
    (SC.CYCLIC, BoxDims(3, 3, 3)),
    (SC.TOTALLY_SYMMETRIC, BoxDims(3, 3, 3)),
])
def test_satisfies_matches_cellset_definitions(cls, box):
    for pp in enumerate_class(box, SC.PLAIN):
        assert core.satisfies(pp, cls) == cellset_satisfies(pp, cls)


def test_orbit_decomposition_examples():
    box = BoxDims(2, 2, 2)
    sc_orbits = core.orbit_decomposition(box, SC.SC).orbits
    assert len(sc_orbits) == 4
    for orbit in sc_orbits:
        assert len(orbit.half_a) == len(orbit.half_b) == 1

    cssc = core.orbit_decomposition(box, SC.CSSC).orbits
    diag = next(o for o in cssc if (1, 1, 1) in o.cells())
    assert {frozenset(h) for h in (diag.half_a, diag.half_b)} == {
        frozenset({(1, 1, 1)}),
        frozenset({(2, 2, 2)}),
    }

    tc = core.orbit_decomposition(box, SC.TC).orbits
    assert len(tc) == 4
    for orbit in tc:
        (cell,) = orbit.half_a
        i, j, k = cell
        assert orbit.half_b == frozenset({(3 - j, 3 - i, 3 - k)})


def test_orbit_decomposition_needs_complementation():
    with pytest.raises(UnsupportedClassError):
        core.orbit_decomposition(BoxDims(2, 2, 2), SC.CYCLIC)


@pytest.mark.parametrize("cls,box", COMPLEMENTATION_BOXES)
def test_orbit_invariants(cls, box):
    decomposition = core.orbit_decomposition(box, cls)
    seen = set()
    for orbit in decomposition.orbits:
        assert len(orbit.half_a) == len(orbit.half_b)
        assert not orbit.half_a & orbit.half_b
        assert not orbit.cells() & seen
        seen |= orbit.cells()
    assert len(seen) == box.volume()
    # every member contains exactly one full half of each orbit
    for pp in enumerate_class(box, cls):
        cells = cells_of(pp)
        for orbit in decomposition.orbits:
            in_a = orbit.half_a <= cells
            in_b = orbit.half_b <= cells
            assert in_a != in_b
            assert not (orbit.half_a & cells and orbit.half_b & cells)


def test_reference_partition_examples():
    assert core.reference_partition(BoxDims(2, 2, 2), SC.TC).heights == ((1, 1), (1, 1))
    assert core.reference_partition(BoxDims(2, 2, 2), SC.CSSC).heights == ((2, 1), (1, 0))
    assert core.reference_partition(BoxDims(2, 2, 4), SC.SC).heights == ((2, 2), (2, 2))


@pytest.mark.parametrize("cls,box", COMPLEMENTATION_BOXES)
def test_reference_partition_is_class_member(cls, box):
    if cls is SC.SC and box.c % 2:
        with pytest.raises(UnsupportedClassError):
            core.reference_partition(box, cls)
        return
    pp = core.reference_partition(box, cls)
    assert core.satisfies(pp, cls)


def test_sign_weight_examples():
    box = BoxDims(2, 2, 2)
    assert core.sign_weight(core.reference_partition(box, SC.TC), SC.TC) == 1
    assert core.sign_weight(PlanePartition(box, ((2, 1), (1, 0))), SC.TC) == -1
    all_one = PlanePartition(BoxDims(3, 3, 2), ((1, 1, 1),) * 3)
    assert core.sign_weight(all_one, SC.TC) == 1
    with pytest.raises(InvalidInputError):
        core.sign_weight(PlanePartition(box, ((2, 2), (2, 2))), SC.TC)


def test_region_count_examples():
    box = BoxDims(3, 3, 2)
    two_high = PlanePartition(box, ((2, 2, 1), (1, 1, 1), (1, 1, 0)))
    assert core.region_count(two_high, SC.TC) == 2
    assert core.region_count(core.reference_partition(box, SC.TC), SC.TC) == 0
    stc_box = BoxDims(2, 2, 2)
    assert core.region_count(PlanePartition(stc_box, ((2, 1), (1, 0))), SC.STC) == 1
    with pytest.raises(UnsupportedClassError):
        core.region_count(two_high, SC.SC)


def test_sign_equals_region_parity_tc():
    for a in range(1, 5):
        for b in range(0, 4):
            box = BoxDims(a, a, 2 * b)
            for pp in enumerate_class(box, SC.TC):
                expected = -1 if core.region_count(pp, SC.TC) % 2 else 1
                assert core.sign_weight(pp, SC.TC) == expected


@pytest.mark.parametrize(
    "cls,boxes",
    [
        (SC.STC, [BoxDims(a, a, c) for a in (2, 3, 4, 5, 6) for c in (2, 4, 6)]),
        (SC.CSTC, [BoxDims(s, s, s) for s in (2, 4, 6)]),
    ],
)
def test_sign_equals_region_parity_quarter_and_octant(cls, boxes):
    for box in boxes:
        for pp in enumerate_class(box, cls):
            expected = -1 if core.region_count(pp, cls) % 2 else 1
            assert core.sign_weight(pp, cls) == expected


@pytest.mark.parametrize("cls,box", COMPLEMENTATION_BOXES[:8])
def test_orbit_swap_flips_sign(cls, box):
    if cls is SC.SC and box.c % 2:
        return
    decomposition = core.orbit_decomposition(box, cls)
    for pp in enumerate_class(box, cls):
        cells = cells_of(pp)
        for orbit in decomposition.orbits:
            if orbit.half_a <= cells:
                swapped = (cells - orbit.half_a) | orbit.half_b
            else:
                swapped = (cells - orbit.half_b) | orbit.half_a
            candidate = cellset_to_pp(frozenset(swapped), box)
            if candidate is None or not core.satisfies(candidate, cls):
                continue
            assert core.sign_weight(candidate, cls) == -core.sign_weight(pp, cls)


def test_json_roundtrip():
    box = BoxDims(2, 2, 2)
    pp = PlanePartition.from_heights([[2, 1], [1, 0]], box)
    assert PlanePartition.from_json(pp.to_json(), box) == pp
    assert pp.to_json() == "[[2, 1], [1, 0]]"


def test_degenerate_box_has_single_empty_partition():
    for cls in (SC.TC, SC.SC, SC.STC):
        box = BoxDims(2, 2, 0) if cls is not SC.SC else BoxDims(2, 3, 0)
        members = list(enumerate_class(box, cls))
        assert len(members) == 1
        assert members[0].size() == 0
