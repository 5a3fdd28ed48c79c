from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boxcount.combinatorics import (
    CLASS_LABELS,
    KAPPA,
    KAPPA_TAU,
    RHO,
    SYMMETRY_CLASSES,
    TAU,
    BinarySeq,
    BoxDims,
    Partition,
    PlanePartition,
    apply_element,
    binary_seq,
    chain,
    complement_p,
    compose,
    format_partition,
    format_plane_partition,
    generate_group,
    get_class,
    heights_fixed_by,
    is_fixed,
    kappa,
    parse_partition,
    parse_plane_partition,
    partition_from_binary,
    pp_from_chain,
    rho,
    tau,
    transpose_p,
)
from boxcount.enumeration import enum_partitions, iter_heights
from boxcount.errors import DimensionMismatchError, MalformedInputError

# -- strategies ---------------------------------------------------------------


@st.composite
def partitions(draw, max_side: int = 6):
    a = draw(st.integers(0, max_side))
    b = draw(st.integers(0, max_side))
    cols = sorted(draw(st.lists(st.integers(0, a), min_size=b, max_size=b)), reverse=True)
    return Partition(tuple(cols), a)


@st.composite
def plane_partitions(draw, max_side: int = 4, square: bool = False, cube: bool = False):
    a = draw(st.integers(0, max_side))
    b = a if square or cube else draw(st.integers(0, max_side))
    c = a if cube else draw(st.integers(0, max_side))
    raw = draw(st.lists(st.lists(st.integers(0, c), min_size=b, max_size=b), min_size=a, max_size=a))
    h = [[0] * b for _ in range(a)]
    for i in range(a):
        for j in range(b):
            up = h[i - 1][j] if i else c
            left = h[i][j - 1] if j else c
            h[i][j] = min(raw[i][j], up, left)
    return PlanePartition(tuple(map(tuple, h)), (a, b, c))


SHAPE = Partition((3, 3, 2, 1), 4)

# -- partitions and binary words ----------------------------------------------


def test_binary_seq_example():
    assert binary_seq(SHAPE).bits == (1, 0, 0, 1, 0, 1, 0, 1)


def test_binary_word_of_extremes():
    assert Partition.empty(3, 2).binary_seq().bits == (1, 1, 1, 0, 0)
    assert Partition.full(3, 2).binary_seq().bits == (0, 0, 1, 1, 1)


def test_partition_from_binary_inverse_example():
    assert partition_from_binary((1, 0, 0, 1, 0, 1, 0, 1)) == SHAPE
    assert partition_from_binary((1, 1, 0, 0, 0)) == Partition.empty(2, 3)


def test_partition_from_binary_rejects_wrong_weight():
    with pytest.raises(MalformedInputError):
        partition_from_binary((1, 1, 0), a=1)
    with pytest.raises(MalformedInputError):
        BinarySeq((1, 0, 2), 1)


def test_complement_example():
    k = complement_p(SHAPE)
    assert k == Partition((3, 2, 1, 1), 4)
    assert k.binary_seq().bits == (1, 0, 1, 0, 1, 0, 0, 1)
    assert complement_p(Partition.empty(2, 3)) == Partition.full(2, 3)


def test_transpose_example():
    t = transpose_p(SHAPE)
    assert t == Partition((4, 3, 2, 0), 4)
    assert t.size == SHAPE.size == 9
    assert complement_p(t).binary_seq().bits == (0, 1, 1, 0, 1, 0, 1, 0)


def test_binary_identities_exhaustive():
    for n in range(11):
        for a in range(n + 1):
            for p in enum_partitions(a, n - a):
                word = p.binary_seq().bits
                assert complement_p(p).binary_seq().bits == word[::-1]
                assert complement_p(transpose_p(p)).binary_seq().bits == tuple(1 - x for x in word)
                assert partition_from_binary(word, a) == p


@given(partitions())
def test_partition_involutions(p):
    assert complement_p(complement_p(p)) == p
    assert transpose_p(transpose_p(p)) == p
    assert complement_p(p).size == p.a * p.b - p.size
    assert partition_from_binary(binary_seq(p)) == p


def test_partition_validation():
    with pytest.raises(MalformedInputError):
        Partition((1, 2), 2)
    with pytest.raises(MalformedInputError):
        Partition((3,), 2)


def test_wedge_indices_are_down_steps():
    assert SHAPE.wedge_indices() == (1, 4, 6, 8)


# -- plane partitions ---------------------------------------------------------

T4 = PlanePartition(((2, 1), (1, 0)), (2, 2, 2))


def test_chain_example():
    assert chain(T4) == (Partition((2, 1), 2), Partition((1, 0), 2))
    assert pp_from_chain(chain(T4), T4.box) == T4


def test_chain_of_extremes():
    box = BoxDims(2, 3, 2)
    assert chain(PlanePartition.empty(box)) == (Partition.empty(2, 3),) * 2
    assert chain(PlanePartition.full(box)) == (Partition.full(2, 3),) * 2


def test_chain_rejects_non_descending():
    with pytest.raises(MalformedInputError):
        pp_from_chain([Partition((1, 0), 2), Partition((2, 1), 2)], (2, 2, 2))


def test_plane_partition_validation():
    with pytest.raises(MalformedInputError):
        PlanePartition(((1, 2), (0, 0)), (2, 2, 2))
    with pytest.raises(MalformedInputError):
        PlanePartition(((3, 0), (0, 0)), (2, 2, 2))


def test_kappa_example():
    assert kappa(T4) == T4


def test_tau_needs_square_box():
    t = PlanePartition(((1, 0, 0),), (1, 3, 1))
    with pytest.raises(DimensionMismatchError):
        tau(t)
    with pytest.raises(DimensionMismatchError):
        rho(PlanePartition.empty((2, 2, 3)))


def test_codecs_round_trip_exhaustive():
    for box in product(range(4), repeat=3):
        for h in iter_heights(box):
            t = PlanePartition(h, box)
            assert pp_from_chain(chain(t), box) == t
            assert PlanePartition.from_cubes(t.cubes(), box) == t
            assert sum(p.size for p in chain(t)) == t.volume


def test_group_relations_on_cubes():
    for n in range(4):
        box = (n, n, n)
        for h in iter_heights(box):
            t = PlanePartition(h, box)
            assert rho(rho(rho(t))) == t
            assert tau(tau(t)) == t and kappa(kappa(t)) == t
            assert kappa(tau(t)) == tau(kappa(t))
            assert kappa(rho(t)) == rho(kappa(t))
            assert tau(rho(tau(t))) == rho(rho(t))
            assert t.volume + kappa(t).volume == n**3


def test_rho_matches_cube_rotation():
    for h in iter_heights((2, 2, 2)):
        t = PlanePartition(h, (2, 2, 2))
        rotated = frozenset((z, x, y) for x, y, z in t.cubes())
        assert rho(t).cubes() == rotated


@given(plane_partitions())
def test_kappa_volume_and_involution(t):
    a, b, c = t.box
    assert t.volume + kappa(t).volume == a * b * c
    assert kappa(kappa(t)) == t


@given(plane_partitions(square=True))
def test_tau_transposes_each_chain_level(t):
    assert chain(tau(t)) == tuple(p.transpose() for p in chain(t))


@given(plane_partitions())
def test_kappa_complements_and_reverses_chain(t):
    assert chain(kappa(t)) == tuple(p.complement() for p in reversed(chain(t)))


@given(plane_partitions(cube=True))
def test_fast_fixed_tests_agree_with_group_action(t):
    for g in (TAU, KAPPA, KAPPA_TAU, RHO):
        assert heights_fixed_by(t.heights, g, t.box) == (apply_element(t, g) == t)


# -- symmetry classes ---------------------------------------------------------


def test_ten_classes():
    assert CLASS_LABELS == ("P", "S", "CS", "TS", "SC", "TC", "SSC", "CSTC", "CSSC", "TSSC")
    assert len(generate_group([TAU, RHO, KAPPA])) == 12


def test_subgroup_orders():
    orders = {label: len(cls.subgroup) for label, cls in SYMMETRY_CLASSES.items()}
    assert orders == {"P": 1, "S": 2, "CS": 3, "TS": 6, "SC": 2, "TC": 2, "SSC": 4, "CSTC": 6, "CSSC": 6, "TSSC": 12}


def test_compose_order_of_application():
    t = PlanePartition(((2, 1, 0), (1, 0, 0), (0, 0, 0)), (3, 3, 3))
    assert apply_element(t, compose(KAPPA, TAU)) == kappa(tau(t))
    assert apply_element(t, compose(RHO, TAU)) == rho(tau(t))


def test_is_fixed_examples():
    t = PlanePartition(((2, 2), (0, 0)), (2, 2, 2))
    assert is_fixed(t, "SC") and not is_fixed(t, "S")
    # the half-full slab is fixed by every class without rotation; rotation
    # turns its floor into a wall
    slab = PlanePartition(((1, 1), (1, 1)), (2, 2, 2))
    fixed = {label for label in CLASS_LABELS if is_fixed(slab, label)}
    assert fixed == {"P", "S", "SC", "TC", "SSC"}
    assert rho(slab).cubes() == frozenset((0, x, y) for x in range(2) for y in range(2))
    assert all(is_fixed(T4, label) for label in CLASS_LABELS)
    assert is_fixed(PlanePartition.full((1, 2, 3)), "P")


def test_is_fixed_incompatible_box():
    with pytest.raises(DimensionMismatchError):
        is_fixed(PlanePartition.empty((1, 2, 1)), "TC")
    with pytest.raises(MalformedInputError):
        get_class("XYZ")


def test_zero_dimension_boxes():
    for box in [(0, 3, 2), (2, 0, 5), (3, 2, 0), (0, 0, 0)]:
        assert list(iter_heights(box)) == [PlanePartition.empty(box).heights]


# -- text formats --------------------------------------------------------------


def test_partition_text_round_trip():
    assert format_partition(SHAPE) == "3,3,2,1"
    assert parse_partition("3,3,2,1", a=4) == SHAPE


def test_plane_partition_text_round_trip():
    text = format_plane_partition(T4)
    assert text == "2,1\n1,0"
    assert parse_plane_partition(text, (2, 2, 2)) == T4
    assert parse_plane_partition("2 1\n1 0") == PlanePartition(((2, 1), (1, 0)), (2, 2, 2))


def test_plane_partition_text_rejects_garbage():
    with pytest.raises(MalformedInputError):
        parse_plane_partition("2,x\n1,0", (2, 2, 2))
