"""Partitions in a rectangle, plane partitions in a box, and their symmetries.

Conventions
-----------
A partition in an ``a x b`` rectangle is stored as its ``b`` column heights,
weakly decreasing, each in ``[0, a]``.  The diagram sits in the lower-left
corner of the rectangle.  Its boundary, walked from the upper-left to the
lower-right corner, gives the binary word: ``1`` for a down step, ``0`` for
a right step.  The empty partition is ``1...10...0``.

A plane partition in an ``a x b x c`` box is an ``a x b`` matrix of heights in
``[0, c]``, weakly decreasing along rows and columns.  Its level sets
``P_k = {(i, j) : h[i][j] >= k}`` for ``k = 1..c`` form a descending chain of
partitions; ``P_k`` has column heights ``#{i : h[i][j] >= k}``.

Group elements acting on boxes are pairs ``(perm, flip)``: ``perm`` permutes
the three coordinates (new coordinate ``t`` is old coordinate ``perm[t]``)
and ``flip`` is the complementation bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatchError, MalformedInputError

Heights = tuple[tuple[int, ...], ...]

__all__ = [
    "BoxDims",
    "Partition",
    "BinarySeq",
    "PlanePartition",
    "SymmetryClass",
    "SYMMETRY_CLASSES",
    "CLASS_LABELS",
    "TAU",
    "RHO",
    "KAPPA",
    "KAPPA_TAU",
    "IDENTITY",
    "binary_seq",
    "partition_from_binary",
    "complement_p",
    "transpose_p",
    "chain",
    "pp_from_chain",
    "tau",
    "kappa",
    "rho",
    "apply_element",
    "is_fixed",
    "generate_group",
    "compose",
    "parse_partition",
    "format_partition",
    "parse_plane_partition",
    "format_plane_partition",
]


@dataclass(frozen=True)
class BoxDims:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise MalformedInputError(f"box side {name}={v!r} must be a non-negative integer")

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    @property
    def volume(self) -> int:
        return self.a * self.b * self.c

    @classmethod
    def coerce(cls, box: BoxDims | Sequence[int]) -> BoxDims:
        if isinstance(box, BoxDims):
            return box
        a, b, c = box
        return cls(a, b, c)


# ---------------------------------------------------------------------------
# partitions in a rectangle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Column heights of a Young diagram in an ``a x b`` rectangle."""

    cols: tuple[int, ...]
    a: int

    def __post_init__(self) -> None:
        cols = tuple(self.cols)
        object.__setattr__(self, "cols", cols)
        if self.a < 0:
            raise MalformedInputError(f"rectangle height {self.a} is negative")
        prev = self.a
        for h in cols:
            if not isinstance(h, int) or h < 0 or h > prev:
                raise MalformedInputError(
                    f"column heights {cols} are not weakly decreasing within [0, {self.a}]"
                )
            prev = h

    @property
    def b(self) -> int:
        return len(self.cols)

    @property
    def rect(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def size(self) -> int:
        return sum(self.cols)

    def contains(self, other: Partition) -> bool:
        """Set-theoretic inclusion ``other <= self``."""
        return all(x >= y for x, y in zip(self.cols, other.cols))

    @classmethod
    def empty(cls, a: int, b: int) -> Partition:
        return cls((0,) * b, a)

    @classmethod
    def full(cls, a: int, b: int) -> Partition:
        return cls((a,) * b, a)

    def binary_seq(self) -> BinarySeq:
        bits: list[int] = []
        level = self.a
        for h in self.cols:
            bits.extend([1] * (level - h))
            bits.append(0)
            level = h
        bits.extend([1] * level)
        return BinarySeq(tuple(bits), self.a)

    def complement(self) -> Partition:
        return Partition(tuple(self.a - h for h in reversed(self.cols)), self.a)

    def transpose(self) -> Partition:
        """Conjugate partition, living in the ``b x a`` rectangle."""
        conj = tuple(sum(1 for h in self.cols if h > i) for i in range(self.a))
        return Partition(conj, self.b)

    def is_self_conjugate(self) -> bool:
        return self.a == self.b and self.transpose() == self

    def wedge_indices(self) -> tuple[int, ...]:
        """1-based positions of the down steps, ascending."""
        return _down_steps(self.cols, self.a)

    def __str__(self) -> str:
        return format_partition(self)


@lru_cache(maxsize=None)
def _down_steps(cols: tuple[int, ...], a: int) -> tuple[int, ...]:
    bits = Partition(cols, a).binary_seq().bits
    return tuple(n for n, bit in enumerate(bits, start=1) if bit)


@dataclass(frozen=True)
class BinarySeq:
    """Down/right boundary word of a partition; exactly ``a`` ones."""

    bits: tuple[int, ...]
    a: int

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if any(x not in (0, 1) for x in bits):
            raise MalformedInputError(f"binary word {bits} has entries outside {{0, 1}}")
        if sum(bits) != self.a:
            raise MalformedInputError(f"binary word {bits} has {sum(bits)} ones, expected {self.a}")

    @property
    def b(self) -> int:
        return len(self.bits) - self.a

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def to_partition(self) -> Partition:
        cols = []
        level = self.a
        for bit in self.bits:
            if bit:
                level -= 1
            else:
                cols.append(level)
        return Partition(tuple(cols), self.a)


def binary_seq(p: Partition) -> BinarySeq:
    return p.binary_seq()


def partition_from_binary(s: BinarySeq | Sequence[int], a: int | None = None) -> Partition:
    """Inverse of :func:`binary_seq`.  A bare sequence needs ``a`` (defaults to its weight)."""
    if not isinstance(s, BinarySeq):
        bits = tuple(s)
        s = BinarySeq(bits, sum(bits) if a is None else a)
    elif a is not None and a != s.a:
        raise MalformedInputError(f"binary word has {s.a} ones, expected {a}")
    return s.to_partition()


def complement_p(p: Partition) -> Partition:
    return p.complement()


def transpose_p(p: Partition) -> Partition:
    return p.transpose()


# ---------------------------------------------------------------------------
# plane partitions
# ---------------------------------------------------------------------------


def _check_heights(h: Heights, box: BoxDims) -> None:
    if len(h) != box.a or any(len(row) != box.b for row in h):
        raise MalformedInputError(f"height matrix shape does not match {box.a}x{box.b}")
    prev = (box.c,) * box.b
    for row in h:
        left = box.c
        for x, above in zip(row, prev):
            if not isinstance(x, int) or x < 0 or x > left or x > above:
                raise MalformedInputError(
                    f"heights {h} are not a plane partition in a {box.a}x{box.b}x{box.c} box"
                )
            left = x
        prev = row


def _kappa_h(h: Heights, b: int, c: int) -> Heights:
    return tuple(tuple(c - x for x in reversed(row)) for row in reversed(h))


def _tau_h(h: Heights, b: int) -> Heights:
    if not h:
        return ((),) * b
    return tuple(zip(*h))


def _rho_h(h: Heights, n: int) -> Heights:
    # cube (x, y, z) -> (z, x, y); new height at (i, j) is the length of row j at level i + 1
    return tuple(tuple(sum(1 for v in h[j] if v > i) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class PlanePartition:
    heights: Heights
    box: BoxDims

    def __post_init__(self) -> None:
        box = BoxDims.coerce(self.box)
        h = tuple(tuple(row) for row in self.heights)
        object.__setattr__(self, "box", box)
        object.__setattr__(self, "heights", h)
        _check_heights(h, box)

    @classmethod
    def _trusted(cls, heights: Heights, box: BoxDims) -> PlanePartition:
        # skip validation for heights produced by the enumerators
        obj = object.__new__(cls)
        object.__setattr__(obj, "heights", heights)
        object.__setattr__(obj, "box", box)
        return obj

    @classmethod
    def empty(cls, box: BoxDims | Sequence[int]) -> PlanePartition:
        box = BoxDims.coerce(box)
        return cls(((0,) * box.b,) * box.a, box)

    @classmethod
    def full(cls, box: BoxDims | Sequence[int]) -> PlanePartition:
        box = BoxDims.coerce(box)
        return cls(((box.c,) * box.b,) * box.a, box)

    @property
    def volume(self) -> int:
        return sum(map(sum, self.heights))

    # -- views ---------------------------------------------------------------

    def chain(self) -> tuple[Partition, ...]:
        a, b, c = self.box
        out = []
        for k in range(1, c + 1):
            cols = tuple(sum(1 for i in range(a) if self.heights[i][j] >= k) for j in range(b))
            out.append(Partition(cols, a))
        return tuple(out)

    @classmethod
    def from_chain(cls, parts: Sequence[Partition], box: BoxDims | Sequence[int]) -> PlanePartition:
        box = BoxDims.coerce(box)
        if len(parts) != box.c:
            raise MalformedInputError(f"chain has {len(parts)} terms, box height is {box.c}")
        for p in parts:
            if p.rect != (box.a, box.b):
                raise MalformedInputError(f"chain term {p} is not in a {box.a}x{box.b} rectangle")
        for upper, lower in zip(parts, parts[1:]):
            if not upper.contains(lower):
                raise MalformedInputError(f"chain is not descending at {upper} >= {lower}")
        h = tuple(
            tuple(sum(1 for p in parts if p.cols[j] > i) for j in range(box.b)) for i in range(box.a)
        )
        return cls(h, box)

    def cubes(self) -> frozenset[tuple[int, int, int]]:
        """0-based cells ``(i, j, k)`` with ``k < h[i][j]``."""
        return frozenset(
            (i, j, k) for i, row in enumerate(self.heights) for j, x in enumerate(row) for k in range(x)
        )

    @classmethod
    def from_cubes(cls, cubes: Iterable[tuple[int, int, int]], box: BoxDims | Sequence[int]) -> PlanePartition:
        box = BoxDims.coerce(box)
        cubes = set(cubes)
        h = [[0] * box.b for _ in range(box.a)]
        for i, j, k in cubes:
            if not (0 <= i < box.a and 0 <= j < box.b and 0 <= k < box.c):
                raise MalformedInputError(f"cube {(i, j, k)} lies outside the box")
            h[i][j] += 1
        heights = tuple(map(tuple, h))
        pp = cls(heights, box)
        if pp.cubes() != cubes:
            raise MalformedInputError("cube set is not an order ideal of the box")
        return pp

    # -- symmetries ----------------------------------------------------------

    def tau(self) -> PlanePartition:
        a, b, c = self.box
        if a != b:
            raise DimensionMismatchError(f"transposition needs a = b, got {a}x{b}x{c}")
        return PlanePartition._trusted(_tau_h(self.heights, b), self.box)

    def kappa(self) -> PlanePartition:
        a, b, c = self.box
        return PlanePartition._trusted(_kappa_h(self.heights, b, c), self.box)

    def rho(self) -> PlanePartition:
        a, b, c = self.box
        if not a == b == c:
            raise DimensionMismatchError(f"rotation needs a = b = c, got {a}x{b}x{c}")
        return PlanePartition._trusted(_rho_h(self.heights, a), self.box)

    def __str__(self) -> str:
        return format_plane_partition(self)


def chain(t: PlanePartition) -> tuple[Partition, ...]:
    return t.chain()


def pp_from_chain(parts: Sequence[Partition], box: BoxDims | Sequence[int]) -> PlanePartition:
    return PlanePartition.from_chain(parts, box)


def tau(t: PlanePartition) -> PlanePartition:
    return t.tau()


def kappa(t: PlanePartition) -> PlanePartition:
    return t.kappa()


def rho(t: PlanePartition) -> PlanePartition:
    return t.rho()


# ---------------------------------------------------------------------------
# the order-12 group and the ten symmetry classes
# ---------------------------------------------------------------------------

GroupElement = tuple[tuple[int, int, int], int]

IDENTITY: GroupElement = ((0, 1, 2), 0)
TAU: GroupElement = ((1, 0, 2), 0)
RHO: GroupElement = ((2, 0, 1), 0)
KAPPA: GroupElement = ((0, 1, 2), 1)
KAPPA_TAU: GroupElement = ((1, 0, 2), 1)

_GENERATOR_NAMES = {TAU: "tau", RHO: "rho", KAPPA: "kappa", KAPPA_TAU: "kappa_tau"}


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """``g o h`` (apply ``h`` first)."""
    pg, fg = g
    ph, fh = h
    return (tuple(ph[pg[t]] for t in range(3)), fg ^ fh)


def generate_group(gens: Iterable[GroupElement]) -> frozenset[GroupElement]:
    elems = {IDENTITY}
    frontier = [IDENTITY]
    gens = tuple(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(g, x)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def apply_element(t: PlanePartition, g: GroupElement) -> PlanePartition:
    """Act by an arbitrary group element through the cube-set view."""
    perm, flip = g
    dims = tuple(t.box)
    new_dims = tuple(dims[perm[s]] for s in range(3))
    if new_dims != dims:
        raise DimensionMismatchError(f"group element {g} does not preserve the box {dims}")
    cubes = {tuple(x[perm[s]] for s in range(3)) for x in t.cubes()}
    if flip:
        every = {(i, j, k) for i in range(dims[0]) for j in range(dims[1]) for k in range(dims[2])}
        cubes = {(dims[0] - 1 - i, dims[1] - 1 - j, dims[2] - 1 - k) for i, j, k in every - cubes}
    return PlanePartition.from_cubes(cubes, t.box)


@dataclass(frozen=True)
class SymmetryClass:
    label: str
    generators: tuple[GroupElement, ...]

    @property
    def subgroup(self) -> frozenset[GroupElement]:
        return generate_group(self.generators)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(_GENERATOR_NAMES[g] for g in self.generators)

    def compatible(self, box: BoxDims | Sequence[int]) -> bool:
        a, b, c = box
        if any(g in (TAU, KAPPA_TAU) for g in self.generators) and a != b:
            return False
        if RHO in self.generators and not a == b == c:
            return False
        return True

    def check_compatible(self, box: BoxDims | Sequence[int]) -> None:
        if not self.compatible(box):
            a, b, c = box
            raise DimensionMismatchError(f"class {self.label} is not defined on a {a}x{b}x{c} box")

    def contains_class(self, other: SymmetryClass) -> bool:
        """True when ``other``'s subgroup is contained in ours."""
        return other.subgroup <= self.subgroup


SYMMETRY_CLASSES: dict[str, SymmetryClass] = {
    s.label: s
    for s in (
        SymmetryClass("P", ()),
        SymmetryClass("S", (TAU,)),
        SymmetryClass("CS", (RHO,)),
        SymmetryClass("TS", (TAU, RHO)),
        SymmetryClass("SC", (KAPPA,)),
        SymmetryClass("TC", (KAPPA_TAU,)),
        SymmetryClass("SSC", (TAU, KAPPA)),
        SymmetryClass("CSTC", (RHO, KAPPA_TAU)),
        SymmetryClass("CSSC", (RHO, KAPPA)),
        SymmetryClass("TSSC", (TAU, RHO, KAPPA)),
    )
}
CLASS_LABELS = tuple(SYMMETRY_CLASSES)


def get_class(cls: SymmetryClass | str) -> SymmetryClass:
    if isinstance(cls, SymmetryClass):
        return cls
    try:
        return SYMMETRY_CLASSES[cls.upper()]
    except KeyError:
        raise MalformedInputError(f"unknown symmetry class {cls!r}; expected one of {CLASS_LABELS}") from None


def heights_fixed_by(h: Heights, g: GroupElement, box: BoxDims) -> bool:
    """Fast fixed-point test on a raw height matrix (box assumed compatible)."""
    a, b, c = box
    if g == KAPPA:
        return all(h[i][j] + h[a - 1 - i][b - 1 - j] == c for i in range(a) for j in range(b))
    if g == TAU:
        return all(h[i][j] == h[j][i] for i in range(a) for j in range(i))
    if g == KAPPA_TAU:
        return all(h[i][j] + h[a - 1 - j][a - 1 - i] == c for i in range(a) for j in range(a))
    if g == RHO:
        return _rho_h(h, a) == h
    if g == IDENTITY:
        return True
    return apply_element(PlanePartition._trusted(h, box), g).heights == h


def is_fixed(t: PlanePartition, cls: SymmetryClass | str) -> bool:
    cls = get_class(cls)
    cls.check_compatible(t.box)
    return all(heights_fixed_by(t.heights, g, t.box) for g in cls.generators)


# ---------------------------------------------------------------------------
# text serialisation
# ---------------------------------------------------------------------------

_SPLIT = re.compile(r"[,\s]+")


def _ints(text: str) -> list[int]:
    fields = [f for f in _SPLIT.split(text.strip()) if f]
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise MalformedInputError(f"expected integers, got {text!r}") from None


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p.cols))


def parse_partition(text: str, a: int | None = None) -> Partition:
    cols = _ints(text)
    return Partition(tuple(cols), max(cols, default=0) if a is None else a)


def format_plane_partition(t: PlanePartition) -> str:
    return "\n".join(",".join(map(str, row)) for row in t.heights)


def parse_plane_partition(text: str, box: BoxDims | Sequence[int] | None = None) -> PlanePartition:
    rows = [_ints(line) for line in text.strip().splitlines() if line.strip()]
    if box is None:
        b = len(rows[0]) if rows else 0
        c = max((max(r, default=0) for r in rows), default=0)
        box = BoxDims(len(rows), b, c)
    box = BoxDims.coerce(box)
    # a box with b = 0 has a rows of empty lists, which text cannot express
    if box.b == 0 and not rows:
        rows = [[] for _ in range(box.a)]
    return PlanePartition(tuple(map(tuple, rows)), box)
