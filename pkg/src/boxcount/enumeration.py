"""Brute-force and transfer-matrix enumeration of plane partitions and symmetry classes."""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterator, Sequence

from .algebra import QPoly
from .combinatorics import (
    CLASS_LABELS,
    BoxDims,
    GroupElement,
    Heights,
    Partition,
    PlanePartition,
    SymmetryClass,
    get_class,
    heights_fixed_by,
)
from .errors import ResourceCapError, UnsupportedMethodError

__all__ = [
    "DEFAULT_CAP",
    "METHODS",
    "TransferMatrix",
    "ClassCountReport",
    "default_cap",
    "enum_partitions",
    "enumerate_self_conjugate",
    "enum_plane_partitions",
    "iter_heights",
    "count_plane_partitions",
    "count_q",
    "count_class",
    "count_class_q",
    "class_table",
    "monotonicity_violations",
]

DEFAULT_CAP = 10**7
METHODS = ("bruteforce", "transfer", "formula")


def default_cap() -> int:
    env = os.environ.get("BOXCOUNT_CAP")
    if not env:
        return DEFAULT_CAP
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"BOXCOUNT_CAP must be an integer, got {env!r}") from None


# ---------------------------------------------------------------------------
# partitions in a rectangle
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _weak_decreasing(length: int, top: int) -> tuple[tuple[int, ...], ...]:
    """All weakly decreasing tuples of ``length`` entries in ``[0, top]``, descending lex order."""
    if length == 0:
        return ((),)
    out = []
    for first in range(top, -1, -1):
        for rest in _weak_decreasing(length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def enum_partitions(a: int, b: int) -> Iterator[Partition]:
    """Every partition in the ``a x b`` rectangle once, descending lex on column heights."""
    for cols in _weak_decreasing(b, a):
        yield Partition(cols, a)


# ---------------------------------------------------------------------------
# plane partitions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _row_graph(b: int, c: int) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    rows = _weak_decreasing(b, c)
    below = tuple(
        tuple(k for k, s in enumerate(rows) if all(x <= y for x, y in zip(s, r))) for r in rows
    )
    return rows, below


def count_plane_partitions(box: BoxDims | Sequence[int]) -> int:
    """Integer count by dynamic programming over rows (no polynomials)."""
    a, b, c = BoxDims.coerce(box)
    if a == 0:
        return 1
    rows, below = _row_graph(b, c)
    v = [1] * len(rows)
    for _ in range(a - 1):
        nv = [0] * len(rows)
        for r, n in enumerate(v):
            for s in below[r]:
                nv[s] += n
        v = nv
    return sum(v)


def _guard(box: BoxDims, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    a, b, c = box
    if a and comb(b + c, b) > cap:
        raise ResourceCapError(f"{a}x{b}x{c} box has more than {cap} plane partitions")
    n = count_plane_partitions(box)
    if n > cap:
        raise ResourceCapError(f"{a}x{b}x{c} box has {n} plane partitions, cap is {cap}")


def iter_heights(box: BoxDims | Sequence[int], cap: int | None = None, first_rows: Sequence[int] | None = None) -> Iterator[Heights]:
    """Raw height matrices in row-major descending lex order.

    ``first_rows`` restricts the first row to the given row indices (used to
    split work across processes).
    """
    box = BoxDims.coerce(box)
    _guard(box, cap)
    a, b, c = box
    if a == 0:
        yield ()
        return
    rows, below = _row_graph(b, c)
    current: list[tuple[int, ...]] = [()] * a

    def rec(i: int, prev: int) -> Iterator[Heights]:
        for k in below[prev]:
            current[i] = rows[k]
            if i + 1 == a:
                yield tuple(current)
            else:
                yield from rec(i + 1, k)

    starts = range(len(rows)) if first_rows is None else first_rows
    for k in starts:
        current[0] = rows[k]
        if a == 1:
            yield (rows[k],)
        else:
            yield from rec(1, k)


def enum_plane_partitions(box: BoxDims | Sequence[int], cap: int | None = None) -> Iterator[PlanePartition]:
    box = BoxDims.coerce(box)
    for h in iter_heights(box, cap):
        yield PlanePartition._trusted(h, box)


def _census_worker(args: tuple) -> Counter:
    box, gens, cap, first_rows = args
    census: Counter = Counter()
    for h in iter_heights(box, cap, first_rows):
        if all(heights_fixed_by(h, g, box) for g in gens):
            census[sum(map(sum, h))] += 1
    return census


def _bruteforce_census(box: BoxDims, gens: Sequence[GroupElement], cap: int | None, jobs: int = 1) -> Counter:
    if jobs <= 1 or box.a == 0:
        return _census_worker((box, tuple(gens), cap, None))
    _guard(box, cap)
    nrows = len(_row_graph(box.b, box.c)[0])
    chunks = [list(range(k, nrows, jobs)) for k in range(jobs)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_census_worker, [(box, tuple(gens), cap, ch) for ch in chunks]):
            total.update(part)
    return total


# ---------------------------------------------------------------------------
# transfer matrices
# ---------------------------------------------------------------------------


class TransferMatrix:
    """Containment matrix on a set of rectangle partitions.

    ``entry(i, j) = q**|P_j|`` when ``P_i`` contains ``P_j``, else 0.  Chains
    are summed with vector-matrix products, never matrix powers.
    """

    def __init__(self, index: Sequence[Partition], weight: Callable[[Partition], int] | None = None) -> None:
        self.index = tuple(index)
        self._weight = weight or (lambda p: p.size)
        self.weights = tuple(self._weight(p) for p in self.index)
        self.below = tuple(
            tuple(j for j, r in enumerate(self.index) if p.contains(r)) for p in self.index
        )

    @classmethod
    def for_rectangle(cls, a: int, b: int) -> TransferMatrix:
        return cls(list(enum_partitions(a, b)))

    def __len__(self) -> int:
        return len(self.index)

    def entry(self, i: int, j: int) -> QPoly:
        return QPoly.monomial(self.weights[j]) if j in self.below[i] else QPoly()

    def start_vector(self) -> list[QPoly]:
        return [QPoly.monomial(w) for w in self.weights]

    def step(self, v: Sequence[QPoly]) -> list[QPoly]:
        """``v -> v M``."""
        acc: list[QPoly] = [QPoly() for _ in self.index]
        for i, x in enumerate(v):
            if not x:
                continue
            for j in self.below[i]:
                acc[j] = acc[j] + x
        return [y.shift(w) if y else y for y, w in zip(acc, self.weights)]

    def chain_vector(self, length: int) -> list[QPoly]:
        """Entry ``j``: weighted sum over chains of ``length`` terms ending at ``index[j]``."""
        v = self.start_vector()
        for _ in range(length - 1):
            v = self.step(v)
        return v

    def chain_sum(self, length: int) -> QPoly:
        if length == 0:
            return QPoly.const(1)
        total = QPoly()
        for x in self.chain_vector(length):
            total = total + x
        return total


def _transfer_all(box: BoxDims) -> QPoly:
    a, b, c = box
    return TransferMatrix.for_rectangle(a, b).chain_sum(c)


def _transfer_symmetric(box: BoxDims) -> QPoly:
    a, b, c = box
    return TransferMatrix(enumerate_self_conjugate(a)).chain_sum(c)


def enumerate_self_conjugate(a: int) -> list[Partition]:
    return [p for p in enum_partitions(a, a) if p.transpose() == p]


def _transfer_half_chain(box: BoxDims, phi: Callable[[Partition], Partition]) -> QPoly:
    """Chains with ``P_{c+1-k} = phi(P_k)`` for an order-reversing involution ``phi``."""
    a, b, c = box
    if c == 0:
        return QPoly.const(1)
    parts = list(enum_partitions(a, b))
    images = [phi(p) for p in parts]
    m = c // 2
    if c % 2:
        fixed = [j for j, p in enumerate(parts) if images[j] == p]
        if m == 0:
            total = QPoly()
            for j in fixed:
                total = total + QPoly.monomial(parts[j].size)
            return total
        tm = TransferMatrix(parts, weight=lambda p: p.size + phi(p).size)
        v = tm.chain_vector(m)
        total = QPoly()
        for j in fixed:
            acc = QPoly()
            for i, x in enumerate(v):
                if x and parts[i].contains(parts[j]):
                    acc = acc + x
            total = total + acc.shift(parts[j].size)
        return total
    tm = TransferMatrix(parts, weight=lambda p: p.size + phi(p).size)
    v = tm.chain_vector(m)
    total = QPoly()
    for j, x in enumerate(v):
        if x and parts[j].contains(images[j]):
            total = total + x
    return total


def _kappa_tau_p(p: Partition) -> Partition:
    return p.transpose().complement()


_TRANSFER = {
    "P": _transfer_all,
    "S": _transfer_symmetric,
    "SC": lambda box: _transfer_half_chain(box, Partition.complement),
    "TC": lambda box: _transfer_half_chain(box, _kappa_tau_p),
}


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassCountReport:
    box: BoxDims
    label: str
    method: str
    count: int | None
    qpoly: QPoly | None = None
    generators: tuple[str, ...] = ()
    subgroup_order: int = 1
    compatible: bool = True

    def __post_init__(self) -> None:
        if self.count is not None and self.qpoly is not None and self.qpoly(1) != self.count:
            raise AssertionError(f"report count {self.count} disagrees with q-polynomial at 1")

    def to_dict(self) -> dict:
        d = {
            "box": list(self.box),
            "class": self.label,
            "method": self.method,
            "count": None if self.count is None else str(self.count),
        }
        if not self.compatible:
            d["compatible"] = False
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def count_q(box: BoxDims | Sequence[int], method: str = "transfer", cap: int | None = None, jobs: int = 1) -> QPoly:
    """``sum over T of q**|T|`` for all plane partitions in the box."""
    return count_class_q(box, "P", method, cap=cap, jobs=jobs)


def count_class_q(
    box: BoxDims | Sequence[int],
    cls: SymmetryClass | str = "P",
    method: str = "bruteforce",
    cap: int | None = None,
    jobs: int = 1,
) -> QPoly:
    box = BoxDims.coerce(box)
    cls = get_class(cls)
    cls.check_compatible(box)
    if method == "bruteforce":
        return QPoly.from_counts(_bruteforce_census(box, cls.generators, cap, jobs))
    if method == "transfer":
        if cls.label not in _TRANSFER:
            raise UnsupportedMethodError(f"no transfer-matrix method for class {cls.label}")
        a, b, c = box
        if comb(a + b, a) > (default_cap() if cap is None else cap):
            raise ResourceCapError(f"transfer matrix of size {comb(a + b, a)} exceeds the cap")
        return _TRANSFER[cls.label](box)
    if method == "formula":
        from . import formulas

        return formulas.class_polynomial(box, cls.label)
    raise UnsupportedMethodError(f"unknown method {method!r}; expected one of {METHODS}")


def count_class(
    box: BoxDims | Sequence[int],
    cls: SymmetryClass | str = "P",
    method: str = "bruteforce",
    cap: int | None = None,
    jobs: int = 1,
) -> ClassCountReport:
    box = BoxDims.coerce(box)
    cls = get_class(cls)
    poly = count_class_q(box, cls, method, cap=cap, jobs=jobs)
    return ClassCountReport(
        box=box,
        label=cls.label,
        method=method,
        count=int(poly(1)),
        qpoly=poly,
        generators=cls.generator_names,
        subgroup_order=len(cls.subgroup),
    )


def class_table(box: BoxDims | Sequence[int], method: str = "bruteforce", cap: int | None = None) -> list[ClassCountReport]:
    """One report per symmetry class; incompatible classes carry ``compatible=False``."""
    box = BoxDims.coerce(box)
    out = []
    for label in CLASS_LABELS:
        cls = get_class(label)
        if cls.compatible(box):
            out.append(count_class(box, cls, method, cap=cap))
        else:
            out.append(
                ClassCountReport(
                    box=box,
                    label=label,
                    method=method,
                    count=None,
                    generators=cls.generator_names,
                    subgroup_order=len(cls.subgroup),
                    compatible=False,
                )
            )
    return out


def monotonicity_violations(reports: Sequence[ClassCountReport]) -> list[tuple[str, str]]:
    """Pairs ``(small, large)`` where the larger subgroup has the larger fixed-point count."""
    bad = []
    live = [r for r in reports if r.compatible]
    for r1 in live:
        for r2 in live:
            if r1 is r2:
                continue
            if get_class(r2.label).contains_class(get_class(r1.label)) and r2.count > r1.count:
                bad.append((r1.label, r2.label))
    return bad

