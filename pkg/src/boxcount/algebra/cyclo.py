"""Exact arithmetic in Q(zeta_8) = Q(i, sqrt 2) and dense matrices over it.

An element is ``r0 + r1*z + r2*z**2 + r3*z**3`` with ``z**4 = -1``.
Coefficients stay Python ``int`` until a division forces ``Fraction``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from ..errors import IntegrityError

__all__ = ["Cyclo8", "CycloMatrix", "ZETA", "I", "SQRT2", "ONE", "ZERO", "laplace_det"]

Scalar = int | Fraction


def _div(x: Scalar, d: Scalar) -> Scalar:
    if isinstance(x, int) and isinstance(d, int):
        return x // d if x % d == 0 else Fraction(x, d)
    return Fraction(x) / d


class Cyclo8:
    __slots__ = ("c",)

    def __init__(self, r0: Scalar = 0, r1: Scalar = 0, r2: Scalar = 0, r3: Scalar = 0) -> None:
        self.c = tuple(_norm(x) for x in (r0, r1, r2, r3))

    @classmethod
    def _raw(cls, c: tuple) -> Cyclo8:
        obj = object.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def coerce(cls, x: Any) -> Cyclo8:
        if isinstance(x, Cyclo8):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {x!r} to Cyclo8")

    @classmethod
    def zeta_power(cls, k: int) -> Cyclo8:
        k %= 8
        sign = 1 if k < 4 else -1
        c = [0, 0, 0, 0]
        c[k % 4] = sign
        return cls._raw(tuple(c))

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: Any) -> Cyclo8:
        if isinstance(other, Cyclo8):
            x, y = self.c, other.c
            return Cyclo8._raw((x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]))
        if isinstance(other, (int, Fraction)):
            x = self.c
            return Cyclo8._raw((x[0] + other, x[1], x[2], x[3]))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Cyclo8:
        return Cyclo8._raw(tuple(-x for x in self.c))

    def __sub__(self, other: Any) -> Cyclo8:
        if isinstance(other, (Cyclo8, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> Cyclo8:
        return (-self) + other

    def __mul__(self, other: Any) -> Cyclo8:
        if isinstance(other, Cyclo8):
            a0, a1, a2, a3 = self.c
            b0, b1, b2, b3 = other.c
            return Cyclo8._raw(
                (
                    a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
                    a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                    a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
                    a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
                )
            )
        if isinstance(other, (int, Fraction)):
            return Cyclo8._raw(tuple(x * other for x in self.c))
        return NotImplemented

    __rmul__ = __mul__

    def galois(self, k: int) -> Cyclo8:
        """The automorphism ``z -> z**k`` for odd ``k``."""
        if k % 2 == 0:
            raise ValueError("z -> z^k is an automorphism only for odd k")
        out = Cyclo8()
        for j, x in enumerate(self.c):
            if x:
                out = out + Cyclo8.zeta_power(j * k) * x
        return out

    def conj(self) -> Cyclo8:
        """Complex conjugation ``z -> z**-1``."""
        r0, r1, r2, r3 = self.c
        # z^-1 = -z^3, z^-2 = -z^2, z^-3 = -z
        return Cyclo8._raw((r0, -r3, -r2, -r1))

    def norm(self) -> Fraction | int:
        """Field norm down to Q: the product of all four conjugates."""
        n = self * self.galois(3) * self.galois(5) * self.galois(7)
        if any(n.c[1:]):
            raise IntegrityError(f"norm of {self} is not rational")
        return n.c[0]

    def inv(self) -> Cyclo8:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        others = self.galois(3) * self.galois(5) * self.galois(7)
        n = (self * others).c[0]
        return Cyclo8._raw(tuple(_norm(_div(x, n)) for x in others.c))

    def __truediv__(self, other: Any) -> Cyclo8:
        if isinstance(other, (int, Fraction)):
            return Cyclo8._raw(tuple(_norm(_div(x, other)) for x in self.c))
        return self * Cyclo8.coerce(other).inv()

    def __rtruediv__(self, other: Any) -> Cyclo8:
        return Cyclo8.coerce(other) * self.inv()

    def __pow__(self, n: int) -> Cyclo8:
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -----------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cyclo8):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __complex__(self) -> complex:
        z = cmath.exp(1j * cmath.pi / 4)
        return sum(float(x) * z**k for k, x in enumerate(self.c))

    def __repr__(self) -> str:
        return "Cyclo8(" + ", ".join(str(x) for x in self.c) + ")"

    def __str__(self) -> str:
        names = ("", "z", "z^2", "z^3")
        parts = [f"{x}{'*' if k else ''}{names[k]}" for k, x in enumerate(self.c) if x]
        return " + ".join(parts) if parts else "0"


def _norm(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


ZERO = Cyclo8()
ONE = Cyclo8(1)
ZETA = Cyclo8(0, 1)
I = Cyclo8(0, 0, 1)
SQRT2 = Cyclo8(0, 1, 0, -1)


def laplace_det(rows: Sequence[Sequence[Any]], zero: Any = 0, one: Any = 1) -> Any:
    """Determinant by cofactor expansion, skipping zero entries.

    Division-free, so it works over any commutative ring (used for wedge
    minors, where matrices are small and usually sparse).
    """
    n = len(rows)
    if n == 0:
        return one

    def rec(r: int, cols: tuple[int, ...]) -> Any:
        if r == n:
            return one
        total = zero
        for pos, j in enumerate(cols):
            x = rows[r][j]
            if not x:
                continue
            sub = rec(r + 1, cols[:pos] + cols[pos + 1 :])
            if not sub:
                continue
            term = x * sub
            total = total - term if pos % 2 else total + term
        return total

    return rec(0, tuple(range(n)))


class CycloMatrix:
    """Dense square (or rectangular) matrix with :class:`Cyclo8` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Any]]) -> None:
        self.rows = tuple(tuple(Cyclo8.coerce(x) for x in row) for row in rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> CycloMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> CycloMatrix:
        return cls([[ZERO] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[Any]) -> CycloMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], Any], m: int | None = None) -> CycloMatrix:
        return cls([[f(i, j) for j in range(n if m is None else m)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Cyclo8:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "CycloMatrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"

    def first_difference(self, other: CycloMatrix) -> tuple[int, int, Cyclo8, Cyclo8] | None:
        """``(i, j, mine, theirs)`` for the first differing entry, or ``None``."""
        if self.shape != other.shape:
            return (-1, -1, ZERO, ZERO)
        for i, (r, s) in enumerate(zip(self.rows, other.rows)):
            for j, (x, y) in enumerate(zip(r, s)):
                if x != y:
                    return (i, j, x, y)
        return None

    def __add__(self, other: CycloMatrix) -> CycloMatrix:
        return CycloMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: CycloMatrix) -> CycloMatrix:
        return CycloMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> CycloMatrix:
        return CycloMatrix([[-x for x in r] for r in self.rows])

    def scale(self, k: Any) -> CycloMatrix:
        k = Cyclo8.coerce(k)
        return CycloMatrix([[k * x for x in r] for r in self.rows])

    def __mul__(self, k: Any) -> CycloMatrix:
        if isinstance(k, CycloMatrix):
            return self @ k
        return self.scale(k)

    __rmul__ = scale

    def __matmul__(self, other: CycloMatrix) -> CycloMatrix:
        # row-sparse: the structured matrices here are mostly zeros
        m = len(other.rows[0]) if other.rows else 0
        sparse = [[(j, y) for j, y in enumerate(row) if y] for row in other.rows]
        out = []
        for r in self.rows:
            acc = [ZERO] * m
            for k, x in enumerate(r):
                if x:
                    for j, y in sparse[k]:
                        acc[j] = acc[j] + x * y
            out.append(acc)
        return CycloMatrix(out)

    def transpose(self) -> CycloMatrix:
        return CycloMatrix(zip(*self.rows))

    @property
    def T(self) -> CycloMatrix:
        return self.transpose()

    def trace(self) -> Cyclo8:
        acc = ZERO
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return acc

    def det(self) -> Cyclo8:
        """Fraction-free (Bareiss) elimination with row pivoting."""
        n = self.n
        if n == 0:
            return ONE
        m = [list(r) for r in self.rows]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if not m[k][k]:
                swap = next((r for r in range(k + 1, n) if m[r][k]), None)
                if swap is None:
                    return ZERO
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            pivot = m[k][k]
            prev_inv = prev.inv()
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) * prev_inv
                m[i][k] = ZERO
            prev = pivot
        d = m[n - 1][n - 1]
        return d if sign == 1 else -d

    def inverse(self) -> CycloMatrix:
        """Gauss-Jordan elimination over the field."""
        n = self.n
        m = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((r for r in range(k, n) if m[r][k]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            m[k], m[piv] = m[piv], m[k]
            inv = m[k][k].inv()
            m[k] = [x * inv for x in m[k]]
            for i in range(n):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [x - f * y for x, y in zip(m[i], m[k])]
        return CycloMatrix([r[n:] for r in m])

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Cyclo8:
        return laplace_det([[self.rows[i][j] for j in cols] for i in rows], ZERO, ONE)

    def is_diagonal(self) -> bool:
        return all(not x for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)
