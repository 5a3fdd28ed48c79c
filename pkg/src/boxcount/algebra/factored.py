"""Formal ratios of q-integers and their exact expansion / specialisation.

An atom ``(base, n)`` denotes the q-integer ``(n)_{q**base}``
``= 1 + q**base + ... + q**(base*(n-1))``; only bases 1 and 2 occur.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..errors import IntegrityError, PoleError
from .qpoly import QPoly

__all__ = [
    "FactoredQExpr",
    "q_integer",
    "q_factorial",
    "q_hyperfactorial",
    "staggered_hyperfactorial",
    "staggered_factorial",
    "expand",
    "eval_at_minus_one",
]

Atom = tuple[int, int]


def _atoms(items: Iterable[Atom]) -> Counter:
    out: Counter = Counter()
    for base, n in items:
        if base not in (1, 2):
            raise ValueError(f"atom base must be q or q^2, got q^{base}")
        if n < 1:
            raise ValueError(f"atom ({n})_q^{base} is not allowed; empty products are 1")
        out[(base, n)] += 1
    return out


@dataclass(frozen=True)
class FactoredQExpr:
    num: Counter = field(default_factory=Counter)
    den: Counter = field(default_factory=Counter)

    @classmethod
    def of(cls, num: Iterable[Atom] = (), den: Iterable[Atom] = ()) -> FactoredQExpr:
        return cls(_atoms(num), _atoms(den))

    @classmethod
    def one(cls) -> FactoredQExpr:
        return cls()

    def __mul__(self, other: FactoredQExpr) -> FactoredQExpr:
        return FactoredQExpr(self.num + other.num, self.den + other.den)

    def __truediv__(self, other: FactoredQExpr) -> FactoredQExpr:
        return FactoredQExpr(self.num + other.den, self.den + other.num)

    def __pow__(self, k: int) -> FactoredQExpr:
        if k < 0:
            return FactoredQExpr.one() / self ** (-k)
        num: Counter = Counter()
        den: Counter = Counter()
        for _ in range(k):
            num += self.num
            den += self.den
        return FactoredQExpr(num, den)

    def with_base(self, base: int) -> FactoredQExpr:
        """Replace ``q`` by ``q**base`` in every atom."""
        return FactoredQExpr(
            Counter({(b * base, n): m for (b, n), m in self.num.items()}),
            Counter({(b * base, n): m for (b, n), m in self.den.items()}),
        )

    def cancelled(self) -> FactoredQExpr:
        """Remove atoms common to numerator and denominator."""
        return FactoredQExpr(self.num - self.den, self.den - self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredQExpr):
            return NotImplemented
        a, b = self.cancelled(), other.cancelled()
        return +a.num == +b.num and +a.den == +b.den

    def __hash__(self) -> int:
        c = self.cancelled()
        return hash((frozenset((+c.num).items()), frozenset((+c.den).items())))

    def __repr__(self) -> str:
        def fmt(cnt: Counter) -> str:
            parts = []
            for (base, n), m in sorted(cnt.items()):
                var = "q" if base == 1 else f"q^{base}"
                parts.append(f"({n})_{var}" + (f"^{m}" if m > 1 else ""))
            return "*".join(parts) or "1"

        return f"FactoredQExpr({fmt(+self.num)} / {fmt(+self.den)})"

    def expand(self) -> QPoly:
        return expand(self)

    def eval_at_minus_one(self) -> Fraction:
        return eval_at_minus_one(self)

    def at_one(self) -> Fraction:
        """Value at ``q = 1`` (each atom contributes ``n``)."""
        val = Fraction(1)
        for (_, n), m in self.num.items():
            val *= Fraction(n) ** m
        for (_, n), m in self.den.items():
            val /= Fraction(n) ** m
        return val


def _atom_poly(base: int, n: int) -> QPoly:
    out = [0] * (base * (n - 1) + 1)
    for k in range(n):
        out[base * k] = 1
    return QPoly(out)


# -- constructors -------------------------------------------------------------


def q_integer(n: int, base: int = 1) -> FactoredQExpr:
    """``(n)_q`` for ``n >= 1``."""
    if n < 1:
        raise ValueError(f"({n})_q is not a unit; q-integers start at n = 1")
    if n == 1:
        return FactoredQExpr.one()
    return FactoredQExpr.of([(base, n)])


def q_factorial(n: int, base: int = 1) -> FactoredQExpr:
    """``(n)_q! = (1)_q (2)_q ... (n)_q``."""
    return FactoredQExpr.of([(base, k) for k in range(2, n + 1)])


def q_hyperfactorial(n: int, base: int = 1) -> FactoredQExpr:
    """``H(n)_q = (1)_q! (2)_q! ... (n-1)_q!``."""
    out = FactoredQExpr.one()
    for k in range(1, n):
        out = out * q_factorial(k, base)
    return out


def staggered_hyperfactorial(n: int, base: int = 1, offset: int = 2, stop: int = 1) -> FactoredQExpr:
    """``H_2(n) = (n-2)_q! (n-4)_q! ...``, factors taken while the argument is ``>= stop``.

    ``offset`` is the first argument's distance below ``n``.
    """
    out = FactoredQExpr.one()
    for m in range(n - offset, stop - 1, -2):
        out = out * q_factorial(m, base)
    return out


def staggered_factorial(n: int, base: int = 1, offset: int = 0, stop: int = 1) -> FactoredQExpr:
    """``n_q!! = (n)_q (n-2)_q (n-4)_q ...``, factors taken while the argument is ``>= stop``."""
    out = FactoredQExpr.one()
    for m in range(n - offset, stop - 1, -2):
        out = out * q_integer(m, base)
    return out


# -- evaluation ---------------------------------------------------------------


def expand(e: FactoredQExpr) -> QPoly:
    """Multiply out the numerator and divide by each denominator atom exactly.

    Raises :class:`IntegrityError` as soon as a division leaves a remainder.
    """
    e = e.cancelled()
    poly = QPoly.const(1)
    for (base, n), m in sorted((+e.num).items()):
        atom = _atom_poly(base, n)
        for _ in range(m):
            poly = poly * atom
    for (base, n), m in sorted((+e.den).items(), reverse=True):
        atom = _atom_poly(base, n)
        for _ in range(m):
            poly = poly.exact_div(atom)
    return poly


def _minus_one_parts(cnt: Counter) -> tuple[int, Fraction]:
    # (2m)_q = (1+q) (m)_{q^2}; odd (n)_q -> 1; (n)_{q^2} -> n
    vanishing = 0
    value = Fraction(1)
    for (base, n), mult in cnt.items():
        if base == 1:
            if n % 2 == 0:
                vanishing += mult
                value *= Fraction(n // 2) ** mult
        elif base % 2 == 0:
            value *= Fraction(n) ** mult
        else:
            raise ValueError(f"unsupported atom base q^{base}")
    return vanishing, value


def eval_at_minus_one(e: FactoredQExpr) -> Fraction:
    """Exact value of ``e`` as ``q -> -1``.

    Zero if the numerator has more vanishing ``(1+q)`` factors than the
    denominator; :class:`PoleError` if it has fewer.
    """
    zn, vn = _minus_one_parts(e.num)
    zd, vd = _minus_one_parts(e.den)
    if zn > zd:
        return Fraction(0)
    if zn < zd:
        raise PoleError(f"{e!r} has a pole of order {zd - zn} at q = -1")
    return vn / vd


def check_exact(e: FactoredQExpr) -> QPoly:
    """Expand and confirm the value at ``q = 1``; used by the formula evaluators."""
    p = expand(e)
    if p(1) != e.at_one():
        raise IntegrityError(f"expansion of {e!r} disagrees with its value at q = 1")
    return p
