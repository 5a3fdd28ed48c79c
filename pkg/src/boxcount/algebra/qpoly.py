"""Exact polynomials in q and Laurent polynomials in s = q^(1/2)."""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import zip_longest
from typing import Any, Iterable

from ..errors import IntegrityError, MalformedInputError

__all__ = ["QPoly", "SLaurent"]


def _strip(coeffs: Iterable[Any]) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class QPoly:
    """Dense polynomial in ``q`` with exact (integer, occasionally rational) coefficients.

    ``coeffs[k]`` is the coefficient of ``q**k``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()) -> None:
        self.coeffs = _strip(coeffs)

    @classmethod
    def const(cls, c: Any) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> QPoly:
        if k < 0:
            raise ValueError("QPoly holds no negative powers; use SLaurent")
        return cls((0,) * k + (c,))

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> QPoly:
        """``sum(count * q**k)`` from an exponent -> multiplicity map."""
        if not counts:
            return cls()
        out = [0] * (max(counts) + 1)
        for k, n in counts.items():
            out[k] += n
        return cls(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mon = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}*{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other: Any) -> QPoly:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other: Any) -> QPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPoly(x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other: Any) -> QPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> QPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> QPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k`` (``k >= 0``)."""
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def divmod(self, divisor: QPoly) -> tuple[QPoly, QPoly]:
        """Long division; exact over the integers when ``divisor`` is monic up to sign."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        dq = len(rem) - len(divisor.coeffs)
        if dq < 0:
            return QPoly(), QPoly(rem)
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + len(divisor.coeffs) - 1]
            if top == 0:
                continue
            if isinstance(top, int) and isinstance(lead, int):
                if top % lead:
                    t = Fraction(top, lead)
                else:
                    t = top // lead
            else:
                t = top / lead
            quot[k] = t
            for j, d in enumerate(divisor.coeffs):
                rem[k + j] -= t * d
        return QPoly(quot), QPoly(rem)

    def exact_div(self, divisor: QPoly) -> QPoly:
        quot, rem = self.divmod(divisor)
        if rem:
            raise IntegrityError(f"{self} is not divisible by {divisor}")
        return quot

    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x: Any) -> Any:
        return self(x)

    def is_palindromic(self, degree: int | None = None) -> bool:
        """Coefficients symmetric about ``degree / 2`` (default: the actual degree)."""
        n = self.degree if degree is None else degree
        return all(self.coeff(k) == self.coeff(n - k) for k in range(n + 1)) and self.degree <= n

    def substitute_power(self, m: int) -> QPoly:
        """``p(q**m)``."""
        if not self.coeffs:
            return self
        out = [0] * (m * self.degree + 1)
        for k, c in enumerate(self.coeffs):
            out[m * k] = c
        return QPoly(out)

    # -- JSON -----------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"var": "q", "coeffs": [str(c) for c in self.coeffs] or ["0"]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> QPoly:
        if d.get("var") != "q" or not isinstance(d.get("coeffs"), list):
            raise MalformedInputError(f"not a QPoly JSON object: {d!r}")
        return cls(Fraction(c) if "/" in c else int(c) for c in d["coeffs"])

    @classmethod
    def from_json(cls, text: str) -> QPoly:
        return cls.from_dict(json.loads(text))


class SLaurent:
    """Laurent polynomial in ``s`` where ``s**2 = q``.

    Stored as ``low`` (the exponent of ``coeffs[0]``) plus dense
    coefficients; both ends are stripped of zeros.  The zero element has
    ``coeffs == ()`` and ``low == 0``.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[Any] = (), low: int = 0) -> None:
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        cs = list(_strip(cs[start:]))
        self.coeffs = tuple(cs)
        self.low = low + start if cs else 0

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> SLaurent:
        return cls((c,), k)

    @classmethod
    def from_terms(cls, terms: dict[int, Any]) -> SLaurent:
        terms = {k: v for k, v in terms.items() if v != 0}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls((terms.get(k, 0) for k in range(lo, hi + 1)), lo)

    @classmethod
    def from_qpoly(cls, p: QPoly) -> SLaurent:
        """Lift ``p(q)`` to ``p(s**2)``."""
        return cls(p.substitute_power(2).coeffs, 0)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> dict[int, Any]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c != 0}

    def coeff(self, k: int) -> Any:
        j = k - self.low
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SLaurent):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == SLaurent.monomial(0, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("SLaurent", self.low, self.coeffs))

    def __repr__(self) -> str:
        return f"SLaurent({list(self.coeffs)}, low={self.low})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.terms().items():
            mon = "" if k == 0 else ("s" if k == 1 else f"s^{k}")
            parts.append(str(c) if not mon else (mon if c == 1 else f"{c}*{mon}"))
        return " + ".join(parts)

    def _coerce(self, other: Any) -> SLaurent:
        if isinstance(other, SLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return SLaurent.monomial(0, other)
        if isinstance(other, QPoly):
            return SLaurent.from_qpoly(other)
        return NotImplemented

    def __add__(self, other: Any) -> SLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return SLaurent((self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)), lo)

    __radd__ = __add__

    def __neg__(self) -> SLaurent:
        return SLaurent((-c for c in self.coeffs), self.low)

    def __sub__(self, other: Any) -> SLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> SLaurent:
        return (-self) + other

    def __mul__(self, other: Any) -> SLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return SLaurent()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return SLaurent(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SLaurent:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            c = self.coeffs[0]
            inv = c if c in (1, -1) else 1 / Fraction(c)
            return SLaurent.monomial(-self.low, inv) ** (-n)
        result = SLaurent.monomial(0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_qpoly(self) -> QPoly:
        """Inverse of :meth:`from_qpoly`; needs even, non-negative exponents."""
        terms = self.terms()
        if any(k % 2 or k < 0 for k in terms):
            raise IntegrityError(f"{self} is not a polynomial in q = s^2")
        return QPoly.from_counts({k // 2: c for k, c in terms.items()}) if terms else QPoly()

    def evaluate(self, s0: Any) -> Any:
        """Substitute ``s = s0``; ``s0`` must support ``**`` with negative exponents when ``low < 0``."""
        acc: Any = 0
        for k, c in self.terms().items():
            acc = acc + (s0**k) * c
        return acc

    def __call__(self, s0: Any) -> Any:
        return self.evaluate(s0)

