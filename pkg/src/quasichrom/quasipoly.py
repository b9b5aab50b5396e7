"""Quasi-polynomials: a period plus one integer polynomial per residue class.

Residue classes are indexed ``k = 1..period``; ``q`` uses the class ``k``
with ``k = q (mod period)``.  When every pair of classes with the same
``gcd(k, period)`` shares its polynomial (the GCD property), the
quasi-polynomial can be stored *compressed*: one polynomial per divisor of
the period.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .errors import NotAMultipleError
from .polynomial import IntPolynomial


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


class QuasiPolynomial:
    """Immutable quasi-polynomial with full or compressed constituent storage."""

    __slots__ = ("_period", "_polys", "_compressed")

    def __init__(self, period: int, constituents: Sequence[IntPolynomial]):
        if period < 1:
            raise ValueError("period must be a positive integer")
        if len(constituents) != period:
            raise ValueError(f"need {period} constituents, got {len(constituents)}")
        self._period = period
        self._polys = {k: _poly(p) for k, p in enumerate(constituents, start=1)}
        self._compressed = False

    @classmethod
    def from_divisors(cls, period: int, by_divisor: Mapping[int, IntPolynomial]) -> QuasiPolynomial:
        """Compressed form: ``by_divisor[e]`` serves every class ``k`` with ``gcd(k, period) = e``."""
        if period < 1:
            raise ValueError("period must be a positive integer")
        divs = divisors(period)
        missing = [e for e in divs if e not in by_divisor]
        extra = [e for e in by_divisor if e not in divs]
        if missing or extra:
            raise ValueError(f"constituents must be keyed by the divisors {divs} of {period}")
        self = cls.__new__(cls)
        self._period = period
        self._polys = {e: _poly(by_divisor[e]) for e in divs}
        self._compressed = True
        return self

    @classmethod
    def constant_polynomial(cls, poly: IntPolynomial | int) -> QuasiPolynomial:
        return cls(1, [_poly(poly)])

    @classmethod
    def zero(cls, period: int = 1) -> QuasiPolynomial:
        return cls.from_divisors(period, {e: IntPolynomial() for e in divisors(period)})

    @property
    def period(self) -> int:
        return self._period

    @property
    def compressed(self) -> bool:
        return self._compressed

    def constituent(self, k: int) -> IntPolynomial:
        """The polynomial governing every ``q = k (mod period)``."""
        if self._compressed:
            return self._polys[math.gcd(k, self._period)]
        return self._polys[(k - 1) % self._period + 1]

    def constituents(self) -> list[IntPolynomial]:
        """All ``period`` constituents, class 1 first."""
        return [self.constituent(k) for k in range(1, self._period + 1)]

    def stored(self) -> list[tuple[int, IntPolynomial]]:
        """``(class, polynomial)`` pairs as stored (divisors when compressed)."""
        return sorted(self._polys.items())

    def __call__(self, q: int) -> int:
        return evaluate(self, q)

    def has_gcd_property(self) -> bool:
        return has_gcd_property(self)

    def compress(self) -> QuasiPolynomial:
        if self._compressed:
            return self
        if not self.has_gcd_property():
            raise ValueError("quasi-polynomial lacks the GCD property; cannot compress")
        return QuasiPolynomial.from_divisors(
            self._period, {e: self.constituent(e) for e in divisors(self._period)}
        )

    def expand(self) -> QuasiPolynomial:
        return QuasiPolynomial(self._period, self.constituents())

    def lift_period(self, rho_new: int) -> QuasiPolynomial:
        return lift_period(self, rho_new)

    def same_function(self, other: QuasiPolynomial) -> bool:
        """Equality as functions on positive integers (periods may differ)."""
        rho = math.lcm(self._period, other._period)
        a, b = lift_period(self, rho), lift_period(other, rho)
        return all(a.constituent(k) == b.constituent(k) for k in _classes(a, b))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return self._period == other._period and all(
            self.constituent(k) == other.constituent(k) for k in _classes(self, other)
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: QuasiPolynomial) -> QuasiPolynomial:
        return qp_add(self, other)

    def __sub__(self, other: QuasiPolynomial) -> QuasiPolynomial:
        return qp_sub(self, other)

    def __neg__(self) -> QuasiPolynomial:
        return qp_scale(self, -1)

    def __mul__(self, c: int) -> QuasiPolynomial:
        return qp_scale(self, c)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {p}" for k, p in self.stored())
        kind = "gcd" if self._compressed else "k"
        return f"QuasiPolynomial(period={self._period}, {kind} {{{body}}})"

    def to_json(self) -> dict:
        return {
            "period": self._period,
            "constituents": [{"class": k, "coeffs": list(p.coeffs)} for k, p in self.stored()],
            "compressed": self._compressed,
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> QuasiPolynomial:
        period = int(payload["period"])
        polys = {int(c["class"]): IntPolynomial(tuple(c["coeffs"])) for c in payload["constituents"]}
        if payload.get("compressed", False):
            return cls.from_divisors(period, polys)
        return cls(period, [polys[k] for k in range(1, period + 1)])

    def to_latex(self, var: str = "q") -> str:
        """A ``cases`` display, one row per stored class."""
        if self._period == 1:
            return self.constituent(1).to_latex(var)
        rows = []
        for k, p in self.stored():
            cond = (
                rf"\gcd({var},{self._period})={k}"
                if self._compressed
                else rf"{var}\equiv {k} \pmod{{{self._period}}}"
            )
            rows.append(rf"{p.to_latex(var)} & \text{{if }} {cond}")
        return "\\begin{cases}\n" + " \\\\\n".join(rows) + "\n\\end{cases}"


def _poly(p: IntPolynomial | int | Iterable[int]) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    return IntPolynomial(tuple(p))


def _classes(a: QuasiPolynomial, b: QuasiPolynomial) -> Iterable[int]:
    if a.compressed and b.compressed and a.period == b.period:
        return divisors(a.period)
    return range(1, max(a.period, b.period) + 1)


def evaluate(f: QuasiPolynomial, q: int) -> int:
    if q < 1:
        raise ValueError("quasi-polynomials are evaluated at positive integers")
    return f.constituent(q)(q)


def lift_period(f: QuasiPolynomial, rho_new: int) -> QuasiPolynomial:
    """Same function, presented with period ``rho_new`` (a multiple of the old one)."""
    if rho_new < 1 or rho_new % f.period:
        raise NotAMultipleError(f"{rho_new} is not a multiple of the period {f.period}")
    if f.compressed:
        # gcd(k, rho) = gcd(gcd(k, rho_new), rho), so compression survives
        return QuasiPolynomial.from_divisors(
            rho_new, {e: f.constituent(e) for e in divisors(rho_new)}
        )
    return QuasiPolynomial(rho_new, [f.constituent(k) for k in range(1, rho_new + 1)])


def _combine(f: QuasiPolynomial, g: QuasiPolynomial, op) -> QuasiPolynomial:
    rho = math.lcm(f.period, g.period)
    if f.compressed and g.compressed:
        return QuasiPolynomial.from_divisors(
            rho, {e: op(f.constituent(e), g.constituent(e)) for e in divisors(rho)}
        )
    return QuasiPolynomial(
        rho, [op(f.constituent(k), g.constituent(k)) for k in range(1, rho + 1)]
    )


def qp_add(f: QuasiPolynomial, g: QuasiPolynomial) -> QuasiPolynomial:
    return _combine(f, g, lambda a, b: a + b)


def qp_sub(f: QuasiPolynomial, g: QuasiPolynomial) -> QuasiPolynomial:
    return _combine(f, g, lambda a, b: a - b)


def qp_scale(f: QuasiPolynomial, c: int) -> QuasiPolynomial:
    if f.compressed:
        return QuasiPolynomial.from_divisors(f.period, {k: p * c for k, p in f.stored()})
    return QuasiPolynomial(f.period, [p * c for p in f.constituents()])


def has_gcd_property(f: QuasiPolynomial) -> bool:
    """True when classes with equal ``gcd(k, period)`` share a constituent."""
    if f.compressed:
        return True
    rho = f.period
    return all(f.constituent(k) == f.constituent(math.gcd(k, rho)) for k in range(1, rho + 1))
