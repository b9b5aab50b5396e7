"""Integer-coefficient univariate and bivariate polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

Number = int


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _monomial_text(coeff: int, powers: list[tuple[str, int]], first: bool, latex: bool) -> str:
    body = "".join(
        v if e == 1 else (f"{v}^{{{e}}}" if latex else f"{v}^{e}") for v, e in powers if e
    )
    mag = abs(coeff)
    text = body if (mag == 1 and body) else f"{mag}{body}"
    if first:
        return f"-{text}" if coeff < 0 else text
    return f" - {text}" if coeff < 0 else f" + {text}"


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial; ``coeffs[i]`` multiplies ``t**i``.

    The zero polynomial has no coefficients and degree ``-inf``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def variable(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _as_poly(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        result = IntPolynomial((1,))
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x: int | IntPolynomial) -> int | IntPolynomial:
        # Horner; also composes when x is a polynomial
        acc: int | IntPolynomial = 0 if isinstance(x, int) else IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def format(self, var: str = "t", latex: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                parts.append(_monomial_text(c, [(var, k)], not parts, latex))
        return "".join(parts)

    def to_latex(self, var: str = "t") -> str:
        return self.format(var, latex=True)

    def __str__(self) -> str:
        return self.format()


def _as_poly(x: IntPolynomial | int) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial((x,))


Exponents = tuple[int, int]


@dataclass(frozen=True)
class BivariatePolynomial:
    """Sparse polynomial in ``x`` and ``y``; terms sorted lexicographically by ``(i, j)``."""

    terms: tuple[tuple[Exponents, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Exponents, int] = {}
        for (i, j), c in self.terms:
            merged[(int(i), int(j))] = merged.get((int(i), int(j)), 0) + int(c)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c))
        )

    @classmethod
    def from_dict(cls, terms: Mapping[Exponents, int]) -> BivariatePolynomial:
        return cls(tuple(terms.items()))

    @classmethod
    def constant(cls, c: int) -> BivariatePolynomial:
        return cls((((0, 0), c),))

    @classmethod
    def x(cls) -> BivariatePolynomial:
        return cls((((1, 0), 1),))

    @classmethod
    def y(cls) -> BivariatePolynomial:
        return cls((((0, 1), 1),))

    def as_dict(self) -> dict[Exponents, int]:
        return dict(self.terms)

    def __add__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        other = _as_bipoly(other)
        return BivariatePolynomial(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        return self + (-_as_bipoly(other))

    def __mul__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        other = _as_bipoly(other)
        return BivariatePolynomial(
            tuple(
                ((i1 + i2, j1 + j2), c1 * c2)
                for (i1, j1), c1 in self.terms
                for (i2, j2), c2 in other.terms
            )
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BivariatePolynomial:
        result = BivariatePolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.terms)

    def substitute(self, x: IntPolynomial, y: IntPolynomial) -> IntPolynomial:
        """Univariate polynomial obtained by plugging polynomials in for ``x`` and ``y``."""
        total = IntPolynomial()
        for (i, j), c in self.terms:
            total = total + (x**i) * (y**j) * c
        return total

    def format(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for (i, j), c in reversed(self.terms):
            parts.append(_monomial_text(c, [("x", i), ("y", j)], not parts, latex))
        return "".join(parts)

    def to_latex(self) -> str:
        return self.format(latex=True)

    def __str__(self) -> str:
        return self.format()

    def to_json(self) -> dict:
        return {
            "terms": [[i, j, c] for (i, j), c in self.terms],
            "expr": self.format(),
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> BivariatePolynomial:
        return cls(tuple(((i, j), c) for i, j, c in payload["terms"]))


def _as_bipoly(x: Union[BivariatePolynomial, int]) -> BivariatePolynomial:
    return x if isinstance(x, BivariatePolynomial) else BivariatePolynomial.constant(x)
