"""G-Tutte polynomials, G-characteristic polynomials and chromatic quasi-polynomials.

Two independent routes compute the chromatic quasi-polynomial:

* :func:`chromatic_quasi` sums over all sublists ``S`` of the list,
  using ``sum_S (-1)^#S m(S; Z/k) t^(r_Gamma - r_S)`` for each divisor ``k``
  of the LCM-period;
* :func:`chromatic_quasi_dc` recurses by deletion and contraction of the
  last element down to the empty list.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Sequence

from .abelian import (
    DEFAULT_SUBSET_CAP,
    ElementList,
    FgAbelianGroup,
    GSpec,
    QuotientInvariants,
    as_element_list,
    check_subset_cap,
    multiplicity_of,
    period_from_invariants,
    quotient,
    sublist_invariants,
)
from .errors import PreconditionError
from .polynomial import BivariatePolynomial, IntPolynomial
from .quasipoly import QuasiPolynomial, divisors, qp_sub

ListLike = ElementList | Iterable[Sequence[int]]


def _table(gamma: FgAbelianGroup, a: ListLike, cap: int) -> list[QuotientInvariants]:
    return sublist_invariants(gamma, a, cap)


def _char_poly_from_table(
    gamma: FgAbelianGroup, table: list[QuotientInvariants], g: GSpec
) -> IntPolynomial:
    coeffs: Counter[int] = Counter()
    for mask, inv in enumerate(table):
        rank_s = gamma.free_rank - inv.free_rank
        sign = -1 if mask.bit_count() % 2 else 1
        # t^(r_Gamma - r_S) = t^(free rank of the quotient)
        coeffs[gamma.free_rank - rank_s] += sign * multiplicity_of(inv.torsion, g)
    top = max(coeffs, default=-1)
    return IntPolynomial(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def g_tutte(
    gamma: FgAbelianGroup, a: ListLike, g: GSpec, cap: int = DEFAULT_SUBSET_CAP
) -> BivariatePolynomial:
    """``sum_S m(S;G) (x-1)^(r_A - r_S) (y-1)^(#S - r_S)`` expanded."""
    table = _table(gamma, a, cap)
    ranks = [gamma.free_rank - inv.free_rank for inv in table]
    rank_a = ranks[-1]
    weights: Counter[tuple[int, int]] = Counter()
    for mask, inv in enumerate(table):
        weights[(rank_a - ranks[mask], mask.bit_count() - ranks[mask])] += multiplicity_of(
            inv.torsion, g
        )
    xm1 = BivariatePolynomial.x() - 1
    ym1 = BivariatePolynomial.y() - 1
    total = BivariatePolynomial()
    for (i, j), w in sorted(weights.items()):
        if w:
            total = total + (xm1**i) * (ym1**j) * w
    return total


def g_char_poly(
    gamma: FgAbelianGroup, a: ListLike, g: GSpec, cap: int = DEFAULT_SUBSET_CAP
) -> IntPolynomial:
    """G-characteristic polynomial ``sum_S (-1)^#S m(S;G) t^(r_Gamma - r_S)``."""
    return _char_poly_from_table(gamma, _table(gamma, a, cap), g)


def char_poly_from_tutte(
    gamma: FgAbelianGroup, a: ListLike, tutte: BivariatePolynomial, cap: int = DEFAULT_SUBSET_CAP
) -> IntPolynomial:
    """``(-1)^(r_A) t^(r_Gamma - r_A) T(1 - t, 0)``."""
    a = as_element_list(gamma, a)
    check_subset_cap(len(a), cap)
    rank_a = gamma.free_rank - quotient(gamma, a)[0].free_rank
    t = IntPolynomial.variable()
    value = tutte.substitute(1 - t, IntPolynomial())
    return value * IntPolynomial.monomial((-1) ** rank_a, gamma.free_rank - rank_a)


def chromatic_quasi(
    gamma: FgAbelianGroup, a: ListLike, cap: int = DEFAULT_SUBSET_CAP
) -> QuasiPolynomial:
    """Chromatic quasi-polynomial with the LCM-period, stored by gcd class."""
    table = _table(gamma, a, cap)
    rho = period_from_invariants(table)
    return QuasiPolynomial.from_divisors(
        rho, {k: _char_poly_from_table(gamma, table, GSpec.cyclic(k)) for k in divisors(rho)}
    )


def hom_count_quasi(gamma: FgAbelianGroup) -> QuasiPolynomial:
    """``q -> #Hom(gamma, Z/q)`` as a quasi-polynomial."""
    rho = math.lcm(*gamma.invariant_factors) if gamma.invariant_factors else 1
    return QuasiPolynomial.from_divisors(
        rho,
        {
            k: IntPolynomial.monomial(
                math.prod(math.gcd(d, k) for d in gamma.invariant_factors), gamma.free_rank
            )
            for k in divisors(rho)
        },
    )


def chromatic_quasi_dc(
    gamma: FgAbelianGroup, a: ListLike, cap: int = DEFAULT_SUBSET_CAP
) -> QuasiPolynomial:
    """Chromatic quasi-polynomial by deletion-contraction on the last element."""
    a = as_element_list(gamma, a)
    check_subset_cap(len(a), cap)
    return _dc(gamma, a.elements)


def _dc(gamma: FgAbelianGroup, elems: tuple[tuple[int, ...], ...]) -> QuasiPolynomial:
    if not elems:
        return hom_count_quasi(gamma)
    *rest, last = elems
    deleted = _dc(gamma, tuple(rest))
    target, coset = quotient(gamma, [last])
    contracted = _dc(target, tuple(coset(e) for e in rest))
    return qp_sub(deleted, contracted)


def real_char_poly(
    gamma: FgAbelianGroup, a: ListLike, cap: int = DEFAULT_SUBSET_CAP
) -> IntPolynomial:
    """Characteristic polynomial of the real arrangement of the pair.

    Equal to the class-1 constituent after removing torsion elements.
    """
    a = as_element_list(gamma, a)
    free_part = ElementList(gamma, tuple(e for e in a if not gamma.is_torsion(e)))
    return chromatic_quasi(gamma, free_part, cap).constituent(1)


def torsion_vanishing_check(
    gamma: FgAbelianGroup, a: ListLike, cap: int = DEFAULT_SUBSET_CAP
) -> bool:
    """Self-test: a list containing a torsion element has zero class-1 constituent."""
    a = as_element_list(gamma, a)
    if not any(gamma.is_torsion(e) for e in a):
        raise PreconditionError("the list has no torsion element")
    return g_char_poly(gamma, a, GSpec.cyclic(1), cap).is_zero()


def minimal_period(f: QuasiPolynomial) -> int:
    """Smallest divisor of the period under which the constituents still coincide."""
    rho = f.period
    for p in divisors(rho):
        if all(f.constituent(k) == f.constituent((k - 1) % p + 1) for k in range(1, rho + 1)):
            return p
    return rho  # unreachable: p = rho always qualifies
