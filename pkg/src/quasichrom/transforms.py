"""Deletion, contraction and the conversions between pair and CW instances."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .abelian import (
    DEFAULT_SUBSET_CAP,
    ElementList,
    FgAbelianGroup,
    IntMatrix,
    as_element_list,
    integer_rank,
    mask_indices,
    quotient,
)
from .errors import BadIndexError, FreeGroupRequiredError, ZeroElementError
from .polynomial import IntPolynomial
from .tutte import chromatic_quasi

Mask = int | Iterable[int]


@dataclass(frozen=True)
class CwInstance:
    """Column lists ``A`` and ``B`` in ``Z^ell``.

    Counts ``z`` in ``(Z/q)^ell`` with ``z . alpha != 0`` for every column
    ``alpha`` of ``A`` and ``z . beta = 0`` for every column of ``B``.
    """

    a: IntMatrix
    b: IntMatrix
    ell: int

    def __post_init__(self) -> None:
        if self.a.nrows != self.ell or self.b.nrows != self.ell:
            raise ValueError(f"both matrices need {self.ell} rows")

    @classmethod
    def from_vectors(
        cls, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ell: int
    ) -> CwInstance:
        return cls(IntMatrix.from_columns(a, ell), IntMatrix.from_columns(b, ell), ell)

    def a_vectors(self) -> list[tuple[int, ...]]:
        return self.a.columns()

    def b_vectors(self) -> list[tuple[int, ...]]:
        return self.b.columns()

    def to_json(self) -> dict:
        return {
            "A": [list(c) for c in self.a_vectors()],
            "B": [list(c) for c in self.b_vectors()],
            "ell": self.ell,
        }


@dataclass(frozen=True)
class Lifting:
    """Integer representatives of a pair's elements and the torsion relations."""

    a_tilde: ElementList
    q_list: ElementList


def deletion(a: ElementList, mask: Mask) -> ElementList:
    """Remove the addressed elements."""
    drop = set(mask_indices(mask, len(a)))
    return ElementList(a.group, tuple(e for i, e in enumerate(a) if i not in drop))


def contraction(
    gamma: FgAbelianGroup, a: ElementList | Iterable[Sequence[int]], mask: Mask
) -> tuple[FgAbelianGroup, ElementList]:
    """Pass to ``gamma / <S>``; the other elements become cosets (zero cosets kept)."""
    a = as_element_list(gamma, a)
    idx = set(mask_indices(mask, len(a)))
    target, coset = quotient(gamma, [a[i] for i in sorted(idx)])
    return target, coset.image(e for i, e in enumerate(a) if i not in idx)


def cw_to_bm(cw: CwInstance) -> tuple[FgAbelianGroup, ElementList]:
    """``Z^ell / <B>`` together with the cosets of ``A``."""
    gamma = FgAbelianGroup.free(cw.ell)
    target, coset = quotient(gamma, cw.b_vectors())
    return target, coset.image(cw.a_vectors())


def bm_to_cw(
    gamma: FgAbelianGroup, a: ElementList | Iterable[Sequence[int]]
) -> tuple[CwInstance, Lifting]:
    """Lift a pair to ``Z^(r+s)``: representatives of ``A`` against the relations ``Q``."""
    a = as_element_list(gamma, a)
    n = gamma.ngens
    lifted = FgAbelianGroup.free(n)
    a_tilde = ElementList(lifted, a.elements)
    q_list = ElementList(lifted, tuple(gamma.relation_columns()))
    cw = CwInstance(
        IntMatrix.from_columns(a_tilde.elements, n),
        IntMatrix.from_columns(q_list.elements, n),
        n,
    )
    return cw, Lifting(a_tilde, q_list)


def graph_to_list(
    n_vertices: int, edges: Iterable[tuple[int, int]]
) -> tuple[FgAbelianGroup, ElementList]:
    """Graphical list in ``Z^n``: edge ``(i, j)`` (1-indexed) gives ``e_j - e_i``.

    A graph loop ``(i, i)`` gives the zero vector.
    """
    vectors = []
    for i, j in edges:
        if not (1 <= i <= n_vertices and 1 <= j <= n_vertices):
            raise BadIndexError(f"edge ({i}, {j}) references a vertex outside 1..{n_vertices}")
        v = [0] * n_vertices
        v[i - 1] -= 1
        v[j - 1] += 1
        vectors.append(tuple(v))
    gamma = FgAbelianGroup.free(n_vertices)
    return gamma, ElementList(gamma, tuple(vectors))


def torsion_split(
    gamma: FgAbelianGroup, a: ElementList | Iterable[Sequence[int]]
) -> tuple[ElementList, ElementList]:
    """``(non-torsion elements, torsion elements)``, each in list order."""
    a = as_element_list(gamma, a)
    tor = [gamma.is_torsion(e) for e in a]
    return (
        ElementList(gamma, tuple(e for e, t in zip(a, tor) if not t)),
        ElementList(gamma, tuple(e for e, t in zip(a, tor) if t)),
    )


def _localization_indices(a: ElementList, s_mask: Mask) -> list[int]:
    gamma = a.group
    if not gamma.is_free:
        raise FreeGroupRequiredError(f"localization needs a free group, got {gamma}")
    s = [a[i] for i in mask_indices(s_mask, len(a))]
    if any(not any(e) for e in s):
        raise ZeroElementError("the flat must be cut out by nonzero elements")
    n = gamma.ngens
    base = integer_rank(s, n)
    return [i for i, b in enumerate(a) if integer_rank(s + [b], n) == base]


def localization(a: ElementList, s_mask: Mask) -> ElementList:
    """Elements of ``a`` lying in the rational span of the addressed sublist.

    These are the elements whose hyperplanes contain the flat cut out by the
    addressed ones.
    """
    return a.select(_localization_indices(a, s_mask))


def restriction_char_poly(
    a: ElementList, s_mask: Mask, cap: int = DEFAULT_SUBSET_CAP
) -> IntPolynomial:
    """Characteristic polynomial of the restriction to the flat cut out by ``s_mask``,
    read off as the class-1 constituent of the contraction by the localization."""
    target, rest = contraction(a.group, a, _localization_indices(a, s_mask))
    return chromatic_quasi(target, rest, cap).constituent(1)
