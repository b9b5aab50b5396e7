"""Exact integer linear algebra and finitely generated abelian groups.

Everything here works on Python ints; no floating point is involved.
A group is presented as ``Z^r + Z/d1 + ... + Z/ds`` with ``1 < d1 | d2 | ...``
and its elements are integer tuples of length ``r + s`` whose torsion
coordinates are reduced into ``[0, d_i)``.

>>> gamma = FgAbelianGroup.parse("Z^2 + Z/4")
>>> target, coset = quotient(gamma, [(0, 2, 3)])
>>> str(target)
'Z + Z/8'
>>> hom_count(gamma, 8)
256
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BadIndexError,
    ElementNotInGroupError,
    ListTooLargeError,
    ParseError,
)

DEFAULT_SUBSET_CAP = 24

Element = tuple[int, ...]


# --------------------------------------------------------------------------
# Integer matrices
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, stored row-major as a tuple of row tuples.

    ``nrows`` and ``ncols`` are explicit so that ``0 x n`` and ``n x 0``
    matrices keep their shape.
    """

    nrows: int
    ncols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.nrows or any(len(r) != self.ncols for r in self.data):
            raise ValueError("matrix data does not match its shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        columns = [tuple(int(x) for x in c) for c in columns]
        if any(len(c) != nrows for c in columns):
            raise ValueError(f"every column must have {nrows} entries")
        data = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls(nrows, len(columns), data)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.ncols, self.nrows, tuple(self.columns()))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        data = tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.data
        )
        return IntMatrix(self.nrows, other.ncols, data)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product ``M v``."""
        return tuple(sum(a * b for a, b in zip(r, vector)) for r in self.data)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.data]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


class SnfResult(NamedTuple):
    """``u @ m @ v`` is diagonal with entries ``d`` (length ``min(rows, cols)``)."""

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        n, m = self.u.nrows, self.v.ncols
        return IntMatrix(
            n, m, tuple(tuple(self.d[i] if i == j else 0 for j in range(m)) for i in range(n))
        )

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivots on the smallest nonzero absolute value of the remaining block.
    Rows and columns are brought to the pivot position by a cyclic move
    rather than a swap, so untouched rows keep their relative order; this
    keeps coset maps of quotients close to the input coordinates.
    """
    n, k = m.shape
    a = [list(r) for r in m.data]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(k)] for i in range(k)]

    def move_row(src: int, dst: int) -> None:
        a.insert(dst, a.pop(src))
        u.insert(dst, u.pop(src))

    def move_col(src: int, dst: int) -> None:
        for row in a:
            row.insert(dst, row.pop(src))
        for row in v:
            row.insert(dst, row.pop(src))

    def add_row(dst: int, src: int, c: int) -> None:
        # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, c: int) -> None:
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    for t in range(min(n, k)):
        best = None
        for i in range(t, n):
            for j in range(t, k):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        move_row(best[1], t)
        move_col(best[2], t)

        while True:
            p = a[t][t]
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, k):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # leftover remainders are smaller than |p|: promote the smallest
            rest = [(abs(a[i][t]), i, None) for i in range(t + 1, n) if a[i][t]]
            rest += [(abs(a[t][j]), None, j) for j in range(t + 1, k) if a[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda e: e[0])
                if i is not None:
                    move_row(i, t)
                else:
                    move_col(j, t)
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, k) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    d = tuple(a[i][i] for i in range(min(n, k)))
    return SnfResult(d, IntMatrix.from_rows(u, n), IntMatrix.from_rows(v, k))


def integer_rank(vectors: Sequence[Sequence[int]], dim: int) -> int:
    """Rank over Q of a list of integer vectors of length ``dim``."""
    if not vectors:
        return 0
    return snf(IntMatrix.from_columns(vectors, dim)).rank


# --------------------------------------------------------------------------
# Groups and element lists
# --------------------------------------------------------------------------

_TERM = re.compile(r"^Z(?:\^(\d+))?$|^Z/(\d+)(?:Z)?$|^0$")


@dataclass(frozen=True)
class FgAbelianGroup:
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "invariant_factors", tuple(int(d) for d in self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        ds = self.invariant_factors
        if any(d <= 1 for d in ds):
            raise ValueError(f"invariant factors must exceed 1, got {list(ds)}")
        if any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {list(ds)}")

    @classmethod
    def free(cls, rank: int) -> FgAbelianGroup:
        return cls(rank, ())

    @classmethod
    def parse(cls, text: str) -> FgAbelianGroup:
        """Parse ``"Z^r + Z/d1 + ... + Z/ds"`` (whitespace-insensitive).

        Free summands must precede torsion summands; ``Z/1`` terms are dropped.
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ParseError("group", "empty group descriptor")
        free, torsion = 0, []
        for term in compact.split("+"):
            match = _TERM.match(term)
            if match is None:
                raise ParseError("group", f"cannot parse summand {term!r}")
            power, order = match.groups()
            if order is not None:
                d = int(order)
                if d == 0:
                    raise ParseError("group", "use Z instead of Z/0")
                if d > 1:
                    torsion.append(d)
            elif term != "0":
                if torsion:
                    raise ParseError("group", "free summands must come before torsion summands")
                free += 1 if power is None else int(power)
        try:
            return cls(free, tuple(torsion))
        except ValueError as exc:
            raise ParseError("group", str(exc)) from None

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    @property
    def rank(self) -> int:
        return self.free_rank

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    @property
    def torsion_order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        """Largest invariant factor, 1 for a torsion-free group."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def zero(self) -> Element:
        return (0,) * self.ngens

    def element(self, coords: Iterable[int]) -> Element:
        """Validate ``coords`` and reduce torsion coordinates into ``[0, d_i)``."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise ElementNotInGroupError(
                f"element {list(coords)} has {len(coords)} coordinates, group {self} needs {self.ngens}"
            )
        r = self.free_rank
        return coords[:r] + tuple(c % d for c, d in zip(coords[r:], self.invariant_factors))

    def is_torsion(self, elem: Sequence[int]) -> bool:
        return not any(elem[: self.free_rank])

    def relation_columns(self) -> list[Element]:
        """The vectors ``d_i e_{r+i}`` presenting the torsion part."""
        n, r = self.ngens, self.free_rank
        return [
            tuple(d if j == r + i else 0 for j in range(n))
            for i, d in enumerate(self.invariant_factors)
        ]


@dataclass(frozen=True)
class ElementList:
    """An ordered multiset of elements of one group."""

    group: FgAbelianGroup
    elements: tuple[Element, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "elements", tuple(self.group.element(e) for e in self.elements)
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> Element:
        return self.elements[i]

    def indices(self, mask: int | Iterable[int]) -> list[int]:
        return mask_indices(mask, len(self))

    def select(self, mask: int | Iterable[int]) -> ElementList:
        """Sublist addressed by ``mask`` (kept in list order)."""
        return ElementList(self.group, tuple(self.elements[i] for i in self.indices(mask)))

    def tolist(self) -> list[list[int]]:
        return [list(e) for e in self.elements]


def mask_indices(mask: int | Iterable[int], n: int) -> list[int]:
    """Sorted indices addressed by an int bitmask or an iterable of indices."""
    if isinstance(mask, int):
        if mask < 0 or mask >> n:
            raise BadIndexError(f"bitmask {mask:#b} addresses indices beyond a list of length {n}")
        return [i for i in range(n) if mask >> i & 1]
    idx = sorted(set(int(i) for i in mask))
    if idx and (idx[0] < 0 or idx[-1] >= n):
        raise BadIndexError(f"indices {idx} out of range for a list of length {n}")
    return idx


def as_element_list(gamma: FgAbelianGroup, a: ElementList | Iterable[Sequence[int]]) -> ElementList:
    if isinstance(a, ElementList):
        if a.group != gamma:
            raise ElementNotInGroupError(f"list lives in {a.group}, expected {gamma}")
        return a
    return ElementList(gamma, tuple(a))


# --------------------------------------------------------------------------
# Quotients
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CosetMap:
    """Linear map sending an element of ``source`` to its coset in ``target``."""

    source: FgAbelianGroup
    target: FgAbelianGroup
    matrix: IntMatrix

    def __call__(self, elem: Sequence[int]) -> Element:
        return self.target.element(self.matrix.apply(self.source.element(elem)))

    def image(self, a: ElementList | Iterable[Sequence[int]]) -> ElementList:
        return ElementList(self.target, tuple(self(e) for e in a))


class QuotientInvariants(NamedTuple):
    free_rank: int
    torsion: tuple[int, ...]


def _relation_matrix(gamma: FgAbelianGroup, elems: Sequence[Element]) -> IntMatrix:
    return IntMatrix.from_columns(list(elems) + gamma.relation_columns(), gamma.ngens)


def _read_diagonal(res: SnfResult, n: int) -> tuple[list[int], list[int]]:
    """Split the rows ``0..n-1`` of an SNF into free rows and torsion rows."""
    free_rows, tor_rows = [], []
    for i in range(n):
        d = res.d[i] if i < len(res.d) else 0
        if d == 0:
            free_rows.append(i)
        elif d > 1:
            tor_rows.append(i)
    return free_rows, tor_rows


def quotient(
    gamma: FgAbelianGroup, s: ElementList | Iterable[Sequence[int]]
) -> tuple[FgAbelianGroup, CosetMap]:
    """Presentation of ``gamma / <s>`` together with the coset map."""
    s = as_element_list(gamma, s)
    n = gamma.ngens
    res = snf(_relation_matrix(gamma, s.elements))
    free_rows, tor_rows = _read_diagonal(res, n)
    target = FgAbelianGroup(len(free_rows), tuple(res.d[i] for i in tor_rows))
    rows = [res.u.row(i) for i in free_rows + tor_rows]
    return target, CosetMap(gamma, target, IntMatrix.from_rows(rows, n))


def quotient_invariants(
    gamma: FgAbelianGroup, s: ElementList | Iterable[Sequence[int]]
) -> QuotientInvariants:
    """Free rank and torsion invariants of ``gamma / <s>`` without the map."""
    s = as_element_list(gamma, s)
    res = snf(_relation_matrix(gamma, s.elements))
    free_rows, tor_rows = _read_diagonal(res, gamma.ngens)
    return QuotientInvariants(len(free_rows), tuple(res.d[i] for i in tor_rows))


def subgroup_rank(gamma: FgAbelianGroup, s: ElementList | Iterable[Sequence[int]]) -> int:
    return gamma.free_rank - quotient_invariants(gamma, s).free_rank


# --------------------------------------------------------------------------
# Target groups G for multiplicities
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GSpec:
    """A torsion-wise finite abelian group: a finite direct sum of ``Z/k``,
    ``Z`` and ``Q/Z`` summands.

    ``summands`` holds ints ``k >= 1`` for cyclic groups and the strings
    ``"Z"`` and ``"QZ"``.
    """

    summands: tuple[int | str, ...]

    def __post_init__(self) -> None:
        for g in self.summands:
            if isinstance(g, str):
                if g not in ("Z", "QZ"):
                    raise ValueError(f"unknown summand {g!r}")
            elif int(g) < 1:
                raise ValueError(f"cyclic order must be positive, got {g}")

    @classmethod
    def cyclic(cls, k: int) -> GSpec:
        return cls((int(k),))

    @classmethod
    def integers(cls) -> GSpec:
        return cls(("Z",))

    @classmethod
    def circle(cls) -> GSpec:
        return cls(("QZ",))

    @classmethod
    def parse(cls, text: str) -> GSpec:
        """Parse ``k:<int>``, ``Z`` or ``QZ``, optionally joined by ``+``."""
        out: list[int | str] = []
        for term in re.sub(r"\s+", "", text).split("+"):
            if term in ("Z", "QZ", "Q/Z"):
                out.append("QZ" if term == "Q/Z" else term)
            elif re.fullmatch(r"(?:k:|Z/)\d+", term):
                k = int(term.split(":")[-1].split("/")[-1])
                if k < 1:
                    raise ParseError("g", "cyclic order must be positive")
                out.append(k)
            else:
                raise ParseError("g", f"expected k:<int>, Z or QZ, got {term!r}")
        return cls(tuple(out))

    def __str__(self) -> str:
        return " + ".join(f"Z/{g}" if isinstance(g, int) else ("Q/Z" if g == "QZ" else "Z")
                          for g in self.summands) or "0"

    def hom_from_cyclic(self, d: int) -> int:
        """``#Hom(Z/d, G)``."""
        total = 1
        for g in self.summands:
            if g == "Z":
                continue
            total *= d if g == "QZ" else math.gcd(d, g)
        return total


def multiplicity_of(torsion: Iterable[int], g: GSpec) -> int:
    return math.prod(g.hom_from_cyclic(d) for d in torsion)


def multiplicity(gamma: FgAbelianGroup, s: ElementList | Iterable[Sequence[int]], g: GSpec) -> int:
    """``#Hom((gamma/<s>)_tor, G)``."""
    return multiplicity_of(quotient_invariants(gamma, s).torsion, g)


# --------------------------------------------------------------------------
# Sublist enumeration
# --------------------------------------------------------------------------


def check_subset_cap(n: int, cap: int = DEFAULT_SUBSET_CAP) -> None:
    if n > cap:
        raise ListTooLargeError(
            f"list has {n} elements; sublist enumeration is capped at {cap} (raise the subset cap)"
        )


def sublist_invariants(
    gamma: FgAbelianGroup,
    a: ElementList | Iterable[Sequence[int]],
    cap: int = DEFAULT_SUBSET_CAP,
) -> list[QuotientInvariants]:
    """Quotient invariants of ``gamma / <S>`` for every sublist, indexed by bitmask."""
    a = as_element_list(gamma, a)
    check_subset_cap(len(a), cap)
    elems = a.elements
    n = len(elems)
    return [
        quotient_invariants(gamma, [elems[i] for i in range(n) if mask >> i & 1])
        for mask in range(1 << n)
    ]


def lcm_period(
    gamma: FgAbelianGroup,
    a: ElementList | Iterable[Sequence[int]],
    cap: int = DEFAULT_SUBSET_CAP,
) -> int:
    """lcm over all sublists of the largest torsion invariant of the quotient."""
    return period_from_invariants(sublist_invariants(gamma, a, cap))


def period_from_invariants(table: Iterable[QuotientInvariants]) -> int:
    return math.lcm(*(inv.torsion[-1] if inv.torsion else 1 for inv in table))


def hom_count(gamma: FgAbelianGroup, q: int) -> int:
    """``#Hom(gamma, Z/q)``."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    return q**gamma.free_rank * math.prod(math.gcd(d, q) for d in gamma.invariant_factors)
