"""Brute-force counters used as ground truth.

Nothing here uses the symbolic machinery: homomorphisms and residue vectors
are enumerated with a mixed-radix counter and tested one by one.  The sweep
is vectorized with numpy in blocks, but each candidate is still checked
individually.  Exceeding the enumeration cap raises; counts are never
approximated.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .abelian import DEFAULT_SUBSET_CAP, ElementList, FgAbelianGroup, IntMatrix, as_element_list
from .errors import EnumerationTooLargeError
from .quasipoly import QuasiPolynomial
from .transforms import CwInstance
from .tutte import chromatic_quasi

DEFAULT_ENUM_CAP = 10**7
_BLOCK = 1 << 16
_INT64_SAFE = 1 << 62


def _check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise EnumerationTooLargeError(
            f"{what} needs {size} candidates; enumeration is capped at {cap} (raise the enum cap)"
        )


def _blocks(choices: Sequence[np.ndarray], dtype) -> Iterator[np.ndarray]:
    """All tuples of the product of ``choices`` as row blocks, in mixed-radix order."""
    n = len(choices)
    if n == 0:
        yield np.zeros((1, 0), dtype=dtype)
        return
    split, inner = n, 1
    while split > 0 and inner * len(choices[split - 1]) <= _BLOCK:
        split -= 1
        inner *= len(choices[split])
    tail = [np.asarray(c, dtype=dtype) for c in choices[split:]]
    if tail:
        grid = np.stack([g.ravel() for g in np.meshgrid(*tail, indexing="ij")], axis=1)
    else:
        grid = np.zeros((1, 0), dtype=dtype)
    for prefix in itertools.product(*(list(c) for c in choices[:split])):
        head = np.broadcast_to(np.asarray(prefix, dtype=dtype), (grid.shape[0], split))
        yield np.concatenate([head, grid], axis=1)


def _sweep(
    choices: Sequence[np.ndarray],
    q: int,
    nonzero: Sequence[Sequence[int]],
    zero: Sequence[Sequence[int]] = (),
) -> int:
    """Count tuples ``x`` with ``x . v != 0 (mod q)`` for ``v`` in ``nonzero``
    and ``x . w = 0 (mod q)`` for ``w`` in ``zero``."""
    n = len(choices)
    safe = n * q * q < _INT64_SAFE
    dtype = np.int64 if safe else object
    a = np.array([[c % q for c in v] for v in nonzero], dtype=dtype).reshape(len(nonzero), n)
    b = np.array([[c % q for c in w] for w in zero], dtype=dtype).reshape(len(zero), n)
    count = 0
    for block in _blocks(choices, dtype):
        ok = np.ones(block.shape[0], dtype=bool)
        if len(nonzero):
            ok &= np.all((block @ a.T) % q != 0, axis=1)
        if len(zero):
            ok &= np.all((block @ b.T) % q == 0, axis=1)
        count += int(np.count_nonzero(ok))
    return count


def _hom_choices(gamma: FgAbelianGroup, q: int) -> list[np.ndarray]:
    out = [np.arange(q) for _ in range(gamma.free_rank)]
    for d in gamma.invariant_factors:
        g = math.gcd(d, q)
        out.append(np.arange(g) * (q // g))
    return out


def bm_count(
    gamma: FgAbelianGroup,
    a: ElementList | Iterable[Sequence[int]],
    q: int,
    cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """``#{phi in Hom(gamma, Z/q) : phi(alpha) != 0 for all alpha in a}``."""
    a = as_element_list(gamma, a)
    if q < 1:
        raise ValueError("q must be a positive integer")
    choices = _hom_choices(gamma, q)
    _check_cap(math.prod(len(c) for c in choices), cap, f"Hom({gamma}, Z/{q})")
    return _sweep(choices, q, a.elements)


def hom_enumeration_count(gamma: FgAbelianGroup, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Count generator images in ``(Z/q)^n`` that respect every torsion relation."""
    n = gamma.ngens
    _check_cap(q**n, cap, f"(Z/{q})^{n}")
    relations = gamma.relation_columns()
    return _sweep([np.arange(q)] * n, q, (), relations)


def cw_count(cw: CwInstance, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """``#{z in (Z/q)^ell : z.A entrywise nonzero, z.B = 0}``."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    _check_cap(q**cw.ell, cap, f"(Z/{q})^{cw.ell}")
    return _sweep([np.arange(q)] * cw.ell, q, cw.a_vectors(), cw.b_vectors())


def ktt_count(a: IntMatrix, ell: int, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    return cw_count(CwInstance(a, IntMatrix.zeros(ell, 0), ell), q, cap)


@dataclass(frozen=True)
class VerifyRow:
    q: int
    oracle: int
    symbolic: int

    @property
    def ok(self) -> bool:
        return self.oracle == self.symbolic

    def __str__(self) -> str:
        return f"q={self.q} oracle={self.oracle} symbolic={self.symbolic} {'PASS' if self.ok else 'FAIL'}"


@dataclass(frozen=True)
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[VerifyRow]:
        return [r for r in self.rows if not r.ok]

    def lines(self) -> list[str]:
        return [str(r) for r in self.rows]


def verify(
    gamma: FgAbelianGroup,
    a: ElementList | Iterable[Sequence[int]],
    q_max: int,
    symbolic: QuasiPolynomial | None = None,
    enum_cap: int = DEFAULT_ENUM_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> VerifyReport:
    """Compare brute-force counts with a quasi-polynomial for ``q = 1..q_max``.

    ``symbolic`` defaults to the chromatic quasi-polynomial of the pair.
    """
    a = as_element_list(gamma, a)
    if symbolic is None:
        symbolic = chromatic_quasi(gamma, a, subset_cap)
    return VerifyReport(
        [VerifyRow(q, bm_count(gamma, a, q, enum_cap), symbolic(q)) for q in range(1, q_max + 1)]
    )
