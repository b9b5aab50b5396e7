"""Exit criteria.  Each prints one ``criterion N PASS|FAIL`` line.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import math
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quasichrom import (  # noqa: E402
    BivariatePolynomial,
    CwInstance,
    ElementList,
    FgAbelianGroup,
    GSpec,
    IntMatrix,
    IntPolynomial,
    bm_count,
    bm_to_cw,
    chromatic_quasi,
    chromatic_quasi_dc,
    contraction,
    cw_count,
    cw_to_bm,
    deletion,
    g_tutte,
    graph_to_list,
    has_gcd_property,
    minimal_period,
    real_char_poly,
    snf,
    torsion_vanishing_check,
)

from corpus import CWS, EXAMPLE_GROUP, EXAMPLE_LIST, PAIRS  # noqa: E402
from oracles import graphic_tutte, invariant_factors_by_minors, proper_colorings  # noqa: E402

P = IntPolynomial
RESULTS: dict[int, str] = {}
TITLES = {
    1: "worked example golden values",
    2: "oracle equivalence on the pair corpus",
    3: "deletion-contraction agreement",
    4: "pair/CW count equivalence and representative independence",
    5: "gcd property and monicity",
    6: "torsion vanishing",
    7: "all-nonzero lists in elementary 2-groups",
    8: "graphical specialization",
    9: "Smith normal form kernel",
}


class CriterionFailure(AssertionError):
    pass


def expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CriterionFailure(msg)


def criterion_1() -> str:
    f = chromatic_quasi(EXAMPLE_GROUP, EXAMPLE_LIST)
    expect(f.period == 8, f"period {f.period}")
    expect(
        dict(f.stored()) == {1: P(), 2: P((0, 0, 1)), 4: P((4, -4, 3)), 8: P((12, -12, 3))},
        f"constituents {dict(f.stored())}",
    )
    g = chromatic_quasi(EXAMPLE_GROUP, EXAMPLE_LIST[:2])
    expect(
        dict(g.stored())
        == {1: P((1, -2, 1)), 2: P((4, -4, 2)), 4: P((8, -8, 4)), 8: P((16, -16, 4))},
        f"deleted-list constituents {dict(g.stored())}",
    )
    expect(real_char_poly(EXAMPLE_GROUP, EXAMPLE_LIST) == P((1, -2, 1)), "real char poly")
    return "rho=8, both lists and the real polynomial match"


def criterion_2() -> str:
    checks = 0
    for gamma, a in PAIRS:
        f = chromatic_quasi(gamma, a)
        for q in range(1, 25):
            expect(f(q) == bm_count(gamma, a, q), f"{gamma} {a.tolist()} q={q}")
            checks += 1
    return f"{len(PAIRS)} pairs, {checks} evaluations, 0 mismatches"


def criterion_3() -> str:
    constituent_checks = 0
    for gamma, a in PAIRS:
        f = chromatic_quasi(gamma, a)
        dc = chromatic_quasi_dc(gamma, a)
        expect(all(dc(q) == f(q) for q in range(1, 2 * f.period + 1)), f"dc {a.tolist()}")
        if not len(a):
            continue
        last = len(a) - 1
        f1 = chromatic_quasi(gamma, deletion(a, [last]))
        f2 = chromatic_quasi(*contraction(gamma, a, [last]))
        for k in range(1, min(f1.period, f2.period) + 1):
            expect(f.constituent(k) == f1.constituent(k) - f2.constituent(k), f"k={k} {a.tolist()}")
            constituent_checks += 1
    return f"{len(PAIRS)} pairs, {constituent_checks} constituent identities"


def _perturb(rng: random.Random, cw: CwInstance) -> CwInstance:
    rel = cw.b_vectors()
    moved = []
    for v in cw.a_vectors():
        w = list(v)
        for r in rel:
            c = rng.randint(-3, 3)
            w = [x + c * y for x, y in zip(w, r)]
        moved.append(tuple(w))
    return CwInstance.from_vectors(moved, rel, cw.ell)


def criterion_4() -> str:
    rng = random.Random(20180419)
    for gamma, a in PAIRS:
        cw, _ = bm_to_cw(gamma, a)
        back_gamma, back_a = cw_to_bm(cw)
        expect(back_gamma == gamma, f"round trip group {gamma} -> {back_gamma}")
        perturbed = [_perturb(rng, cw) for _ in range(20)]
        for q in range(1, 25):
            n = bm_count(gamma, a, q)
            expect(cw_count(cw, q) == n, f"bm->cw {a.tolist()} q={q}")
            expect(bm_count(back_gamma, back_a, q) == n, f"bm->cw->bm {a.tolist()} q={q}")
            for p in perturbed:
                expect(cw_count(p, q) == n, f"perturbed {p.to_json()} q={q}")
    for cw in CWS:
        gamma, a = cw_to_bm(cw)
        for q in range(1, 25):
            expect(bm_count(gamma, a, q) == cw_count(cw, q), f"cw->bm {cw.to_json()} q={q}")
    return f"{len(PAIRS)} pairs x 20 perturbations and {len(CWS)} CW instances, q <= 24"


def criterion_5() -> str:
    monic = 0
    for gamma, a in PAIRS:
        for f in (chromatic_quasi(gamma, a), chromatic_quasi_dc(gamma, a)):
            expect(has_gcd_property(f.expand()), f"gcd property {a.tolist()}")
        if gamma.is_free and all(any(e) for e in a):
            for _, p in chromatic_quasi(gamma, a).stored():
                expect(p.degree == gamma.free_rank and p.leading_coefficient == 1, f"monic {a.tolist()}")
            monic += 1
    return f"gcd property on {len(PAIRS)} pairs, monic on {monic} free lists without zero vectors"


def criterion_6() -> str:
    hit = 0
    for gamma, a in PAIRS:
        if any(gamma.is_torsion(e) for e in a):
            expect(torsion_vanishing_check(gamma, a), f"vanishing {a.tolist()}")
            expect(chromatic_quasi(gamma, a).constituent(1).is_zero(), f"f^1 {a.tolist()}")
            hit += 1
    f = chromatic_quasi(FgAbelianGroup(0, (2, 2)), [(0, 0), (1, 0)])
    expect(f.period == 2 and minimal_period(f) == 1, "two-element example period")
    expect(all(p.is_zero() for p in f.constituents()), "two-element example is zero")
    return f"{hit} pairs with torsion elements; the two-element example is 0 with minimal period 1"


def criterion_7() -> str:
    for ell in (2, 3):
        gamma = FgAbelianGroup(0, (2,) * ell)
        a = [e for e in itertools.product((0, 1), repeat=ell) if any(e)]
        expect(all(bm_count(gamma, a, q) == 0 for q in range(1, 17)), f"ell={ell}")
        expect(all(v == 0 for v in (chromatic_quasi(gamma, a)(q) for q in range(1, 17))), f"symbolic ell={ell}")
    cases = 0
    for d in range(2, 13):
        gamma = FgAbelianGroup(0, (d,))
        for size in range(1, 4):
            for a in itertools.combinations_with_replacement(range(1, d), size):
                elems = [(x,) for x in a]
                f = chromatic_quasi(gamma, elems)
                expect(f(f.period) > 0, f"d={d} {a}")
                expect(bm_count(gamma, elems, f.period) == f(f.period), f"oracle d={d} {a}")
                cases += 1
    return f"(Z/2)^2 and (Z/2)^3 vanish for q <= 16; {cases} cyclic lists positive at q = rho"


GRAPHS = {
    "K3": (3, [(1, 2), (2, 3), (1, 3)]),
    "K4": (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    "P4": (4, [(1, 2), (2, 3), (3, 4)]),
}


def criterion_8() -> str:
    for name, (n, edges) in GRAPHS.items():
        gamma, a = graph_to_list(n, edges)
        f = chromatic_quasi(gamma, a)
        expect(minimal_period(f) == 1, f"{name} period")
        expect(all(f(q) == proper_colorings(n, edges, q) for q in range(1, 7)), f"{name} colourings")
        expected = BivariatePolynomial.from_dict(graphic_tutte(n, edges))
        expect(g_tutte(gamma, a, GSpec.integers()) == expected, f"{name} Tutte")
    return "K3, K4, P4 colourings for q <= 6 and Tutte polynomials match"


def _random_matrix(rng: random.Random) -> list[list[int]]:
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    return [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]


def criterion_9() -> str:
    rng = random.Random(1000)
    mats = [_random_matrix(rng) for _ in range(1000)]
    start = time.perf_counter()
    results = [snf(IntMatrix.from_rows(rows)) for rows in mats]
    elapsed = time.perf_counter() - start
    for rows, res in zip(mats, results):
        m = IntMatrix.from_rows(rows)
        expect(res.u @ m @ res.v == res.diagonal_matrix(), f"U M V != D for {rows}")
        expect(abs(res.u.det()) == 1 and abs(res.v.det()) == 1, f"not unimodular for {rows}")
        nz = [d for d in res.d if d]
        expect(res.d[: len(nz)] == tuple(nz) and all(d > 0 for d in nz), f"diagonal shape {res.d}")
        expect(all(b % a == 0 for a, b in zip(nz, nz[1:])), f"divisibility {res.d}")
        expect(list(res.d) == invariant_factors_by_minors(rows), f"minor gcds for {rows}")
    expect(elapsed < 10, f"{elapsed:.2f}s")
    return f"1000 matrices, SNF time {elapsed:.2f}s"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in TITLES}


def run_criterion(n: int) -> bool:
    start = time.perf_counter()
    try:
        detail, ok = CRITERIA[n](), True
    except CriterionFailure as exc:
        detail, ok = f"mismatch: {exc}", False
    took = time.perf_counter() - start
    line = f"criterion {n} {'PASS' if ok else 'FAIL'} ({TITLES[n]}): {detail} [{took:.1f}s]"
    RESULTS[n] = line
    print(line)
    return ok


@pytest.mark.acceptance
@pytest.mark.parametrize("n", list(TITLES))
def test_criterion(n):
    assert run_criterion(n), RESULTS[n]


if __name__ == "__main__":
    sys.exit(0 if all([run_criterion(n) for n in TITLES]) else 1)
