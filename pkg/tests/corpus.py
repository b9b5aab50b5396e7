"""Fixed, seeded corpora shared by the property and acceptance tests."""

from __future__ import annotations

import random

from quasichrom import CwInstance, ElementList, FgAbelianGroup

TORSION_CHOICES = (2, 3, 4, 6)


def pair_corpus(n_pairs: int = 240, seed: int = 20180419) -> list[tuple[FgAbelianGroup, ElementList]]:
    """Pairs with free rank <= 2, at most one torsion factor, #A <= 4, coordinates in [-4, 4]."""
    rng = random.Random(seed)
    out = []
    while len(out) < n_pairs:
        r = rng.randint(0, 2)
        tor = () if rng.random() < 0.35 else (rng.choice(TORSION_CHOICES),)
        if r + len(tor) == 0:
            continue
        gamma = FgAbelianGroup(r, tor)
        size = rng.randint(0, 4)
        elems = [tuple(rng.randint(-4, 4) for _ in range(gamma.ngens)) for _ in range(size)]
        out.append((gamma, ElementList(gamma, tuple(elems))))
    return out


def cw_corpus(n: int = 80, seed: int = 7) -> list[CwInstance]:
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        ell = rng.randint(1, 3)
        a = [tuple(rng.randint(-4, 4) for _ in range(ell)) for _ in range(rng.randint(0, 3))]
        b = [tuple(rng.randint(-4, 4) for _ in range(ell)) for _ in range(rng.randint(0, 2))]
        out.append(CwInstance.from_vectors(a, b, ell))
    return out


PAIRS = pair_corpus()
CWS = cw_corpus()

EXAMPLE_GROUP = FgAbelianGroup(2, (4,))
EXAMPLE_LIST = ((2, 2, 1), (0, 2, 3), (0, 0, 3))
