"""Shared fixtures: the test fleet, independent naive oracles, small-group zoo."""

from __future__ import annotations

import itertools
import os
from pathlib import Path

import pytest

import centra as c

# -- naive oracles (definition-level, no bitmask shortcuts) -------------------


def naive_centralizer(G, ids):
    ids = list(ids)
    return {
        x
        for x in G.elements()
        if all(G.mul(x, s) == G.mul(s, x) for s in ids)
    }


def naive_center(G):
    return naive_centralizer(G, G.elements())


def naive_closure(G, ids):
    return naive_centralizer(G, sorted(naive_centralizer(G, ids)))


def naive_generated(G, ids):
    """Closure under all pairwise products, iterated to a fixed point."""
    cur = {0} | set(ids)
    while True:
        nxt = set(cur)
        for a in cur:
            for b in cur:
                nxt.add(G.mul(a, b))
        if nxt == cur:
            return cur
        cur = nxt


def naive_abelian_subset(G, ids):
    ids = list(ids)
    return all(G.mul(a, b) == G.mul(b, a) for a in ids for b in ids)


def commutes(G, x, y):
    return G.mul(x, y) == G.mul(y, x)


def label_set(G, S):
    return {G.label(g) for g in S}


def by_label(G, *labels):
    index = {G.labels[i]: i for i in G.elements()}
    return [index[lab] for lab in labels]


# -- extra constructions -------------------------------------------------------


def unitriangular4(p):
    """UT(4, p) acting on the p^4 column vectors; order p^6, non-F."""
    pts = list(itertools.product(range(p), repeat=4))
    idx = {v: i for i, v in enumerate(pts)}

    def perm_of(mat):
        images = []
        for v in pts:
            w = tuple(sum(mat[i][j] * v[j] for j in range(4)) % p for i in range(4))
            images.append(idx[w])
        return c.Permutation(images)

    def transvection(i, j):
        m = [[1 if a == b else 0 for b in range(4)] for a in range(4)]
        m[i][j] = 1
        return m

    gens = [perm_of(transvection(0, 1)), perm_of(transvection(1, 2)), perm_of(transvection(2, 3))]
    return c.group_from_generators(gens, name=f"UT4({p})")


# -- fixtures ------------------------------------------------------------------


@pytest.fixture(scope="session")
def d8():
    return c.builtin_group("dihedral", 8)


@pytest.fixture(scope="session")
def q8():
    return c.builtin_group("quaternion8")


@pytest.fixture(scope="session")
def s3():
    return c.builtin_group("symmetric", 3)


@pytest.fixture(scope="session")
def s4():
    return c.builtin_group("symmetric", 4)


@pytest.fixture(scope="session")
def h3():
    return c.builtin_group("heisenberg", 3)


@pytest.fixture(scope="session")
def fleet(d8, q8, h3):
    """The p-group test fleet.

    UT4(2) is the non-F member whose centralizer-graph degrees have mixed
    residues; the direct products are non-F but residue-uniform.
    """
    c2 = c.builtin_group("cyclic", 2)
    h5 = c.builtin_group("heisenberg", 5)
    return {
        "D8": d8,
        "Q8": q8,
        "D16": c.builtin_group("dihedral", 16),
        "H3": h3,
        "H5": h5,
        "D8xC2": c.direct_product(d8, c2),
        "D8xD8": c.direct_product(d8, d8),
        "H3xH3": c.direct_product(h3, h3),
        "UT4_2": unitriangular4(2),
    }


@pytest.fixture(scope="session")
def small_groups(d8, q8, s3):
    """All 14 isomorphism types of order <= 8."""
    cy = lambda n: c.builtin_group("cyclic", n)
    c2 = cy(2)
    return {
        "C1": cy(1),
        "C2": c2,
        "C3": cy(3),
        "C4": cy(4),
        "V4": c.direct_product(c2, c2),
        "C5": cy(5),
        "C6": cy(6),
        "S3": s3,
        "C7": cy(7),
        "C8": cy(8),
        "C4xC2": c.direct_product(cy(4), c2),
        "C2xC2xC2": c.direct_product(c.direct_product(c2, c2), c2),
        "D8": d8,
        "Q8": q8,
    }


SG37_261_ENV = "CENTRA_SG37_261"


def load_smallgroup_3_7_261():
    """SmallGroup(2187, 261), if a table or generator file was provided
    (env CENTRA_SG37_261 or tests/data/); None otherwise."""
    candidates = []
    env = os.environ.get(SG37_261_ENV)
    if env:
        candidates.append(Path(env))
    data = Path(__file__).parent / "data"
    candidates.append(data / "smallgroup_3_7_261.tbl")
    candidates.append(data / "smallgroup_3_7_261.gens")
    for path in candidates:
        if path.is_file():
            if path.suffix == ".gens":
                return c.group_from_generator_file(path)
            return c.group_from_cayley_table(path)
    return None


@pytest.fixture(scope="session")
def sg37_261():
    return load_smallgroup_3_7_261()
