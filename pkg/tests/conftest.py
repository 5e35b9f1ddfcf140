"""Shared fixtures: reference complexes, family catalogues, tree inventory."""

import pytest

from cellres.constructions import subdivided_polygon
from cellres.search import (
    SearchSpace,
    enumerate_maximal_families,
    enumerate_valid_families,
)

TWO_CHORDS = ((1, 5), (3, 5))


@pytest.fixture(scope="session")
def hexagon_two_chords():
    return subdivided_polygon(6, TWO_CHORDS)


@pytest.fixture(scope="session")
def hexagon_valid_families(hexagon_two_chords):
    return enumerate_valid_families(hexagon_two_chords,
                                    SearchSpace(max_candidates=60))


@pytest.fixture(scope="session")
def hexagon_maximal_families(hexagon_two_chords):
    return enumerate_maximal_families(hexagon_two_chords,
                                      SearchSpace(max_candidates=60))


# ---------------------------------------------------------------------------
# tree inventory, one representative per isomorphism class


def ahu_form(n, edges):
    """Canonical form of a free tree: subtree encoding rooted at the centre."""
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    alive = set(range(n))
    deg = {v: len(adj[v]) for v in range(n)}
    while len(alive) > 2:
        leaves = [v for v in alive if deg[v] <= 1]
        for v in leaves:
            alive.remove(v)
            for w in adj[v]:
                if w in alive:
                    deg[w] -= 1

    def encode(v, parent):
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, None) for c in alive)


def nonisomorphic_trees(n):
    """Edge sets, one representative per isomorphism class of trees on [n].

    Built by attaching a fresh leaf to every vertex of every smaller
    representative; every tree arises this way because every tree has a
    leaf.  Deduplicated by the canonical form above.
    """
    if n == 1:
        return [frozenset()]
    reps, seen = [], set()
    for smaller in nonisomorphic_trees(n - 1):
        for v in range(n - 1):
            edges = frozenset(smaller | {(v, n - 1)})
            form = ahu_form(n, edges)
            if form not in seen:
                seen.add(form)
                reps.append(edges)
    return reps


@pytest.fixture(scope="session")
def tree_inventory():
    """n -> tree representatives for 2 <= n <= 8, with class counts pinned."""
    inv = {n: nonisomorphic_trees(n) for n in range(2, 9)}
    assert [len(inv[n]) for n in range(2, 9)] == [1, 1, 2, 3, 6, 11, 23]
    return inv
