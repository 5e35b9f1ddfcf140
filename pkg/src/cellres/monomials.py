"""Monomial labellings, vertex families, and the refinement order.

A labelling assigns one monomial to each vertex of a complex; the labels
must form a minimal generating set (none divides another) and every
variable must actually occur.  A square-free labelling with pairwise
distinct variable supports is the same data as a family of distinct
nonempty vertex subsets: variable p corresponds to the set of vertices
whose label it divides.

The refinement order on families: F is finer than G when every member of
G is a disjoint union of members of F.  Reduction removes members that
are disjoint unions of other members; on reduced families refinement is a
partial order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass


class LabellingError(ValueError):
    """Invalid monomial labelling input."""


class FamilyError(ValueError):
    """Invalid vertex family input."""


@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise LabellingError("negative exponent")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def join(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def support(self) -> frozenset:
        return frozenset(p for p, e in enumerate(self.exponents) if e)


def monomial(*exponents) -> Monomial:
    return Monomial(tuple(exponents))


@dataclass(frozen=True)
class MonomialLabelling:
    """Vertex labels m_0, ..., m_(n-1) in a fixed polynomial ring.

    Invariants enforced on construction: every label has n_variables
    exponents, no label divides another (in particular no duplicates), and
    every variable occurs in at least one label.
    """

    n_variables: int
    labels: tuple  # Monomial entries, one per vertex

    def __post_init__(self):
        for m in self.labels:
            if len(m.exponents) != self.n_variables:
                raise LabellingError(
                    f"label {m.exponents} does not have {self.n_variables} exponents")
        for i, a in enumerate(self.labels):
            for j, b in enumerate(self.labels):
                if i != j and a.divides(b):
                    raise LabellingError(
                        f"label at vertex {i} divides label at vertex {j}")
        used = set()
        for m in self.labels:
            used |= m.support()
        missing = set(range(self.n_variables)) - used
        if missing:
            raise LabellingError(f"variables {sorted(missing)} occur in no label")

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def is_squarefree(self) -> bool:
        return all(m.is_squarefree() for m in self.labels)


def labelling(n_variables: int, rows) -> MonomialLabelling:
    return MonomialLabelling(n_variables, tuple(Monomial(tuple(r)) for r in rows))


@dataclass(frozen=True)
class VertexFamily:
    """Ordered list of distinct nonempty subsets of range(n)."""

    n: int
    sets: tuple  # frozenset entries

    def __post_init__(self):
        seen = set()
        for s in self.sets:
            if not s:
                raise FamilyError("empty member set")
            if not all(isinstance(v, int) and 0 <= v < self.n for v in s):
                raise FamilyError(f"member {sorted(s)} out of range for n={self.n}")
            if s in seen:
                raise FamilyError(f"member {sorted(s)} repeated")
            seen.add(s)

    def as_set(self) -> frozenset:
        return frozenset(self.sets)

    def member_masks(self) -> list:
        return [_mask(s) for s in self.sets]

    def canonical(self) -> "VertexFamily":
        ordered = sorted(self.sets, key=lambda s: (len(s), tuple(sorted(s))))
        return VertexFamily(self.n, tuple(ordered))

    def same_family(self, other: "VertexFamily") -> bool:
        return self.n == other.n and self.as_set() == other.as_set()


def family(n: int, sets) -> VertexFamily:
    return VertexFamily(n, tuple(frozenset(s) for s in sets))


def _mask(s) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def _unmask(m: int) -> frozenset:
    out = set()
    v = 0
    while m:
        if m & 1:
            out.add(v)
        m >>= 1
        v += 1
    return frozenset(out)


def family_of(L: MonomialLabelling) -> VertexFamily:
    """Vertex family of a square-free labelling.

    Variable p maps to the set of vertices whose label it divides; empty
    sets are dropped.  Raises if the labelling is not square-free or if two
    variables cut out the same vertex set (such a labelling corresponds to
    no family).
    """
    if not L.is_squarefree():
        raise LabellingError("labelling is not square-free")
    sets = []
    seen = {}
    for p in range(L.n_variables):
        s = frozenset(v for v, m in enumerate(L.labels) if m.exponents[p])
        if not s:
            continue
        if s in seen:
            raise FamilyError(
                f"variables {seen[s]} and {p} divide exactly the same vertex labels")
        seen[s] = p
        sets.append(s)
    return VertexFamily(L.n_vertices, tuple(sets))


def labelling_of(F: VertexFamily) -> MonomialLabelling:
    """Square-free labelling with one variable per member of the family."""
    for v in range(F.n):
        if not any(v in s for s in F.sets):
            raise FamilyError(f"vertex {v} lies in no member of the family")
    rows = []
    for v in range(F.n):
        rows.append(tuple(1 if v in s else 0 for s in F.sets))
    return labelling(len(F.sets), rows)


def polarize(L: MonomialLabelling) -> MonomialLabelling:
    """Square-free labelling obtained by splitting each variable into copies.

    Variable p becomes max-exponent-many variables; an exponent k uses its
    first k copies.  New variables are ordered by (old variable, copy), so a
    square-free input is returned unchanged.  Divisibility between labels is
    preserved in both directions.
    """
    maxes = [max(m.exponents[p] for m in L.labels) for p in range(L.n_variables)]
    rows = []
    for m in L.labels:
        row = []
        for p, top in enumerate(maxes):
            e = m.exponents[p]
            row.extend([1] * e + [0] * (top - e))
        rows.append(tuple(row))
    return labelling(sum(maxes), rows)


def _exact_cover_exists(target: int, parts) -> bool:
    """Can `target` be written as a disjoint union of some of `parts`?"""
    usable = [p for p in parts if p and p & ~target == 0]

    # branch on the lowest uncovered bit: exactly one chosen part must
    # contain it, and any part of the cover may appear anywhere in the list
    def go(rest):
        if rest == 0:
            return True
        low = rest & -rest
        for p in usable:
            if p & low and p & ~rest == 0 and go(rest ^ p):
                return True
        return False

    return go(target)


def is_disjoint_union_of(target, members) -> bool:
    """True when `target` is a disjoint union of (one or more) `members`."""
    tmask = _mask(target)
    return _exact_cover_exists(tmask, [_mask(s) for s in members])


def reduce_family(F: VertexFamily) -> VertexFamily:
    """Drop members that are disjoint unions of two or more other members.

    The emptied member test is exhaustive exact cover, so the result is
    exact; reduction is idempotent.
    """
    masks = F.member_masks()
    keep = []
    for i, s in enumerate(F.sets):
        others = [m for j, m in enumerate(masks) if j != i]
        if not _exact_cover_exists(masks[i], others):
            keep.append(s)
    return VertexFamily(F.n, tuple(keep))


def refines(F: VertexFamily, G: VertexFamily) -> bool:
    """Every member of G is a disjoint union of members of F."""
    if F.n != G.n:
        raise FamilyError("families live on different vertex sets")
    fmasks = F.member_masks()
    return all(_exact_cover_exists(m, fmasks) for m in G.member_masks())


class Refinement(enum.Enum):
    FINER = "first-refines-second"
    COARSER = "second-refines-first"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def refinement_compare(F: VertexFamily, G: VertexFamily) -> Refinement:
    """Compare two families in the refinement order.

    EQUAL is reported when each refines the other; for reduced families
    that happens only when they are equal as set families.
    """
    fg = refines(F, G)
    gf = refines(G, F)
    if fg and gf:
        return Refinement.EQUAL
    if fg:
        return Refinement.FINER
    if gf:
        return Refinement.COARSER
    return Refinement.INCOMPARABLE


def morphism_exists(F: VertexFamily, G: VertexFamily) -> bool:
    """Is there a morphism from the labelling of F to the labelling of G?

    Holds exactly when every member of G is a disjoint union of members
    of F.  Both families are assumed to come from valid labellings of the
    same complex; that is not re-verified here.
    """
    return refines(F, G)


@dataclass(frozen=True)
class LcmLattice:
    n_variables: int
    points: frozenset  # exponent tuples

    def sorted_points(self) -> list:
        return sorted(self.points)

    def __len__(self) -> int:
        return len(self.points)


def lcm_lattice(L: MonomialLabelling) -> LcmLattice:
    """Smallest set of exponent vectors containing the labels and closed
    under componentwise max."""
    points = {m.exponents for m in L.labels}
    frontier = set(points)
    while frontier:
        new = set()
        for a in frontier:
            for b in points:
                j = tuple(max(x, y) for x, y in zip(a, b))
                if j not in points and j not in new:
                    new.add(j)
        points |= new
        frontier = new
    return LcmLattice(L.n_variables, frozenset(points))


def all_subsets(n: int):
    """Nonempty subsets of range(n) in (size, lexicographic) order."""
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            yield frozenset(combo)
