"""Deciding when a labelled complex resolves its ideal, and how well.

A labelled complex is a cellular resolution when every sublevel restriction
(vertices whose labels divide a fixed multidegree) is acyclic; checking the
points of the lcm lattice suffices because any multidegree sees the same
sublevel as the join of the labels dividing it.  Minimality is a strictness
condition on multidegrees along covering face pairs.  The Cohen-Macaulay
verdict additionally compares the codimension of the ideal with the length
of the resolution.

For square-free labellings everything can be phrased on the vertex family
instead: three criteria (a cover bound, acyclicity of complements of
unions, and a separation condition on covering face pairs) reproduce the
full verdict; both routes are implemented so they can be played against
each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .complexes import CellComplex, SignsMissingError, reduced_homology, restrict
from .linalg import GF2, FieldSpec, gf2_rank, matrix_rank
from .monomials import (
    FamilyError,
    LcmLattice,
    Monomial,
    MonomialLabelling,
    VertexFamily,
    lcm_lattice,
)


def f_vector(X: CellComplex) -> tuple:
    return X.f_vector()


def f_symmetry(X: CellComplex) -> bool:
    """f_i == f_(dim-1-i) below the top dimension, and a single top cell."""
    f = X.f_vector()
    if not f:
        return False
    d = len(f) - 1
    if f[d] != 1:
        return False
    return all(f[i] == f[d - 1 - i] for i in range(d))


class AcyclicityOracle:
    """Memoized acyclicity of vertex-induced restrictions of one complex.

    Queries take a vertex bitmask.  Results are cached; the cache also
    serves as the record of which restrictions a run has touched, which the
    test suite replays over other fields.  Cheap necessary conditions
    (reduced Euler characteristic, connectivity) run before any rank
    computation.
    """

    def __init__(self, X: CellComplex, field: FieldSpec = GF2):
        if field.characteristic != 2 and not X.fully_signed():
            raise SignsMissingError(
                f"acyclicity over {field.describe()} needs signed incidences")
        self.X = X
        self.field = field
        self.full_mask = (1 << X.n_vertices) - 1
        cells = []
        for c in X.cells:
            vmask = 0
            for v in c.vertices:
                vmask |= 1 << v
            cells.append((c.dim, vmask, c.boundary))
        self._cells = cells
        self._verdicts = {}

    def touched(self) -> dict:
        return dict(self._verdicts)

    def is_acyclic(self, mask: int) -> bool:
        got = self._verdicts.get(mask)
        if got is None:
            got = self._compute(mask & self.full_mask)
            self._verdicts[mask] = got
        return got

    def _compute(self, mask: int) -> bool:
        kept = [i for i, (_, vm, _) in enumerate(self._cells) if vm & ~mask == 0]
        if not kept:
            return True  # void restriction
        cells = self._cells
        by_dim = {}
        for i in kept:
            by_dim.setdefault(cells[i][0], []).append(i)
        top = max(by_dim)
        f = [len(by_dim.get(d, ())) for d in range(top + 1)]
        chi_reduced = sum((-1) ** d * fd for d, fd in enumerate(f)) - 1
        if chi_reduced != 0:
            return False
        # connectivity from the 1-skeleton
        if f[0] > 1:
            parent = {}
            for i in by_dim[0]:
                parent[i] = i
            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a
            comps = f[0]
            for i in by_dim.get(1, ()):
                ids = [b for b, _ in cells[i][2]]
                ra, rb = find(ids[0]), find(ids[1])
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
            if comps > 1:
                return False
        if top <= 1:
            # a connected graph with reduced Euler characteristic zero is a tree
            return True
        ranks = {0: 1, top + 1: 0}
        pos = {}
        for d in range(top + 1):
            for idx, i in enumerate(by_dim.get(d, ())):
                pos[i] = idx
        keep_set = set(kept)
        for d in range(1, top + 1):
            cols = by_dim.get(d, ())
            rows = by_dim.get(d - 1, ())
            if not cols or not rows:
                ranks[d] = 0
                continue
            if self.field.characteristic == 2:
                packed = []
                for i in cols:
                    bits = 0
                    for b, _ in cells[i][2]:
                        if b in keep_set:
                            bits |= 1 << pos[b]
                    packed.append(bits)
                ranks[d] = gf2_rank(packed)
            else:
                mat = [[0] * len(cols) for _ in rows]
                for j, i in enumerate(cols):
                    for b, s in cells[i][2]:
                        if b in keep_set:
                            mat[pos[b]][j] = s
                ranks[d] = matrix_rank(mat, self.field)
        for d in range(top + 1):
            if f[d] - ranks[d] - ranks[d + 1] != 0:
                return False
        return True


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def subfamily_unions(masks) -> set:
    """All unions of subfamilies, as bitmasks; includes 0 (empty union)."""
    unions = {0}
    for m in masks:
        unions |= {u | m for u in unions}
    return unions


@dataclass(frozen=True)
class FamilyCriteriaReport:
    """Outcome of the three family criteria plus the covering corollary.

    cover_bound: no dim-X-many members cover all vertices.
    complements_acyclic: for every union W of members, the restriction of
        the complex to the complement of W is acyclic.
    face_separation: every covering face pair F < G admits a member meeting
        G but not F.
    covers_vertices: the members jointly cover every vertex (implied by
        face_separation applied below the vertices; tracked separately).
    """

    cover_bound: bool
    complements_acyclic: bool
    face_separation: bool
    covers_vertices: bool
    field: str
    cover_witness: tuple = None      # member index tuple
    union_witness: frozenset = None  # union whose complement is not acyclic
    separation_witness: tuple = None  # (small cell id, big cell id)
    uncovered_vertex: int = None

    @property
    def ok(self) -> bool:
        return (self.cover_bound and self.complements_acyclic
                and self.face_separation and self.covers_vertices)


def covering_face_pairs(X: CellComplex) -> list:
    """(boundary cell id, cell id) for every codimension-1 incidence."""
    pairs = []
    for c in X.cells:
        for b, _ in c.boundary:
            pairs.append((b, c.id))
    return pairs


def check_family_criteria(X: CellComplex, F: VertexFamily,
                          field: FieldSpec = GF2,
                          oracle: AcyclicityOracle = None) -> FamilyCriteriaReport:
    """Evaluate the three validity criteria for a family on a complex."""
    if F.n != X.n_vertices:
        raise FamilyError(
            f"family on {F.n} vertices does not match complex on {X.n_vertices}")
    d = X.dim
    if d < 1:
        raise FamilyError("criteria need a complex of dimension at least 1")
    masks = F.member_masks()
    full = (1 << X.n_vertices) - 1
    oracle = oracle or AcyclicityOracle(X, field)

    # a cover by fewer than d members is still a cover by d (members may
    # repeat), so families smaller than d are tested as a whole
    cover_bound, cover_witness = True, None
    for combo in itertools.combinations(range(len(masks)), min(d, len(masks))):
        u = 0
        for i in combo:
            u |= masks[i]
        if u == full:
            cover_bound, cover_witness = False, combo
            break

    complements_acyclic, union_witness = True, None
    for u in sorted(subfamily_unions(masks)):
        if not oracle.is_acyclic(full & ~u):
            complements_acyclic, union_witness = False, set_of(u)
            break

    cell_masks = {c.id: mask_of(c.vertices) for c in X.cells}
    face_separation, separation_witness = True, None
    for b, cid in covering_face_pairs(X):
        bm, cm = cell_masks[b], cell_masks[cid]
        if not any(s & bm == 0 and s & cm for s in masks):
            face_separation, separation_witness = False, (b, cid)
            break

    covered = 0
    for m in masks:
        covered |= m
    covers_vertices = covered == full
    uncovered = None
    if not covers_vertices:
        uncovered = min(set_of(full & ~covered))

    return FamilyCriteriaReport(
        cover_bound, complements_acyclic, face_separation, covers_vertices,
        field.describe(), cover_witness, union_witness, separation_witness,
        uncovered)


def check_cellular_resolution(X: CellComplex, L: MonomialLabelling,
                              field: FieldSpec = GF2,
                              oracle: AcyclicityOracle = None):
    """(is_resolution, failing multidegree or None).

    Walks the lcm lattice; for each point b restricts the complex to the
    vertices whose labels divide b and tests acyclicity.
    """
    if L.n_vertices != X.n_vertices:
        raise FamilyError("labelling size does not match the complex")
    oracle = oracle or AcyclicityOracle(X, field)
    lattice = lcm_lattice(L)
    exps = [m.exponents for m in L.labels]
    for b in lattice.sorted_points():
        mask = 0
        for v, e in enumerate(exps):
            if all(x <= y for x, y in zip(e, b)):
                mask |= 1 << v
        if not oracle.is_acyclic(mask):
            return False, b
    return True, None


def multidegree(L: MonomialLabelling, vertices) -> Monomial:
    """Join of the labels over a set of vertices."""
    acc = None
    for v in vertices:
        m = L.labels[v]
        acc = m if acc is None else acc.join(m)
    if acc is None:
        return Monomial((0,) * L.n_variables)
    return acc


def check_minimal(X: CellComplex, L: MonomialLabelling):
    """(is_minimal, witness covering pair or None).

    Minimal means the multidegree strictly increases along every covering
    face pair; divisibility is automatic, so only equality can fail.  A
    degree-zero vertex label would be a unit entry in the first map and is
    rejected the same way (witness (None, vertex cell id)).
    """
    if L.n_vertices != X.n_vertices:
        raise FamilyError("labelling size does not match the complex")
    mdeg = {}
    for c in X.cells:
        mdeg[c.id] = multidegree(L, c.vertices).exponents
    for c in X.cells:
        if c.dim == 0:
            if sum(mdeg[c.id]) == 0:
                return False, (None, c.id)
            continue
        for b, _ in c.boundary:
            if mdeg[b] == mdeg[c.id]:
                return False, (b, c.id)
    return True, None


def _minimum_cover_size(universe: int, masks):
    """Smallest number of masks whose union contains `universe`."""
    reach = 0
    for m in masks:
        reach |= m
    if universe & ~reach:
        return None
    # greedy upper bound
    covered, best = 0, 0
    while covered & universe != universe:
        gain, pick = -1, None
        for m in masks:
            g = bin(m & universe & ~covered).count("1")
            if g > gain:
                gain, pick = g, m
        covered |= pick
        best += 1
    order = sorted(range(len(masks)), key=lambda i: -bin(masks[i]).count("1"))

    def dfs(covered, used, best):
        if covered & universe == universe:
            return used
        if used + 1 >= best:
            return best
        low = (universe & ~covered)
        low &= -low
        for i in order:
            if masks[i] & low:
                best = dfs(covered | masks[i], used + 1, best)
        return best

    return dfs(0, 0, best)


def codimension(L: MonomialLabelling) -> int:
    """Fewest variables meeting the support of every label."""
    universe = (1 << L.n_vertices) - 1
    per_var = []
    for p in range(L.n_variables):
        m = 0
        for v, lab in enumerate(L.labels):
            if lab.exponents[p]:
                m |= 1 << v
        per_var.append(m)
    size = _minimum_cover_size(universe, per_var)
    if size is None:
        raise FamilyError("some label is the unit monomial; nothing covers it")
    return size


def codimension_family(F: VertexFamily) -> int:
    """Fewest members covering all vertices."""
    universe = (1 << F.n) - 1
    size = _minimum_cover_size(universe, F.member_masks())
    if size is None:
        raise FamilyError("family does not cover the vertex set")
    return size


@dataclass(frozen=True)
class CmVerdict:
    is_cellular_resolution: bool
    is_minimal: bool
    codimension: int
    projective_dimension: int  # None unless the resolution verdict holds
    is_cm: bool
    field: str
    witness: tuple = None  # (kind, payload) for the first failure


def check_cm_labelling(X: CellComplex, L: MonomialLabelling,
                       field: FieldSpec = GF2,
                       oracle: AcyclicityOracle = None) -> CmVerdict:
    """Full verdict: resolution, minimality, codimension versus dimension."""
    oracle = oracle or AcyclicityOracle(X, field)
    res_ok, res_w = check_cellular_resolution(X, L, field, oracle)
    min_ok, min_w = check_minimal(X, L)
    codim = codimension(L)
    want = X.dim + 1
    pdim = want if res_ok else None
    is_cm = res_ok and min_ok and codim == want
    witness = None
    if not res_ok:
        witness = ("restriction-not-acyclic", res_w)
    elif not min_ok:
        witness = ("multidegree-not-strict", min_w)
    elif codim != want:
        witness = ("codimension", (codim, want))
    return CmVerdict(res_ok, min_ok, codim, pdim, is_cm, field.describe(), witness)


@dataclass(frozen=True)
class CellularFreeComplex:
    """Free complex read off a signed labelled complex.

    Homological degree 0 is the ring; degree i >= 1 has one generator per
    (i-1)-cell with multidegree the join of the cell's vertex labels.
    maps[i] sends degree i+1 to degree i; entries are None or
    (sign, exponent tuple of the quotient monomial).
    """

    n_variables: int
    multidegrees: tuple  # per degree: tuple of exponent tuples
    cell_ids: tuple      # per degree: tuple of source cell ids (None for degree 0)
    maps: tuple          # maps[i]: rows = degree-i gens, cols = degree-(i+1) gens

    def ranks(self) -> tuple:
        return tuple(len(d) for d in self.multidegrees)

    def composition_is_zero(self) -> bool:
        for A, B in zip(self.maps, self.maps[1:]):
            if not A or not B or not B[0]:
                continue
            for r in range(len(A)):
                for c in range(len(B[0])):
                    acc = 0
                    for k in range(len(B)):
                        x, y = A[r][k], B[k][c]
                        if x is not None and y is not None:
                            acc += x[0] * y[0]
                    if acc != 0:
                        return False
        return True


def build_free_complex(X: CellComplex, L: MonomialLabelling) -> CellularFreeComplex:
    """Construct the free complex of a signed labelled complex.

    Entries of the degree-1 map are the labels themselves; higher entries
    are the signed quotient monomials between the multidegrees of a cell
    and its boundary cell.  The composite of consecutive maps is verified
    to vanish.
    """
    if L.n_vertices != X.n_vertices:
        raise FamilyError("labelling size does not match the complex")
    if not X.fully_signed():
        raise SignsMissingError("free complex needs signed incidences")
    D = X.dim
    zero = (0,) * L.n_variables
    mdeg = {c.id: multidegree(L, c.vertices).exponents for c in X.cells}
    per_degree = [[None]]
    for d in range(0, D + 1):
        per_degree.append([c.id for c in X.cells_of_dim(d)])
    multidegrees = [tuple([zero])]
    for d in range(1, D + 2):
        multidegrees.append(tuple(mdeg[cid] for cid in per_degree[d]))
    maps = []
    vpos = {cid: j for j, cid in enumerate(per_degree[1])}
    first = [[None] * len(per_degree[1])]
    for j, cid in enumerate(per_degree[1]):
        first[0][j] = (1, mdeg[cid])
    maps.append(tuple(tuple(r) for r in first))
    for deg in range(2, D + 2):
        rows = per_degree[deg - 1]
        cols = per_degree[deg]
        pos = {cid: i for i, cid in enumerate(rows)}
        mat = [[None] * len(cols) for _ in rows]
        for j, cid in enumerate(cols):
            top = mdeg[cid]
            for b, s in X.cells[cid].boundary:
                quot = tuple(x - y for x, y in zip(top, mdeg[b]))
                mat[pos[b]][j] = (s, quot)
        maps.append(tuple(tuple(r) for r in mat))
    fc = CellularFreeComplex(
        L.n_variables,
        tuple(multidegrees),
        tuple([tuple([None])] + [tuple(per_degree[d]) for d in range(1, D + 2)]),
        tuple(maps),
    )
    if not fc.composition_is_zero():
        raise ValueError("free complex maps do not compose to zero")
    return fc


def strand_ranks(fc: CellularFreeComplex, b, field: FieldSpec = GF2) -> tuple:
    """Homology ranks of the degree-b strand of the free complex.

    The strand keeps the generators whose multidegree divides b; each kept
    entry contributes only its sign.
    """
    b = tuple(b)
    kept = []
    for degs in fc.multidegrees:
        kept.append([i for i, m in enumerate(degs)
                     if all(x <= y for x, y in zip(m, b))])
    nd = len(fc.multidegrees)
    ranks = [0] * (nd + 1)
    for i in range(1, nd):
        rows = kept[i - 1]
        cols = kept[i]
        if not rows or not cols:
            ranks[i] = 0
            continue
        mat = [[0] * len(cols) for _ in rows]
        A = fc.maps[i - 1]
        for rj, r in enumerate(rows):
            for cj, c in enumerate(cols):
                e = A[r][c]
                if e is not None:
                    mat[rj][cj] = e[0]
        ranks[i] = matrix_rank(mat, field)
    return tuple(len(kept[i]) - ranks[i] - ranks[i + 1] for i in range(nd))


def strand_matches_homology(fc: CellularFreeComplex, X: CellComplex, b,
                            field: FieldSpec = GF2) -> bool:
    """Cross-check: strand homology of the free complex against reduced
    homology of the sublevel restriction, degree i versus dimension i-1."""
    b = tuple(b)
    keep = set()
    for cid, m in zip(fc.cell_ids[1], fc.multidegrees[1]):
        if all(x <= y for x, y in zip(m, b)):
            keep |= X.cells[cid].vertices
    betti = reduced_homology(restrict(X, keep), field).reduced_betti
    strand = strand_ranks(fc, b, field)
    for i, h in enumerate(strand):
        if h != betti.get(i - 1, 0):
            return False
    return all(d + 1 < len(strand) for d in betti)


def strand_oracle(X: CellComplex, L: MonomialLabelling, b,
                  field: FieldSpec = GF2) -> bool:
    """Build the free complex and compare one strand against homology."""
    fc = build_free_complex(X, L)
    return strand_matches_homology(fc, X, b, field)


def corrupt_one_sign(fc: CellularFreeComplex) -> CellularFreeComplex:
    """Flip the first sign of the last map (mutation hook for tests)."""
    maps = [list(map(list, m)) for m in fc.maps]
    for m in reversed(maps):
        for row in m:
            for j, e in enumerate(row):
                if e is not None:
                    row[j] = (-e[0], e[1])
                    return replace(fc, maps=tuple(
                        tuple(tuple(r) for r in mm) for mm in maps))
    return fc
