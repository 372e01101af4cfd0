"""Polytopes of perfectly matchable vertex sets.

The polytope of a graph is the convex hull of the indicator vectors of its
perfectly matchable vertex sets (the empty set included).  This module
enumerates the lattice points, emits the known inequality description with
per-row facet flags, normalizes away the affine hull, and decides geometric
properties (facet ranks, Gorenstein interior vectors, dilate decompositions)
in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import (
    DegeneratePointSetError,
    DisconnectedError,
    InconsistentFacetsError,
    NotAFacetError,
    NotBipartiteError,
    TooLargeError,
)
from .graph import (
    Graph,
    bipartition,
    cut_vertex_mask,
    is_connected,
    mask_components,
    mask_is_bipartite,
    mask_is_connected,
    mask_neighborhood,
    mask_vertices,
)
from .intlattice import (
    affine_rank,
    as_integer_vector,
    dot,
    hnf_rows,
    lattice_coordinates,
    primitivize,
    solve_unique_rational,
)
from .matchable import matchable_subsets, mask_perfectly_matchable

DILATE_VERTEX_LIMIT = 10


@dataclass(frozen=True)
class AffineLattice:
    """Affine lattice `origin + Z-span(basis)` with a Hermite basis."""

    ambient_n: int
    origin: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_points(cls, points) -> "AffineLattice":
        pts = list(points)
        if not pts:
            raise DegeneratePointSetError("no points to span a lattice")
        origin = tuple(pts[0])
        basis: list[tuple[int, ...]] = []
        pivots: list[int] = []
        for p in pts[1:]:
            diff = [x - o for x, o in zip(p, origin)]
            if lattice_coordinates(basis, pivots, diff) is None:
                basis_rows = [list(r) for r in basis] + [diff]
                new_basis, new_pivots = hnf_rows(basis_rows)
                basis, pivots = new_basis, new_pivots
        return cls(len(origin), origin, tuple(basis), tuple(pivots))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, point) -> tuple[int, ...] | None:
        diff = [x - o for x, o in zip(point, self.origin)]
        coords = lattice_coordinates(self.basis, self.pivots, diff)
        return None if coords is None else tuple(coords)

    def contains(self, point) -> bool:
        return self.coordinates(point) is not None

    def to_ambient(self, coords) -> tuple[int, ...]:
        out = list(self.origin)
        for c, row in zip(coords, self.basis):
            if c:
                for i, x in enumerate(row):
                    out[i] += c * x
        return tuple(out)


@dataclass(frozen=True)
class PointSet:
    """Lattice points of a polytope plus the affine lattice they span."""

    ambient_n: int
    points: tuple[tuple[int, ...], ...]
    lattice: AffineLattice

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "ambient_dimension": self.ambient_n,
            "count": len(self.points),
            "points": [list(p) for p in self.points],
        }


@dataclass(frozen=True)
class AffineInequality:
    """One inequality `normal . x <= rhs` with a criterion-derived facet flag."""

    normal: tuple[int, ...]
    rhs: int
    facet: bool
    source: str

    def value(self, point) -> int:
        return dot(self.normal, point)

    def to_json(self) -> dict:
        return {
            "normal": list(self.normal),
            "rhs": self.rhs,
            "facet": self.facet,
            "source": self.source,
        }


@dataclass(frozen=True)
class NormalizationMap:
    """Invertible affine map between ambient and full-dimensional coordinates.

    `coordinate-drop` removes the last coordinate of a connected bipartite
    graph (the balance equality makes it redundant); `lattice-basis` rewrites
    points in Hermite-basis coordinates of the lattice they span.
    """

    kind: str
    ambient_n: int
    dropped: int | None = None
    plus_mask: int = 0
    minus_mask: int = 0
    origin: tuple[int, ...] = ()
    basis: tuple[tuple[int, ...], ...] = ()
    pivots: tuple[int, ...] = ()

    def _balance_value(self, reduced) -> int:
        total = 0
        for i, x in enumerate(reduced):
            bit = 1 << i
            if self.plus_mask & bit:
                total += x
            elif self.minus_mask & bit:
                total -= x
        return total

    def to_normalized(self, point) -> tuple[int, ...] | None:
        if self.kind == "coordinate-drop":
            reduced = tuple(point[:-1])
            if point[-1] != self._balance_value(reduced):
                return None
            return reduced
        diff = [x - o for x, o in zip(point, self.origin)]
        coords = lattice_coordinates(self.basis, self.pivots, diff)
        return None if coords is None else tuple(coords)

    def to_ambient(self, reduced) -> tuple[int, ...]:
        if self.kind == "coordinate-drop":
            return tuple(reduced) + (self._balance_value(reduced),)
        out = list(self.origin)
        for c, row in zip(reduced, self.basis):
            if c:
                for i, x in enumerate(row):
                    out[i] += c * x
        return tuple(out)

    def transport(self, normal, rhs: int) -> tuple[tuple[int, ...], int]:
        """Rewrite an ambient inequality in normalized coordinates."""
        if self.kind == "coordinate-drop":
            last = normal[-1]
            out = []
            for i, a in enumerate(normal[:-1]):
                bit = 1 << i
                if self.plus_mask & bit:
                    out.append(a + last)
                elif self.minus_mask & bit:
                    out.append(a - last)
                else:
                    out.append(a)
            return tuple(out), rhs
        out = tuple(dot(normal, row) for row in self.basis)
        return out, rhs - dot(normal, self.origin)


@dataclass(frozen=True)
class NormalizedPolytope:
    """Full-dimensional model of the polytope after removing its affine hull."""

    dim: int
    points: tuple[tuple[int, ...], ...]
    facets: tuple[AffineInequality, ...]
    transform: NormalizationMap


@dataclass(frozen=True)
class GorensteinCertificate:
    """Dilation index and the unique interior lattice vector witnessing it."""

    index: int
    interior_point: tuple[int, ...]
    interior_point_ambient: tuple[int, ...]
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "interior_point": list(self.interior_point),
            "interior_point_ambient": list(self.interior_point_ambient),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class DilateCheck:
    """Outcome of one dilate decomposition sweep."""

    k: int
    mode: str
    ok: bool
    witness: tuple[int, ...] | None
    dilate_point_count: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "mode": self.mode,
            "ok": self.ok,
            "witness": None if self.witness is None else list(self.witness),
            "dilate_point_count": self.dilate_point_count,
        }


@dataclass(frozen=True)
class FacetCheckEntry:
    source: str
    criterion: bool
    geometric: bool
    valid: bool

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "criterion": self.criterion,
            "geometric": self.geometric,
            "valid": self.valid,
        }


@dataclass(frozen=True)
class FacetCheckReport:
    dimension: int
    checked: int
    disagreements: tuple[FacetCheckEntry, ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "checked": self.checked,
            "ok": self.ok,
            "disagreements": [e.to_json() for e in self.disagreements],
        }


def lattice_points(g: Graph) -> PointSet:
    """All lattice points of the polytope: indicators of matchable sets."""
    family = matchable_subsets(g)
    n = g.n
    pts = tuple(
        tuple(1 if s.mask >> i & 1 else 0 for i in range(n)) for s in family.subsets
    )
    return PointSet(n, pts, AffineLattice.from_points(pts))


def dimension(g: Graph) -> int:
    """Dimension of the polytope: n minus the number of bipartite components."""
    bip = 0
    seen = 0
    for v in range(1, g.n + 1):
        bit = 1 << (v - 1)
        if seen & bit:
            continue
        comp = _component_mask(g.adj_masks, bit, g.full_mask)
        seen |= comp
        if mask_is_bipartite(g.adj_masks, comp):
            bip += 1
    return g.n - bip


def _component_mask(adj_masks, start_bit: int, full: int) -> int:
    comp = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        for v in mask_vertices(frontier):
            nxt |= adj_masks[v]
        frontier = nxt & full & ~comp
        comp |= frontier
    return comp


def _indicator(mask: int, n: int) -> tuple[int, ...]:
    return tuple(1 if mask >> i & 1 else 0 for i in range(n))


def _proper_nonempty_submasks(mask: int) -> list[int]:
    subs = []
    sub = (mask - 1) & mask
    while sub:
        subs.append(sub)
        sub = (sub - 1) & mask
    subs.sort(key=lambda m: (m.bit_count(), m))
    return subs


def _bipartite_system(g: Graph) -> list[AffineInequality]:
    v1, v2 = bipartition(g)
    v1m, v2m = v1.mask, v2.mask
    n = g.n
    cuts = cut_vertex_mask(g)
    rows: list[AffineInequality] = []
    for v in range(1, n + 1):
        normal = tuple(-1 if i == v - 1 else 0 for i in range(n))
        facet = n > 1 and not (cuts >> (v - 1)) & 1
        rows.append(AffineInequality(normal, 0, facet, f"NonNeg({v})"))
    for v in range(1, n + 1):
        normal = tuple(1 if i == v - 1 else 0 for i in range(n))
        if n == 1:
            facet = False
        elif g.edge_count == 1:
            facet = True
        else:
            facet = g.degree(v) >= 2
        rows.append(AffineInequality(normal, 1, facet, f"UpperOne({v})"))
    for sub in _proper_nonempty_submasks(v1m):
        gam = mask_neighborhood(g.adj_masks, sub)
        normal = tuple(
            1 if sub >> i & 1 else (-1 if gam >> i & 1 else 0) for i in range(n)
        )
        rest = (v1m & ~sub) | (v2m & ~gam)
        facet = mask_is_connected(g.adj_masks, sub | gam) and mask_is_connected(
            g.adj_masks, rest
        )
        members = ",".join(str(v) for v in mask_vertices(sub))
        rows.append(AffineInequality(normal, 0, facet, f"BipartiteCut({members})"))
    balance = tuple(1 if v1m >> i & 1 else -1 for i in range(n))
    rows.append(AffineInequality(balance, 0, False, "Balance(upper)"))
    rows.append(
        AffineInequality(tuple(-a for a in balance), 0, False, "Balance(lower)")
    )
    return rows


def _odd_set_candidates(g: Graph) -> list[int]:
    """Vertex sets whose induced components are single vertices or odd nonbipartite."""
    adj = g.adj_masks
    out = []
    for mask in range(1, 1 << g.n):
        ok = True
        for comp in mask_components(adj, mask):
            if comp.bit_count() == 1:
                continue
            if comp.bit_count() % 2 == 0 or mask_is_bipartite(adj, comp):
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def _connected_after_internal_deletion(adj_masks, s_mask: int, gam: int) -> bool:
    """Connectivity of the induced graph on S and its neighborhood, with the
    edges inside the neighborhood removed."""
    allowed = s_mask | gam
    start = allowed & -allowed
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for v in mask_vertices(frontier):
            reach = adj_masks[v] & (s_mask if (gam >> (v - 1)) & 1 else allowed)
            nxt |= reach
        frontier = nxt & ~comp
        comp |= frontier
    return comp == allowed


def _odd_component_critical(adj_masks, comp: int, memo: dict[int, bool]) -> bool:
    if comp.bit_count() == 1:
        return True
    for v in mask_vertices(comp):
        if not mask_perfectly_matchable(adj_masks, comp & ~(1 << (v - 1)), memo):
            return False
    return True


def _nonbipartite_system(g: Graph, pts: PointSet) -> list[AffineInequality]:
    n = g.n
    adj = g.adj_masks
    full = g.full_mask
    masks = [sum(1 << i for i, x in enumerate(p) if x) for p in pts.points]
    rows: list[AffineInequality] = []
    for v in range(1, n + 1):
        bit = 1 << (v - 1)
        lower = tuple(-1 if i == v - 1 else 0 for i in range(n))
        active = [p for m, p in zip(masks, pts.points) if not m & bit]
        facet = len(active) < len(pts.points) and affine_rank(active) == n - 1
        rows.append(AffineInequality(lower, 0, facet, f"NonNeg({v})"))
    for v in range(1, n + 1):
        bit = 1 << (v - 1)
        upper = tuple(1 if i == v - 1 else 0 for i in range(n))
        active = [p for m, p in zip(masks, pts.points) if m & bit]
        facet = bool(active) and len(active) < len(pts.points) and affine_rank(
            active
        ) == n - 1
        rows.append(AffineInequality(upper, 1, facet, f"UpperOne({v})"))
    memo: dict[int, bool] = {}
    for s_mask in _odd_set_candidates(g):
        comps = mask_components(adj, s_mask)
        gam = mask_neighborhood(adj, s_mask) & ~s_mask
        rhs = s_mask.bit_count() - len(comps)
        normal = tuple(
            1 if s_mask >> i & 1 else (-1 if gam >> i & 1 else 0) for i in range(n)
        )
        facet = all(_odd_component_critical(adj, c, memo) for c in comps)
        if facet:
            outside = full & ~(s_mask | gam)
            facet = all(
                not mask_is_bipartite(adj, c) for c in mask_components(adj, outside)
            )
        if facet:
            facet = _connected_after_internal_deletion(adj, s_mask, gam)
        members = ",".join(str(v) for v in mask_vertices(s_mask))
        rows.append(AffineInequality(normal, rhs, facet, f"OddSet({members})"))
    return rows


def inequality_system(g: Graph, pts: PointSet | None = None) -> tuple[AffineInequality, ...]:
    """Complete inequality description of the polytope with facet flags.

    Connected graphs only.  Bipartite graphs get bound rows, one row per
    proper nonempty subset of the first color class, and the balance pair;
    nonbipartite graphs get bound rows (flagged geometrically) and one row
    per admissible odd vertex set.
    """
    if not is_connected(g):
        raise DisconnectedError("inequality systems are defined per connected graph")
    if g.n > 20:
        raise TooLargeError(f"inequality system enumeration capped at 20 vertices, got {g.n}")
    if bipartition(g) is not None:
        return tuple(_bipartite_system(g))
    if pts is None:
        pts = lattice_points(g)
    return tuple(_nonbipartite_system(g, pts))


def membership(system, point, k: int = 1) -> bool:
    """Whether a point satisfies every inequality of the k-th dilate."""
    return all(ineq.value(point) <= k * ineq.rhs for ineq in system)


def facet_levels(pts: PointSet, ineq: AffineInequality) -> tuple[int, ...]:
    """Distinct values of normal . x - rhs over the lattice points, ascending.

    Every level is <= 0, and a facet row always realises level 0.
    """
    if not ineq.facet:
        raise NotAFacetError(f"row {ineq.source} is not flagged as a facet")
    return tuple(sorted({ineq.value(p) - ineq.rhs for p in pts.points}))


def _geometric_facet_flags(points, dim: int, rows) -> list[bool]:
    flags = []
    for normal, rhs in rows:
        values = [dot(normal, p) for p in points]
        if max(values) > rhs:
            raise InconsistentFacetsError(
                f"inequality {normal} <= {rhs} is violated by a lattice point"
            )
        active = [p for p, v in zip(points, values) if v == rhs]
        flags.append(
            bool(active)
            and len(active) < len(points)
            and affine_rank(active) == dim - 1
        )
    return flags


def verify_facet_flags(g: Graph) -> FacetCheckReport:
    """Compare criterion facet flags against exact active-set ranks."""
    pts = lattice_points(g)
    system = inequality_system(g, pts)
    dim = pts.lattice.rank
    disagreements = []
    for ineq in system:
        values = [ineq.value(p) for p in pts.points]
        valid = max(values) <= ineq.rhs
        if valid:
            active = [p for p, v in zip(pts.points, values) if v == ineq.rhs]
            geometric = (
                bool(active)
                and len(active) < len(pts.points)
                and affine_rank(active) == dim - 1
            )
        else:
            geometric = False
        if not valid or geometric != ineq.facet:
            disagreements.append(
                FacetCheckEntry(ineq.source, ineq.facet, geometric, valid)
            )
    return FacetCheckReport(dim, len(system), tuple(disagreements))


def _transport_flagged(system, transform) -> tuple[list[tuple[tuple[int, ...], int]], list[str], list[bool]]:
    """Transport all rows, primitivize, and merge coincident ones.

    Returns unique (normal, rhs) rows, merged source strings, and criterion
    flags.  Zero rows (the balance pair after a coordinate drop) are removed;
    coincident rows with conflicting flags raise.
    """
    merged: dict[tuple[tuple[int, ...], int], tuple[str, bool]] = {}
    for ineq in system:
        normal, rhs = transform.transport(ineq.normal, ineq.rhs)
        if not any(normal):
            if rhs < 0:
                raise InconsistentFacetsError(
                    f"row {ineq.source} became infeasible after normalization"
                )
            continue
        normal, rhs = primitivize(normal, rhs)
        key = (normal, rhs)
        if key in merged:
            source, flag = merged[key]
            if flag != ineq.facet:
                raise InconsistentFacetsError(
                    f"coincident rows with conflicting facet flags: {source} vs {ineq.source}"
                )
            merged[key] = (f"{source}|{ineq.source}", flag)
        else:
            merged[key] = (ineq.source, ineq.facet)
    rows = list(merged)
    sources = [merged[k][0] for k in rows]
    flags = [merged[k][1] for k in rows]
    return rows, sources, flags


def bipartite_projection(
    g: Graph, pts: PointSet | None = None, system=None
) -> NormalizedPolytope:
    """Drop the last coordinate of a connected bipartite graph's polytope.

    The balance equality recovers the dropped coordinate, so this is a lattice
    isomorphism onto a full-dimensional polytope.
    """
    sides = bipartition(g)
    if sides is None:
        raise NotBipartiteError("coordinate-drop normalization needs a bipartite graph")
    if not is_connected(g):
        raise DisconnectedError("coordinate-drop normalization needs a connected graph")
    if pts is None:
        pts = lattice_points(g)
    if system is None:
        system = inequality_system(g, pts)
    n = g.n
    v1m, v2m = sides[0].mask, sides[1].mask
    last = 1 << (n - 1)
    plus = v2m if v1m & last else v1m
    minus = (v1m if v1m & last else v2m) & ~last
    transform = NormalizationMap(
        kind="coordinate-drop",
        ambient_n=n,
        dropped=n,
        plus_mask=plus,
        minus_mask=minus,
    )
    points = tuple(p[:-1] for p in pts.points)
    rows, sources, flags = _transport_flagged(system, transform)
    facets = tuple(
        AffineInequality(normal, rhs, True, source)
        for (normal, rhs), source, flag in zip(rows, sources, flags)
        if flag
    )
    return NormalizedPolytope(n - 1, points, facets, transform)


def normalize_lattice(pts: PointSet, system) -> NormalizedPolytope:
    """Rewrite the polytope in coordinates of the lattice its points span."""
    if len(pts.points) < 2:
        raise DegeneratePointSetError("need at least two points to normalize")
    lat = pts.lattice
    transform = NormalizationMap(
        kind="lattice-basis",
        ambient_n=pts.ambient_n,
        origin=lat.origin,
        basis=lat.basis,
        pivots=lat.pivots,
    )
    points = []
    for p in pts.points:
        coords = transform.to_normalized(p)
        if coords is None:
            raise DegeneratePointSetError("point outside its own spanning lattice")
        points.append(coords)
    rows, sources, flags = _transport_flagged(system, transform)
    facets = tuple(
        AffineInequality(normal, rhs, True, source)
        for (normal, rhs), source, flag in zip(rows, sources, flags)
        if flag
    )
    return NormalizedPolytope(lat.rank, tuple(points), facets, transform)


def gorenstein_geometric(g: Graph) -> GorensteinCertificate | None:
    """Search for the dilation index and interior vector by exact solving.

    Works in normalized (full-dimensional, point-lattice) coordinates.  Facet
    rows are selected geometrically and cross-checked against the criterion
    flags; a mismatch raises InconsistentFacetsError.  Returns None when no
    dilation up to dim+1 has a valid interior lattice vector.
    """
    if not is_connected(g):
        raise DisconnectedError("the geometric decision procedure needs a connected graph")
    pts = lattice_points(g)
    if len(pts.points) == 1:
        return GorensteinCertificate(1, (), pts.points[0], degenerate=True)
    system = inequality_system(g, pts)
    if bipartition(g) is not None:
        norm = bipartite_projection(g, pts, system)
    else:
        norm = normalize_lattice(pts, system)
    dim = norm.dim
    rows, sources, flags = _transport_flagged(system, norm.transform)
    geometric = _geometric_facet_flags(norm.points, dim, rows)
    for (normal, rhs), source, flag, geo in zip(rows, sources, flags, geometric):
        if flag != geo:
            raise InconsistentFacetsError(
                f"facet flag mismatch for {source}: criterion={flag}, geometric={geo}"
            )
    facet_rows = [row for row, geo in zip(rows, geometric) if geo]
    normals = [row[0] for row in facet_rows]
    for index in range(1, dim + 2):
        rhs_vec = [index * rhs - 1 for _, rhs in facet_rows]
        alpha = as_integer_vector(solve_unique_rational(normals, rhs_vec))
        if alpha is None:
            continue
        if all(dot(normal, alpha) < index * rhs for normal, rhs in rows):
            return GorensteinCertificate(
                index, alpha, norm.transform.to_ambient(alpha)
            )
    return None


_BOX_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _box_points(n: int, k: int) -> np.ndarray:
    key = (n, k)
    if key not in _BOX_CACHE:
        _BOX_CACHE[key] = np.array(
            list(product(range(k + 1), repeat=n)), dtype=np.int64
        )
    return _BOX_CACHE[key]


def idp_check(g: Graph, k: int, mode: str = "idp") -> DilateCheck:
    """Check that every lattice point of the k-th dilate splits into k points.

    Mode "idp" ranges over all integer points of the dilate; mode "normality"
    restricts to the lattice spanned by the polytope's own points.  The
    witness, when present, is the lexicographically first indecomposable
    point.
    """
    if mode not in ("idp", "normality"):
        raise ValueError(f"unknown mode {mode!r}")
    if k not in (2, 3):
        raise ValueError("dilate checks support k = 2 or 3")
    if not is_connected(g):
        raise DisconnectedError("dilate checks need a connected graph")
    if g.n > DILATE_VERTEX_LIMIT:
        raise TooLargeError(
            f"dilate enumeration capped at {DILATE_VERTEX_LIMIT} vertices, got {g.n}"
        )
    pts = lattice_points(g)
    system = inequality_system(g, pts)
    box = _box_points(g.n, k)
    normals = np.array([ineq.normal for ineq in system], dtype=np.int64)
    rhs = np.array([k * ineq.rhs for ineq in system], dtype=np.int64)
    inside = (box @ normals.T <= rhs).all(axis=1)
    candidates = [tuple(int(x) for x in row) for row in box[inside]]
    if mode == "normality":
        candidates = [z for z in candidates if pts.lattice.contains(z)]
    singles = list(pts.points)
    pair_sums = {
        tuple(a + b for a, b in zip(p, q)): None
        for i, p in enumerate(singles)
        for q in singles[i:]
    }
    witness = None
    for z in candidates:
        if k == 2:
            ok = z in pair_sums
        else:
            ok = any(
                tuple(a - b for a, b in zip(z, p)) in pair_sums for p in singles
            )
        if not ok:
            witness = z
            break
    return DilateCheck(k, mode, witness is None, witness, len(candidates))
