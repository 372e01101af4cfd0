"""Graph-side deciders for polytope properties.

Each decider reads off the answer from graph structure alone (block shapes,
degree patterns, neighborhood sizes) and returns a Verdict carrying the
method used, an optional witness for negative answers, and a Gorenstein
certificate for positive ones.  The geometric routines in the polytope
module serve as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DisconnectedError,
    NotBipartiteError,
    NotPseudotreeError,
    TooLargeError,
    UnsupportedShapeError,
)
from .graph import (
    Graph,
    bipartition,
    blocks_and_cut_vertices,
    connected_components,
    cut_vertex_mask,
    induced_subgraph,
    is_connected,
    mask_components,
    mask_is_connected,
    mask_neighborhood,
    mask_vertices,
    pseudotree_profile,
)
from .matchable import ENUMERATION_LIMIT, has_perfect_matching, matchable_subsets
from .polytope import (
    DILATE_VERTEX_LIMIT,
    DilateCheck,
    GorensteinCertificate,
    dimension,
    gorenstein_geometric,
    idp_check,
)

ODD_CYCLE_VERTEX_LIMIT = 16
SUBSET_SCAN_LIMIT = 20


@dataclass(frozen=True)
class Verdict:
    """Outcome of one property decision."""

    property_name: str
    value: bool
    method: str
    hypothesis_ok: bool = True
    witness: dict | None = None
    certificate: GorensteinCertificate | None = None
    caveat: str | None = None

    def to_json(self) -> dict:
        return {
            "property": self.property_name,
            "value": self.value,
            "method": self.method,
            "hypothesis_ok": self.hypothesis_ok,
            "witness": self.witness,
            "certificate": None
            if self.certificate is None
            else self.certificate.to_json(),
            "caveat": self.caveat,
        }


def compressed_by_theorem(g: Graph) -> Verdict:
    """Compressedness from the block decomposition.

    Within each component every block must be complete bipartite, allowing
    at most one exceptional block shaped K4 or K_{1,1,q}.
    """
    dec = blocks_and_cut_vertices(g)
    comp_id: dict[int, int] = {}
    for idx, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_id[v] = idx
    exceptional: dict[int, tuple[tuple[int, int], ...]] = {}
    for block, kind in zip(dec.blocks, dec.block_kinds):
        if kind.name == "CompleteBipartite":
            continue
        cid = comp_id[block[0][0]]
        if kind.name in ("K4", "K11n"):
            if cid in exceptional:
                witness = {
                    "reason": "two-exceptional-blocks",
                    "blocks": [
                        [list(e) for e in exceptional[cid]],
                        [list(e) for e in block],
                    ],
                }
                return Verdict("compressed", False, "block-classification", witness=witness)
            exceptional[cid] = block
        else:
            witness = {
                "reason": "forbidden-block",
                "block": [list(e) for e in block],
                "kind": str(kind),
            }
            return Verdict("compressed", False, "block-classification", witness=witness)
    return Verdict("compressed", True, "block-classification")


def _both_connected_subsets(g: Graph, v1m: int, v2m: int):
    """Proper nonempty subsets S of the first color class such that S plus
    its neighborhood and the complementary pair both induce connected
    subgraphs, with their neighborhoods."""
    adj = g.adj_masks
    subs = []
    sub = (v1m - 1) & v1m
    while sub:
        subs.append(sub)
        sub = (sub - 1) & v1m
    subs.sort(key=lambda m: (m.bit_count(), m))
    for s in subs:
        gam = mask_neighborhood(adj, s)
        rest = (v1m & ~s) | (v2m & ~gam)
        if mask_is_connected(adj, s | gam) and mask_is_connected(adj, rest):
            yield s, gam


def _members(mask: int) -> list[int]:
    return list(mask_vertices(mask))


def gorenstein_bipartite(g: Graph) -> Verdict:
    """Neighborhood-surplus test for connected bipartite graphs.

    When some non-cut vertex has degree at least two, the polytope is
    Gorenstein (necessarily of index 2) exactly when the graph has a perfect
    matching and every relevant subset S of the first color class satisfies
    |N(S)| = |S| + 1.  Without such a vertex the forced interior-vector
    system decides instead.
    """
    sides = bipartition(g)
    if sides is None:
        raise NotBipartiteError("gorenstein_bipartite needs a bipartite graph")
    if not is_connected(g):
        raise DisconnectedError("gorenstein_bipartite needs a connected graph")
    if g.n > SUBSET_SCAN_LIMIT:
        raise TooLargeError(f"subset scan capped at {SUBSET_SCAN_LIMIT} vertices, got {g.n}")
    cuts = cut_vertex_mask(g)
    hypothesis = any(
        g.degree(v) >= 2 and not (cuts >> (v - 1)) & 1 for v in g.vertices()
    )
    if not hypothesis:
        cert = solve_interior_vector(g)
        return Verdict(
            "gorenstein",
            cert is not None,
            "interior-vector-system",
            hypothesis_ok=False,
            witness=None if cert else {"reason": "interior-vector-system-unsolvable"},
            certificate=cert,
        )
    if not has_perfect_matching(g):
        return Verdict(
            "gorenstein",
            False,
            "neighborhood-surplus",
            witness={"reason": "no-perfect-matching"},
        )
    v1m, v2m = sides[0].mask, sides[1].mask
    for s, gam in _both_connected_subsets(g, v1m, v2m):
        if gam.bit_count() != s.bit_count() + 1:
            return Verdict(
                "gorenstein",
                False,
                "neighborhood-surplus",
                witness={"subset": _members(s), "neighborhood": _members(gam)},
            )
    ones = (1,) * g.n
    cert = GorensteinCertificate(2, ones[:-1], ones)
    return Verdict("gorenstein", True, "neighborhood-surplus", certificate=cert)


def solve_interior_vector(g: Graph) -> GorensteinCertificate | None:
    """Solve the forced interior-vector system of a connected bipartite graph.

    Every coordinate is pinned: non-cut vertices take 1, cut vertices take
    index-1.  A candidate index works when the two color classes balance and
    every relevant subset has surplus exactly one in weighted form.
    """
    sides = bipartition(g)
    if sides is None:
        raise NotBipartiteError("the interior-vector system needs a bipartite graph")
    if not is_connected(g):
        raise DisconnectedError("the interior-vector system needs a connected graph")
    if g.n > SUBSET_SCAN_LIMIT:
        raise TooLargeError(f"subset scan capped at {SUBSET_SCAN_LIMIT} vertices, got {g.n}")
    if g.n == 1:
        return GorensteinCertificate(1, (), (0,), degenerate=True)
    cuts = cut_vertex_mask(g)
    pinned = any(
        g.degree(v) >= 2 and not (cuts >> (v - 1)) & 1 for v in g.vertices()
    )
    indices = (2,) if pinned else range(2, g.n + 1)
    v1m = sides[0].mask
    for index in indices:
        alpha = [
            1 if not (cuts >> (v - 1)) & 1 else index - 1 for v in g.vertices()
        ]
        balance = sum(
            a if (v1m >> i) & 1 else -a for i, a in enumerate(alpha)
        )
        if balance != 0:
            continue
        ok = True
        for s, gam in _both_connected_subsets(g, v1m, sides[1].mask):
            surplus = sum(
                a if (s >> i) & 1 else (-a if (gam >> i) & 1 else 0)
                for i, a in enumerate(alpha)
            )
            if surplus != -1:
                ok = False
                break
        if ok:
            ambient = tuple(alpha)
            return GorensteinCertificate(index, ambient[:-1], ambient)
    return None


def gorenstein_pseudotree(g: Graph) -> Verdict:
    """Degree-pattern test for connected graphs with at most one cycle.

    Positive cases: very small trees, trees with exactly two distinct
    degrees, the five-cycle, triangles with matching attachment degrees, and
    even cycles of uniform degree with attachment degrees in {1, degree-1}.
    """
    profile = pseudotree_profile(g)
    if profile is None:
        raise NotPseudotreeError("gorenstein_pseudotree needs at most one cycle")
    method = "pseudotree-degree-cases"
    degrees = [g.degree(v) for v in g.vertices()]
    if profile.cycle is None:
        if g.n == 1:
            cert = GorensteinCertificate(1, (), (0,), degenerate=True)
            return Verdict(
                "gorenstein", True, method, witness={"case": "single-vertex"}, certificate=cert
            )
        if g.n == 2:
            cert = GorensteinCertificate(2, (1,), (1, 1))
            return Verdict(
                "gorenstein", True, method, witness={"case": "single-edge"}, certificate=cert
            )
        degree_values = sorted(set(degrees))
        if len(degree_values) != 2:
            return Verdict(
                "gorenstein",
                False,
                method,
                witness={
                    "reason": "tree-degrees-not-two-valued",
                    "degrees": degree_values,
                },
            )
        big = degree_values[1]
        alpha = tuple(1 if d == 1 else big for d in degrees)
        cert = GorensteinCertificate(big + 1, alpha[:-1], alpha)
        return Verdict(
            "gorenstein", True, method, witness={"case": "bidegreed-tree"}, certificate=cert
        )
    length = len(profile.cycle)
    if profile.cycle_parity == "odd":
        if length == 5:
            if g.n == 5:
                return Verdict(
                    "gorenstein", True, method, witness={"case": "five-cycle"}
                )
            return Verdict(
                "gorenstein",
                False,
                method,
                witness={"reason": "five-cycle-with-attachments"},
            )
        if length == 3:
            bad_cycle = [
                v for v in profile.cycle_vertices if g.degree(v) not in (2, 3)
            ]
            bad_rest = [
                v
                for v in g.vertices()
                if v not in profile.cycle_vertices and g.degree(v) not in (1, 3)
            ]
            if bad_cycle or bad_rest:
                return Verdict(
                    "gorenstein",
                    False,
                    method,
                    witness={
                        "reason": "triangle-degree-mismatch",
                        "vertices": bad_cycle + bad_rest,
                    },
                )
            return Verdict(
                "gorenstein", True, method, witness={"case": "triangle-with-trees"}
            )
        return Verdict(
            "gorenstein",
            False,
            method,
            witness={"reason": "odd-cycle-length-unsupported", "cycle_length": length},
        )
    cycle_degrees = sorted({g.degree(v) for v in profile.cycle_vertices})
    if len(cycle_degrees) != 1:
        return Verdict(
            "gorenstein",
            False,
            method,
            witness={"reason": "cycle-degrees-not-uniform", "degrees": cycle_degrees},
        )
    index = cycle_degrees[0]
    offending = [
        v
        for v in g.vertices()
        if v not in profile.cycle_vertices and g.degree(v) not in (1, index - 1)
    ]
    if offending:
        return Verdict(
            "gorenstein",
            False,
            method,
            witness={
                "reason": "attachment-degree-mismatch",
                "vertices": offending,
                "cycle_degree": index,
            },
        )
    alpha = tuple(1 if d == 1 else index - 1 for d in degrees)
    cert = GorensteinCertificate(index, alpha[:-1], alpha)
    return Verdict(
        "gorenstein", True, method, witness={"case": "even-cycle-uniform"}, certificate=cert
    )


def complete_multipartite_shape(g: Graph) -> tuple[int, ...] | None:
    """Part sizes if g is complete multipartite, in ascending order.

    Detected through the complement: the parts are its connected components,
    and each must be a clique there.
    """
    full = g.full_mask
    co_adj = [0] * (g.n + 1)
    for v in g.vertices():
        co_adj[v] = full & ~g.adj_masks[v] & ~(1 << (v - 1))
    parts = mask_components(co_adj, full)
    for part in parts:
        for v in mask_vertices(part):
            if co_adj[v] & part != part & ~(1 << (v - 1)):
                return None
    return tuple(sorted(p.bit_count() for p in parts))


def gorenstein_complete_multipartite(shape) -> Verdict:
    """Table lookup for the complete multipartite shapes with known answers.

    Complete graphs up to four vertices, complete bipartite K_{p,q} with
    p = 1 or p = q, and K_{1,1,q} with q <= 2 are Gorenstein; the other
    members of those families are not.  Remaining shapes raise.
    """
    shape = tuple(sorted(int(s) for s in shape))
    if not shape or shape[0] < 1:
        raise ValueError(f"invalid part sizes {shape}")
    method = "complete-multipartite-table"
    if all(s == 1 for s in shape):
        value = len(shape) <= 4
        family = "complete"
    elif len(shape) == 2:
        value = shape[0] == 1 or shape[0] == shape[1]
        family = "complete-bipartite"
    elif len(shape) == 3 and shape[1] == 1:
        value = shape[2] <= 2
        family = "tripartite-two-singletons"
    else:
        raise UnsupportedShapeError(f"no closed-form rule for part sizes {shape}")
    return Verdict(
        "gorenstein",
        value,
        method,
        witness={"shape": list(shape), "family": family},
    )


def odd_cycle_condition(g: Graph) -> Verdict:
    """Any two disjoint odd cycles in a component must be joined by an edge.

    This decides normality of the edge polytope.  Scanning induced odd
    cycles suffices: every odd cycle contains an induced one on a subset of
    its vertices, and an edge joining the induced pair joins the original
    pair as well.
    """
    if g.n > ODD_CYCLE_VERTEX_LIMIT:
        raise TooLargeError(
            f"odd cycle scan capped at {ODD_CYCLE_VERTEX_LIMIT} vertices, got {g.n}"
        )
    adj = g.adj_masks
    cycles = []
    for mask in range(1, 1 << g.n):
        k = mask.bit_count()
        if k < 3 or k % 2 == 0:
            continue
        if all((adj[v] & mask).bit_count() == 2 for v in mask_vertices(mask)):
            if mask_is_connected(adj, mask):
                cycles.append(mask)
    comp_id: dict[int, int] = {}
    for idx, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_id[v] = idx
    for i, a in enumerate(cycles):
        for b in cycles[i + 1 :]:
            if a & b:
                continue
            if comp_id[(a & -a).bit_length()] != comp_id[(b & -b).bit_length()]:
                continue
            if not any(adj[v] & b for v in mask_vertices(a)):
                return Verdict(
                    "edge-polytope-normal",
                    False,
                    "disjoint-odd-cycles",
                    witness={"cycles": [_members(a), _members(b)]},
                )
    return Verdict("edge-polytope-normal", True, "disjoint-odd-cycles")


def gorenstein_decide(g: Graph) -> Verdict:
    """Route one connected graph to the cheapest applicable decider.

    Order: single vertex, pseudotree, bipartite, complete multipartite
    table, then the exact geometric search as the catch-all.
    """
    if not is_connected(g):
        raise DisconnectedError("gorenstein_decide needs a connected graph")
    if g.n == 1:
        return Verdict(
            "gorenstein",
            True,
            "single-vertex",
            certificate=GorensteinCertificate(1, (), (0,), degenerate=True),
        )
    if pseudotree_profile(g) is not None:
        return gorenstein_pseudotree(g)
    if bipartition(g) is not None:
        return gorenstein_bipartite(g)
    shape = complete_multipartite_shape(g)
    if shape is not None:
        try:
            return gorenstein_complete_multipartite(shape)
        except UnsupportedShapeError:
            pass
    cert = gorenstein_geometric(g)
    return Verdict(
        "gorenstein",
        cert is not None,
        "geometric",
        witness=None if cert else {"reason": "no-interior-lattice-vector"},
        certificate=cert,
        caveat=(
            "decided over the lattice spanned by the polytope's own points; "
            "this equals the toric-ring property whenever the polytope is normal"
        ),
    )


@dataclass(frozen=True)
class ComponentReport:
    """Classification results for one connected component."""

    vertices: tuple[int, ...]
    dimension: int
    point_count: int | None
    compressed: Verdict
    gorenstein: Verdict
    edge_polytope_normal: Verdict | None
    dilate_checks: tuple[DilateCheck, ...]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "dimension": self.dimension,
            "point_count": self.point_count,
            "compressed": self.compressed.to_json(),
            "gorenstein": self.gorenstein.to_json(),
            "edge_polytope_normal": None
            if self.edge_polytope_normal is None
            else self.edge_polytope_normal.to_json(),
            "dilate_checks": [d.to_json() for d in self.dilate_checks],
        }


@dataclass(frozen=True)
class ClassificationReport:
    """Per-component classification plus the conjunction verdicts."""

    vertex_count: int
    edge_count: int
    components: tuple[ComponentReport, ...]
    compressed: bool
    gorenstein: bool

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "compressed": self.compressed,
            "gorenstein": self.gorenstein,
            "components": [c.to_json() for c in self.components],
        }


def classify_all(g: Graph, include_dilates: bool = True) -> ClassificationReport:
    """Classify every component and conjoin the component verdicts.

    The polytope of a disconnected graph is the product of the component
    polytopes, so compressedness and Gorensteinness hold exactly when they
    hold for every factor.
    """
    reports = []
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        compressed = compressed_by_theorem(sub)
        gorenstein = gorenstein_decide(sub)
        normal = (
            odd_cycle_condition(sub) if sub.n <= ODD_CYCLE_VERTEX_LIMIT else None
        )
        dilates: tuple[DilateCheck, ...] = ()
        if include_dilates and sub.n <= DILATE_VERTEX_LIMIT:
            dilates = (
                idp_check(sub, 2, "normality"),
                idp_check(sub, 2, "idp"),
            )
        count = (
            len(matchable_subsets(sub)) if sub.n <= ENUMERATION_LIMIT else None
        )
        reports.append(
            ComponentReport(
                vertices=comp.members(),
                dimension=dimension(sub),
                point_count=count,
                compressed=compressed,
                gorenstein=gorenstein,
                edge_polytope_normal=normal,
                dilate_checks=dilates,
            )
        )
    return ClassificationReport(
        vertex_count=g.n,
        edge_count=g.edge_count,
        components=tuple(reports),
        compressed=all(r.compressed.value for r in reports),
        gorenstein=all(r.gorenstein.value for r in reports),
    )
