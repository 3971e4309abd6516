"""Simplicial complexes with exact integer homology.

This is the independent verifier for the closed-form homology rules: a
complex is a vertex order plus a facet list, the full face lattice is
derived, boundary matrices use the alternating-sign rule with
lexicographically ordered bases, and homology comes from Smith normal
form of those matrices (so torsion is computed exactly, not only ranks).

Constructors cover triangulated spheres, polygons, products (staircase
triangulation) and connected sums; together they triangulate any manifold
expression via :func:`triangulate`.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from functools import reduce
from itertools import combinations
from typing import Any

from .expressions import ConnSum, ManifoldExpr, Product, SphereAtom, dimension
from .homology import GradedGroup
from .snf import IntegerMatrix, smith_diagonal

__all__ = [
    "SimplicialComplex",
    "boundary_sphere_complex",
    "circle_complex",
    "complex_from_json",
    "complex_to_json",
    "connected_sum_complex",
    "product_complex",
    "projective_plane_complex",
    "simplicial_homology",
    "triangulate",
]


class SimplicialComplex:
    """Abstract simplicial complex over an ordered vertex set.

    The order of ``vertices`` is the total order that orients every
    simplex; ``facets`` are the maximal simplices (faces are derived).
    Facets listed more than once, or contained in a larger facet, are
    dropped.
    """

    __slots__ = ("_labels", "_index", "_facets", "_simplices")

    def __init__(self, vertices: Iterable[Hashable], facets: Iterable[Sequence[Hashable]]):
        labels = list(vertices)
        if not labels:
            raise ValueError("a complex needs at least one vertex")
        index: dict[Hashable, int] = {}
        for pos, lab in enumerate(labels):
            if lab in index:
                raise ValueError(f"repeated vertex label {lab!r}")
            index[lab] = pos

        facet_set: set[tuple[int, ...]] = set()
        for facet in facets:
            ixs = []
            for lab in facet:
                if lab not in index:
                    raise ValueError(f"facet vertex {lab!r} is not in the vertex set")
                ixs.append(index[lab])
            if len(set(ixs)) != len(ixs):
                raise ValueError(f"facet {list(facet)!r} contains a repeated vertex")
            if not ixs:
                raise ValueError("empty facet")
            facet_set.add(tuple(sorted(ixs)))
        if not facet_set:
            raise ValueError("a complex needs at least one facet")
        maximal = [f for f in facet_set
                   if not any(set(f) < set(g) for g in facet_set if len(g) > len(f))]

        dim = max(len(f) for f in maximal) - 1
        lattice: list[set[tuple[int, ...]]] = [set() for _ in range(dim + 1)]
        for f in maximal:
            for size in range(1, len(f) + 1):
                lattice[size - 1].update(combinations(f, size))

        self._labels = tuple(labels)
        self._index = index
        self._facets = tuple(sorted(maximal))
        self._simplices = [sorted(level) for level in lattice]

    @property
    def vertices(self) -> tuple[Hashable, ...]:
        return self._labels

    @property
    def facets(self) -> tuple[tuple[Hashable, ...], ...]:
        return tuple(tuple(self._labels[i] for i in f) for f in self._facets)

    @property
    def dim(self) -> int:
        return len(self._simplices) - 1

    def n_simplices(self, d: int) -> int:
        if 0 <= d <= self.dim:
            return len(self._simplices[d])
        return 0

    def simplices(self, d: int) -> list[tuple[Hashable, ...]]:
        """d-simplices as label tuples, in lexicographic basis order."""
        if not 0 <= d <= self.dim:
            return []
        return [tuple(self._labels[i] for i in s) for s in self._simplices[d]]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(level) for d, level in enumerate(self._simplices))

    def boundary_matrix(self, i: int) -> IntegerMatrix:
        """Matrix of the i-th boundary operator, 1 <= i <= dim.

        Rows are indexed by the (i-1)-simplices and columns by the
        i-simplices, both in lexicographic order; the entry for dropping
        the j-th vertex is (-1)^j.
        """
        if not 1 <= i <= self.dim:
            raise ValueError(f"boundary degree must lie in 1..{self.dim}, got {i}")
        row_of = {s: r for r, s in enumerate(self._simplices[i - 1])}
        cols = self._simplices[i]
        mat = [[0] * len(cols) for _ in row_of]
        for c, simplex in enumerate(cols):
            for j in range(len(simplex)):
                face = simplex[:j] + simplex[j + 1:]
                mat[row_of[face]][c] = 1 if j % 2 == 0 else -1
        return IntegerMatrix(mat, ncols=len(cols))

    def __repr__(self) -> str:
        counts = [len(level) for level in self._simplices]
        return f"SimplicialComplex(dim={self.dim}, simplex_counts={counts})"


def simplicial_homology(K: SimplicialComplex) -> GradedGroup:
    """Integer homology of K from Smith normal form of its boundary maps.

    rank H_i = (#i-simplices) - rank d_i - rank d_{i+1}, and the torsion of
    H_i is the set of invariant factors of d_{i+1} exceeding 1.
    """
    top = K.dim
    diagonals: dict[int, list[int]] = {}
    for i in range(1, top + 1):
        diagonals[i] = smith_diagonal(K.boundary_matrix(i))
    rank_d = {i: sum(1 for x in diag if x) for i, diag in diagonals.items()}
    ranks: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for i in range(top + 1):
        r = K.n_simplices(i) - rank_d.get(i, 0) - rank_d.get(i + 1, 0)
        if r:
            ranks[i] = r
        factors = tuple(x for x in diagonals.get(i + 1, []) if x > 1)
        if factors:
            torsion[i] = factors
    return GradedGroup(ranks, torsion)


def boundary_sphere_complex(k: int) -> SimplicialComplex:
    """The k-sphere as the boundary of the standard (k+1)-simplex."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"sphere dimension must be an integer >= 1, got {k!r}")
    verts = range(k + 2)
    return SimplicialComplex(verts, combinations(verts, k + 1))


def circle_complex(m: int) -> SimplicialComplex:
    """The circle as an m-gon, m >= 3."""
    if not isinstance(m, int) or m < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got {m!r}")
    return SimplicialComplex(range(m), [(i, (i + 1) % m) for i in range(m)])


def projective_plane_complex() -> SimplicialComplex:
    """Minimal 6-vertex triangulation of the projective plane.

    Non-orientable, with 2-torsion in degree 1; exercises the torsion path
    of the homology computation.
    """
    facets = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
              (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)]
    return SimplicialComplex(range(6), facets)


def product_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of the product |K| x |L|.

    Vertices are pairs (a, b) ordered lexicographically by the factor
    orders.  For each facet pair the top cells are the monotone lattice
    paths through the grid of vertex pairs; using the global vertex orders
    makes the path triangulations agree on shared faces.
    """
    verts = [(a, b) for a in K.vertices for b in L.vertices]
    facets = []
    for f in K.facets:
        for h in L.facets:
            p = len(f) - 1
            q = len(h) - 1
            for advance_first in combinations(range(p + q), p):
                steps = set(advance_first)
                i = j = 0
                cell = [(f[0], h[0])]
                for s in range(p + q):
                    if s in steps:
                        i += 1
                    else:
                        j += 1
                    cell.append((f[i], h[j]))
                facets.append(cell)
    return SimplicialComplex(verts, facets)


def connected_sum_complex(K: SimplicialComplex, L: SimplicialComplex,
                          n: int) -> SimplicialComplex:
    """Connected sum of two triangulated closed n-manifolds.

    Removes the lexicographically first facet from each complex and glues
    the two boundary (n-1)-spheres by the order-preserving vertex
    bijection.  The result is relabelled with consecutive integers, K's
    vertices first.  Homology ranks of the result do not depend on the
    choice of gluing bijection for the symmetric pieces built here; only
    rank-level agreement is asserted.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"connected sums need dimension >= 2, got {n!r}")
    if K.dim != n or L.dim != n:
        raise ValueError(
            f"dimension mismatch: expected two {n}-complexes, got {K.dim} and {L.dim}")
    for complex_ in (K, L):
        for facet in complex_.facets:
            if len(facet) != n + 1:
                raise ValueError(
                    f"facet {facet!r} has dimension {len(facet) - 1}, so its boundary "
                    f"is not a standard {n - 1}-sphere; the complex must be pure")

    k_facets = K.facets
    l_facets = L.facets
    removed_k = k_facets[0]
    removed_l = l_facets[0]

    relabel_k = {v: i for i, v in enumerate(K.vertices)}
    relabel_l: dict[Any, int] = {}
    for old, new in zip(removed_l, removed_k):
        relabel_l[old] = relabel_k[new]
    fresh = len(relabel_k)
    for v in L.vertices:
        if v not in relabel_l:
            relabel_l[v] = fresh
            fresh += 1

    facets = [tuple(relabel_k[v] for v in f) for f in k_facets[1:]]
    facets += [tuple(relabel_l[v] for v in f) for f in l_facets[1:]]
    return SimplicialComplex(range(fresh), facets)


def triangulate(expr: ManifoldExpr) -> SimplicialComplex:
    """Triangulation of a manifold expression, built recursively.

    Spheres become simplex boundaries, products use the staircase
    triangulation, and connected sums glue along removed facets.  Cost
    grows quickly with total dimension; the CLI guards this with a
    dimension limit.
    """
    if isinstance(expr, SphereAtom):
        return boundary_sphere_complex(expr.k)
    if isinstance(expr, Product):
        return product_complex(triangulate(expr.left), triangulate(expr.right))
    if isinstance(expr, ConnSum):
        n = dimension(expr)
        pieces = [triangulate(s) for s in expr.summands]
        return reduce(lambda a, b: connected_sum_complex(a, b, n), pieces)
    raise TypeError(f"not a manifold expression: {expr!r}")


def complex_to_json(K: SimplicialComplex) -> dict:
    """Serializable form: vertex labels and facets as strings."""
    return {
        "vertices": [str(v) for v in K.vertices],
        "facets": [[str(v) for v in f] for f in K.facets],
    }


def complex_from_json(data: Any) -> SimplicialComplex:
    """Build a complex from ``{"vertices": [...], "facets": [[...], ...]}``."""
    if not isinstance(data, dict):
        raise ValueError("complex must be a JSON object")
    if "vertices" not in data or "facets" not in data:
        raise ValueError("complex needs 'vertices' and 'facets' fields")
    vertices = data["vertices"]
    facets = data["facets"]
    if not isinstance(vertices, list) or not isinstance(facets, list):
        raise ValueError("'vertices' and 'facets' must be lists")
    for f in facets:
        if not isinstance(f, list):
            raise ValueError("each facet must be a list of vertex labels")
    return SimplicialComplex(vertices, facets)
