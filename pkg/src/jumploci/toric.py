"""Jump loci of toric complexes and right-angled Artin groups.

A simplicial complex K on {1..n} determines a cell subcomplex of the n-torus
whose degree-i resonance and characteristic loci are unions of coordinate
pieces: for each vertex subset W the coordinate subspace Q^W (respectively
the subtorus of characters supported on W) belongs to the degree-i depth-d
locus iff

    sum over faces sigma of K avoiding W of
        dim H~_{i-1-|sigma|}( lk_{K_W}(sigma) )   >=   d,

where the link is taken inside the induced subcomplex on W and sigma = ∅
contributes the induced subcomplex itself.  Everything here is exhaustive
exact computation over the 2^n subsets; the graph layer (right-angled Artin
groups = 1-dimensional K) has its own direct combinatorial route, which the
test suite plays against the homological one.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .qlinalg import (
    RationalSubspace,
    SubspaceArrangement,
    _int_rows,
    coordinate_subspace,
    rank_int,
)
from .simplicial import (
    SimplicialComplex,
    induced_faces,
    link_faces,
    reduced_betti_faces,
)


# ---------------------------------------------------------------------------
# coordinate arrangements


class CoordinateArrangement:
    """A union of coordinate subspaces of Q^n, stored as maximal vertex sets.

    `subsets` holds only nonempty maximal W (lexicographically sorted);
    whether the origin itself belongs to the locus is a separate flag, since
    the empty subset would otherwise be invisible.
    """

    __slots__ = ("n", "subsets", "contains_origin")

    def __init__(self, n: int, subsets=(), contains_origin: bool = True):
        sets = []
        for w in subsets:
            w = tuple(sorted(set(w)))
            if not w:
                continue
            if w[0] < 1 or w[-1] > n:
                raise ValueError(f"subset {w} out of vertex range 1..{n}")
            sets.append(w)
        dedup = sorted(set(sets))
        uniq = [
            w for w in dedup if not any(set(w) < set(v) for v in dedup)
        ]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "subsets", tuple(uniq))
        object.__setattr__(self, "contains_origin", bool(contains_origin))

    def __setattr__(self, *_):
        raise AttributeError("CoordinateArrangement is immutable")

    def to_subspaces(self) -> SubspaceArrangement:
        return SubspaceArrangement(
            self.n, [coordinate_subspace(self.n, w) for w in self.subsets]
        )

    def meets_subspace(self, p: RationalSubspace) -> bool:
        """Does some coordinate piece meet P in dimension >= 1?

        dim(P ∩ Q^W) = dim P - rank(basis columns outside W).
        """
        if p.n != self.n:
            raise ValueError("ambient dimensions differ")
        if p.dim == 0 or not self.subsets:
            return False
        rows = _int_rows(p.basis)
        for w in self.subsets:
            outside = [j for j in range(self.n) if (j + 1) not in w]
            sub = [[row[j] for j in outside] for row in rows]
            if rank_int(sub) < p.dim:
                return True
        return False

    def codim(self) -> int:
        if not self.subsets:
            return self.n
        return self.n - max(len(w) for w in self.subsets)

    def __eq__(self, other):
        return (
            isinstance(other, CoordinateArrangement)
            and self.n == other.n
            and self.subsets == other.subsets
            and self.contains_origin == other.contains_origin
        )

    def __hash__(self):
        return hash((self.n, self.subsets, self.contains_origin))

    def __iter__(self):
        return iter(self.subsets)

    def __len__(self):
        return len(self.subsets)

    def __repr__(self):
        shown = [list(w) for w in self.subsets]
        return (
            f"CoordinateArrangement(n={self.n}, subsets={shown}, "
            f"contains_origin={self.contains_origin})"
        )


# ---------------------------------------------------------------------------
# graphs


class Graph:
    """A finite simple graph on {1..n} with bitmask adjacency."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        seen = set()
        for e in edges:
            a, b = e
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge {e} out of range 1..{n}")
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            seen.add((min(a, b), max(a, b)))
        adj = [0] * n
        for a, b in seen:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_one_skeleton(cls, k: SimplicialComplex) -> "Graph":
        return cls(k.n, k.one_skeleton_edges())

    def to_complex(self) -> SimplicialComplex:
        """The graph as a 1-dimensional complex with every vertex a face."""
        facets = [(a, b) for a, b in self.edges]
        covered = {v for e in self.edges for v in e}
        facets += [(v,) for v in range(1, self.n + 1) if v not in covered]
        return SimplicialComplex(facets, n=self.n)

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj[v] == full & ~(1 << v) for v in range(self.n))

    def _connected_mask(self, mask: int) -> bool:
        """Is the induced subgraph on the mask connected?  Empty mask: yes."""
        if mask == 0:
            return True
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= self.adj[v] & mask
            frontier = nxt & ~seen
            seen |= nxt
        return seen & mask == mask

    def induced_disconnected(self, w) -> bool:
        """Does the induced subgraph on W have >= 2 connected components?"""
        mask = 0
        for v in w:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range")
            mask |= 1 << (v - 1)
        return mask != 0 and not self._connected_mask(mask)

    def connectivity(self) -> int:
        """Vertex connectivity: n-1 for complete graphs, 0 when disconnected,
        else the smallest number of vertices whose removal disconnects."""
        n = self.n
        if n == 0:
            return 0
        full = (1 << n) - 1
        if not self._connected_mask(full):
            return 0
        if self.is_complete():
            return n - 1
        for k in range(1, n - 1):
            for cut in itertools.combinations(range(n), k):
                rest = full
                for v in cut:
                    rest &= ~(1 << v)
                if not self._connected_mask(rest):
                    return k
        return n - 1


def graph_connectivity(g: Graph) -> int:
    return g.connectivity()


def raag_r1(g: Graph) -> CoordinateArrangement:
    """Degree-1 resonance of the right-angled Artin group of the graph:
    the maximal vertex subsets inducing a disconnected subgraph."""
    n = g.n
    passing = []
    for mask in range(1, 1 << n):
        if not g._connected_mask(mask):
            passing.append(_mask_to_subset(mask))
    return CoordinateArrangement(n, passing, contains_origin=n >= 1)


def _mask_to_subset(mask: int):
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def omega_vanishing_bound(g: Graph, r: int) -> bool:
    """May the rank-r translated-torus invariant be certified empty?

    True exactly when r >= connectivity + 1 and the graph is not complete:
    a minimum vertex cut W = V \\ cut yields a resonance piece of codimension
    equal to the connectivity, which every r-plane of that corank must meet.
    Complete graphs are never certified — their resonance is trivial and the
    invariant stays full in every rank.
    """
    if r < 1:
        raise ValueError("rank must be >= 1")
    if r > g.n:
        return True
    if g.is_complete():
        return False
    return r >= g.connectivity() + 1


# ---------------------------------------------------------------------------
# toric complexes


def _require_toric(k: SimplicialComplex):
    have = set(v for f in k.facets for v in f)
    missing = [v for v in range(1, k.n + 1) if v not in have]
    if missing:
        raise ValueError(
            f"vertices {missing} are not faces; the ambient torus needs every "
            "vertex of 1..n to be a cell"
        )


@lru_cache(maxsize=256)
def toric_resonance(k: SimplicialComplex, i: int, d: int) -> CoordinateArrangement:
    """Degree-i depth-d resonance of the toric complex of K.

    Returns the maximal vertex subsets W with Q^W inside the locus, plus the
    origin flag (the empty subset's test is d <= number of size-i faces).
    """
    if i < 0:
        raise ValueError("degree must be >= 0")
    if d < 1:
        raise ValueError("depth must be >= 1")
    _require_toric(k)
    n = k.n
    verts = range(1, n + 1)
    small = [f for f in k.faces if len(f) <= i]
    passing = []
    origin = False
    for mask in range(1 << n):
        w = frozenset(v for v in verts if mask >> (v - 1) & 1)
        total = 0
        for sigma in small:
            if sigma & w:
                continue
            total += reduced_betti_faces(
                link_faces(k, sigma, w), i - 1 - len(sigma)
            )
            if total >= d:
                break
        if total >= d:
            if w:
                passing.append(tuple(sorted(w)))
            else:
                origin = True
    return CoordinateArrangement(n, passing, contains_origin=origin)


def toric_cv(k: SimplicialComplex, i: int, d: int) -> CoordinateArrangement:
    """Degree-i depth-d characteristic locus of the toric complex: the union
    of the subtori supported on exactly the same subsets as toric_resonance
    (the coordinate pieces are the tangent cones of the subtori at 1)."""
    return toric_resonance(k, i, d)


def _cumulative_resonance(k: SimplicialComplex, i: int) -> CoordinateArrangement:
    subsets = []
    origin = False
    for j in range(i + 1):
        arr = toric_resonance(k, j, 1)
        subsets.extend(arr.subsets)
        origin = origin or arr.contains_origin
    return CoordinateArrangement(k.n, subsets, contains_origin=origin)


def toric_omega_member(
    k: SimplicialComplex, i: int, r: int, p: RationalSubspace
) -> bool:
    """Is the rank-r subspace P in the degree-i translated-torus invariant?

    P belongs iff it meets no component of the resonance accumulated over
    degrees <= i (depth 1) in positive dimension.  The degrees below i all
    count: the invariants are nested in i even though the single-degree loci
    are not.
    """
    if i < 0:
        raise ValueError("degree must be >= 0")
    if r < 1:
        raise ValueError("rank must be >= 1")
    if p.n != k.n:
        raise ValueError("plane ambient dimension differs from the vertex count")
    if p.dim != r:
        raise ValueError(f"subspace has dimension {p.dim}, expected rank {r}")
    return not _cumulative_resonance(k, i).meets_subspace(p)
