"""Finite simplicial complexes on vertex sets {1..n}, with exact homology.

A complex is stored by its facets (maximal faces); the face set is the
downward closure and always contains the empty face.  The complex with no
facets is the empty complex {∅}: its reduced Betti number in degree -1 is 1.
Reduced Betti numbers are computed from augmented boundary matrices by exact
integer rank computations, and memoized — the exhaustive sweeps revisit the
same small links thousands of times.
"""

from __future__ import annotations

import itertools
from .qlinalg import rank_int

_betti_cache: dict = {}


class SimplicialComplex:
    """A simplicial complex given by facets over the vertex universe {1..n}.

    Vertices that appear in no facet are allowed in the universe but are not
    faces; homology sees only actual faces.
    """

    __slots__ = ("n", "facets", "faces", "_key")

    def __init__(self, facets=(), n=None):
        fs = [frozenset(f) for f in facets]
        for f in fs:
            for v in f:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"vertices must be positive integers, got {v!r}")
        if n is None:
            n = max((max(f) for f in fs if f), default=0)
        else:
            for f in fs:
                if f and max(f) > n:
                    raise ValueError(f"facet {sorted(f)} exceeds vertex universe 1..{n}")
        # keep only maximal faces, canonically ordered
        maximal = [f for f in fs if not any(f < g for g in fs)]
        uniq = sorted(set(maximal) - {frozenset()}, key=lambda f: (len(f), sorted(f)))
        faces = {frozenset()}
        for f in uniq:
            for k in range(1, len(f) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(f, k))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", tuple(uniq))
        object.__setattr__(self, "faces", frozenset(faces))
        object.__setattr__(self, "_key", (n, tuple(uniq)))

    def __setattr__(self, *_):
        raise AttributeError("SimplicialComplex is immutable")

    def vertices(self) -> tuple:
        return tuple(sorted(set().union(*self.facets))) if self.facets else ()

    def has_face(self, sigma) -> bool:
        return frozenset(sigma) in self.faces

    def is_empty(self) -> bool:
        """True for the empty complex {∅} (no vertices at all)."""
        return not self.facets

    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def skeleton(self, k: int) -> "SimplicialComplex":
        """The k-skeleton (all faces with at most k+1 vertices)."""
        faces = [f for f in self.faces if 0 < len(f) <= k + 1]
        return SimplicialComplex(faces, n=self.n)

    def one_skeleton_edges(self):
        return tuple(sorted(tuple(sorted(f)) for f in self.faces if len(f) == 2))

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        shown = [sorted(f) for f in self.facets]
        return f"SimplicialComplex(n={self.n}, facets={shown})"


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex([range(1, n + 1)], n=n)


def induced(k: SimplicialComplex, w) -> SimplicialComplex:
    """The induced subcomplex on the vertex set W: all faces contained in W."""
    w = frozenset(w)
    return SimplicialComplex([f & w for f in k.facets], n=k.n)


def link_in_induced(k: SimplicialComplex, sigma, w) -> SimplicialComplex:
    """lk_{K_W}(sigma) = {tau ⊆ W : tau ∪ sigma ∈ K}.

    sigma must be a face of K and disjoint from W.  With sigma = ∅ this is
    the induced subcomplex on W.
    """
    sigma = frozenset(sigma)
    w = frozenset(w)
    if not k.has_face(sigma):
        raise ValueError(f"{sorted(sigma)} is not a face of the complex")
    if sigma & w:
        raise ValueError("sigma must be disjoint from W")
    faces = [
        f - sigma
        for f in k.faces
        if sigma <= f and (f - sigma) <= w
    ]
    return SimplicialComplex(faces, n=k.n)


def _boundary_matrix(by_dim, d):
    """Augmented boundary matrix ∂_d : C_d -> C_{d-1} as integer rows.

    Row per (d-1)-face, column per d-face; C_{-1} is spanned by the empty
    face, so ∂_0 is the augmentation map.
    """
    lower = by_dim.get(d - 1, [])
    upper = by_dim.get(d, [])
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, face in enumerate(upper):
        verts = sorted(face)
        for pos in range(len(verts)):
            sub = frozenset(verts[:pos] + verts[pos + 1 :])
            rows[index[sub]][j] = -1 if pos % 2 else 1
    return rows


def reduced_betti(k: SimplicialComplex, i: int) -> int:
    """Reduced Betti number over Q in degree i (i >= -1; 0 below that).

    The empty complex {∅} has reduced Betti 1 in degree -1; any nonempty
    complex has 0 there.
    """
    return reduced_betti_faces(k.faces, i)


def reduced_betti_faces(faces: frozenset, i: int) -> int:
    """reduced_betti on a raw downward-closed face set (∅ included).

    The exhaustive sweeps build thousands of small links; keying the Betti
    cache on the face set itself lets identical links found inside different
    complexes share one computation.
    """
    if i < -1:
        return 0
    key = (faces, i)
    hit = _betti_cache.get(key)
    if hit is not None:
        return hit
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort(key=sorted)
    c_i = len(by_dim.get(i, []))
    if c_i == 0:
        _betti_cache[key] = 0
        return 0
    rank_down = rank_int(_boundary_matrix(by_dim, i)) if i >= 0 else 0
    rank_up = rank_int(_boundary_matrix(by_dim, i + 1))
    b = c_i - rank_down - rank_up
    _betti_cache[key] = b
    return b


def induced_faces(k: SimplicialComplex, w: frozenset) -> frozenset:
    """Face set of the induced subcomplex on W, without building the object."""
    return frozenset(f for f in k.faces if f <= w)


def link_faces(k: SimplicialComplex, sigma: frozenset, w: frozenset) -> frozenset:
    """Face set of lk_{K_W}(sigma), without building the object.

    Assumes sigma is a face disjoint from W (the callers in the toric sweep
    guarantee it); use link_in_induced for the validated route.
    """
    return frozenset(f - sigma for f in k.faces if sigma <= f and (f - sigma) <= w)


def reduced_betti_all(k: SimplicialComplex) -> dict[int, int]:
    """All reduced Betti numbers, degrees -1 .. dim(K)."""
    return {i: reduced_betti(k, i) for i in range(-1, k.dim() + 1)}


def euler_characteristic_reduced(k: SimplicialComplex) -> int:
    """Sum of (-1)^i over all faces including ∅ (equals Σ (-1)^i b̃_i)."""
    return sum((-1) ** (len(f) - 1) for f in k.faces)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; the second complex's vertices are shifted past n1."""
    shift = k1.n
    f1s = k1.facets or (frozenset(),)
    f2s = k2.facets or (frozenset(),)
    facets = [
        f1 | frozenset(v + shift for v in f2)
        for f1 in f1s
        for f2 in f2s
    ]
    return SimplicialComplex(facets, n=k1.n + k2.n)
