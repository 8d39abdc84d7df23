"""Exact linear algebra over the rationals.

Everything downstream leans on this module: matrices with Fraction entries,
linear subspaces of Q^n held in reduced row-echelon canonical form, finite
unions of such subspaces, and the integer-lattice coset test that decides
whether a rational translation vector lands back in a subspace modulo Z^n.

No floats anywhere.  Two subspaces are equal iff their canonical bases are
equal, so subspace equality is plain `==` on the objects.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm

Q = Fraction


def qscalar(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not allowed; pass an int, a Fraction, or a 'p/q' string")
    raise TypeError(f"cannot interpret {x!r} as a rational scalar")


def qvector(seq) -> tuple[Fraction, ...]:
    return tuple(qscalar(x) for x in seq)


def qmatrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    out = tuple(qvector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


# ---------------------------------------------------------------------------
# elimination


def rref(rows):
    """Reduced row-echelon form.

    Returns (rows, pivots): the nonzero rows of the RREF as Fraction tuples
    and the tuple of pivot column indices.  The input is not modified.
    """
    mat = [list(r) for r in qmatrix(rows)]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = tuple(tuple(row) for row in mat[:r])
    return out, tuple(pivots)


def rank(rows) -> int:
    return len(rref(rows)[0])


def rank_int(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss-style) elimination.

    Hot path for the exhaustive sweeps: plain int arithmetic, no Fraction
    objects.  Rows may be any iterable of ints.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rk = 0
    for c in range(ncols):
        piv = None
        for i in range(rk, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        prow = mat[rk]
        pv = prow[c]
        for i in range(rk + 1, len(mat)):
            v = mat[i][c]
            if v:
                row = mat[i]
                g = gcd(pv, v)
                a, b = pv // g, v // g
                mat[i] = [a * x - b * y for x, y in zip(row, prow)]
        rk += 1
        if rk == len(mat):
            break
    return rk


def _int_rows(rows):
    """Scale Fraction rows to primitive integer rows (per-row scaling)."""
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        ints = [int(x * den) for x in r]
        g = gcd(*ints) if any(ints) else 1
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def nullspace(rows, ncols=None):
    """Canonical basis of {x : M x = 0}, as RREF rows.

    `ncols` is required when `rows` is empty (the kernel is then all of Q^n).
    """
    mat = qmatrix(rows)
    if not mat:
        if ncols is None:
            raise ValueError("ncols needed for an empty matrix")
        return tuple(_unit_row(ncols, j) for j in range(ncols))
    n = len(mat[0])
    red, pivots = rref(mat)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    for j in free:
        v = [Q(0)] * n
        v[j] = Q(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][j]
        basis.append(tuple(v))
    return rref(basis)[0] if basis else ()


def _unit_row(n, j):
    return tuple(Q(1) if i == j else Q(0) for i in range(n))


# ---------------------------------------------------------------------------
# subspaces


class RationalSubspace:
    """A linear subspace of Q^n, stored as its RREF canonical basis.

    Equality and hashing go through the canonical basis, so two subspaces
    compare equal exactly when they are the same subspace of the same Q^n.
    """

    __slots__ = ("n", "basis", "dim")

    def __init__(self, n: int, rows=()):
        if n < 0:
            raise ValueError("ambient dimension must be >= 0")
        mat = qmatrix(rows)
        for r in mat:
            if len(r) != n:
                raise ValueError(f"vector length {len(r)} != ambient dimension {n}")
        red, _ = rref(mat)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", red)
        object.__setattr__(self, "dim", len(red))

    def __setattr__(self, *_):
        raise AttributeError("RationalSubspace is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def span(cls, n, vectors):
        return cls(n, vectors)

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def full(cls, n):
        return cls(n, [_unit_row(n, j) for j in range(n)])

    @classmethod
    def from_equations(cls, n, eqs):
        """Solution space of the homogeneous system eqs . x = 0."""
        eqs = qmatrix(eqs)
        for e in eqs:
            if len(e) != n:
                raise ValueError("equation length mismatch")
        return cls(n, nullspace(eqs, n))

    # -- predicates --------------------------------------------------------

    def contains_vector(self, v) -> bool:
        v = list(qvector(v))
        if len(v) != self.n:
            raise ValueError("vector length mismatch")
        for row in self.basis:
            p = _pivot_col(row)
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def contains_subspace(self, other: "RationalSubspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(b) for b in other.basis)

    def is_zero(self) -> bool:
        return self.dim == 0

    def codim(self) -> int:
        return self.n - self.dim

    # -- derived subspaces -------------------------------------------------

    def annihilator(self) -> "RationalSubspace":
        """{y : y . b = 0 for every b in this subspace} — same ambient Q^n."""
        return RationalSubspace(self.n, nullspace(self.basis, self.n))

    def integer_equations(self):
        """Primitive integer rows spanning the annihilator (defining equations)."""
        return tuple(tuple(r) for r in _int_rows(self.annihilator().basis))

    # -- plumbing ----------------------------------------------------------

    def _check_ambient(self, other):
        if self.n != other.n:
            raise ValueError(f"ambient dimensions differ: {self.n} vs {other.n}")

    def __eq__(self, other):
        return (
            isinstance(other, RationalSubspace)
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"RationalSubspace(n={self.n}, dim={self.dim}, basis=[{rows}])"


def _pivot_col(row):
    for j, x in enumerate(row):
        if x != 0:
            return j
    raise ValueError("zero row has no pivot")


def subspace_sum(u: RationalSubspace, v: RationalSubspace) -> RationalSubspace:
    u._check_ambient(v)
    return RationalSubspace(u.n, u.basis + v.basis)


def subspace_intersect(u: RationalSubspace, v: RationalSubspace) -> RationalSubspace:
    """Intersection via annihilators: ann(U n V) = ann(U) + ann(V)."""
    u._check_ambient(v)
    joined = u.annihilator().basis + v.annihilator().basis
    return RationalSubspace(u.n, nullspace(joined, u.n))


def intersection_dim(u: RationalSubspace, v: RationalSubspace) -> int:
    """dim(U n V) without building the intersection: dim U + dim V - dim(U+V)."""
    u._check_ambient(v)
    return u.dim + v.dim - rank(u.basis + v.basis)


# ---------------------------------------------------------------------------
# arrangements (finite unions of subspaces)


class SubspaceArrangement:
    """A finite union of linear subspaces of Q^n, kept as the maximal members.

    Zero-dimensional components are dropped on construction: in every context
    here the origin belongs to the union whenever it is nonempty, so {0} adds
    nothing, and an empty component list stands for the trivial locus.
    Components contained in other components are pruned; order is canonical.
    """

    __slots__ = ("n", "components")

    def __init__(self, n: int, components=()):
        comps = []
        for c in components:
            if not isinstance(c, RationalSubspace):
                raise TypeError("components must be RationalSubspace instances")
            if c.n != n:
                raise ValueError("component ambient dimension mismatch")
            if c.dim > 0:
                comps.append(c)
        comps = _prune_maximal(comps)
        comps.sort(key=lambda s: (-s.dim, s.basis))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "components", tuple(comps))

    def __setattr__(self, *_):
        raise AttributeError("SubspaceArrangement is immutable")

    def is_trivial(self) -> bool:
        return not self.components

    def contains_vector(self, v) -> bool:
        return any(c.contains_vector(v) for c in self.components)

    def codim(self) -> int:
        """Codimension of the union (ambient n if there are no components)."""
        if not self.components:
            return self.n
        return min(c.codim() for c in self.components)

    def union(self, other: "SubspaceArrangement") -> "SubspaceArrangement":
        if self.n != other.n:
            raise ValueError("ambient dimensions differ")
        return SubspaceArrangement(self.n, self.components + other.components)

    def intersect(self, other: "SubspaceArrangement") -> "SubspaceArrangement":
        """Componentwise intersections, pruned to maximal members."""
        if self.n != other.n:
            raise ValueError("ambient dimensions differ")
        out = [
            subspace_intersect(a, b)
            for a in self.components
            for b in other.components
        ]
        return SubspaceArrangement(self.n, out)

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceArrangement)
            and self.n == other.n
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.n, self.components))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return f"SubspaceArrangement(n={self.n}, {len(self.components)} components)"


def _prune_maximal(comps):
    uniq = []
    for c in comps:
        if not any(c == d for d in uniq):
            uniq.append(c)
    return [
        c
        for c in uniq
        if not any(d is not c and d.contains_subspace(c) for d in uniq)
    ]


def meets_nontrivially(p: RationalSubspace, arr: SubspaceArrangement) -> bool:
    """Does P meet some component of the union in dimension >= 1?"""
    if p.n != arr.n:
        raise ValueError("ambient dimensions differ")
    return any(intersection_dim(p, c) >= 1 for c in arr.components)


# ---------------------------------------------------------------------------
# integer lattices


def hermite_reduce(rows):
    """Row-style Hermite reduction of an integer matrix.

    Returns the nonzero rows of an echelon basis for the row lattice
    (unimodular row operations only), pivots positive.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return ()
    ncols = len(mat[0])
    done = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        # gcd-combine every lower row into the pivot row
        for i in range(r + 1, len(mat)):
            while mat[i][c]:
                q = mat[r][c] // mat[i][c]
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[i])]
                mat[r], mat[i] = mat[i], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r])


def in_row_lattice(hermite_rows, target) -> bool:
    """Is the integer vector `target` an integer combination of the rows?

    `hermite_rows` must come from hermite_reduce.
    """
    v = list(target)
    for row in hermite_rows:
        c = next(j for j, x in enumerate(row) if x)
        if v[c] % row[c] != 0:
            return False
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def coset_in_subspace_mod_lattice(q, u: RationalSubspace) -> bool:
    """Decide whether q + Z^n meets U, i.e. q - m lies in U for some m in Z^n.

    Write U as the kernel of an integer matrix A (primitive rows spanning the
    annihilator).  Then q - m in U for some integer m iff A q lies in the
    lattice A Z^n, which is an exact Hermite-form membership test.
    """
    q = qvector(q)
    if len(q) != u.n:
        raise ValueError("vector length mismatch")
    eqs = u.integer_equations()
    if not eqs:  # U is all of Q^n
        return True
    target = []
    for row in eqs:
        val = sum(a * x for a, x in zip(row, q))
        target.append(val)
    # A Z^n is generated by the columns of A; a non-integer image can never
    # be hit by integer combinations of integer columns.
    if any(v.denominator != 1 for v in target):
        return False
    target = [int(v) for v in target]
    cols = [tuple(row[j] for row in eqs) for j in range(u.n)]
    return in_row_lattice(hermite_reduce(cols), target)


# ---------------------------------------------------------------------------
# misc helpers shared by the geometry modules


def primitive_integer_vector(v):
    """Scale a rational vector to primitive integers, first nonzero positive."""
    v = qvector(v)
    if not any(v):
        return tuple(0 for _ in v)
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def coordinate_subspace(n, coords) -> RationalSubspace:
    """Q^W: the span of the unit vectors indexed by `coords` (1-based)."""
    coords = sorted(set(coords))
    if coords and (coords[0] < 1 or coords[-1] > n):
        raise ValueError("coordinate out of range")
    return RationalSubspace(n, [_unit_row(n, j - 1) for j in coords])


def all_subsets(base):
    base = list(base)
    for k in range(len(base) + 1):
        yield from itertools.combinations(base, k)
