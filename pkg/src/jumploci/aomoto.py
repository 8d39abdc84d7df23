"""Rank tests on graded algebras: the multiplication-by-a cochain complex.

A graded algebra enters as bare presentation data: dimensions of the graded
pieces and, degree by degree, the structure constants of multiplication by
degree-one elements.  Fixing a rational point a in the degree-one piece
turns that data into a complex of exact matrices; the dimension drop of its
cohomology at a is what membership in a resonance locus means.  The module
stays a point oracle on purpose — components are enumerated elsewhere, and
here every reported number is an exact rank count over Q.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from .qlinalg import (
    RationalSubspace,
    SubspaceArrangement,
    _int_rows,
    qscalar,
    qvector,
    rank_int,
    rref,
)


class GradedAlgebraPresentation:
    """Dimensions c_0..c_k plus degree-one multiplication tensors.

    dims[0] must be 1 (the unit).  mult[i-1][j][b] is the coordinate vector
    in degree i+1 of e_j * u_b, for e_j the j-th degree-one basis element
    and u_b the b-th basis element of degree i (1 <= i <= k-1).  The
    degree-zero multiplication e_j * 1 = e_j is implicit.

    Construction checks graded commutativity in the only place the data
    can see it: e_j * e_l + e_l * e_j = 0 and e_j * e_j = 0 in degree 2.
    """

    __slots__ = ("dims", "mult")

    def __init__(self, dims, mult=()):
        dims = tuple(int(c) for c in dims)
        if not dims or dims[0] != 1:
            raise ValueError("dims must start with c_0 = 1")
        if any(c < 0 for c in dims):
            raise ValueError("negative dimension")
        k = len(dims) - 1
        n = dims[1] if k >= 1 else 0
        tensors = []
        mult = tuple(mult)
        if len(mult) != max(k - 1, 0):
            raise ValueError(
                f"need {max(k - 1, 0)} multiplication tensors for top degree {k}"
            )
        for i, tensor in enumerate(mult, start=1):
            src, dst = dims[i], dims[i + 1]
            tensor = tuple(
                tuple(qvector(vec) for vec in per_gen) for per_gen in tensor
            )
            if len(tensor) != n or any(len(per_gen) != src for per_gen in tensor):
                raise ValueError(f"tensor {i} must be indexed by {n} x {src}")
            for per_gen in tensor:
                for vec in per_gen:
                    if len(vec) != dst:
                        raise ValueError(f"tensor {i} values must live in Q^{dst}")
            tensors.append(tensor)
        if k >= 2:
            t1 = tensors[0]
            for j in range(n):
                for l in range(n):
                    s = tuple(x + y for x, y in zip(t1[j][l], t1[l][j]))
                    if any(s):
                        raise ValueError(
                            f"graded commutativity fails on basis pair ({j + 1}, {l + 1})"
                        )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mult", tuple(tensors))

    def __setattr__(self, *_):
        raise AttributeError("GradedAlgebraPresentation is immutable")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    @property
    def n(self) -> int:
        return self.dims[1] if self.top >= 1 else 0

    def padded(self) -> "GradedAlgebraPresentation":
        """Append a zero graded piece on top, so the old top degree gets a
        (zero) outgoing differential and becomes rank-testable."""
        if self.top == 0:
            return GradedAlgebraPresentation(self.dims + (0,), ())
        zero_tensor = tuple(
            tuple(() for _ in range(self.dims[self.top]))
            for _ in range(self.n)
        )
        return GradedAlgebraPresentation(
            self.dims + (0,), self.mult + (zero_tensor,)
        )

    def __eq__(self, other):
        return (
            isinstance(other, GradedAlgebraPresentation)
            and self.dims == other.dims
            and self.mult == other.mult
        )

    def __hash__(self):
        return hash((self.dims, self.mult))

    def __repr__(self):
        return f"GradedAlgebraPresentation(dims={self.dims})"

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "dims": list(self.dims),
            "mult": [
                {
                    "deg": i,
                    "table": [
                        [[str(x) for x in vec] for vec in per_gen]
                        for per_gen in tensor
                    ],
                }
                for i, tensor in enumerate(self.mult, start=1)
            ],
        }

    @classmethod
    def from_json(cls, data):
        dims = data["dims"]
        by_deg = {entry["deg"]: entry["table"] for entry in data.get("mult", [])}
        mult = [by_deg[i] for i in sorted(by_deg)]
        if sorted(by_deg) != list(range(1, len(dims) - 1)):
            raise ValueError("multiplication tables must cover degrees 1..k-1")
        return cls(dims, mult)


class AomotoEvaluation:
    """The complex of exact matrices at one rational point.

    matrices[i] maps degree i to degree i+1, rows indexed by the target
    basis.  aomoto_matrices checks that consecutive matrices compose to
    zero before building one of these.
    """

    __slots__ = ("point", "matrices")

    def __init__(self, point, matrices):
        object.__setattr__(self, "point", tuple(point))
        object.__setattr__(self, "matrices", tuple(matrices))

    def __setattr__(self, *_):
        raise AttributeError("AomotoEvaluation is immutable")


def aomoto_matrices(alg: GradedAlgebraPresentation, a) -> AomotoEvaluation:
    """Exact matrices of multiplication by a in every degree 0..k-1.

    Raises if the presentation is internally inconsistent, i.e. if some
    consecutive pair of matrices fails to compose to zero — the tensors
    then cannot come from an associative algebra with a*a = 0.
    """
    a = qvector(a)
    if len(a) != alg.n:
        raise ValueError(f"point length {len(a)} != c_1 = {alg.n}")
    mats = []
    if alg.top >= 1:
        mats.append(tuple((x,) for x in a))  # 1 |-> sum a_j e_j
    for deg, tensor in enumerate(alg.mult, start=1):
        src, dst = alg.dims[deg], alg.dims[deg + 1]
        rows = []
        for r in range(dst):
            rows.append(
                tuple(
                    sum((a[j] * tensor[j][b][r] for j in range(alg.n)), Fraction(0))
                    for b in range(src)
                )
            )
        mats.append(tuple(rows))
    for i in range(len(mats) - 1):
        if _nonzero_product(mats[i + 1], mats[i]):
            raise ValueError(
                f"inconsistent presentation: matrices {i} and {i + 1} "
                "do not compose to zero"
            )
    return AomotoEvaluation(a, mats)


def _nonzero_product(b, a):
    if not b or not a or not a[0]:
        return False
    if not b[0]:
        return False
    for row in b:
        for j in range(len(a[0])):
            if sum((row[k] * a[k][j] for k in range(len(a))), Fraction(0)):
                return True
    return False


def _matrix_rank(mat) -> int:
    rows = [r for r in mat if r]
    if not rows:
        return 0
    return rank_int(_int_rows(rows))


def aomoto_betti(alg: GradedAlgebraPresentation, a, i: int) -> int:
    """Cohomology dimension of the multiplication-by-a complex in degree i.

    Requires 0 <= i <= k-1: the outgoing differential in degree i must be
    part of the data.  To rank-test the top degree itself, pad the algebra
    with a zero piece first.
    """
    if not (0 <= i <= alg.top - 1):
        raise ValueError(
            f"degree out of range: i = {i}, need 0 <= i <= {alg.top - 1}"
        )
    ev = aomoto_matrices(alg, a)
    rank_out = _matrix_rank(ev.matrices[i])
    rank_in = _matrix_rank(ev.matrices[i - 1]) if i >= 1 else 0
    return alg.dims[i] - rank_in - rank_out


def resonance_member(alg: GradedAlgebraPresentation, a, i: int, d: int) -> bool:
    """Does the degree-i cohomology at a have dimension >= d?"""
    if d < 0:
        raise ValueError("depth must be >= 0")
    if d == 0:
        return True
    return aomoto_betti(alg, a, i) >= d


def resonance_member_upto(alg: GradedAlgebraPresentation, a, i: int) -> bool:
    """Is some cohomology of degree <= i nonzero at a?"""
    return any(aomoto_betti(alg, a, j) >= 1 for j in range(0, i + 1))


# ---------------------------------------------------------------------------
# the universal (symbolic) complex


def universal_aomoto(alg: GradedAlgebraPresentation):
    """Matrices of linear forms x_1..x_n, one per degree 0..k-1.

    Each entry is the tuple of rational coefficients of (x_1, ..., x_n).
    The composition of consecutive matrices is expanded as a quadratic
    form in the x's and must vanish identically; a presentation that
    fails this cannot come from an algebra, and is rejected.
    """
    n = alg.n
    mats = []
    if alg.top >= 1:
        mats.append(
            tuple(
                (tuple(Fraction(1 if t == j else 0) for t in range(n)),)
                for j in range(n)
            )
        )
    for deg, tensor in enumerate(alg.mult, start=1):
        src, dst = alg.dims[deg], alg.dims[deg + 1]
        rows = []
        for r in range(dst):
            rows.append(
                tuple(
                    tuple(tensor[j][b][r] for j in range(n))
                    for b in range(src)
                )
            )
        mats.append(tuple(rows))
    for i in range(len(mats) - 1):
        _check_symbolic_square_zero(mats[i + 1], mats[i], n, i)
    return mats


def _check_symbolic_square_zero(b, a, n, where):
    """(b . a)[r][c] is a quadratic form; all its coefficients must vanish."""
    if not b or not a or not a[0]:
        return
    for row in b:
        for c in range(len(a[0])):
            # coefficient of x_j x_l, j <= l, in sum_k row[k] * a[k][c]
            quad = {}
            for k in range(len(a)):
                lf1, lf2 = row[k], a[k][c]
                for j in range(n):
                    if not lf1[j]:
                        continue
                    for l in range(n):
                        if not lf2[l]:
                            continue
                        key = (min(j, l), max(j, l))
                        quad[key] = quad.get(key, Fraction(0)) + lf1[j] * lf2[l]
            if any(v for v in quad.values()):
                raise ValueError(
                    f"inconsistent presentation: symbolic composition at degree "
                    f"{where} is nonzero"
                )


def evaluate_universal(mats, a):
    """Plug a rational point into the symbolic matrices."""
    a = qvector(a)
    out = []
    for mat in mats:
        out.append(
            tuple(
                tuple(
                    sum((coef * x for coef, x in zip(entry, a)), Fraction(0))
                    for entry in row
                )
                for row in mat
            )
        )
    return out


# ---------------------------------------------------------------------------
# stock algebras


def exterior_algebra(n: int, top=None) -> GradedAlgebraPresentation:
    """The exterior algebra on n degree-one generators, truncated at `top`
    (default n).  Multiplication by a generator is wedge, with the sign
    that sorts the result."""
    if top is None:
        top = n
    if not (0 <= top <= n):
        raise ValueError("truncation degree out of range")
    dims = tuple(comb(n, i) for i in range(top + 1))
    bases = [list(itertools.combinations(range(n), i)) for i in range(top + 1)]
    index = [{s: b for b, s in enumerate(level)} for level in bases]
    tensors = []
    for i in range(1, top):
        tensor = []
        for j in range(n):
            per_gen = []
            for subset in bases[i]:
                vec = [Fraction(0)] * dims[i + 1]
                if j not in subset:
                    merged = tuple(sorted(subset + (j,)))
                    sign = (-1) ** sum(1 for s in subset if s < j)
                    vec[index[i + 1][merged]] = Fraction(sign)
                per_gen.append(tuple(vec))
            tensor.append(tuple(per_gen))
        tensors.append(tuple(tensor))
    return GradedAlgebraPresentation(dims, tensors)


def quotient_exterior_algebra(n: int, relations) -> GradedAlgebraPresentation:
    """Degree-two truncation of the exterior algebra on n generators
    modulo the span of the given degree-two relations.

    Relations are dicts {(i, j): coeff} with 0-based i < j in the
    pair-basis of the exterior square.  The quotient basis is the set of
    non-pivot pairs after row reduction, and multiplication is wedge
    followed by reduction against the pivot rows.
    """
    pairs = list(itertools.combinations(range(n), 2))
    pair_index = {p: b for b, p in enumerate(pairs)}
    rel_rows = []
    for rel in relations:
        row = [Fraction(0)] * len(pairs)
        for (i, j), coeff in rel.items():
            if not (0 <= i < j < n):
                raise ValueError(f"bad pair ({i}, {j})")
            row[pair_index[(i, j)]] += qscalar(coeff)
        rel_rows.append(row)
    red, pivots = rref(rel_rows)
    pivot_set = set(pivots)
    quotient_pairs = [p for b, p in enumerate(pairs) if b not in pivot_set]
    qindex = {p: b for b, p in enumerate(quotient_pairs)}

    def reduce_pair_vector(vec):
        vec = list(vec)
        for row, piv in zip(red, pivots):
            f = vec[piv]
            if f:
                vec = [x - f * y for x, y in zip(vec, row)]
        return tuple(vec[pair_index[p]] for p in quotient_pairs)

    tensor = []
    for j in range(n):
        per_gen = []
        for l in range(n):
            vec = [Fraction(0)] * len(pairs)
            if j != l:
                key = (min(j, l), max(j, l))
                vec[pair_index[key]] = Fraction(1 if j < l else -1)
            per_gen.append(reduce_pair_vector(vec))
        tensor.append(tuple(per_gen))
    dims = (1, n, len(quotient_pairs))
    return GradedAlgebraPresentation(dims, (tuple(tensor),))


def surface_algebra(g: int) -> GradedAlgebraPresentation:
    """Cohomology of the closed orientable genus-g surface: 2g degree-one
    generators pairing symplectically into a one-dimensional top degree."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    n = 2 * g
    tensor = []
    for j in range(n):
        per_gen = []
        for l in range(n):
            if l == j + g:
                per_gen.append((Fraction(1),))
            elif j == l + g:
                per_gen.append((Fraction(-1),))
            else:
                per_gen.append((Fraction(0),))
        tensor.append(tuple(per_gen))
    return GradedAlgebraPresentation((1, n, 1), (tuple(tensor),))


def s1s2_algebra(c) -> GradedAlgebraPresentation:
    """One generator in each degree 0..3; the only non-forced product is
    degree 1 times degree 2, scaled by the rational parameter."""
    c = qscalar(c)
    t1 = (((Fraction(0),),),)   # e1 * e1 = 0
    t2 = (((c,),),)             # e1 * u = c w
    return GradedAlgebraPresentation((1, 1, 1, 1), (t1, t2))


def zero_multiplication_algebra(dims) -> GradedAlgebraPresentation:
    """All products of positive-degree elements vanish."""
    dims = tuple(int(c) for c in dims)
    n = dims[1] if len(dims) >= 2 else 0
    tensors = []
    for i in range(1, len(dims) - 1):
        tensors.append(
            tuple(
                tuple(tuple(Fraction(0) for _ in range(dims[i + 1])) for _ in range(dims[i]))
                for _ in range(n)
            )
        )
    return GradedAlgebraPresentation(dims, tensors)


# ---------------------------------------------------------------------------
# closed-form loci for the stock examples


def s1s2_resonance(fprime1) -> dict:
    """Degree-1 and degree-2 loci for the one-cell-per-degree family, with
    the degree-3 attaching map contributing the derivative value at 1."""
    c = qscalar(fprime1)
    r1 = SubspaceArrangement(1, ())
    if c != 0:
        r2 = SubspaceArrangement(1, ())
    else:
        r2 = SubspaceArrangement(1, [RationalSubspace.full(1)])
    return {1: r1, 2: r2}


def product_resonance(arrs1, arrs2, i: int) -> SubspaceArrangement:
    """Set-level degree-i locus of a product from per-degree loci of the
    factors: union over p + q = i of pairwise direct sums.

    arrs1[p] is the degree-p arrangement of the first factor (index 0 is
    the trivial degree-0 locus), and likewise arrs2.  A trivial
    arrangement contributes its origin, so {0} x V means V embedded.
    """
    arrs1 = list(arrs1)
    arrs2 = list(arrs2)
    if not arrs1 or not arrs2:
        raise ValueError("need per-degree arrangements for both factors")
    n1 = arrs1[0].n
    n2 = arrs2[0].n
    if any(a.n != n1 for a in arrs1) or any(a.n != n2 for a in arrs2):
        raise ValueError("inconsistent ambient dimensions")
    out = []
    for p in range(len(arrs1)):
        q = i - p
        if not (0 <= q < len(arrs2)):
            continue
        comps1 = arrs1[p].components or (RationalSubspace.zero(n1),)
        comps2 = arrs2[q].components or (RationalSubspace.zero(n2),)
        for u in comps1:
            for v in comps2:
                rows = [tuple(b) + (Fraction(0),) * n2 for b in u.basis]
                rows += [(Fraction(0),) * n1 + tuple(b) for b in v.basis]
                out.append(RationalSubspace(n1 + n2, rows))
    return SubspaceArrangement(n1 + n2, out)


def wedge_resonance(n1: int, n2: int, i: int) -> SubspaceArrangement:
    """Degree-i locus of a one-point union: the full space in every
    positive degree up to the truncation, provided both halves have
    something in degree one."""
    if n1 < 1 or n2 < 1:
        raise ValueError("both factors need positive first Betti number")
    if i < 0:
        raise ValueError("degree must be >= 0")
    if i == 0:
        return SubspaceArrangement(n1 + n2, ())
    return SubspaceArrangement(
        n1 + n2, [RationalSubspace.full(n1 + n2)]
    )
