"""Independent recomputation used by the tests.

Everything here deliberately avoids the package's own linear algebra:
ranks come from sympy, coset membership from bounded brute-force search,
partitions from restricted-growth strings.  The tests freeze expected
values computed by these slow oracles and then assert the fast code
paths agree.
"""

import itertools
from fractions import Fraction

import sympy

Q = Fraction


def sympy_rank(rows):
    if not rows:
        return 0
    m = sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows])
    return m.rank()


def meets_rank(p_basis, l_basis, n):
    """Do the two spans share a nonzero vector?  Decided by stacking bases:
    dim(P + L) < dim P + dim L exactly when the intersection is nonzero."""
    dp = sympy_rank(p_basis)
    dl = sympy_rank(l_basis)
    return sympy_rank(list(p_basis) + list(l_basis)) < dp + dl


def in_span(vector, basis):
    r = sympy_rank(basis)
    return sympy_rank(list(basis) + [vector]) == r


def brute_coset_hits(q, basis, n, box):
    """Does q + lambda lie in the span for some integer shift with
    |lambda_i| <= box?  Exhaustive search; the bound must be chosen by the
    caller to cover the denominators in play."""
    for shift in itertools.product(range(-box, box + 1), repeat=n):
        moved = [qi + si for qi, si in zip(q, shift)]
        if in_span(moved, basis):
            return True
    return False


def rg_partitions(items):
    """All set partitions, from restricted-growth strings."""
    items = list(items)
    k = len(items)
    if k == 0:
        yield []
        return
    rgs = [0] * k
    while True:
        nblocks = max(rgs) + 1
        blocks = [[] for _ in range(nblocks)]
        for item, b in zip(items, rgs):
            blocks[b].append(item)
        yield blocks
        # advance to the next restricted-growth string
        i = k - 1
        while i > 0 and rgs[i] > max(rgs[:i]):
            rgs[i] = 0
            i -= 1
        if i == 0:
            return
        rgs[i] += 1


def random_vector(rng, n, lo=-5, hi=5):
    return tuple(Q(rng.randint(lo, hi)) for _ in range(n))


def random_subspace_basis(rng, n, dim, lo=-5, hi=5):
    """Integer row vectors spanning an exactly dim-dimensional subspace."""
    if dim == 0:
        return []
    while True:
        rows = [[Q(rng.randint(lo, hi)) for _ in range(n)] for _ in range(dim)]
        if sympy_rank(rows) == dim:
            return rows


def random_laurent_terms(rng, n, max_terms):
    """Support/coefficient pairs with coefficient sum zero (the polynomial
    vanishes at the identity), at least two terms, exponents in a small box."""
    distinct = 5 ** n  # exponents live in {-2..2}^n
    while True:
        size = rng.randint(2, min(max_terms, distinct))
        support = set()
        while len(support) < size:
            support.add(tuple(rng.randint(-2, 2) for _ in range(n)))
        support = sorted(support)
        coeffs = [Q(rng.randint(-3, 3)) for _ in support[:-1]]
        coeffs.append(-sum(coeffs))
        terms = {e: c for e, c in zip(support, coeffs) if c != 0}
        if len(terms) >= 2:
            return terms


def all_complexes(n, complex_cls):
    """Every simplicial complex on vertex set {1..n} with all vertices
    present, built one dimension at a time: the faces of each size are an
    arbitrary family whose boundaries all appeared at the previous size."""
    verts = tuple(range(1, n + 1))
    if n == 0:
        yield complex_cls((), 0)
        return

    def powerset(seq):
        for r in range(len(seq) + 1):
            yield from itertools.combinations(seq, r)

    def extend(levels, size):
        prev = set(levels[-1])
        candidates = [
            c
            for c in itertools.combinations(verts, size)
            if all(s in prev for s in itertools.combinations(c, size - 1))
        ]
        for chosen in powerset(candidates):
            grown = levels + [chosen]
            if size == n or not chosen:
                yield grown
            else:
                yield from extend(grown, size + 1)

    for levels in extend([tuple((v,) for v in verts)], 2):
        yield complex_cls([f for lvl in levels for f in lvl], n)


def canonical_graphs(n):
    """One edge list per isomorphism class of simple graphs on n vertices
    (1-based labels).  A graph is kept when its edge bitmask is minimal in
    its relabeling orbit."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    for mask in range(1 << len(pairs)):
        minimal = True
        for perm in perms:
            image = 0
            for i, (a, b) in enumerate(pairs):
                if mask >> i & 1:
                    pa, pb = perm[a], perm[b]
                    image |= 1 << index[(pa, pb) if pa < pb else (pb, pa)]
            if image < mask:
                minimal = False
                break
        if minimal:
            yield [
                (a + 1, b + 1)
                for i, (a, b) in enumerate(pairs)
                if mask >> i & 1
            ]


def simplicial_betti_sympy(faces_by_dim):
    """Reduced Betti numbers from scratch: boundary matrices over the
    rationals, ranks via sympy.  `faces_by_dim[k]` lists the k-faces as
    sorted tuples; the empty face is implicit."""
    maxdim = len(faces_by_dim) - 1
    ranks = {}
    for k in range(0, maxdim + 1):
        rows = faces_by_dim[k - 1] if k >= 1 else [()]
        cols = faces_by_dim[k]
        row_index = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, face in enumerate(cols):
            for drop in range(len(face)):
                sub = face[:drop] + face[drop + 1 :]
                mat[row_index[sub]][j] = (-1) ** drop
        ranks[k] = sympy_rank(mat) if rows and cols else 0
    betti = {}
    for k in range(0, maxdim + 1):
        betti[k] = len(faces_by_dim[k]) - ranks[k] - ranks.get(k + 1, 0)
    betti[-1] = 1 - ranks.get(0, 0)
    return betti
