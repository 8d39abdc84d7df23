"""Degree-1 resonance of complex line arrangements, computed combinatorially.

An arrangement is given by rational linear forms in three variables
(lines in the projective plane).  Its degree-1 resonance variety is a
finite union of linear subspaces of Q^n, n the number of lines: one
"local" component for every intersection point lying on at least three
lines, plus "braid" components attached to six-line sub-arrangements
whose induced intersection pattern is four triple points covering each
line twice.  Every component this module reports is certified against
the rank-based cohomology oracle before being returned; a certification
miss raises OracleError rather than silently dropping or keeping the
candidate.

Components beyond the local and braid patterns can exist for
arrangements rich enough in triple points; see r1_completeness_note.
"""

import random
from fractions import Fraction

from .aomoto import aomoto_betti, quotient_exterior_algebra
from .qlinalg import (
    RationalSubspace,
    SubspaceArrangement,
    intersection_dim,
    primitive_integer_vector,
)

Q = Fraction


class OracleError(Exception):
    """A reported component failed (or a sample point contradicted) the rank oracle."""


# ---------------------------------------------------------------------------
# arrangement and incidence data
# ---------------------------------------------------------------------------


class ProjLineArrangement:
    """Lines in P^2, each given by a rational linear form (a, b, c).

    Forms must be nonzero and pairwise non-proportional.  Lines are
    numbered 1..n in input order everywhere in this module.
    """

    __slots__ = ("forms",)

    def __init__(self, forms):
        cleaned = []
        for f in forms:
            f = tuple(Q(x) for x in f)
            if len(f) != 3:
                raise ValueError("each form needs exactly 3 coefficients")
            if not any(f):
                raise ValueError("zero form is not a line")
            cleaned.append(f)
        for i in range(len(cleaned)):
            for j in range(i + 1, len(cleaned)):
                if _cross(cleaned[i], cleaned[j]) == (0, 0, 0):
                    raise ValueError(f"forms {i + 1} and {j + 1} are proportional")
        object.__setattr__(self, "forms", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("ProjLineArrangement is immutable")

    @property
    def n(self):
        return len(self.forms)

    def __eq__(self, other):
        return isinstance(other, ProjLineArrangement) and self.forms == other.forms

    def __hash__(self):
        return hash(self.forms)

    def __repr__(self):
        return f"ProjLineArrangement(n={self.n})"

    def to_json(self):
        return [[str(x) for x in f] for f in self.forms]

    @classmethod
    def from_json(cls, data):
        return cls([[Q(x) for x in f] for f in data])


class MultiplePoint:
    """An intersection point together with the (1-based) lines through it."""

    __slots__ = ("point", "lines")

    def __init__(self, point, lines):
        lines = tuple(sorted(lines))
        if len(lines) < 2:
            raise ValueError("a multiple point lies on at least two lines")
        object.__setattr__(self, "point", tuple(Q(x) for x in point))
        object.__setattr__(self, "lines", lines)

    def __setattr__(self, name, value):
        raise AttributeError("MultiplePoint is immutable")

    @property
    def multiplicity(self):
        return len(self.lines)

    def __eq__(self, other):
        return (
            isinstance(other, MultiplePoint)
            and self.point == other.point
            and self.lines == other.lines
        )

    def __hash__(self):
        return hash((self.point, self.lines))

    def __repr__(self):
        pt = ":".join(str(x) for x in self.point)
        return f"MultiplePoint([{pt}], lines={self.lines})"


def _cross(f, g):
    return (
        f[1] * g[2] - f[2] * g[1],
        f[2] * g[0] - f[0] * g[2],
        f[0] * g[1] - f[1] * g[0],
    )


def _dot3(f, p):
    return f[0] * p[0] + f[1] * p[1] + f[2] * p[2]


def multiple_points(arr: ProjLineArrangement):
    """All intersection points, each with the full set of lines through it.

    Pairwise cross products give candidate points; projective
    normalization (primitive integers, first nonzero entry positive)
    makes equality exact, and the line set of each point is recomputed
    by substitution so it is complete, whatever pair produced the point.
    """
    seen = {}
    for i in range(arr.n):
        for j in range(i + 1, arr.n):
            p = _cross(arr.forms[i], arr.forms[j])
            if p == (0, 0, 0):
                raise ValueError(f"forms {i + 1} and {j + 1} are proportional")
            key = primitive_integer_vector(p)
            if key in seen:
                continue
            lines = [k + 1 for k in range(arr.n) if _dot3(arr.forms[k], key) == 0]
            seen[key] = MultiplePoint(key, lines)
    return tuple(sorted(seen.values(), key=lambda m: (-m.multiplicity, m.lines)))


# ---------------------------------------------------------------------------
# resonance components
# ---------------------------------------------------------------------------


def local_components(arr: ProjLineArrangement) -> SubspaceArrangement:
    """One subspace per point on >= 3 lines.

    For a point on the line set J, the component is cut out by
    sum_{j in J} x_j = 0 together with x_i = 0 for every line i not
    in J; its dimension is |J| - 1.
    """
    n = arr.n
    comps = []
    for mp in multiple_points(arr):
        if mp.multiplicity < 3:
            continue
        comps.append(_point_subspace(n, mp.lines))
    return SubspaceArrangement(n, comps)


def _point_subspace(n, lines):
    member = set(lines)
    eqs = [tuple(Q(1) if k + 1 in member else Q(0) for k in range(n))]
    for k in range(n):
        if k + 1 not in member:
            eqs.append(tuple(Q(1) if c == k else Q(0) for c in range(n)))
    return RationalSubspace.from_equations(n, eqs)


class BraidComponent:
    """A six-line sub-arrangement with the four-triple pattern and its subspace.

    ``lines`` is the sorted 6-tuple of (1-based) line indices, ``pairs``
    the three pairs of lines sharing no triple point, and ``subspace``
    the 2-dimensional resonance component they span.
    """

    __slots__ = ("lines", "pairs", "subspace")

    def __init__(self, lines, pairs, subspace):
        object.__setattr__(self, "lines", tuple(sorted(lines)))
        object.__setattr__(
            self, "pairs", tuple(sorted(tuple(sorted(p)) for p in pairs))
        )
        object.__setattr__(self, "subspace", subspace)

    def __setattr__(self, name, value):
        raise AttributeError("BraidComponent is immutable")

    def __repr__(self):
        pp = "|".join(f"{a}{b}" for a, b in self.pairs)
        return f"BraidComponent(lines={self.lines}, pairs=({pp}))"


def _braid_pattern(points, subset):
    """Pairs of the matching when `subset` carries the braid pattern, else None.

    The pattern: the induced intersection points of the six chosen lines
    include exactly four triples, and each chosen line lies on exactly
    two of them.  (A point of higher induced multiplicity is then
    impossible by pair counting.)  Two lines are matched when they share
    no induced triple; the counts force this to be a perfect matching
    into three pairs.
    """
    chosen = set(subset)
    triples = []
    for mp in points:
        induced = tuple(sorted(chosen.intersection(mp.lines)))
        if len(induced) == 3:
            triples.append(induced)
        elif len(induced) > 3:
            return None
    if len(triples) != 4:
        return None
    count = {line: 0 for line in subset}
    for t in triples:
        for line in t:
            count[line] += 1
    if any(c != 2 for c in count.values()):
        return None
    pairs = []
    for line in subset:
        partners = {m for t in triples if line in t for m in t} - {line}
        rest = chosen - partners - {line}
        if len(rest) != 1:
            return None
        mate = rest.pop()
        if line < mate:
            pairs.append((line, mate))
    if len(pairs) != 3:
        return None
    return tuple(sorted(pairs))


def _braid_subspace(n, pairs):
    eqs = []
    support = {line for p in pairs for line in p}
    for a, b in pairs:
        row = [Q(0)] * n
        row[a - 1] = Q(1)
        row[b - 1] = Q(-1)
        eqs.append(tuple(row))
    row = [Q(0)] * n
    for a, _ in pairs:
        row[a - 1] = Q(1)
    eqs.append(tuple(row))
    for k in range(n):
        if k + 1 not in support:
            eqs.append(tuple(Q(1) if c == k else Q(0) for c in range(n)))
    return RationalSubspace.from_equations(n, eqs)


def braid_subarrangements(arr: ProjLineArrangement, seed=0):
    """All certified braid components, in index-tuple order.

    Scans every 6-subset of lines for the four-triple pattern, builds
    the matched-pair subspace, and certifies each candidate by sampling
    random points of the subspace and checking the rank oracle sees a
    jump there.  An uncertified candidate raises OracleError.
    """
    from itertools import combinations

    points = multiple_points(arr)
    algebra = os_algebra_deg2(arr)
    rng = random.Random(seed)
    found = []
    for subset in combinations(range(1, arr.n + 1), 6):
        pairs = _braid_pattern(points, subset)
        if pairs is None:
            continue
        sub = _braid_subspace(arr.n, pairs)
        _certify_on(algebra, sub, rng, what=f"braid candidate {subset}")
        found.append(BraidComponent(subset, pairs, sub))
    return tuple(found)


def _random_point_on(subspace, rng):
    while True:
        coeffs = [rng.randint(-9, 9) for _ in subspace.basis]
        v = [Q(0)] * subspace.n
        for c, row in zip(coeffs, subspace.basis):
            for k, x in enumerate(row):
                v[k] += c * x
        if any(v):
            return tuple(v)


def _certify_on(algebra, subspace, rng, what, samples=10):
    for _ in range(samples):
        a = _random_point_on(subspace, rng)
        if aomoto_betti(algebra, a, 1) < 1:
            raise OracleError(f"{what}: rank oracle sees no jump at {a}")


def r1_arrangement(arr: ProjLineArrangement, seed=0) -> SubspaceArrangement:
    """The full degree-1 resonance arrangement: local plus braid components.

    Every component is certified on random points by the rank oracle;
    random points off the union are checked to show no jump; and the
    components are verified to meet each other only in 0.  Any of these
    checks failing raises (OracleError for oracle disagreements).
    """
    n = arr.n
    algebra = os_algebra_deg2(arr)
    rng = random.Random(seed)
    comps = list(local_components(arr).components)
    comps.extend(b.subspace for b in braid_subarrangements(arr, seed=seed))
    result = SubspaceArrangement(n, comps)
    for sub in result.components:
        _certify_on(algebra, sub, rng, what=f"component of dim {sub.dim}")
    for _ in range(10):
        a = _random_off_union(result, rng)
        if aomoto_betti(algebra, a, 1) != 0:
            raise OracleError(f"rank oracle sees a jump off the union at {a}")
    pieces = result.components
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if intersection_dim(pieces[i], pieces[j]) != 0:
                raise ValueError("components must pairwise meet only in 0")
    return result


def _random_off_union(arrangement, rng):
    while True:
        v = tuple(Q(rng.randint(-9, 9)) for _ in range(arrangement.n))
        if any(v) and not arrangement.contains_vector(v):
            return v


def r1_completeness_note(arr: ProjLineArrangement):
    """Warn when components beyond the braid pattern could exist.

    Non-local components live on sub-arrangements partitioned into three
    classes with all inter-class intersections concurrent along multiple
    points; beyond the six-line braid pattern the smallest such carriers
    have nine lines, each passing through at least two points of
    multiplicity >= 3.  So when nine or more lines are that rich in
    triple points, the reported decomposition may miss components and
    the string "possibly incomplete beyond braid type" is returned;
    otherwise None.
    """
    points = multiple_points(arr)
    rich = set()
    per_line = {}
    for mp in points:
        if mp.multiplicity >= 3:
            for line in mp.lines:
                per_line[line] = per_line.get(line, 0) + 1
                if per_line[line] >= 2:
                    rich.add(line)
    if len(rich) >= 9:
        return "possibly incomplete beyond braid type"
    return None


# ---------------------------------------------------------------------------
# coarse cover bounds and the cohomology-ring presentation
# ---------------------------------------------------------------------------


def omega_bounds(arr: ProjLineArrangement, r: int):
    """Coarse answer for the rank-r cover invariant: 'full', 'empty', or 'undetermined'.

    With m the maximum multiplicity of an intersection point: only
    double points means the invariant is the whole Grassmannian;
    m >= 3 forces it empty once r >= n - m + 2; anything else needs the
    exact membership test.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    points = multiple_points(arr)
    m = max((mp.multiplicity for mp in points), default=2)
    if m == 2:
        return "full"
    if r >= arr.n - m + 2:
        return "empty"
    return "undetermined"


def os_algebra_deg2(arr: ProjLineArrangement):
    """Degree <= 2 part of the arrangement's cohomology ring, as a presentation.

    Degree 1 has one generator per line; degree 2 is the exterior square
    modulo one relation (e_i - e_j)(e_j - e_k) for every concurrent
    triple i < j < k of lines.
    """
    relations = []
    for mp in multiple_points(arr):
        if mp.multiplicity < 3:
            continue
        lines = mp.lines
        for a in range(len(lines)):
            for b in range(a + 1, len(lines)):
                for c in range(b + 1, len(lines)):
                    i, j, k = lines[a] - 1, lines[b] - 1, lines[c] - 1
                    relations.append({(i, j): Q(1), (i, k): Q(-1), (j, k): Q(1)})
    return quotient_exterior_algebra(arr.n, relations)
