"""Projective line arrangements: intersection lattice, degree-one
resonance components, certification."""

import random
from fractions import Fraction
from math import comb

from jumploci.arrangements import (
    ProjLineArrangement,
    braid_subarrangements,
    local_components,
    multiple_points,
    omega_bounds,
    os_algebra_deg2,
    r1_arrangement,
    r1_completeness_note,
)
from jumploci.qlinalg import RationalSubspace, intersection_dim

Q = Fraction

BRAID = ((1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1))

DELETED_B3 = (
    (1, 0, 0),
    (0, 1, 0),
    (1, -1, 0),
    (1, 1, 0),
    (1, 0, -1),
    (1, 0, 1),
    (0, 1, -1),
    (0, 1, 1),
)

NEAR_PENCIL = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, -1))

FULL_B3 = (
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, -1, 0),
    (1, 1, 0),
    (1, 0, -1),
    (1, 0, 1),
    (0, 1, -1),
    (0, 1, 1),
)


def test_braid_intersection_points():
    arr = ProjLineArrangement(BRAID)
    pts = multiple_points(arr)
    triples = [p.lines for p in pts if p.multiplicity == 3]
    doubles = [p.lines for p in pts if p.multiplicity == 2]
    assert triples == [(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)]
    assert doubles == [(1, 6), (2, 5), (3, 4)]


def test_pair_count_identity_on_seeded_arrangements():
    # every pair of lines meets in exactly one projective point, so the
    # multiplicities always satisfy sum C(m, 2) = C(n, 2)
    rng = random.Random(14)
    built = 0
    while built < 15:
        n = rng.randint(3, 6)
        forms = set()
        while len(forms) < n:
            f = tuple(rng.randint(-2, 2) for _ in range(3))
            if f == (0, 0, 0):
                continue
            try:
                ProjLineArrangement(tuple(forms) + (f,))
            except ValueError:
                continue
            forms.add(f)
        arr = ProjLineArrangement(tuple(sorted(forms)))
        pts = multiple_points(arr)
        assert sum(comb(p.multiplicity, 2) for p in pts) == comb(n, 2)
        built += 1


def _point_component(n, lines):
    eqs = [tuple(1 if j in lines else 0 for j in range(1, n + 1))]
    for i in range(1, n + 1):
        if i not in lines:
            eqs.append(tuple(1 if j == i else 0 for j in range(1, n + 1)))
    return RationalSubspace.from_equations(n, eqs)


def test_braid_local_and_nonlocal_components():
    arr = ProjLineArrangement(BRAID)
    locals_ = local_components(arr)
    assert len(locals_.components) == 4
    assert all(c.dim == 2 for c in locals_.components)
    for lines in ((1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)):
        assert _point_component(6, lines) in locals_.components
    braids = braid_subarrangements(arr)
    assert len(braids) == 1
    assert braids[0].pairs == ((1, 6), (2, 5), (3, 4))
    expected = RationalSubspace.from_equations(
        6,
        [
            (1, 1, 1, 0, 0, 0),
            (1, 0, 0, 0, 0, -1),
            (0, 1, 0, 0, -1, 0),
            (0, 0, 1, -1, 0, 0),
        ],
    )
    assert braids[0].subspace == expected


def test_braid_resonance_arrangement():
    arr = ProjLineArrangement(BRAID)
    res = r1_arrangement(arr)
    assert len(res.components) == 5
    assert all(c.dim == 2 for c in res.components)
    for i, a in enumerate(res.components):
        for b in res.components[i + 1 :]:
            assert intersection_dim(a, b) == 0
    assert r1_completeness_note(arr) is None
    alg = os_algebra_deg2(arr)
    assert alg.dims == (1, 6, 11)


def test_deleted_b3_components():
    arr = ProjLineArrangement(DELETED_B3)
    pts = multiple_points(arr)
    assert [p.lines for p in pts if p.multiplicity == 4] == [(1, 2, 3, 4)]
    assert [p.lines for p in pts if p.multiplicity == 3] == [
        (1, 5, 6),
        (2, 7, 8),
        (3, 5, 7),
        (3, 6, 8),
        (4, 5, 8),
        (4, 6, 7),
    ]
    locals_ = local_components(arr)
    assert len(locals_.components) == 7
    assert sorted(c.dim for c in locals_.components) == [2, 2, 2, 2, 2, 2, 3]
    assert _point_component(8, (1, 2, 3, 4)) in locals_.components
    braids = braid_subarrangements(arr)
    assert [b.pairs for b in braids] == [
        ((1, 7), (3, 6), (4, 5)),
        ((1, 8), (3, 5), (4, 6)),
        ((2, 5), (3, 8), (4, 7)),
        ((2, 6), (3, 7), (4, 8)),
        ((3, 4), (5, 6), (7, 8)),
    ]
    res = r1_arrangement(arr)
    assert len(res.components) == 12
    assert res.codim() == 5
    assert r1_completeness_note(arr) is None
    assert os_algebra_deg2(arr).dims == (1, 8, 19)


def test_near_pencil_and_generic():
    pencil = ProjLineArrangement(NEAR_PENCIL)
    pts = multiple_points(pencil)
    assert [p.lines for p in pts if p.multiplicity >= 3] == [(2, 3, 4)]
    res = r1_arrangement(pencil)
    assert len(res.components) == 1
    assert res.components[0] == RationalSubspace.from_equations(
        4, [(0, 1, 1, 1), (1, 0, 0, 0)]
    )
    assert os_algebra_deg2(pencil).dims == (1, 4, 5)

    generic = ProjLineArrangement(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert all(p.multiplicity == 2 for p in multiple_points(generic))
    assert r1_arrangement(generic).is_trivial()


def test_coarse_cover_bounds():
    generic = ProjLineArrangement(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    for r in (1, 2, 3):
        assert omega_bounds(generic, r) == "full"
    pencil = ProjLineArrangement(NEAR_PENCIL)
    assert omega_bounds(pencil, 2) == "undetermined"
    assert omega_bounds(pencil, 3) == "empty"
    try:
        omega_bounds(pencil, 0)
        assert False, "rank below one must raise"
    except ValueError:
        pass


def test_completeness_note_fires_on_rich_arrangements():
    assert r1_completeness_note(ProjLineArrangement(FULL_B3)) is not None
    assert r1_completeness_note(ProjLineArrangement(BRAID)) is None
    assert r1_completeness_note(ProjLineArrangement(NEAR_PENCIL)) is None


def test_resonance_is_deterministic_across_seeds():
    arr = ProjLineArrangement(BRAID)
    assert r1_arrangement(arr, seed=0) == r1_arrangement(arr, seed=99)


def test_form_validation():
    try:
        ProjLineArrangement(((0, 0, 0), (1, 0, 0)))
        assert False, "zero form must raise"
    except ValueError:
        pass
    try:
        ProjLineArrangement(((1, 0, 0), (2, 0, 0)))
        assert False, "proportional forms must raise"
    except ValueError:
        pass
    try:
        ProjLineArrangement(((1, 0), (0, 1)))
        assert False, "forms must have three coefficients"
    except ValueError:
        pass
