"""Simplicial homology against an independent boundary-matrix oracle."""

import itertools
import random

from jumploci.simplicial import (
    SimplicialComplex,
    euler_characteristic_reduced,
    full_simplex,
    induced,
    link_in_induced,
    reduced_betti,
    reduced_betti_all,
)

from oracles import all_complexes, simplicial_betti_sympy


def _faces_by_dim(k):
    top = k.dim()
    return [
        sorted(tuple(sorted(f)) for f in k.faces if len(f) == d + 1)
        for d in range(top + 1)
    ]


def test_known_betti_numbers():
    # a full simplex is contractible
    assert reduced_betti_all(full_simplex(4)) == {-1: 0, 0: 0, 1: 0, 2: 0, 3: 0}
    # the boundary of a tetrahedron is a 2-sphere
    sphere = SimplicialComplex(
        [f for f in itertools.combinations((1, 2, 3, 4), 3)], 4
    )
    assert reduced_betti(sphere, 0) == 0
    assert reduced_betti(sphere, 1) == 0
    assert reduced_betti(sphere, 2) == 1
    # a hollow square is a circle
    circle = SimplicialComplex([(1, 2), (2, 3), (3, 4), (1, 4)], 4)
    assert reduced_betti(circle, 0) == 0
    assert reduced_betti(circle, 1) == 1
    # three isolated points
    pts = SimplicialComplex([(1,), (2,), (3,)], 3)
    assert reduced_betti(pts, 0) == 2
    # the empty complex carries its single reduced class in degree -1
    empty = SimplicialComplex((), 0)
    assert reduced_betti(empty, -1) == 1


def test_betti_matches_sympy_exhaustively_small():
    for n in range(0, 5):
        for k in all_complexes(n, SimplicialComplex):
            expect = simplicial_betti_sympy(_faces_by_dim(k))
            got = reduced_betti_all(k)
            for d, b in expect.items():
                assert got.get(d, 0) == b, (k, d)


def test_euler_characteristic_is_alternating_sum():
    rng = random.Random(17)
    pool = list(all_complexes(4, SimplicialComplex))
    for k in rng.sample(pool, 20):
        betti = reduced_betti_all(k)
        assert euler_characteristic_reduced(k) == sum(
            (-1) ** d * b for d, b in betti.items()
        )


def test_induced_and_link():
    k = SimplicialComplex([(1, 2, 3), (3, 4)], 4)
    sub = induced(k, (1, 2, 4))
    assert sub.has_face((1, 2))
    assert not sub.has_face((1, 4))
    lk = link_in_induced(k, (3,), (1, 2, 4))
    assert lk.has_face((1, 2))
    assert lk.has_face((4,))
    assert not lk.has_face((3,))
    try:
        link_in_induced(k, (3,), (2, 3))
        assert False, "sigma overlapping W must raise"
    except ValueError:
        pass


def test_skeleton_and_validation():
    k = full_simplex(4)
    sk = k.skeleton(1)
    assert sk.dim() == 1
    assert len(sk.one_skeleton_edges()) == 6
    try:
        SimplicialComplex([(1, 5)], 4)
        assert False, "vertex beyond the ambient range must raise"
    except ValueError:
        pass
