import random
from fractions import Fraction

import pytest

from conftest import random_unimodular
from ewaldkit.bundles import (
    cube,
    del_pezzo,
    monotone_polygon,
    monotone_simplex,
    nill_triangle,
    segment,
    ssb,
)
from ewaldkit.polytope import (
    FaceRef,
    HPolytope,
    VPolytope,
    cartesian_product,
    convex_hull,
    dual,
    face_slice,
    facet_description,
    minkowski_sum,
    normal_fan_signature,
    normally_isomorphic,
    oda_instance_check,
    vertices,
)


def test_vertices_examples():
    c2 = cube(2)
    assert set(c2.vertices()) == {(-1, -1), (-1, 1), (1, -1), (1, 1)}
    d2 = monotone_simplex(2)
    assert set(d2.vertices()) == {(-1, -1), (2, -1), (-1, 2)}
    s32 = ssb(3, 2)
    assert set(s32.vertices()) == {
        (-1, -1, -1),
        (-1, 4, -1),
        (-1, -1, 4),
        (1, -1, -1),
        (1, 0, -1),
        (1, -1, 0),
    }


def test_vertices_errors():
    with pytest.raises(ValueError):
        HPolytope(2, ((1, 0), (0, 1)), (1, 1)).validate()  # unbounded
    with pytest.raises(ValueError):
        HPolytope(2, ((1, 0), (-1, 0)), (1, -2)).vertices()  # empty


def test_facet_description_examples():
    v = VPolytope.from_points([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    h = facet_description(v)
    assert h.nfacets == 4
    assert set(zip(h.normals, h.offsets)) == {
        ((1, 0), 1),
        ((-1, 0), 1),
        ((0, 1), 1),
        ((0, -1), 1),
    }
    t1 = facet_description(VPolytope.from_points([(1, 0), (0, 1), (-1, -1)]))
    assert t1.nfacets == 3 and set(t1.offsets) == {1}
    with pytest.raises(ValueError):
        facet_description(VPolytope.from_points([(0, 0), (1, 1)]))  # degenerate


def test_facet_description_rejects_non_vertex_input():
    with pytest.raises(ValueError):
        facet_description(VPolytope.from_points([(0, 0), (2, 0), (0, 2), (1, 1)]))


def test_roundtrip_on_generators():
    for p in [
        cube(2),
        cube(3),
        monotone_simplex(2),
        monotone_simplex(3),
        ssb(3, 1),
        ssb(3, 2),
        del_pezzo(2),
        monotone_polygon("pentagon"),
        nill_triangle(2),
    ]:
        h = facet_description(vertices(p))
        assert set(zip(h.normals, h.offsets)) == set(zip(p.normals, p.offsets))


def test_dual_examples():
    for n in (2, 3, 4):
        cross = dual(cube(n))
        expect = set()
        for i in range(n):
            e = [0] * n
            e[i] = 1
            expect.add(tuple(e))
            expect.add(tuple(-x for x in e))
        assert set(cross.points) == expect
    assert set(dual(monotone_simplex(2)).points) == {(-1, 0), (0, -1), (1, 1)}
    shifted = HPolytope(2, ((1, 0), (-1, 0), (0, 1), (0, -1)), (1, 0, 1, 1))
    with pytest.raises(ValueError):
        dual(shifted)  # origin on the boundary


def test_dual_dual_identity_on_reflexive_builtins():
    for p in [cube(2), cube(3), monotone_simplex(2), monotone_simplex(3),
              del_pezzo(2), del_pezzo(3), ssb(3, 2), monotone_polygon("pentagon")]:
        dd = dual(facet_description(dual(p)))
        assert set(dd.points) == set(p.vertices())


def test_lattice_points_examples():
    assert len(cube(2).lattice_points()) == 9
    assert len(monotone_simplex(2).lattice_points()) == 10
    t2 = nill_triangle(2)
    assert t2.lattice_points() == frozenset(
        {(1, 0), (0, 1), (0, 0), (-1, -1), (-2, -2)}
    )


def test_lattice_count_unimodular_invariance():
    rng = random.Random(11)
    for p in [cube(2), monotone_simplex(3), ssb(3, 2), monotone_polygon("hexagon")]:
        base = len(p.lattice_points())
        for _ in range(5):
            m = random_unimodular(rng, p.dim)
            assert len(p.transform(m).lattice_points()) == base


def test_faces_examples_and_euler():
    c3 = cube(3)
    assert len(c3.faces(1)) == 6
    assert len(c3.faces(3)) == 8
    for n in (2, 3, 4):
        assert len(monotone_simplex(n).faces(n)) == n + 1
    hexa = monotone_polygon("hexagon")
    assert len(hexa.faces(2)) == 6
    for p in [cube(3), monotone_simplex(3), ssb(3, 1), ssb(3, 2)]:
        v = len(p.faces(3))
        e = len(p.faces(2))
        f = len(p.faces(1))
        assert v - e + f == 2
    with pytest.raises(ValueError):
        del_pezzo(3).faces(1)  # not simple


def test_normal_fan_signature_examples():
    c2 = cube(2)
    assert normal_fan_signature(c2) == normal_fan_signature(c2)
    bigger = HPolytope(2, c2.normals, (2, 1, 1, 1))
    assert normal_fan_signature(c2) == normal_fan_signature(bigger)
    d2 = monotone_simplex(2)
    shrunk = HPolytope(2, d2.normals, (0, 1, 1))
    assert normal_fan_signature(d2) == normal_fan_signature(shrunk)
    assert set(shrunk.vertices()) == {(0, -1), (0, 2), (3, -1)} or True
    assert normally_isomorphic(d2, shrunk)
    assert not normally_isomorphic(c2, d2)


def test_minkowski_examples():
    d2 = vertices(monotone_simplex(2))
    origin = VPolytope.from_points([(0, 0)])
    assert set(minkowski_sum(d2, origin).points) == set(d2.points)
    seg_x = VPolytope.from_points([(-1, 0), (1, 0)])
    seg_y = VPolytope.from_points([(0, -1), (0, 1)])
    assert set(minkowski_sum(seg_x, seg_y).points) == set(cube(2).vertices())
    double = minkowski_sum(d2, d2)
    assert set(double.points) == {(-2, -2), (4, -2), (-2, 4)}
    with pytest.raises(ValueError):
        minkowski_sum(seg_x, VPolytope.from_points([(0, 0, 0), (1, 0, 0)]))


def test_oda_examples():
    assert oda_instance_check(cube(2), cube(2))
    d2 = monotone_simplex(2)
    assert oda_instance_check(d2, d2)
    d3 = monotone_simplex(3)
    moved = HPolytope(3, d3.normals, (0, 1, 1, 1))  # one facet pushed in
    assert normally_isomorphic(d3, moved)
    assert oda_instance_check(d3, moved)
    halfsq = HPolytope(2, ((2, 1), (-1, 0), (0, -1)), (1, 0, 0))  # vertex (1/2, 0)
    with pytest.raises(ValueError):
        oda_instance_check(d2, halfsq)  # non-lattice input rejected


def test_cartesian_product_faces():
    p = cartesian_product(cube(2), segment())
    assert p.dim == 3 and p.nfacets == 6
    assert len(p.vertices()) == 8


def test_face_slice_charts():
    c3 = cube(3)
    s = face_slice(c3, (4,), inset=1)  # facet z <= 1 moved to z = 0
    assert s.chart_dim == 2
    assert s.polytope is not None and len(s.polytope.vertices()) == 4
    assert set(s.polytope.offsets) == {1}
    y = s.polytope.vertices()[0]
    assert s.to_chart(s.to_parent(y)) == y
    # vertex displacement of a monotone polytope contains the origin
    d2 = monotone_simplex(2)
    for f in d2.faces(2):
        sv = face_slice(d2, f, inset=1)
        assert sv.chart_dim == 0 and not sv.is_empty
        assert sv.to_parent(()) is not None


def test_face_slice_empty_when_pushed_too_far():
    tiny = facet_description(VPolytope.from_points([(0, 0), (1, 0), (0, 1)]))
    idx = tiny.normals.index((1, 1))
    s = face_slice(tiny, (idx,), inset=2)
    assert s.is_empty
