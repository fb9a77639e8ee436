"""Simplices: boundary checks, faces, degeneracies, the 3-cell equation."""

import pytest

from morita import (BoundaryMismatch, IndexOutOfRange, Simplex1, Simplex2,
                    Simplex3, balanced_tensor, degenerate, degenerate_edge,
                    degenerate_four, degenerate_tetrahedron,
                    degenerate_triangle, face, find_equivalence_witness,
                    identity_bimodule, identity_map, mark,
                    triangle_equation_sides, unit_left, unit_right,
                    validate_simplex2, validate_simplex3, validate_simplex4)
from morita.nerve import is_marked

from conftest import fold, pair_algebra, span, swap_twist


def edges(fs):
    a = fold(fs, ["a"], "A")
    b = fold(fs, ["b"], "B")
    c = fold(fs, ["c"], "C")
    m = Simplex1(span(fs, a, b, ["m0", "m1"], {"a": "m0"}, {"b": "m1"}, "M"))
    n = Simplex1(span(fs, b, c, ["n0"], {"b": "n0"}, {"c": "n0"}, "N"))
    return a, b, c, m, n


def composite_triangle(m, n):
    t = balanced_tensor(m.bimodule, n.bimodule)
    return Simplex2(m, n, Simplex1(t.bimodule), identity_map(t.bimodule))


def test_edge_faces_are_vertices(fs):
    a, b, _, m, _ = edges(fs)
    assert face(m, 0) == b and face(m, 1) == a
    with pytest.raises(IndexOutOfRange):
        face(m, 2)


def test_marking(fs, fv2):
    a, _, _, m, _ = edges(fs)
    assert not is_marked(m)
    e = degenerate_edge(a)
    assert is_marked(e)
    tw = swap_twist(fv2, pair_algebra(fv2))
    w = find_equivalence_witness(tw)
    assert is_marked(mark(Simplex1(tw), w))
    with pytest.raises(BoundaryMismatch):
        mark(Simplex1(identity_bimodule(a)), w)


def test_triangle_boundary_checks(fs):
    a, b, c, m, n = edges(fs)
    tri = composite_triangle(m, n)
    assert face(tri, 0) == n and face(tri, 2) == m
    assert validate_simplex2(tri).ok
    assert tri.marked  # the identity map is an iso
    with pytest.raises(BoundaryMismatch):
        Simplex2(n, m, tri.m02, tri.map)  # edges do not share a vertex
    with pytest.raises(BoundaryMismatch):
        Simplex2(m, n, m, tri.map)  # long edge has wrong endpoints


def test_degenerate_triangles_use_unit_maps(fs):
    _, _, _, m, _ = edges(fs)
    t0 = degenerate_triangle(m, 0)
    assert t0.map == unit_left(m.bimodule)
    assert validate_simplex2(t0).ok
    t1 = degenerate_triangle(m, 1)
    assert t1.map == unit_right(m.bimodule)
    assert validate_simplex2(t1).ok
    with pytest.raises(IndexOutOfRange):
        degenerate_triangle(m, 2)


def test_degenerate_tetrahedra_satisfy_equation(fs):
    _, _, _, m, n = edges(fs)
    tri = composite_triangle(m, n)
    for i in range(3):
        tet = degenerate_tetrahedron(tri, i)
        rep = validate_simplex3(tet)
        assert rep.ok, (i, rep.render(only_failures=True))
    with pytest.raises(IndexOutOfRange):
        degenerate_tetrahedron(tri, 3)


def test_tetrahedron_boundary_mismatch(fs):
    _, _, _, m, n = edges(fs)
    tri = composite_triangle(m, n)
    other = degenerate_triangle(m, 1)
    with pytest.raises(BoundaryMismatch):
        Simplex3(d0=tri, d1=tri, d2=other, d3=other)


def test_equation_sides_are_parallel(fs):
    _, _, _, m, n = edges(fs)
    tet = degenerate_tetrahedron(composite_triangle(m, n), 1)
    lhs, rhs = triangle_equation_sides(tet)
    assert lhs.src == rhs.src and lhs.dst == rhs.dst
    assert lhs.mor == rhs.mor


def test_edge_lookup_in_tetrahedron(fs):
    _, _, _, m, n = edges(fs)
    tet = degenerate_tetrahedron(composite_triangle(m, n), 0)
    assert tet.edge(2, 3) == n
    with pytest.raises(IndexOutOfRange):
        tet.edge(1, 1)


def test_degenerate_four_validates(fs):
    _, _, _, m, n = edges(fs)
    tet = degenerate_tetrahedron(composite_triangle(m, n), 1)
    for i in range(4):
        s4 = degenerate_four(tet, i)
        rep = validate_simplex4(s4)
        assert rep.ok, (i, rep.render(only_failures=True))
    with pytest.raises(IndexOutOfRange):
        degenerate_four(tet, 4)


def test_simplicial_identities_on_degeneracies(fs):
    a, _, _, m, _ = edges(fs)
    # d_i s_i = id = d_{i+1} s_i on edges and triangles
    assert face(degenerate(m, 0), 0) == m
    assert face(degenerate(m, 0), 1) == m
    assert face(degenerate(m, 1), 1) == m
    assert face(degenerate(m, 1), 2) == m
    e = degenerate(a, 0)
    assert face(e, 0) == a and face(e, 1) == a
    tri = degenerate_triangle(m, 0)
    for i in range(3):
        tet = degenerate(tri, i)
        assert face(tet, i) == tri and face(tet, i + 1) == tri
