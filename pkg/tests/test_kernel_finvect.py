"""The prime-field instance: Kronecker tensor, cokernels, inverses."""

import pytest

from morita import (EndpointMismatch, MatrixMor, NotCocone, NotPrime,
                    ShapeMismatch, finvect, matrix)


def test_modulus_must_be_prime():
    finvect(2), finvect(7)
    with pytest.raises(NotPrime):
        finvect(4)
    with pytest.raises(NotPrime):
        finvect(1)


def test_matrix_shapes_checked():
    matrix(2, [[1, 0], [0, 1]])
    with pytest.raises(ShapeMismatch):
        MatrixMor(2, 2, 2, ((1, 0),))
    with pytest.raises(ShapeMismatch):
        matrix(2, [], src=None)
    assert matrix(3, [], src=2).dst == 0


def test_entries_normalized_mod_p():
    m = matrix(3, [[4, -1]])
    assert m.entries == ((1, 2),)


def test_tensor_is_kronecker(fv2):
    a = matrix(2, [[1]])
    assert fv2.tensor_mor(a, a).entries == ((1,),)
    b = matrix(2, [[1, 1], [0, 1]])
    k = fv2.tensor_mor(b, b)
    assert k.src == 4 and k.dst == 4
    # lexicographic block layout: entry[(i,k),(j,l)] = b[i][j] * b[k][l]
    assert k.entries == ((1, 1, 1, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 1))


def test_compose_through_zero_dimension(fv2):
    f = MatrixMor(2, 1, 0, ())
    g = MatrixMor(2, 0, 1, ((),))
    fg = fv2.compose(f, g)
    assert fg.src == 1 and fg.dst == 1 and fg.entries == ((0,),)


def test_structure_isos_are_identities(fv2):
    assert fv2.alpha(1, 2, 3) == fv2.identity(6)
    assert fv2.lunitor(5) == fv2.identity(5)
    assert fv2.unit == 1


def test_coequalizer_is_cokernel(fv2):
    # the two coordinate insertions into the plane: cokernel has dim 1
    e0 = matrix(2, [[1], [0]])
    e1 = matrix(2, [[0], [1]])
    co = fv2.coequalize(e0, e1)
    assert co.apex == 1
    # canonical projection kills the difference e0 - e1
    diff = matrix(2, [[1], [1]])
    assert fv2.compose(e0, co.projection) == fv2.compose(e1, co.projection)
    assert fv2.is_epi(co.projection)
    h = matrix(2, [[1, 1]])
    u = fv2.coinduce(co, h)
    assert fv2.compose(co.projection, u) == h
    with pytest.raises(NotCocone):
        fv2.coinduce(co, matrix(2, [[1, 0]]))


def test_coequalizer_projection_is_canonical(fv2):
    # relation rows are reduced, so the projection keeps non-pivot
    # coordinates and rewrites pivots; repeated runs are identical
    f = matrix(2, [[1, 0], [1, 0], [0, 0]])
    g = matrix(2, [[0, 0], [0, 0], [0, 0]])
    one = fv2.coequalize(f, g)
    two = fv2.coequalize(f, g)
    assert one.projection == two.projection
    assert one.apex == 2
    assert one.projection.entries == ((1, 1, 0), (0, 0, 1))


def test_equalize_is_kernel_inclusion(fv2):
    f = matrix(2, [[1, 1]])
    g = matrix(2, [[0, 0]])
    eq = fv2.equalize(f, g)
    assert eq.apex == 1
    incl = eq.projection
    assert fv2.compose(incl, f) == fv2.compose(incl, g)


def test_predicates_and_inverse(fv2):
    sw = matrix(2, [[0, 1], [1, 0]])
    assert fv2.is_iso(sw)
    assert fv2.invert(sw) == sw
    up = matrix(2, [[1, 1], [0, 1]])
    assert fv2.compose(up, fv2.invert(up)) == fv2.identity(2)
    sing = matrix(2, [[1, 1], [1, 1]])
    assert not fv2.is_iso(sing)
    with pytest.raises(EndpointMismatch):
        fv2.invert(sing)
    wide = matrix(2, [[1, 0]])
    assert fv2.is_epi(wide) and not fv2.is_mono(wide)


def test_enumeration_counts(fv2):
    assert fv2.count_morphisms(2, 2) == 16
    assert len(list(fv2.enumerate_morphisms(1, 2))) == 4
    assert fv2.count_morphisms(0, 3) == 1
    assert fv2.sample_objects(2) == [0, 1, 2]
    p3 = finvect(3)
    assert p3.count_morphisms(1, 1) == 3
