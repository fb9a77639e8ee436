"""The disjoint-union instance: objects, tensor, structure isos, colimits."""

import pytest

from morita import (EndpointMismatch, FinFunction, NotCocone, NotParallel,
                    ShapeMismatch, finfunction, finset_obj)


def test_objects_sort_and_reject_duplicates():
    assert finset_obj([2, 0, 1]).elements == (0, 1, 2)
    assert finset_obj(["b", "a"]).elements == ("a", "b")
    # ints sort before strings before tuples, regardless of spelling
    assert finset_obj(["x", 3, (1, 2)]).elements == (3, "x", (1, 2))
    with pytest.raises(ShapeMismatch):
        finset_obj([0, 0])
    with pytest.raises(ShapeMismatch):
        finset_obj([True])


def test_tensor_is_tagged_concatenation(fs):
    x, y = finset_obj(["a"]), finset_obj([0, 1])
    t = fs.tensor_obj(x, y)
    assert t.elements == ((0, "a"), (1, 0), (1, 1))
    assert fs.tensor_obj(fs.unit, y).elements == ((1, 0), (1, 1))


def test_tensor_of_functions_acts_blockwise(fs):
    x, y = finset_obj([0]), finset_obj([0, 1])
    f = finfunction(x, y, {0: 1})
    g = finfunction(y, y, {0: 0, 1: 0})
    fg = fs.tensor_mor(f, g)
    assert fg.as_dict() == {(0, 0): (0, 1), (1, 0): (1, 0), (1, 1): (1, 0)}


def test_composition_and_identity(fs):
    x, y = finset_obj([0, 1]), finset_obj(["p", "q"])
    f = finfunction(x, y, {0: "q", 1: "p"})
    assert fs.compose(fs.identity(x), f) == f
    assert fs.compose(f, fs.identity(y)) == f
    g = finfunction(y, x, {"p": 0, "q": 0})
    assert fs.compose(f, g).table == (0, 0)


def test_structure_isos_are_identity_shaped(fs):
    x, y, z = finset_obj([0]), finset_obj(["a"]), finset_obj([0, 1])
    al = fs.alpha(x, y, z)
    assert al.table == tuple(range(4))
    assert al.src == fs.tensor_obj(fs.tensor_obj(x, y), z)
    assert al.dst == fs.tensor_obj(x, fs.tensor_obj(y, z))
    assert fs.compose(al, fs.alpha_inv(x, y, z)) == fs.identity(al.src)
    assert fs.lunitor(z).dst == z
    assert fs.compose(fs.runitor_inv(z), fs.runitor(z)) == fs.identity(z)


def test_coequalizer_merges_and_keeps_least_label(fs):
    x, y = finset_obj([0]), finset_obj([0, 1])
    f = finfunction(x, y, {0: 0})
    g = finfunction(x, y, {0: 1})
    co = fs.coequalize(f, g)
    assert len(co.apex) == 1
    assert co.apex.elements == (0,)
    assert co.projection.table == (0, 0)


def test_coequalizer_of_equal_maps_is_identity_like(fs):
    x = finset_obj([0, 1])
    f = fs.identity(x)
    co = fs.coequalize(f, f)
    assert co.apex == x
    assert co.projection == fs.identity(x)


def test_coequalize_rejects_nonparallel(fs):
    x, y = finset_obj([0]), finset_obj([0, 1])
    f = finfunction(x, y, {0: 0})
    with pytest.raises(NotParallel):
        fs.coequalize(f, fs.identity(x))


def test_coinduce_factors_through_quotient(fs):
    x, y, z = finset_obj([0]), finset_obj([0, 1]), finset_obj(["label"])
    f, g = finfunction(x, y, {0: 0}), finfunction(x, y, {0: 1})
    co = fs.coequalize(f, g)
    h = finfunction(y, z, {0: "label", 1: "label"})
    u = fs.coinduce(co, h)
    assert fs.compose(co.projection, u) == h
    bad = finfunction(y, y, {0: 0, 1: 1})
    with pytest.raises(NotCocone):
        fs.coinduce(co, bad)


def test_equalizer_is_agreement_subset(fs):
    y = finset_obj([0, 1, 2])
    f = finfunction(y, y, {0: 0, 1: 1, 2: 0})
    g = finfunction(y, y, {0: 0, 1: 1, 2: 1})
    eq = fs.equalize(f, g)
    assert eq.apex.elements == (0, 1)
    h = finfunction(finset_obj(["w"]), y, {"w": 1})
    lift = fs.equalizer_factor(eq, h)
    assert fs.compose(lift, eq.projection) == h


def test_predicates_and_inverse(fs):
    x = finset_obj([0, 1])
    sw = finfunction(x, x, {0: 1, 1: 0})
    assert fs.is_iso(sw) and fs.is_epi(sw) and fs.is_mono(sw)
    assert fs.invert(sw) == sw
    co = finfunction(x, finset_obj([0]), {0: 0, 1: 0})
    assert fs.is_epi(co) and not fs.is_mono(co)
    with pytest.raises(EndpointMismatch):
        fs.invert(co)


def test_enumeration_counts(fs):
    x, y = finset_obj([0, 1]), finset_obj([0, 1, 2])
    assert fs.count_morphisms(x, y) == 9
    assert len(list(fs.enumerate_morphisms(x, y))) == 9
    assert fs.count_morphisms(fs.unit, y) == 1
    assert fs.count_morphisms(y, fs.unit) == 0
    assert [len(o) for o in fs.sample_objects(2)] == [0, 1, 2]


def test_function_shape_checks():
    x, y = finset_obj([0, 1]), finset_obj([0])
    with pytest.raises(ShapeMismatch):
        FinFunction(x, y, (0,))
    with pytest.raises(ShapeMismatch):
        FinFunction(x, y, (0, 1))
