"""Opposite and product instances built on top of the concrete kernels."""

import pytest

from morita import (FinFunction, FinSetObj, MissingColimit, OpMor, ProdMor,
                    check_coherence, finset_disjoint, matrix,
                    opposite_instance, product_instance)


def test_opposite_unwraps(fs):
    op = opposite_instance(fs)
    assert opposite_instance(op) is fs
    assert repr(op) == "op(finset(+))"


def test_opposite_reverses_composition(fs):
    op = opposite_instance(fs)
    x = FinSetObj(("a", "b"))
    y = FinSetObj(("c",))
    f = OpMor(FinFunction(x, y, (0, 0)))  # runs y -> x over there
    g = OpMor(FinFunction(y, x, (1,)))    # runs x -> y over there
    assert f.src == y and f.dst == x
    gf = op.compose(g, f)
    assert gf.base == fs.compose(f.base, g.base)


def test_opposite_coequalizer_is_base_equalizer(fv2):
    op = opposite_instance(fv2)
    f = matrix(2, [[1, 1]])
    g = matrix(2, [[0, 0]])
    co = op.coequalize(OpMor(f), OpMor(g))
    assert co.apex == fv2.equalize(f, g).apex == 1


def test_opposite_without_equalizers_refuses():
    class Bare(type(finset_disjoint())):
        def equalize(self, f, g):
            raise NotImplementedError

    op = opposite_instance(Bare())
    x = FinSetObj(("a",))
    f = op.identity(x)
    with pytest.raises(MissingColimit):
        op.coequalize(f, f)


def test_opposite_swaps_epi_and_mono(fs):
    op = opposite_instance(fs)
    x = FinSetObj(("a", "b"))
    y = FinSetObj(("c",))
    surj = FinFunction(x, y, (0, 0))
    assert fs.is_epi(surj) and not fs.is_mono(surj)
    wrapped = next(m for m in op.enumerate_morphisms(y, x) if m.base == surj)
    assert op.is_mono(wrapped) and not op.is_epi(wrapped)


def test_product_runs_componentwise(fs, fv2):
    pr = product_instance(fs, fv2)
    x = (FinSetObj(("a",)), 2)
    assert pr.obj_size(x) == 2  # size budget: max of the components
    idx = pr.identity(x)
    assert idx.fst == fs.identity(x[0]) and idx.snd == fv2.identity(2)
    t = pr.tensor_obj(x, pr.unit)
    assert pr.runitor(x).src == t


def test_product_coequalizer_pairs_components(fs, fv2):
    pr = product_instance(fs, fv2)
    x = FinSetObj((0, 1))
    y = FinSetObj((0,))
    f = ProdMor(FinFunction(y, x, (0,)), matrix(2, [[1], [0]]))
    g = ProdMor(FinFunction(y, x, (1,)), matrix(2, [[0], [1]]))
    co = pr.coequalize(f, g)
    assert co.apex == (fs.coequalize(f.fst, g.fst).apex,
                       fv2.coequalize(f.snd, g.snd).apex)
    h = ProdMor(FinFunction(x, y, (0, 0)), matrix(2, [[1, 1]]))
    u = pr.coinduce(co, h)
    assert pr.compose(co.projection, u) == h


def test_product_coherence(fs, fv2):
    pr = product_instance(fs, fv2)
    rep = check_coherence(pr, pr.sample_objects(2))
    assert rep.ok


def test_product_enumeration(fs, fv2):
    pr = product_instance(fs, fv2)
    x = (FinSetObj(("a",)), 1)
    assert pr.count_morphisms(x, x) == 1 * 2
    assert len(list(pr.enumerate_morphisms(x, x))) == 2
