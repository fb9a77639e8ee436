"""The independent quotient recomputation agrees with the library exactly."""

from dataclasses import replace

import pytest

from morita import (Bimodule, Monoid, MonoidMismatch, ProdMor,
                    QuotientDescription, UnsupportedInstance, balanced_tensor,
                    identity_bimodule, matrix, opposite_instance,
                    product_instance, quotient_oracle)

from conftest import field_monoid, fold, pair_algebra, span, swap_twist


def chain(fs):
    a = fold(fs, ["a"], "A")
    b = fold(fs, ["b"], "B")
    c = fold(fs, ["c"], "C")
    m = span(fs, a, b, ["m0", "m1"], {"a": "m0"}, {"b": "m1"}, "M")
    n = span(fs, b, c, ["n0"], {"b": "n0"}, {"c": "n0"}, "N")
    return a, b, c, m, n


def test_finset_hand_example(fs):
    _, _, _, m, n = chain(fs)
    desc = quotient_oracle(fs, m, n)
    # m1 and n0 glue along the middle legs; m0 stays alone
    assert desc.classes == ((((0, "m0"),)), (((0, "m1"), (1, "n0"))))
    assert desc.matches(balanced_tensor(m, n))


def test_finset_regular_absorption(fs):
    _, b, _, m, _ = chain(fs)
    desc = quotient_oracle(fs, m, identity_bimodule(b))
    assert desc.matches(balanced_tensor(m, identity_bimodule(b)))
    # every class contains exactly one element of the original carrier
    assert len(desc.classes) == len(m.carrier.elements)


def test_finvect_hand_examples(fv2):
    f = field_monoid(fv2)
    reg = identity_bimodule(f)
    desc = quotient_oracle(fv2, reg, reg)
    assert desc.apex == 1
    assert desc.matches(balanced_tensor(reg, reg))
    tw = swap_twist(fv2, pair_algebra(fv2))
    desc2 = quotient_oracle(fv2, tw, tw)
    assert desc2.apex == 2
    assert desc2.matches(balanced_tensor(tw, tw))


def test_middle_monoid_checked(fs):
    a, _, _, m, _ = chain(fs)
    with pytest.raises(MonoidMismatch):
        quotient_oracle(fs, m, identity_bimodule(a))


def test_mismatch_detected(fs):
    _, _, _, m, n = chain(fs)
    desc = quotient_oracle(fs, m, n)
    honest = balanced_tensor(m, n)
    # same-shape corruption: send the left leg to the other class
    la = honest.bimodule.lact
    poked_lact = type(la)(la.src, la.dst, (1,) + la.table[1:])
    assert poked_lact != la
    poked = replace(honest, bimodule=replace(honest.bimodule, lact=poked_lact))
    assert not desc.matches(poked)


def test_product_recursion(fs, fv2):
    pr = product_instance(fs, fv2)
    a, b, _, m, n = chain(fs)
    f = field_monoid(fv2)
    reg = identity_bimodule(f)
    pa = Monoid(pr, (a.carrier, f.carrier), ProdMor(a.mult, f.mult),
                ProdMor(a.unit, f.unit), "AxF")
    pb = Monoid(pr, (b.carrier, f.carrier), ProdMor(b.mult, f.mult),
                ProdMor(b.unit, f.unit), "BxF")
    pm = Bimodule(pa, pb, (m.carrier, reg.carrier),
                  ProdMor(m.lact, reg.lact), ProdMor(m.ract, reg.ract), "MxR")
    pid = identity_bimodule(pb)
    desc = quotient_oracle(pr, pm, pid)
    assert desc.matches(balanced_tensor(pm, pid))
    # componentwise evidence is carried along
    assert desc.classes == (quotient_oracle(fs, m, identity_bimodule(b)).classes,
                            quotient_oracle(fv2, reg, reg).classes)


def test_opposite_unsupported(fs):
    op = opposite_instance(fs)
    a, b, _, m, n = chain(fs)
    # build the bimodules over the opposite by reusing the originals' data
    # is beside the point: dispatch alone decides
    with pytest.raises(UnsupportedInstance):
        quotient_oracle(op, m, n)


def test_oracle_is_cached(fs):
    _, _, _, m, n = chain(fs)
    assert quotient_oracle(fs, m, n) is quotient_oracle(fs, m, n)


def test_description_matches_requires_all_three(fs):
    _, _, _, m, n = chain(fs)
    desc = quotient_oracle(fs, m, n)
    honest = balanced_tensor(m, n)
    assert desc.matches(honest)
    wrong_apex = QuotientDescription(None, desc.projection, desc.bimodule)
    assert not wrong_apex.matches(honest)
