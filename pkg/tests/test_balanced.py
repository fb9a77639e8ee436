"""Balanced tensor products: apexes, induced actions, structure maps."""

import pytest

from morita import (BimoduleMap, FinFunction, MonoidMismatch, assoc_balanced,
                    assoc_balanced_inv, assoc_mixed, balanced_tensor,
                    check_split_unit, compose_maps, identity_bimodule,
                    identity_map, is_iso_map, matrix, module_map,
                    tensor_of_maps, unit_left, unit_right, validate_bimodule,
                    validate_bimodule_map, whisker_left, whisker_right)

from conftest import field_monoid, fold, pair_algebra, span, swap_twist


def chain(fs):
    a = fold(fs, ["a"], "A")
    b = fold(fs, ["b"], "B")
    c = fold(fs, ["c"], "C")
    m = span(fs, a, b, ["m0", "m1"], {"a": "m0"}, {"b": "m1"}, "M")
    n = span(fs, b, c, ["n0"], {"b": "n0"}, {"c": "n0"}, "N")
    return a, b, c, m, n


def test_span_product_glues_along_middle(fs):
    _, _, _, m, n = chain(fs)
    t = balanced_tensor(m, n)
    # m1 and n0 are both hit by legs of b, so they collapse to one class
    assert len(t.bimodule.carrier.elements) == 2
    assert validate_bimodule(t.bimodule).ok
    assert fs.is_epi(t.coeq.projection)


def test_balanced_tensor_is_cached(fs):
    _, _, _, m, n = chain(fs)
    assert balanced_tensor(m, n) is balanced_tensor(m, n)


def test_monoid_mismatch_rejected(fs):
    a, _, c, m, _ = chain(fs)
    with pytest.raises(MonoidMismatch):
        balanced_tensor(m, identity_bimodule(a))


def test_regular_bimodule_absorbs(fv2):
    f = field_monoid(fv2)
    reg = identity_bimodule(f)
    t = balanced_tensor(reg, reg)
    assert t.bimodule.carrier == 1
    assert validate_bimodule(t.bimodule).ok


def test_twisted_product_over_split_algebra(fv2):
    prod = pair_algebra(fv2)
    tw = swap_twist(fv2, prod)
    t = balanced_tensor(tw, tw)
    # the swap composed with itself is trivial: back to the regular shape
    assert t.bimodule.carrier == 2
    assert validate_bimodule(t.bimodule).ok


def test_tensor_of_maps_is_functorial(fs):
    _, _, _, m, n = chain(fs)
    im, i_n = identity_map(m), identity_map(n)
    t = tensor_of_maps(im, i_n)
    assert t == identity_map(balanced_tensor(m, n).bimodule)
    assert validate_bimodule_map(t).ok


def test_whiskers_agree_with_tensor_of_maps(fs):
    _, _, _, m, n = chain(fs)
    f = identity_map(m)
    assert whisker_right(f, n) == tensor_of_maps(f, identity_map(n))
    assert whisker_left(m, identity_map(n)) == tensor_of_maps(identity_map(m),
                                                              identity_map(n))


def test_tensor_respects_nonidentity_maps(fs):
    a, b, _, m, _ = chain(fs)
    # collapse both generators of a two-point span onto one
    wide = span(fs, a, b, ["w0", "w1"], {"a": "w0"}, {"b": "w0"}, "W")
    tall = span(fs, a, b, ["t"], {"a": "t"}, {"b": "t"}, "T")
    f = module_map(wide, tall, FinFunction(wide.carrier, tall.carrier, (0, 0)))
    assert validate_bimodule_map(f).ok
    g = identity_map(identity_bimodule(b))
    fg = tensor_of_maps(f, g)
    assert fg.src == balanced_tensor(wide, identity_bimodule(b)).bimodule
    assert fg.dst == balanced_tensor(tall, identity_bimodule(b)).bimodule
    assert validate_bimodule_map(fg).ok


def test_associator_round_trips(fs):
    a, b, c, m, n = chain(fs)
    p = identity_bimodule(c)
    fwd = assoc_balanced(m, n, p)
    bwd = assoc_balanced_inv(m, n, p)
    assert compose_maps(fwd, bwd) == identity_map(fwd.src)
    assert compose_maps(bwd, fwd) == identity_map(fwd.dst)
    assert is_iso_map(fwd)
    assert validate_bimodule_map(fwd).ok


def test_mixed_associators(fs):
    a, b, c, m, n = chain(fs)
    right = assoc_mixed(m, n, identity_bimodule(c), "right_balanced")
    assert validate_bimodule_map(right).ok
    left = assoc_mixed(m, n, identity_bimodule(c), "left_balanced")
    assert validate_bimodule_map(left).ok
    with pytest.raises(ValueError):
        assoc_mixed(m, n, identity_bimodule(c), "sideways")


def test_unit_comparisons_are_isos(fs, fv2):
    _, _, _, m, n = chain(fs)
    for x in (m, n, swap_twist(fv2, pair_algebra(fv2))):
        ul = unit_left(x)
        ur = unit_right(x)
        assert is_iso_map(ul) and ul.dst == x
        assert is_iso_map(ur) and ur.dst == x
        assert validate_bimodule_map(ul).ok
        assert validate_bimodule_map(ur).ok


def test_split_unit_certificates(fs, fv2):
    _, _, _, m, _ = chain(fs)
    assert check_split_unit(m).ok
    assert check_split_unit(swap_twist(fv2, pair_algebra(fv2))).ok
