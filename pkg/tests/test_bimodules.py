"""Monoids, bimodules, their maps, and the law validators."""

import pytest

from morita import (Bimodule, BimoduleMap, FinFunction, MoritaError, MonoidMismatch,
                    ShapeMismatch, as_left_module, as_right_module,
                    compose_maps, finset_obj, free_bimodule, free_product,
                    identity_bimodule, identity_map, invert_map, is_iso_map,
                    matrix, monoid, trivial_monoid, validate_bimodule,
                    validate_bimodule_map, validate_monoid)

from conftest import field_monoid, fold, pair_algebra, span, swap_twist


def test_fold_monoid_validates(fs):
    a = fold(fs, ["x", "y"], "A")
    rep = validate_monoid(a)
    assert rep.ok, rep.render(only_failures=True)


def test_field_and_pair_algebra_validate(fv2):
    assert validate_monoid(field_monoid(fv2)).ok
    assert validate_monoid(pair_algebra(fv2)).ok


def test_monoid_constructor_checks_endpoints(fv2):
    with pytest.raises(MoritaError):
        monoid(fv2, 1, matrix(2, [[1, 0]]), matrix(2, [[1]]))


def test_nonassociative_mult_caught(fv2):
    bad = monoid(fv2, 3, matrix(2, [
        [1, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0, 1, 0, 0]]), matrix(2, [[1], [0], [0]]))
    rep = validate_monoid(bad)
    bad_laws = [r.law for r in rep.failures()]
    assert bad_laws == ["monoid.assoc"]


def test_trivial_monoid_cached(fs):
    assert trivial_monoid(fs) is trivial_monoid(fs)
    assert validate_monoid(trivial_monoid(fs)).ok


def test_identity_bimodule_and_one_sided_views(fs):
    a = fold(fs, ["x"], "A")
    m = identity_bimodule(a)
    assert validate_bimodule(m).ok
    lm = as_left_module(m)
    assert lm.right == trivial_monoid(fs)
    assert validate_bimodule(lm).ok
    rm = as_right_module(m)
    assert rm.left == trivial_monoid(fs)
    assert validate_bimodule(rm).ok


def test_span_bimodule_validates(fs):
    a = fold(fs, ["a"], "A")
    b = fold(fs, ["b"], "B")
    m = span(fs, a, b, ["m0", "m1"], {"a": "m0"}, {"b": "m1"}, "M")
    rep = validate_bimodule(m)
    assert rep.ok, rep.render(only_failures=True)


def test_matrix_bimodule_validates(fv2):
    prod = pair_algebra(fv2)
    tw = swap_twist(fv2, prod)
    assert validate_bimodule(tw).ok


def test_broken_equivariance_caught(fs):
    a = fold(fs, ["a"], "A")
    b = fold(fs, ["b"], "B")
    m = span(fs, a, b, ["m0", "m1"], {"a": "m0"}, {"b": "m1"}, "M")
    # swapping the carrier is a bijection but moves both legs
    twisted = BimoduleMap(m, m, FinFunction(m.carrier, m.carrier, (1, 0)))
    rep = validate_bimodule_map(twisted)
    assert not rep.ok
    assert {r.law for r in rep.failures()} == {"map.left_equivariant",
                                               "map.right_equivariant"}


def test_free_constructions(fs):
    a = fold(fs, ["a"], "A")
    c = fold(fs, ["c"], "C")
    x = as_left_module(span(fs, a, a, ["x"], {"a": "x"}, {"a": "x"}))
    y = as_right_module(span(fs, c, c, ["y0", "y1"], {"c": "y0"}, {"c": "y0"}))
    f = free_bimodule(a, x, y, c)
    assert f.left == a and f.right == c
    assert validate_bimodule(f).ok
    with pytest.raises(MonoidMismatch):
        free_bimodule(c, x, y, c)
    g = free_product(as_left_module(identity_bimodule(a)),
                     as_right_module(identity_bimodule(c)))
    assert validate_bimodule(g).ok


def test_map_composition_and_inverse(fs):
    a = fold(fs, ["a"], "A")
    m = identity_bimodule(a)
    i = identity_map(m)
    assert compose_maps(i, i) == i
    assert is_iso_map(i)
    assert invert_map(i) == i
    other = identity_map(identity_bimodule(fold(fs, ["z"], "Z")))
    with pytest.raises(ShapeMismatch):
        compose_maps(i, other)


def test_validator_reports_have_counts(fs):
    a = fold(fs, ["a"], "A")
    rep = validate_monoid(a)
    passed, failed = rep.counts()
    assert (passed, failed) == (3, 0)
    assert rep.first_failure() is None
