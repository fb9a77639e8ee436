"""End-to-end verification drivers on both concrete instances."""

import pytest

from morita import (Horn, Simplex1, apply_mutations, calculus_tuples,
                    composable_pairs, enumerate_fillers, fill_horn,
                    verify_brute_force, verify_calculus, verify_coherence,
                    verify_complicial, verify_nerve, verify_oracle)

from conftest import fold, span


def test_coherence_drivers(fs, fv2):
    assert verify_coherence(fs, max_size=2).ok
    assert verify_coherence(fv2, max_size=2).ok


def test_coherence_catches_mutation(fs):
    broken = apply_mutations(fs, ["swap_associator"])
    rep = verify_coherence(broken, max_size=2)
    assert not rep.ok
    assert any("pentagon" in r.law for r in rep.failures())


def test_calculus_drivers(fs, fv2):
    rep = verify_calculus(fs, max_size=2, min_tuples=10)
    assert rep.ok, rep.render(only_failures=True)
    rep = verify_calculus(fv2, max_size=2, min_tuples=10)
    assert rep.ok, rep.render(only_failures=True)


def test_calculus_tuples_deterministic(fs):
    one = list(calculus_tuples(fs, max_size=2, seed=3, min_tuples=8))
    two = list(calculus_tuples(fs, max_size=2, seed=3, min_tuples=8))
    assert [(fam, i, repr(args)) for fam, i, args in one] \
        == [(fam, i, repr(args)) for fam, i, args in two]
    other = list(calculus_tuples(fs, max_size=2, seed=4, min_tuples=8))
    assert [(fam, i, repr(args)) for fam, i, args in one] \
        != [(fam, i, repr(args)) for fam, i, args in other]


def test_composable_pairs_really_compose(fs):
    for fam, i, args in calculus_tuples(fs, max_size=2, min_tuples=8):
        for m, n in composable_pairs(args):
            assert m.right == n.left


def test_nerve_driver(fs, fv2):
    assert verify_nerve(fs, max_size=2, min_triangles=5).ok
    assert verify_nerve(fv2, max_size=2, min_triangles=5).ok


def test_complicial_driver_small(fs):
    rep = verify_complicial(fs, max_size=1)
    assert rep.ok, rep.render(only_failures=True)
    laws = {r.law for r in rep.entries}
    assert any(l.startswith("complicial.horn") for l in laws)


def test_complicial_aborts_on_broken_ambient(fs):
    broken = apply_mutations(fs, ["swap_associator"])
    rep = verify_complicial(broken, max_size=1)
    assert not rep.ok
    assert any(r.law == "complicial.abort" for r in rep.entries)
    # nothing beyond the preflight was attempted
    assert not any(r.law.startswith("complicial.horn") for r in rep.entries)


def test_brute_force_driver(fs):
    rep = verify_brute_force(fs, max_size=1)
    assert rep.ok, rep.render(only_failures=True)


def test_enumerate_fillers_contains_constructed(fs):
    a = fold(fs, ["a"], "A")
    b = fold(fs, ["b"], "B")
    c = fold(fs, ["c"], "C")
    m = Simplex1(span(fs, a, b, ["m0"], {"a": "m0"}, {"b": "m0"}, "M"))
    n = Simplex1(span(fs, b, c, ["n0"], {"b": "n0"}, {"c": "n0"}, "N"))
    h = Horn(2, 1, (n, None, m))
    fillers = enumerate_fillers(h, max_size=2)
    assert fillers
    built = fill_horn(h)
    assert any(f.m02.bimodule == built.filled.m02.bimodule
               and f.map.mor == built.filled.map.mor for f in fillers)


def test_oracle_driver(fs, fv2):
    rep = verify_oracle(fs, max_size=2, min_tuples=10)
    assert rep.ok, rep.render(only_failures=True)
    rep = verify_oracle(fv2, max_size=2, min_tuples=10)
    assert rep.ok, rep.render(only_failures=True)
    volume = [r for r in rep.entries if r.law == "oracle.volume"]
    assert len(volume) == 1 and volume[0].ok


def test_drivers_deterministic(fs):
    a = verify_calculus(fs, max_size=2, seed=1, min_tuples=8).render()
    b = verify_calculus(fs, max_size=2, seed=1, min_tuples=8).render()
    assert a == b
