"""The deliberately broken instances break exactly where intended."""

import pytest

from morita import (FinSetObj, SwappedAssociator, UnsupportedInstance,
                    apply_mutations, check_coherence, finvect)
from morita.mutations import MUTATION_NAMES


def test_mutation_registry():
    assert "swap_associator" in MUTATION_NAMES


def test_unknown_mutation_rejected(fs):
    with pytest.raises(UnsupportedInstance):
        apply_mutations(fs, ["swap_associator", "reverse_time"])


def test_swap_keeps_everything_but_alpha(fs):
    broken = apply_mutations(fs, ["swap_associator"])
    assert isinstance(broken, SwappedAssociator)
    x = FinSetObj(("a", "b"))
    assert broken.tensor_obj(x, x) == fs.tensor_obj(x, x)
    assert broken.identity(x) == fs.identity(x)
    assert broken.lunitor(x) == fs.lunitor(x)
    assert broken.count_morphisms(x, x) == fs.count_morphisms(x, x)


def test_twisted_alpha_is_still_invertible(fs, fv2):
    for inst in (fs, fv2):
        broken = apply_mutations(inst, ["swap_associator"])
        objs = inst.sample_objects(2)
        x, y, z = objs[-1], objs[-1], objs[-1]
        a = broken.alpha(x, y, z)
        ai = broken.alpha_inv(x, y, z)
        assert broken.compose(a, ai) == broken.identity(a.src)
        assert broken.compose(ai, a) == broken.identity(a.dst)


def test_pentagon_named_in_failures(fs, fv2):
    for inst in (fs, fv2):
        broken = apply_mutations(inst, ["swap_associator"])
        rep = check_coherence(broken, broken.sample_objects(2))
        assert not rep.ok
        assert any("pentagon" in r.law for r in rep.failures())


def test_small_targets_unaffected(fv2):
    # on targets of size < 2 the twist is the identity: alpha is honest
    broken = apply_mutations(fv2, ["swap_associator"])
    assert broken.alpha(1, 1, 0) == fv2.alpha(1, 1, 0)
    assert broken.alpha(1, 1, 1) == fv2.alpha(1, 1, 1)
    assert broken.alpha(1, 1, 2) != fv2.alpha(1, 1, 2)
