"""Invertibility witnesses for bimodules.

A bimodule M over (A, B) is invertible when some reverse bimodule M' over
(B, A) composes with it to the regular bimodules on both sides.  A witness
packages the reverse together with explicit bimodule isomorphisms; all
downstream constructions (horn fillers, thinness checks) consume witnesses
rather than re-deriving them.

Witness search is brute force over carriers of bounded size with the action
axioms used as filters, unit laws first.  It is only intended for the small
instances this library targets; enumeration at any carrier size whose raw
candidate count exceeds the cap is skipped deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .balanced import balanced_tensor, unit_left
from .bimodules import (Bimodule, BimoduleMap, Monoid, identity_bimodule,
                        validate_bimodule_map)
from .errors import ShapeMismatch
from .reports import Report


@dataclass(frozen=True)
class EquivalenceWitness:
    """Reverse bimodule and the two composition isomorphisms."""

    bimodule: Bimodule   # M over (A, B)
    reverse: Bimodule    # M' over (B, A)
    eta: BimoduleMap     # M (x)_B M' -> A
    eps: BimoduleMap     # M' (x)_A M -> B

    def __post_init__(self):
        m, r = self.bimodule, self.reverse
        if (m.left, m.right) != (r.right, r.left):
            raise ShapeMismatch("reverse bimodule has wrong monoid pair")
        if self.eta.src != balanced_tensor(m, r).bimodule \
                or self.eta.dst != identity_bimodule(m.left):
            raise ShapeMismatch("eta endpoints wrong")
        if self.eps.src != balanced_tensor(r, m).bimodule \
                or self.eps.dst != identity_bimodule(m.right):
            raise ShapeMismatch("eps endpoints wrong")

    def swapped(self) -> "EquivalenceWitness":
        """The same data read as a witness for the reverse bimodule."""
        return EquivalenceWitness(self.reverse, self.bimodule, self.eps, self.eta)


def validate_witness(w: EquivalenceWitness) -> Report:
    inst = w.bimodule.inst
    rep = Report(title=f"witness [{w.bimodule!r}]")
    rep.record("witness.eta_iso", repr(w.bimodule), inst.is_iso(w.eta.mor))
    rep.record("witness.eps_iso", repr(w.bimodule), inst.is_iso(w.eps.mor))
    rep.extend(validate_bimodule_map(w.eta))
    rep.extend(validate_bimodule_map(w.eps))
    return rep


@lru_cache(maxsize=None)
def identity_witness(a: Monoid) -> EquivalenceWitness:
    """The regular bimodule is invertible, with itself as reverse."""
    ida = identity_bimodule(a)
    u = unit_left(ida)
    return EquivalenceWitness(ida, ida, u, u)


def _unital(inst, act, unit, carrier, side: str) -> bool:
    idc = inst.identity(carrier)
    if side == "left":
        ins = inst.compose(inst.lunitor_inv(carrier), inst.tensor_mor(unit, idc))
    else:
        ins = inst.compose(inst.runitor_inv(carrier), inst.tensor_mor(idc, unit))
    return inst.compose(ins, act) == idc


def _left_actions(a: Monoid, carrier, cap: int) -> Iterator:
    inst = a.inst
    src = inst.tensor_obj(a.carrier, carrier)
    if inst.count_morphisms(src, carrier) > cap:
        return
    idc = inst.identity(carrier)
    ida = inst.identity(a.carrier)
    for act in inst.enumerate_morphisms(src, carrier):
        if not _unital(inst, act, a.unit, carrier, "left"):
            continue
        lhs = inst.compose(inst.tensor_mor(a.mult, idc), act)
        rhs = inst.compose_many(inst.alpha(a.carrier, a.carrier, carrier),
                                inst.tensor_mor(ida, act), act)
        if lhs == rhs:
            yield act


def _right_actions(b: Monoid, carrier, cap: int) -> Iterator:
    inst = b.inst
    src = inst.tensor_obj(carrier, b.carrier)
    if inst.count_morphisms(src, carrier) > cap:
        return
    idc = inst.identity(carrier)
    idb = inst.identity(b.carrier)
    for act in inst.enumerate_morphisms(src, carrier):
        if not _unital(inst, act, b.unit, carrier, "right"):
            continue
        lhs = inst.compose_many(inst.alpha(carrier, b.carrier, b.carrier),
                                inst.tensor_mor(idc, b.mult), act)
        rhs = inst.compose(inst.tensor_mor(act, idb), act)
        if lhs == rhs:
            yield act


def enumerate_bimodules(a: Monoid, b: Monoid, carrier,
                        cap: int = 1 << 16) -> Iterator[Bimodule]:
    """All (a, b)-bimodule structures on the given carrier, in a stable order."""
    inst = a.inst
    rights = None
    for lact in _left_actions(a, carrier, cap):
        if rights is None:
            rights = list(_right_actions(b, carrier, cap))
        for ract in rights:
            lr = inst.compose_many(inst.alpha(a.carrier, carrier, b.carrier),
                                   inst.tensor_mor(inst.identity(a.carrier), ract),
                                   lact)
            rl = inst.compose(inst.tensor_mor(lact, inst.identity(b.carrier)), ract)
            if lr == rl:
                yield Bimodule(a, b, carrier, lact, ract)


def enumerate_bimodule_maps(m: Bimodule, n: Bimodule,
                            cap: int = 1 << 16) -> Iterator[BimoduleMap]:
    """All bimodule maps m -> n, by filtering raw morphisms for equivariance."""
    inst = m.inst
    if (m.left, m.right) != (n.left, n.right):
        return
    if inst.count_morphisms(m.carrier, n.carrier) > cap:
        return
    ida = inst.identity(m.left.carrier)
    idb = inst.identity(m.right.carrier)
    for f in inst.enumerate_morphisms(m.carrier, n.carrier):
        if inst.compose(m.lact, f) != inst.compose(inst.tensor_mor(ida, f), n.lact):
            continue
        if inst.compose(m.ract, f) != inst.compose(inst.tensor_mor(f, idb), n.ract):
            continue
        yield BimoduleMap(m, n, f)


def find_bimodule_iso(m: Bimodule, n: Bimodule,
                      cap: int = 1 << 16) -> Optional[BimoduleMap]:
    inst = m.inst
    if inst.obj_size(m.carrier) != inst.obj_size(n.carrier):
        return None
    for f in enumerate_bimodule_maps(m, n, cap):
        if inst.is_iso(f.mor):
            return f
    return None


@lru_cache(maxsize=None)
def find_equivalence_witness(m: Bimodule, budget: int = 4,
                             cap: int = 1 << 16) -> Optional[EquivalenceWitness]:
    """Search for a witness with reverse carrier of size at most budget."""
    if m.left == m.right and m == identity_bimodule(m.left):
        return identity_witness(m.left)
    inst = m.inst
    ida, idb = identity_bimodule(m.left), identity_bimodule(m.right)
    for size in range(budget + 1):
        carrier = inst.canonical_object(size)
        for rev in enumerate_bimodules(m.right, m.left, carrier, cap):
            eta = find_bimodule_iso(balanced_tensor(m, rev).bimodule, ida, cap)
            if eta is None:
                continue
            eps = find_bimodule_iso(balanced_tensor(rev, m).bimodule, idb, cap)
            if eps is None:
                continue
            return EquivalenceWitness(m, rev, eta, eps)
    return None
