"""Balanced tensor products of bimodules and their structure maps.

The balanced product of M over (A,B) with N over (B,C) is the coequalizer of
the two ways (M @ B) @ N can act into M @ N.  Because instance coequalizers
return canonical representatives, the apex is a literal value: the same pair
of bimodules always yields the same object, the same projection and the same
induced maps, so all the re-association and unit laws below are checked as
plain equality of morphisms.

The induced (A,C)-actions on the apex are computed by factoring through the
tensored coequalizer.  Tensoring the defining pair on either side must again
be the coequalizer it should be; this is re-verified on every call (the
apex and projection of the tensored pair are required to be literally the
tensored apex and projection) rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .bimodules import (Bimodule, BimoduleMap, Monoid, free_product, identity_bimodule,
                        identity_map, invert_map)
from .errors import EquationFailure, MonoidMismatch
from .kernel import Coequalizer
from .reports import Report


@dataclass(frozen=True)
class BalancedTensor:
    """Computed balanced product: factors, coequalizer, induced bimodule."""

    left: Bimodule
    right: Bimodule
    coeq: Coequalizer
    bimodule: Bimodule

    @property
    def projection(self) -> Any:
        """M @ N -> apex; always epi."""
        return self.coeq.projection

    @property
    def apex(self) -> Any:
        return self.coeq.apex


def _balancing_pair(m: Bimodule, n: Bimodule):
    """The two maps (M @ B) @ N -> M @ N whose coequalizer balances over B."""
    inst = m.inst
    u1 = inst.tensor_mor(m.ract, inst.identity(n.carrier))
    u2 = inst.compose(inst.alpha(m.carrier, m.right.carrier, n.carrier),
                      inst.tensor_mor(inst.identity(m.carrier), n.lact))
    return u1, u2


def _tensored_coequalizer(inst, coeq: Coequalizer, other, side: str) -> Coequalizer:
    """coequalize(pair @ other) and insist it is literally apex @ other."""
    idm = inst.identity(other)
    if side == "right":
        got = inst.coequalize(inst.tensor_mor(coeq.left, idm),
                              inst.tensor_mor(coeq.right, idm))
        want_apex = inst.tensor_obj(coeq.apex, other)
        want_proj = inst.tensor_mor(coeq.projection, idm)
    else:
        got = inst.coequalize(inst.tensor_mor(idm, coeq.left),
                              inst.tensor_mor(idm, coeq.right))
        want_apex = inst.tensor_obj(other, coeq.apex)
        want_proj = inst.tensor_mor(idm, coeq.projection)
    if got.apex != want_apex or got.projection != want_proj:
        raise EquationFailure(
            f"tensoring on the {side} did not preserve the coequalizer "
            f"(apex {got.apex!r} vs {want_apex!r})")
    return got


@lru_cache(maxsize=None)
def balanced_tensor(m: Bimodule, n: Bimodule) -> BalancedTensor:
    """M (x)_B N with its induced (m.left, n.right)-bimodule structure."""
    if m.right != n.left:
        raise MonoidMismatch(
            f"cannot balance {m!r} with {n!r}: middle monoids differ")
    inst = m.inst
    u1, u2 = _balancing_pair(m, n)
    coeq = inst.coequalize(u1, u2)
    proj = coeq.projection

    a, c = m.left, n.right
    # left action: factor (unreassociate, act on M, project) through A @ proj
    tc = _tensored_coequalizer(inst, coeq, a.carrier, "left")
    h = inst.compose_many(inst.alpha_inv(a.carrier, m.carrier, n.carrier),
                          inst.tensor_mor(m.lact, inst.identity(n.carrier)),
                          proj)
    lact = inst.coinduce(tc, h)
    # right action: factor (reassociate, act on N, project) through proj @ C
    tc = _tensored_coequalizer(inst, coeq, c.carrier, "right")
    h = inst.compose_many(inst.alpha(m.carrier, n.carrier, c.carrier),
                          inst.tensor_mor(inst.identity(m.carrier), n.ract),
                          proj)
    ract = inst.coinduce(tc, h)

    bim = Bimodule(a, c, coeq.apex, lact, ract)
    return BalancedTensor(m, n, coeq, bim)


def tensor_cell(x: Bimodule, y: Bimodule, balanced: bool) -> Bimodule:
    return balanced_tensor(x, y).bimodule if balanced else free_product(x, y)


@lru_cache(maxsize=None)
def tensor_of_maps(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """The unique map on balanced products with
    proj then (f (x) g)  ==  (f @ g) then proj'."""
    if f.src.right != g.src.left:
        raise MonoidMismatch(f"cannot balance maps {f!r} and {g!r}")
    inst = f.inst
    t_src = balanced_tensor(f.src, g.src)
    t_dst = balanced_tensor(f.dst, g.dst)
    h = inst.compose(inst.tensor_mor(f.mor, g.mor), t_dst.projection)
    u = inst.coinduce(t_src.coeq, h)
    return BimoduleMap(t_src.bimodule, t_dst.bimodule, u)


def tensor_map_cell(f: BimoduleMap, g: BimoduleMap, balanced: bool) -> BimoduleMap:
    if balanced:
        return tensor_of_maps(f, g)
    return BimoduleMap(free_product(f.src, g.src), free_product(f.dst, g.dst),
                       f.inst.tensor_mor(f.mor, g.mor))


def whisker_right(f: BimoduleMap, z: Bimodule, balanced: bool = True) -> BimoduleMap:
    if balanced:
        return tensor_of_maps(f, identity_map(z))
    return BimoduleMap(free_product(f.src, z), free_product(f.dst, z),
                       f.inst.tensor_mor(f.mor, f.inst.identity(z.carrier)))


def whisker_left(x: Bimodule, f: BimoduleMap, balanced: bool = True) -> BimoduleMap:
    if balanced:
        return tensor_of_maps(identity_map(x), f)
    return BimoduleMap(free_product(x, f.src), free_product(x, f.dst),
                       f.inst.tensor_mor(f.inst.identity(x.carrier), f.mor))


# ---------------------------------------------------------------------------
# re-association maps


@lru_cache(maxsize=None)
def _mixed_right(x: Bimodule, y: Bimodule, z: Bimodule) -> BimoduleMap:
    """(X @ Y) (x)_C Z  ->  X @ (Y (x)_C Z), balancing only the right pair."""
    inst = x.inst
    t_yz = balanced_tensor(y, z)
    src = balanced_tensor(free_product(x, y), z)
    dst = free_product(x, t_yz.bimodule)
    h = inst.compose_many(inst.alpha(x.carrier, y.carrier, z.carrier),
                          inst.tensor_mor(inst.identity(x.carrier), t_yz.projection))
    u = inst.coinduce(src.coeq, h)
    return BimoduleMap(src.bimodule, dst, u)


@lru_cache(maxsize=None)
def _mixed_left(x: Bimodule, y: Bimodule, z: Bimodule) -> BimoduleMap:
    """X (x)_B (Y @ Z)  ->  (X (x)_B Y) @ Z, balancing only the left pair."""
    inst = x.inst
    t_xy = balanced_tensor(x, y)
    src = balanced_tensor(x, free_product(y, z))
    dst = free_product(t_xy.bimodule, z)
    h = inst.compose_many(inst.alpha_inv(x.carrier, y.carrier, z.carrier),
                          inst.tensor_mor(t_xy.projection, inst.identity(z.carrier)))
    u = inst.coinduce(src.coeq, h)
    return BimoduleMap(src.bimodule, dst, u)


def assoc_mixed(x: Bimodule, y: Bimodule, z: Bimodule, kind: str) -> BimoduleMap:
    """One balanced product against one plain tensor.

    kind = "right_balanced": (X @ Y) (x) Z -> X @ (Y (x) Z)
    kind = "left_balanced":  X (x) (Y @ Z) -> (X (x) Y) @ Z
    """
    if kind == "right_balanced":
        return _mixed_right(x, y, z)
    if kind == "left_balanced":
        return _mixed_left(x, y, z)
    raise ValueError(f"unknown mixed associator kind {kind!r}")


@lru_cache(maxsize=None)
def assoc_balanced(m: Bimodule, n: Bimodule, p: Bimodule) -> BimoduleMap:
    """(M (x)_B N) (x)_C P  ->  M (x)_B (N (x)_C P), fully balanced."""
    inst = m.inst
    t_mn = balanced_tensor(m, n)
    t_np = balanced_tensor(n, p)
    t_left = balanced_tensor(t_mn.bimodule, p)
    t_right = balanced_tensor(m, t_np.bimodule)

    h = inst.compose_many(
        inst.alpha(m.carrier, n.carrier, p.carrier),
        inst.tensor_mor(inst.identity(m.carrier), t_np.projection),
        t_right.projection)
    tc = _tensored_coequalizer(inst, t_mn.coeq, p.carrier, "right")
    h2 = inst.coinduce(tc, h)  # apex(M,N) @ P -> apex(M, N(x)P)
    u = inst.coinduce(t_left.coeq, h2)
    return BimoduleMap(t_left.bimodule, t_right.bimodule, u)


@lru_cache(maxsize=None)
def assoc_balanced_inv(m: Bimodule, n: Bimodule, p: Bimodule) -> BimoduleMap:
    """M (x)_B (N (x)_C P)  ->  (M (x)_B N) (x)_C P."""
    inst = m.inst
    t_mn = balanced_tensor(m, n)
    t_np = balanced_tensor(n, p)
    t_left = balanced_tensor(t_mn.bimodule, p)
    t_right = balanced_tensor(m, t_np.bimodule)

    h = inst.compose_many(
        inst.alpha_inv(m.carrier, n.carrier, p.carrier),
        inst.tensor_mor(t_mn.projection, inst.identity(p.carrier)),
        t_left.projection)
    tc = _tensored_coequalizer(inst, t_np.coeq, m.carrier, "left")
    h2 = inst.coinduce(tc, h)  # M @ apex(N,P) -> apex(M(x)N, P)
    u = inst.coinduce(t_right.coeq, h2)
    return BimoduleMap(t_right.bimodule, t_left.bimodule, u)


def assoc_general(x: Bimodule, y: Bimodule, z: Bimodule,
                  first_balanced: bool, second_balanced: bool) -> BimoduleMap:
    """(X * Y) * Z -> X * (Y * Z) for any mix of plain/balanced tensors."""
    if first_balanced and second_balanced:
        return assoc_balanced(x, y, z)
    if second_balanced:
        return _mixed_right(x, y, z)
    if first_balanced:
        return invert_map(_mixed_left(x, y, z))
    return BimoduleMap(free_product(free_product(x, y), z),
                       free_product(x, free_product(y, z)),
                       x.inst.alpha(x.carrier, y.carrier, z.carrier))


# ---------------------------------------------------------------------------
# unit comparison maps


@lru_cache(maxsize=None)
def unit_left(m: Bimodule) -> BimoduleMap:
    """A (x)_A M -> M induced by the left action; an isomorphism."""
    t = balanced_tensor(identity_bimodule(m.left), m)
    u = m.inst.coinduce(t.coeq, m.lact)
    return BimoduleMap(t.bimodule, m, u)


@lru_cache(maxsize=None)
def unit_right(m: Bimodule) -> BimoduleMap:
    """M (x)_B B -> M induced by the right action; an isomorphism."""
    t = balanced_tensor(m, identity_bimodule(m.right))
    u = m.inst.coinduce(t.coeq, m.ract)
    return BimoduleMap(t.bimodule, m, u)


def check_split_unit(m: Bimodule) -> Report:
    """The balancing pairs for A (x)_A M and M (x)_B B are split coequalizers.

    For the left case: the action coequalizes the pair; the unitor-and-unit
    section splits the action; inserting the unit in the middle slot splits
    both parallel maps at once; and inserting it in the outer slot splits the
    multiplication leg while carrying the action leg back through the
    section, which is the textbook split-fork certificate.  Mirrored on the
    right.
    """
    inst = m.inst
    rep = Report(title=f"split unit [{m!r}]")
    a, b, mc = m.left, m.right, m.carrier
    ida, idm, idb = inst.identity(a.carrier), inst.identity(mc), inst.identity(b.carrier)

    u1, u2 = _balancing_pair(identity_bimodule(a), m)
    idam = inst.identity(u1.dst)
    s = inst.compose(inst.lunitor_inv(mc), inst.tensor_mor(a.unit, idm))
    mid = inst.compose_many(
        inst.tensor_mor(ida, inst.lunitor_inv(mc)),
        inst.tensor_mor(ida, inst.tensor_mor(a.unit, idm)),
        inst.alpha_inv(a.carrier, a.carrier, mc))
    outer = inst.compose_many(
        inst.lunitor_inv(u1.dst),
        inst.tensor_mor(a.unit, idam),
        inst.alpha_inv(a.carrier, a.carrier, mc))
    rep.check_equal("split.left.coequalized", repr(m),
                    inst.compose(u1, m.lact), inst.compose(u2, m.lact))
    rep.check_equal("split.left.section", repr(m), inst.compose(s, m.lact), idm)
    rep.check_equal("split.left.retract_act", repr(m), inst.compose(mid, u2), idam)
    rep.check_equal("split.left.retract_mult", repr(m), inst.compose(mid, u1), idam)
    rep.check_equal("split.left.outer_retract", repr(m), inst.compose(outer, u1), idam)
    rep.check_equal("split.left.carry", repr(m),
                    inst.compose(outer, u2), inst.compose(m.lact, s))

    v1, v2 = _balancing_pair(m, identity_bimodule(b))
    idmb = inst.identity(v1.dst)
    t = inst.compose(inst.runitor_inv(mc), inst.tensor_mor(idm, b.unit))
    mid = inst.compose(inst.tensor_mor(inst.runitor_inv(mc), idb),
                       inst.tensor_mor(inst.tensor_mor(idm, b.unit), idb))
    outer = inst.compose(inst.runitor_inv(v1.dst), inst.tensor_mor(idmb, b.unit))
    rep.check_equal("split.right.coequalized", repr(m),
                    inst.compose(v1, m.ract), inst.compose(v2, m.ract))
    rep.check_equal("split.right.section", repr(m), inst.compose(t, m.ract), idm)
    rep.check_equal("split.right.retract_act", repr(m), inst.compose(mid, v1), idmb)
    rep.check_equal("split.right.retract_mult", repr(m), inst.compose(mid, v2), idmb)
    rep.check_equal("split.right.outer_retract", repr(m), inst.compose(outer, v2), idmb)
    rep.check_equal("split.right.carry", repr(m),
                    inst.compose(outer, v1), inst.compose(m.ract, t))
    return rep
