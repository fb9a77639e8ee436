"""Monoids, two-sided modules over them, and the maps between those.

All three are immutable values carrying their instance, so they hash and can
key caches.  Constructors check endpoint shapes eagerly and raise; the
``validate_*`` functions check the algebraic laws and return a report whose
failures carry the two unequal composites.

A one-sided module is represented as a bimodule over the trivial monoid on
the tensor unit on the missing side; ``as_left_module`` / ``as_right_module``
forget one action into that shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .errors import MonoidMismatch, ShapeMismatch
from .kernel import MonoidalInstance
from .reports import Report


@dataclass(frozen=True)
class Monoid:
    inst: MonoidalInstance
    carrier: Any
    mult: Any  # carrier @ carrier -> carrier
    unit: Any  # I -> carrier
    name: str = field(default="", compare=False)

    def __post_init__(self):
        c = self.carrier
        if self.mult.src != self.inst.tensor_obj(c, c) or self.mult.dst != c:
            raise ShapeMismatch(f"multiplication endpoints wrong for {self!r}")
        if self.unit.src != self.inst.unit or self.unit.dst != c:
            raise ShapeMismatch(f"unit endpoints wrong for {self!r}")

    def __repr__(self) -> str:
        return self.name or f"monoid({self.carrier!r})"


@dataclass(frozen=True)
class Bimodule:
    left: Monoid
    right: Monoid
    carrier: Any
    lact: Any  # A @ M -> M
    ract: Any  # M @ B -> M
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.left.inst != self.right.inst:
            raise MonoidMismatch("left and right monoids live in different instances")
        inst, m = self.inst, self.carrier
        if self.lact.src != inst.tensor_obj(self.left.carrier, m) or self.lact.dst != m:
            raise ShapeMismatch(f"left action endpoints wrong for {self!r}")
        if self.ract.src != inst.tensor_obj(m, self.right.carrier) or self.ract.dst != m:
            raise ShapeMismatch(f"right action endpoints wrong for {self!r}")

    @property
    def inst(self) -> MonoidalInstance:
        return self.left.inst

    def __repr__(self) -> str:
        return self.name or f"bimod({self.carrier!r}:{self.left!r}|{self.right!r})"


@dataclass(frozen=True)
class BimoduleMap:
    src: Bimodule
    dst: Bimodule
    mor: Any

    def __post_init__(self):
        if self.src.left != self.dst.left or self.src.right != self.dst.right:
            raise MonoidMismatch(f"map endpoints over different monoid pairs: {self!r}")
        if self.mor.src != self.src.carrier or self.mor.dst != self.dst.carrier:
            raise ShapeMismatch(f"underlying morphism endpoints wrong: {self!r}")

    @property
    def inst(self) -> MonoidalInstance:
        return self.src.inst

    def __repr__(self) -> str:
        return f"map({self.src!r} -> {self.dst!r})"


# ---------------------------------------------------------------------------
# construction helpers


def monoid(inst: MonoidalInstance, carrier, mult, unit, name: str = "") -> Monoid:
    return Monoid(inst, carrier, mult, unit, name)


@lru_cache(maxsize=None)
def trivial_monoid(inst: MonoidalInstance) -> Monoid:
    """The monoid on the tensor unit; its multiplication is the unitor."""
    i = inst.unit
    return Monoid(inst, i, inst.lunitor(i), inst.identity(i), name="1")


@lru_cache(maxsize=None)
def identity_bimodule(a: Monoid) -> Bimodule:
    """A as an (A,A)-bimodule, both actions the multiplication."""
    return Bimodule(a, a, a.carrier, a.mult, a.mult,
                    name=f"id[{a!r}]")


def as_left_module(m: Bimodule) -> Bimodule:
    """Forget the right action: same carrier over (A, trivial)."""
    inst = m.inst
    return Bimodule(m.left, trivial_monoid(inst), m.carrier,
                    m.lact, inst.runitor(m.carrier))


def as_right_module(m: Bimodule) -> Bimodule:
    inst = m.inst
    return Bimodule(trivial_monoid(inst), m.right, m.carrier,
                    inst.lunitor(m.carrier), m.ract)


def free_bimodule(a: Monoid, x: Bimodule, y: Bimodule, c: Monoid) -> Bimodule:
    """(A,C)-structure on X @ Y from a left A-module X and right C-module Y.

    ``x`` must be a bimodule over (a, trivial) and ``y`` over (trivial, c);
    only the outer actions are used.
    """
    inst = a.inst
    if x.left != a or y.right != c:
        raise MonoidMismatch("free bimodule factors over the wrong monoids")
    if x.right != trivial_monoid(inst) or y.left != trivial_monoid(inst):
        raise MonoidMismatch("free bimodule factors must be one-sided modules")
    return _free_on(a, c, x.carrier, x.lact, y.carrier, y.ract)


def _free_on(a: Monoid, c: Monoid, xc, xlact, yc, yract) -> Bimodule:
    inst = a.inst
    lact = inst.compose(inst.alpha_inv(a.carrier, xc, yc),
                        inst.tensor_mor(xlact, inst.identity(yc)))
    ract = inst.compose(inst.alpha(xc, yc, c.carrier),
                        inst.tensor_mor(inst.identity(xc), yract))
    return Bimodule(a, c, inst.tensor_obj(xc, yc), lact, ract)


@lru_cache(maxsize=None)
def free_product(x: Bimodule, y: Bimodule) -> Bimodule:
    """Plain tensor X @ Y as an (x.left, y.right)-bimodule.

    The middle monoids need not match; the inner actions are simply dropped.
    """
    return _free_on(x.left, y.right, x.carrier, x.lact, y.carrier, y.ract)


def module_map(src: Bimodule, dst: Bimodule, mor) -> BimoduleMap:
    return BimoduleMap(src, dst, mor)


def identity_map(m: Bimodule) -> BimoduleMap:
    return BimoduleMap(m, m, m.inst.identity(m.carrier))


def compose_maps(*maps: BimoduleMap) -> BimoduleMap:
    out = maps[0]
    for f in maps[1:]:
        if out.dst != f.src:
            raise ShapeMismatch(f"cannot compose {out!r} then {f!r}")
        out = BimoduleMap(out.src, f.dst, out.inst.compose(out.mor, f.mor))
    return out


def invert_map(f: BimoduleMap) -> BimoduleMap:
    return BimoduleMap(f.dst, f.src, f.inst.invert(f.mor))


def is_iso_map(f: BimoduleMap) -> bool:
    return f.inst.is_iso(f.mor)


# ---------------------------------------------------------------------------
# law validators


def validate_monoid(a: Monoid) -> Report:
    inst, c, m, e = a.inst, a.carrier, a.mult, a.unit
    rep = Report(title=f"monoid laws [{a!r}]")
    idc = inst.identity(c)

    lhs = inst.compose(inst.tensor_mor(m, idc), m)
    rhs = inst.compose_many(inst.alpha(c, c, c), inst.tensor_mor(idc, m), m)
    rep.check_equal("monoid.assoc", repr(a), lhs, rhs)

    rep.check_equal("monoid.unit_left", repr(a),
                    inst.compose(inst.tensor_mor(e, idc), m), inst.lunitor(c))
    rep.check_equal("monoid.unit_right", repr(a),
                    inst.compose(inst.tensor_mor(idc, e), m), inst.runitor(c))
    return rep


def validate_bimodule(m: Bimodule) -> Report:
    inst = m.inst
    a, b, mc = m.left, m.right, m.carrier
    la_, ra = m.lact, m.ract
    ida, idb, idm = inst.identity(a.carrier), inst.identity(b.carrier), inst.identity(mc)
    rep = Report(title=f"bimodule laws [{m!r}]")

    rep.check_equal("bimodule.unit_left", repr(m),
                    inst.compose(inst.tensor_mor(a.unit, idm), la_), inst.lunitor(mc))
    rep.check_equal("bimodule.unit_right", repr(m),
                    inst.compose(inst.tensor_mor(idm, b.unit), ra), inst.runitor(mc))

    lhs = inst.compose(inst.tensor_mor(a.mult, idm), la_)
    rhs = inst.compose_many(inst.alpha(a.carrier, a.carrier, mc),
                            inst.tensor_mor(ida, la_), la_)
    rep.check_equal("bimodule.assoc_left", repr(m), lhs, rhs)

    lhs = inst.compose(inst.tensor_mor(ra, idb), ra)
    rhs = inst.compose_many(inst.alpha(mc, b.carrier, b.carrier),
                            inst.tensor_mor(idm, b.mult), ra)
    rep.check_equal("bimodule.assoc_right", repr(m), lhs, rhs)

    lhs = inst.compose(inst.tensor_mor(la_, idb), ra)
    rhs = inst.compose_many(inst.alpha(a.carrier, mc, b.carrier),
                            inst.tensor_mor(ida, ra), la_)
    rep.check_equal("bimodule.actions_commute", repr(m), lhs, rhs)
    return rep


def validate_bimodule_map(f: BimoduleMap) -> Report:
    inst = f.inst
    a, b = f.src.left, f.src.right
    rep = Report(title=f"bimodule map laws [{f!r}]")

    lhs = inst.compose(inst.tensor_mor(inst.identity(a.carrier), f.mor), f.dst.lact)
    rhs = inst.compose(f.src.lact, f.mor)
    rep.check_equal("map.left_equivariant", repr(f), lhs, rhs)

    lhs = inst.compose(inst.tensor_mor(f.mor, inst.identity(b.carrier)), f.dst.ract)
    rhs = inst.compose(f.src.ract, f.mor)
    rep.check_equal("map.right_equivariant", repr(f), lhs, rhs)
    return rep
