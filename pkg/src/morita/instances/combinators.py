"""Instance combinators: opposite and binary product.

The opposite reverses morphisms; its coequalizers are the base instance's
equalizers, so it is only available when the base exposes those.  The product
runs two instances side by side with componentwise everything.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator

from ..errors import MissingColimit
from ..kernel import Coequalizer, MonoidalInstance


@dataclass(frozen=True)
class OpMor:
    base: Any

    @property
    def src(self):
        return self.base.dst

    @property
    def dst(self):
        return self.base.src

    def __repr__(self) -> str:
        return f"op({self.base!r})"


@dataclass(frozen=True)
class OppositeInstance(MonoidalInstance):
    base: MonoidalInstance

    @property
    def unit(self):
        return self.base.unit

    def tensor_obj(self, x, y):
        return self.base.tensor_obj(x, y)

    def tensor_mor(self, f: OpMor, g: OpMor) -> OpMor:
        return OpMor(self.base.tensor_mor(f.base, g.base))

    def identity(self, x) -> OpMor:
        return OpMor(self.base.identity(x))

    def _compose(self, f: OpMor, g: OpMor) -> OpMor:
        return OpMor(self.base.compose(g.base, f.base))

    def alpha(self, x, y, z) -> OpMor:
        return OpMor(self.base.alpha_inv(x, y, z))

    def alpha_inv(self, x, y, z) -> OpMor:
        return OpMor(self.base.alpha(x, y, z))

    def lunitor(self, x) -> OpMor:
        return OpMor(self.base.lunitor_inv(x))

    def lunitor_inv(self, x) -> OpMor:
        return OpMor(self.base.lunitor(x))

    def runitor(self, x) -> OpMor:
        return OpMor(self.base.runitor_inv(x))

    def runitor_inv(self, x) -> OpMor:
        return OpMor(self.base.runitor(x))

    def _coequalize(self, f: OpMor, g: OpMor) -> Coequalizer:
        try:
            eq = self.base.equalize(f.base, g.base)
        except NotImplementedError as exc:
            raise MissingColimit(
                f"{self.base!r} has no equalizers; opposite lacks coequalizers") from exc
        return Coequalizer(f, g, eq.apex, OpMor(eq.projection))

    def _coinduce(self, coeq: Coequalizer, h: OpMor) -> OpMor:
        base_eq = Coequalizer(coeq.left.base, coeq.right.base,
                              coeq.apex, coeq.projection.base)
        return OpMor(self.base.equalizer_factor(base_eq, h.base))

    def equalize(self, f: OpMor, g: OpMor) -> Coequalizer:
        co = self.base.coequalize(f.base, g.base)
        return Coequalizer(f, g, co.apex, OpMor(co.projection))

    def equalizer_factor(self, eq: Coequalizer, h: OpMor) -> OpMor:
        base_co = Coequalizer(eq.left.base, eq.right.base, eq.apex, eq.projection.base)
        return OpMor(self.base.coinduce(base_co, h.base))

    def is_epi(self, f: OpMor) -> bool:
        return self.base.is_mono(f.base)

    def is_mono(self, f: OpMor) -> bool:
        return self.base.is_epi(f.base)

    def is_iso(self, f: OpMor) -> bool:
        return self.base.is_iso(f.base)

    def invert(self, f: OpMor) -> OpMor:
        return OpMor(self.base.invert(f.base))

    def enumerate_morphisms(self, x, y) -> Iterator[OpMor]:
        return (OpMor(m) for m in self.base.enumerate_morphisms(y, x))

    def count_morphisms(self, x, y) -> int:
        return self.base.count_morphisms(y, x)

    def obj_size(self, x) -> int:
        return self.base.obj_size(x)

    def sample_objects(self, max_size: int):
        return self.base.sample_objects(max_size)

    def canonical_object(self, size: int):
        return self.base.canonical_object(size)

    def __repr__(self) -> str:
        return f"op({self.base!r})"


def opposite_instance(inst: MonoidalInstance) -> MonoidalInstance:
    """Opposite instance; unwraps so that op(op(c)) is literally c."""
    if isinstance(inst, OppositeInstance):
        return inst.base
    return OppositeInstance(inst)


@dataclass(frozen=True)
class ProdMor:
    fst: Any
    snd: Any

    @property
    def src(self):
        return (self.fst.src, self.snd.src)

    @property
    def dst(self):
        return (self.fst.dst, self.snd.dst)

    def __repr__(self) -> str:
        return f"({self.fst!r}, {self.snd!r})"


@dataclass(frozen=True)
class ProductInstance(MonoidalInstance):
    fst: MonoidalInstance
    snd: MonoidalInstance

    @property
    def unit(self):
        return (self.fst.unit, self.snd.unit)

    def tensor_obj(self, x, y):
        return (self.fst.tensor_obj(x[0], y[0]), self.snd.tensor_obj(x[1], y[1]))

    def tensor_mor(self, f: ProdMor, g: ProdMor) -> ProdMor:
        return ProdMor(self.fst.tensor_mor(f.fst, g.fst), self.snd.tensor_mor(f.snd, g.snd))

    def identity(self, x) -> ProdMor:
        return ProdMor(self.fst.identity(x[0]), self.snd.identity(x[1]))

    def _compose(self, f: ProdMor, g: ProdMor) -> ProdMor:
        return ProdMor(self.fst.compose(f.fst, g.fst), self.snd.compose(f.snd, g.snd))

    def _pair_iso(self, name: str, *objs):
        a = getattr(self.fst, name)(*[o[0] for o in objs])
        b = getattr(self.snd, name)(*[o[1] for o in objs])
        return ProdMor(a, b)

    def alpha(self, x, y, z):
        return self._pair_iso("alpha", x, y, z)

    def alpha_inv(self, x, y, z):
        return self._pair_iso("alpha_inv", x, y, z)

    def lunitor(self, x):
        return self._pair_iso("lunitor", x)

    def lunitor_inv(self, x):
        return self._pair_iso("lunitor_inv", x)

    def runitor(self, x):
        return self._pair_iso("runitor", x)

    def runitor_inv(self, x):
        return self._pair_iso("runitor_inv", x)

    def _coequalize(self, f: ProdMor, g: ProdMor) -> Coequalizer:
        c1 = self.fst.coequalize(f.fst, g.fst)
        c2 = self.snd.coequalize(f.snd, g.snd)
        return Coequalizer(f, g, (c1.apex, c2.apex),
                           ProdMor(c1.projection, c2.projection))

    def _coinduce(self, coeq: Coequalizer, h: ProdMor) -> ProdMor:
        c1 = Coequalizer(coeq.left.fst, coeq.right.fst, coeq.apex[0], coeq.projection.fst)
        c2 = Coequalizer(coeq.left.snd, coeq.right.snd, coeq.apex[1], coeq.projection.snd)
        return ProdMor(self.fst.coinduce(c1, h.fst), self.snd.coinduce(c2, h.snd))

    def equalize(self, f: ProdMor, g: ProdMor) -> Coequalizer:
        e1 = self.fst.equalize(f.fst, g.fst)
        e2 = self.snd.equalize(f.snd, g.snd)
        return Coequalizer(f, g, (e1.apex, e2.apex), ProdMor(e1.projection, e2.projection))

    def equalizer_factor(self, eq: Coequalizer, h: ProdMor) -> ProdMor:
        e1 = Coequalizer(eq.left.fst, eq.right.fst, eq.apex[0], eq.projection.fst)
        e2 = Coequalizer(eq.left.snd, eq.right.snd, eq.apex[1], eq.projection.snd)
        return ProdMor(self.fst.equalizer_factor(e1, h.fst),
                       self.snd.equalizer_factor(e2, h.snd))

    def is_epi(self, f: ProdMor) -> bool:
        return self.fst.is_epi(f.fst) and self.snd.is_epi(f.snd)

    def is_mono(self, f: ProdMor) -> bool:
        return self.fst.is_mono(f.fst) and self.snd.is_mono(f.snd)

    def is_iso(self, f: ProdMor) -> bool:
        return self.fst.is_iso(f.fst) and self.snd.is_iso(f.snd)

    def invert(self, f: ProdMor) -> ProdMor:
        return ProdMor(self.fst.invert(f.fst), self.snd.invert(f.snd))

    def enumerate_morphisms(self, x, y) -> Iterator[ProdMor]:
        return (ProdMor(a, b) for a, b in itertools.product(
            self.fst.enumerate_morphisms(x[0], y[0]),
            list(self.snd.enumerate_morphisms(x[1], y[1]))))

    def count_morphisms(self, x, y) -> int:
        return (self.fst.count_morphisms(x[0], y[0])
                * self.snd.count_morphisms(x[1], y[1]))

    def obj_size(self, x) -> int:
        return max(self.fst.obj_size(x[0]), self.snd.obj_size(x[1]))

    def sample_objects(self, max_size: int):
        return [(a, b) for a in self.fst.sample_objects(max_size)
                for b in self.snd.sample_objects(max_size)]

    def canonical_object(self, size: int):
        return (self.fst.canonical_object(size), self.snd.canonical_object(size))

    def __repr__(self) -> str:
        return f"prod({self.fst!r}, {self.snd!r})"


def product_instance(a: MonoidalInstance, b: MonoidalInstance) -> ProductInstance:
    return ProductInstance(a, b)
