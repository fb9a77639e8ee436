"""Abstract interface for a concrete finite monoidal category.

An *instance* is a capability table packaged as an immutable value: it knows
its objects and morphisms, composes and tensors them, produces the structure
isomorphisms (associator and unitors), and computes coequalizers of parallel
pairs together with the universal map out of them.  All data is finite and
all comparisons are literal value equality, so every categorical law here is
a decidable check, not an assumption.

Composition is written left to right throughout: ``compose(f, g)`` is "f then
g" (the usual ``g o f``).
"""

from __future__ import annotations

import abc
import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

from .errors import ArityMismatch, EndpointMismatch, NotCocone, NotParallel
from .reports import Report

Obj = Any  # opaque hashable handle; instances define what it is


@dataclass(frozen=True)
class Coequalizer:
    """A computed coequalizer: the parallel pair, the apex and the projection.

    ``projection`` has source ``left.dst`` and target ``apex`` and is always
    epi in the producing instance.
    """

    left: Any
    right: Any
    apex: Obj
    projection: Any


_STRUCTURE_ARITY = {
    "alpha": 3, "alpha_inv": 3,
    "lambda": 1, "lambda_inv": 1,
    "rho": 1, "rho_inv": 1,
}


class MonoidalInstance(abc.ABC):
    """Capability table for one concrete monoidal category.

    Subclasses are frozen dataclasses, so instances compare and hash by their
    parameters and can key caches.
    """

    # -- core structure -------------------------------------------------

    @property
    @abc.abstractmethod
    def unit(self) -> Obj: ...

    @abc.abstractmethod
    def tensor_obj(self, x: Obj, y: Obj) -> Obj: ...

    @abc.abstractmethod
    def tensor_mor(self, f, g): ...

    @abc.abstractmethod
    def identity(self, x: Obj): ...

    @abc.abstractmethod
    def _compose(self, f, g): ...

    def compose(self, f, g):
        """f then g."""
        if f.dst != g.src:
            raise EndpointMismatch(f"cannot compose: {f!r} then {g!r}")
        return self._compose(f, g)

    def compose_many(self, *maps):
        out = maps[0]
        for m in maps[1:]:
            out = self.compose(out, m)
        return out

    # -- structure isomorphisms -----------------------------------------

    @abc.abstractmethod
    def alpha(self, x: Obj, y: Obj, z: Obj):
        """(x@y)@z -> x@(y@z)"""

    @abc.abstractmethod
    def alpha_inv(self, x: Obj, y: Obj, z: Obj): ...

    @abc.abstractmethod
    def lunitor(self, x: Obj):
        """I@x -> x"""

    @abc.abstractmethod
    def lunitor_inv(self, x: Obj): ...

    @abc.abstractmethod
    def runitor(self, x: Obj):
        """x@I -> x"""

    @abc.abstractmethod
    def runitor_inv(self, x: Obj): ...

    def structure_iso(self, kind: str, objs: Sequence[Obj]):
        """Dispatch by name; raises ArityMismatch on a wrong object count."""
        if kind not in _STRUCTURE_ARITY:
            raise ArityMismatch(f"unknown structure isomorphism {kind!r}")
        if len(objs) != _STRUCTURE_ARITY[kind]:
            raise ArityMismatch(
                f"{kind} wants {_STRUCTURE_ARITY[kind]} objects, got {len(objs)}")
        table = {
            "alpha": self.alpha, "alpha_inv": self.alpha_inv,
            "lambda": self.lunitor, "lambda_inv": self.lunitor_inv,
            "rho": self.runitor, "rho_inv": self.runitor_inv,
        }
        return table[kind](*objs)

    # -- colimits ---------------------------------------------------------

    @abc.abstractmethod
    def _coequalize(self, f, g) -> Coequalizer: ...

    def coequalize(self, f, g) -> Coequalizer:
        if f.src != g.src or f.dst != g.dst:
            raise NotParallel(f"not a parallel pair: {f!r} / {g!r}")
        return self._coequalize(f, g)

    @abc.abstractmethod
    def _coinduce(self, coeq: Coequalizer, h): ...

    def coinduce(self, coeq: Coequalizer, h):
        """Unique u with projection-then-u == h; NotCocone if h is no cocone."""
        if h.src != coeq.projection.src:
            raise NotCocone(f"cocone leg has source {h.src!r}, "
                            f"expected {coeq.projection.src!r}")
        if self.compose(coeq.left, h) != self.compose(coeq.right, h):
            raise NotCocone("map does not coequalize the pair")
        return self._coinduce(coeq, h)

    # -- predicates -------------------------------------------------------

    @abc.abstractmethod
    def is_epi(self, f) -> bool: ...

    @abc.abstractmethod
    def is_mono(self, f) -> bool: ...

    @abc.abstractmethod
    def is_iso(self, f) -> bool: ...

    @abc.abstractmethod
    def invert(self, f): ...

    # -- enumeration (everything is finite) -------------------------------

    @abc.abstractmethod
    def enumerate_morphisms(self, x: Obj, y: Obj) -> Iterator[Any]: ...

    @abc.abstractmethod
    def count_morphisms(self, x: Obj, y: Obj) -> int: ...

    @abc.abstractmethod
    def obj_size(self, x: Obj) -> int: ...

    @abc.abstractmethod
    def sample_objects(self, max_size: int) -> list[Obj]: ...

    def canonical_object(self, size: int) -> Obj:
        """A canonical object of the given size, if the instance has one."""
        raise NotImplementedError

    # optional: limits, needed by the opposite-instance combinator
    def equalize(self, f, g) -> Coequalizer:  # pragma: no cover - default
        raise NotImplementedError

    def equalizer_factor(self, eq: Coequalizer, h):  # pragma: no cover - default
        raise NotImplementedError


# ---------------------------------------------------------------------------
# generic checks


def check_coherence(inst: MonoidalInstance, objects: Sequence[Obj]) -> Report:
    """Pentagon, triangle, unitor-compatibility and inverse laws over the
    given objects (exhaustive over all tuples from ``objects``)."""
    rep = Report(title=f"coherence[{inst!r}]")
    ii = inst.unit

    for x in objects:
        lam, lam_inv = inst.lunitor(x), inst.lunitor_inv(x)
        rho, rho_inv = inst.runitor(x), inst.runitor_inv(x)
        rep.check_equal("unitor.lambda_iso", f"x={x!r}",
                        inst.compose(lam, lam_inv), inst.identity(inst.tensor_obj(ii, x)))
        rep.check_equal("unitor.lambda_iso'", f"x={x!r}",
                        inst.compose(lam_inv, lam), inst.identity(x))
        rep.check_equal("unitor.rho_iso", f"x={x!r}",
                        inst.compose(rho, rho_inv), inst.identity(inst.tensor_obj(x, ii)))
        rep.check_equal("unitor.rho_iso'", f"x={x!r}",
                        inst.compose(rho_inv, rho), inst.identity(x))

    # lambda_I == rho_I, needed silently all over the bimodule layer
    rep.check_equal("unitor.unit_agree", f"I={ii!r}", inst.lunitor(ii), inst.runitor(ii))

    for x, y in itertools.product(objects, repeat=2):
        # triangle: alpha_{x,I,y} then (x @ lambda_y)  ==  rho_x @ y
        lhs = inst.compose(inst.alpha(x, ii, y),
                           inst.tensor_mor(inst.identity(x), inst.lunitor(y)))
        rhs = inst.tensor_mor(inst.runitor(x), inst.identity(y))
        rep.check_equal("triangle", f"(x,y)=({x!r},{y!r})", lhs, rhs)

        # unitor compatibility with the associator, both shapes
        lhs = inst.compose(inst.alpha(ii, x, y), inst.lunitor(inst.tensor_obj(x, y)))
        rhs = inst.tensor_mor(inst.lunitor(x), inst.identity(y))
        rep.check_equal("unitor.left_assoc", f"(x,y)=({x!r},{y!r})", lhs, rhs)

        lhs = inst.compose(inst.alpha(x, y, ii),
                           inst.tensor_mor(inst.identity(x), inst.runitor(y)))
        rhs = inst.runitor(inst.tensor_obj(x, y))
        rep.check_equal("unitor.right_assoc", f"(x,y)=({x!r},{y!r})", lhs, rhs)

    for x, y, z in itertools.product(objects, repeat=3):
        fwd, bwd = inst.alpha(x, y, z), inst.alpha_inv(x, y, z)
        rep.check_equal("alpha.iso", f"(x,y,z)=({x!r},{y!r},{z!r})",
                        inst.compose(fwd, bwd), inst.identity(fwd.src))
        rep.check_equal("alpha.iso'", f"(x,y,z)=({x!r},{y!r},{z!r})",
                        inst.compose(bwd, fwd), inst.identity(fwd.dst))

    for x, y, z, w in itertools.product(objects, repeat=4):
        # pentagon: two re-association paths ((x@y)@z)@w -> x@(y@(z@w))
        lhs = inst.compose(inst.alpha(inst.tensor_obj(x, y), z, w),
                           inst.alpha(x, y, inst.tensor_obj(z, w)))
        rhs = inst.compose_many(
            inst.tensor_mor(inst.alpha(x, y, z), inst.identity(w)),
            inst.alpha(x, inst.tensor_obj(y, z), w),
            inst.tensor_mor(inst.identity(x), inst.alpha(y, z, w)),
        )
        rep.check_equal("pentagon", f"(x,y,z,w)=({x!r},{y!r},{z!r},{w!r})", lhs, rhs)

    return rep


def check_bifunctoriality(inst: MonoidalInstance,
                          maps: Sequence[tuple[Any, Any]]) -> Report:
    """Interchange for the tensor on pairs of composable map pairs.

    ``maps`` is a sequence of ((f, f'), (g, g')) with f then f' and g then g'
    composable; checks (f@g) then (f'@g') == (f then f') @ (g then g'),
    plus identity preservation on the endpoints involved.
    """
    rep = Report(title=f"bifunctor[{inst!r}]")
    for (f, f2), (g, g2) in maps:
        lhs = inst.compose(inst.tensor_mor(f, g), inst.tensor_mor(f2, g2))
        rhs = inst.tensor_mor(inst.compose(f, f2), inst.compose(g, g2))
        rep.check_equal("tensor.interchange", f"{f!r},{g!r}", lhs, rhs)
        rep.check_equal(
            "tensor.identity", f"{f.src!r}@{g.src!r}",
            inst.tensor_mor(inst.identity(f.src), inst.identity(g.src)),
            inst.identity(inst.tensor_obj(f.src, g.src)))
    return rep


def check_naturality(inst: MonoidalInstance, triples: Sequence[tuple[Any, Any, Any]]) -> Report:
    """Associator and unitor naturality on sampled morphism triples."""
    rep = Report(title=f"naturality[{inst!r}]")
    for f, g, h in triples:
        lhs = inst.compose(inst.alpha(f.src, g.src, h.src),
                           inst.tensor_mor(f, inst.tensor_mor(g, h)))
        rhs = inst.compose(inst.tensor_mor(inst.tensor_mor(f, g), h),
                           inst.alpha(f.dst, g.dst, h.dst))
        rep.check_equal("alpha.natural", f"({f!r},{g!r},{h!r})", lhs, rhs)
    for f, _, _ in triples:
        lhs = inst.compose(inst.tensor_mor(inst.identity(inst.unit), f), inst.lunitor(f.dst))
        rep.check_equal("lambda.natural", f"{f!r}", lhs, inst.compose(inst.lunitor(f.src), f))
        lhs = inst.compose(inst.tensor_mor(f, inst.identity(inst.unit)), inst.runitor(f.dst))
        rep.check_equal("rho.natural", f"{f!r}", lhs, inst.compose(inst.runitor(f.src), f))
    return rep


def generic_is_epi(inst: MonoidalInstance, f, probes: Iterable[Obj]) -> bool:
    """Right-cancellation test against all maps into the probe objects.

    Exponential; useful only as an independent cross-check under a tiny
    budget, never on the hot path.
    """
    for t in probes:
        seen: dict[Any, Any] = {}
        for u in inst.enumerate_morphisms(f.dst, t):
            key = inst.compose(f, u)
            if key in seen and seen[key] != u:
                return False
            seen[key] = u
    return True


def check_preserves_coequalizer(inst: MonoidalInstance, coeq: Coequalizer,
                                other: Obj, side: str) -> Report:
    """Tensoring the pair with ``other`` must again coequalize at the
    tensored apex, with the tensored projection, literally.

    ``side`` is "left" for other @ (-), "right" for (-) @ other.
    """
    rep = Report()
    idm = inst.identity(other)
    if side == "left":
        pair = (inst.tensor_mor(idm, coeq.left), inst.tensor_mor(idm, coeq.right))
        want_apex = inst.tensor_obj(other, coeq.apex)
        want_proj = inst.tensor_mor(idm, coeq.projection)
    elif side == "right":
        pair = (inst.tensor_mor(coeq.left, idm), inst.tensor_mor(coeq.right, idm))
        want_apex = inst.tensor_obj(coeq.apex, other)
        want_proj = inst.tensor_mor(coeq.projection, idm)
    else:
        raise ValueError(side)
    got = inst.coequalize(*pair)
    rep.check_equal(f"coeq.preserved.{side}", f"other={other!r}", got.apex, want_apex)
    rep.check_equal(f"coeq.preserved.{side}.proj", f"other={other!r}",
                    got.projection, want_proj)
    return rep
