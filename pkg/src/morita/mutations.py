"""Deliberately broken ambient structure for sensitivity testing.

A checker earns trust by failing on bad input.  The wrapper here forwards
every operation to a base instance except re-association, which it twists
by a transposition of the first two points of the target whenever the
target has at least two; the twisted map is still invertible (the inverse
is twisted to match) so exactly the coherence *equations* break, led by
the five-object pentagon, while sizes, composition and colimits stay
intact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from .errors import UnsupportedInstance
from .kernel import Coequalizer, MonoidalInstance
from .instances.finset import FinFunction, FinSetDisjoint
from .instances.finvect import FinVect, MatrixMor

MUTATION_NAMES = ("swap_associator",)


def _swap_first_two(inst: MonoidalInstance, x) -> Any:
    """Transposition of the first two points of ``x``; identity if too small."""
    if isinstance(inst, FinSetDisjoint):
        n = len(x)
        if n < 2:
            return inst.identity(x)
        return FinFunction(x, x, (1, 0) + tuple(range(2, n)))
    if isinstance(inst, FinVect):
        if x < 2:
            return inst.identity(x)
        rows = [[0] * x for _ in range(x)]
        rows[0][1] = rows[1][0] = 1
        for i in range(2, x):
            rows[i][i] = 1
        return MatrixMor(inst.p, x, x, tuple(tuple(r) for r in rows))
    raise UnsupportedInstance(f"no transposition construction for {inst!r}")


@dataclass(frozen=True)
class SwappedAssociator(MonoidalInstance):
    """The base instance with its associator twisted by a transposition."""

    base: MonoidalInstance

    @property
    def unit(self):
        return self.base.unit

    def tensor_obj(self, x, y):
        return self.base.tensor_obj(x, y)

    def tensor_mor(self, f, g):
        return self.base.tensor_mor(f, g)

    def identity(self, x):
        return self.base.identity(x)

    def _compose(self, f, g):
        return self.base.compose(f, g)

    def alpha(self, x, y, z):
        good = self.base.alpha(x, y, z)
        return self.base.compose(good, _swap_first_two(self.base, good.dst))

    def alpha_inv(self, x, y, z):
        good = self.base.alpha_inv(x, y, z)
        return self.base.compose(_swap_first_two(self.base, good.src), good)

    def lunitor(self, x):
        return self.base.lunitor(x)

    def lunitor_inv(self, x):
        return self.base.lunitor_inv(x)

    def runitor(self, x):
        return self.base.runitor(x)

    def runitor_inv(self, x):
        return self.base.runitor_inv(x)

    def _coequalize(self, f, g) -> Coequalizer:
        return self.base.coequalize(f, g)

    def _coinduce(self, coeq: Coequalizer, h):
        return self.base.coinduce(coeq, h)

    def equalize(self, f, g) -> Coequalizer:
        return self.base.equalize(f, g)

    def equalizer_factor(self, eq: Coequalizer, h):
        return self.base.equalizer_factor(eq, h)

    def is_epi(self, f) -> bool:
        return self.base.is_epi(f)

    def is_mono(self, f) -> bool:
        return self.base.is_mono(f)

    def is_iso(self, f) -> bool:
        return self.base.is_iso(f)

    def invert(self, f):
        return self.base.invert(f)

    def enumerate_morphisms(self, x, y) -> Iterator[Any]:
        return self.base.enumerate_morphisms(x, y)

    def count_morphisms(self, x, y) -> int:
        return self.base.count_morphisms(x, y)

    def obj_size(self, x) -> int:
        return self.base.obj_size(x)

    def sample_objects(self, max_size: int):
        return self.base.sample_objects(max_size)

    def canonical_object(self, size: int):
        return self.base.canonical_object(size)

    def __repr__(self) -> str:
        return f"swap_associator({self.base!r})"


def apply_mutations(inst: MonoidalInstance, names) -> MonoidalInstance:
    """Wrap ``inst`` in each named corruption, in order."""
    for name in names:
        if name == "swap_associator":
            inst = SwappedAssociator(inst)
        else:
            raise UnsupportedInstance(f"unknown mutation {name!r}")
    return inst
