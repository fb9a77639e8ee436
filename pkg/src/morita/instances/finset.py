"""Finite sets with disjoint union as the tensor.

Objects are canonically sorted tuples of labels; a label is an int, a str, or
a (nested) tuple of labels.  Disjoint union tags elements with 0/1 and
re-sorts, which keeps the operation reproducible bit for bit: the structure
isomorphisms come out as identity-shaped tables between genuinely different
objects, so coherence checks exercise endpoints rather than permutations.

Coequalizers are union-find quotients; the apex keeps the least label of each
class, so quotient objects are sub-tuples of their source and repeated
quotienting is stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from ..errors import EndpointMismatch, ShapeMismatch
from ..kernel import Coequalizer, MonoidalInstance

Label = Any


def label_key(v: Label):
    """Total order on labels across the three admitted shapes."""
    if isinstance(v, bool):  # bools are ints but make equality confusing; ban
        raise ShapeMismatch("bool labels are not allowed")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(label_key(x) for x in v))
    raise ShapeMismatch(f"unsupported label {v!r}")


@dataclass(frozen=True)
class FinSetObj:
    elements: tuple[Label, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ShapeMismatch(f"duplicate labels in {self.elements!r}")
        ordered = tuple(sorted(self.elements, key=label_key))
        if ordered != self.elements:
            object.__setattr__(self, "elements", ordered)

    def index(self, label: Label) -> int:
        return self.elements.index(label)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(repr, self.elements)) + "}"


def finset_obj(labels: Sequence[Label]) -> FinSetObj:
    return FinSetObj(tuple(labels))


@dataclass(frozen=True)
class FinFunction:
    """Function between FinSetObj carriers, stored as per-element image indices."""

    src: FinSetObj
    dst: FinSetObj
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != len(self.src):
            raise ShapeMismatch(f"table length {len(self.table)} != |src| {len(self.src)}")
        if any(not (0 <= i < len(self.dst)) for i in self.table):
            raise ShapeMismatch("image index out of range")

    def __call__(self, label: Label) -> Label:
        return self.dst.elements[self.table[self.src.index(label)]]

    def as_dict(self) -> dict[Label, Label]:
        return {x: self.dst.elements[i] for x, i in zip(self.src.elements, self.table)}

    def __repr__(self) -> str:
        pairs = ", ".join(f"{x!r}->{self(x)!r}" for x in self.src.elements)
        return f"<fn {pairs or 'empty'} : {self.src!r} -> {self.dst!r}>"


def finfunction(src: FinSetObj, dst: FinSetObj, mapping: dict[Label, Label]) -> FinFunction:
    try:
        table = tuple(dst.index(mapping[x]) for x in src.elements)
    except (KeyError, ValueError) as exc:
        raise ShapeMismatch(f"mapping does not define a function: {exc}") from exc
    return FinFunction(src, dst, table)


EMPTY = FinSetObj(())


@dataclass(frozen=True)
class FinSetDisjoint(MonoidalInstance):
    @property
    def unit(self) -> FinSetObj:
        return EMPTY

    def tensor_obj(self, x: FinSetObj, y: FinSetObj) -> FinSetObj:
        # tag 0 sorts before tag 1, so this is ordered concatenation
        return FinSetObj(tuple((0, e) for e in x.elements)
                         + tuple((1, e) for e in y.elements))

    def tensor_mor(self, f: FinFunction, g: FinFunction) -> FinFunction:
        nl = len(f.dst)
        table = tuple(f.table) + tuple(nl + i for i in g.table)
        return FinFunction(self.tensor_obj(f.src, g.src),
                           self.tensor_obj(f.dst, g.dst), table)

    def identity(self, x: FinSetObj) -> FinFunction:
        return FinFunction(x, x, tuple(range(len(x))))

    def _compose(self, f: FinFunction, g: FinFunction) -> FinFunction:
        return FinFunction(f.src, g.dst, tuple(g.table[i] for i in f.table))

    # structure isos: all three tensor layouts are ordered concatenations,
    # so each iso is the identity-shaped table between distinct objects
    def _relayout(self, src: FinSetObj, dst: FinSetObj) -> FinFunction:
        if len(src) != len(dst):
            raise EndpointMismatch(f"relayout size mismatch {src!r} -> {dst!r}")
        return FinFunction(src, dst, tuple(range(len(src))))

    def alpha(self, x, y, z) -> FinFunction:
        return self._relayout(self.tensor_obj(self.tensor_obj(x, y), z),
                              self.tensor_obj(x, self.tensor_obj(y, z)))

    def alpha_inv(self, x, y, z) -> FinFunction:
        return self._relayout(self.tensor_obj(x, self.tensor_obj(y, z)),
                              self.tensor_obj(self.tensor_obj(x, y), z))

    def lunitor(self, x) -> FinFunction:
        return self._relayout(self.tensor_obj(EMPTY, x), x)

    def lunitor_inv(self, x) -> FinFunction:
        return self._relayout(x, self.tensor_obj(EMPTY, x))

    def runitor(self, x) -> FinFunction:
        return self._relayout(self.tensor_obj(x, EMPTY), x)

    def runitor_inv(self, x) -> FinFunction:
        return self._relayout(x, self.tensor_obj(x, EMPTY))

    # -- colimits ---------------------------------------------------------

    def _coequalize(self, f: FinFunction, g: FinFunction) -> Coequalizer:
        n = len(f.dst)
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in zip(f.table, g.table):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        # least label of each class is the canonical representative
        rep_label: dict[int, Label] = {}
        for i, lbl in enumerate(f.dst.elements):
            r = find(i)
            if r not in rep_label or label_key(lbl) < label_key(rep_label[r]):
                rep_label[r] = lbl
        apex = FinSetObj(tuple(rep_label.values()))
        table = tuple(apex.index(rep_label[find(i)]) for i in range(n))
        return Coequalizer(f, g, apex, FinFunction(f.dst, apex, table))

    def _coinduce(self, coeq: Coequalizer, h: FinFunction) -> FinFunction:
        proj: FinFunction = coeq.projection
        out: list[int | None] = [None] * len(coeq.apex)
        for i in range(len(proj.src)):
            q = proj.table[i]
            if out[q] is None:
                out[q] = h.table[i]
            elif out[q] != h.table[i]:
                # unreachable once the cocone pre-check passed, kept as a guard
                raise EndpointMismatch("coinduce saw an inconsistent fiber")
        return FinFunction(coeq.apex, h.dst, tuple(out))  # type: ignore[arg-type]

    def equalize(self, f: FinFunction, g: FinFunction) -> Coequalizer:
        keep = tuple(e for i, e in enumerate(f.src.elements) if f.table[i] == g.table[i])
        sub = FinSetObj(keep)
        incl = finfunction(sub, f.src, {e: e for e in keep})
        return Coequalizer(f, g, sub, incl)

    def equalizer_factor(self, eq: Coequalizer, h: FinFunction) -> FinFunction:
        incl: FinFunction = eq.projection
        try:
            table = tuple(incl.src.index(h.dst.elements[i]) for i in h.table)
        except ValueError as exc:
            from ..errors import NotCocone
            raise NotCocone("map does not land in the equalizer") from exc
        return FinFunction(h.src, incl.src, table)

    # -- predicates ---------------------------------------------------------

    def is_epi(self, f: FinFunction) -> bool:
        return len(set(f.table)) == len(f.dst)

    def is_mono(self, f: FinFunction) -> bool:
        return len(set(f.table)) == len(f.src)

    def is_iso(self, f: FinFunction) -> bool:
        return len(f.src) == len(f.dst) and self.is_epi(f)

    def invert(self, f: FinFunction) -> FinFunction:
        if not self.is_iso(f):
            raise EndpointMismatch(f"not invertible: {f!r}")
        table = [0] * len(f.dst)
        for i, j in enumerate(f.table):
            table[j] = i
        return FinFunction(f.dst, f.src, tuple(table))

    # -- enumeration ---------------------------------------------------------

    def enumerate_morphisms(self, x: FinSetObj, y: FinSetObj) -> Iterator[FinFunction]:
        if len(x) == 0:
            yield FinFunction(x, y, ())
            return
        if len(y) == 0:
            return
        for table in itertools.product(range(len(y)), repeat=len(x)):
            yield FinFunction(x, y, table)

    def count_morphisms(self, x: FinSetObj, y: FinSetObj) -> int:
        if len(x) == 0:
            return 1
        return len(y) ** len(x)

    def obj_size(self, x: FinSetObj) -> int:
        return len(x)

    def sample_objects(self, max_size: int) -> list[FinSetObj]:
        return [self.canonical_object(s) for s in range(max_size + 1)]

    def canonical_object(self, size: int) -> FinSetObj:
        return FinSetObj(tuple(range(size)))

    def __repr__(self) -> str:
        return "finset(+)"


def finset_disjoint() -> FinSetDisjoint:
    return FinSetDisjoint()
