"""Simplices of the marked nerve built from monoids and bimodules.

Dimension 0 is a monoid, dimension 1 a bimodule (optionally carrying an
invertibility witness, which is what marks it), dimension 2 a bimodule map
out of the balanced product of its first two edges, and dimension 3 four
compatible triangles subject to one associativity equation relating their
maps.  Everything above dimension 3 is determined by its boundary, so
dimension 4 is represented by five compatible tetrahedra.

A triangle is marked exactly when its map is an isomorphism; simplices of
dimension 3 and above are always marked.  Face maps follow the standard
convention that the i-th face omits vertex i.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Union

from .balanced import (assoc_balanced, balanced_tensor, tensor_of_maps,
                       unit_left, unit_right, whisker_left, whisker_right)
from .bimodules import (Bimodule, BimoduleMap, Monoid, compose_maps,
                        identity_bimodule, identity_map, validate_bimodule_map)
from .errors import BoundaryMismatch, IndexOutOfRange
from .reports import Report
from .witnesses import EquivalenceWitness, identity_witness

Simplex0 = Monoid


@dataclass(frozen=True)
class Simplex1:
    """An edge: a bimodule, marked when a witness is attached."""

    bimodule: Bimodule
    witness: Optional[EquivalenceWitness] = None

    def __post_init__(self):
        if self.witness is not None and self.witness.bimodule != self.bimodule:
            raise BoundaryMismatch("witness attached to the wrong bimodule")

    @property
    def a0(self) -> Monoid:
        return self.bimodule.left

    @property
    def a1(self) -> Monoid:
        return self.bimodule.right

    @property
    def marked(self) -> bool:
        return self.witness is not None

    def __repr__(self) -> str:
        tick = "*" if self.marked else ""
        return f"<{self.bimodule!r}{tick}>"


def mark(edge: Simplex1, witness: EquivalenceWitness) -> Simplex1:
    return replace(edge, witness=witness)


@dataclass(frozen=True)
class Simplex2:
    """A triangle: edges m01, m12, m02 and a map (m01 (x) m12) -> m02."""

    m01: Simplex1
    m12: Simplex1
    m02: Simplex1
    map: BimoduleMap

    def __post_init__(self):
        if self.m01.a1 != self.m12.a0:
            raise BoundaryMismatch("edges m01 and m12 do not share a vertex")
        if (self.m02.a0, self.m02.a1) != (self.m01.a0, self.m12.a1):
            raise BoundaryMismatch("edge m02 has wrong endpoints")
        want_src = balanced_tensor(self.m01.bimodule, self.m12.bimodule).bimodule
        if self.map.src != want_src or self.map.dst != self.m02.bimodule:
            raise BoundaryMismatch("triangle map has wrong endpoints")

    @property
    def marked(self) -> bool:
        return self.map.inst.is_iso(self.map.mor)

    def __repr__(self) -> str:
        return f"<tri {self.m01!r},{self.m12!r}=>{self.m02!r}>"


@dataclass(frozen=True)
class Simplex3:
    """A tetrahedron: four triangles with matching edges.

    Validity additionally requires the associativity equation relating the
    four maps; see :func:`validate_simplex3`.
    """

    d0: Simplex2  # [123]
    d1: Simplex2  # [023]
    d2: Simplex2  # [013]
    d3: Simplex2  # [012]

    def __post_init__(self):
        pairs = [
            (self.d0.m01, self.d3.m12, "edge [12]"),
            (self.d0.m12, self.d1.m12, "edge [23]"),
            (self.d0.m02, self.d2.m12, "edge [13]"),
            (self.d1.m01, self.d3.m02, "edge [02]"),
            (self.d1.m02, self.d2.m02, "edge [03]"),
            (self.d2.m01, self.d3.m01, "edge [01]"),
        ]
        for x, y, where in pairs:
            if x.bimodule != y.bimodule:
                raise BoundaryMismatch(f"faces disagree on {where}")

    def edge(self, i: int, j: int) -> Simplex1:
        table = {(0, 1): self.d3.m01, (1, 2): self.d3.m12, (0, 2): self.d3.m02,
                 (2, 3): self.d0.m12, (1, 3): self.d0.m02, (0, 3): self.d1.m02}
        if (i, j) not in table:
            raise IndexOutOfRange(f"no edge [{i}{j}] in a 3-simplex")
        return table[(i, j)]

    def __repr__(self) -> str:
        return f"<tet {self.edge(0,1)!r},{self.edge(1,2)!r},{self.edge(2,3)!r}>"


@dataclass(frozen=True)
class Simplex4:
    """A 4-simplex determined by its five tetrahedral faces."""

    d0: Simplex3  # [1234]
    d1: Simplex3  # [0234]
    d2: Simplex3  # [0134]
    d3: Simplex3  # [0124]
    d4: Simplex3  # [0123]

    def __post_init__(self):
        faces = (self.d0, self.d1, self.d2, self.d3, self.d4)
        for i in range(5):
            for j in range(i + 1, 5):
                if face(faces[j], i) != face(faces[i], j - 1):
                    raise BoundaryMismatch(
                        f"tetrahedra {j} and {i} disagree on their shared triangle")

    def triangle(self, i: int, j: int, k: int) -> Simplex2:
        if not 0 <= i < j < k <= 4:
            raise IndexOutOfRange(f"no triangle [{i}{j}{k}] in a 4-simplex")
        rest = sorted({0, 1, 2, 3, 4} - {i, j, k})
        tet = face(self, rest[0])
        vertices = sorted({0, 1, 2, 3, 4} - {rest[0]})
        return face(tet, vertices.index(rest[1]))

    def edge(self, i: int, j: int) -> Simplex1:
        k = min({0, 1, 2, 3, 4} - {i, j})
        tri = self.triangle(*sorted((i, j, k)))
        order = sorted((i, j, k))
        pos = (order.index(i), order.index(j))
        return {(0, 1): tri.m01, (1, 2): tri.m12, (0, 2): tri.m02}[pos]


Simplex = Union[Monoid, Simplex1, Simplex2, Simplex3, Simplex4]


def face(s: Simplex, i: int):
    """The i-th face (omit vertex i) of a simplex of dimension 1 to 4."""
    if isinstance(s, Simplex1):
        if i == 0:
            return s.a1
        if i == 1:
            return s.a0
    elif isinstance(s, Simplex2):
        if i in (0, 1, 2):
            return (s.m12, s.m02, s.m01)[i]
    elif isinstance(s, (Simplex3, Simplex4)):
        if 0 <= i <= (3 if isinstance(s, Simplex3) else 4):
            return getattr(s, f"d{i}")
    else:
        raise IndexOutOfRange(f"cannot take a face of {s!r}")
    raise IndexOutOfRange(f"face index {i} out of range for {s!r}")


def is_marked(s: Simplex) -> bool:
    if isinstance(s, Simplex1):
        return s.marked
    if isinstance(s, Simplex2):
        return s.marked
    if isinstance(s, (Simplex3, Simplex4)):
        return True
    raise IndexOutOfRange(f"no marking defined for {s!r}")


# ---------------------------------------------------------------------------
# degeneracies


@lru_cache(maxsize=None)
def degenerate_edge(a: Monoid) -> Simplex1:
    """s0 of a vertex: the monoid acting on itself, marked by its own unit."""
    return Simplex1(identity_bimodule(a), identity_witness(a))


def degenerate_triangle(e: Simplex1, i: int) -> Simplex2:
    """s_i of an edge, inhabited by the relevant unit comparison map."""
    if i == 0:
        return Simplex2(degenerate_edge(e.a0), e, e, unit_left(e.bimodule))
    if i == 1:
        return Simplex2(e, degenerate_edge(e.a1), e, unit_right(e.bimodule))
    raise IndexOutOfRange(f"degeneracy index {i} out of range for an edge")


def degenerate_tetrahedron(t: Simplex2, i: int) -> Simplex3:
    """s_i of a triangle."""
    if i == 0:
        return Simplex3(d0=t, d1=t,
                        d2=degenerate_triangle(t.m02, 0),
                        d3=degenerate_triangle(t.m01, 0))
    if i == 1:
        return Simplex3(d0=degenerate_triangle(t.m12, 0), d1=t, d2=t,
                        d3=degenerate_triangle(t.m01, 1))
    if i == 2:
        return Simplex3(d0=degenerate_triangle(t.m12, 1),
                        d1=degenerate_triangle(t.m02, 1),
                        d2=t, d3=t)
    raise IndexOutOfRange(f"degeneracy index {i} out of range for a triangle")


def degenerate_four(t: Simplex3, i: int) -> Simplex4:
    """s_i of a tetrahedron, assembled face by face.

    Faces below the doubled vertex are degeneracies of the corresponding
    faces of t, the two at the doubled vertex are t itself, and the rest
    are degeneracies one slot up.
    """
    if not 0 <= i <= 3:
        raise IndexOutOfRange(f"degeneracy index {i} out of range for a tetrahedron")
    faces = []
    for j in range(5):
        if j < i:
            faces.append(degenerate_tetrahedron(face(t, j), i - 1))
        elif j in (i, i + 1):
            faces.append(t)
        else:
            faces.append(degenerate_tetrahedron(face(t, j - 1), i))
    return coskeletal_fill(faces)


def degenerate(s: Simplex, i: int):
    if isinstance(s, Monoid):
        if i != 0:
            raise IndexOutOfRange("a vertex only has degeneracy 0")
        return degenerate_edge(s)
    if isinstance(s, Simplex1):
        return degenerate_triangle(s, i)
    if isinstance(s, Simplex2):
        return degenerate_tetrahedron(s, i)
    if isinstance(s, Simplex3):
        return degenerate_four(s, i)
    raise IndexOutOfRange(f"no degeneracy implemented for {s!r}")


# ---------------------------------------------------------------------------
# validity


def triangle_equation_sides(t: Simplex3):
    """Both sides of the 3-simplex equation, as maps out of the
    left-bracketed double balanced product into the long edge."""
    m01, m12 = t.d3.m01.bimodule, t.d3.m12.bimodule
    m23 = t.d0.m12.bimodule
    lhs = compose_maps(whisker_right(t.d3.map, m23), t.d1.map)
    rhs = compose_maps(assoc_balanced(m01, m12, m23),
                       whisker_left(m01, t.d0.map), t.d2.map)
    return lhs, rhs


def validate_simplex2(t: Simplex2) -> Report:
    rep = Report(title=f"triangle {t!r}")
    rep.extend(validate_bimodule_map(t.map))
    return rep


def validate_simplex3(t: Simplex3) -> Report:
    """Face maps are lawful and the associativity equation holds."""
    rep = Report(title=f"tetrahedron {t!r}")
    for i in range(4):
        rep.extend(validate_simplex2(face(t, i)))
    lhs, rhs = triangle_equation_sides(t)
    rep.check_equal("simplex3.equation", repr(t), lhs.mor, rhs.mor)
    return rep


def validate_simplex4(s: Simplex4) -> Report:
    """A 4-simplex is valid when each of its five faces is."""
    rep = Report(title="4-simplex")
    for i in range(5):
        sub = validate_simplex3(face(s, i))
        bad = sub.first_failure()
        rep.record(f"simplex4.face[{i}]", repr(face(s, i)), sub.ok,
                   detail="" if bad is None else bad.law)
    return rep


def coskeletal_fill(faces) -> Simplex4:
    """Assemble five tetrahedra into the unique 4-simplex they bound."""
    t0, t1, t2, t3, t4 = faces
    return Simplex4(t0, t1, t2, t3, t4)
