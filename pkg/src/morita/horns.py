"""Constructive fillers for marked horns of the nerve.

A horn of dimension m at position k supplies every face of an m-simplex
except the k-th.  Filling is constructive throughout:

* dimension 1: the degenerate edge on the given vertex;
* dimension 2, inner: the balanced product of the two given edges with the
  identity comparison map; outer: conjugation by a witness of the marked
  end edge;
* dimension 3, inner: the missing map is solved for from the tetrahedron
  equation, inverting the whiskered map that the marking makes invertible;
  outer: the same solve followed by cancellation of the marked end edge,
  inserting its witness isomorphism on one side and removing it with the
  unit comparison on the other;
* dimension 4: the five tetrahedron equations are not independent -- the
  missing face is assembled from the other four and its equation is checked
  outright.

Every filler result carries a report: the marking hypotheses the horn shape
demands, validity of the constructed cells, and the markings the filled
shape must exhibit.  A hypothesis that fails is recorded rather than
enforced, but a construction that needs an inverse the data cannot supply
aborts with a failing entry and no filler.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .balanced import (assoc_balanced, assoc_balanced_inv, balanced_tensor,
                       unit_left, unit_right, whisker_left, whisker_right)
from .bimodules import compose_maps, identity_map, invert_map
from .errors import IndexOutOfRange, MoritaError
from .nerve import (Monoid, Simplex, Simplex1, Simplex2, Simplex3, Simplex4,
                    coskeletal_fill, degenerate_edge, face,
                    triangle_equation_sides, validate_simplex2,
                    validate_simplex3)
from .reports import Report
from .witnesses import (EquivalenceWitness, find_equivalence_witness,
                        validate_witness)


@dataclass(frozen=True)
class Horn:
    """All faces of an m-simplex except the k-th.

    ``faces`` has length m+1 with ``faces[k] is None``; the other entries
    are (m-1)-simplices satisfying the usual compatibility on shared faces.
    """

    m: int
    k: int
    faces: tuple

    def __post_init__(self):
        if not 1 <= self.m <= 4:
            raise IndexOutOfRange(f"horn dimension {self.m} not supported")
        if not 0 <= self.k <= self.m:
            raise IndexOutOfRange(f"horn position {self.k} out of range")
        if len(self.faces) != self.m + 1:
            raise IndexOutOfRange(
                f"expected {self.m + 1} face slots, got {len(self.faces)}")
        for i, f in enumerate(self.faces):
            if (f is None) != (i == self.k):
                raise IndexOutOfRange(
                    f"face slot {i} should be {'empty' if i == self.k else 'present'}")

    def __repr__(self) -> str:
        return f"<horn [{self.m},{self.k}]>"


def horn_of(s: Simplex, k: int) -> Horn:
    """Forget the k-th face of a full simplex, leaving the horn around it."""
    if isinstance(s, Simplex1):
        m = 1
    elif isinstance(s, Simplex2):
        m = 2
    elif isinstance(s, Simplex3):
        m = 3
    elif isinstance(s, Simplex4):
        m = 4
    else:
        raise IndexOutOfRange(f"cannot take a horn of {s!r}")
    faces = tuple(None if i == k else face(s, i) for i in range(m + 1))
    return Horn(m, k, faces)


@dataclass
class FillerResult:
    """Outcome of a filling attempt.

    ``filled`` is the full simplex (with the horn's faces reused verbatim)
    and ``missing_face`` the newly constructed k-th face; both are None when
    the construction could not be carried out.
    """

    horn: Horn
    report: Report
    filled: Optional[Simplex] = None
    missing_face: Optional[Simplex] = None

    @property
    def ok(self) -> bool:
        return self.filled is not None and self.report.ok


# ---------------------------------------------------------------------------
# marking hypotheses
#
# The horn shape marks every simplex whose vertex set contains the admissible
# neighbourhood {k-1, k, k+1} (intersected with the vertex range).  In
# dimensions up to 4 that amounts to: possibly one edge, which must carry an
# invertibility witness, and a handful of triangles, whose maps must be
# isomorphisms.


def _need_witness(rep: Report, edge: Simplex1, where: str,
                  budget: int) -> Optional[EquivalenceWitness]:
    w = edge.witness
    if w is None:
        w = find_equivalence_witness(edge.bimodule, budget=budget)
    detail = "" if w is not None else "no reverse bimodule found within budget"
    rep.record("horn.hypothesis", f"edge {where} invertible", w is not None,
               detail=detail)
    if w is not None:
        rep.extend(validate_witness(w))
    return w


def _need_iso(rep: Report, tri: Simplex2, where: str) -> bool:
    return rep.record("horn.hypothesis", f"triangle {where} map invertible",
                      tri.marked)


# ---------------------------------------------------------------------------
# dimension 1


def _fill_dim1(h: Horn, budget: int) -> FillerResult:
    rep = Report(title=f"fill {h!r}")
    vertex: Monoid = h.faces[1 - h.k]
    e = degenerate_edge(vertex)
    rep.extend(validate_witness(e.witness))
    rep.record("horn.marking", "filler edge is marked", e.marked)
    return FillerResult(h, rep, e, face(e, h.k))


# ---------------------------------------------------------------------------
# dimension 2


def _fill_dim2(h: Horn, budget: int) -> FillerResult:
    rep = Report(title=f"fill {h!r}")
    if h.k == 1:
        e01, e12 = h.faces[2], h.faces[0]
        t = balanced_tensor(e01.bimodule, e12.bimodule)
        tri = Simplex2(e01, e12, Simplex1(t.bimodule), identity_map(t.bimodule))
    elif h.k == 0:
        # given the marked edge [01] and the long edge [02], produce [12]
        e01, e02 = h.faces[2], h.faces[1]
        w = _need_witness(rep, e01, "[01]", budget)
        if w is None:
            return FillerResult(h, rep)
        m, p = e01.bimodule, e02.bimodule
        new = balanced_tensor(w.reverse, p).bimodule
        phi = compose_maps(assoc_balanced_inv(m, w.reverse, p),
                           whisker_right(w.eta, p),
                           unit_left(p))
        tri = Simplex2(e01, Simplex1(new), e02, phi)
    elif h.k == 2:
        # given the marked edge [12] and the long edge [02], produce [01]
        e12, e02 = h.faces[0], h.faces[1]
        w = _need_witness(rep, e12, "[12]", budget)
        if w is None:
            return FillerResult(h, rep)
        n, p = e12.bimodule, e02.bimodule
        new = balanced_tensor(p, w.reverse).bimodule
        phi = compose_maps(assoc_balanced(p, w.reverse, n),
                           whisker_left(p, w.eps),
                           unit_right(p))
        tri = Simplex2(Simplex1(new), e12, e02, phi)
    else:
        raise IndexOutOfRange(f"no horn [2,{h.k}]")
    rep.extend(validate_simplex2(tri))
    rep.record("horn.marking", "filler triangle map is invertible", tri.marked)
    return FillerResult(h, rep, tri, face(tri, h.k))


# ---------------------------------------------------------------------------
# dimension 3
#
# Writing a = map of [012], b = [023], c = [013], d = [123], the tetrahedron
# equation reads  (a . M23) then b  ==  assoc then (M01 . d) then c.  Each
# horn solves this for its missing map; the outer two then strip the marked
# end edge off the solved-for whiskering.


def _edges_dim3(h: Horn):
    """The six edges of the tetrahedron the horn spans, keyed by vertex pair."""
    spots = {  # (i, j) -> (face index, attribute) with face index != k
        (0, 1): [(3, "m01"), (2, "m01")],
        (1, 2): [(3, "m12"), (0, "m01")],
        (0, 2): [(3, "m02"), (1, "m01")],
        (2, 3): [(0, "m12"), (1, "m12")],
        (1, 3): [(0, "m02"), (2, "m12")],
        (0, 3): [(1, "m02"), (2, "m02")],
    }
    table = {}
    for pair, options in spots.items():
        for idx, attr in options:
            if idx != h.k:
                table[pair] = getattr(h.faces[idx], attr)
                break
    return table


def _fill_dim3(h: Horn, budget: int) -> FillerResult:
    rep = Report(title=f"fill {h!r}")
    e = _edges_dim3(h)
    m01, m12, m23 = e[(0, 1)].bimodule, e[(1, 2)].bimodule, e[(2, 3)].bimodule
    d0, d1, d2, d3 = h.faces  # [123], [023], [013], [012]; one of them None

    ok = True
    if h.k == 0:
        w = _need_witness(rep, e[(0, 1)], "[01]", budget)
        ok &= _need_iso(rep, d3, "[012]")
        ok &= _need_iso(rep, d2, "[013]")
        ok &= w is not None
    elif h.k == 1:
        ok &= _need_iso(rep, d3, "[012]")
    elif h.k == 2:
        ok &= _need_iso(rep, d0, "[123]")
    elif h.k == 3:
        w = _need_witness(rep, e[(2, 3)], "[23]", budget)
        ok &= _need_iso(rep, d1, "[023]")
        ok &= _need_iso(rep, d0, "[123]")
        ok &= w is not None
    if not ok:
        rep.record("horn.filler", "construction skipped", False,
                   detail="marking hypotheses not satisfied")
        return FillerResult(h, rep)

    try:
        if h.k == 1:
            new_map = compose_maps(invert_map(whisker_right(d3.map, m23)),
                                   assoc_balanced(m01, m12, m23),
                                   whisker_left(m01, d0.map),
                                   d2.map)
            tri = Simplex2(e[(0, 2)], e[(2, 3)], e[(0, 3)], new_map)
        elif h.k == 2:
            new_map = compose_maps(invert_map(whisker_left(m01, d0.map)),
                                   assoc_balanced_inv(m01, m12, m23),
                                   whisker_right(d3.map, m23),
                                   d1.map)
            tri = Simplex2(e[(0, 1)], e[(1, 3)], e[(0, 3)], new_map)
        elif h.k == 0:
            # solve for M01 . (missing map), then cancel the reverse of [01]
            m13 = e[(1, 3)].bimodule
            x = balanced_tensor(m12, m23).bimodule
            theta = compose_maps(assoc_balanced_inv(m01, m12, m23),
                                 whisker_right(d3.map, m23),
                                 d1.map,
                                 invert_map(d2.map))
            new_map = compose_maps(
                invert_map(unit_left(x)),
                invert_map(whisker_right(w.eps, x)),
                assoc_balanced(w.reverse, m01, x),
                whisker_left(w.reverse, theta),
                assoc_balanced_inv(w.reverse, m01, m13),
                whisker_right(w.eps, m13),
                unit_left(m13))
            tri = Simplex2(e[(1, 2)], e[(2, 3)], e[(1, 3)], new_map)
        elif h.k == 3:
            # solve for (missing map) . M23, then cancel the reverse of [23]
            m02 = e[(0, 2)].bimodule
            y = balanced_tensor(m01, m12).bimodule
            theta = compose_maps(assoc_balanced(m01, m12, m23),
                                 whisker_left(m01, d0.map),
                                 d2.map,
                                 invert_map(d1.map))
            new_map = compose_maps(
                invert_map(unit_right(y)),
                invert_map(whisker_left(y, w.eta)),
                assoc_balanced_inv(y, m23, w.reverse),
                whisker_right(theta, w.reverse),
                assoc_balanced(m02, m23, w.reverse),
                whisker_left(m02, w.eta),
                unit_right(m02))
            tri = Simplex2(e[(0, 1)], e[(1, 2)], e[(0, 2)], new_map)
        faces = list(h.faces)
        faces[h.k] = tri
        tet = Simplex3(*faces)
    except MoritaError as exc:
        rep.record("horn.filler", "construction aborted", False, detail=str(exc))
        return FillerResult(h, rep)

    rep.extend(validate_simplex3(tet))
    return FillerResult(h, rep, tet, tri)


# ---------------------------------------------------------------------------
# dimension 4


def _missing_tetrahedron(h: Horn) -> Simplex3:
    """Faces of the absent tetrahedron, extracted via the face identities."""
    tris = []
    for i in range(4):
        if i < h.k:
            tris.append(face(h.faces[i], h.k - 1))
        else:
            tris.append(face(h.faces[i + 1], h.k))
    return Simplex3(*tris)


def _fill_dim4(h: Horn, budget: int) -> FillerResult:
    rep = Report(title=f"fill {h!r}")
    try:
        tet = _missing_tetrahedron(h)
        faces = list(h.faces)
        faces[h.k] = tet
        cell = coskeletal_fill(faces)
    except MoritaError as exc:
        rep.record("horn.filler", "construction aborted", False, detail=str(exc))
        return FillerResult(h, rep)

    if h.k in (0, 4):
        end = (0, 1) if h.k == 0 else (3, 4)
        _need_witness(rep, cell.edge(*end), f"[{end[0]}{end[1]}]", budget)
        for other in sorted({0, 1, 2, 3, 4} - {*end}):
            ijk = tuple(sorted((*end, other)))
            _need_iso(rep, cell.triangle(*ijk), f"[{ijk[0]}{ijk[1]}{ijk[2]}]")
    else:
        ijk = (h.k - 1, h.k, h.k + 1)
        _need_iso(rep, cell.triangle(*ijk), f"[{ijk[0]}{ijk[1]}{ijk[2]}]")

    # the four given equations, then the induced one on the assembled face
    for i in range(5):
        if i == h.k:
            continue
        lhs, rhs = triangle_equation_sides(face(cell, i))
        rep.check_equal("horn.given", f"face [{i}] equation", lhs.mor, rhs.mor)
    rep.extend(validate_simplex3(tet))
    return FillerResult(h, rep, cell, tet)


# ---------------------------------------------------------------------------


_FILLERS = {1: _fill_dim1, 2: _fill_dim2, 3: _fill_dim3, 4: _fill_dim4}


def fill_horn(h: Horn, *, witness_budget: int = 4) -> FillerResult:
    """Construct the missing face of a horn and verify the result.

    The report lists the marking hypotheses the horn shape imposes, the
    validity checks of the constructed cells, and (in dimensions 1 and 2)
    the marking the filled cell must carry.  ``witness_budget`` bounds the
    carrier size tried when a needed edge witness is not attached.
    """
    return _FILLERS[h.m](h, witness_budget)


def refill_check(s: Simplex, k: int, *, witness_budget: int = 4) -> Report:
    """Delete face k of a full simplex, refill, and compare.

    The filler need not reproduce the deleted face on the nose -- in
    dimension 2 the constructed long edge is a balanced product, not the
    original bimodule -- so agreement is only checked in dimension >= 3,
    where the solved-for map is unique.
    """
    result = fill_horn(horn_of(s, k), witness_budget=witness_budget)
    rep = Report(title=f"refill [{result.horn.m},{k}]")
    rep.extend(result.report)
    if result.filled is None:
        rep.record("horn.refill", "filler exists", False)
        return rep
    if isinstance(s, Simplex3):
        rep.check_equal("horn.refill", f"face [{k}] map recovered",
                        result.missing_face.map.mor, face(s, k).map.mor)
    elif isinstance(s, Simplex4):
        rep.record("horn.refill", f"face [{k}] recovered",
                   result.missing_face == face(s, k))
    return rep
