"""Propagation of markings: thinness and saturation checks.

Thinness extensions ask that once enough faces of a simplex are marked, one
more marking follows.  In dimension 2 the conclusion is an invertibility
witness for the remaining edge, built explicitly out of the given witnesses
and the triangle's comparison map.  In dimension 3 the conclusion is that the
remaining face's map is an isomorphism; the reconstruction identity that
forces it is checked alongside.

Saturation asks that a simplex whose shape certifies "invertible up to the
diagonal" is marked everywhere: a tetrahedron with invertible comparison
maps and marked edges [02] and [13] has all edges marked, and appending one
extra vertex additionally makes the four comparison maps into that vertex
invertible.  Both conclusions are produced constructively, re-using the
dimension-2 and dimension-3 thinness arguments.

All functions return a report plus the newly constructed data; hypotheses
are recorded, never assumed.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from .balanced import (assoc_balanced, assoc_balanced_inv, balanced_tensor,
                       unit_left, unit_right, whisker_left, whisker_right)
from .bimodules import compose_maps, invert_map, is_iso_map
from .errors import IndexOutOfRange, MoritaError
from .nerve import (Simplex1, Simplex2, Simplex3, Simplex4, face, mark,
                    triangle_equation_sides)
from .reports import Report
from .witnesses import (EquivalenceWitness, find_equivalence_witness,
                        validate_witness)


def _edge_witness(rep: Report, edge: Simplex1, where: str,
                  budget: int) -> Optional[EquivalenceWitness]:
    w = edge.witness
    if w is None:
        w = find_equivalence_witness(edge.bimodule, budget=budget)
    detail = "" if w is not None else "no reverse bimodule found within budget"
    rep.record("thinness.hypothesis", f"edge {where} invertible", w is not None,
               detail=detail)
    return w


def _iso(rep: Report, t: Simplex2, where: str) -> bool:
    return rep.record("thinness.hypothesis", f"triangle {where} map invertible",
                      t.marked)


# ---------------------------------------------------------------------------
# dimension 2: construct the witness for the remaining edge


def thin_triangle(t: Simplex2, k: int, *,
                  witness_budget: int = 4) -> tuple[Report, Optional[EquivalenceWitness]]:
    """Two marked edges of an invertible triangle mark the third.

    k names the unmarked slot in face numbering: k=0 concludes the edge
    [12], k=1 the long edge [02], k=2 the edge [01].  Returns the witness
    for that edge, or None when a hypothesis already fails.
    """
    rep = Report(title=f"thin [2,{k}] {t!r}")
    ok = _iso(rep, t, "[012]")
    m01, m12, m02 = t.m01.bimodule, t.m12.bimodule, t.m02.bimodule
    phi = t.map
    if k == 0:
        w01 = _edge_witness(rep, t.m01, "[01]", witness_budget)
        w02 = _edge_witness(rep, t.m02, "[02]", witness_budget)
        if not (ok and w01 and w02):
            return rep, None
        rev = balanced_tensor(w02.reverse, m01).bimodule
        eps = compose_maps(assoc_balanced(w02.reverse, m01, m12),
                           whisker_left(w02.reverse, phi),
                           w02.eps)
        # pull the reverse of [01] through the triangle to reach rev
        strip = compose_maps(assoc_balanced_inv(m01, m12, w02.reverse),
                             whisker_right(phi, w02.reverse),
                             w02.eta)
        x = balanced_tensor(m12, w02.reverse).bimodule
        tau = compose_maps(
            invert_map(unit_left(x)),
            invert_map(whisker_right(w01.eps, x)),
            assoc_balanced(w01.reverse, m01, x),
            whisker_left(w01.reverse, strip),
            unit_right(w01.reverse))
        eta = compose_maps(assoc_balanced_inv(m12, w02.reverse, m01),
                           whisker_right(tau, m01),
                           w01.eps)
        witness = EquivalenceWitness(m12, rev, eta, eps)
    elif k == 1:
        w01 = _edge_witness(rep, t.m01, "[01]", witness_budget)
        w12 = _edge_witness(rep, t.m12, "[12]", witness_budget)
        if not (ok and w01 and w12):
            return rep, None
        rev = balanced_tensor(w12.reverse, w01.reverse).bimodule
        psi = compose_maps(whisker_left(w01.reverse, invert_map(phi)),
                           assoc_balanced_inv(w01.reverse, m01, m12),
                           whisker_right(w01.eps, m12),
                           unit_left(m12))
        eps = compose_maps(assoc_balanced(w12.reverse, w01.reverse, m02),
                           whisker_left(w12.reverse, psi),
                           w12.eps)
        chi = compose_maps(invert_map(whisker_right(phi, w12.reverse)),
                           assoc_balanced(m01, m12, w12.reverse),
                           whisker_left(m01, w12.eta),
                           unit_right(m01))
        eta = compose_maps(assoc_balanced_inv(m02, w12.reverse, w01.reverse),
                           whisker_right(chi, w01.reverse),
                           w01.eta)
        witness = EquivalenceWitness(m02, rev, eta, eps)
    elif k == 2:
        w12 = _edge_witness(rep, t.m12, "[12]", witness_budget)
        w02 = _edge_witness(rep, t.m02, "[02]", witness_budget)
        if not (ok and w12 and w02):
            return rep, None
        rev = balanced_tensor(m12, w02.reverse).bimodule
        eta = compose_maps(assoc_balanced_inv(m01, m12, w02.reverse),
                           whisker_right(phi, w02.reverse),
                           w02.eta)
        x = balanced_tensor(w02.reverse, m01).bimodule
        strip = compose_maps(assoc_balanced(w02.reverse, m01, m12),
                             whisker_left(w02.reverse, phi),
                             w02.eps)
        tau = compose_maps(
            invert_map(unit_right(x)),
            invert_map(whisker_left(x, w12.eta)),
            assoc_balanced_inv(x, m12, w12.reverse),
            whisker_right(strip, w12.reverse),
            unit_left(w12.reverse))
        eps = compose_maps(assoc_balanced(m12, w02.reverse, m01),
                           whisker_left(m12, tau),
                           w12.eta)
        witness = EquivalenceWitness(m01, rev, eta, eps)
    else:
        raise IndexOutOfRange(f"no thinness extension [2,{k}]")
    rep.extend(validate_witness(witness))
    return rep, witness


# ---------------------------------------------------------------------------
# dimension 3: the remaining face's map is an isomorphism


def thin_tetrahedron(t: Simplex3, k: int, *, witness_budget: int = 4) -> Report:
    """Marked neighbours of face k force face k's map to be invertible.

    Records the hypotheses the extension shape carries, the identity that
    expresses face k's map in terms of the others, and the conclusion.
    """
    rep = Report(title=f"thin [3,{k}] {t!r}")
    m01, m12 = t.d3.m01.bimodule, t.d3.m12.bimodule
    m23 = t.d0.m12.bimodule
    a, b = t.d3.map, t.d1.map      # [012], [023]
    c, d = t.d2.map, t.d0.map      # [013], [123]

    try:
        if k == 0:
            _edge_witness(rep, t.edge(0, 1), "[01]", witness_budget)
            for tri, where in ((t.d3, "[012]"), (t.d2, "[013]"), (t.d1, "[023]")):
                _iso(rep, tri, where)
            lhs = whisker_left(m01, d)
            rhs = compose_maps(assoc_balanced_inv(m01, m12, m23),
                               whisker_right(a, m23), b, invert_map(c))
            rep.check_equal("thinness.identity", "[01] (x) face-0 map determined",
                            lhs.mor, rhs.mor)
        elif k == 1:
            for tri, where in ((t.d3, "[012]"), (t.d0, "[123]"), (t.d2, "[013]")):
                _iso(rep, tri, where)
            rhs = compose_maps(invert_map(whisker_right(a, m23)),
                               assoc_balanced(m01, m12, m23),
                               whisker_left(m01, d), c)
            rep.check_equal("thinness.identity", "face-1 map determined",
                            b.mor, rhs.mor)
        elif k == 2:
            for tri, where in ((t.d0, "[123]"), (t.d1, "[023]"), (t.d3, "[012]")):
                _iso(rep, tri, where)
            rhs = compose_maps(invert_map(whisker_left(m01, d)),
                               assoc_balanced_inv(m01, m12, m23),
                               whisker_right(a, m23), b)
            rep.check_equal("thinness.identity", "face-2 map determined",
                            c.mor, rhs.mor)
        elif k == 3:
            _edge_witness(rep, t.edge(2, 3), "[23]", witness_budget)
            for tri, where in ((t.d1, "[023]"), (t.d0, "[123]"), (t.d2, "[013]")):
                _iso(rep, tri, where)
            lhs = whisker_right(a, m23)
            rhs = compose_maps(assoc_balanced(m01, m12, m23),
                               whisker_left(m01, d), c, invert_map(b))
            rep.check_equal("thinness.identity", "face-3 map (x) [23] determined",
                            lhs.mor, rhs.mor)
        else:
            raise IndexOutOfRange(f"no thinness extension [3,{k}]")
    except MoritaError as exc:
        rep.record("thinness.identity", "reconstruction aborted", False,
                   detail=str(exc))
        return rep

    rep.record("thinness.conclusion", f"face {k} map invertible",
               is_iso_map(face(t, k).map))
    return rep


# ---------------------------------------------------------------------------
# saturation


_EDGE_SLOT = {(0, 1): ("d3", "m01"), (1, 2): ("d3", "m12"), (0, 2): ("d3", "m02"),
              (2, 3): ("d0", "m12"), (1, 3): ("d0", "m02"), (0, 3): ("d1", "m02")}


def _mark_edge(t: Simplex3, i: int, j: int, w: EquivalenceWitness) -> Simplex3:
    """Attach a witness where Simplex3.edge will find it."""
    face_name, attr = _EDGE_SLOT[(i, j)]
    tri = getattr(t, face_name)
    tri = replace(tri, **{attr: mark(getattr(tri, attr), w)})
    return replace(t, **{face_name: tri})


def saturate_tetrahedron(t: Simplex3, *, witness_budget: int = 4
                         ) -> tuple[Report, dict]:
    """Invertible maps plus marked [02] and [13] mark every edge.

    Returns the witnesses for edges [01], [12], [23] and [03] keyed by
    vertex pair (together with the two given ones).  The witness for [12]
    is assembled directly; the rest follow by the dimension-2 thinness
    constructions applied to three of the faces.
    """
    rep = Report(title=f"saturate {t!r}")
    for i, tri in enumerate((t.d0, t.d1, t.d2, t.d3)):
        _iso(rep, tri, f"face {i}")
    w02 = _edge_witness(rep, t.edge(0, 2), "[02]", witness_budget)
    w13 = _edge_witness(rep, t.edge(1, 3), "[13]", witness_budget)
    if not rep.ok:
        return rep, {}

    m01, m12 = t.d3.m01.bimodule, t.d3.m12.bimodule
    m23, m13 = t.d0.m12.bimodule, t.d0.m02.bimodule
    a, b, c, d = t.d3.map, t.d1.map, t.d2.map, t.d0.map

    try:
        # candidate reverse for [12], isomorphic to M23 (x) reverse[13]
        x = balanced_tensor(w02.reverse, m01).bimodule
        g = compose_maps(assoc_balanced(w02.reverse, m01, m13),
                         whisker_left(w02.reverse, compose_maps(c, invert_map(b))),
                         assoc_balanced_inv(w02.reverse, t.d3.m02.bimodule, m23),
                         whisker_right(w02.eps, m23),
                         unit_left(m23))
        swap = compose_maps(invert_map(unit_right(x)),
                            invert_map(whisker_left(x, w13.eta)),
                            assoc_balanced_inv(x, m13, w13.reverse),
                            whisker_right(g, w13.reverse))
        eps12 = compose_maps(assoc_balanced(w02.reverse, m01, m12),
                             whisker_left(w02.reverse, a),
                             w02.eps)
        eta12 = compose_maps(whisker_left(m12, swap),
                             assoc_balanced_inv(m12, m23, w13.reverse),
                             whisker_right(d, w13.reverse),
                             w13.eta)
        w12 = EquivalenceWitness(m12, x, eta12, eps12)
    except MoritaError as exc:
        rep.record("saturation.witness", "edge [12] construction aborted",
                   False, detail=str(exc))
        return rep, {}
    rep.extend(validate_witness(w12))

    # remaining edges via the dimension-2 conclusions on three faces
    t012 = replace(t.d3, m12=mark(t.d3.m12, w12), m02=mark(t.d3.m02, w02))
    sub, w01 = thin_triangle(t012, 2, witness_budget=witness_budget)
    rep.extend(sub)
    t123 = replace(t.d0, m01=mark(t.d0.m01, w12), m02=mark(t.d0.m02, w13))
    sub, w23 = thin_triangle(t123, 0, witness_budget=witness_budget)
    rep.extend(sub)
    if w23 is None:
        return rep, {}
    t023 = replace(t.d1, m01=mark(t.d1.m01, w02), m12=mark(t.d1.m12, w23))
    sub, w03 = thin_triangle(t023, 1, witness_budget=witness_budget)
    rep.extend(sub)

    out = {(0, 2): w02, (1, 3): w13, (1, 2): w12,
           (0, 1): w01, (2, 3): w23, (0, 3): w03}
    rep.record("saturation.conclusion", "all six edges invertible",
               all(w is not None for w in out.values()))
    return rep, out


def saturate_cone(s: Simplex4, *, witness_budget: int = 4) -> tuple[Report, dict]:
    """Saturation with one extra vertex appended.

    The first four vertices span a tetrahedron satisfying the hypotheses of
    :func:`saturate_tetrahedron`; additionally the triangles [024] and [134]
    must be marked.  Concludes that the remaining four triangles into the
    last vertex -- [124], [014], [234], [034] -- are marked, in that order:
    the first by exhibiting a two-sided inverse through the simplex
    equations, the rest by dimension-3 thinness.
    """
    rep = Report(title="saturate cone")
    base, new = saturate_tetrahedron(face(s, 4), witness_budget=witness_budget)
    rep.extend(base)
    for ijk in ((0, 2, 4), (1, 3, 4)):
        _iso(rep, s.triangle(*ijk), f"[{ijk[0]}{ijk[1]}{ijk[2]}]")
    if not rep.ok:
        return rep, {}

    # [124]: equations of faces 3 and 0 provide a retraction and a section
    lhs3, _ = triangle_equation_sides(face(s, 3))
    lhs0, _ = triangle_equation_sides(face(s, 0))
    rep.record("saturation.section", "face-3 equation side invertible",
               is_iso_map(lhs3))
    rep.record("saturation.retraction", "face-0 equation side invertible",
               is_iso_map(lhs0))
    tris = {}
    tris[(1, 2, 4)] = rep.record("saturation.conclusion",
                                 "triangle [124] map invertible",
                                 is_iso_map(s.triangle(1, 2, 4).map))

    # remaining three by dimension-3 thinness on the side tetrahedra
    sub = thin_tetrahedron(face(s, 3), 2, witness_budget=witness_budget)
    rep.extend(sub)
    tris[(0, 1, 4)] = sub.ok
    tet0 = _mark_edge(face(s, 0), 0, 1, new[(1, 2)])
    sub = thin_tetrahedron(tet0, 0, witness_budget=witness_budget)
    rep.extend(sub)
    tris[(2, 3, 4)] = sub.ok
    sub = thin_tetrahedron(face(s, 1), 1, witness_budget=witness_budget)
    rep.extend(sub)
    tris[(0, 3, 4)] = sub.ok

    rep.record("saturation.conclusion", "all four cone triangles invertible",
               all(tris.values()))
    return rep, {"edges": new, "triangles": tris}
