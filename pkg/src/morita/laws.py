"""Equational laws of the bimodule calculus, checked on concrete data.

Every function takes fully constructed monoids, bimodules, or bimodule maps
and returns a :class:`~morita.reports.Report` whose entries are exact
morphism equalities (or iso facts) in the ambient instance.  Nothing here is
assumed: each law is recomputed from scratch on the given inputs.

Mixedness flags: several laws hold for any mix of balanced and plain tensor
products.  A boolean per tensor slot selects the variant, True meaning the
balanced product over the shared middle monoid.
"""

from __future__ import annotations

import itertools

from .balanced import (assoc_balanced, assoc_balanced_inv, assoc_general,
                       balanced_tensor, check_split_unit, tensor_cell,
                       tensor_map_cell, tensor_of_maps, unit_left, unit_right,
                       whisker_left, whisker_right)
from .bimodules import (Bimodule, BimoduleMap, compose_maps, free_product,
                        identity_bimodule, identity_map, invert_map, is_iso_map,
                        trivial_monoid, validate_bimodule, validate_bimodule_map)
from .reports import Report


def law_tensor_of_maps(f: BimoduleMap, g: BimoduleMap) -> Report:
    """f (x) g descends along the projections and is again a bimodule map."""
    inst = f.inst
    rep = Report(title=f"tensor_of_maps [{f!r}, {g!r}]")
    t_src = balanced_tensor(f.src, g.src)
    t_dst = balanced_tensor(f.dst, g.dst)
    fg = tensor_of_maps(f, g)
    rep.check_equal("tensor_map.square", f"{f!r}(x){g!r}",
                    inst.compose(t_src.projection, fg.mor),
                    inst.compose(inst.tensor_mor(f.mor, g.mor), t_dst.projection))
    rep.extend(validate_bimodule_map(fg))
    return rep


def law_tensor_identity(m: Bimodule, n: Bimodule) -> Report:
    """id (x) id is the identity of the balanced product."""
    rep = Report(title=f"tensor identity [{m!r}, {n!r}]")
    t = balanced_tensor(m, n)
    rep.check_equal("tensor_map.identity", f"{m!r}(x){n!r}",
                    tensor_of_maps(identity_map(m), identity_map(n)).mor,
                    m.inst.identity(t.apex))
    return rep


def law_iso_transfer(m: Bimodule, g: BimoduleMap) -> Report:
    """Whiskering an isomorphism yields an isomorphism with inverse id (x) g^-1."""
    inst = m.inst
    rep = Report(title=f"iso transfer [{m!r}, {g!r}]")
    rep.record("iso_transfer.input_iso", repr(g), is_iso_map(g))
    mg = whisker_left(m, g)
    rep.record("iso_transfer.output_iso", f"{m!r}(x){g!r}", is_iso_map(mg))
    rep.check_equal("iso_transfer.inverse", f"{m!r}(x){g!r}",
                    inst.invert(mg.mor), whisker_left(m, invert_map(g)).mor)
    return rep


def law_interchange(f: BimoduleMap, g: BimoduleMap) -> Report:
    """Whiskering in either order composes to f (x) g."""
    rep = Report(title=f"interchange [{f!r}, {g!r}]")
    fg = tensor_of_maps(f, g)
    rep.check_equal("interchange.left_first", f"{f!r}(x){g!r}",
                    compose_maps(whisker_right(f, g.src), whisker_left(f.dst, g)).mor,
                    fg.mor)
    rep.check_equal("interchange.right_first", f"{f!r}(x){g!r}",
                    compose_maps(whisker_left(f.src, g), whisker_right(f, g.dst)).mor,
                    fg.mor)
    return rep


def law_triangle_transfer(m: Bimodule, g1: BimoduleMap, g2: BimoduleMap) -> Report:
    """Whiskering preserves composition (commuting triangles descend)."""
    rep = Report(title=f"triangle transfer [{m!r}; {g1!r}, {g2!r}]")
    rep.check_equal("epi_transfer.left_whisker", f"{m!r}(x)-",
                    whisker_left(m, compose_maps(g1, g2)).mor,
                    compose_maps(whisker_left(m, g1), whisker_left(m, g2)).mor)
    return rep


def law_triangle_transfer_right(f1: BimoduleMap, f2: BimoduleMap, n: Bimodule) -> Report:
    rep = Report(title=f"triangle transfer [{f1!r}, {f2!r}; {n!r}]")
    rep.check_equal("epi_transfer.right_whisker", f"-(x){n!r}",
                    whisker_right(compose_maps(f1, f2), n).mor,
                    compose_maps(whisker_right(f1, n), whisker_right(f2, n)).mor)
    return rep


def law_mixed_assoc(m: Bimodule, n: Bimodule, p: Bimodule) -> Report:
    """The two one-sided re-association maps: descent squares, isos, validity."""
    inst = m.inst
    rep = Report(title=f"mixed re-association [{m!r}, {n!r}, {p!r}]")

    right = assoc_general(m, n, p, False, True)   # (M@N) (x) P -> M @ (N (x) P)
    t_src = balanced_tensor(free_product(m, n), p)
    t_np = balanced_tensor(n, p)
    rep.check_equal("mixed_assoc.right.square", repr(right),
                    inst.compose(t_src.projection, right.mor),
                    inst.compose(inst.alpha(m.carrier, n.carrier, p.carrier),
                                 inst.tensor_mor(inst.identity(m.carrier),
                                                 t_np.projection)))
    rep.record("mixed_assoc.right.iso", repr(right), inst.is_iso(right.mor))
    rep.extend(validate_bimodule_map(right))

    t_mn = balanced_tensor(m, n)
    t_src = balanced_tensor(m, free_product(n, p))
    left = assoc_general(m, n, p, True, False)    # M (x) (N@P) <- inverse direction
    linv = invert_map(left)                       # M (x) (N@P) -> (M (x) N) @ P
    rep.check_equal("mixed_assoc.left.square", repr(linv),
                    inst.compose(t_src.projection, linv.mor),
                    inst.compose(inst.alpha_inv(m.carrier, n.carrier, p.carrier),
                                 inst.tensor_mor(t_mn.projection,
                                                 inst.identity(p.carrier))))
    rep.record("mixed_assoc.left.iso", repr(linv), inst.is_iso(linv.mor))
    rep.extend(validate_bimodule_map(linv))
    return rep


def law_assoc_balanced(m: Bimodule, n: Bimodule, p: Bimodule) -> Report:
    """Fully balanced re-association: descent square, mutual inverses, validity."""
    inst = m.inst
    rep = Report(title=f"balanced re-association [{m!r}, {n!r}, {p!r}]")
    fwd = assoc_balanced(m, n, p)
    bwd = assoc_balanced_inv(m, n, p)
    t_mn, t_np = balanced_tensor(m, n), balanced_tensor(n, p)
    t_left = balanced_tensor(t_mn.bimodule, p)
    t_right = balanced_tensor(m, t_np.bimodule)
    rep.check_equal("assoc.square", repr(fwd),
                    inst.compose_many(inst.tensor_mor(t_mn.projection,
                                                      inst.identity(p.carrier)),
                                      t_left.projection, fwd.mor),
                    inst.compose_many(inst.alpha(m.carrier, n.carrier, p.carrier),
                                      inst.tensor_mor(inst.identity(m.carrier),
                                                      t_np.projection),
                                      t_right.projection))
    rep.check_equal("assoc.left_inverse", repr(fwd),
                    compose_maps(fwd, bwd).mor, inst.identity(t_left.apex))
    rep.check_equal("assoc.right_inverse", repr(bwd),
                    compose_maps(bwd, fwd).mor, inst.identity(t_right.apex))
    rep.extend(validate_bimodule_map(fwd))
    rep.extend(validate_bimodule_map(bwd))
    return rep


def law_assoc_natural(f: BimoduleMap, g: BimoduleMap, h: BimoduleMap,
                      variants=None) -> Report:
    """Re-association commutes with triples of maps, in all four mixed variants."""
    rep = Report(title=f"re-association naturality [{f!r}, {g!r}, {h!r}]")
    if variants is None:
        variants = tuple(itertools.product((True, False), repeat=2))
    for b1, b2 in variants:
        top = assoc_general(f.src, g.src, h.src, b1, b2)
        bottom = assoc_general(f.dst, g.dst, h.dst, b1, b2)
        vleft = tensor_map_cell(tensor_map_cell(f, g, b1), h, b2)
        vright = tensor_map_cell(f, tensor_map_cell(g, h, b2), b1)
        rep.check_equal(f"assoc.natural[{int(b1)}{int(b2)}]",
                        f"{f!r},{g!r},{h!r}",
                        compose_maps(top, vright).mor,
                        compose_maps(vleft, bottom).mor)
    return rep


def law_pentagon(m: Bimodule, n: Bimodule, p: Bimodule, q: Bimodule,
                 variants=None) -> Report:
    """Pentagon for re-association maps, in all eight mixed variants."""
    rep = Report(title=f"pentagon [{m!r}, {n!r}, {p!r}, {q!r}]")
    if variants is None:
        variants = tuple(itertools.product((True, False), repeat=3))
    for b1, b2, b3 in variants:
        mn = tensor_cell(m, n, b1)
        np_ = tensor_cell(n, p, b2)
        pq = tensor_cell(p, q, b3)
        short = compose_maps(assoc_general(mn, p, q, b2, b3),
                             assoc_general(m, n, pq, b1, b2))
        long = compose_maps(
            whisker_right(assoc_general(m, n, p, b1, b2), q, b3),
            assoc_general(m, np_, q, b1, b3),
            whisker_left(m, assoc_general(n, p, q, b2, b3), b1))
        rep.check_equal(f"pentagon[{int(b1)}{int(b2)}{int(b3)}]",
                        f"{m!r},{n!r},{p!r},{q!r}",
                        short.mor, long.mor)
    return rep


def law_unitor_triangles(m: Bimodule, n: Bimodule) -> Report:
    """Left/right unitors are compatible with mixed re-association."""
    inst = m.inst
    rep = Report(title=f"unitor triangles [{m!r}, {n!r}]")
    one = identity_bimodule(trivial_monoid(inst))
    t_mn = balanced_tensor(m, n)

    fwd = assoc_general(one, m, n, False, True)   # (I@M) (x) N -> I @ (M (x) N)
    t_src = balanced_tensor(free_product(one, m), n)
    lam = inst.coinduce(t_src.coeq,
                        inst.compose(inst.tensor_mor(inst.lunitor(m.carrier),
                                                     inst.identity(n.carrier)),
                                     t_mn.projection))
    rep.check_equal("unitor.triangle_left", f"{m!r}(x){n!r}",
                    inst.compose(fwd.mor, inst.lunitor(t_mn.apex)), lam)

    bwd = invert_map(assoc_general(m, n, one, True, False))
    t_src = balanced_tensor(m, free_product(n, one))
    rho = inst.coinduce(t_src.coeq,
                        inst.compose(inst.tensor_mor(inst.identity(m.carrier),
                                                     inst.runitor(n.carrier)),
                                     t_mn.projection))
    rep.check_equal("unitor.triangle_right", f"{m!r}(x){n!r}",
                    inst.compose(bwd.mor, inst.runitor(t_mn.apex)), rho)
    return rep


def law_composite_bimodule(m: Bimodule, n: Bimodule) -> Report:
    """The balanced product carries a lawful bimodule structure; the
    projection is an epi bimodule map from the free product."""
    inst = m.inst
    rep = Report(title=f"composite bimodule [{m!r}, {n!r}]")
    t = balanced_tensor(m, n)
    rep.extend(validate_bimodule(t.bimodule))
    rep.record("composite.projection_epi", f"{m!r}(x){n!r}",
               inst.is_epi(t.projection))
    pi = BimoduleMap(free_product(m, n), t.bimodule, t.projection)
    rep.extend(validate_bimodule_map(pi))
    return rep


def law_unit_isos(m: Bimodule) -> Report:
    """Unit comparison maps are bimodule isomorphisms arising from split
    coequalizers; on a monoid acting on itself the two maps agree."""
    inst = m.inst
    rep = Report(title=f"unit isomorphisms [{m!r}]")
    ul, ur = unit_left(m), unit_right(m)
    rep.record("unit.left_iso", repr(m), inst.is_iso(ul.mor))
    rep.record("unit.right_iso", repr(m), inst.is_iso(ur.mor))
    rep.extend(validate_bimodule_map(ul))
    rep.extend(validate_bimodule_map(ur))
    rep.extend(check_split_unit(m))
    if m.left == m.right and m == identity_bimodule(m.left):
        rep.check_equal("unit.regular_agree", repr(m), ul.mor, ur.mor)
    return rep


def law_reduction_one(f: BimoduleMap) -> Report:
    """A map is recovered from its right-unit whisker, and is iso iff it is."""
    rep = Report(title=f"reduction by unit [{f!r}]")
    b = identity_bimodule(f.src.right)
    fb = whisker_right(f, b)
    recovered = compose_maps(invert_map(unit_right(f.src)), fb, unit_right(f.dst))
    rep.check_equal("reduction_one.recover", repr(f), recovered.mor, f.mor)
    rep.record("reduction_one.iso_agree", repr(f),
               is_iso_map(f) == is_iso_map(fb))
    return rep


def law_reduction_two(f: BimoduleMap, eps: BimoduleMap) -> Report:
    """Whiskering by a bimodule isomorphic to the acting monoid determines
    the whisker by the monoid itself."""
    inst = f.inst
    a = f.src.left
    rep = Report(title=f"reduction by equivalent unit [{f!r}, {eps!r}]")
    if eps.dst != identity_bimodule(a):
        rep.record("reduction_two.shape", repr(eps), False,
                   detail="comparison map must land in the acting monoid")
        return rep
    rep.record("reduction_two.eps_iso", repr(eps), is_iso_map(eps))
    p = eps.src
    af = whisker_left(identity_bimodule(a), f)
    pf = whisker_left(p, f)
    e_m = whisker_right(eps, f.src)
    e_m2 = whisker_right(eps, f.dst)
    rep.check_equal("reduction_two.interchange", repr(f),
                    compose_maps(e_m, af).mor, compose_maps(pf, e_m2).mor)
    rep.check_equal("reduction_two.recover", repr(f),
                    compose_maps(invert_map(e_m), pf, e_m2).mor, af.mor)
    rep.record("reduction_two.iso_agree", repr(f),
               is_iso_map(af) == is_iso_map(pf))
    return rep
