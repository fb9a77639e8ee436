"""Independent recomputation of balanced products for cross-checking.

``quotient_oracle`` rebuilds M (x)_B N from the raw action tables with its
own algorithms and returns the result in the same canonical form that
``balanced_tensor`` uses, so agreement can be tested as plain equality:

* set instance: union-find over the disjoint union of the carriers, one
  union per middle element, least label per class as representative;
* linear instance: the relation vector for every basis triple, reduced by a
  from-scratch Gauss-Jordan elimination over the prime field, quotient
  coordinates read off the non-pivot columns;
* product instance: recursion in each component;
* anything else (including the opposite, whose colimits run backwards):
  ``UnsupportedInstance``.

Nothing in this module calls ``coequalize``, ``coinduce`` or the shared
matrix routines; the only reused ingredients are the label order and the
morphism containers the results must be expressed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .bimodules import Bimodule, Monoid
from .errors import MonoidMismatch, UnsupportedInstance
from .instances.combinators import OppositeInstance, ProdMor, ProductInstance
from .instances.finset import FinFunction, FinSetDisjoint, FinSetObj, label_key
from .instances.finvect import FinVect, MatrixMor
from .kernel import MonoidalInstance


@dataclass(frozen=True)
class QuotientDescription:
    """Oracle output: apex, projection and induced bimodule, canonical form.

    ``classes`` carries the instance-specific evidence: the merged element
    classes for the set instance, the reduced relation rows for the linear
    instance, and the pair of component evidence for a product.
    """

    apex: Any
    projection: Any
    bimodule: Bimodule
    classes: Any = None

    def matches(self, computed) -> bool:
        """Exact agreement with a BalancedTensor."""
        return (self.apex == computed.apex
                and self.projection == computed.projection
                and self.bimodule == computed.bimodule)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[ri] = rj


def _finset_quotient(m: Bimodule, n: Bimodule) -> QuotientDescription:
    # carrier of M @ N in the disjoint-union tagging, M-block first
    tagged = tuple((0, e) for e in m.carrier.elements) \
        + tuple((1, e) for e in n.carrier.elements)
    nm = len(m.carrier)
    uf = _UnionFind(len(tagged))
    # one union per middle element: its two action values become equal
    for bi in range(len(m.right.carrier)):
        uf.union(m.ract.table[nm + bi], nm + n.lact.table[bi])

    ordered = sorted(range(len(tagged)), key=lambda i: label_key(tagged[i]))
    rep_of: dict[int, int] = {}
    for i in ordered:  # least label in each class wins
        rep_of.setdefault(uf.find(i), i)
    reps = sorted(rep_of.values())
    apex = FinSetObj(tuple(tagged[i] for i in reps))
    cls = {root: apex.index(tagged[i]) for root, i in rep_of.items()}
    table = tuple(cls[uf.find(i)] for i in range(len(tagged)))
    src = FinSetObj(tagged)
    proj = FinFunction(src, apex, table)

    # induced actions evaluate the raw product action on each representative
    a, c = m.left, n.right
    na = len(a.carrier)
    lact_src = FinSetObj(tuple((0, e) for e in a.carrier.elements)
                         + tuple((1, e) for e in apex.elements))
    lact_table = tuple(table[m.lact.table[ai]] for ai in range(na)) \
        + tuple(table[m.lact.table[na + reps[q]]] if reps[q] < nm else q
                for q in range(len(apex)))
    ract_src = FinSetObj(tuple((0, e) for e in apex.elements)
                         + tuple((1, e) for e in c.carrier.elements))
    ract_table = tuple(table[n.ract.table[reps[q] - nm] + nm] if reps[q] >= nm else q
                       for q in range(len(apex))) \
        + tuple(table[nm + n.ract.table[len(n.carrier) + ci]]
                for ci in range(len(c.carrier)))
    bim = Bimodule(a, c, apex,
                   FinFunction(lact_src, apex, lact_table),
                   FinFunction(ract_src, apex, ract_table))
    groups: dict[int, list] = {}
    for i in range(len(tagged)):
        groups.setdefault(uf.find(i), []).append(tagged[i])
    classes = tuple(sorted((tuple(v) for v in groups.values()),
                           key=lambda t: label_key(t[0])))
    return QuotientDescription(apex, proj, bim, classes)


def _gauss_jordan(rows: list[list[int]], width: int, p: int):
    """Reduced row echelon form over F_p, written out in full."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(width):
        hit = next((r for r in range(top, len(work)) if work[r][col] % p), None)
        if hit is None:
            continue
        work[top], work[hit] = work[hit], work[top]
        inv = pow(work[top][col], -1, p)
        work[top] = [(v * inv) % p for v in work[top]]
        for r in range(len(work)):
            if r != top and work[r][col] % p:
                coeff = work[r][col]
                work[r] = [(a - coeff * b) % p for a, b in zip(work[r], work[top])]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def _finvect_quotient(m: Bimodule, n: Bimodule, p: int) -> QuotientDescription:
    dm, db, dn = m.carrier, m.right.carrier, n.carrier
    dim = dm * dn
    ract, lact = m.ract.entries, n.lact.entries
    rel = []
    # one relation per basis triple: (x.b) @ y - x @ (b.y)
    for i in range(dm):
        for j in range(db):
            for k in range(dn):
                row = [0] * dim
                for r in range(dm):
                    row[r * dn + k] = (row[r * dn + k] + ract[r][i * db + j]) % p
                for s in range(dn):
                    row[i * dn + s] = (row[i * dn + s] - lact[s][j * dn + k]) % p
                if any(row):
                    rel.append(row)
    red, piv = _gauss_jordan(rel, dim, p)
    nonpiv = [c for c in range(dim) if c not in piv]
    q = len(nonpiv)
    proj_rows = []
    for nt in nonpiv:
        row = [0] * dim
        row[nt] = 1
        for ri, pc in enumerate(piv):
            row[pc] = (-red[ri][nt]) % p
        proj_rows.append(tuple(row))
    proj = MatrixMor(p, dim, q, tuple(proj_rows))

    # induced actions: lift a quotient coordinate to its non-pivot basis
    # vector, act in the plain product, project back down
    da, dc = m.left.carrier, n.right.carrier
    lactm, ractn = m.lact.entries, n.ract.entries
    lrows = [[0] * (da * q) for _ in range(q)]
    for ai in range(da):
        for s in range(q):
            i, k = divmod(nonpiv[s], dn)
            for t in range(q):
                acc = 0
                for r in range(dm):
                    coeff = lactm[r][ai * dm + i]
                    if coeff:
                        acc += coeff * proj_rows[t][r * dn + k]
                lrows[t][ai * q + s] = acc % p
    rrows = [[0] * (q * dc) for _ in range(q)]
    for s in range(q):
        i, k = divmod(nonpiv[s], dn)
        for ci in range(dc):
            for t in range(q):
                acc = 0
                for u in range(dn):
                    coeff = ractn[u][k * dc + ci]
                    if coeff:
                        acc += coeff * proj_rows[t][i * dn + u]
                rrows[t][s * dc + ci] = acc % p
    bim = Bimodule(m.left, n.right, q,
                   MatrixMor(p, da * q, q, tuple(tuple(r) for r in lrows)),
                   MatrixMor(p, q * dc, q, tuple(tuple(r) for r in rrows)))
    classes = tuple(tuple(r) for r in red)
    return QuotientDescription(q, proj, bim, classes)


def _component_monoid(part: MonoidalInstance, a: Monoid, which: int) -> Monoid:
    pick = (lambda v: v.fst) if which == 0 else (lambda v: v.snd)
    return Monoid(part, a.carrier[which], pick(a.mult), pick(a.unit),
                  f"{a.name}[{which}]")


def _component_bimodule(part: MonoidalInstance, m: Bimodule, which: int) -> Bimodule:
    pick = (lambda v: v.fst) if which == 0 else (lambda v: v.snd)
    return Bimodule(_component_monoid(part, m.left, which),
                    _component_monoid(part, m.right, which),
                    m.carrier[which], pick(m.lact), pick(m.ract),
                    f"{m.name}[{which}]")


@lru_cache(maxsize=None)
def quotient_oracle(inst: MonoidalInstance, m: Bimodule,
                    n: Bimodule) -> QuotientDescription:
    """Recompute M (x)_B N without the instance's colimit machinery."""
    if m.right != n.left:
        raise MonoidMismatch(
            f"cannot balance {m!r} with {n!r}: middle monoids differ")
    if isinstance(inst, FinSetDisjoint):
        return _finset_quotient(m, n)
    if isinstance(inst, FinVect):
        return _finvect_quotient(m, n, inst.p)
    if isinstance(inst, ProductInstance):
        f = quotient_oracle(inst.fst, _component_bimodule(inst.fst, m, 0),
                            _component_bimodule(inst.fst, n, 0))
        s = quotient_oracle(inst.snd, _component_bimodule(inst.snd, m, 1),
                            _component_bimodule(inst.snd, n, 1))
        bim = Bimodule(m.left, n.right, (f.apex, s.apex),
                       ProdMor(f.bimodule.lact, s.bimodule.lact),
                       ProdMor(f.bimodule.ract, s.bimodule.ract))
        return QuotientDescription((f.apex, s.apex),
                                   ProdMor(f.projection, s.projection),
                                   bim, (f.classes, s.classes))
    if isinstance(inst, OppositeInstance):
        raise UnsupportedInstance(
            "the opposite instance quotients by equalizers; no direct oracle")
    raise UnsupportedInstance(f"no independent quotient oracle for {inst!r}")
