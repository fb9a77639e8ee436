"""Finite-dimensional vector spaces over a prime field, skeletal presentation.

Objects are dimensions (plain ints); a morphism from m to n is an n x m
matrix mod p acting on column vectors, so the tensor is the Kronecker product
in lexicographic basis order and the structure isomorphisms are identity
matrices on the nose.  They are still checked like everything else.

Coequalizers are cokernels: the quotient of the target by the image of the
difference map, presented on the canonical pivot-complement basis of the
reduced row echelon form.  That choice makes quotient projections literal
values that repeat exactly across runs and across independently tensored
diagrams.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..errors import EndpointMismatch, NotCocone, NotPrime, ShapeMismatch
from ..kernel import Coequalizer, MonoidalInstance
from . import _modlinalg as la


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class MatrixMor:
    """dst x src matrix mod p; rows index the target basis."""

    p: int
    src: int
    dst: int
    entries: la.Mat

    def __post_init__(self):
        if len(self.entries) != self.dst or any(len(r) != self.src for r in self.entries):
            raise ShapeMismatch(
                f"matrix shape {len(self.entries)}x? does not match {self.dst}x{self.src}")
        object.__setattr__(self, "entries", la.normalize(self.entries, self.p))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"<mat[{body}] : {self.src} -> {self.dst} mod {self.p}>"


def matrix(p: int, rows, src: int | None = None) -> MatrixMor:
    rows = tuple(tuple(r) for r in rows)
    dst = len(rows)
    if src is None:
        if dst == 0:
            raise ShapeMismatch("cannot infer source dimension of an empty matrix")
        src = len(rows[0])
    return MatrixMor(p, src, dst, rows)


@dataclass(frozen=True)
class FinVect(MonoidalInstance):
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise NotPrime(f"modulus {self.p} is not prime")

    @property
    def unit(self) -> int:
        return 1

    def tensor_obj(self, x: int, y: int) -> int:
        return x * y

    def tensor_mor(self, f: MatrixMor, g: MatrixMor) -> MatrixMor:
        return MatrixMor(self.p, f.src * g.src, f.dst * g.dst,
                         la.kron(f.entries, g.entries, self.p))

    def identity(self, x: int) -> MatrixMor:
        return MatrixMor(self.p, x, x, la.eye(x))

    def _compose(self, f: MatrixMor, g: MatrixMor) -> MatrixMor:
        if f.dst == 0:
            # zero middle dimension: the product width cannot be read off
            # the factors, so build the zero matrix directly
            return MatrixMor(self.p, f.src, g.dst, la.zeros(g.dst, f.src))
        return MatrixMor(self.p, f.src, g.dst, la.mul(g.entries, f.entries, self.p))

    # the skeleton is strictly associative and unital, so every structure
    # iso is an identity matrix -- between equal objects
    def alpha(self, x, y, z) -> MatrixMor:
        return self.identity(x * y * z)

    alpha_inv = alpha

    def lunitor(self, x) -> MatrixMor:
        return self.identity(x)

    lunitor_inv = lunitor
    runitor = lunitor
    runitor_inv = lunitor

    # -- colimits -----------------------------------------------------------

    def _coequalize(self, f: MatrixMor, g: MatrixMor) -> Coequalizer:
        diff = la.sub(f.entries, g.entries, self.p)  # dst x src
        red, piv = la.rref(la.transpose(diff), self.p)  # rows span image^T
        nonpiv = [c for c in range(f.dst) if c not in piv]
        q = len(nonpiv)
        rows = []
        for t, nt in enumerate(nonpiv):
            row = [0] * f.dst
            row[nt] = 1
            for ri, pc in enumerate(piv):
                row[pc] = (-red[ri][nt]) % self.p
            rows.append(tuple(row))
        proj = MatrixMor(self.p, f.dst, q, tuple(rows))
        return Coequalizer(f, g, q, proj)

    def _coinduce(self, coeq: Coequalizer, h: MatrixMor) -> MatrixMor:
        # canonical section keeps the non-pivot coordinates; u = h o section
        f: MatrixMor = coeq.left
        diff = la.sub(f.entries, coeq.right.entries, self.p)
        _, piv = la.rref(la.transpose(diff), self.p)
        nonpiv = [c for c in range(f.dst) if c not in piv]
        rows = tuple(tuple(row[j] for j in nonpiv) for row in h.entries)
        return MatrixMor(self.p, len(nonpiv), h.dst, rows)

    def equalize(self, f: MatrixMor, g: MatrixMor) -> Coequalizer:
        diff = la.sub(f.entries, g.entries, self.p)
        basis = la.nullspace(diff, self.p, f.src)  # src x k
        k = len(basis[0]) if basis else 0
        incl = MatrixMor(self.p, k, f.src, basis if f.src else ())
        return Coequalizer(f, g, k, incl)

    def equalizer_factor(self, eq: Coequalizer, h: MatrixMor) -> MatrixMor:
        incl: MatrixMor = eq.projection
        diff = la.sub(eq.left.entries, eq.right.entries, self.p)
        _, piv = la.rref(diff, self.p)
        free = [c for c in range(eq.left.src) if c not in piv]
        rows = tuple(h.entries[i] for i in free)
        u = MatrixMor(self.p, h.src, incl.src, rows)
        if self._compose(u, incl) != h:
            raise NotCocone("map does not land in the kernel")
        return u

    # -- predicates -----------------------------------------------------------

    def is_epi(self, f: MatrixMor) -> bool:
        return la.rank(f.entries, self.p) == f.dst

    def is_mono(self, f: MatrixMor) -> bool:
        return la.rank(f.entries, self.p) == f.src

    def is_iso(self, f: MatrixMor) -> bool:
        return f.src == f.dst and la.rank(f.entries, self.p) == f.src

    def invert(self, f: MatrixMor) -> MatrixMor:
        if f.src != f.dst:
            raise EndpointMismatch(f"not square: {f!r}")
        try:
            inv = la.inverse(f.entries, self.p)
        except ValueError as exc:
            raise EndpointMismatch(f"not invertible: {f!r}") from exc
        return MatrixMor(self.p, f.dst, f.src, inv)

    # -- enumeration -----------------------------------------------------------

    def enumerate_morphisms(self, x: int, y: int) -> Iterator[MatrixMor]:
        cells = x * y
        for flat in itertools.product(range(self.p), repeat=cells):
            rows = tuple(flat[i * x:(i + 1) * x] for i in range(y))
            yield MatrixMor(self.p, x, y, rows)

    def count_morphisms(self, x: int, y: int) -> int:
        return self.p ** (x * y)

    def obj_size(self, x: int) -> int:
        return x

    def sample_objects(self, max_size: int) -> list[int]:
        return list(range(max_size + 1))

    def canonical_object(self, size: int) -> int:
        return size

    def __repr__(self) -> str:
        return f"matmod({self.p})"


def finvect(p: int) -> FinVect:
    return FinVect(p)
