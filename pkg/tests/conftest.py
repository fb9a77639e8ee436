"""Shared builders: fold monoids and spans over finite sets, small
algebras over prime fields."""

import pytest

from morita import (Bimodule, Monoid, finfunction, finset_disjoint, finset_obj,
                    finvect, matrix, monoid)


@pytest.fixture(scope="session")
def fs():
    return finset_disjoint()


@pytest.fixture(scope="session")
def fv2():
    return finvect(2)


def fold(fs, labels, name=""):
    """The unique monoid on a finite set under disjoint union."""
    c = finset_obj(labels)
    mult = finfunction(fs.tensor_obj(c, c), c,
                       {(0, e): e for e in c.elements}
                       | {(1, e): e for e in c.elements})
    return Monoid(fs, c, mult, finfunction(fs.unit, c, {}), name)


def span(fs, a, b, labels, la, rb, name=""):
    """Bimodule over fold monoids: a carrier with one leg from each side."""
    c = finset_obj(labels)
    lact = finfunction(fs.tensor_obj(a.carrier, c), c,
                       {(0, x): la[x] for x in a.carrier.elements}
                       | {(1, e): e for e in c.elements})
    ract = finfunction(fs.tensor_obj(c, b.carrier), c,
                       {(0, e): e for e in c.elements}
                       | {(1, x): rb[x] for x in b.carrier.elements})
    return Bimodule(a, b, c, lact, ract, name)


def field_monoid(fv):
    """The base field as a one-dimensional algebra."""
    return monoid(fv, 1, matrix(fv.p, [[1]]), matrix(fv.p, [[1]]), f"F{fv.p}")


def pair_algebra(fv):
    """The split two-dimensional algebra e0*e0=e0, e1*e1=e1, cross terms 0."""
    return monoid(fv, 2, matrix(fv.p, [[1, 0, 0, 0], [0, 0, 0, 1]]),
                  matrix(fv.p, [[1], [1]]), "FxF")


def swap_twist(fv, prod):
    """The regular bimodule of the split algebra with its right action
    twisted by the coordinate swap; not isomorphic to the untwisted one."""
    return Bimodule(prod, prod, 2,
                    matrix(fv.p, [[1, 0, 0, 0], [0, 0, 0, 1]]),
                    matrix(fv.p, [[0, 1, 0, 0], [0, 0, 1, 0]]),
                    "swap-twist")
