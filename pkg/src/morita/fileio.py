"""Loading instance files: ambient category, declared algebra, cells.

An instance file is one JSON document.  Top-level keys:

``format_version``
    must be ``1``.
``kind``
    one of ``finset_disjoint``, ``finvect``, ``product``, ``opposite``.
``p``
    prime field order, ``finvect`` only.
``children``
    nested ``{kind, ...}`` documents: two for ``product``, one for
    ``opposite``.
``mutations``
    optional list of deliberate corruptions to wrap around the instance
    (see :mod:`morita.mutations`); used by sensitivity fixtures.
``monoids`` / ``bimodules`` / ``maps`` / ``triangles`` / ``tetrahedra``
    optional lists of named entities, each referring to earlier names.

Data encoding per kind:

* ``finset_disjoint`` -- carriers are label arrays (ints, strings, nested
  arrays for tuple labels); a morphism is a flat integer array mapping
  each source element, in canonical sorted order, to the index of its
  image.  Tensor sources list the left block first, so a multiplication
  table over carrier ``c`` has ``2*len(c)`` entries.
* ``finvect`` -- carriers are dimensions; a morphism is an array of rows
  (``dst`` rows of ``src`` entries, row-major Kronecker index order).
* ``product`` -- carriers and morphisms are two-element arrays of the
  component encodings.
* ``opposite`` -- the instance itself loads, but declared entities are
  not supported in files.

Structural problems (bad JSON, unknown keys, unresolved references, wrong
shapes) raise :class:`~morita.errors.ParseError`; well-formed data whose
algebra fails its validator raises :class:`~morita.errors.ValidationError`
naming the first bad entity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .balanced import balanced_tensor
from .bimodules import (Bimodule, BimoduleMap, Monoid, validate_bimodule,
                        validate_bimodule_map, validate_monoid)
from .errors import MoritaError, ParseError, ValidationError
from .instances import finset_disjoint, finvect, opposite_instance, product_instance
from .instances.combinators import ProdMor
from .instances.finset import FinFunction, finset_obj
from .instances.finvect import MatrixMor
from .kernel import MonoidalInstance
from .mutations import MUTATION_NAMES, apply_mutations
from .nerve import Simplex1, Simplex2, Simplex3, validate_simplex2, validate_simplex3
from .reports import Report

FORMAT_VERSION = 1

_KINDS = ("finset_disjoint", "finvect", "product", "opposite")


@dataclass(frozen=True)
class InstanceFile:
    """A loaded instance file: the ambient instance plus declared data."""

    path: str
    kind: str
    instance: MonoidalInstance
    mutations: tuple[str, ...] = ()
    monoids: dict[str, Monoid] = field(default_factory=dict)
    bimodules: dict[str, Bimodule] = field(default_factory=dict)
    maps: dict[str, BimoduleMap] = field(default_factory=dict)
    triangles: dict[str, Simplex2] = field(default_factory=dict)
    tetrahedra: dict[str, Simplex3] = field(default_factory=dict)

    def entities(self):
        """(section, name, value) for everything declared, in file order."""
        for section in ("monoids", "bimodules", "maps", "triangles", "tetrahedra"):
            for name, value in getattr(self, section).items():
                yield section, name, value


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def _check_keys(doc: dict, allowed: set, where: str) -> None:
    extra = set(doc) - allowed
    _require(not extra, f"{where}: unknown keys {sorted(extra)}")


def _build_instance(doc: dict, where: str, top: bool = False):
    """Returns (instance, kind-tree); the tree drives data decoding."""
    _require(isinstance(doc, dict), f"{where}: expected an object")
    kind = doc.get("kind")
    _require(kind in _KINDS, f"{where}: kind must be one of {_KINDS}, got {kind!r}")
    if not top:
        needs = {"finset_disjoint": {"kind"}, "finvect": {"kind", "p"},
                 "product": {"kind", "children"}, "opposite": {"kind", "children"}}
        _check_keys(doc, needs[kind], where)
    if kind == "finset_disjoint":
        return finset_disjoint(), ("finset_disjoint",)
    if kind == "finvect":
        p = doc.get("p")
        _require(isinstance(p, int) and p >= 2, f"{where}: finvect needs a prime 'p'")
        return finvect(p), ("finvect", p)
    children = doc.get("children")
    if kind == "product":
        _require(isinstance(children, list) and len(children) == 2,
                 f"{where}: product needs exactly two children")
        fst, t1 = _build_instance(children[0], where + ".children[0]")
        snd, t2 = _build_instance(children[1], where + ".children[1]")
        return product_instance(fst, snd), ("product", t1, t2)
    _require(isinstance(children, list) and len(children) == 1,
             f"{where}: opposite needs exactly one child")
    base, t1 = _build_instance(children[0], where + ".children[0]")
    return opposite_instance(base), ("opposite", t1)


def _label(raw, where: str):
    if isinstance(raw, bool) or not isinstance(raw, (int, str, list)):
        raise ParseError(f"{where}: labels are ints, strings or arrays, got {raw!r}")
    if isinstance(raw, list):
        return tuple(_label(v, where) for v in raw)
    return raw


def _decode_obj(tree, raw, where: str):
    if tree[0] == "finset_disjoint":
        _require(isinstance(raw, list), f"{where}: carrier must be a label array")
        try:
            return finset_obj([_label(v, where) for v in raw])
        except MoritaError as exc:
            raise ParseError(f"{where}: {exc}") from exc
    if tree[0] == "finvect":
        _require(isinstance(raw, int) and raw >= 0, f"{where}: carrier must be a dimension")
        return raw
    if tree[0] == "product":
        _require(isinstance(raw, list) and len(raw) == 2,
                 f"{where}: product carrier must be a two-element array")
        return (_decode_obj(tree[1], raw[0], where + "[0]"),
                _decode_obj(tree[2], raw[1], where + "[1]"))
    raise ParseError(f"{where}: declared data is not supported on an opposite instance")


def _decode_mor(inst, tree, raw, src, dst, where: str):
    if tree[0] == "finset_disjoint":
        _require(isinstance(raw, list) and all(isinstance(v, int) for v in raw),
                 f"{where}: expected a flat integer function table")
        try:
            return FinFunction(src, dst, tuple(raw))
        except MoritaError as exc:
            raise ParseError(f"{where}: {exc}") from exc
    if tree[0] == "finvect":
        _require(isinstance(raw, list) and all(isinstance(r, list) for r in raw),
                 f"{where}: expected an array of matrix rows")
        p = tree[1]
        try:
            return MatrixMor(p, src, dst,
                             tuple(tuple(int(v) % p for v in row) for row in raw))
        except MoritaError as exc:
            raise ParseError(f"{where}: {exc}") from exc
    if tree[0] == "product":
        _require(isinstance(raw, list) and len(raw) == 2,
                 f"{where}: product morphism must be a two-element array")
        return ProdMor(
            _decode_mor(inst.fst, tree[1], raw[0], src[0], dst[0], where + "[0]"),
            _decode_mor(inst.snd, tree[2], raw[1], src[1], dst[1], where + "[1]"))
    raise ParseError(f"{where}: declared data is not supported on an opposite instance")


def _entity_list(doc: dict, section: str) -> list:
    raw = doc.get(section, [])
    _require(isinstance(raw, list), f"'{section}' must be a list")
    seen: set[str] = set()
    for entry in raw:
        _require(isinstance(entry, dict) and isinstance(entry.get("name"), str),
                 f"every entry in '{section}' needs a string 'name'")
        _require(entry["name"] not in seen, f"duplicate name {entry['name']!r} in '{section}'")
        seen.add(entry["name"])
    return raw


def _ref(table: dict, name, section: str, where: str):
    _require(isinstance(name, str) and name in table,
             f"{where}: unresolved reference {name!r} into '{section}'")
    return table[name]


def _validated(name: str, rep: Report) -> None:
    if not rep.ok:
        raise ValidationError(name, rep)


def load_instance(path: str) -> InstanceFile:
    """Parse, build and validate everything declared in the file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc

    _require(isinstance(doc, dict), "top level must be a JSON object")
    _check_keys(doc, {"format_version", "kind", "p", "children", "mutations",
                      "monoids", "bimodules", "maps", "triangles", "tetrahedra"},
                "top level")
    version = doc.get("format_version")
    _require(version == FORMAT_VERSION,
             f"format_version must be {FORMAT_VERSION}, got {version!r}")

    inst, tree = _build_instance(doc, "top", top=True)
    mutations = doc.get("mutations", [])
    _require(isinstance(mutations, list)
             and all(m in MUTATION_NAMES for m in mutations),
             f"mutations must be drawn from {MUTATION_NAMES}")
    inst = apply_mutations(inst, mutations)

    monoids: dict[str, Monoid] = {}
    for entry in _entity_list(doc, "monoids"):
        name = entry["name"]
        where = f"monoid {name!r}"
        _check_keys(entry, {"name", "carrier", "mult", "unit"}, where)
        carrier = _decode_obj(tree, entry.get("carrier"), where + ".carrier")
        try:
            mon = Monoid(inst, carrier,
                         _decode_mor(inst, tree, entry.get("mult"),
                                     inst.tensor_obj(carrier, carrier), carrier,
                                     where + ".mult"),
                         _decode_mor(inst, tree, entry.get("unit"),
                                     inst.unit, carrier, where + ".unit"),
                         name)
        except MoritaError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{where}: {exc}") from exc
        _validated(name, validate_monoid(mon))
        monoids[name] = mon

    bimodules: dict[str, Bimodule] = {}
    for entry in _entity_list(doc, "bimodules"):
        name = entry["name"]
        where = f"bimodule {name!r}"
        _check_keys(entry, {"name", "left", "right", "carrier", "lact", "ract"}, where)
        left = _ref(monoids, entry.get("left"), "monoids", where)
        right = _ref(monoids, entry.get("right"), "monoids", where)
        carrier = _decode_obj(tree, entry.get("carrier"), where + ".carrier")
        try:
            bim = Bimodule(left, right, carrier,
                           _decode_mor(inst, tree, entry.get("lact"),
                                       inst.tensor_obj(left.carrier, carrier),
                                       carrier, where + ".lact"),
                           _decode_mor(inst, tree, entry.get("ract"),
                                       inst.tensor_obj(carrier, right.carrier),
                                       carrier, where + ".ract"),
                           name)
        except MoritaError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{where}: {exc}") from exc
        _validated(name, validate_bimodule(bim))
        bimodules[name] = bim

    maps: dict[str, BimoduleMap] = {}
    for entry in _entity_list(doc, "maps"):
        name = entry["name"]
        where = f"map {name!r}"
        _check_keys(entry, {"name", "src", "dst", "mor"}, where)
        src = _ref(bimodules, entry.get("src"), "bimodules", where)
        dst = _ref(bimodules, entry.get("dst"), "bimodules", where)
        try:
            bmap = BimoduleMap(src, dst,
                               _decode_mor(inst, tree, entry.get("mor"),
                                           src.carrier, dst.carrier, where + ".mor"))
        except MoritaError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{where}: {exc}") from exc
        _validated(name, validate_bimodule_map(bmap))
        maps[name] = bmap

    triangles: dict[str, Simplex2] = {}
    for entry in _entity_list(doc, "triangles"):
        name = entry["name"]
        where = f"triangle {name!r}"
        _check_keys(entry, {"name", "m01", "m12", "m02", "map"}, where)
        m01 = _ref(bimodules, entry.get("m01"), "bimodules", where)
        m12 = _ref(bimodules, entry.get("m12"), "bimodules", where)
        m02 = _ref(bimodules, entry.get("m02"), "bimodules", where)
        try:
            apex = balanced_tensor(m01, m12).bimodule
            raw = entry.get("map")
            if isinstance(raw, str):
                mor = _ref(maps, raw, "maps", where).mor
            else:
                mor = _decode_mor(inst, tree, raw, apex.carrier, m02.carrier,
                                  where + ".map")
            tri = Simplex2(Simplex1(m01), Simplex1(m12), Simplex1(m02),
                           BimoduleMap(apex, m02, mor))
        except MoritaError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{where}: {exc}") from exc
        _validated(name, validate_simplex2(tri))
        triangles[name] = tri

    tetrahedra: dict[str, Simplex3] = {}
    for entry in _entity_list(doc, "tetrahedra"):
        name = entry["name"]
        where = f"tetrahedron {name!r}"
        _check_keys(entry, {"name", "d0", "d1", "d2", "d3"}, where)
        faces = [_ref(triangles, entry.get(f"d{i}"), "triangles", where)
                 for i in range(4)]
        try:
            tet = Simplex3(*faces)
        except MoritaError as exc:
            raise ParseError(f"{where}: {exc}") from exc
        _validated(name, validate_simplex3(tet))
        tetrahedra[name] = tet

    return InstanceFile(path, doc["kind"], inst, tuple(mutations),
                        monoids, bimodules, maps, triangles, tetrahedra)
