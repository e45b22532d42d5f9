"""Scenario documents: UTF-8 JSON with sparse index tuples and string scalars.

A document fixes one field and holds named algebras, Hopf algebras, actions,
cocycles and scenarios.  Tensors are written sparsely as ``[i, j, k, "s"]``
(zero-based indices, scalar as a string); vectors as ``[i, "s"]``.
Emission is canonical: keys sorted, entries in index order, scalars reduced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import product

import numpy as np

from .action import ActionBundle, ActionError, action_make, inner_action
from .algebra import AlgebraDef, algebra_make
from .catalog import Scenario
from .field import FieldError, FieldSpec
from .hopf import HopfDef, hopf_make

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    """Malformed document; carries a line/column for JSON syntax errors or a path otherwise."""

    def __init__(self, message, line=None, column=None, path=None):
        self.line, self.column, self.path = line, column, path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path:
            where.append(f"at {path}")
        super().__init__(f"{message}" + (f" ({'; '.join(where)})" if where else ""))


# -- sparse encoding ------------------------------------------------------------------


def to_sparse(f: FieldSpec, arr) -> list:
    arr = f.canon(arr)
    out = []
    for idx in product(*(range(s) for s in arr.shape)):
        v = arr[idx]
        if v != 0:
            out.append([*idx, f.format(v)])
    return out


def from_sparse(f: FieldSpec, entries, shape, path: str) -> np.ndarray:
    arr = f.zeros(shape)
    if not isinstance(entries, list):
        raise DocumentError("expected a list of sparse entries", path=path)
    for n, e in enumerate(entries):
        where = f"{path}[{n}]"
        if not isinstance(e, list) or len(e) != len(shape) + 1:
            raise DocumentError(f"entry must have {len(shape)} indices and a scalar", path=where)
        *idx, s = e
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in idx) or not isinstance(s, str):
            raise DocumentError("indices must be integers and the scalar a string", path=where)
        if any(not 0 <= i < d for i, d in zip(idx, shape)):
            raise DocumentError(f"index out of range for shape {tuple(shape)}", path=where)
        try:
            arr[tuple(idx)] = f.scalar(f.parse(s) + arr[tuple(idx)])
        except FieldError as exc:
            raise DocumentError(str(exc), path=where) from exc
    return arr


# -- model ------------------------------------------------------------------------------


@dataclass
class Document:
    field: FieldSpec
    algebras: dict = dc_field(default_factory=dict)
    hopf_algebras: dict = dc_field(default_factory=dict)
    actions: dict = dc_field(default_factory=dict)
    cocycles: dict = dc_field(default_factory=dict)
    scenarios: dict = dc_field(default_factory=dict)  # name -> Scenario

    def scenario(self, name: str | None = None) -> Scenario:
        if name is None:
            if len(self.scenarios) != 1:
                raise KeyError(f"document has {len(self.scenarios)} scenarios; name one of {sorted(self.scenarios)}")
            return next(iter(self.scenarios.values()))
        try:
            return self.scenarios[name]
        except KeyError:
            raise KeyError(f"no scenario {name!r}; known: {sorted(self.scenarios)}") from None


def _algebra_json(a: AlgebraDef) -> dict:
    f = a.field
    return {
        "dim": a.dim,
        "labels": list(a.labels),
        "unit": to_sparse(f, a.unit),
        "structure": to_sparse(f, a.structure),
    }


def scenario_document(scen: Scenario) -> dict:
    """Canonical JSON object for a single scenario."""
    b: ActionBundle = scen.bundle
    f = b.field
    h = b.hopf
    doc = {
        "format_version": FORMAT_VERSION,
        "field": {"char": f.characteristic},
        "algebras": {"R": _algebra_json(b.target), "H": _algebra_json(h.algebra)},
        "hopf_algebras": {
            "H": {
                "algebra": "H",
                "delta": to_sparse(f, h.delta),
                "counit": to_sparse(f, h.counit),
                "antipode": to_sparse(f, h.antipode),
            }
        },
        "actions": {"act": {"hopf": "H", "target": "R", "act": to_sparse(f, b.act)}},
        "cocycles": {},
        "scenarios": {
            scen.name: {
                "action": "act",
                "cocycle": None,
                "description": scen.description,
                "inner_unit": None if b.inner_unit is None else to_sparse(f, b.inner_unit),
            }
        },
    }
    if b.sigma is not None:
        doc["cocycles"]["sigma"] = {"hopf": "H", "target": "R", "sigma": to_sparse(f, b.sigma)}
        doc["scenarios"][scen.name]["cocycle"] = "sigma"
    return doc


def _dump(obj, indent: int) -> str:
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_dump(obj[k], indent + 2)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and obj and all(isinstance(x, list) for x in obj):
        items = [inner + json.dumps(x, ensure_ascii=False, separators=(", ", ": ")) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def emit(doc: dict) -> str:
    """Serialize a document object canonically (sorted keys, one sparse entry per line)."""
    return _dump(doc, 0) + "\n"


def emit_scenario(scen: Scenario) -> str:
    return emit(scenario_document(scen))


# -- parsing -------------------------------------------------------------------------------


def _get(obj, key, path, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"missing key {key!r}", path=path)
    v = obj[key]
    if kind is not None and not isinstance(v, kind):
        raise DocumentError(f"{key!r} has the wrong type", path=f"{path}.{key}")
    return v


def _ref(table: dict, name, path, what):
    if name not in table:
        raise DocumentError(f"unknown {what} {name!r}", path=path)
    return table[name]


def loads(text: str, *, check: bool = True) -> Document:
    """Parse a document; structural axioms are verified unless ``check`` is false.

    Syntax and shape problems raise DocumentError; axiom violations propagate
    as the AlgebraError subclasses of the constructors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object", path="$")
    version = _get(raw, "format_version", "$")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r}", path="$.format_version")
    char = _get(_get(raw, "field", "$", dict), "char", "$.field")
    try:
        f = FieldSpec(char)
    except (FieldError, TypeError) as exc:
        raise DocumentError(str(exc), path="$.field.char") from exc
    doc = Document(f)

    for name, a in _get(raw, "algebras", "$", dict).items():
        p = f"$.algebras.{name}"
        n = _get(a, "dim", p, int)
        if n < 1:
            raise DocumentError("dim must be positive", path=f"{p}.dim")
        labels = _get(a, "labels", p, list)
        if len(labels) != n or not all(isinstance(x, str) for x in labels):
            raise DocumentError("need one string label per basis element", path=f"{p}.labels")
        c = from_sparse(f, _get(a, "structure", p), (n, n, n), f"{p}.structure")
        u = from_sparse(f, _get(a, "unit", p), (n,), f"{p}.unit")
        doc.algebras[name] = algebra_make(f, n, c, u, labels, check=check)

    for name, h in _get(raw, "hopf_algebras", "$", dict).items():
        p = f"$.hopf_algebras.{name}"
        alg = _ref(doc.algebras, _get(h, "algebra", p), f"{p}.algebra", "algebra")
        n = alg.dim
        delta = from_sparse(f, _get(h, "delta", p), (n, n, n), f"{p}.delta")
        eps = from_sparse(f, _get(h, "counit", p), (n,), f"{p}.counit")
        s = from_sparse(f, _get(h, "antipode", p), (n, n), f"{p}.antipode")
        doc.hopf_algebras[name] = hopf_make(alg, delta, eps, s, check=check)

    for name, a in _get(raw, "actions", "$", dict).items():
        p = f"$.actions.{name}"
        hopf = _ref(doc.hopf_algebras, _get(a, "hopf", p), f"{p}.hopf", "Hopf algebra")
        target = _ref(doc.algebras, _get(a, "target", p), f"{p}.target", "algebra")
        act = from_sparse(f, _get(a, "act", p), (hopf.dim, target.dim, target.dim), f"{p}.act")
        doc.actions[name] = (hopf, target, act)

    for name, c in _get(raw, "cocycles", "$", dict).items():
        p = f"$.cocycles.{name}"
        hopf = _ref(doc.hopf_algebras, _get(c, "hopf", p), f"{p}.hopf", "Hopf algebra")
        target = _ref(doc.algebras, _get(c, "target", p), f"{p}.target", "algebra")
        sig = from_sparse(f, _get(c, "sigma", p), (hopf.dim, hopf.dim, target.dim), f"{p}.sigma")
        doc.cocycles[name] = (hopf, target, sig)

    for name, s in _get(raw, "scenarios", "$", dict).items():
        p = f"$.scenarios.{name}"
        hopf, target, act = _ref(doc.actions, _get(s, "action", p), f"{p}.action", "action")
        sigma = None
        cname = s.get("cocycle") if isinstance(s, dict) else None
        if cname is not None:
            ch, ct, sigma = _ref(doc.cocycles, cname, f"{p}.cocycle", "cocycle")
            if ch is not hopf or ct is not target:
                raise DocumentError("cocycle and action refer to different algebras", path=f"{p}.cocycle")
        unit_entries = s.get("inner_unit")
        if unit_entries is not None:
            if sigma is not None:
                raise DocumentError("inner_unit is only supported with a trivial cocycle", path=f"{p}.inner_unit")
            u = from_sparse(f, unit_entries, (hopf.dim, target.dim), f"{p}.inner_unit")
            bundle = inner_action(hopf, target, u)
            if np.any(bundle.act != act):
                raise ActionError("inner_unit does not induce the stated action")
        else:
            bundle = action_make(hopf, target, act, sigma, check=check)
        desc = s.get("description") or ""
        doc.scenarios[name] = Scenario(name, bundle, desc)
    return doc


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
