"""
JSON exchange documents.

A coalgebra document looks like::

    {"kind": "coalgebra", "name": "kG", "dim": 1, "basis": ["g"],
     "delta": [[0, 0, 0, "1"]], "counit": ["1"]}

``delta`` entries [i, j, k, c] give the coefficient of c_j (x) c_k in
Delta(c_i).  Hopf documents add ``mult`` ([i, j, k, c]: coefficient of c_k
in c_i c_j), ``unit`` and a row-major ``antipode``.  Comodule, bicomodule
and subspace documents carry a ``parent`` (a name resolved against known
documents, or an inline document).
"""

import json

from .coalg import Algebra, Coalgebra, Comodule
from .coext import Bicomodule
from .errors import InvalidStructure, ParseError
from .exactla import Matrix, Subspace, format_scalar, parse_scalar
from .hopf import HopfAlgebra

KINDS = ("coalgebra", "hopf", "comodule", "bicomodule", "subspace")


def _scalar(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"scalar must be a string like \"p/q\", got {x!r}", where)
    if isinstance(x, int):
        x = str(x)
    try:
        return parse_scalar(x)
    except ParseError as e:
        raise ParseError(str(e), where) from None


def _need(doc, key, where):
    if key not in doc:
        raise ParseError(f"missing field {key!r}", where)
    return doc[key]


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {x!r}", where)
    return x


def _triples(entries, shape, where):
    if not isinstance(entries, list):
        raise ParseError("expected a list of [i, j, k, \"p/q\"] entries", where)
    a, b, c = shape
    out = [[[0] * c for _ in range(b)] for _ in range(a)]
    seen = set()
    for pos, e in enumerate(entries):
        w = f"{where}[{pos}]"
        if not isinstance(e, list) or len(e) != 4:
            raise ParseError("entry must be [i, j, k, \"p/q\"]", w)
        i, j, k = (_int(x, w) for x in e[:3])
        if not (0 <= i < a and 0 <= j < b and 0 <= k < c):
            raise ParseError(f"index ({i}, {j}, {k}) out of range for shape {shape}", w)
        if (i, j, k) in seen:
            raise ParseError(f"duplicate entry ({i}, {j}, {k})", w)
        seen.add((i, j, k))
        out[i][j][k] = _scalar(e[3], w)
    return out


def _vector(xs, n, where):
    if not isinstance(xs, list) or len(xs) != n:
        raise ParseError(f"expected a list of {n} scalars", where)
    return [_scalar(x, f"{where}[{p}]") for p, x in enumerate(xs)]


def _basis(doc, n, where):
    names = doc.get("basis")
    if names is None:
        return None
    if not isinstance(names, list) or len(names) != n or not all(isinstance(x, str) for x in names):
        raise ParseError(f"expected {n} basis labels", f"{where}.basis")
    return names


def _dim(doc, where):
    n = _int(_need(doc, "dim", where), f"{where}.dim")
    if n < 0:
        raise ParseError("dimension must be nonnegative", f"{where}.dim")
    return n


def from_dict(doc, known=None, validate=True, where="$"):
    """Typed object from a decoded document."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", where)
    kind = _need(doc, "kind", where)
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", f"{where}.kind")
    name = doc.get("name", kind)
    if kind in ("coalgebra", "hopf"):
        n = _dim(doc, where)
        if n == 0:
            raise ParseError("dimension must be at least 1", f"{where}.dim")
        delta = _triples(_need(doc, "delta", where), (n, n, n), f"{where}.delta")
        counit = _vector(_need(doc, "counit", where), n, f"{where}.counit")
        c = Coalgebra(delta, counit, _basis(doc, n, where), name)
        if kind == "coalgebra":
            if validate:
                c.check()
            return c
        mult = _triples(_need(doc, "mult", where), (n, n, n), f"{where}.mult")
        unit = _vector(_need(doc, "unit", where), n, f"{where}.unit")
        rows = _need(doc, "antipode", where)
        if not isinstance(rows, list) or len(rows) != n:
            raise ParseError(f"antipode must have {n} rows", f"{where}.antipode")
        S = Matrix([_vector(r, n, f"{where}.antipode[{p}]") for p, r in enumerate(rows)])
        h = HopfAlgebra(c, Algebra(mult, unit, name), S, name)
        if validate:
            h.check()
        return h
    parent = _resolve(_need(doc, "parent", where), known, f"{where}.parent")
    pc = parent.coalgebra if isinstance(parent, HopfAlgebra) else parent
    if kind == "subspace":
        vecs = _need(doc, "vectors", where)
        if not isinstance(vecs, list):
            raise ParseError("vectors must be a list", f"{where}.vectors")
        return Subspace(pc.dim, [_vector(v, pc.dim, f"{where}.vectors[{p}]")
                                 for p, v in enumerate(vecs)])
    m = _dim(doc, where)
    if kind == "comodule":
        rho = _triples(_need(doc, "rho", where), (m, m, pc.dim), f"{where}.rho")
        obj = Comodule(pc, rho, name, dim=m)
    else:
        left = _triples(_need(doc, "left_rho", where), (m, pc.dim, m), f"{where}.left_rho")
        right = _triples(_need(doc, "right_rho", where), (m, m, pc.dim), f"{where}.right_rho")
        obj = Bicomodule(pc, m, left, right, name)
    if validate:
        v = obj.violations()
        if v:
            raise InvalidStructure(f"{name}: " + "; ".join(map(str, v)), v)
    return obj


def _resolve(ref, known, where):
    if isinstance(ref, dict):
        return from_dict(ref, known, where=where)
    if isinstance(ref, str):
        if known and ref in known:
            return known[ref]
        raise ParseError(f"unresolved parent {ref!r}", where)
    raise ParseError("parent must be a name or an inline document", where)


def parse(text, known=None, validate=True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    return from_dict(doc, known, validate)


def load(path, known=None, validate=True):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), known, validate)


# -- emit -------------------------------------------------------------------

def _entries(t):
    return [[i, j, k, format_scalar(x)]
            for i, s in enumerate(t) for j, r in enumerate(s) for k, x in enumerate(r) if x]


def _vec(v):
    return [format_scalar(x) for x in v]


def to_dict(obj, parent_name=None):
    if isinstance(obj, HopfAlgebra):
        d = to_dict(obj.coalgebra)
        d["kind"] = "hopf"
        d["name"] = obj.name
        d["mult"] = _entries(obj.algebra.mult)
        d["unit"] = _vec(obj.unit)
        d["antipode"] = [_vec(r) for r in obj.antipode]
        return d
    if isinstance(obj, Coalgebra):
        return {"kind": "coalgebra", "name": obj.name, "dim": obj.dim,
                "basis": list(obj.basis_names), "delta": _entries(obj.delta),
                "counit": _vec(obj.counit)}
    if isinstance(obj, Comodule):
        return {"kind": "comodule", "name": obj.name, "parent": parent_name or obj.parent.name,
                "dim": obj.dim, "rho": _entries(obj.rho)}
    if isinstance(obj, Bicomodule):
        return {"kind": "bicomodule", "name": obj.name,
                "parent": parent_name or obj.parent.name, "dim": obj.dim,
                "left_rho": _entries(obj.left_rho), "right_rho": _entries(obj.right_rho)}
    if isinstance(obj, Subspace):
        if parent_name is None:
            raise ValueError("a subspace document needs a parent name")
        return {"kind": "subspace", "parent": parent_name, "vectors": [_vec(v) for v in obj.vectors]}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc):
    """Canonical text: one top-level key per line, one entry per line for lists."""
    lines = ["{"]
    items = list(doc.items())
    for pos, (k, v) in enumerate(items):
        end = "," if pos < len(items) - 1 else ""
        if isinstance(v, list) and v and isinstance(v[0], list):
            lines.append(f"  {json.dumps(k)}: [")
            lines.extend(f"    {json.dumps(x, ensure_ascii=False)}" + ("," if p < len(v) - 1 else "")
                         for p, x in enumerate(v))
            lines.append(f"  ]{end}")
        else:
            lines.append(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}{end}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit(obj, parent_name=None):
    return dumps(to_dict(obj, parent_name))
