"""JSON algebra files: quiver, structure-constant and centralizer sources."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import (
    Algebra,
    Quiver,
    Relation,
    algebra_from_quiver,
    algebra_from_structure_constants,
    centralizer_algebra,
)
from .errors import ParseError
from .linalg import Field

PATH_ORDER = "left-to-right"


def _num(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _field(spec, override: Field | None, where: str) -> Field:
    if override is not None:
        return override
    try:
        return Field.parse(spec or "Q")
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad field {spec!r}: {exc}", where) from None


def _coeff(F: Field, x, where: str):
    try:
        return F(x)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ParseError(f"bad coefficient {x!r}", where) from None


def _parse_quiver(d: dict, F: Field, name: str) -> Algebra:
    q = d["quiver"]
    verts = [str(v) for v in q.get("vertices", [])]
    if not verts:
        raise ParseError("quiver has no vertices", "quiver.vertices")
    arrows = []
    for k, a in enumerate(q.get("arrows", [])):
        where = f"quiver.arrows[{k}]"
        try:
            arrows.append((str(a["name"]), str(a["source"]), str(a["target"])))
        except (KeyError, TypeError):
            raise ParseError("arrow needs name, source and target", where) from None
        if arrows[-1][1] not in verts or arrows[-1][2] not in verts:
            raise ParseError(f"arrow {arrows[-1][0]!r} has an unknown endpoint", where)
    names = {a[0]: a for a in arrows}
    rels = []
    for r, rel in enumerate(q.get("relations", [])):
        terms = []
        for t, term in enumerate(rel):
            where = f"quiver.relations[{r}][{t}]"
            path = term.get("path") if isinstance(term, dict) else None
            if not isinstance(path, list) or len(path) < 2:
                raise ParseError("relation path must list at least two arrows", where)
            for x, y in zip(path, path[1:] + [None]):
                if x not in names:
                    raise ParseError(f"unknown arrow {x!r}", where)
                if y is not None and y in names and names[x][2] != names[y][1]:
                    raise ParseError(f"arrow {y!r} does not start where {x!r} ends", where)
            terms.append((_coeff(F, term.get("coeff", "1"), where), tuple(path)))
        rels.append(Relation(terms))
    try:
        return _named(algebra_from_quiver(Quiver(verts, arrows), rels, F), name)
    except ValueError as exc:
        raise ParseError(str(exc), "quiver.relations") from None


def _parse_constants(d: dict, F: Field, name: str, seed: int) -> Algebra:
    sc = d["structure_constants"]
    labels = [str(x) for x in sc["basis"]]
    idx = {lab: k for k, lab in enumerate(labels)}
    n = len(labels)
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k, entry in enumerate(sc.get("constants", [])):
        where = f"structure_constants.constants[{k}]"
        try:
            i, j, out, c = entry
            i, j, out = idx[i], idx[j], idx[out]
        except (ValueError, KeyError, TypeError):
            raise ParseError("constant must be [left, right, result, coeff] with known labels", where) from None
        c = _coeff(F, c, where)
        if c:
            mult[i][j][out] = F(mult[i][j].get(out, 0) + c)
    for row in mult:
        for k, dct in enumerate(row):
            row[k] = {o: c for o, c in dct.items() if c}
    idem = sc.get("idempotents")
    peirce = sc.get("peirce")
    verts = sc.get("vertices")
    if idem and peirce and verts:
        try:
            a = Algebra(F, labels, mult, [str(v) for v in verts], [idx[e] for e in idem],
                        [tuple(p) for p in peirce], provenance=name)
        except KeyError as exc:
            raise ParseError(f"unknown idempotent {exc}", "structure_constants.idempotents") from None
        if not a.check_associative() or not a.check_idempotents():
            raise ParseError("constants are not associative or idempotents are inconsistent", "structure_constants")
        return a
    idems = None
    if idem:
        idems = [[1 if k == idx[e] else 0 for k in range(n)] for e in idem]
    return _named(algebra_from_structure_constants(F, labels, mult, idempotents=idems, vertices=verts,
                                                   provenance=name, seed=seed), name)


def _named(a: Algebra, name: str) -> Algebra:
    a.provenance = name
    return a


def parse_algebra(d: dict, field: Field | None = None, name: str = "algebra", seed: int = 0) -> Algebra:
    if not isinstance(d, dict):
        raise ParseError("top level must be an object", "$")
    name = d.get("name", name)
    order = d.get("path_order", PATH_ORDER)
    if order != PATH_ORDER:
        raise ParseError(f"unsupported path_order {order!r}", "path_order")
    F = _field(d.get("field"), field, "field")
    if "quiver" in d:
        return _parse_quiver(d, F, name)
    if "structure_constants" in d:
        return _parse_constants(d, F, name, seed)
    if "centralizer" in d:
        c = d["centralizer"]
        try:
            n = int(c["n"])
            m = [[_coeff(F, x, "centralizer.matrix") for x in row] for row in c["matrix"]]
            return _named(centralizer_algebra(m, n, F, seed), name)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"centralizer needs n and matrix ({exc})", "centralizer") from None
        except ValueError as exc:
            raise ParseError(str(exc), "centralizer.matrix") from None
    raise ParseError("expected one of quiver, structure_constants, centralizer", "$")


def parse_algebra_file(path, field: Field | None = None, seed: int = 0) -> Algebra:
    path = Path(path)
    try:
        d = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    return parse_algebra(d, field, path.stem, seed)


def algebra_to_dict(a: Algebra, name: str | None = None) -> dict:
    labels = list(a.labels)
    if len(set(labels)) < len(labels):
        labels = [f"{lab}#{k}" for k, lab in enumerate(labels)]
    consts = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k, c in sorted(a.mult[i][j].items()):
                if c:
                    consts.append([labels[i], labels[j], labels[k], _num(c)])
    return {
        "name": name or a.provenance,
        "field": a.field.tag,
        "path_order": PATH_ORDER,
        "structure_constants": {
            "basis": labels,
            "vertices": list(a.vertices),
            "idempotents": [labels[e] for e in a.idem],
            "peirce": [list(p) for p in a.peirce],
            "constants": consts,
        },
    }


def write_algebra_file(a: Algebra, path, name: str | None = None) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(a, name), indent=1) + "\n")
