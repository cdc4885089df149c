"""Node removal: the triangular algebra (A/I, 0; I, A/J)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, Ideal, left_annihilator, quotient_algebra, trace_ideal
from .invariants import (
    Caps,
    enumerate_indecomposables,
    find_nodes,
    frobenius_part,
    nonprojective_simple_count,
)
from .linalg import Coordinates
from .modules import direct_sum, simple

__all__ = ["SurgeryResult", "find_nodes", "remove_nodes", "triangular_algebra", "verify_surgery"]


@dataclass
class SurgeryResult:
    algebra: Algebra
    nodes: list[int]
    trace: Ideal | None
    annihilator: Ideal | None
    result: Algebra
    verification: dict = field(default_factory=dict)

    @property
    def changed(self) -> bool:
        return bool(self.nodes)

    def to_json(self) -> dict:
        a = self.algebra
        out = {
            "input": a.provenance,
            "nodes": [f"S({a.vertices[v]})" for v in self.nodes],
            "dim_input": a.dim,
            "dim_output": self.result.dim,
        }
        if self.changed:
            out["dim_I"] = self.trace.dim
            out["dim_J"] = self.annihilator.dim
        out["verification"] = self.verification
        return out


def triangular_algebra(a: Algebra, i: Ideal, j: Ideal) -> Algebra:
    """Structure constants of (A/I, 0; I, A/J) with (a,x,b)(a',x',b') = (aa', xa' + bx', bb')."""
    F = a.field
    qi, mi = quotient_algebra(a, i, with_map=True)
    qj, mj = quotient_algebra(a, j, with_map=True)
    icoords = Coordinates(i.basis, a.dim, F)
    n1, n2, n3 = qi.dim, i.dim, qj.dim
    n = n1 + n2 + n3
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for x in range(n1):
        for y in range(n1):
            mult[x][y] = dict(qi.mult[x][y])
    for x in range(n3):
        for y in range(n3):
            mult[n1 + n2 + x][n1 + n2 + y] = {n1 + n2 + k: c for k, c in qj.mult[x][y].items()}
    for x, xv in enumerate(i.basis):
        for y, ky in enumerate(mi.keep):
            prod = a.mul(xv, a.unit_vec(ky))
            if any(prod):
                mult[n1 + x][y] = {n1 + k: c for k, c in enumerate(icoords(prod)) if c}
        for b, kb in enumerate(mj.keep):
            prod = a.mul(a.unit_vec(kb), xv)
            if any(prod):
                mult[n1 + n2 + b][n1 + x] = {n1 + k: c for k, c in enumerate(icoords(prod)) if c}
    # vertices: those of A/I followed by those of A/J
    vi = {name: v for v, name in enumerate(qi.vertices)}
    vj = {name: len(qi.vertices) + v for v, name in enumerate(qj.vertices)}
    vertices = list(qi.vertices) + [f"{name}'" for name in qj.vertices]
    idem = list(qi.idem) + [n1 + n2 + e for e in qj.idem]
    peirce = list(qi.peirce)
    for xv in i.basis:
        k = next(k for k, c in enumerate(xv) if c)
        t, s = a.peirce[k]
        peirce.append((vj[a.vertices[t]], vi[a.vertices[s]]))
    peirce += [(len(qi.vertices) + t, len(qi.vertices) + s) for t, s in qj.peirce]
    labels = [f"({lab},0,0)" for lab in qi.labels]
    labels += [f"(0,{a.labels[next(k for k, c in enumerate(xv) if c)]},0)" for xv in i.basis]
    labels += [f"(0,0,{lab})" for lab in qj.labels]
    return Algebra(F, labels, mult, vertices, idem, peirce, provenance=f"node-free({a.provenance})")


def remove_nodes(a: Algebra, seed: int = 0) -> SurgeryResult:
    nodes = find_nodes(a, seed)
    if not nodes:
        return SurgeryResult(a, [], None, None, a)
    s = direct_sum([simple(a, v) for v in nodes], a)
    i = trace_ideal(a, s)
    j = left_annihilator(a, i)
    return SurgeryResult(a, nodes, i, j, triangular_algebra(a, i, j))


def _frobenius_registry(a: Algebra, caps: Caps, seed: int):
    fp = frobenius_part(a, seed)
    if fp is None:
        return {"dim": 0, "status": "closed", "classes": 0}
    reg = enumerate_indecomposables(fp, caps, seed)
    return {"dim": fp.dim, "status": reg.flag, "classes": len(reg)}


def verify_surgery(r: SurgeryResult, caps: Caps | None = None, seed: int = 0) -> dict:
    """Checks node-freeness, simple counts, and Frobenius-finiteness transfer."""
    caps = caps or Caps()
    if not r.changed:
        r.verification = {
            "node_free": "pass",
            "nonprojective_simples": "pass",
            "frobenius_finite": "pass",
            "note": "input has no nodes",
        }
        return r.verification
    a, b = r.algebra, r.result
    node_free = not find_nodes(b, seed)
    c1, c2 = nonprojective_simple_count(a), nonprojective_simple_count(b)
    f1, f2 = _frobenius_registry(a, caps, seed), _frobenius_registry(b, caps, seed)
    if f1["status"] == "closed":
        frob = "pass" if f2["status"] == "closed" else "indeterminate"
    else:
        frob = "indeterminate"
    r.verification = {
        "node_free": "pass" if node_free else "fail",
        "nonprojective_simples": "pass" if c1 == c2 else "fail",
        "counts": [c1, c2],
        "frobenius_finite": frob,
        "frobenius_registries": [f1, f2],
        "dimension": "pass" if b.dim == (a.dim - r.trace.dim) + r.trace.dim + (a.dim - r.annihilator.dim) else "fail",
    }
    return r.verification
