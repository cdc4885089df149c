"""Registry of indecomposables and the stable invariants computed from it."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Algebra
from .errors import ArtinLabError
from .homology import (
    AT_LEAST_CAP,
    INFINITE,
    ar_sequence,
    is_node,
    pd_from_graph,
    tau,
    tau_inverse,
)
from .linalg import IntMatrix, integer_subgroup_rank
from .modules import (
    Module,
    decompose,
    direct_sum,
    endomorphism_algebra,
    injective_envelope,
    is_injective,
    is_isomorphic,
    is_projective,
    projective,
    projective_cover,
    quotient,
    radical_socle_top,
    radical_vectors,
    socle_multiplicities,
    socle_vectors,
    standard_modules,
    top_multiplicities,
)

EXACT = "exact"
LOWER = "lower-bound"
UNAVAILABLE = "unavailable"


@dataclass
class Caps:
    resolution: int = 64
    registry: int = 512
    dim: int = 256
    deloop: int = 32


# --------------------------------------------------------------------------
# registry


@dataclass
class Entry:
    id: int
    module: Module
    projective: bool
    injective: bool
    simple: bool
    omega: list[tuple[int, int]] | None = None  # non-projective summands of the syzygy
    cosyzygy: list[tuple[int, int]] | None = None
    tau: int | None = None
    tau_inv: int | None = None
    ar_middle: list[tuple[int, int]] | None = None
    stp: bool = False


class IndecRegistry:
    """Iso classes of indecomposables closed under syzygy, cosyzygy, tau, tau^- and AR middles."""

    def __init__(self, algebra: Algebra, caps: Caps | None = None, seed: int = 0):
        self.algebra = algebra
        self.caps = caps or Caps()
        self.seed = seed
        self.entries: list[Entry] = []
        self._by_fp: dict[tuple, list[int]] = {}
        self.closed = True

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def flag(self) -> str:
        return "closed" if self.closed else "capped"

    def _fingerprint(self, m: Module) -> tuple:
        return (tuple(m.vertex_dims()), tuple(top_multiplicities(m)), tuple(socle_multiplicities(m)))

    def lookup(self, m: Module) -> int | None:
        for i in self._by_fp.get(self._fingerprint(m), []):
            if is_isomorphic(m, self.entries[i].module, self.seed)[0]:
                return i
        return None

    def add(self, m: Module) -> int | None:
        """Id of the class of indecomposable ``m``; None when the caps forbid adding it."""
        i = self.lookup(m)
        if i is not None:
            return i
        if len(self.entries) >= self.caps.registry or m.dim > self.caps.dim:
            self.closed = False
            return None
        m._cache["indec"] = True
        simple = not radical_vectors(m).rows
        e = Entry(len(self.entries), m, is_projective(m), is_injective(m), simple)
        self.entries.append(e)
        self._by_fp.setdefault(self._fingerprint(m), []).append(e.id)
        return e.id

    def classify(self, m: Module) -> list[tuple[int | None, int]]:
        """Registry ids (with multiplicities) of the indecomposable summands of ``m``."""
        if m.dim == 0:
            return []
        counts: dict[int | None, int] = {}
        order = []
        for s in decompose(m, self.seed).summands:
            i = self.add(s)
            if i not in counts:
                order.append(i)
                counts[i] = 0
            counts[i] += 1
        return [(i, counts[i]) for i in order]

    def nonprojective(self) -> list[int]:
        return [e.id for e in self.entries if not e.projective]

    def omega_ids(self, ids: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for i in ids:
            om = self.entries[i].omega
            if om is None:
                raise ArtinLabError("syzygy of a registry class is unknown")
            out.update(j for j, _ in om if j is not None and not self.entries[j].projective)
        return out


def enumerate_indecomposables(a: Algebra, caps: Caps | None = None, seed: int = 0) -> IndecRegistry:
    reg = IndecRegistry(a, caps, seed)
    simples, projs, injs = standard_modules(a)
    queue: list[int] = []
    for m in simples + projs + injs:
        for i, _ in reg.classify(m):
            if i is not None and i not in queue:
                queue.append(i)
    done: set[int] = set()

    def push(pairs):
        for i, _ in pairs:
            if i is not None and i not in done and i not in queue:
                queue.append(i)

    while queue:
        i = queue.pop(0)
        if i in done:
            continue
        done.add(i)
        e = reg.entries[i]
        m = e.module
        if e.projective:
            e.omega = []
            push(reg.classify(radical_socle_top(m).rad))
        else:
            c = projective_cover(m)
            e.omega = [(j, k) for j, k in reg.classify(c.kernel)
                       if j is None or not reg.entries[j].projective]
            push(e.omega)
            t = reg.classify(tau(m))
            e.tau = t[0][0] if t else None
            push(t)
            seq = ar_sequence(m, seed)
            e.ar_middle = reg.classify(seq.middle)
            push(e.ar_middle)
        if e.injective:
            e.cosyzygy = []
            q, _ = quotient(m, socle_vectors(m))
            push(reg.classify(q))
        else:
            env = injective_envelope(m)
            e.cosyzygy = reg.classify(env.cokernel)
            push(e.cosyzygy)
            t = reg.classify(tau_inverse(m))
            e.tau_inv = t[0][0] if t else None
            push(t)
    for e in reg.entries:
        if e.omega is not None and any(j is None for j, _ in e.omega):
            reg.closed = False
    return reg


# --------------------------------------------------------------------------
# projective dimension, delooping level, Igusa-Todorov functions


def _succ(reg: IndecRegistry) -> dict[int, list[int]]:
    return {
        e.id: [j for j, _ in e.omega if j is not None]
        for e in reg.entries
        if not e.projective and e.omega is not None and all(j is not None for j, _ in e.omega)
    }


def registry_pd(reg: IndecRegistry, i: int):
    if reg.entries[i].projective:
        return 0
    return pd_from_graph(_succ(reg), [i], reg.closed)


@dataclass
class Value:
    value: object
    status: str = EXACT
    reason: str | None = None

    def to_json(self):
        out = {"value": self.value, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        return out


def strata(reg: IndecRegistry, cap: int) -> list[set[int]]:
    """T_0 = non-projective classes, T_{k+1} = non-projective summands of syzygies of T_k."""
    T = [set(reg.nonprojective())]
    while len(T) <= cap + 1:
        nxt = reg.omega_ids(T[-1])
        T.append(nxt)
        if nxt == T[-2]:
            break
    return T


def delooping_of_ids(reg: IndecRegistry, ids: Iterable[int], cap: int = 32, T: list[set[int]] | None = None) -> Value:
    T = T if T is not None else strata(reg, cap)
    cur = {i for i in ids if not reg.entries[i].projective}
    d = 0
    while True:
        layer = T[min(d + 1, len(T) - 1)]
        if cur <= layer:
            return Value(d, EXACT if reg.closed else LOWER)
        if d >= cap:
            return Value(d, LOWER, "delooping cap reached")
        cur = reg.omega_ids(cur)
        d += 1


def delooping_level(a: Algebra, reg: IndecRegistry, cap: int = 32) -> tuple[Value, dict[str, Value]]:
    T = strata(reg, cap)
    table = {}
    status = EXACT if reg.closed else LOWER
    best = 0
    simples, _, _ = standard_modules(a)
    for s in simples:
        i = reg.add(s)
        if i is None:
            table[s.name] = Value(None, UNAVAILABLE, "registry capped")
            status = LOWER
            continue
        v = delooping_of_ids(reg, [i], cap, T)
        table[s.name] = v
        if v.status != EXACT:
            status = LOWER
        best = max(best, v.value)
    return Value(best, status), table


class PhiEngine:
    """Ranks of Omega^n <X> inside the free group on non-projective classes."""

    def __init__(self, reg: IndecRegistry):
        self.reg = reg
        self.np = reg.nonprojective()
        self.pos = {c: k for k, c in enumerate(self.np)}
        n = len(self.np)
        M = [[0] * n for _ in range(n)]
        for c in self.np:
            for j, mult in reg.entries[c].omega or []:
                if j is not None and j in self.pos:
                    M[self.pos[j]][self.pos[c]] += mult
        self.M = M
        self.powers = [[[1 if i == j else 0 for j in range(n)] for i in range(n)]]
        for _ in range(n + 1):
            P = self.powers[-1]
            self.powers.append([[sum(M[i][k] * P[k][j] for k in range(n)) for j in range(n)] for i in range(n)])
        self.pd = {}
        succ = _succ(reg)
        for c in self.np:
            self.pd[c] = pd_from_graph(succ, [c], reg.closed)

    def ranks(self, ids: Iterable[int]) -> list[int]:
        cols = sorted({self.pos[i] for i in ids if i in self.pos})
        n = len(self.np)
        out = []
        for P in self.powers:
            gens = [[P[r][c] for r in range(n)] for c in cols]
            out.append(integer_subgroup_rank(IntMatrix.from_columns(gens, n)))
        return out

    def phi(self, ids: Iterable[int]) -> int:
        r = self.ranks(ids)
        last = -1
        for n in range(len(r) - 1):
            if r[n] > r[n + 1]:
                last = n
        return last + 1

    def _finite_pd_after(self, ids: Iterable[int], f: int) -> tuple[int, bool]:
        cur = {i for i in ids if i in self.pos}
        for _ in range(f):
            cur = self.reg.omega_ids(cur)
        best, unknown = 0, False
        for c in cur:
            p = self.pd[c]
            if p == AT_LEAST_CAP:
                unknown = True
            elif p != INFINITE:
                best = max(best, p)
        return best, unknown

    def psi(self, ids: Iterable[int]) -> Value:
        ids = list(ids)
        f = self.phi(ids)
        extra, unknown = self._finite_pd_after(ids, f)
        return Value(f + extra, LOWER if unknown else EXACT)


def phi_psi(reg: IndecRegistry, ids: Iterable[int]) -> tuple[int, Value]:
    eng = PhiEngine(reg)
    ids = list(ids)
    return eng.phi(ids), eng.psi(ids)


def phi_psi_dim(reg: IndecRegistry, enumerate_limit: int = 12) -> tuple[Value, Value]:
    """phi-dim is phi of the sum of all classes; psi-dim is bracketed and searched if needed."""
    eng = PhiEngine(reg)
    allids = eng.np
    status = EXACT if reg.closed else LOWER
    phidim = eng.phi(allids)
    single_phi = {c: eng.phi([c]) for c in allids}
    cands = [eng.psi(allids)] + [eng.psi([c]) for c in allids]
    lb = max((v.value for v in cands), default=0)
    unknown = any(v.status != EXACT for v in cands)
    ub = 0
    for c in allids:
        for f in range(single_phi[c], phidim + 1):
            extra, unk = eng._finite_pd_after([c], f)
            unknown |= unk
            ub = max(ub, f + extra)
    psidim = lb
    if ub > lb:
        if len(allids) <= enumerate_limit:
            for mask in range(1, 1 << len(allids)):
                sub = [c for k, c in enumerate(allids) if mask >> k & 1]
                v = eng.psi(sub)
                psidim = max(psidim, v.value)
                unknown |= v.status != EXACT
        else:
            return Value(phidim, status), Value(lb, LOWER, "psi search space too large")
    return Value(phidim, status), Value(psidim, LOWER if unknown else status)


def findim_lower_bound(reg: IndecRegistry) -> Value:
    best = 0
    for e in reg.entries:
        p = registry_pd(reg, e.id)
        if isinstance(p, int):
            best = max(best, p)
    return Value(best, EXACT if reg.closed else LOWER)


# --------------------------------------------------------------------------
# Nakayama permutation, dominant dimensions, Frobenius part


def nakayama_permutation(a: Algebra) -> dict[int, int]:
    """sigma(v) = w when I(v) is isomorphic to P(w)."""
    _, projs, injs = standard_modules(a)
    reps = a.class_representatives()
    out = {}
    for v, inj in zip(reps, injs):
        for w, p in zip(reps, projs):
            if is_isomorphic(inj, p)[0]:
                out[v] = w
                break
    return out


def nu_stably_projectives(a: Algebra) -> list[int]:
    """Vertices v whose projective P(v) has a nu-orbit staying projective."""
    sigma = nakayama_permutation(a)
    out = []
    for v in a.class_representatives():
        seen = set()
        cur = v
        ok = True
        while cur not in seen:
            seen.add(cur)
            if cur not in sigma:
                ok = False
                break
            cur = sigma[cur]
        if ok:
            out.append(v)
    return out


def projective_injective_vertices(a: Algebra) -> list[int]:
    sigma = nakayama_permutation(a)
    return sorted(set(sigma.values()))


def _idd(m: Module, allowed: set[int], cap: int) -> Value:
    """Number of leading terms of the minimal injective resolution inside add(I(v), v in allowed)."""
    cur = m
    for j in range(cap + 1):
        if cur.dim == 0:
            return Value(INFINITE)
        soc = socle_multiplicities(cur)
        if any(mult and v not in allowed for v, mult in enumerate(soc)):
            return Value(j)
        if j == cap:
            break
        cur = injective_envelope(cur).cokernel
    return Value(cap, LOWER, "resolution cap reached")


def _min_value(vals: Sequence[Value]) -> Value:
    finite = [v for v in vals if v.value != INFINITE]
    if not finite:
        return Value(INFINITE)
    best = min(finite, key=lambda v: v.value)
    lower = any(v.status != EXACT for v in finite if v.value <= best.value)
    return Value(best.value, LOWER if lower else EXACT)


def dominant_dimensions(a: Algebra, cap: int = 64) -> tuple[Value, Value, dict]:
    sigma = nakayama_permutation(a)
    stp = set(nu_stably_projectives(a))
    pi_allowed = set(sigma)  # I(v) is projective
    stp_allowed = {v for v, w in sigma.items() if w in stp}
    table = {}
    dds, nudds = [], []
    for v in a.class_representatives():
        p = projective(a, v)
        d1 = _idd(p, pi_allowed, cap)
        d2 = _idd(p, stp_allowed, cap)
        table[p.name] = {"dd": d1.value, "nu_dd": d2.value}
        dds.append(d1)
        nudds.append(d2)
    return _min_value(dds), _min_value(nudds), table


def frobenius_part(a: Algebra, seed: int = 0) -> Algebra | None:
    stp = nu_stably_projectives(a)
    if not stp:
        return None
    mods = [projective(a, v) for v in stp]
    x = direct_sum(mods)
    return endomorphism_algebra(x, seed, names=[a.vertices[v] for v in stp])


# --------------------------------------------------------------------------
# nodes and the stable profile


def find_nodes(a: Algebra, seed: int = 0) -> list[int]:
    simples, _, _ = standard_modules(a)
    reps = a.class_representatives()
    return [v for v, s in zip(reps, simples) if is_node(s, seed)]


def nonprojective_simple_count(a: Algebra) -> int:
    simples, _, _ = standard_modules(a)
    return sum(1 for s in simples if not is_projective(s))


def _ext(v):
    return "inf" if v == INFINITE else v


def stable_profile(a: Algebra, caps: Caps | None = None, seed: int = 0, name: str | None = None) -> dict:
    caps = caps or Caps()
    report: dict = {"schema": 1, "algebra": name or a.provenance, "field": a.field.tag, "dim": a.dim}
    simples, _, _ = standard_modules(a)
    report["simples"] = len(simples)
    report["nonprojective_simples"] = nonprojective_simple_count(a)
    nodes = find_nodes(a, seed)
    report["nodes"] = [f"S({a.vertices[v]})" for v in nodes]
    reg = enumerate_indecomposables(a, caps, seed)
    report["registry"] = {"classes": len(reg), "status": reg.flag}
    if reg.closed:
        report["indecomposables"] = len(reg)
    dl, _ = delooping_level(a, reg, caps.deloop)
    phid, psid = phi_psi_dim(reg)
    report["del"] = dl.to_json()
    report["phi_dim"] = phid.to_json()
    report["psi_dim"] = psid.to_json()
    report["findim_lower_bound"] = findim_lower_bound(reg).to_json()
    dd, ndd, _ = dominant_dimensions(a, caps.resolution)
    report["dd"] = Value(_ext(dd.value), dd.status).to_json()
    report["nu_dd"] = Value(_ext(ndd.value), ndd.status).to_json()
    stp = nu_stably_projectives(a)
    report["nu_stp"] = [f"P({a.vertices[v]})" for v in stp]
    fp = frobenius_part(a, seed)
    if fp is None:
        report["frobenius_part"] = {"dim": 0}
    else:
        freg = enumerate_indecomposables(fp, caps, seed)
        info = {
            "dim": fp.dim,
            "vertices": list(fp.vertices),
            "registry": {"classes": len(freg), "status": freg.flag},
            "nonprojective_classes": len(freg.nonprojective()),
        }
        try:
            _, q, counts = fp.gabriel_quiver()
            info["quiver"] = {"vertices": q.vertices, "arrows": [[s, t] for _, s, t in q.arrows]}
            info["loewy_length"] = fp.loewy_length()
        except ArtinLabError as exc:
            info["quiver"] = {"unavailable": str(exc)}
        report["frobenius_part"] = info
    report["caps"] = {"resolution": caps.resolution, "registry": caps.registry, "dim": caps.dim, "deloop": caps.deloop}
    report["seed"] = seed
    return report


def report_statuses(report: dict) -> list[str]:
    out = []
    for key in ("del", "phi_dim", "psi_dim", "findim_lower_bound", "dd", "nu_dd"):
        out.append(report[key]["status"])
    if report["registry"]["status"] != "closed":
        out.append(LOWER)
    return out


def compare_profiles(r1: dict, r2: dict) -> list[dict]:
    """Which invariants must agree under the stable-equivalence theorems, and whether they do."""
    node_free = not r1["nodes"] and not r2["nodes"]
    rows = []

    def row(name, v1, v2, expected, note):
        agree = v1 == v2
        verdict = "violation" if expected and not agree else "consistent"
        rows.append({"invariant": name, "left": v1, "right": v2, "expected_equal": expected,
                     "agree": agree, "verdict": verdict, "note": note})

    row("nonprojective_simples", r1["nonprojective_simples"], r2["nonprojective_simples"], True,
        "Auslander-Reiten conjecture prediction")
    for key in ("del", "phi_dim", "psi_dim"):
        note = "both node-free" if node_free else "node present, theorem not applicable"
        row(key, r1[key]["value"], r2[key]["value"], True if node_free else None, note)
    row("nu_dd", r1["nu_dd"]["value"], r2["nu_dd"]["value"], None, "computed")
    both_pos = all(isinstance(r["nu_dd"]["value"], int) and r["nu_dd"]["value"] >= 1 or r["nu_dd"]["value"] == "inf"
                   for r in (r1, r2))
    fp1 = r1["frobenius_part"].get("nonprojective_classes", 0)
    fp2 = r2["frobenius_part"].get("nonprojective_classes", 0)
    row("frobenius_part_nonprojective_classes", fp1, fp2, True if both_pos else None,
        "positive nu-dominant dimensions" if both_pos else "nu-dd is 0 on one side")
    return rows


def report_markdown(report: dict) -> str:
    lines = [f"# {report['algebra']} over {report['field']}", "", "| invariant | value | status |", "|---|---|---|"]
    for key in ("dim", "simples", "nonprojective_simples"):
        lines.append(f"| {key} | {report[key]} | exact |")
    lines.append(f"| nodes | {', '.join(report['nodes']) or 'none'} | exact |")
    lines.append(f"| registry | {report['registry']['classes']} | {report['registry']['status']} |")
    for key in ("del", "phi_dim", "psi_dim", "findim_lower_bound", "dd", "nu_dd"):
        lines.append(f"| {key} | {report[key]['value']} | {report[key]['status']} |")
    lines.append(f"| nu_stp | {', '.join(report['nu_stp']) or 'none'} | exact |")
    lines.append(f"| frobenius_part dim | {report['frobenius_part']['dim']} | exact |")
    return "\n".join(lines) + "\n"


def compare_markdown(rows: list[dict]) -> str:
    lines = ["| invariant | left | right | must agree | agree | verdict | note |", "|---|---|---|---|---|---|---|"]
    for r in rows:
        must = {True: "yes", None: "n/a"}.get(r["expected_equal"], "no")
        lines.append(f"| {r['invariant']} | {r['left']} | {r['right']} | {must} | {r['agree']} | {r['verdict']} | {r['note']} |")
    return "\n".join(lines) + "\n"


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
