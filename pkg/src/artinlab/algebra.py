"""Finite-dimensional algebras as structure constants.

Multiplication is composition: for paths the product ``x * y`` means "first
y, then x".  With this choice left modules are quiver representations and
``A e_i`` is spanned by the paths that start at ``i``.  Every basis element
lies in a single Peirce block ``e_t A e_s``; a path from ``s`` to ``t`` has
Peirce label ``(t, s)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import NotBasic, NotNilpotent, RadicalUnavailable
from .linalg import (
    QQ,
    Echelon,
    Field,
    inverse,
    kernel,
    matmul,
    mat_vec,
    minpoly_squarefree,
    rank,
    solve,
    transpose,
    vec_comb,
)


@dataclass
class Quiver:
    vertices: list[str]
    arrows: list[tuple[str, str, str]]  # (name, source, target)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vs = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {name} has an unknown endpoint")


@dataclass
class Relation:
    """Linear combination of parallel paths; paths list arrows in travel order."""

    terms: list[tuple[object, tuple[str, ...]]]


@dataclass
class Ideal:
    algebra: "Algebra"
    basis: list[list]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def echelon(self) -> Echelon:
        return Echelon(self.algebra.dim, self.algebra.field, self.basis)


class Algebra:
    """Structure-constant algebra with a Peirce-adapted basis.

    ``mult[i][j]`` is a sparse dict ``{k: c}`` for ``b_i * b_j``.  ``idem[v]``
    is the basis index of the primitive idempotent of vertex ``v`` and
    ``peirce[k] = (t, s)`` records ``e_t b_k e_s = b_k``.
    """

    def __init__(
        self,
        field: Field,
        labels: list[str],
        mult: list[list[dict]],
        vertices: list[str],
        idem: list[int],
        peirce: list[tuple[int, int]],
        provenance: str = "structure-constants",
        gens: list[list] | None = None,
        rad: list[list] | None = None,
    ):
        self.field = field
        self.labels = labels
        self.mult = mult
        self.vertices = vertices
        self.idem = idem
        self.peirce = peirce
        self.provenance = provenance
        self._gens = gens
        self._rad = rad
        self._left: dict[int, list[list]] = {}
        self._op: Algebra | None = None
        self._rad_powers: list[list[list]] | None = None
        self._classes: list[int] | None = None
        self._cache: dict = {}

    # basic data -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def nvert(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"<Algebra {self.provenance} dim={self.dim} vertices={self.vertices}>"

    def unit_vec(self, k: int) -> list:
        v = [0] * self.dim
        v[k] = 1
        return v

    @property
    def one(self) -> list:
        v = [0] * self.dim
        for k in self.idem:
            v[k] = 1
        return v

    def block(self, t: int, s: int) -> list[int]:
        return [k for k, ts in enumerate(self.peirce) if ts == (t, s)]

    def mul(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.dim
        ynz = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.mult[i]
            for j, b in ynz:
                for k, c in row[j].items():
                    out[k] += a * b * c
        if self.field.p:
            out = [v % self.field.p for v in out]
        return out

    def left_matrix(self, i: int) -> list[list]:
        """Matrix of ``y -> b_i * y`` in the basis."""
        m = self._left.get(i)
        if m is None:
            n = self.dim
            m = [[0] * n for _ in range(n)]
            for j in range(n):
                for k, c in self.mult[i][j].items():
                    m[k][j] = c
            self._left[i] = m
        return m

    def right_matrix(self, i: int) -> list[list]:
        n = self.dim
        m = [[0] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.mult[j][i].items():
                m[k][j] = c
        return m

    def element_left_matrix(self, x: Sequence) -> list[list]:
        n = self.dim
        out = [[0] * n for _ in range(n)]
        for i, a in enumerate(x):
            if a:
                L = self.left_matrix(i)
                for r in range(n):
                    Lr, outr = L[r], out[r]
                    for c in range(n):
                        if Lr[c]:
                            outr[c] += a * Lr[c]
        if self.field.p:
            out = [[v % self.field.p for v in r] for r in out]
        return out

    def peirce_component(self, x: Sequence, t: int, s: int) -> list:
        return [c if self.peirce[k] == (t, s) else 0 for k, c in enumerate(x)]

    def homogeneous_parts(self, x: Sequence) -> list[list]:
        parts: dict[tuple[int, int], list] = {}
        for k, c in enumerate(x):
            if c:
                parts.setdefault(self.peirce[k], [0] * self.dim)[k] = c
        return list(parts.values())

    # checks ---------------------------------------------------------------

    def check_associative(self) -> bool:
        n = self.dim
        units = [self.unit_vec(i) for i in range(n)]
        prods = [[self.mul(units[i], units[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.mul(prods[i][j], units[k]) != self.mul(units[i], prods[j][k]):
                        return False
        return True

    def check_idempotents(self) -> bool:
        one = self.one
        n = self.dim
        for v, a in enumerate(self.idem):
            for w, b in enumerate(self.idem):
                expect = self.unit_vec(a) if v == w else [0] * n
                if self.mul(self.unit_vec(a), self.unit_vec(b)) != expect:
                    return False
        for i in range(n):
            u = self.unit_vec(i)
            if self.mul(one, u) != u or self.mul(u, one) != u:
                return False
        return True

    # opposite -------------------------------------------------------------

    def opposite(self) -> "Algebra":
        if self._op is None:
            n = self.dim
            mult = [[self.mult[j][i] for j in range(n)] for i in range(n)]
            op = Algebra(
                self.field,
                list(self.labels),
                mult,
                list(self.vertices),
                list(self.idem),
                [(s, t) for t, s in self.peirce],
                provenance=f"opposite({self.provenance})",
                gens=[list(g) for g in self._gens] if self._gens is not None else None,
                rad=[list(r) for r in self._rad] if self._rad is not None else None,
            )
            op._op = self
            self._op = op
        return self._op

    # radical ----------------------------------------------------------------

    def radical(self) -> list[list]:
        if self._rad is None:
            self._rad = _compute_radical(self)
        return self._rad

    def radical_powers(self) -> list[list[list]]:
        """[rad^1, rad^2, ..., 0] as lists of homogeneous basis vectors."""
        if self._rad_powers is None:
            F, n = self.field, self.dim
            rad = self.radical()
            powers = [rad]
            cur = rad
            while cur:
                ech = Echelon(n, F)
                nxt = []
                for x in cur:
                    for r in rad:
                        y = self.mul(x, r)
                        if ech.add(y):
                            nxt.append(y)
                powers.append(nxt)
                if len(powers) > n + 2:
                    raise RadicalUnavailable("radical is not nilpotent")
                cur = nxt
            self._rad_powers = powers
        return self._rad_powers

    def loewy_length(self) -> int:
        return len(self.radical_powers())

    def vertex_classes(self) -> list[int]:
        """Class index per vertex; vertices share a class iff A e_i and A e_j are isomorphic."""
        if self._classes is None:
            rad = Echelon(self.dim, self.field, self.radical())
            parent = list(range(self.nvert))

            def find(a):
                while parent[a] != a:
                    a = parent[a]
                return a

            for t in range(self.nvert):
                for s in range(self.nvert):
                    if t != s and any(not rad.contains(self.unit_vec(k)) for k in self.block(t, s)):
                        parent[find(t)] = find(s)
            roots: dict[int, int] = {}
            self._classes = [roots.setdefault(find(v), len(roots)) for v in range(self.nvert)]
        return self._classes

    def class_representatives(self) -> list[int]:
        reps: dict[int, int] = {}
        for v, c in enumerate(self.vertex_classes()):
            reps.setdefault(c, v)
        return [reps[c] for c in sorted(reps)]

    def is_basic(self) -> bool:
        return len(set(self.vertex_classes())) == self.nvert

    def generators(self) -> list[list]:
        """Homogeneous elements that generate the algebra together with the idempotents."""
        if self._gens is None:
            F, n = self.field, self.dim
            rad = self.radical()
            rad2 = self.radical_powers()[1] if len(self.radical_powers()) > 1 else []
            classes = self.vertex_classes()
            gens = []
            for t in range(self.nvert):
                for s in range(self.nvert):
                    blk = self.block(t, s)
                    if not blk:
                        continue
                    radb = [self.peirce_component(x, t, s) for x in rad]
                    radb = [x for x in radb if any(x)]
                    r2b = [self.peirce_component(x, t, s) for x in rad2]
                    ech = Echelon(n, F, [x for x in r2b if any(x)])
                    for x in radb:
                        if ech.add(x):
                            gens.append(x)
                    if t != s and classes[t] == classes[s]:
                        for k in blk:
                            if ech.add(self.unit_vec(k)):
                                gens.append(self.unit_vec(k))
            self._gens = gens
        return self._gens

    def gabriel_quiver(self) -> tuple[Ideal, Quiver, list[list[int]]]:
        """Radical, Gabriel quiver and arrow counts ``counts[i][j]`` = arrows i -> j."""
        if not self.is_basic():
            raise NotBasic("Gabriel quiver needs a basic algebra")
        rad = self.radical()
        powers = self.radical_powers()
        rad2 = powers[1] if len(powers) > 1 else []
        counts = [[0] * self.nvert for _ in range(self.nvert)]
        arrows = []
        for t in range(self.nvert):
            for s in range(self.nvert):
                a = sum(1 for x in rad if any(self.peirce_component(x, t, s)))
                b = sum(1 for x in rad2 if any(self.peirce_component(x, t, s)))
                # rad and rad^2 bases are homogeneous, so counting is exact
                counts[s][t] = a - b
                for m in range(a - b):
                    arrows.append((f"a{s}{t}_{m}" if a - b > 1 else f"a{s}{t}", self.vertices[s], self.vertices[t]))
        return Ideal(self, [list(x) for x in rad]), Quiver(list(self.vertices), arrows), counts


# --------------------------------------------------------------------------
# radical computation


def _homogenize(alg: Algebra, vecs) -> list[list]:
    ech = Echelon(alg.dim, alg.field)
    out = []
    for v in vecs:
        for part in alg.homogeneous_parts(v):
            if ech.add(part):
                out.append(part)
    # reduced rows keep homogeneity because each added part is homogeneous
    return out


def _is_nilpotent_span(alg: Algebra, vecs: list[list]) -> bool:
    cur = vecs
    for _ in range(alg.dim + 1):
        if not cur:
            return True
        ech = Echelon(alg.dim, alg.field)
        nxt = []
        for x in cur:
            for r in vecs:
                y = alg.mul(x, r)
                if ech.add(y):
                    nxt.append(y)
        if len(nxt) >= len(cur) and cur is not vecs:
            return False
        cur = nxt
    return not cur


def _trace_form_kernel(alg: Algebra) -> list[list]:
    n, F = alg.dim, alg.field
    tr = [sum(alg.mult[k][m].get(m, 0) for m in range(n)) for k in range(n)]
    T = [[sum(c * tr[k] for k, c in alg.mult[i][j].items()) for j in range(n)] for i in range(n)]
    if F.p:
        T = [[x % F.p for x in r] for r in T]
    return kernel(T, n, F)


def _peirce_radical(alg: Algebra) -> list[list]:
    """Radical from local split corners: works in every characteristic."""
    F, n = alg.field, alg.dim
    chi = [0] * n  # value of the corner character on each diagonal-block basis element
    for v in range(alg.nvert):
        corner = alg.block(v, v)
        pos = {k: i for i, k in enumerate(corner)}
        for k in corner:
            L = alg.left_matrix(k)
            sub = [[L[a][b] for b in corner] for a in corner]
            facs = minpoly_squarefree(sub, F)
            if len(facs) != 1 or len(facs[0][0]) != 2:
                raise RadicalUnavailable(f"corner at vertex {alg.vertices[v]} is not split local")
            chi[k] = F.neg(facs[0][0][0])
        del pos
    out = []
    for t in range(alg.nvert):
        for s in range(alg.nvert):
            blk = alg.block(t, s)
            if not blk:
                continue
            if t == s:
                e = alg.idem[t]
                for k in blk:
                    if k != e:
                        v = alg.unit_vec(k)
                        v[e] = F.neg(chi[k])
                        v = [x % F.p for x in v] if F.p else v
                        out.append(v)
                continue
            back = alg.block(s, t)
            rows = []
            for y in back:
                rows.append([sum(chi[m] * c for m, c in alg.mult[x][y].items()) for x in blk])
            if F.p:
                rows = [[x % F.p for x in r] for r in rows]
            for kv in kernel(rows, len(blk), F):
                v = [0] * n
                for x, c in zip(blk, kv):
                    v[x] = c
                out.append(v)
    return out


def _compute_radical(alg: Algebra) -> list[list]:
    F = alg.field
    if F.p == 0:
        return _homogenize(alg, _trace_form_kernel(alg))
    cand = _homogenize(alg, _trace_form_kernel(alg))
    if _is_nilpotent_span(alg, cand):
        return cand
    cand = _homogenize(alg, _peirce_radical(alg))
    if not _is_nilpotent_span(alg, cand):
        raise RadicalUnavailable(f"no nilpotent radical found in characteristic {F.p}")
    return cand


# --------------------------------------------------------------------------
# constructors


def _label_path(names: Sequence[str]) -> str:
    if all(len(x) == 1 for x in names):
        return "".join(names)
    return "*".join(names)


def algebra_from_quiver(
    q: Quiver,
    rels: Sequence[Relation],
    field: Field = QQ,
    n_max: int = 64,
    path_cap: int = 50000,
) -> Algebra:
    F = field
    vidx = {v: i for i, v in enumerate(q.vertices)}
    aidx = {a[0]: i for i, a in enumerate(q.arrows)}
    asrc = [vidx[a[1]] for a in q.arrows]
    atgt = [vidx[a[2]] for a in q.arrows]

    parsed = []
    for r in rels:
        terms = []
        ends = set()
        for coeff, path in r.terms:
            if len(path) < 2:
                raise ValueError(f"relation term {'.'.join(path)} has length < 2")
            for a in path:
                if a not in aidx:
                    raise ValueError(f"unknown arrow {a!r} in relation")
            ids = tuple(aidx[a] for a in path)
            for x, y in zip(ids, ids[1:]):
                if atgt[x] != asrc[y]:
                    raise ValueError(f"path {'.'.join(path)} is not composable")
            ends.add((asrc[ids[0]], atgt[ids[-1]]))
            c = F(coeff)
            if c:
                terms.append((c, ids))
        if len(ends) > 1:
            raise ValueError("relation paths are not parallel")
        if terms:
            parsed.append((terms, next(iter(ends))))

    # paths[l] = list of (source, target, arrow tuple)
    paths: list[list[tuple[int, int, tuple]]] = [[(v, v, ()) for v in range(len(q.vertices))]]
    out_arrows = [[a for a in range(len(q.arrows)) if asrc[a] == v] for v in range(len(q.vertices))]

    def extend():
        nxt = []
        for s, t, p in paths[-1]:
            if not p:
                continue
            for a in out_arrows[t]:
                nxt.append((s, atgt[a], p + (a,)))
        if len(paths) == 1:
            nxt = [(asrc[a], atgt[a], (a,)) for a in range(len(q.arrows))]
        paths.append(nxt)

    extend()
    for L in range(2, n_max + 1):
        extend()
        allp = [pp for level in reversed(paths) for pp in level]
        if len(allp) > path_cap:
            raise NotNilpotent(f"more than {path_cap} paths of length <= {L}")
        col = {(p if p else ("v", s)): i for i, (s, t, p) in enumerate(allp)}
        ncol = len(allp)
        ech = Echelon(ncol, F)
        for terms, (rs, rt) in parsed:
            minlen = min(len(p) for _, p in terms)
            for lu in range(0, L - minlen + 1):
                us = [pp for pp in paths[lu] if pp[1] == rs]
                for u in us:
                    for lv in range(0, L - minlen - lu + 1):
                        for v in paths[lv]:
                            if v[0] != rt:
                                continue
                            vec = [0] * ncol
                            hit = False
                            for c, p in terms:
                                full = u[2] + p + v[2]
                                if len(full) <= L:
                                    vec[col[full]] += c
                                    hit = True
                            if hit:
                                if F.p:
                                    vec = [x % F.p for x in vec]
                                ech.add(vec)
        if all(ech.contains(_unit(ncol, col[p])) for _, _, p in paths[L]):
            break
    else:
        raise NotNilpotent(f"relations do not kill all paths of length <= {n_max}")

    pivots = set(ech.pivots)
    basis = [(i, allp[i]) for i in range(ncol) if i not in pivots]
    basis.sort(key=lambda item: (len(item[1][2]), item[0] if item[1][2] else item[1][0]))
    # trivial paths first (by vertex), then by length
    basis.sort(key=lambda item: (len(item[1][2]), item[1][0] if not item[1][2] else 0))
    bpos = {item[0]: k for k, item in enumerate(basis)}
    n = len(basis)
    names = [a[0] for a in q.arrows]
    labels = []
    peirce = []
    for _, (s, t, p) in basis:
        labels.append(f"e{q.vertices[s]}" if not p else _label_path([names[a] for a in p]))
        peirce.append((t, s))
    idem = [next(k for k, (_, (s, t, p)) in enumerate(basis) if not p and s == v) for v in range(len(q.vertices))]

    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i, (_, (si, ti, pi)) in enumerate(basis):
        for j, (_, (sj, tj, pj)) in enumerate(basis):
            # b_i * b_j = first b_j then b_i
            if tj != si:
                continue
            full = pj + pi
            if not full:
                mult[i][j] = {i: 1}
                continue
            if len(full) >= L:
                continue
            red = ech.reduce(_unit(ncol, col[full]))
            d = {bpos[c]: x for c, x in enumerate(red) if x}
            mult[i][j] = d

    gens = [[1 if k == bpos[col[(a,)]] else 0 for k in range(n)] for a in range(len(q.arrows))]
    rad = [_unit(n, k) for k in range(n) if k not in set(idem)]
    alg = Algebra(F, labels, mult, list(q.vertices), idem, peirce, provenance="quiver", gens=gens, rad=rad)
    alg._cache["quiver"] = (q, list(rels))
    return alg


def _unit(n: int, k: int) -> list:
    v = [0] * n
    v[k] = 1
    return v


def _raw_mul(F: Field, mult: list[list[dict]], x, y) -> list:
    n = len(mult)
    out = [0] * n
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    for k, c in mult[i][j].items():
                        out[k] += a * b * c
    if F.p:
        out = [v % F.p for v in out]
    return out


def _change_basis(F: Field, mult, new_basis: list[list]) -> list[list[dict]]:
    n = len(new_basis)
    Binv = inverse(new_basis, F)
    BinvT = transpose(Binv)
    out = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = _raw_mul(F, mult, new_basis[i], new_basis[j])
            if any(prod):
                coords = mat_vec(BinvT, prod, F)
                out[i][j] = {k: c for k, c in enumerate(coords) if c}
    return out


def _vec_label(labels: list[str], v: Sequence) -> str:
    nz = [(k, c) for k, c in enumerate(v) if c]
    if len(nz) == 1 and nz[0][1] == 1:
        return labels[nz[0][0]]
    return "(" + " + ".join(f"{c}*{labels[k]}" if c != 1 else labels[k] for k, c in nz) + ")"


def peirce_rebase(
    F: Field,
    labels: list[str],
    mult: list[list[dict]],
    idem_vecs: list[list],
    vertices: list[str] | None = None,
    provenance: str = "structure-constants",
) -> Algebra:
    """Rewrite an algebra in a basis adapted to a complete set of orthogonal idempotents."""
    n = len(labels)
    nv = len(idem_vecs)
    units = [_unit(n, k) for k in range(n)]
    ech = Echelon(n, F)
    new: list[tuple[list, tuple[int, int]]] = []
    for t in range(nv):
        for s in range(nv):
            cand = [idem_vecs[t]] if t == s else []
            for u in units:
                cand.append(_raw_mul(F, mult, _raw_mul(F, mult, idem_vecs[t], u), idem_vecs[s]))
            for v in cand:
                if ech.add(v):
                    new.append((v, (t, s)))
    if len(new) != n:
        raise ValueError("idempotents do not give a Peirce decomposition")
    if all(sum(1 for x in v if x) == 1 and max(v) == 1 for v, _ in new):
        new.sort(key=lambda item: item[0].index(1))
    basis = [v for v, _ in new]
    peirce = [ts for _, ts in new]
    nm = _change_basis(F, mult, basis)
    idem = [next(k for k, v in enumerate(basis) if v == idem_vecs[t]) for t in range(nv)]
    names = vertices or [str(i + 1) for i in range(nv)]
    return Algebra(F, [_vec_label(labels, v) for v in basis], nm, names, idem, peirce, provenance=provenance)


def algebra_from_structure_constants(
    F: Field,
    labels: list[str],
    mult: list[list[dict]],
    unit: list | None = None,
    idempotents: list[list] | None = None,
    vertices: list[str] | None = None,
    provenance: str = "structure-constants",
    seed: int = 0,
) -> Algebra:
    if idempotents is None:
        if unit is None:
            unit = _find_unit(F, mult)
        idempotents = primitive_idempotents(F, labels, mult, unit, seed=seed)
    return peirce_rebase(F, labels, mult, idempotents, vertices, provenance)


def _find_unit(F: Field, mult) -> list:
    n = len(mult)
    rows, rhs = [], []
    for j in range(n):
        for k in range(n):
            # sum_i u_i (b_i b_j)_k = delta_jk and sum_i u_i (b_j b_i)_k = delta_jk
            rows.append([mult[i][j].get(k, 0) for i in range(n)])
            rhs.append(1 if j == k else 0)
            rows.append([mult[j][i].get(k, 0) for i in range(n)])
            rhs.append(1 if j == k else 0)
    u = solve(rows, n, rhs, F)
    if u is None:
        raise ValueError("algebra has no unit")
    return u


def primitive_idempotents(F: Field, labels, mult, unit: list, seed: int = 0) -> list[list]:
    """Complete set of primitive orthogonal idempotents via decomposition of the regular module."""
    from .modules import Module, decompose

    n = len(labels)
    if n == 0:
        return []
    # temporary one-vertex algebra with the unit as a basis element
    ech = Echelon(n, F, [unit])
    basis = [list(unit)]
    for k in range(n):
        if ech.add(_unit(n, k)):
            basis.append(_unit(n, k))
    tm = _change_basis(F, mult, basis)
    tmp = Algebra(F, ["1"] + [f"x{k}" for k in range(1, n)], tm, ["*"], [0], [(0, 0)] * n,
                  provenance="unsplit", gens=[_unit(n, k) for k in range(1, n)])
    reg = Module.regular(tmp)
    dec = decompose(reg, seed=seed)
    one = _unit(n, 0)
    idems = []
    for proj in dec.projections():
        e_tmp = mat_vec(proj, one, F)
        idems.append(vec_comb(e_tmp, basis, F, n))
    return idems


def algebra_from_matrices(F: Field, mats: list[list[list]], labels: list[str] | None = None,
                          provenance: str = "matrices", seed: int = 0,
                          idempotents: list[list] | None = None) -> Algebra:
    """Subalgebra of a matrix algebra spanned by linearly independent ``mats``."""
    n = len(mats)
    size = len(mats[0]) if mats else 0
    flat = [[x for r in m for x in r] for m in mats]
    M = transpose(flat)  # columns = basis matrices
    ech_rows = [list(r) for r in M]
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = matmul(mats[i], mats[j], F, size)
            pf = [x for r in prod for x in r]
            if not any(pf):
                continue
            c = solve(ech_rows, n, pf, F)
            if c is None:
                raise ValueError("matrices do not span a subalgebra")
            mult[i][j] = {k: x for k, x in enumerate(c) if x}
    ident = [x for r in [[1 if a == b else 0 for b in range(size)] for a in range(size)] for x in r]
    unit = solve(ech_rows, n, ident, F)
    if unit is None:
        raise ValueError("identity is not in the span")
    labels = labels or [f"m{k}" for k in range(n)]
    return algebra_from_structure_constants(F, labels, mult, unit=unit, idempotents=idempotents,
                                            provenance=provenance, seed=seed)


def centralizer_algebra(c: Sequence[Sequence], n: int, field: Field = QQ, seed: int = 0) -> Algebra:
    """S_n(c, k): all n x n matrices commuting with ``c``."""
    F = field
    c = [[F(x) for x in r] for r in c]
    if len(c) != n or any(len(r) != n for r in c):
        raise ValueError("matrix must be n x n")
    # unknown a (n*n entries): (c a - a c)_{ij} = 0
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + j] += c[i][k]
                row[i * n + k] -= c[k][j]
            rows.append([x % F.p for x in row] if F.p else row)
    sols = kernel(rows, n * n, F)
    mats = [[s[i * n:(i + 1) * n] for i in range(n)] for s in sols]
    labels = [f"z{k}" for k in range(len(mats))]
    return algebra_from_matrices(F, mats, labels, provenance=f"centralizer(n={n})", seed=seed)


def lower_triangular_matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    mats, labels, idem = [], [], []
    for i in range(n):
        for j in range(i + 1):
            m = [[0] * n for _ in range(n)]
            m[i][j] = 1
            mats.append(m)
            labels.append(f"E{i + 1}{j + 1}")
    for v in range(n):
        idem.append(_unit(len(mats), labels.index(f"E{v + 1}{v + 1}")))
    return algebra_from_matrices(field, mats, labels, provenance=f"lower-triangular({n})", idempotents=idem)


def semisimple_algebra(m: int, field: Field = QQ) -> Algebra:
    """k x ... x k with m factors."""
    mult = [[({i: 1} if i == j else {}) for j in range(m)] for i in range(m)]
    return Algebra(field, [f"e{i + 1}" for i in range(m)], mult, [str(i + 1) for i in range(m)],
                   list(range(m)), [(i, i) for i in range(m)], provenance=f"semisimple({m})",
                   gens=[], rad=[])


# --------------------------------------------------------------------------
# ideals and quotients


def trace_ideal(a: Algebra, s) -> Ideal:
    """Sum of the images of all homomorphisms from ``s`` into the regular module."""
    from .modules import Module, hom_space

    reg = Module.regular(a)
    ech = Echelon(a.dim, a.field)
    basis = []
    if s.dim:
        for f in hom_space(s, reg):
            for col in transpose(f, s.dim):
                if ech.add(col):
                    basis.append(col)
    return Ideal(a, _homogenize(a, basis) if basis else [])


def left_annihilator(a: Algebra, i: Ideal) -> Ideal:
    """{x : x * y = 0 for all y in i}."""
    n, F = a.dim, a.field
    rows = []
    for y in i.basis:
        cols = [a.mul(a.unit_vec(k), y) for k in range(n)]
        for out in range(n):
            rows.append([cols[k][out] for k in range(n)])
    if not rows:
        return Ideal(a, [a.unit_vec(k) for k in range(n)])
    return Ideal(a, _homogenize(a, kernel(rows, n, F)))


def is_two_sided(a: Algebra, i: Ideal) -> bool:
    ech = i.echelon()
    for y in i.basis:
        for k in range(a.dim):
            u = a.unit_vec(k)
            if not ech.contains(a.mul(u, y)) or not ech.contains(a.mul(y, u)):
                return False
    return True


@dataclass
class Quotient:
    algebra: Algebra
    keep: list[int]  # old basis indices forming the complement
    project: list[list]  # matrix: old coordinates -> quotient coordinates


def quotient_algebra(a: Algebra, i: Ideal, with_map: bool = False):
    """A/I on a complement basis of old basis elements; idempotents in I are dropped."""
    n, F = a.dim, a.field
    hom = _homogenize(a, i.basis)
    ech = Echelon(n, F, hom)
    order = list(a.idem) + [k for k in range(n) if k not in set(a.idem)]
    keep = []
    for k in order:
        if ech.add(a.unit_vec(k)):
            keep.append(k)
    keep.sort()
    m = len(keep)
    # columns: ideal basis then kept units; invert to project
    cols = hom + [a.unit_vec(k) for k in keep]
    Minv = inverse(transpose(cols), F)
    proj = Minv[len(hom):]
    mult = [[{} for _ in range(m)] for _ in range(m)]
    for x, kx in enumerate(keep):
        for y, ky in enumerate(keep):
            prod = a.mul(a.unit_vec(kx), a.unit_vec(ky))
            if any(prod):
                q = mat_vec(proj, prod, F)
                mult[x][y] = {z: c for z, c in enumerate(q) if c}
    kpos = {k: x for x, k in enumerate(keep)}
    verts, idem = [], []
    for v, e in enumerate(a.idem):
        if e in kpos:
            verts.append(v)
            idem.append(kpos[e])
    vmap = {v: w for w, v in enumerate(verts)}
    peirce = []
    for k in keep:
        t, s = a.peirce[k]
        peirce.append((vmap[t], vmap[s]))
    q = Algebra(F, [a.labels[k] for k in keep], mult, [a.vertices[v] for v in verts], idem, peirce,
                provenance=f"quotient({a.provenance})")
    if with_map:
        return q, Quotient(q, keep, proj)
    return q


def radical_and_gabriel_quiver(a: Algebra):
    return a.gabriel_quiver()


def opposite_algebra(a: Algebra) -> Algebra:
    return a.opposite()


def is_semisimple(a: Algebra) -> bool:
    return not a.radical()


# --------------------------------------------------------------------------
# isomorphism search between basic algebras


def _word_basis(a: Algebra, gens: list[list]):
    """Products of generators (applied on the left) spanning the algebra.

    Returns ``(values, words)`` where each word is ``(vertex, [gen indices])``.
    """
    F, n = a.field, a.dim
    ech = Echelon(n, F)
    values, words = [], []
    frontier = []
    for v, e in enumerate(a.idem):
        u = a.unit_vec(e)
        if ech.add(u):
            values.append(u)
            words.append((v, ()))
            frontier.append((u, (v, ())))
    while frontier and len(values) < n:
        nxt = []
        for val, (v, w) in frontier:
            for gi, g in enumerate(gens):
                y = a.mul(g, val)
                if ech.add(y):
                    values.append(y)
                    words.append((v, w + (gi,)))
                    nxt.append((y, (v, w + (gi,))))
        frontier = nxt
    return values, words


def _check_hom(a: Algebra, b: Algebra, phi: list[list]) -> bool:
    """``phi`` is a matrix (rows = b coords) of a linear map a -> b."""
    F = a.field
    n = a.dim
    imgs = [[phi[r][k] for r in range(b.dim)] for k in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = mat_vec(phi, a.mul(a.unit_vec(i), a.unit_vec(j)), F)
            if lhs != b.mul(imgs[i], imgs[j]):
                return False
    return rank(phi, n, F) == n


def find_algebra_isomorphism(a: Algebra, b: Algebra, seed: int = 0, trials: int = 64) -> list[list] | None:
    """Search for a structure-constant isomorphism a -> b between basic algebras.

    Returns the matrix (b-coordinates of images of a's basis as columns) or None.
    """
    if a.field != b.field or a.dim != b.dim or a.nvert != b.nvert:
        return None
    if not (a.is_basic() and b.is_basic()):
        return None
    F = a.field
    _, _, ca = a.gabriel_quiver()
    _, _, cb = b.gabriel_quiver()
    nv = a.nvert
    bdims_a = [[len(a.block(t, s)) for s in range(nv)] for t in range(nv)]
    bdims_b = [[len(b.block(t, s)) for s in range(nv)] for t in range(nv)]
    gens_a = a.generators()
    rng = random.Random(seed)
    rad_b = b.radical()
    for perm in itertools.permutations(range(nv)):
        if any(ca[s][t] != cb[perm[s]][perm[t]] or bdims_a[t][s] != bdims_b[perm[t]][perm[s]]
               for s in range(nv) for t in range(nv)):
            continue
        # candidate images of generators: homogeneous radical elements of b
        gens_b = b.generators()
        targets = []
        seen: dict[tuple[int, int], int] = {}
        for g in gens_a:
            t, s = a.peirce[next(k for k, x in enumerate(g) if x)]
            tb, sb = perm[t], perm[s]
            pool = [x for x in (b.peirce_component(r, tb, sb) for r in rad_b) if any(x)]
            natural = [x for x in (b.peirce_component(r, tb, sb) for r in gens_b) if any(x)]
            rank_in_block = seen.get((t, s), 0)
            seen[(t, s)] = rank_in_block + 1
            targets.append((pool, natural, rank_in_block))
        values, words = _word_basis(a, gens_a)
        if len(values) != a.dim:
            return None
        Vinv = inverse(transpose(values), F)
        for attempt in range(trials + 1):
            imgs = []
            ok = True
            for pool, natural, idx in targets:
                if not pool:
                    ok = False
                    break
                if attempt == 0:
                    # r-th generator of a in a block goes to the r-th generator of b there
                    imgs.append(natural[idx % len(natural)] if natural else pool[0])
                else:
                    coeffs = [F.random(rng, 5) for _ in pool]
                    imgs.append(vec_comb(coeffs, pool, F, b.dim))
            if not ok:
                break
            bvals = []
            for v, w in words:
                y = b.unit_vec(b.idem[perm[v]])
                for gi in w:
                    y = b.mul(imgs[gi], y)
                bvals.append(y)
            # phi(values_k) = bvals_k  ->  phi = Bvals * values^{-1}
            phi = matmul(transpose(bvals), Vinv, F, a.dim)
            if _check_hom(a, b, phi):
                return phi
    return None
