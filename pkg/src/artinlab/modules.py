"""Finite-dimensional left modules given by action matrices."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .algebra import Algebra
from .errors import Inconclusive, NonSplitEndomorphism
from .linalg import (
    Coordinates,
    Echelon,
    Field,
    identity,
    inverse,
    is_invertible,
    is_zero_matrix,
    kernel,
    lin_comb,
    mat_vec,
    matmul,
    minpoly_squarefree,
    p_eval_matrix,
    p_mul,
    rank,
    transpose,
    zeros,
)

TRIALS = 32


class Module:
    """Left module: ``acts[k]`` is the matrix of basis element ``k``; ``verts[c]``
    is the vertex of coordinate ``c`` (idempotents act as coordinate projections)."""

    def __init__(self, algebra: Algebra, verts: list[int], acts: list[list[list]], name: str | None = None):
        self.algebra = algebra
        self.verts = list(verts)
        self.acts = acts
        self.name = name
        self.layout: list[tuple[int, int]] | None = None
        self._gen_acts: list[tuple[list[list], int, int]] | None = None
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.verts)

    @property
    def field(self) -> Field:
        return self.algebra.field

    def __repr__(self) -> str:
        return f"<Module {self.name or ''} dimvec={self.vertex_dims()}>"

    @classmethod
    def regular(cls, a: Algebra) -> "Module":
        m = cls(a, [t for t, _ in a.peirce], [a.left_matrix(k) for k in range(a.dim)], name="A")
        m.layout = [(0, k) for k in range(a.dim)]
        return m

    @classmethod
    def zero(cls, a: Algebra) -> "Module":
        return cls(a, [], [[] for _ in range(a.dim)], name="0")

    def vertex_dims(self) -> list[int]:
        out = [0] * self.algebra.nvert
        for v in self.verts:
            out[v] += 1
        return out

    def coords_at(self, v: int) -> list[int]:
        return [c for c, w in enumerate(self.verts) if w == v]

    def act(self, x: Sequence) -> list[list]:
        nz = [(k, c) for k, c in enumerate(x) if c]
        return lin_comb([c for _, c in nz], [self.acts[k] for k, _ in nz], self.field, self.dim, self.dim)

    def gen_acts(self) -> list[tuple[list[list], int, int]]:
        """Matrices of the algebra generators with their Peirce labels (t, s)."""
        if self._gen_acts is None:
            a = self.algebra
            out = []
            for g in a.generators():
                k0 = next(k for k, c in enumerate(g) if c)
                t, s = a.peirce[k0]
                out.append((self.act(g), t, s))
            self._gen_acts = out
        return self._gen_acts

    def check(self) -> bool:
        """Module axioms on all basis pairs plus the unit."""
        a, F, n = self.algebra, self.field, self.dim
        one = self.act(a.one)
        if one != identity(n):
            return False
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = matmul(self.acts[i], self.acts[j], F, n)
                rhs = self.act(a.mul(a.unit_vec(i), a.unit_vec(j)))
                if lhs != rhs:
                    return False
        return True


# --------------------------------------------------------------------------
# constructions


def projective_sum(a: Algebra, vs: Sequence[int]) -> Module:
    """Direct sum of ``A e_v`` for v in ``vs``; ``layout[c] = (summand, basis index)``."""
    cols_by_v = {}
    for v in set(vs):
        cols_by_v[v] = [k for k in range(a.dim) if a.peirce[k][1] == v]
    layout = []
    offs = []
    for j, v in enumerate(vs):
        offs.append(len(layout))
        layout += [(j, k) for k in cols_by_v[v]]
    n = len(layout)
    verts = [a.peirce[k][0] for _, k in layout]
    acts = []
    for i in range(a.dim):
        L = a.left_matrix(i)
        M = zeros(n, n)
        for j, v in enumerate(vs):
            cols = cols_by_v[v]
            o = offs[j]
            for ci, kc in enumerate(cols):
                for ri, kr in enumerate(cols):
                    x = L[kr][kc]
                    if x:
                        M[o + ri][o + ci] = x
        acts.append(M)
    m = Module(a, verts, acts, name="P(" + ",".join(a.vertices[v] for v in vs) + ")")
    m.layout = layout
    m._cache["proj_verts"] = list(vs)
    return m


def projective(a: Algebra, v: int) -> Module:
    m = projective_sum(a, [v])
    m.name = f"P({a.vertices[v]})"
    return m


def injective(a: Algebra, v: int) -> Module:
    m = dual(projective(a.opposite(), v))
    m.name = f"I({a.vertices[v]})"
    return m


def simple(a: Algebra, v: int) -> Module:
    m = radical_socle_top(projective(a, v)).top
    m.name = f"S({a.vertices[v]})"
    return m


def standard_modules(a: Algebra):
    reps = a.class_representatives()
    return ([simple(a, v) for v in reps], [projective(a, v) for v in reps], [injective(a, v) for v in reps])


def direct_sum(mods: Sequence[Module], a: Algebra | None = None) -> Module:
    if a is None:
        a = mods[0].algebra
    n = sum(m.dim for m in mods)
    verts = [v for m in mods for v in m.verts]
    acts = []
    for k in range(a.dim):
        M = zeros(n, n)
        o = 0
        for m in mods:
            src = m.acts[k]
            for r in range(m.dim):
                row = src[r]
                for c in range(m.dim):
                    if row[c]:
                        M[o + r][o + c] = row[c]
            o += m.dim
        acts.append(M)
    return Module(a, verts, acts, name="+".join(m.name or "?" for m in mods))


def _homogeneous_echelon(x: Module, vecs) -> Echelon:
    ech = Echelon(x.dim, x.field)
    for v in vecs:
        parts: dict[int, list] = {}
        for c, val in enumerate(v):
            if val:
                parts.setdefault(x.verts[c], [0] * x.dim)[c] = val
        for p in parts.values():
            ech.add(p)
    return ech


def span_closure(x: Module, vecs) -> Echelon:
    """Smallest submodule containing ``vecs`` (breadth-first under generators)."""
    ech = _homogeneous_echelon(x, vecs)
    frontier = [list(r) for r in ech.rows]
    gens = x.gen_acts()
    F = x.field
    while frontier:
        nxt = []
        for v in frontier:
            for g, _, _ in gens:
                w = mat_vec(g, v, F)
                if any(w) and ech.add(w):
                    nxt.append(w)
        frontier = nxt
    return ech


def submodule(x: Module, vecs, close: bool = False) -> tuple[Module, list[list]]:
    """Submodule spanned by ``vecs`` and its inclusion matrix (x.dim by sub.dim)."""
    ech = span_closure(x, vecs) if close else _homogeneous_echelon(x, vecs)
    basis = [list(r) for r in ech.rows]
    piv = ech.pivots
    d = len(basis)
    F = x.field
    verts = [x.verts[c] for c in piv]
    acts = []
    for k in range(x.algebra.dim):
        A = x.acts[k]
        M = zeros(d, d)
        if not is_zero_matrix(A):
            for j, b in enumerate(basis):
                w = mat_vec(A, b, F)
                for i, c in enumerate(piv):
                    if w[c]:
                        M[i][j] = w[c]
        acts.append(M)
    sub = Module(x.algebra, verts, acts)
    return sub, transpose(basis, d) if basis else [[] for _ in range(x.dim)]


def quotient(x: Module, vecs) -> tuple[Module, list[list]]:
    """x / span(vecs) on the non-pivot coordinates; returns (module, projection)."""
    ech = _homogeneous_echelon(x, vecs)
    comp = ech.complement()
    d = len(comp)
    proj = zeros(d, x.dim)
    for m in range(x.dim):
        u = [0] * x.dim
        u[m] = 1
        r = ech.reduce(u)
        for i, c in enumerate(comp):
            proj[i][m] = r[c]
    acts = []
    for k in range(x.algebra.dim):
        A = x.acts[k]
        M = zeros(d, d)
        if not is_zero_matrix(A):
            for j, c in enumerate(comp):
                col = [A[r][c] for r in range(x.dim)]
                if any(col):
                    r = ech.reduce(col)
                    for i, c2 in enumerate(comp):
                        if r[c2]:
                            M[i][j] = r[c2]
        acts.append(M)
    q = Module(x.algebra, [x.verts[c] for c in comp], acts)
    return q, proj


def dual(x: Module) -> Module:
    """D x = Hom_k(x, k) as a module over the opposite algebra."""
    op = x.algebra.opposite()
    m = Module(op, x.verts, [transpose(A, x.dim) for A in x.acts], name=f"D({x.name})" if x.name else None)
    return m


def image_module(f: list[list], x: Module, y: Module) -> tuple[Module, list[list]]:
    return submodule(y, transpose(f, x.dim))


def kernel_module(f: list[list], x: Module, y: Module) -> tuple[Module, list[list]]:
    return submodule(x, kernel(f, x.dim, x.field) if y.dim else [_unit(x.dim, i) for i in range(x.dim)])


def cokernel_module(f: list[list], x: Module, y: Module) -> tuple[Module, list[list]]:
    return quotient(y, transpose(f, x.dim))


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


# --------------------------------------------------------------------------
# homomorphisms


def hom_space(x: Module, y: Module) -> list[list[list]]:
    """Basis of Hom_A(x, y) as y.dim by x.dim matrices."""
    if x.algebra is not y.algebra:
        raise ValueError("modules over different algebras")
    F = x.field
    nv = x.algebra.nvert
    xv = [x.coords_at(v) for v in range(nv)]
    yv = [y.coords_at(v) for v in range(nv)]
    unknowns = {}
    for v in range(nv):
        for r in yv[v]:
            for c in xv[v]:
                unknowns[(r, c)] = len(unknowns)
    nu = len(unknowns)
    if nu == 0:
        return []
    rows = []
    for (gx, t, s), (gy, _, _) in zip(x.gen_acts(), y.gen_acts()):
        # (f gx - gy f)[r][c] for r at vertex t of y, c at vertex s of x
        for r in yv[t]:
            for c in xv[s]:
                row = [0] * nu
                nz = False
                for m in xv[t]:
                    a = gx[m][c]
                    if a:
                        row[unknowns[(r, m)]] += a
                        nz = True
                gyr = gy[r]
                for m in yv[s]:
                    b = gyr[m]
                    if b:
                        row[unknowns[(m, c)]] -= b
                        nz = True
                if nz:
                    rows.append([v % F.p for v in row] if F.p else row)
    out = []
    keys = list(unknowns)
    for kv in kernel(rows, nu, F):
        f = zeros(y.dim, x.dim)
        for (r, c), val in zip(keys, kv):
            if val:
                f[r][c] = val
        out.append(f)
    return out


def is_hom(f: list[list], x: Module, y: Module) -> bool:
    F = x.field
    for k in range(x.algebra.dim):
        if matmul(f, x.acts[k], F, x.dim) != matmul(y.acts[k], f, F, x.dim):
            return False
    return True


def compose(g, f, F: Field, ncols: int):
    return matmul(g, f, F, ncols)


# --------------------------------------------------------------------------
# radical, socle, top


class RST(NamedTuple):
    rad: Module
    rad_incl: list[list]
    soc: Module
    soc_incl: list[list]
    top: Module
    top_proj: list[list]


def radical_vectors(x: Module) -> Echelon:
    a = x.algebra
    F = x.field
    ech = Echelon(x.dim, F)
    for r in a.radical():
        R = x.act(r)
        if is_zero_matrix(R):
            continue
        for col in transpose(R, x.dim):
            if any(col):
                ech.add(col)
    return ech


def socle_vectors(x: Module) -> list[list]:
    a = x.algebra
    mats = [x.act(r) for r in a.radical()]
    out = []
    for v in range(a.nvert):
        cs = x.coords_at(v)
        if not cs:
            continue
        rows = [[M[i][c] for c in cs] for M in mats for i in range(x.dim)]
        rows = [r for r in rows if any(r)]
        for kv in kernel(rows, len(cs), x.field):
            w = [0] * x.dim
            for c, val in zip(cs, kv):
                w[c] = val
            out.append(w)
    return out


def radical_socle_top(x: Module) -> RST:
    rad_e = radical_vectors(x)
    rad, rinc = submodule(x, rad_e.rows)
    soc, sinc = submodule(x, socle_vectors(x))
    top, tproj = quotient(x, rad_e.rows)
    return RST(rad, rinc, soc, sinc, top, tproj)


def top_multiplicities(x: Module) -> list[int]:
    """Multiplicity of each simple (indexed by vertex) in the top; non-representatives get 0."""
    a = x.algebra
    rad_e = radical_vectors(x)
    dims = [0] * a.nvert
    for c in rad_e.complement():
        dims[x.verts[c]] += 1
    out = [0] * a.nvert
    for v in a.class_representatives():
        out[v] = dims[v]
    return out


def socle_multiplicities(x: Module) -> list[int]:
    a = x.algebra
    dims = [0] * a.nvert
    for w in socle_vectors(x):
        dims[x.verts[next(c for c, val in enumerate(w) if val)]] += 1
    out = [0] * a.nvert
    for v in a.class_representatives():
        out[v] = dims[v]
    return out


@dataclass
class Cover:
    source: Module  # projective
    map: list[list]  # x.dim by source.dim
    gens: list[tuple[int, list]]  # (vertex, element of x) per summand
    kernel: Module
    kernel_incl: list[list]


def projective_cover(x: Module) -> Cover:
    a = x.algebra
    F = x.field
    rad_e = radical_vectors(x)
    ech = Echelon(x.dim, F, rad_e.rows)
    gens = []
    for v in a.class_representatives():
        for c in x.coords_at(v):
            u = _unit(x.dim, c)
            if ech.add(u):
                gens.append((v, u))
    P = projective_sum(a, [v for v, _ in gens])
    cols = []
    for j, k in P.layout:
        cols.append(mat_vec(x.acts[k], gens[j][1], F))
    pi = transpose(cols, P.dim) if cols else zeros(x.dim, 0)
    K, kinc = submodule(P, kernel(pi, P.dim, F) if x.dim else [_unit(P.dim, i) for i in range(P.dim)])
    return Cover(P, pi, gens, K, kinc)


@dataclass
class Envelope:
    target: Module
    map: list[list]  # target.dim by x.dim
    cokernel: Module
    coker_proj: list[list]


def injective_envelope(x: Module) -> Envelope:
    c = projective_cover(dual(x))
    I = dual(c.source)
    iota = transpose(c.map, c.source.dim) if x.dim else zeros(c.source.dim, 0)
    Q, qp = quotient(I, transpose(iota, x.dim)) if x.dim else quotient(I, [])
    return Envelope(I, iota, Q, qp)


def is_projective(x: Module) -> bool:
    if x.dim == 0:
        return True
    a = x.algebra
    mult = top_multiplicities(x)
    pdims = _proj_dims(a)
    return sum(m * pdims[v] for v, m in enumerate(mult)) == x.dim


def is_injective(x: Module) -> bool:
    return is_projective(dual(x))


def _proj_dims(a: Algebra) -> list[int]:
    d = a._cache.get("proj_dims")
    if d is None:
        d = [sum(1 for k in range(a.dim) if a.peirce[k][1] == v) for v in range(a.nvert)]
        a._cache["proj_dims"] = d
    return d


# --------------------------------------------------------------------------
# decomposition


def _eigen_split(x: Module, phi: list[list]):
    """Fitting split along the coprime factors of the minimal polynomial of ``phi``.

    Returns (parts, eigenvalue); parts is None if there is a single factor, and
    eigenvalue is the root when that factor is linear.
    """
    F = x.field
    facs = minpoly_squarefree(phi, F)
    if len(facs) == 1:
        f, _ = facs[0]
        return None, (F.neg(f[0]) if len(f) == 2 else None)
    parts = []
    for f, m in facs:
        g = [1]
        for _ in range(m):
            g = p_mul(g, f, F)
        parts.append(kernel(p_eval_matrix(g, phi, F), x.dim, F))
    return parts, None


def local_radical(x: Module, seed: int = 0):
    """Either ``("split", parts)`` or ``("local", End basis, rad End basis)``."""
    cached = x._cache.get("local")
    if cached is not None:
        return cached
    F, n = x.field, x.dim
    E = hom_space(x, x)
    if len(E) <= 1:
        res = ("local", E, [])
        x._cache["local"] = res
        return res
    lams = []
    all_linear = True
    for phi in E:
        parts, lam = _eigen_split(x, phi)
        if parts is not None:
            return ("split", parts)
        if lam is None:
            all_linear = False
        lams.append(lam)
    if all_linear:
        N = []
        for phi, lam in zip(E, lams):
            M = [list(r) for r in phi]
            for i in range(n):
                M[i][i] = (M[i][i] - lam) % F.p if F.p else M[i][i] - lam
            N.append(M)
        flatN = [[v for r in M for v in r] for M in N]
        if rank(flatN, n * n, F) == len(E) - 1 and _nilpotent_span(N, F, n):
            ech = Echelon(n * n, F)
            basis = [M for M, fl in zip(N, flatN) if ech.add(fl)]
            res = ("local", E, basis)
            x._cache["local"] = res
            return res
    rng = random.Random(seed)
    for _ in range(TRIALS):
        coeffs = [F.random(rng, 7) for _ in E]
        phi = lin_comb(coeffs, E, F, n, n)
        parts, _ = _eigen_split(x, phi)
        if parts is not None:
            return ("split", parts)
    raise NonSplitEndomorphism(
        f"module of dimension vector {x.vertex_dims()} has no Fitting split but End/rad is not k; "
        "possibly indecomposable over an extension field"
    )


def _nilpotent_span(mats: list[list[list]], F: Field, n: int) -> bool:
    if not mats:
        return True
    cur = mats
    for _ in range(n + 1):
        ech = Echelon(n * n, F)
        nxt = []
        for A in cur:
            for B in mats:
                C = matmul(A, B, F, n)
                if ech.add([v for r in C for v in r]):
                    nxt.append(C)
        if not nxt:
            return True
        cur = nxt
    return False


@dataclass
class Decomposition:
    module: Module
    summands: list[Module]
    inclusions: list[list[list]]
    seed: int = 0
    _classes: list[tuple[Module, int]] | None = None
    _class_of: list[int] | None = None

    def certificate(self) -> list[list]:
        """The map from the direct sum of summands to the module (columns = inclusions)."""
        n = self.module.dim
        cols = []
        for inc, s in zip(self.inclusions, self.summands):
            cols += transpose(inc, s.dim)
        return transpose(cols, n) if cols else zeros(n, 0)

    def projections(self) -> list[list[list]]:
        """Idempotent endomorphisms of the module projecting onto each summand."""
        F = self.module.field
        n = self.module.dim
        inv = inverse(self.certificate(), F)
        out = []
        o = 0
        for inc, s in zip(self.inclusions, self.summands):
            rows = inv[o:o + s.dim]
            out.append(matmul(inc, rows, F, n))
            o += s.dim
        return out

    def classes(self) -> list[tuple[Module, int]]:
        if self._classes is None:
            reps: list[Module] = []
            counts: list[int] = []
            class_of = []
            for s in self.summands:
                for i, r in enumerate(reps):
                    if is_isomorphic(s, r)[0]:
                        counts[i] += 1
                        class_of.append(i)
                        break
                else:
                    reps.append(s)
                    counts.append(1)
                    class_of.append(len(reps) - 1)
            self._classes = list(zip(reps, counts))
            self._class_of = class_of
        return self._classes


def decompose(x: Module, seed: int = 0) -> Decomposition:
    """Split into indecomposables with certified split-local endomorphism rings."""
    cached = x._cache.get(("dec", seed))
    if cached is not None:
        return cached
    F = x.field
    work = [(x, identity(x.dim))]
    done: list[tuple[Module, list[list]]] = []
    while work:
        m, inc = work.pop(0)
        if m.dim == 0:
            continue
        res = local_radical(m, seed)
        if res[0] == "local":
            m._cache["indec"] = True
            done.append((m, inc))
            continue
        for part in res[1]:
            sub, sinc = submodule(m, part)
            work.append((sub, matmul(inc, sinc, F, sub.dim)))
    if len(done) == 1 and done[0][0] is x:
        x._cache["indec"] = True
    dec = Decomposition(x, [m for m, _ in done], [i for _, i in done], seed)
    x._cache[("dec", seed)] = dec
    return dec


def is_indecomposable(x: Module, seed: int = 0) -> bool:
    if x.dim == 0:
        return False
    return len(decompose(x, seed).summands) == 1


# --------------------------------------------------------------------------
# isomorphism


def is_isomorphic(x: Module, y: Module, seed: int = 0) -> tuple[bool, list[list] | None]:
    """Decide x = y with an explicit invertible intertwiner as witness."""
    if x.algebra is not y.algebra:
        raise ValueError("modules over different algebras")
    if x.vertex_dims() != y.vertex_dims():
        return False, None
    if x.dim == 0:
        return True, []
    F, n = x.field, x.dim
    H = hom_space(x, y)
    for f in H:
        if is_invertible(f, F):
            return True, f
    if x._cache.get("indec") or y._cache.get("indec"):
        # End local: an isomorphism exists iff some basis element is invertible
        return False, None
    if not H:
        return False, None
    if len(hom_space(y, x)) != len(H) or len(hom_space(x, x)) != len(H):
        return False, None
    rng = random.Random(seed)
    for _ in range(TRIALS):
        f = lin_comb([F.random(rng, 7) for _ in H], H, F, n, n)
        if is_invertible(f, F):
            return True, f
    dx, dy = decompose(x, seed), decompose(y, seed)
    if len(dx.summands) != len(dy.summands):
        return False, None
    used = [False] * len(dy.summands)
    pairs = []
    for i, s in enumerate(dx.summands):
        for j, t in enumerate(dy.summands):
            if not used[j]:
                ok, h = is_isomorphic(s, t, seed)
                if ok:
                    used[j] = True
                    pairs.append((i, j, h))
                    break
        else:
            return False, None
    # assemble a witness from the matched summands
    projs = dx.projections()
    cert_inv = inverse(dx.certificate(), F)
    W = zeros(n, n)
    o_list = []
    o = 0
    for s in dx.summands:
        o_list.append(o)
        o += s.dim
    for i, j, h in pairs:
        rows = cert_inv[o_list[i]:o_list[i] + dx.summands[i].dim]
        part = matmul(dy.inclusions[j], matmul(h, rows, F, n), F, n)
        for r in range(n):
            for c in range(n):
                W[r][c] += part[r][c]
    if F.p:
        W = [[v % F.p for v in r] for r in W]
    del projs
    if not is_invertible(W, F):
        raise Inconclusive("matched summands but assembled map is singular")
    return True, W


def isomorphic(x: Module, y: Module) -> bool:
    return is_isomorphic(x, y)[0]


# --------------------------------------------------------------------------
# endomorphism algebras


def endomorphism_algebra(x: Module, seed: int = 0, names: list[str] | None = None) -> Algebra:
    """End_A(x) with composition as product; idempotents project onto summands."""
    F = x.field
    dec = decompose(x, seed)
    mods = dec.summands
    m = len(mods)
    blocks: dict[tuple[int, int], list[list[list]]] = {}
    coords: dict[tuple[int, int], Coordinates] = {}
    for k in range(m):
        for l in range(m):
            H = hom_space(mods[k], mods[l])
            if k == l:
                ech = Echelon(mods[k].dim ** 2, F)
                idm = identity(mods[k].dim)
                ech.add([v for r in idm for v in r])
                H2 = [idm]
                for h in H:
                    if ech.add([v for r in h for v in r]):
                        H2.append(h)
                H = H2
            blocks[(l, k)] = H
            if H:
                coords[(l, k)] = Coordinates([[v for r in h for v in r] for h in H],
                                             mods[l].dim * mods[k].dim, F)
    basis = []  # (target l, source k, matrix)
    for l in range(m):
        for k in range(m):
            for idx, h in enumerate(blocks[(l, k)]):
                basis.append((l, k, idx, h))
    index = {(l, k, idx): b for b, (l, k, idx, _) in enumerate(basis)}
    n = len(basis)
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i, (li, ki, _, hi) in enumerate(basis):
        for j, (lj, kj, _, hj) in enumerate(basis):
            if ki != lj:
                continue
            comp = matmul(hi, hj, F, mods[kj].dim)
            flat = [v for r in comp for v in r]
            if not any(flat):
                continue
            c = coords[(li, kj)](flat)
            mult[i][j] = {index[(li, kj, q)]: val for q, val in enumerate(c) if val}
    idem = [index[(k, k, 0)] for k in range(m)]
    peirce = [(l, k) for l, k, _, _ in basis]
    labels = [f"e{k + 1}" if (l == k and idx == 0) else f"h{l + 1}{k + 1}_{idx}" for l, k, idx, _ in basis]
    verts = names or [mods[k].name or f"X{k + 1}" for k in range(m)]
    if len(set(verts)) != len(verts):
        verts = [f"X{k + 1}" for k in range(m)]
    alg = Algebra(F, labels, mult, verts, idem, peirce, provenance="endomorphism")
    alg._cache["summands"] = mods
    return alg


def trace_ideal(a: Algebra, s: Module):
    from .algebra import trace_ideal as _t

    return _t(a, s)
