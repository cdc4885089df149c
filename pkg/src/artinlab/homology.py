"""Syzygies, transposes, AR translates, the Nakayama functor, Ext^1 and AR sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArtinLabError, NonSplitEndomorphism, SocleAmbiguous
from .linalg import Coordinates, Echelon, kernel, mat_vec, matmul, solve, transpose, zeros
from .modules import (
    Cover,
    Module,
    decompose,
    direct_sum,
    dual,
    hom_space,
    injective_envelope,
    is_injective,
    is_isomorphic,
    is_projective,
    local_radical,
    projective_cover,
    projective_sum,
    quotient,
    submodule,
    _homogeneous_echelon,
)

INFINITE = "infinite"
AT_LEAST_CAP = "at-least-cap"


def syzygy(x: Module) -> Module:
    return projective_cover(x).kernel


def cosyzygy(x: Module) -> Module:
    return injective_envelope(x).cokernel


def syzygy_power(x: Module, n: int) -> Module:
    for _ in range(n):
        x = syzygy(x)
    return x


# --------------------------------------------------------------------------
# presentations and the transpose


@dataclass
class Presentation:
    cover0: Cover
    cover1: Cover
    # elements[k][l]: component in summand k of P0 of the l-th generator of the syzygy
    elements: list[list[list]]


def presentation(x: Module) -> Presentation:
    a = x.algebra
    F = x.field
    c0 = projective_cover(x)
    c1 = projective_cover(c0.kernel)
    P0 = c0.source
    nk = len(c0.gens)
    elems = [[[0] * a.dim for _ in c1.gens] for _ in range(nk)]
    for l, (_, y) in enumerate(c1.gens):
        yp = mat_vec(c0.kernel_incl, y, F)
        for coord, val in enumerate(yp):
            if val:
                j, k = P0.layout[coord]
                elems[j][l][k] = val
    return Presentation(c0, c1, elems)


@dataclass
class DualPresentation:
    q0: Module  # Hom(P0, A) over the opposite algebra
    q1: Module  # Hom(P1, A)
    map: list[list]  # q1.dim by q0.dim


def dual_presentation(x: Module) -> DualPresentation:
    a = x.algebra
    op = a.opposite()
    F = x.field
    pres = presentation(x)
    v0 = [v for v, _ in pres.cover0.gens]
    w1 = [w for w, _ in pres.cover1.gens]
    q0 = projective_sum(op, v0)
    q1 = projective_sum(op, w1)
    pos1 = {lk: i for i, lk in enumerate(q1.layout)}
    D = zeros(q1.dim, q0.dim)
    for col, (k, m) in enumerate(q0.layout):
        u = a.unit_vec(m)
        for l in range(len(w1)):
            el = pres.elements[k][l]
            if not any(el):
                continue
            prod = a.mul(el, u)
            for b, val in enumerate(prod):
                if val:
                    D[pos1[(l, b)]][col] += val
    if F.p:
        D = [[v % F.p for v in r] for r in D]
    return DualPresentation(q0, q1, D)


def transpose_module(x: Module) -> Module:
    """Tr x: cokernel of Hom(P0, A) -> Hom(P1, A); a module over the opposite algebra."""
    dp = dual_presentation(x)
    m, _ = quotient(dp.q1, transpose(dp.map, dp.q0.dim) if dp.q0.dim else [])
    m.name = f"Tr({x.name})" if x.name else None
    return m


def hom_to_algebra(x: Module) -> Module:
    """Hom_A(x, A) as a left module over the opposite algebra."""
    dp = dual_presentation(x)
    if dp.q1.dim == 0:
        return dp.q0
    m, _ = submodule(dp.q0, kernel(dp.map, dp.q0.dim, x.field))
    return m


def nakayama(x: Module) -> Module:
    m = dual(hom_to_algebra(x))
    m.name = f"nu({x.name})" if x.name else None
    return m


def tau(x: Module) -> Module:
    m = dual(transpose_module(x))
    m.name = f"tau({x.name})" if x.name else None
    return m


def tau_inverse(x: Module) -> Module:
    m = transpose_module(dual(x))
    m.name = f"tauinv({x.name})" if x.name else None
    return m


# --------------------------------------------------------------------------
# resolutions


@dataclass
class Resolution:
    direction: str
    terms: list[Module]
    maps: list[list[list]]
    syzygies: list[Module]
    terminated: bool
    cap: int

    @property
    def length(self) -> int:
        return len(self.terms) - 1 if self.terminated else len(self.terms)


def minimal_resolution(x: Module, direction: str = "projective", cap: int = 64) -> Resolution:
    terms, maps, syz = [], [], []
    cur = x
    for _ in range(cap + 1):
        if cur.dim == 0:
            return Resolution(direction, terms, maps, syz, True, cap)
        syz.append(cur)
        if direction == "projective":
            c = projective_cover(cur)
            terms.append(c.source)
            maps.append(c.map)
            cur = c.kernel
        elif direction == "injective":
            e = injective_envelope(cur)
            terms.append(e.target)
            maps.append(e.map)
            cur = e.cokernel
        else:
            raise ValueError(f"unknown direction {direction!r}")
    return Resolution(direction, terms, maps, syz, cur.dim == 0, cap)


class ClassStore:
    """Iso classes of indecomposables met while chasing syzygies."""

    def __init__(self, seed: int = 0):
        self.mods: list[Module] = []
        self.by_dims: dict[tuple, list[int]] = {}
        self.seed = seed

    def find(self, m: Module) -> int | None:
        for i in self.by_dims.get(tuple(m.vertex_dims()), []):
            if is_isomorphic(m, self.mods[i], self.seed)[0]:
                return i
        return None

    def add(self, m: Module) -> tuple[int, bool]:
        i = self.find(m)
        if i is not None:
            return i, False
        self.mods.append(m)
        self.by_dims.setdefault(tuple(m.vertex_dims()), []).append(len(self.mods) - 1)
        return len(self.mods) - 1, True


def nonprojective_summands(m: Module, seed: int = 0) -> list[Module]:
    if m.dim == 0:
        return []
    return [s for s in decompose(m, seed).summands if not is_projective(s)]


def pd_from_graph(succ: dict[int, list[int]], roots: Sequence[int], complete: bool):
    """pd over a syzygy graph of non-projective classes; ``succ[c]`` lists the classes
    of the non-projective summands of the syzygy of ``c``."""
    memo: dict[int, object] = {}
    state: dict[int, int] = {}

    def visit(c):
        if c in memo:
            return memo[c]
        if state.get(c) == 1:
            return INFINITE
        if c not in succ:
            return AT_LEAST_CAP
        state[c] = 1
        best: object = 1
        for d in succ[c]:
            r = visit(d)
            if r == INFINITE:
                best = INFINITE
                break
            if r == AT_LEAST_CAP:
                best = AT_LEAST_CAP
            elif best != AT_LEAST_CAP:
                best = max(best, 1 + r)
        state[c] = 2
        memo[c] = best
        return best

    res: object = 0
    for r in roots:
        v = visit(r)
        if v == INFINITE:
            return INFINITE
        if v == AT_LEAST_CAP:
            res = AT_LEAST_CAP
        elif res != AT_LEAST_CAP:
            res = max(res, v)
    return res


def projective_dimension(x: Module, cap: int = 64, seed: int = 0):
    """Exact pd, ``"infinite"`` when a syzygy class recurs, else ``"at-least-cap"``."""
    store = ClassStore(seed)
    roots = [store.add(s)[0] for s in nonprojective_summands(x, seed)]
    succ: dict[int, list[int]] = {}
    frontier = list(dict.fromkeys(roots))
    depth = 0
    while frontier and depth < cap:
        nxt = []
        for c in frontier:
            if c in succ:
                continue
            ids = []
            for s in nonprojective_summands(syzygy(store.mods[c]), seed):
                i, new = store.add(s)
                ids.append(i)
                if i not in succ:
                    nxt.append(i)
            succ[c] = ids
        frontier = list(dict.fromkeys(nxt))
        depth += 1
    return pd_from_graph(succ, roots, not frontier)


# --------------------------------------------------------------------------
# Ext^1 and almost split sequences


@dataclass
class ExtSpace:
    m: Module
    n: Module
    dim: int
    representatives: list[list[list]]  # maps Omega(m) -> n
    cover: Cover


def ext1(m: Module, n: Module) -> ExtSpace:
    F = m.field
    c = projective_cover(m)
    om, iota = c.kernel, c.kernel_incl
    H = hom_space(om, n)
    if not H:
        return ExtSpace(m, n, 0, [], c)
    size = n.dim * om.dim
    coords = Coordinates([[v for r in h for v in r] for h in H], size, F)
    ech = Echelon(len(H), F)
    for h in hom_space(c.source, n):
        ech.add(coords([v for r in matmul(h, iota, F, om.dim) for v in r]))
    reps = [H[i] for i in range(len(H)) if ech.add([1 if j == i else 0 for j in range(len(H))])]
    return ExtSpace(m, n, len(reps), reps, c)


@dataclass
class ShortExact:
    left: Module
    middle: Module
    right: Module
    inj: list[list]
    surj: list[list]
    socle_dim: int = 1

    def check(self) -> bool:
        from .linalg import is_zero_matrix, rank

        F = self.left.field
        comp = matmul(self.surj, self.inj, F, self.left.dim)
        return (
            is_zero_matrix(comp)
            and rank(self.inj, self.left.dim, F) == self.left.dim
            and rank(self.surj, self.middle.dim, F) == self.right.dim
            and self.left.dim + self.right.dim == self.middle.dim
        )


def _lift_endomorphism(c: Cover, z: Module, alpha: list[list]) -> list[list]:
    """alpha0: P0 -> P0 with pi alpha0 = alpha pi."""
    F = z.field
    P = c.source
    imgs = []
    for v, x in c.gens:
        target = mat_vec(alpha, x, F)
        cs = P.coords_at(v)
        sub = [[c.map[r][col] for col in cs] for r in range(z.dim)]
        sol = solve(sub, len(cs), target, F)
        if sol is None:  # pragma: no cover - the cover is surjective
            raise ArtinLabError("cannot lift endomorphism")
        p = [0] * P.dim
        for col, val in zip(cs, sol):
            p[col] = val
        imgs.append(p)
    cols = [mat_vec(P.acts[k], imgs[j], F) for j, k in P.layout]
    return transpose(cols, P.dim)


def ar_sequence(z: Module, seed: int = 0, strict: bool = False) -> ShortExact:
    """The almost split sequence 0 -> tau z -> E -> z -> 0 for indecomposable non-projective z."""
    F = z.field
    c = projective_cover(z)
    om, iota = c.kernel, c.kernel_incl
    tz = tau(z)
    H = hom_space(om, tz)
    if not H:
        raise ArtinLabError("Ext^1(z, tau z) vanishes; z must be indecomposable non-projective")
    size = tz.dim * om.dim
    coords = Coordinates([[v for r in h for v in r] for h in H], size, F)
    nh = len(H)
    B = Echelon(nh, F)
    for h in hom_space(c.source, tz):
        B.add(coords([v for r in matmul(h, iota, F, om.dim) for v in r]))
    comp = B.complement()

    def mod_b(vec):
        r = B.reduce(vec)
        return [r[i] for i in comp]

    lt = local_radical(tz, seed)
    lz = local_radical(z, seed)
    if lt[0] != "local" or lz[0] != "local":
        raise NonSplitEndomorphism("AR sequence needs indecomposable end terms")
    rows = []
    for g in lt[2]:
        cols = [mod_b(coords([v for r in matmul(g, h, F, om.dim) for v in r])) for h in H]
        rows += transpose(cols, len(comp))
    omc = Coordinates(transpose(iota, om.dim), c.source.dim, F)
    for alpha in lz[2]:
        a0 = _lift_endomorphism(c, z, alpha)
        a1cols = [omc(mat_vec(a0, col, F)) for col in transpose(iota, om.dim)]
        a1 = transpose(a1cols, om.dim)
        cols = [mod_b(coords([v for r in matmul(h, a1, F, om.dim) for v in r])) for h in H]
        rows += transpose(cols, len(comp))
    rows = [r for r in rows if any(r)]
    S = kernel(rows, nh, F) if rows else [[1 if j == i else 0 for j in range(nh)] for i in range(nh)]
    soc = Echelon(nh, F, B.rows)
    picks = []
    for v in S:
        if soc.add(v):
            picks.append(v)
    if not picks:
        raise ArtinLabError("no non-split class found")
    if len(picks) > 1 and strict:
        raise SocleAmbiguous(f"socle of Ext^1 has dimension {len(picks)}")
    xi_c = picks[0]
    xi = zeros(tz.dim, om.dim)
    for cval, h in zip(xi_c, H):
        if cval:
            for r in range(tz.dim):
                for q in range(om.dim):
                    xi[r][q] += cval * h[r][q]
    if F.p:
        xi = [[v % F.p for v in r] for r in xi]
    D = direct_sum([tz, c.source])
    U = []
    for w in range(om.dim):
        top = [xi[r][w] for r in range(tz.dim)]
        bot = [F.neg(iota[r][w]) for r in range(c.source.dim)]
        U.append(top + bot)
    E, proj = quotient(D, U)
    inj = [row[:tz.dim] for row in proj]
    basis_coords = _homogeneous_echelon(D, U).complement()
    surj = zeros(z.dim, E.dim)
    for j, col in enumerate(basis_coords):
        if col >= tz.dim:
            for r in range(z.dim):
                surj[r][j] = c.map[r][col - tz.dim]
    E.name = "E"
    return ShortExact(tz, E, z, inj, surj, socle_dim=len(picks))


def is_node(s: Module, seed: int = 0) -> bool:
    """Simple s is a node: non-projective, non-injective, AR sequence from s has projective middle."""
    if is_projective(s) or is_injective(s):
        return False
    z = tau_inverse(s)
    seq = ar_sequence(z, seed)
    return is_projective(seq.middle)
