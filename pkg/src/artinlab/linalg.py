"""Exact dense linear algebra over the rationals and prime fields.

Matrices are plain lists of rows inside the library; the frozen ``Matrix``
and ``IntMatrix`` wrappers are the public, immutable face of the same data.
Rational entries are ``int``/``Fraction`` mixtures, prime-field entries are
ints reduced into ``range(p)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import FieldMismatch, NonSplitField


# --------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise the prime field with ``p`` elements."""

    p: int = 0

    @staticmethod
    def rationals() -> "Field":
        return QQ

    @staticmethod
    def prime(p: int) -> "Field":
        if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
            raise ValueError(f"{p} is not prime")
        return Field(p)

    @staticmethod
    def parse(tag: str) -> "Field":
        tag = tag.strip()
        if tag in ("Q", "QQ", "rationals"):
            return QQ
        if tag.startswith("Fp:"):
            return Field.prime(int(tag[3:]))
        raise ValueError(f"unknown field tag {tag!r}")

    @property
    def tag(self) -> str:
        return f"Fp:{self.p}" if self.p else "Q"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x):
        """Coerce an int, Fraction or string such as ``"3/2"`` into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        return int(x)

    def inv(self, a):
        if self.p:
            return pow(a, -1, self.p)
        return Fraction(1) / a

    def div(self, a, b):
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def random(self, rng: random.Random, spread: int = 50):
        if self.p:
            return rng.randrange(self.p)
        return rng.randint(-spread, spread)

    def to_str(self, a) -> str:
        return str(a)


QQ = Field(0)


def check_same_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first.tag} vs {f.tag}")
    return first


# --------------------------------------------------------------------------
# raw list-of-rows helpers


def zeros(m: int, n: int) -> list[list]:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> list[list]:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def transpose(a: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], F: Field, q: int | None = None) -> list[list]:
    """Product of an m x n and an n x q matrix."""
    if q is None:
        q = len(b[0]) if b else 0
    if not b:
        return zeros(len(a), q)
    cols = list(zip(*b)) if q else []
    p = F.p
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        if not nz:
            out.append([0] * q)
        elif p:
            out.append([sum(x * col[k] for k, x in nz) % p for col in cols])
        else:
            out.append([sum(x * col[k] for k, x in nz) for col in cols])
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence, F: Field) -> list:
    nz = [(k, x) for k, x in enumerate(v) if x]
    p = F.p
    if p:
        return [sum(row[k] * x for k, x in nz) % p for row in a]
    return [sum(row[k] * x for k, x in nz) for row in a]


def mat_add(a, b, F: Field, scale=1):
    p = F.p
    if p:
        return [[(x + scale * y) % p for x, y in zip(r, s)] for r, s in zip(a, b)]
    return [[x + scale * y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c, F: Field):
    p = F.p
    if p:
        return [[x * c % p for x in r] for r in a]
    return [[x * c for x in r] for r in a]


def lin_comb(coeffs: Sequence, mats: Sequence[Sequence[Sequence]], F: Field, m: int, n: int):
    """Sum of ``c_i * M_i`` for m x n matrices."""
    out = zeros(m, n)
    p = F.p
    for c, M in zip(coeffs, mats):
        if not c:
            continue
        for i in range(m):
            row, src = out[i], M[i]
            for j in range(n):
                x = src[j]
                if x:
                    row[j] += c * x
    if p:
        out = [[x % p for x in r] for r in out]
    return out


def vec_comb(coeffs: Sequence, vecs: Sequence[Sequence], F: Field, n: int) -> list:
    out = [0] * n
    for c, v in zip(coeffs, vecs):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] += c * x
    if F.p:
        out = [x % F.p for x in out]
    return out


def is_zero_matrix(a) -> bool:
    return not any(any(r) for r in a)


def rref(rows: Iterable[Sequence], ncols: int, F: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    p = F.p
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        lead = row[c]
        if lead != 1:
            inv = F.inv(lead)
            row = [x * inv % p for x in row] if p else [x * inv for x in row]
            m[r] = row
        nzc = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i == r:
                continue
            mi = m[i]
            f = mi[c]
            if f:
                if p:
                    for j in nzc:
                        mi[j] = (mi[j] - f * row[j]) % p
                else:
                    for j in nzc:
                        mi[j] = mi[j] - f * row[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int, F: Field) -> int:
    return len(rref(rows, ncols, F)[1])


def kernel(rows: Sequence[Sequence], ncols: int, F: Field) -> list[list]:
    """Basis of ``{x : rows . x = 0}`` as a list of vectors of length ``ncols``."""
    red, piv = rref(rows, ncols, F)
    pset = set(piv)
    out = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(red, piv):
            x = row[f]
            if x:
                v[c] = F.neg(x)
        out.append(v)
    return out


def solve(rows: Sequence[Sequence], ncols: int, rhs: Sequence, F: Field) -> list | None:
    """One solution of ``rows . x = rhs`` or ``None`` when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, ncols + 1, F)
    if piv and piv[-1] == ncols:
        return None
    x = [0] * ncols
    for row, c in zip(red, piv):
        x[c] = row[ncols]
    return x


class Echelon:
    """Incrementally maintained fully reduced row echelon basis of a subspace."""

    __slots__ = ("n", "F", "rows", "pivots", "_nz")

    def __init__(self, n: int, F: Field, vectors: Iterable[Sequence] = ()):
        self.n = n
        self.F = F
        self.rows: list[list] = []
        self.pivots: list[int] = []
        self._nz: list[list[int]] = []
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        w = list(v)
        p = self.F.p
        for row, c, nz in zip(self.rows, self.pivots, self._nz):
            f = w[c]
            if f:
                if p:
                    for j in nz:
                        w[j] = (w[j] - f * row[j]) % p
                else:
                    for j in nz:
                        w[j] = w[j] - f * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        w = self.reduce(v)
        c = next((j for j, x in enumerate(w) if x), None)
        if c is None:
            return False
        F = self.F
        p = F.p
        lead = w[c]
        if lead != 1:
            inv = F.inv(lead)
            w = [x * inv % p for x in w] if p else [x * inv for x in w]
        nz = [j for j, x in enumerate(w) if x]
        for k, row in enumerate(self.rows):
            f = row[c]
            if f:
                if p:
                    for j in nz:
                        row[j] = (row[j] - f * w[j]) % p
                else:
                    for j in nz:
                        row[j] = row[j] - f * w[j]
                self._nz[k] = [j for j, x in enumerate(row) if x]
        self.rows.append(w)
        self.pivots.append(c)
        self._nz.append(nz)
        return True

    def coords(self, v: Sequence) -> list:
        """Coordinates of ``v`` (assumed in the span) along ``self.rows``."""
        return [v[c] for c in self.pivots]

    def complement(self) -> list[int]:
        """Coordinate positions whose unit vectors complete the basis."""
        ps = set(self.pivots)
        return [j for j in range(self.n) if j not in ps]


# --------------------------------------------------------------------------
# public immutable matrix types


@dataclass(frozen=True)
class Matrix:
    field: Field
    entries: tuple[tuple, ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(field, tuple(tuple(field(x) for x in r) for r in rows), ncols)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        if not cols:
            return cls(field, tuple(() for _ in range(nrows)), 0)
        return cls.from_rows(field, transpose(cols), len(cols))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]

    def columns(self) -> list[list]:
        return transpose(self.entries, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        F = check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return Matrix(F, tuple(map(tuple, matmul(self.entries, other.entries, F, other.ncols))), other.ncols)


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: int) -> "IntMatrix":
        if not cols:
            return cls(tuple(() for _ in range(nrows)), 0)
        return cls(tuple(tuple(int(x) for x in r) for r in zip(*cols)), len(cols))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def columns(self) -> list[list[int]]:
        return transpose(self.entries, self.ncols)


class RrefResult(NamedTuple):
    rank: int
    kernel: Matrix
    solution: Matrix | None


def rref_rank_solve(m: Matrix, rhs: Matrix | None = None) -> RrefResult:
    """Exact rank, null space (as columns) and, if ``rhs`` is given, a solution X of m X = rhs."""
    F = m.field
    rows = m.rows()
    red, piv = rref(rows, m.ncols, F)
    ker = kernel(rows, m.ncols, F)
    sol = None
    if rhs is not None:
        check_same_field(F, rhs.field)
        if rhs.nrows != m.nrows:
            raise ValueError("rhs row count differs")
        cols = []
        for b in rhs.columns():
            x = solve(rows, m.ncols, b, F)
            if x is None:
                cols = None
                break
            cols.append(x)
        if cols is not None:
            sol = Matrix.from_columns(F, cols, m.ncols) if cols else Matrix(F, tuple(() for _ in range(m.ncols)), 0)
    return RrefResult(len(piv), Matrix.from_columns(F, ker, m.ncols), sol)


def integer_subgroup_rank(generators: IntMatrix) -> int:
    """Rank of the subgroup of Z^rows generated by the columns (gcd row reduction)."""
    vecs = [list(c) for c in generators.columns() if any(c)]
    n = generators.nrows
    r = 0
    for col in range(n):
        while True:
            nz = [i for i in range(r, len(vecs)) if vecs[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(vecs[i][col]))
            vecs[r], vecs[i0] = vecs[i0], vecs[r]
            lead = vecs[r]
            done = True
            for i in range(r + 1, len(vecs)):
                x = vecs[i][col]
                if x:
                    q = x // lead[col]
                    vecs[i] = [a - q * b for a, b in zip(vecs[i], lead)]
                    if vecs[i][col]:
                        done = False
            if done:
                r += 1
                break
        if r == len(vecs):
            break
    return r


# --------------------------------------------------------------------------
# polynomials: coefficient lists, lowest degree first


def p_trim(f: list) -> list:
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def p_add(f, g, F: Field):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)]
    if F.p:
        out = [x % F.p for x in out]
    return p_trim(out)


def p_sub(f, g, F: Field):
    return p_add(f, [F.neg(x) for x in g], F)


def p_mul(f, g, F: Field):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    if F.p:
        out = [x % F.p for x in out]
    return p_trim(out)


def p_divmod(f, g, F: Field):
    f = p_trim(f)
    g = p_trim(g)
    if not g:
        raise ZeroDivisionError
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    inv = F.inv(g[-1])
    p = F.p
    while len(r) >= len(g) and r:
        c = r[-1] * inv
        if p:
            c %= p
        d = len(r) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            r[d + i] = r[d + i] - c * b
            if p:
                r[d + i] %= p
        r = p_trim(r)
    return p_trim(q), r


def p_monic(f, F: Field):
    f = p_trim(f)
    if not f:
        return f
    inv = F.inv(f[-1])
    return [x * inv % F.p for x in f] if F.p else [x * inv for x in f]


def p_gcd(f, g, F: Field):
    f, g = p_trim(f), p_trim(g)
    while g:
        f, g = g, p_divmod(f, g, F)[1]
    return p_monic(f, F)


def p_deriv(f, F: Field):
    out = [i * f[i] for i in range(1, len(f))]
    if F.p:
        out = [x % F.p for x in out]
    return p_trim(out)


def p_eval(f, x, F: Field):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
        if F.p:
            acc %= F.p
    return acc


def p_powmod(base, e: int, mod, F: Field):
    result = [1]
    base = p_divmod(base, mod, F)[1]
    while e:
        if e & 1:
            result = p_divmod(p_mul(result, base, F), mod, F)[1]
        base = p_divmod(p_mul(base, base, F), mod, F)[1]
        e >>= 1
    return result


def p_eval_matrix(f, M, F: Field):
    """Horner evaluation of a polynomial at a square matrix."""
    n = len(M)
    acc = zeros(n, n)
    for c in reversed(f):
        acc = matmul(acc, M, F, n)
        if c:
            for i in range(n):
                acc[i][i] += c
                if F.p:
                    acc[i][i] %= F.p
    return acc


def p_str(f, var: str = "t") -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}{('*' + mono) if mono else ''}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def minimal_polynomial(M: Sequence[Sequence], F: Field) -> list:
    """Monic minimal polynomial of a square matrix (powers-of-M dependency)."""
    n = len(M)
    if n == 0:
        return [1]
    nn = n * n
    ech_rows: list[list] = []
    ech_piv: list[int] = []
    P = identity(n)
    p = F.p
    for k in range(n + 1):
        v = [x for r in P for x in r] + [0] * (n + 1)
        v[nn + k] = 1
        for row, c in zip(ech_rows, ech_piv):
            f = v[c]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)] if p else [a - f * b for a, b in zip(v, row)]
        c = next((j for j in range(nn) if v[j]), None)
        if c is None:
            rel = v[nn:nn + k + 1]
            return p_monic(rel, F)
        inv = F.inv(v[c])
        v = [x * inv % p for x in v] if p else [x * inv for x in v]
        ech_rows.append(v)
        ech_piv.append(c)
        P = matmul(P, M, F, n)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def squarefree_decomposition(f, F: Field) -> list[tuple[list, int]]:
    """Yun's algorithm; requires deg f < p in positive characteristic."""
    f = p_monic(f, F)
    if len(f) <= 1:
        return []
    if F.p and len(f) - 1 >= F.p:
        raise NonSplitField(f"degree {len(f) - 1} polynomial in characteristic {F.p}")
    out = []
    fp = p_deriv(f, F)
    a = p_gcd(f, fp, F)
    b = p_divmod(f, a, F)[0]
    c = p_divmod(fp, a, F)[0]
    d = p_sub(c, p_deriv(b, F), F)
    i = 1
    while len(b) > 1:
        g = p_gcd(b, d, F)
        b = p_divmod(b, g, F)[0]
        c = p_divmod(d, g, F)[0]
        d = p_sub(c, p_deriv(b, F), F)
        if len(g) > 1:
            out.append((g, i))
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _rational_roots(f) -> list[Fraction]:
    """Rational roots of a squarefree polynomial with rational coefficients."""
    den = 1
    for c in f:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    roots: list[Fraction] = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return roots
    a0, an = ints[0], ints[-1]

    def is_root(q: Fraction) -> bool:
        acc = Fraction(0)
        for c in reversed(ints):
            acc = acc * q + c
        return acc == 0

    found: set[Fraction] = set()
    if abs(a0) <= 5000 and abs(an) <= 5000:
        for num in _divisors(a0):
            for d in _divisors(an):
                for s in (1, -1):
                    q = Fraction(s * num, d)
                    if q not in found and is_root(q):
                        found.add(q)
    else:
        approx = np.roots([float(c) for c in reversed(ints)])
        for z in approx:
            if abs(z.imag) > 1e-6 * (1 + abs(z)):
                continue
            for d in _divisors(an) if abs(an) <= 10**6 else [abs(an)]:
                base = round(z.real * d)
                for num in (base - 1, base, base + 1):
                    q = Fraction(num, d)
                    if q not in found and is_root(q):
                        found.add(q)
    return roots + sorted(found)


def _prime_roots(f, F: Field) -> list[int]:
    p = F.p
    if p <= 4000:
        return [x for x in range(p) if p_eval(f, x, F) == 0]
    # product of the linear factors, then equal-degree splitting
    h = p_gcd(f, p_sub(p_powmod([0, 1], p, f, F), [0, 1], F), F)
    rng = random.Random(len(f) * 7919 + p)
    stack, roots = [h], []
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            roots.append(F.neg(F.div(g[0], g[1])))
            continue
        while True:
            a = rng.randrange(p)
            w = p_sub(p_powmod([a, 1], (p - 1) // 2, g, F), [1], F)
            s = p_gcd(g, w, F)
            if 1 < len(s) < len(g):
                stack += [s, p_divmod(g, s, F)[0]]
                break
    return sorted(roots)


def field_roots(f, F: Field) -> list:
    if F.p:
        return _prime_roots(f, F)
    return [F(r) for r in _rational_roots(f)]


def split_squarefree(f, F: Field) -> list[list]:
    """Split a squarefree polynomial into linear factors plus a root-free rest."""
    f = p_monic(f, F)
    out = []
    for r in field_roots(f, F):
        lin = [F.neg(r), 1]
        out.append(lin)
        f = p_divmod(f, lin, F)[0]
    if len(f) > 1:
        out.append(f)
    return out


def minpoly_squarefree(m: Matrix | Sequence[Sequence], F: Field | None = None) -> list[tuple[list, int]]:
    """Minimal polynomial as pairwise coprime squarefree factors with multiplicities.

    Linear factors are extracted for every root in the ground field; whatever
    remains of a squarefree layer is returned as a single root-free factor.
    """
    if isinstance(m, Matrix):
        F = m.field
        if m.nrows != m.ncols:
            raise ValueError("minpoly_squarefree needs a square matrix")
        rows = m.rows()
    else:
        rows = [list(r) for r in m]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("minpoly_squarefree needs a square matrix")
    assert F is not None
    mp = minimal_polynomial(rows, F)
    out = []
    for layer, mult in squarefree_decomposition(mp, F):
        for fac in split_squarefree(layer, F):
            out.append((fac, mult))
    out.sort(key=lambda fm: (len(fm[0]), [str(x) for x in fm[0]]))
    return out


def is_nilpotent(M: Sequence[Sequence], F: Field) -> bool:
    n = len(M)
    if n == 0:
        return True
    P = [list(r) for r in M]
    k = 1
    while k < n:
        P = matmul(P, P, F, n)
        k *= 2
        if is_zero_matrix(P):
            return True
    return is_zero_matrix(P)


def inverse(a: Sequence[Sequence], F: Field) -> list[list]:
    n = len(a)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(a)]
    red, piv = rref(aug, 2 * n, F)
    if n and (len(piv) < n or piv[n - 1] != n - 1):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def is_invertible(a: Sequence[Sequence], F: Field) -> bool:
    return rank(a, len(a), F) == len(a)


class Coordinates:
    """Coordinates with respect to a fixed (unreduced) list of independent vectors."""

    def __init__(self, basis: Sequence[Sequence], n: int, F: Field):
        self.basis = [list(b) for b in basis]
        self.n = n
        self.F = F
        red, piv = rref(self.basis, n, F)
        if len(piv) != len(self.basis):
            raise ValueError("basis vectors are dependent")
        self.pivots = piv
        sub = [[b[c] for c in piv] for b in self.basis]
        # row vector c with c . sub = v[piv]
        self._inv = inverse(sub, F) if sub else []

    def __call__(self, v: Sequence) -> list:
        w = [v[c] for c in self.pivots]
        m = len(self.pivots)
        out = [0] * m
        for i, x in enumerate(w):
            if x:
                row = self._inv[i]
                for j in range(m):
                    if row[j]:
                        out[j] += x * row[j]
        if self.F.p:
            out = [x % self.F.p for x in out]
        return out
