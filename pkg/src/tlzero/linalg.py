"""Exact linear algebra over any exact field of Python scalars.

Works with ``int``/``Fraction`` entries (the rationals) and with
:class:`~tlzero.scalars.GaussianRational`.  Matrices are plain lists of rows.
Elimination is done on sparse dict rows; the pivot of a row is always its first
nonzero column, so every result is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Vector = List
Matrix = List[List]
SparseRow = Dict[int, object]

_ONE = Fraction(1)


# --------------------------------------------------------------------------
# dense helpers

def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def shape(a: Matrix, cols: Optional[int] = None) -> Tuple[int, int]:
    if not a:
        return 0, (cols or 0)
    return len(a), len(a[0])


def transpose(a: Matrix, cols: Optional[int] = None) -> Matrix:
    r, c = shape(a, cols)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def matmul(a: Matrix, b: Matrix, inner: Optional[int] = None, cols: Optional[int] = None) -> Matrix:
    """Product a @ b.  ``inner``/``cols`` disambiguate empty operands."""
    ra = len(a)
    kb = len(b) if b else (inner or 0)
    cb = len(b[0]) if b else (cols or 0)
    if a and len(a[0]) != kb:
        raise ValueError(f"shape mismatch: {len(a[0])} vs {kb}")
    out = [[0] * cb for _ in range(ra)]
    for i in range(ra):
        row = a[i]
        acc = out[i]
        for k, v in enumerate(row):
            if v:
                bk = b[k]
                for j in range(cb):
                    w = bk[j]
                    if w:
                        acc[j] = acc[j] + v * w
    return out


def matvec(a: Matrix, v: Sequence) -> Vector:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


compose_maps = matmul


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def flatten(a: Matrix) -> Vector:
    return [x for row in a for x in row]


def columns_to_matrix(cols: Sequence[Sequence], rows: int) -> Matrix:
    return [[c[i] for c in cols] for i in range(rows)]


def _inv(v):
    if v == 1:
        return 1
    if v == -1:
        return -1
    return _ONE / v


def _dense(row: SparseRow, n: int) -> Vector:
    out = [0] * n
    for k, v in row.items():
        out[k] = v
    return out


def _sparse(v: Iterable) -> SparseRow:
    return {i: x for i, x in enumerate(v) if x}


# --------------------------------------------------------------------------
# echelon machinery

class Echelon:
    """Incrementally maintained echelon basis of a subspace of K^n.

    Every stored row has its pivot (first nonzero column) normalised to 1 and
    pivots are pairwise distinct.  When ``track`` is set, each stored row also
    remembers the combination of inserted vectors that produced it, so that a
    dependent vector can be written in terms of the inserted ones.
    """

    def __init__(self, n: int, track: bool = False):
        self.n = n
        self.rows: Dict[int, SparseRow] = {}
        self.track = track
        self.tags: Dict[int, SparseRow] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, row: SparseRow, tag: Optional[SparseRow]):
        rows = self.rows
        while row:
            hits = [c for c in row if c in rows]
            if not hits:
                break
            c = min(hits)
            f = row[c]
            prow = rows[c]
            for k, v in prow.items():
                w = row.get(k, 0) - f * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
            if tag is not None:
                for k, v in self.tags[c].items():
                    w = tag.get(k, 0) - f * v
                    if w:
                        tag[k] = w
                    else:
                        tag.pop(k, None)
        return row, tag

    def reduce(self, vec) -> SparseRow:
        """Normal form of ``vec`` modulo the span: no entries in pivot columns."""
        row = dict(vec) if isinstance(vec, dict) else _sparse(vec)
        row, _ = self._reduce(row, None)
        return row

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def express(self, vec) -> Optional[SparseRow]:
        """Coefficients over inserted vectors, or None if ``vec`` is outside the span."""
        if not self.track:
            raise ValueError("Echelon built without tracking")
        row = dict(vec) if isinstance(vec, dict) else _sparse(vec)
        tag: SparseRow = {}
        row, tag = self._reduce(row, tag)
        if row:
            return None
        return {k: -v for k, v in tag.items()}

    def add(self, vec) -> bool:
        """Insert a vector; returns True iff it enlarged the span."""
        row = dict(vec) if isinstance(vec, dict) else _sparse(vec)
        # tags index successful inserts only
        tag = {len(self.rows): 1} if self.track else None
        row, tag = self._reduce(row, tag)
        if not row:
            return False
        c = min(row)
        f = _inv(row[c])
        if f != 1:
            row = {k: v * f for k, v in row.items()}
            if tag is not None:
                tag = {k: v * f for k, v in tag.items()}
        self.rows[c] = row
        if tag is not None:
            self.tags[c] = tag
        return True

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def free_columns(self) -> List[int]:
        return [j for j in range(self.n) if j not in self.rows]

    def reduced_rows(self) -> Dict[int, SparseRow]:
        """Fully reduced (RREF) copy of the stored rows."""
        out = {c: dict(r) for c, r in self.rows.items()}
        for c in sorted(out, reverse=True):
            prow = out[c]
            for c2, row in out.items():
                if c2 < c and c in row:
                    f = row[c]
                    for k, v in prow.items():
                        w = row.get(k, 0) - f * v
                        if w:
                            row[k] = w
                        else:
                            row.pop(k, None)
        return out

    def basis(self) -> List[Vector]:
        return [_dense(self.rows[c], self.n) for c in self.pivots()]

    def nullspace(self) -> List[Vector]:
        """Basis of {x : r.x = 0 for every stored row r}, one vector per free column."""
        rref = self.reduced_rows()
        out = []
        for f in self.free_columns():
            x = [0] * self.n
            x[f] = 1
            for c, row in rref.items():
                v = row.get(f)
                if v:
                    x[c] = -v
            out.append(x)
        return out


def rank(m: Matrix) -> int:
    if not m:
        return 0
    e = Echelon(len(m[0]))
    for row in m:
        e.add(row)
    return e.dim


def row_echelon(m: Matrix, cols: Optional[int] = None) -> Echelon:
    n = len(m[0]) if m else (cols or 0)
    e = Echelon(n)
    for row in m:
        e.add(row)
    return e


def kernel_basis(m: Matrix, cols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : m x = 0}."""
    return row_echelon(m, cols).nullspace()


def image_basis(m: Matrix, cols: Optional[int] = None) -> List[Vector]:
    """Echelon basis of the column space of ``m``."""
    if not m:
        return []
    e = Echelon(len(m))
    for j in range(len(m[0])):
        e.add([m[i][j] for i in range(len(m))])
    return e.basis()


def span_rank(vectors: Iterable[Sequence], n: int) -> int:
    e = Echelon(n)
    for v in vectors:
        e.add(v)
    return e.dim


def same_span(u: Sequence[Sequence], v: Sequence[Sequence], n: int) -> bool:
    ru, rv = span_rank(u, n), span_rank(v, n)
    return ru == rv == span_rank(list(u) + list(v), n)


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    e = Echelon(2 * n)
    for row in aug:
        e.add(row)
    if any(c not in e.rows for c in range(n)):
        raise ZeroDivisionError("matrix is singular")
    rref = e.reduced_rows()
    return [[rref[i].get(n + j, 0) for j in range(n)] for i in range(n)]


def det(m: Matrix):
    """Exact determinant by elimination."""
    n = len(m)
    a = [list(r) for r in m]
    out = _ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            out = -out
        piv = a[c][c]
        out = out * piv
        inv = _inv(piv)
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f * inv
                row_c = a[c]
                row_r = a[r]
                for k in range(c, n):
                    if row_c[k]:
                        row_r[k] = row_r[k] - f * row_c[k]
    return out


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """One solution of m x = b, or None if inconsistent."""
    rows = len(m)
    cols = len(m[0]) if m else 0
    e = Echelon(cols + 1)
    for i in range(rows):
        e.add(list(m[i]) + [b[i]])
    if cols in e.rows:
        return None
    rref = e.reduced_rows()
    x = [0] * cols
    for c, row in rref.items():
        x[c] = row.get(cols, 0)
    return x


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Optional[Vector]:
    """Coordinates of ``v`` in terms of a linearly independent list ``basis``."""
    n = len(v)
    e = Echelon(n, track=True)
    for b in basis:
        if not e.add(b):
            raise ValueError("basis vectors are linearly dependent")
    coeffs = e.express(v)
    if coeffs is None:
        return None
    return [coeffs.get(i, 0) for i in range(len(basis))]


# --------------------------------------------------------------------------
# representations

class NotInvariantError(ValueError):
    """A subspace is not stable under a generator; carries a witness."""

    def __init__(self, generator: int, vector):
        super().__init__(f"subspace not stable under generator {generator}")
        self.generator = generator
        self.vector = vector


@dataclass
class MatrixRep:
    """A module given by one square matrix per generator (1-based in names only)."""

    dim: int
    gens: List[Matrix]
    domain: str = "QQ"
    labels: Optional[list] = field(default=None, repr=False)

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.dim or any(len(r) != self.dim for r in g):
                raise ValueError("generator matrices must be dim x dim")

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def act(self, i: int, v: Sequence) -> Vector:
        return matvec(self.gens[i], v)

    def restrict_generators(self, keep: int) -> "MatrixRep":
        """Forget all but the first ``keep`` generators (restriction to a subalgebra)."""
        return MatrixRep(self.dim, self.gens[:keep], self.domain, self.labels)


def direct_sum(x: MatrixRep, y: MatrixRep) -> MatrixRep:
    if x.ngens != y.ngens:
        raise ValueError("generator count mismatch")
    n = x.dim + y.dim
    gens = []
    for gx, gy in zip(x.gens, y.gens):
        m = zeros(n, n)
        for i in range(x.dim):
            m[i][:x.dim] = list(gx[i])
        for i in range(y.dim):
            m[x.dim + i][x.dim:] = list(gy[i])
        gens.append(m)
    return MatrixRep(n, gens, x.domain)


def check_invariant(x: MatrixRep, basis: Sequence[Sequence]) -> Echelon:
    e = Echelon(x.dim)
    for b in basis:
        e.add(b)
    for gi, g in enumerate(x.gens):
        for c in e.pivots():
            v = _dense(e.rows[c], x.dim)
            w = matvec(g, v)
            if not e.contains(w):
                raise NotInvariantError(gi, v)
    return e


def quotient_rep(x: MatrixRep, basis: Sequence[Sequence]) -> Tuple[MatrixRep, Matrix]:
    """Quotient of ``x`` by an invariant subspace.

    Returns the quotient module and the projection matrix (quotient coordinates
    of each standard basis vector of ``x``).  Quotient basis vectors are the
    images of the standard basis vectors at non-pivot columns.
    """
    e = check_invariant(x, basis)
    free = e.free_columns()
    pos = {j: k for k, j in enumerate(free)}
    q = len(free)

    def project(v) -> Vector:
        r = e.reduce(v)
        out = [0] * q
        for j, val in r.items():
            out[pos[j]] = val
        return out

    proj_cols = []
    for j in range(x.dim):
        u = [0] * x.dim
        u[j] = 1
        proj_cols.append(project(u))
    projection = columns_to_matrix(proj_cols, q)
    gens = []
    for g in x.gens:
        cols = []
        for j in free:
            cols.append(project([g[i][j] for i in range(x.dim)]))
        gens.append(columns_to_matrix(cols, q))
    return MatrixRep(q, gens, x.domain), projection


def sub_rep(x: MatrixRep, basis: Sequence[Sequence]) -> MatrixRep:
    """Action on an invariant subspace, in the coordinates of ``basis``."""
    check_invariant(x, basis)
    k = len(basis)
    gens = []
    for g in x.gens:
        cols = [coordinates(basis, matvec(g, b)) for b in basis]
        gens.append(columns_to_matrix(cols, k))
    return MatrixRep(k, gens, x.domain)


def is_intertwiner(t: Matrix, x: MatrixRep, y: MatrixRep) -> bool:
    return all(mat_equal(matmul(t, gx, inner=x.dim, cols=x.dim), matmul(gy, t, inner=y.dim, cols=x.dim))
               for gx, gy in zip(x.gens, y.gens))


def hom_space(x: MatrixRep, y: MatrixRep) -> List[Matrix]:
    """Basis of {T : T X_i = Y_i T for all i}; each T is dim(y) x dim(x).

    Spins a basis of ``x`` out of as few standard basis vectors as needed,
    then solves for the images of those generators in ``y``.  Unknowns number
    (#generators) * dim(y) instead of dim(x) * dim(y).
    """
    if x.ngens != y.ngens:
        raise ValueError(f"generator count mismatch: {x.ngens} vs {y.ngens}")
    dx, dy = x.dim, y.dim
    if dx == 0 or dy == 0:
        return []

    span = Echelon(dx, track=True)
    vecs: List[Vector] = []
    prov: List[tuple] = []
    relations: List[tuple] = []
    ngen = 0
    idx = 0
    while True:
        while idx < len(vecs):
            for gi, g in enumerate(x.gens):
                w = matvec(g, vecs[idx])
                if span.add(w):
                    vecs.append(w)
                    prov.append(("act", gi, idx))
                else:
                    relations.append((gi, idx, span.express(w)))
            idx += 1
        if len(vecs) == dx:
            break
        for j in range(dx):
            u = [0] * dx
            u[j] = 1
            if span.add(u):
                vecs.append(u)
                prov.append(("gen", ngen))
                ngen += 1
                break

    nunk = ngen * dy
    # image of vecs[q] is images[q] @ unknowns, stored as dy sparse rows
    images: List[List[SparseRow]] = []
    ysparse = [[_sparse(r) for r in g] for g in y.gens]

    def apply_y(gi: int, rows: List[SparseRow]) -> List[SparseRow]:
        out = []
        for yr in ysparse[gi]:
            acc: SparseRow = {}
            for k, v in yr.items():
                for u, w in rows[k].items():
                    z = acc.get(u, 0) + v * w
                    if z:
                        acc[u] = z
                    else:
                        acc.pop(u, None)
            out.append(acc)
        return out

    for p in prov:
        if p[0] == "gen":
            k = p[1]
            images.append([{k * dy + i: 1} for i in range(dy)])
        else:
            _, gi, src = p
            images.append(apply_y(gi, images[src]))

    eqs = Echelon(nunk)
    for gi, src, coeffs in relations:
        lhs = apply_y(gi, images[src])
        for i in range(dy):
            row = dict(lhs[i])
            for q, c in coeffs.items():
                for u, w in images[q][i].items():
                    z = row.get(u, 0) - c * w
                    if z:
                        row[u] = z
                    else:
                        row.pop(u, None)
            if row:
                eqs.add(row)
                if eqs.dim == nunk:
                    return []

    sols = eqs.nullspace()
    if not sols:
        return []
    bmat = columns_to_matrix(vecs, dx)
    binv = inverse(bmat)
    out = []
    for u in sols:
        img_cols = []
        for q in range(dx):
            col = []
            for i in range(dy):
                acc = 0
                for k, v in images[q][i].items():
                    if u[k]:
                        acc = acc + v * u[k]
                col.append(acc)
            img_cols.append(col)
        t = matmul(columns_to_matrix(img_cols, dy), binv, inner=dx, cols=dx)
        out.append(t)
    return out


def hom_space_direct(x: MatrixRep, y: MatrixRep) -> List[Matrix]:
    """Same space as :func:`hom_space`, by solving for all dim(x)*dim(y) entries at once."""
    if x.ngens != y.ngens:
        raise ValueError("generator count mismatch")
    dx, dy = x.dim, y.dim
    n = dx * dy
    e = Echelon(n)
    for gx, gy in zip(x.gens, y.gens):
        for r in range(dy):
            for c in range(dx):
                row: SparseRow = {}
                # (T gx)[r, c] - (gy T)[r, c]
                for k in range(dx):
                    v = gx[k][c]
                    if v:
                        idx = r * dx + k
                        row[idx] = row.get(idx, 0) + v
                for k in range(dy):
                    v = gy[r][k]
                    if v:
                        idx = k * dx + c
                        row[idx] = row.get(idx, 0) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    e.add(row)
    return [[u[r * dx:(r + 1) * dx] for r in range(dy)] for u in e.nullspace()]


def normalize_first_nonzero(t: Matrix) -> Matrix:
    """Rescale so the first nonzero entry in row-major order is 1."""
    for row in t:
        for v in row:
            if v:
                f = _inv(v)
                return mat_scale(f, t) if f != 1 else [list(r) for r in t]
    raise ValueError("zero matrix cannot be normalised")


def find_invertible(basis: Sequence[Matrix], seed: int = 0, tries: int = 64) -> Optional[Matrix]:
    """An invertible element of span(basis), if one turns up.

    Tries the basis elements first, then small integer combinations from a
    seeded generator, so the witness is reproducible.
    """
    import random

    if not basis or len(basis[0]) != len(basis[0][0] if basis[0] else []):
        return None
    for t in basis:
        if det(t) != 0:
            return t
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        t = zeros(len(basis[0]), len(basis[0][0]))
        for c, b in zip(coeffs, basis):
            if c:
                t = mat_add(t, mat_scale(c, b))
        if det(t) != 0:
            return t
    return None


# --------------------------------------------------------------------------
# serialization

def scalar_to_str(x) -> str:
    if hasattr(x, "format") and not isinstance(x, str):
        return x.format()
    return str(x)


def matrix_to_json(m: Matrix) -> str:
    return json.dumps([[scalar_to_str(x) for x in row] for row in m])


def matrix_from_json(text: str) -> Matrix:
    return [[Fraction(x) for x in row] for row in json.loads(text)]
