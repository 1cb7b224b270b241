"""Exact dense linear algebra over Q and over prime fields F_p.

Scalars are plain Python values: Fraction for the rationals, int residues
in [0, p) for F_p.  Everything is immutable and every pivot choice is the
first nonzero entry in row-major scan order, so ranks, kernels, cokernel
presentations and solutions are reproducible bit for bit.

Tensor legs flatten first-factor-major: the flat index of (i1, ..., ik)
over shape (d1, ..., dk) is ((i1*d2 + i2)*d3 + ...). kron follows the same
convention, so kron(f, g) is the matrix of f (x) g on flattened legs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Q (kind="rational") or F_p (kind="prime", modulus p)."""

    kind: str
    p: int = 0

    @staticmethod
    def rational() -> "Field":
        return Field("rational")

    @staticmethod
    def prime(p: int) -> "Field":
        if not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        return Field("prime", p)

    # -- element constructors ------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def of(self, x):
        """Coerce an int, Fraction or scalar string into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            raise ValueError("bool is not a scalar")
        if self.kind == "rational":
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise ValueError("cannot coerce %r into Q" % (x,))
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError("denominator of %s vanishes mod %d" % (x, self.p))
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        raise ValueError("cannot coerce %r into F_%d" % (x, self.p))

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        return a + b if self.kind == "rational" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rational" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rational" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rational" else (-a) % self.p

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a if self.kind == "rational" else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- serialization: "p/q" in lowest terms (rational), residue (prime)

    def show(self, a) -> str:
        return str(a)

    def parse(self, s):
        if isinstance(s, int) and not isinstance(s, bool):
            return self.of(s)
        if not isinstance(s, str):
            raise ValueError("scalar must be an int or a string, got %r" % (s,))
        try:
            q = Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError("malformed scalar %r" % (s,))
        return self.of(q)

    def label(self) -> str:
        return "rational" if self.kind == "rational" else "prime:%d" % self.p


@dataclass(frozen=True)
class Mat:
    """Dense matrix, row-major entries tuple, immutable."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    @staticmethod
    def from_rows(field: Field, rows) -> "Mat":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            data.extend(field.of(x) for x in r)
        return Mat(field, nrows, ncols, tuple(data))

    @staticmethod
    def identity(field: Field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return Mat(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Mat":
        return Mat(field, rows, cols, (field.zero,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        add = self.field.add
        return Mat(self.field, self.rows, self.cols,
                   tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        sub = self.field.sub
        return Mat(self.field, self.rows, self.cols,
                   tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        neg = self.field.neg
        return Mat(self.field, self.rows, self.cols, tuple(neg(a) for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, Mat):
            return self._matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Mat":
        c = self.field.of(c)
        mul = self.field.mul
        return Mat(self.field, self.rows, self.cols, tuple(mul(c, a) for a in self.entries))

    def _matmul(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d times %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        F = self.field
        z = F.zero
        n, m, k = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [z] * (n * k)
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            orow = i * k
            for t in range(m):
                c = arow[t]
                if c == z:
                    continue
                brow = b[t * k:(t + 1) * k]
                if F.kind == "rational":
                    for j in range(k):
                        v = brow[j]
                        if v != z:
                            out[orow + j] += c * v
                else:
                    p = F.p
                    for j in range(k):
                        v = brow[j]
                        if v != z:
                            out[orow + j] = (out[orow + j] + c * v) % p
        return Mat(F, n, k, tuple(out))

    @property
    def t(self) -> "Mat":
        e = self.entries
        c = self.cols
        return Mat(self.field, c, self.rows,
                   tuple(e[i * c + j] for j in range(c) for i in range(self.rows)))

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(a == z for a in self.entries)

    def _same_shape(self, other: "Mat"):
        if self.field != other.field or self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape/field mismatch")

    def col_mat(self, j: int) -> "Mat":
        return Mat(self.field, self.rows, 1,
                   tuple(self.entries[i * self.cols + j] for i in range(self.rows)))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.show(x) for x in self.row(i))
                         for i in range(self.rows))
        return "Mat(%dx%d: %s)" % (self.rows, self.cols, body)


def kron(a: Mat, b: Mat) -> Mat:
    """Tensor product of linear maps, first factor major on both sides."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    F = a.field
    mul = F.mul
    z = F.zero
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [z] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            c = a.entries[i * a.cols + j]
            if c == z:
                continue
            for k in range(b.rows):
                base = (i * b.rows + k) * cols + j * b.cols
                brow = b.entries[k * b.cols:(k + 1) * b.cols]
                for l in range(b.cols):
                    v = brow[l]
                    if v != z:
                        out[base + l] = mul(c, v)
    return Mat(F, rows, cols, tuple(out))


def flip(field: Field, d1: int, d2: int) -> Mat:
    """Matrix of the swap V1 (x) V2 -> V2 (x) V1 on flattened legs."""
    z, o = field.zero, field.one
    out = [z] * (d1 * d2 * d1 * d2)
    for i in range(d1):
        for j in range(d2):
            out[(j * d1 + i) * (d1 * d2) + (i * d2 + j)] = o
    return Mat(field, d1 * d2, d1 * d2, tuple(out))


def hstack(mats) -> Mat:
    mats = list(mats)
    F = mats[0].field
    rows = mats[0].rows
    if any(m.rows != rows or m.field != F for m in mats):
        raise ValueError("hstack shape mismatch")
    data = []
    for i in range(rows):
        for m in mats:
            data.extend(m.row(i))
    return Mat(F, rows, sum(m.cols for m in mats), tuple(data))


def vstack(mats) -> Mat:
    mats = list(mats)
    F = mats[0].field
    cols = mats[0].cols
    if any(m.cols != cols or m.field != F for m in mats):
        raise ValueError("vstack shape mismatch")
    data = []
    for m in mats:
        data.extend(m.entries)
    return Mat(F, sum(m.rows for m in mats), cols, tuple(data))


def vec(m: Mat) -> Mat:
    """Row-major vectorization as a column."""
    return Mat(m.field, m.rows * m.cols, 1, m.entries)


def unvec(field: Field, column: Mat, rows: int, cols: int) -> Mat:
    if column.cols != 1 or column.rows != rows * cols:
        raise ValueError("unvec shape mismatch")
    return Mat(field, rows, cols, column.entries)


def block_inj(field: Field, dims, k: int) -> Mat:
    """Injection of the k-th summand into the direct sum with given dims."""
    total = sum(dims)
    off = sum(dims[:k])
    z, o = field.zero, field.one
    out = [z] * (total * dims[k])
    for i in range(dims[k]):
        out[(off + i) * dims[k] + i] = o
    return Mat(field, total, dims[k], tuple(out))


def block_proj(field: Field, dims, k: int) -> Mat:
    return block_inj(field, dims, k).t


def block_diag(a: Mat, b: Mat) -> Mat:
    if a.field != b.field:
        raise ValueError("field mismatch")
    F = a.field
    rows, cols = a.rows + b.rows, a.cols + b.cols
    out = [F.zero] * (rows * cols)
    for i in range(a.rows):
        out[i * cols:i * cols + a.cols] = a.row(i)
    for i in range(b.rows):
        out[(a.rows + i) * cols + a.cols:(a.rows + i + 1) * cols] = b.row(i)
    return Mat(F, rows, cols, tuple(out))


# -- elimination ------------------------------------------------------


def rref(m: Mat):
    """Reduced row echelon form.  Returns (R, pivot column tuple).

    Pivot selection is the first row with a nonzero entry, scanning
    columns left to right; no magnitude heuristics, fully deterministic.
    """
    F = m.field
    z = F.zero
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = -1
        for i in range(r, m.rows):
            if rows[i][c] != z:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != F.one:
            ipiv = F.inv(piv)
            rows[r] = [F.mul(ipiv, x) for x in rows[r]]
        for i in range(m.rows):
            if i == r:
                continue
            f = rows[i][c]
            if f != z:
                ri, rr = rows[i], rows[r]
                rows[i] = [F.sub(ri[j], F.mul(f, rr[j])) for j in range(m.cols)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    flat = tuple(x for row in rows for x in row)
    return Mat(F, m.rows, m.cols, flat), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> Mat:
    """Columns form the canonical basis of ker(m) (free-column convention)."""
    F = m.field
    R, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    z, o = F.zero, F.one
    cols = []
    for fcol in free:
        x = [z] * m.cols
        x[fcol] = o
        for j, pcol in enumerate(pivots):
            x[pcol] = F.neg(R[j, fcol])
        cols.append(x)
    data = tuple(cols[j][i] for i in range(m.cols) for j in range(len(free)))
    return Mat(F, m.cols, len(free), data)


def solve_affine(a: Mat, b: Mat):
    """All solutions of a x = b: (particular, kernel_basis(a)) or None."""
    if a.rows != b.rows:
        raise ValueError("shape mismatch")
    R, pivots = rref(hstack([a, b]))
    if any(p >= a.cols for p in pivots):
        return None
    F = a.field
    z = F.zero
    part = [[z] * b.cols for _ in range(a.cols)]
    for j, pcol in enumerate(pivots):
        for t in range(b.cols):
            part[pcol][t] = R[j, a.cols + t]
    particular = Mat(F, a.cols, b.cols, tuple(x for row in part for x in row))
    return particular, kernel_basis(a)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    sol = solve_affine(m, Mat.identity(m.field, m.rows))
    if sol is None or sol[1].cols != 0:
        raise ValueError("matrix is singular")
    return sol[0]


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of k^ambient_dim given by independent basis columns."""

    ambient_dim: int
    basis: Mat

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise ValueError("basis rows do not match ambient dimension")
        if rank(self.basis) != self.basis.cols:
            raise ValueError("basis columns are dependent")

    @property
    def dim(self) -> int:
        return self.basis.cols


def same_subspace(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    if a.ambient_dim != b.ambient_dim:
        return False
    if a.dim != b.dim:
        return False
    return rank(hstack([a.basis, b.basis])) == a.dim


@dataclass(frozen=True)
class QuotientPresentation:
    """Cokernel presentation: projection kills relations, section splits it."""

    ambient_dim: int
    relations: Mat
    projection: Mat
    section: Mat

    def __post_init__(self):
        if not (self.projection * self.relations).is_zero():
            raise ValueError("projection does not kill the relations")
        if self.projection * self.section != Mat.identity(self.projection.field, self.dim):
            raise ValueError("section is not split by the projection")
        if rank(self.projection) != self.dim:
            raise ValueError("projection is not surjective")

    @property
    def dim(self) -> int:
        return self.projection.rows


def cokernel(m: Mat) -> QuotientPresentation:
    """Quotient of the codomain of m by its image.

    Coordinates on the quotient are the non-pivot coordinates of the row
    space of m^T; the section includes them back, the projection subtracts
    the pivot components.  Deterministic via rref.
    """
    F = m.field
    R, pivots = rref(m.t)
    pivset = set(pivots)
    nonpiv = [c for c in range(m.rows) if c not in pivset]
    q = len(nonpiv)
    z, o = F.zero, F.one
    proj = [[z] * m.rows for _ in range(q)]
    for i, tcol in enumerate(nonpiv):
        proj[i][tcol] = o
        for j, pcol in enumerate(pivots):
            proj[i][pcol] = F.neg(R[j, tcol])
    projection = Mat(F, q, m.rows, tuple(x for row in proj for x in row))
    sect = [[z] * q for _ in range(m.rows)]
    for i, tcol in enumerate(nonpiv):
        sect[tcol][i] = o
    section = Mat(F, m.rows, q, tuple(x for row in sect for x in row))
    return QuotientPresentation(m.rows, m, projection, section)


def restrict_map(f: Mat, dom_basis: Mat, cod_basis: Mat) -> Mat:
    """Matrix of f between subspaces, in the given bases.

    Requires f(dom) <= cod; raises ValueError otherwise.
    """
    sol = solve_affine(cod_basis, f * dom_basis)
    if sol is None:
        raise ValueError("map does not restrict to the subspace")
    return sol[0]


# -- solution spaces of matrix equations ------------------------------


def mat_solution_basis(field: Field, rows: int, cols: int, conditions) -> SubspaceBasis:
    """Basis of {F in k^{rows x cols} : every condition(F) == 0}.

    conditions: callables Mat -> Mat, linear in the unknown matrix.  The
    system is assembled by evaluating on the matrix units, which keeps the
    caller free to express conditions as ordinary compositions.
    """
    nunk = rows * cols
    z, o = field.zero, field.one
    cond_cols = []
    for idx in range(nunk):
        e = Mat(field, rows, cols, tuple(o if t == idx else z for t in range(nunk)))
        cond_cols.append(vstack([vec(c(e)) for c in conditions]))
    system = hstack(cond_cols) if cond_cols else Mat.zeros(field, 0, 0)
    if nunk == 0:
        return SubspaceBasis(0, Mat.zeros(field, 0, 0))
    return SubspaceBasis(nunk, kernel_basis(system))


def affine_matrix_system(field: Field, rows: int, cols: int, residual):
    """(A, b) with A vec(F) = b  iff  residual(F) == 0, residual affine."""
    nunk = rows * cols
    z, o = field.zero, field.one
    r0 = vec(residual(Mat.zeros(field, rows, cols)))
    cols_out = []
    for idx in range(nunk):
        e = Mat(field, rows, cols, tuple(o if t == idx else z for t in range(nunk)))
        cols_out.append(vec(residual(e)) - r0)
    a = hstack(cols_out) if cols_out else Mat.zeros(field, r0.rows, 0)
    return a, -r0


def basis_columns(field: Field, basis: Mat, rows: int, cols: int):
    """Iterate the columns of a vectorized basis as rows x cols matrices."""
    return [unvec(field, basis.col_mat(j), rows, cols) for j in range(basis.cols)]


# -- tensors ----------------------------------------------------------


def _strides(shape):
    s = [1] * len(shape)
    for i in range(len(shape) - 2, -1, -1):
        s[i] = s[i + 1] * shape[i + 1]
    return s


def multi_to_flat(multi, shape) -> int:
    flat = 0
    for i, d in zip(multi, shape):
        if not (0 <= i < d):
            raise IndexError("index %r out of range for shape %r" % (multi, shape))
        flat = flat * d + i
    return flat


def flat_to_multi(flat: int, shape):
    out = []
    for st in _strides(shape):
        out.append(flat // st)
        flat %= st
    return tuple(out)


@dataclass(frozen=True)
class Tensor:
    """Dense tensor, row-major entries (first leg major)."""

    field: Field
    shape: tuple
    entries: tuple

    @staticmethod
    def from_items(field: Field, shape, items) -> "Tensor":
        shape = tuple(shape)
        size = 1
        for d in shape:
            size *= d
        data = [field.zero] * size
        seen = set()
        for multi, scalar in items:
            multi = tuple(multi)
            if len(multi) != len(shape):
                raise ValueError("index %r has wrong arity for shape %r" % (multi, shape))
            flat = multi_to_flat(multi, shape)
            if flat in seen:
                raise ValueError("duplicate entry at index %r" % (multi,))
            seen.add(flat)
            data[flat] = field.of(scalar)
        return Tensor(field, shape, tuple(data))

    def __getitem__(self, multi):
        return self.entries[multi_to_flat(multi, self.shape)]

    def flatten(self, n_out: int) -> Mat:
        """First n_out legs become the matrix rows, the rest the columns."""
        if not (0 <= n_out <= len(self.shape)):
            raise ValueError("bad output leg count")
        rows = 1
        for d in self.shape[:n_out]:
            rows *= d
        cols = 1
        for d in self.shape[n_out:]:
            cols *= d
        return Mat(self.field, rows, cols, self.entries)

    @staticmethod
    def from_mat(m: Mat, out_shape, in_shape) -> "Tensor":
        shape = tuple(out_shape) + tuple(in_shape)
        rows = 1
        for d in out_shape:
            rows *= d
        cols = 1
        for d in in_shape:
            cols *= d
        if (rows, cols) != (m.rows, m.cols):
            raise ValueError("shape does not refine the matrix")
        return Tensor(m.field, shape, m.entries)


def permute_legs(t: Tensor, perm) -> Tensor:
    """New leg i is old leg perm[i]; applying perm then its inverse is id."""
    perm = tuple(perm)
    if sorted(perm) != list(range(len(t.shape))):
        raise ValueError("not a permutation of the legs")
    shape = tuple(t.shape[p] for p in perm)
    size = len(t.entries)
    data = [t.field.zero] * size
    for flat in range(size):
        multi = flat_to_multi(flat, shape)
        old = [0] * len(perm)
        for i, p in enumerate(perm):
            old[p] = multi[i]
        data[flat] = t.entries[multi_to_flat(tuple(old), t.shape)]
    return Tensor(t.field, shape, tuple(data))
