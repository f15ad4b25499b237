"""
Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Elimination is done fraction-free
on integer rows (Bareiss-style), which keeps intermediate entries as minors
of the input and avoids the gcd churn of naive Fraction elimination.

    >>> m = Matrix([[2, 4], [1, 2]])
    >>> rref(m)
    (Matrix([['1', '2']]), [0])
    >>> det(Matrix([[0, 1], [1, 0]]))
    Fraction(-1, 1)
"""

from fractions import Fraction
from math import lcm
import re

from .errors import DimensionMismatch, ParseError

Scalar = Fraction

_SCALAR_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def to_scalar(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Fraction(x)


def parse_scalar(s):
    """Parse the canonical string form "p/q" (reduced, q > 1) or "p"."""
    if not isinstance(s, str):
        raise ParseError(f"scalar must be a string, got {s!r}")
    s = s.strip()
    if not _SCALAR_RE.match(s):
        raise ParseError(f"malformed scalar {s!r}")
    x = Fraction(s)
    if str(x) != s:
        raise ParseError(f"scalar {s!r} is not in reduced form (expected {x})")
    return x


def format_scalar(x):
    return str(Fraction(x))


def vec(values):
    return tuple(to_scalar(v) for v in values)


def zero_vec(n):
    return (Fraction(0),) * n


def unit_vec(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero(u):
    return not any(u)


def lincomb(coeffs, vectors, n):
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                out[i] += c * a
    return tuple(out)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(to_scalar(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise ValueError("empty Matrix needs an explicit column count")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows in Matrix")
        self._data = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def _raw(cls, data, cols):
        # trusted constructor, entries already Fractions
        m = object.__new__(cls)
        m._data = data
        m.rows = len(data)
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, rows, cols):
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(unit_vec(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [vec(c) for c in columns]
        if not columns:
            if rows is None:
                raise ValueError("need row count for a matrix with no columns")
            return cls._raw(tuple(() for _ in range(rows)), 0)
        return cls._raw(tuple(zip(*columns)), len(columns))

    @classmethod
    def from_flat(cls, rows, cols, entries):
        entries = vec(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch("entries length != rows*cols")
        return cls._raw(tuple(entries[i * cols:(i + 1) * cols] for i in range(rows)), cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._data[i][j]
        return self._data[idx]

    def __iter__(self):
        return iter(self._data)

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def tolist(self):
        return [list(r) for r in self._data]

    def flat(self):
        return tuple(x for r in self._data for x in r)

    @property
    def T(self):
        if self.rows == 0:
            return Matrix._raw(tuple(() for _ in range(self.cols)), 0)
        return Matrix._raw(tuple(zip(*self._data)), self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        return "Matrix(%s)" % ([[format_scalar(x) for x in r] for r in self._data],)

    def __str__(self):
        return "\n".join("[" + " ".join(format_scalar(x) for x in r) + "]" for r in self._data)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._check_same(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c):
        c = to_scalar(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    __rmul__ = scale

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.columns()
            return Matrix._raw(tuple(tuple(dot(r, c) for c in ocols) for r in self._data),
                               other.cols)
        return self.apply(other)

    def apply(self, v):
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(dot(r, v) for r in self._data)

    def kron(self, other):
        data = []
        for r in self._data:
            for s in other._data:
                data.append(tuple(a * b for a in r for b in s))
        return Matrix._raw(tuple(data), self.cols * other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch("column counts differ")
        return Matrix._raw(self._data + other._data, self.cols)

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("row counts differ")
        return Matrix._raw(tuple(r + s for r, s in zip(self._data, other._data)),
                           self.cols + other.cols)

    def is_square(self):
        return self.rows == self.cols


def as_matrix(m):
    return m if isinstance(m, Matrix) else Matrix(m)


# -- fraction-free elimination -------------------------------------------

def _integer_rows(rows):
    out = []
    for r in rows:
        den = 1
        for x in r:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _ff_gauss_jordan(a, ncols):
    """In-place fraction-free Gauss-Jordan on integer rows.

    Returns (pivot_columns, final_pivot).  Pivot rows end up in a[:rank],
    each with the same diagonal value final_pivot; every entry stays a minor
    of the input, so the division by the previous pivot is exact.
    """
    nrows = len(a)
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f:
                a[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            elif i < r or any(row):
                a[i] = [(p * x) // prev for x in row]
        prev = p
        pivots.append(c)
        r += 1
    return pivots, prev


def rref(m):
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    m = as_matrix(m)
    a = _integer_rows(m._data)
    pivots, p = _ff_gauss_jordan(a, m.cols)
    rows = tuple(tuple(Fraction(x, p) for x in a[i]) for i in range(len(pivots)))
    return Matrix._raw(rows, m.cols), pivots


def rank(m):
    m = as_matrix(m)
    a = _integer_rows(m._data)
    pivots, _ = _ff_gauss_jordan(a, m.cols)
    return len(pivots)


def det(m):
    """Determinant by Bareiss elimination."""
    m = as_matrix(m)
    if not m.is_square():
        raise DimensionMismatch(f"det of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    a = []
    for r in m._data:
        den = 1
        for x in r:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        scale *= den
        a.append([x.numerator * (den // x.denominator) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale)


def inverse(m):
    """Inverse matrix, or None when singular."""
    m = as_matrix(m)
    if not m.is_square():
        raise DimensionMismatch(f"inverse of non-square {m.shape} matrix")
    n = m.rows
    aug = m.hstack(Matrix.identity(n))
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return Matrix._raw(tuple(row[n:] for row in r._data), n)


def solve(a, b):
    """Some x with a @ x == b, or None if the system is inconsistent.

    Free variables are set to zero, so the answer is the particular solution
    read off the rref of [a | b].
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"solve: a has {a.rows} rows, b has {b.rows}")
    n = a.cols
    r, pivots = rref(a.hstack(b))
    if pivots and pivots[-1] >= n:
        return None
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for t, p in enumerate(pivots):
        x[p] = list(r[t][n:])
    return Matrix._raw(tuple(tuple(row) for row in x), b.cols)


def solve_vector(a, v):
    x = solve(a, Matrix.from_columns([v], rows=len(v)))
    return None if x is None else x.column(0)


def kernel(a):
    """Subspace {x : a @ x == 0}."""
    a = as_matrix(a)
    n = a.cols
    if a.rows == 0:
        return Subspace.full(n)
    r, pivots = rref(a)
    free = [j for j in range(n) if j not in set(pivots)]
    vectors = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for t, p in enumerate(pivots):
            v[p] = -r[t][f]
        vectors.append(tuple(v))
    return Subspace(n, vectors)


def kernel_of_rows(rows, ncols, chunk=256):
    """Kernel of a tall system given as an iterable of rows.

    Rows are consumed in chunks; after each chunk the remaining unknowns are
    re-parametrised over the current solution space, so a system with many
    redundant equations never gets eliminated at full width.
    """
    basis = None  # columns spanning the current solution space
    buf = []

    def flush(basis, buf):
        if basis is None:
            return kernel(Matrix(buf, cols=ncols)).vectors
        if not basis:
            return []
        reduced = [tuple(dot(row, b) for b in basis) for row in buf]
        ker = kernel(Matrix(reduced, cols=len(basis)))
        return [lincomb(k, basis, ncols) for k in ker.vectors]

    for row in rows:
        buf.append(tuple(row))
        if len(buf) >= chunk:
            basis = flush(basis, buf)
            buf = []
            if not basis:
                return Subspace.zero(ncols)
    if buf:
        basis = flush(basis, buf)
    if basis is None:
        return Subspace.full(ncols)
    return Subspace(ncols, basis)


class Subspace:
    """Subspace of Q^n held by its canonical rref basis (one vector per row)."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, vectors=(), _rref=None):
        self.ambient_dim = ambient_dim
        if _rref is not None:
            self.basis, self.pivots = _rref
            return
        vectors = [vec(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient {ambient_dim}")
        if not vectors:
            self.basis, self.pivots = Matrix.zeros(0, ambient_dim), []
        else:
            self.basis, self.pivots = rref(Matrix._raw(tuple(vectors), ambient_dim))

    @classmethod
    def full(cls, n):
        return cls(n, _rref=(Matrix.identity(n), list(range(n))))

    @classmethod
    def zero(cls, n):
        return cls(n, _rref=(Matrix.zeros(0, n), []))

    @property
    def dim(self):
        return self.basis.rows

    @property
    def vectors(self):
        return list(self.basis._data)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dims {self.ambient_dim} and {other.ambient_dim}")

    def reduce(self, v):
        """Remainder of v after subtracting its projection along the pivots."""
        v = list(vec(v))
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        for row, p in zip(self.basis._data, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] -= c * x
        return tuple(v)

    def contains(self, v):
        return is_zero(self.reduce(v))

    def coordinates(self, v):
        """Coordinates of v in the rref basis; raises if v is not inside."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        v = vec(v)
        return tuple(v[p] for p in self.pivots)

    def contains_subspace(self, other):
        self._check(other)
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def equals(self, other):
        self._check(other)
        return self == other

    def sum(self, other):
        self._check(other)
        return Subspace(self.ambient_dim, self.vectors + other.vectors)

    __add__ = sum

    def annihilator(self):
        """Linear functionals vanishing on the subspace (as a Subspace of the dual)."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis)

    def intersection(self, other):
        self._check(other)
        cons = self.annihilator().vectors + other.annihilator().vectors
        if not cons:
            return Subspace.full(self.ambient_dim)
        return kernel(Matrix._raw(tuple(cons), self.ambient_dim))

    __and__ = intersection

    def tensor(self, other):
        """U (x) W inside Q^(m*n), index i*n + j.

        The products of rref rows are already in rref (after sorting by
        pivot), so no elimination is needed.
        """
        m, n = self.ambient_dim, other.ambient_dim
        items = []
        for r, p in zip(self.basis._data, self.pivots):
            for s, q in zip(other.basis._data, other.pivots):
                row = tuple(a * b for a in r for b in s)
                items.append((p * n + q, row))
        items.sort(key=lambda t: t[0])
        data = tuple(row for _, row in items)
        return Subspace(m * n, _rref=(Matrix._raw(data, m * n), [k for k, _ in items]))

    def image(self, m):
        """Image of the subspace under the matrix m (acting on column vectors)."""
        return Subspace(m.rows, [m.apply(v) for v in self.vectors])

    def preimage(self, m):
        """{x : m @ x in self}."""
        if m.rows != self.ambient_dim:
            raise DimensionMismatch("matrix target does not match ambient dimension")
        ann = self.annihilator()
        if ann.dim == 0:
            return Subspace.full(m.cols)
        return kernel(ann.basis @ m)


def random_int_vector(rng, n, bound):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
