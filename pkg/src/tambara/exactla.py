"""Exact dense linear algebra over the rationals and prime fields.

Matrices wrap numpy arrays: object dtype holding gmpy2 rationals for Q, int64
residues for F_p.  Tensor bases are ordered with the left factor outer,
which is exactly what numpy.kron produces.
"""

from fractions import Fraction

import gmpy2
import numpy as np

mpq = gmpy2.mpq


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Q when p is None, otherwise F_p."""

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if not _is_prime(p):
                raise FieldError(f"{p} is not prime")
            if p > 46337:
                raise FieldError("prime too large for int64 kernels")
        self.p = p

    @property
    def is_rational(self):
        return self.p is None

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def spec(self):
        return "rational" if self.p is None else f"fp:{self.p}"

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    def __call__(self, x):
        if self.p is None:
            if isinstance(x, Fraction):
                return mpq(x.numerator, x.denominator)
            if isinstance(x, (np.integer,)):
                return mpq(int(x))
            return mpq(x)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise FieldError(f"{x} has no image in {self!r}")
            return (num * pow(den, -1, self.p)) % self.p
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, x):
        x = self(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return mpq(1) / x
        return pow(int(x), -1, self.p)

    def fmt(self, x):
        return str(self(x))

    def array(self, data):
        """Coerce nested data into a reduced numpy array of this field."""
        a = np.array(data, dtype=object)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        flat = [self(v) for v in a.ravel()]
        out = np.empty(len(flat), dtype=self.dtype)
        out[:] = flat
        return out.reshape(a.shape)

    def reduce(self, a):
        if self.p is None:
            return a
        return np.mod(a, self.p)

    def random_scalar(self, rng, lo=-3, hi=3):
        if self.p is None:
            return mpq(int(rng.integers(lo, hi + 1)))
        return int(rng.integers(0, self.p))


QQ = Field()


def GF(p):
    return Field(p)


def parse_field(spec):
    """'rational' or 'fp:<p>'."""
    if spec in (None, "rational", "Q", "QQ"):
        return QQ
    if isinstance(spec, str) and spec.startswith("fp:"):
        return Field(int(spec[3:]))
    raise FieldError(f"unknown field spec {spec!r}")


class Matrix:
    """Immutable-by-convention dense matrix over a Field."""

    lazy = False

    def __init__(self, field, a):
        self.field = field
        if a.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        self._a = a

    @property
    def a(self):
        return self._a

    # construction
    @classmethod
    def of(cls, field, rows):
        rows = list(rows)
        if len(rows) == 0:
            return cls(field, np.empty((0, 0), dtype=field.dtype))
        return cls(field, field.array(rows))

    @classmethod
    def zeros(cls, field, r, c):
        if field.is_rational:
            a = np.empty((r, c), dtype=object)
            a[...] = mpq(0)
        else:
            a = np.zeros((r, c), dtype=np.int64)
        return cls(field, a)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.a[i, i] = field.one()
        return m

    @classmethod
    def random(cls, field, rng, r, c):
        m = cls.zeros(field, r, c)
        for i in range(r):
            for j in range(c):
                m.a[i, j] = field.random_scalar(rng)
        return m

    @classmethod
    def unit_vector(cls, field, n, i):
        m = cls.zeros(field, n, 1)
        m.a[i, 0] = field.one()
        return m

    # shape
    @property
    def shape(self):
        return self._a.shape

    @property
    def rows(self):
        return self.shape[0]

    @property
    def cols(self):
        return self.shape[1]

    def _check(self, other):
        if self.field != other.field:
            raise FieldError("field mismatch")

    def _wrap(self, a):
        return Matrix(self.field, self.field.reduce(a))

    # arithmetic
    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if other.lazy:
            if self.lazy:
                return Chain.of(self, other)
            if other._cached is not None:
                return self @ other.dense()
            return other.T.apply(self.T).T
        if self.lazy:
            return self.apply(other)
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        if self.field.is_rational:
            return Matrix(self.field, _qdot(self.a, other.a))
        return self._wrap(self.a @ other.a)

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return self._wrap(self.a + other.a)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return self._wrap(self.a - other.a)

    def __neg__(self):
        return self._wrap(-self.a)

    def scale(self, s):
        return self._wrap(self.a * self.field(s))

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    @property
    def T(self):
        return Matrix(self.field, self.a.T.copy())

    def kron(self, other):
        return kron(self, other)

    def copy(self):
        return Matrix(self.field, self.a.copy())

    def dense(self):
        return self

    def __getitem__(self, idx):
        return self.a[idx]

    def col(self, j):
        return Matrix(self.field, self.a[:, j:j + 1].copy())

    def cols_of(self, idx):
        return Matrix(self.field, self.a[:, list(idx)].reshape(self.rows, len(idx)))

    def rows_of(self, idx):
        return Matrix(self.field, self.a[list(idx), :].reshape(len(idx), self.cols))

    def is_zero(self):
        return not np.any(self.a != 0)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and not np.any(self.a != other.a))

    __hash__ = None

    def nonzero_entries(self):
        rs, cs = np.nonzero(self.a != 0)
        return list(zip(rs.tolist(), cs.tolist()))

    def tolist(self):
        return [[self.field.fmt(x) for x in row] for row in self.a]

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.tolist()})"

    def hstack(self, other):
        self._check(other)
        return Matrix(self.field, np.hstack([self.a, other.a]))

    def vstack(self, other):
        self._check(other)
        return Matrix(self.field, np.vstack([self.a, other.a]))


def _qdot(A, B):
    """Object-array product, exploiting sparsity of the left factor."""
    mask = A != 0
    nnz = int(mask.sum())
    r, k = A.shape
    if nnz == 0:
        out = np.empty((r, B.shape[1]), dtype=object)
        out[...] = mpq(0)
        return out
    if nnz > 0.3 * r * k:
        return A.dot(B)
    out = np.empty((r, B.shape[1]), dtype=object)
    out[...] = mpq(0)
    rows, ks = np.nonzero(mask)
    for i, kk in zip(rows.tolist(), ks.tolist()):
        out[i] = out[i] + A[i, kk] * B[kk]
    return out


LAZY_THRESHOLD = 20000


def kron(a, b):
    a._check(b)
    r, c = a.rows * b.rows, a.cols * b.cols
    if r * c > LAZY_THRESHOLD or a.lazy or b.lazy:
        fa = a.factors if isinstance(a, Kron) else [a]
        fb = b.factors if isinstance(b, Kron) else [b]
        return Kron(a.field, fa + fb)
    if a.field.is_rational:
        return Matrix(a.field, np.kron(a.a, b.a))
    return a._wrap(np.kron(a.a, b.a))


class _Lazy(Matrix):
    """A matrix known through its action; densified on demand."""

    lazy = True

    def __init__(self, field, shape):
        self.field = field
        self._shape = shape
        self._cached = None

    @property
    def shape(self):
        return self._shape

    @property
    def a(self):
        return self.dense().a

    def dense(self):
        if self._cached is None:
            self._cached = self._densify()
        return self._cached

    def _densify(self):
        return self.apply(Matrix.identity(self.field, self.cols))


class Kron(_Lazy):
    """Kronecker product of factors, applied mode by mode."""

    def __init__(self, field, factors):
        factors = [f.dense() if f.lazy else f for f in factors]
        r = int(np.prod([f.rows for f in factors]))
        c = int(np.prod([f.cols for f in factors]))
        super().__init__(field, (r, c))
        self.factors = factors
        self._ident = [f.rows == f.cols and f == Matrix.identity(field, f.rows) for f in factors]

    @property
    def T(self):
        return Kron(self.field, [f.T for f in self.factors])

    def apply(self, X):
        if X.lazy:
            X = X.dense()
        F = self.field
        ks = [f.cols for f in self.factors]
        c = X.cols
        Y = X.a.reshape(ks + [c])
        for t, f in enumerate(self.factors):
            if self._ident[t]:
                continue
            nz = np.nonzero(f.a != 0)
            if len(nz[0]) * 4 < f.a.size and F.is_rational:
                # sparse factor (braids are permutations): slice accumulation
                Yt = np.moveaxis(Y, t, 0)
                out = np.empty((f.rows,) + Yt.shape[1:], dtype=object)
                out[...] = mpq(0)
                one = mpq(1)
                for i, j in zip(*nz):
                    s = f.a[i, j]
                    out[i] = out[i] + (Yt[j] if s == one else s * Yt[j])
                Y = np.moveaxis(out, 0, t)
            else:
                Y = np.tensordot(f.a, Y, axes=([1], [t]))
                Y = np.moveaxis(Y, 0, t)
            if not F.is_rational:
                Y = np.mod(Y, F.p)
        return Matrix(F, np.ascontiguousarray(Y).reshape(self.rows, c))

    def __matmul__(self, other):
        if isinstance(other, Kron) and len(other.factors) == len(self.factors) and all(
                f.cols == g.rows for f, g in zip(self.factors, other.factors)):
            return Kron(self.field, [f @ g for f, g in zip(self.factors, other.factors)])
        return Matrix.__matmul__(self, other)


class Chain(_Lazy):
    """Product of matrices evaluated right to left."""

    @classmethod
    def of(cls, *mats):
        fs = []
        for m in mats:
            fs.extend(m.factors if isinstance(m, Chain) else [m])
        return cls(fs[0].field, fs)

    def __init__(self, field, factors):
        super().__init__(field, (factors[0].rows, factors[-1].cols))
        self.factors = factors

    @property
    def T(self):
        return Chain(self.field, [f.T for f in reversed(self.factors)])

    def apply(self, X):
        for f in reversed(self.factors):
            X = f @ X
        return X


def kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def block_diag(field, mats):
    r = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    out = Matrix.zeros(field, r, c)
    i = j = 0
    for m in mats:
        out.a[i:i + m.rows, j:j + m.cols] = m.a
        i += m.rows
        j += m.cols
    return out


def hstack(field, mats, rows):
    if not mats:
        return Matrix.zeros(field, rows, 0)
    return Matrix(field, np.hstack([m.a for m in mats]))


def vstack(field, mats, cols):
    if not mats:
        return Matrix.zeros(field, 0, cols)
    return Matrix(field, np.vstack([m.a for m in mats]))


def rref(m):
    """Reduced row echelon form and pivot columns."""
    f = m.field
    a = m.a.copy()
    r, c = a.shape
    pivots = []
    row = 0
    for col in range(c):
        if row >= r:
            break
        nz = np.nonzero(a[row:, col] != 0)[0]
        if len(nz) == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = f.inv(a[row, col])
        a[row] = f.reduce(a[row] * inv)
        others = np.nonzero(a[:, col] != 0)[0]
        others = others[others != row]
        if len(others):
            factors = a[others, col].reshape(-1, 1)
            a[others] = f.reduce(a[others] - factors * a[row].reshape(1, -1))
        pivots.append(col)
        row += 1
    return Matrix(f, a), pivots


def rank(m):
    return len(rref(m)[1])


def kernel(m):
    """Columns spanning {v : m v = 0}, one per free variable."""
    R, piv = rref(m)
    f = m.field
    free = [j for j in range(m.cols) if j not in set(piv)]
    k = Matrix.zeros(f, m.cols, len(free))
    for t, j in enumerate(free):
        k.a[j, t] = f.one()
        for i, pc in enumerate(piv):
            k.a[pc, t] = f.reduce(-R.a[i, j])
    return k


def image(m):
    """Pivot columns of m, a basis of its column space."""
    _, piv = rref(m)
    return m.cols_of(piv)


def decompose(m):
    """(rank, kernel basis, image basis)."""
    R, piv = rref(m)
    return len(piv), kernel(m), m.cols_of(piv)


def solve(m, rhs):
    """Canonical x with m x = rhs (free variables zero) or None."""
    if m.rows != rhs.rows:
        raise ValueError("row mismatch in solve")
    f = m.field
    aug = m.hstack(rhs)
    R, piv = rref(aug)
    n = m.cols
    if any(p >= n for p in piv):
        return None
    x = Matrix.zeros(f, n, rhs.cols)
    for i, pc in enumerate(piv):
        x.a[pc, :] = R.a[i, n:]
    return x


def inverse(m):
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    x = solve(m, Matrix.identity(m.field, m.rows))
    if x is None:
        raise ZeroDivisionError("singular matrix")
    return x


def left_inverse(m):
    """Some L with L m = id, for m of full column rank."""
    x = solve(m.T, Matrix.identity(m.field, m.cols))
    if x is None:
        raise ValueError("matrix is not injective")
    return x.T


def column_space_equal(a, b):
    if a.rows != b.rows:
        return False
    ra = rank(a)
    return ra == rank(b) and ra == rank(a.hstack(b))


def contains_columns(a, b):
    """Whether span(b) lies in span(a)."""
    return rank(a) == rank(a.hstack(b))


def permutation(field, perm):
    """Matrix sending e_j to e_{perm[j]}."""
    n = len(perm)
    m = Matrix.zeros(field, n, n)
    for j, i in enumerate(perm):
        m.a[i, j] = field.one()
    return m
