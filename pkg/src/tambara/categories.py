"""Computable pre-rigid braided monoidal categories of finite-dimensional objects.

Backends: Vect, Graded(G, bichar), LeftYD(H), RightYD(H), ModQT(H, R),
ComodCoQT(H, r) and DgVect.  Morphisms are matrices (dst.dim x src.dim),
tensor products are strict with left factor outer, and the internal hom
[X, Y] is the matrix space with basis E_ij (e_j -> f_i) at index i*dim X + j.
The dual X* is [X, 1], so dual bases are the row vectors e^j.

The pre-rigid maps (theta, flat, sharp, alpha, dual morphisms) are built
from ev and the braiding by the defining composites; nothing about them is
backend-specific.
"""

from collections import OrderedDict
from dataclasses import dataclass, field as dc_field

import numpy as np

from .exactla import (Matrix, block_diag, image, inverse, kernel,
                      kron, solve, vstack)
from .report import Report


class CategoryError(ValueError):
    pass


class CategoryMismatch(CategoryError):
    pass


class NotSymmetric(CategoryError):
    """Raised by operations that need a symmetric braiding."""


# ---------------------------------------------------------------- helpers

def swap_matrix(field, m, n):
    """Plain flip X (x) Y -> Y (x) X for dim X = m, dim Y = n."""
    s = Matrix.zeros(field, m * n, m * n)
    for i in range(m):
        for j in range(n):
            s.a[j * m + i, i * n + j] = field.one()
    return s


def eye(field, n):
    return Matrix.identity(field, n)


def lincomb(field, n, mats, coeffs):
    """sum_k coeffs[k] mats[k]; mats may be any indexable of n x n matrices."""
    out = Matrix.zeros(field, n, n)
    acc = out.a
    for k, c in enumerate(coeffs):
        if c != 0:
            acc = acc + mats[k].a * c
    return Matrix(field, field.reduce(acc) if not field.is_rational else acc)


def _nz(vec):
    return [(i, c) for i, c in enumerate(vec) if c != 0]


# ---------------------------------------------------------------- objects

@dataclass(eq=False)
class Obj:
    cat: object
    dim: int
    degrees: tuple = None
    act: tuple = None
    coact: tuple = None
    d: Matrix = None
    predual: object = dc_field(default=None, repr=False)

    def __eq__(self, other):
        if not isinstance(other, Obj):
            return NotImplemented
        if self.cat.key != other.cat.key or self.dim != other.dim:
            return False
        if self.degrees != other.degrees:
            return False
        for name in ("act", "coact"):
            a, b = getattr(self, name), getattr(other, name)
            if (a is None) != (b is None):
                return False
            if a is not None and any(x != y for x, y in zip(a, b)):
                return False
        if (self.d is None) != (other.d is None):
            return False
        return self.d is None or self.d == other.d

    __hash__ = None

    def __repr__(self):
        return f"Obj({self.cat.kind}, dim={self.dim})"


@dataclass(eq=False)
class Mor:
    src: Obj
    dst: Obj
    mat: Matrix

    def __post_init__(self):
        if self.mat.shape != (self.dst.dim, self.src.dim):
            raise CategoryError(
                f"matrix shape {self.mat.shape} does not fit {self.src.dim} -> {self.dst.dim}")

    def __matmul__(self, other):
        if self.src.dim != other.dst.dim:
            raise CategoryError("composition of incompatible morphisms")
        return Mor(other.src, self.dst, self.mat @ other.mat)

    def __add__(self, other):
        return Mor(self.src, self.dst, self.mat + other.mat)

    def __sub__(self, other):
        return Mor(self.src, self.dst, self.mat - other.mat)

    def scale(self, s):
        return Mor(self.src, self.dst, self.mat.scale(s))

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return self.mat == other.mat and self.src == other.src and self.dst == other.dst

    __hash__ = None

    @property
    def field(self):
        return self.mat.field

    def __repr__(self):
        return f"Mor({self.src.dim}->{self.dst.dim}, {self.mat.tolist()})"


# ---------------------------------------------------------------- base class

class Category:
    kind = "abstract"

    def __init__(self, field):
        self.field = field
        self._unit = None

    # identity of a category, used to detect mismatches
    @property
    def key(self):
        k = self.__dict__.get("_key")
        if k is None:
            k = self._key = (self.kind, self.field.p) + self._extra_key()
        return k

    def _extra_key(self):
        return ()

    def __repr__(self):
        return f"{self.kind}[{self.field!r}]"

    @property
    def symmetric(self):
        return True

    def validate(self):
        return Report()

    # per-backend hooks
    def unit(self):
        raise NotImplementedError

    def tensor(self, x, y):
        raise NotImplementedError

    def braid(self, x, y):
        raise NotImplementedError

    def braid_inv(self, x, y):
        return inverse(self.braid(x, y))

    def hom(self, x, y):
        raise NotImplementedError

    def validate_obj(self, x):
        return Report()

    def constraints(self, x, y):
        """Pairs (A, B) with f valid iff f A = B f for each pair."""
        return []

    def closure_ops(self, x):
        return [a for a, _ in self.constraints(x, x)]

    def sub(self, x, W):
        """Restrict structure to the column span of W (assumed stable)."""
        raise NotImplementedError

    def adapt_basis(self, x, W):
        return image(W) if W.cols else W

    def direct_sum(self, x, y):
        raise NotImplementedError

    def describe(self):
        return {"kind": self.kind}

    def _restrict(self, W, mats):
        out = []
        for m in mats:
            r = solve(W, m @ W)
            if r is None:
                raise CategoryError("subspace is not stable under the structure")
            out.append(r)
        return tuple(out)


# ---------------------------------------------------------------- Vect

class Vect(Category):
    kind = "vect"

    def obj(self, dim):
        return Obj(self, int(dim))

    def unit(self):
        return Obj(self, 1)

    def tensor(self, x, y):
        return Obj(self, x.dim * y.dim)

    def braid(self, x, y):
        return swap_matrix(self.field, x.dim, y.dim)

    def braid_inv(self, x, y):
        return swap_matrix(self.field, y.dim, x.dim)

    def hom(self, x, y):
        return Obj(self, x.dim * y.dim)

    def sub(self, x, W):
        return Obj(self, W.cols), W

    def direct_sum(self, x, y):
        return Obj(self, x.dim + y.dim)


# ---------------------------------------------------------------- Graded

class Graded(Category):
    """G-graded spaces, braided by c(u (x) v) = beta(|u|, |v|) v (x) u."""

    kind = "graded"

    def __init__(self, group, field, bichar=None):
        super().__init__(field)
        self.group = group
        n = group.order
        if bichar is None:
            bichar = [[1] * n for _ in range(n)]
        self.bichar = [[field(v) for v in row] for row in bichar]

    def _extra_key(self):
        return (self.group.name, tuple(tuple(r) for r in self.bichar))

    def describe(self):
        return {"kind": self.kind, "group": self.group.name,
                "bichar": [[self.field.fmt(v) for v in r] for r in self.bichar]}

    def validate(self):
        rep = Report()
        G, b, F = self.group, self.bichar, self.field
        if not G.is_abelian():
            rep.add("abelian-group")
        n = G.order
        for g in range(n):
            for h in range(n):
                if b[g][h] == 0:
                    rep.add("bichar-invertible", (g, h))
                for k in range(n):
                    if b[G.mul(g, h)][k] != F(b[g][k] * b[h][k]):
                        rep.add("bichar-left", (g, h, k))
                    if b[g][G.mul(h, k)] != F(b[g][h] * b[g][k]):
                        rep.add("bichar-right", (g, h, k))
        return rep

    @property
    def symmetric(self):
        n = self.group.order
        one = self.field.one()
        return all(self.field(self.bichar[g][h] * self.bichar[h][g]) == one
                   for g in range(n) for h in range(n))

    def _deg(self, g):
        if isinstance(g, str):
            return self.group.index(g)
        return int(g)

    def obj(self, degrees):
        return Obj(self, len(degrees), degrees=tuple(self._deg(g) for g in degrees))

    def unit(self):
        return Obj(self, 1, degrees=(0,))

    def tensor(self, x, y):
        G = self.group
        return Obj(self, x.dim * y.dim,
                   degrees=tuple(G.mul(a, b) for a in x.degrees for b in y.degrees))

    def braid(self, x, y):
        F = self.field
        m, n = x.dim, y.dim
        s = Matrix.zeros(F, m * n, m * n)
        for i in range(m):
            for j in range(n):
                s.a[j * m + i, i * n + j] = self.bichar[x.degrees[i]][y.degrees[j]]
        return s

    def hom(self, x, y):
        G = self.group
        return Obj(self, x.dim * y.dim,
                   degrees=tuple(G.mul(b, G.inv(a)) for b in y.degrees for a in x.degrees))

    def projection(self, x, g):
        P = Matrix.zeros(self.field, x.dim, x.dim)
        for i, h in enumerate(x.degrees):
            if h == g:
                P.a[i, i] = self.field.one()
        return P

    def validate_obj(self, x):
        rep = Report()
        if x.degrees is None or len(x.degrees) != x.dim:
            rep.add("degree-count", (x.dim,))
            return rep
        for i, g in enumerate(x.degrees):
            if not 0 <= g < self.group.order:
                rep.add("degree-range", (i,))
        return rep

    def constraints(self, x, y):
        return [(self.projection(x, g), self.projection(y, g)) for g in range(self.group.order)]

    def adapt_basis(self, x, W):
        cols = []
        for g in range(self.group.order):
            B = image(self.projection(x, g) @ W) if W.cols else W
            cols.append(B)
        return Matrix(self.field, np.hstack([c.a for c in cols])) if cols else W

    def sub(self, x, W):
        W = self.adapt_basis(x, W)
        degs = []
        for j in range(W.cols):
            nz = [i for i in range(x.dim) if W.a[i, j] != 0]
            degs.append(x.degrees[nz[0]])
        return Obj(self, W.cols, degrees=tuple(degs)), W

    def direct_sum(self, x, y):
        return Obj(self, x.dim + y.dim, degrees=x.degrees + y.degrees)


# ---------------------------------------------------------------- DgVect

class DgVect(Category):
    """Chain complexes (d of degree -1) with the Koszul symmetry."""

    kind = "dg"

    def obj(self, degrees, d=None):
        degrees = tuple(int(k) for k in degrees)
        n = len(degrees)
        if d is None:
            d = Matrix.zeros(self.field, n, n)
        elif not isinstance(d, Matrix):
            d = Matrix.of(self.field, d) if n else Matrix.zeros(self.field, 0, 0)
        return Obj(self, n, degrees=degrees, d=d)

    def unit(self):
        return Obj(self, 1, degrees=(0,), d=Matrix.zeros(self.field, 1, 1))

    def signs(self, x):
        D = Matrix.zeros(self.field, x.dim, x.dim)
        for i, k in enumerate(x.degrees):
            D.a[i, i] = self.field(-1 if k % 2 else 1)
        return D

    def tensor(self, x, y):
        F = self.field
        d = kron(x.d, eye(F, y.dim)) + kron(self.signs(x), y.d)
        return Obj(self, x.dim * y.dim,
                   degrees=tuple(a + b for a in x.degrees for b in y.degrees), d=d)

    def braid(self, x, y):
        F = self.field
        m, n = x.dim, y.dim
        s = Matrix.zeros(F, m * n, m * n)
        for i in range(m):
            for j in range(n):
                s.a[j * m + i, i * n + j] = F(-1 if (x.degrees[i] * y.degrees[j]) % 2 else 1)
        return s

    def braid_inv(self, x, y):
        return self.braid(y, x)

    def hom(self, x, y):
        F = self.field
        degs = tuple(b - a for b in y.degrees for a in x.degrees)
        sg = Matrix.zeros(F, len(degs), len(degs))
        for i, k in enumerate(degs):
            sg.a[i, i] = F(-1 if k % 2 else 1)
        # d f = d_Y f - (-1)^{|f|} f d_X on row-major vec(f)
        d = kron(y.d, eye(F, x.dim)) - kron(eye(F, y.dim), x.d.T) @ sg
        return Obj(self, len(degs), degrees=degs, d=d)

    def projection(self, x, k):
        P = Matrix.zeros(self.field, x.dim, x.dim)
        for i, h in enumerate(x.degrees):
            if h == k:
                P.a[i, i] = self.field.one()
        return P

    def validate_obj(self, x):
        rep = Report()
        if x.degrees is None or len(x.degrees) != x.dim or x.d is None or x.d.shape != (x.dim, x.dim):
            rep.add("malformed", (x.dim,))
            return rep
        for i, j in x.d.nonzero_entries():
            if x.degrees[i] != x.degrees[j] - 1:
                rep.add("d-degree", (i, j))
        for i, j in (x.d @ x.d).nonzero_entries():
            rep.add("d-squared", (i, j))
        return rep

    def constraints(self, x, y):
        ks = sorted(set(x.degrees) | set(y.degrees))
        pairs = [(self.projection(x, k), self.projection(y, k)) for k in ks]
        pairs.append((x.d, y.d))
        return pairs

    def closure_ops(self, x):
        return [self.projection(x, k) for k in sorted(set(x.degrees))] + [x.d]

    def adapt_basis(self, x, W):
        cols = [image(self.projection(x, k) @ W) for k in sorted(set(x.degrees))] if W.cols else []
        return Matrix(self.field, np.hstack([c.a for c in cols])) if cols else W

    def sub(self, x, W):
        W = self.adapt_basis(x, W)
        degs = []
        for j in range(W.cols):
            nz = [i for i in range(x.dim) if W.a[i, j] != 0]
            degs.append(x.degrees[nz[0]])
        (d,) = self._restrict(W, [x.d]) if W.cols else (Matrix.zeros(self.field, 0, 0),)
        return Obj(self, W.cols, degrees=tuple(degs), d=d), W

    def direct_sum(self, x, y):
        return Obj(self, x.dim + y.dim, degrees=x.degrees + y.degrees,
                   d=block_diag(self.field, [x.d, y.d]))


# ---------------------------------------------------------------- H-based

class _HBased(Category):
    """Shared bookkeeping for categories built on a Hopf algebra H."""

    @property
    def symmetric(self):
        # Yetter-Drinfeld braidings are not symmetric unless H is trivial
        return self.H.dim == 1

    def __init__(self, H):
        super().__init__(H.field)
        self.H = H
        n = H.dim
        # structure-constant arrays as nested python lists of nonzeros
        self._mt = [[_nz(H.mult.a[:, i * n + j]) for j in range(n)] for i in range(n)]
        self._dt = [[(a, b, H.comult.a[a * n + b, h]) for a in range(n) for b in range(n)
                     if H.comult.a[a * n + b, h] != 0] for h in range(n)]

    def _extra_key(self):
        H = self.H
        return (H.name, str(H.mult.tolist()), str(H.comult.tolist()))

    def describe(self):
        return {"kind": self.kind, "hopf": self.H.name}

    def at(self, mats, vec):
        """Evaluate structure matrices at an element of H given as a column."""
        n = mats[0].rows
        return lincomb(self.field, n, mats, vec.a[:, 0])

    def _coeff_arrays(self):
        arr = self.__dict__.get("_coeffs")
        if arr is None:
            H = self.H
            # dt[h, a*n+b] = Delta(e_h)_{ab};  mt[h, a*n+b] = (e_a e_b)_h
            dt = H.comult.a.T.copy()
            mt = H.mult.a.copy()
            arr = self._coeffs = (dt, mt)
        return arr

    def _pair_krons(self, A, B, dx, dy):
        n = self.H.dim
        a = np.stack([m.a for m in A])
        b = np.stack([m.a for m in B])
        K = a[:, None, :, None, :, None] * b[None, :, None, :, None, :]
        return K.reshape(n * n, (dx * dy) ** 2)

    def _combine(self, coeffs, K, d):
        F = self.field
        out = F.reduce(coeffs @ K)
        return tuple(Matrix(F, out[h].reshape(d, d).copy()) for h in range(out.shape[0]))

    def _tensor_act(self, A, B, dx, dy):
        """Diagonal action via Delta: sum Delta[h]_ab A_a (x) B_b."""
        if dx * dy == 0:
            return tuple(Matrix.zeros(self.field, 0, 0) for _ in range(self.H.dim))
        dt, _ = self._coeff_arrays()
        return self._combine(dt, self._pair_krons(A, B, dx, dy), dx * dy)

    def _tensor_coact(self, A, B, dx, dy):
        """Codiagonal coaction via mu: sum mu(a,b)_h A_a (x) B_b."""
        if dx * dy == 0:
            return tuple(Matrix.zeros(self.field, 0, 0) for _ in range(self.H.dim))
        _, mt = self._coeff_arrays()
        return self._combine(mt, self._pair_krons(A, B, dx, dy), dx * dy)

    def _unit_act(self):
        F = self.field
        return tuple(Matrix.of(F, [[self.H.counit.a[0, h]]]) for h in range(self.H.dim))

    def _unit_coact(self):
        F = self.field
        return tuple(Matrix.of(F, [[self.H.unit.a[h, 0]]]) for h in range(self.H.dim))

    def _module_report(self, rep, mats, right=False, tag="module"):
        H, F = self.H, self.field
        n = H.dim
        d = mats[0].rows if mats else 0
        if len(mats) != n:
            rep.add(f"{tag}-count", (len(mats),))
            return
        if self.at(mats, H.unit) != eye(F, d):
            rep.add(f"{tag}-unit")
        for a in range(n):
            for b in range(n):
                lhs = mats[b] @ mats[a] if right else mats[a] @ mats[b]
                rhs = lincomb(F, d, mats, H.mult.a[:, a * n + b])
                if lhs != rhs:
                    rep.add(f"{tag}-assoc", (a, b))

    def _comodule_report(self, rep, mats, right=False, tag="comodule"):
        """Left: C_b C_a = sum Delta[h]_ab C_h.  Right: C_a C_b = same."""
        H, F = self.H, self.field
        n = H.dim
        d = mats[0].rows if mats else 0
        if len(mats) != n:
            rep.add(f"{tag}-count", (len(mats),))
            return
        if lincomb(F, d, mats, H.counit.a[0, :]) != eye(F, d):
            rep.add(f"{tag}-counit")
        for a in range(n):
            for b in range(n):
                lhs = mats[a] @ mats[b] if right else mats[b] @ mats[a]
                rhs = lincomb(F, d, mats, H.comult.a[a * n + b, :])
                if lhs != rhs:
                    rep.add(f"{tag}-coassoc", (a, b))

    def _hom_act(self, Ax, Ay, anti, left=True):
        """Action on Hom(X, Y): f -> sum Delta[h]_ab Y_a f X(anti e_b)."""
        F, H = self.field, self.H
        n = H.dim
        Xs = [self.at(Ax, anti.col(b)) for b in range(n)]
        out = []
        dx, dy = Ax[0].rows, Ay[0].rows
        for h in range(n):
            acc = Matrix.zeros(F, dx * dy, dx * dy)
            for a, b, c in self._dt[h]:
                acc = acc + kron(Ay[a], Xs[b].T).scale(c)
            out.append(acc)
        return tuple(out)

    def _hom_coact(self, Cx, Cy, anti):
        """Coaction on Hom(X, Y): component h = sum [e_a anti(e_k)]_h Cy_a (x) Cx_k^T."""
        F, H = self.field, self.H
        n = H.dim
        dx, dy = Cx[0].rows, Cy[0].rows
        out = [Matrix.zeros(F, dx * dy, dx * dy) for _ in range(n)]
        cache = self.__dict__.setdefault("_anti_terms", {})
        akey = tuple(anti.a.ravel().tolist())
        if akey not in cache:
            cache[akey] = [[_nz((H.mult @ kron(H.e(a), anti.col(k))).a[:, 0]) for k in range(n)]
                           for a in range(n)]
        table = cache[akey]
        for a in range(n):
            for k in range(n):
                terms = table[a][k]
                if not terms:
                    continue
                m = kron(Cy[a], Cx[k].T)
                for h, c in terms:
                    out[h] = out[h] + m.scale(c)
        return tuple(out)

    def _ops(self, x):
        ops = []
        if x.act is not None:
            ops.extend(x.act)
        if x.coact is not None:
            ops.extend(x.coact)
        return ops

    def constraints(self, x, y):
        return list(zip(self._ops(x), self._ops(y)))

    def closure_ops(self, x):
        return self._ops(x)

    def sub(self, x, W):
        act = self._restrict(W, x.act) if x.act is not None else None
        coact = self._restrict(W, x.coact) if x.coact is not None else None
        return Obj(self, W.cols, act=act, coact=coact), W

    def direct_sum(self, x, y):
        F = self.field
        act = coact = None
        if x.act is not None:
            act = tuple(block_diag(F, [a, b]) for a, b in zip(x.act, y.act))
        if x.coact is not None:
            coact = tuple(block_diag(F, [a, b]) for a, b in zip(x.coact, y.coact))
        return Obj(self, x.dim + y.dim, act=act, coact=coact)

    def _mats(self, data, dim):
        F = self.field
        out = []
        for m in data:
            out.append(m if isinstance(m, Matrix) else
                       (Matrix.of(F, m) if dim else Matrix.zeros(F, 0, 0)))
        return tuple(out)


class LeftYD(_HBased):
    """Left-left Yetter-Drinfeld modules, c(m (x) n) = m_(-1) n (x) m_(0)."""

    kind = "left_yd"

    def obj(self, act, coact):
        dim = (act[0].rows if isinstance(act[0], Matrix) else len(act[0])) if act else 0
        return Obj(self, dim, act=self._mats(act, dim), coact=self._mats(coact, dim))

    def validate(self):
        rep = Report()
        H = self.H
        if H.antipode @ H.antipode_inv != eye(self.field, H.dim):
            rep.add("antipode-invertible")
        return rep

    def unit(self):
        return Obj(self, 1, act=self._unit_act(), coact=self._unit_coact())

    def tensor(self, x, y):
        return Obj(self, x.dim * y.dim,
                   act=self._tensor_act(x.act, y.act, x.dim, y.dim),
                   coact=self._tensor_coact(x.coact, y.coact, x.dim, y.dim))

    def braid(self, x, y):
        F = self.field
        acc = Matrix.zeros(F, x.dim * y.dim, x.dim * y.dim)
        for h in range(self.H.dim):
            acc = acc + kron(y.act[h], x.coact[h])
        return acc @ swap_matrix(F, x.dim, y.dim)

    def braid_inv(self, x, y):
        """c^{-1}(n (x) m) = m_(0) (x) (S^{-1} m_(-1)) n, a map Y (x) X -> X (x) Y."""
        F, H = self.field, self.H
        acc = Matrix.zeros(F, x.dim * y.dim, x.dim * y.dim)
        for h in range(H.dim):
            acc = acc + kron(x.coact[h], self.at(y.act, H.antipode_inv.col(h)))
        return acc @ swap_matrix(F, y.dim, x.dim)

    def hom(self, x, y):
        H = self.H
        return Obj(self, x.dim * y.dim,
                   act=self._hom_act(x.act, y.act, H.antipode),
                   coact=self._hom_coact(x.coact, y.coact, H.antipode_inv))

    def validate_obj(self, x):
        rep = Report()
        self._module_report(rep, x.act)
        self._comodule_report(rep, x.coact)
        if not rep.ok:
            return rep
        H, F = self.H, self.field
        n, d = H.dim, x.dim
        # delta(h m) = h1 m_(-1) S h3 (x) h2 m_(0)
        LC = [[x.act[b] @ x.coact[j] for j in range(n)] for b in range(n)]
        T = {}
        for a in range(n):
            for j in range(n):
                for c in range(n):
                    v = H.mult @ kron(H.mult @ kron(H.e(a), H.e(j)), H.antipode.col(c))
                    T[a, j, c] = v.a[:, 0]
        for xh in range(n):
            D2 = H.delta2(xh)
            rhs = [Matrix.zeros(F, d, d) for _ in range(n)]
            for a, b, c in zip(*np.nonzero(D2 != 0)):
                w = D2[a, b, c]
                for j in range(n):
                    for k, t in _nz(T[a, j, c]):
                        rhs[k] = rhs[k] + LC[b][j].scale(w * t)
            for k in range(n):
                if x.coact[k] @ x.act[xh] != rhs[k]:
                    rep.add("yd-compat", (xh, k))
        return rep


class RightYD(_HBased):
    """Right-right Yetter-Drinfeld modules, c(m (x) n) = n_(0) (x) m n_(1)."""

    kind = "right_yd"

    def obj(self, act, coact):
        dim = (act[0].rows if isinstance(act[0], Matrix) else len(act[0])) if act else 0
        return Obj(self, dim, act=self._mats(act, dim), coact=self._mats(coact, dim))

    def validate(self):
        rep = Report()
        H = self.H
        if H.antipode @ H.antipode_inv != eye(self.field, H.dim):
            rep.add("antipode-invertible")
        return rep

    def unit(self):
        return Obj(self, 1, act=self._unit_act(), coact=self._unit_coact())

    def tensor(self, x, y):
        return Obj(self, x.dim * y.dim,
                   act=self._tensor_act(x.act, y.act, x.dim, y.dim),
                   coact=self._tensor_coact(x.coact, y.coact, x.dim, y.dim))

    def braid(self, x, y):
        F = self.field
        acc = Matrix.zeros(F, x.dim * y.dim, x.dim * y.dim)
        for h in range(self.H.dim):
            acc = acc + kron(y.coact[h], x.act[h])
        return acc @ swap_matrix(F, x.dim, y.dim)

    def hom(self, x, y):
        H = self.H
        return Obj(self, x.dim * y.dim,
                   act=self._hom_act(x.act, y.act, H.antipode_inv),
                   coact=self._hom_coact(x.coact, y.coact, H.antipode))

    def validate_obj(self, x):
        rep = Report()
        self._module_report(rep, x.act, right=True)
        self._comodule_report(rep, x.coact, right=True)
        if not rep.ok:
            return rep
        H, F = self.H, self.field
        n, d = H.dim, x.dim
        # rho(m h) = m_(0) h2 (x) (S h1) m_(1) h3
        RC = [[x.act[b] @ x.coact[j] for j in range(n)] for b in range(n)]
        T = {}
        for a in range(n):
            for j in range(n):
                for c in range(n):
                    v = H.mult @ kron(H.mult @ kron(H.antipode.col(a), H.e(j)), H.e(c))
                    T[a, j, c] = v.a[:, 0]
        for xh in range(n):
            D2 = H.delta2(xh)
            rhs = [Matrix.zeros(F, d, d) for _ in range(n)]
            for a, b, c in zip(*np.nonzero(D2 != 0)):
                w = D2[a, b, c]
                for j in range(n):
                    for k, t in _nz(T[a, j, c]):
                        rhs[k] = rhs[k] + RC[b][j].scale(w * t)
            for k in range(n):
                if x.coact[k] @ x.act[xh] != rhs[k]:
                    rep.add("yd-compat", (xh, k))
        return rep


class ModQT(_HBased):
    """Left H-modules braided by c(u) = (R u)^21."""

    kind = "mod_qt"

    def __init__(self, H, R):
        super().__init__(H)
        self.R = R

    def _extra_key(self):
        return super()._extra_key() + (str(self.R.tolist()),)

    def r(self, a, b):
        return self.R.a[a * self.H.dim + b, 0]

    def obj(self, act):
        dim = (act[0].rows if isinstance(act[0], Matrix) else len(act[0])) if act else 0
        return Obj(self, dim, act=self._mats(act, dim))

    def validate(self):
        return qt_report(self.H, self.R)

    @property
    def symmetric(self):
        H, F = self.H, self.field
        sw = swap_matrix(F, H.dim, H.dim)
        prod = H.tensor_square_mult() @ kron(sw @ self.R, self.R)
        return prod == kron(H.unit, H.unit)

    def unit(self):
        return Obj(self, 1, act=self._unit_act())

    def tensor(self, x, y):
        return Obj(self, x.dim * y.dim, act=self._tensor_act(x.act, y.act, x.dim, y.dim))

    def braid(self, x, y):
        F, n = self.field, self.H.dim
        acc = Matrix.zeros(F, x.dim * y.dim, x.dim * y.dim)
        for a in range(n):
            for b in range(n):
                c = self.r(a, b)
                if c != 0:
                    acc = acc + kron(y.act[b], x.act[a]).scale(c)
        return acc @ swap_matrix(F, x.dim, y.dim)

    def hom(self, x, y):
        return Obj(self, x.dim * y.dim, act=self._hom_act(x.act, y.act, self.H.antipode))

    def validate_obj(self, x):
        rep = Report()
        self._module_report(rep, x.act)
        return rep


class ComodCoQT(_HBased):
    """Right H-comodules braided by c(m (x) n) = r(m_(1), n_(1)) n_(0) (x) m_(0)."""

    kind = "comod_coqt"

    def __init__(self, H, r):
        super().__init__(H)
        self.rform = r

    def _extra_key(self):
        return super()._extra_key() + (str(self.rform.tolist()),)

    def obj(self, coact):
        dim = (coact[0].rows if isinstance(coact[0], Matrix) else len(coact[0])) if coact else 0
        return Obj(self, dim, coact=self._mats(coact, dim))

    def validate(self):
        return coqt_report(self.H, self.rform)

    @property
    def symmetric(self):
        H, F, r = self.H, self.field, self.rform.a
        n = H.dim
        for x in range(n):
            for y in range(n):
                s = F(0)
                for x1, x2, cx in self._dt[x]:
                    for y1, y2, cy in self._dt[y]:
                        s = F(s + cx * cy * r[y1, x1] * r[x2, y2])
                if s != F(H.counit.a[0, x] * H.counit.a[0, y]):
                    return False
        return True

    def unit(self):
        return Obj(self, 1, coact=self._unit_coact())

    def tensor(self, x, y):
        return Obj(self, x.dim * y.dim, coact=self._tensor_coact(x.coact, y.coact, x.dim, y.dim))

    def braid(self, x, y):
        F, n = self.field, self.H.dim
        acc = Matrix.zeros(F, x.dim * y.dim, x.dim * y.dim)
        for a in range(n):
            for b in range(n):
                c = self.rform.a[a, b]
                if c != 0:
                    acc = acc + kron(y.coact[b], x.coact[a]).scale(c)
        return acc @ swap_matrix(F, x.dim, y.dim)

    def hom(self, x, y):
        return Obj(self, x.dim * y.dim, coact=self._hom_coact(x.coact, y.coact, self.H.antipode))

    def validate_obj(self, x):
        rep = Report()
        self._comodule_report(rep, x.coact, right=True)
        return rep


# ---------------------------------------------------------------- (co)QT axioms

def _h3(H, i, j, k):
    """Basis vector e_i (x) e_j (x) e_k of H^{(x)3} as index."""
    n = H.dim
    return (i * n + j) * n + k


def qt_report(H, R):
    """Quasitriangularity of R in H (x) H."""
    F, n = H.field, H.dim
    rep = Report()
    Rm = R.a[:, 0].reshape(n, n)
    nzR = [(a, b, Rm[a, b]) for a in range(n) for b in range(n) if Rm[a, b] != 0]
    I = eye(F, n)
    # (Delta (x) id) R = R13 R23
    lhs = kron(H.comult, I) @ R
    rhs = Matrix.zeros(F, n ** 3, 1)
    for a, b, c1 in nzR:
        for c, d, c2 in nzR:
            for k, v in _nz(H.mt(b, d)):
                rhs.a[_h3(H, a, c, k), 0] = F(rhs.a[_h3(H, a, c, k), 0] + c1 * c2 * v)
    if lhs != rhs:
        rep.add("qt-delta-left")
    # (id (x) Delta) R = R13 R12
    lhs = kron(I, H.comult) @ R
    rhs = Matrix.zeros(F, n ** 3, 1)
    for a, b, c1 in nzR:
        for c, d, c2 in nzR:
            for k, v in _nz(H.mt(a, c)):
                rhs.a[_h3(H, k, d, b), 0] = F(rhs.a[_h3(H, k, d, b), 0] + c1 * c2 * v)
    if lhs != rhs:
        rep.add("qt-delta-right")
    # Delta^op(h) R = R Delta(h)
    M2 = H.tensor_square_mult()
    sw = swap_matrix(F, n, n)
    for h in range(n):
        dh = H.comult.col(h)
        if M2 @ kron(sw @ dh, R) != M2 @ kron(R, dh):
            rep.add("qt-commute", (h,))
    # invertibility in H (x) H: solve R X = 1 (x) 1
    Lmul = M2 @ kron(R, eye(F, n * n))
    if solve(Lmul, kron(H.unit, H.unit)) is None:
        rep.add("qt-invertible")
    return rep


def coqt_report(H, r):
    """Axioms for a braiding form r on right H-comodules."""
    F, n = H.field, H.dim
    rep = Report()
    rr = r.a
    dt = [[(a, b, H.comult.a[a * n + b, h]) for a in range(n) for b in range(n)
           if H.comult.a[a * n + b, h] != 0] for h in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # r(xy, z) = r(x, z1) r(y, z2)
                lhs = F(sum((v * rr[l, k] for l, v in _nz(H.mt(i, j))), F(0)))
                rhs = F(sum((c * rr[i, a] * rr[j, b] for a, b, c in dt[k]), F(0)))
                if lhs != rhs:
                    rep.add("coqt-mult-left", (i, j, k))
                # r(x, yz) = r(x1, z) r(x2, y)
                lhs = F(sum((v * rr[i, l] for l, v in _nz(H.mt(j, k))), F(0)))
                rhs = F(sum((c * rr[a, k] * rr[b, j] for a, b, c in dt[i]), F(0)))
                if lhs != rhs:
                    rep.add("coqt-mult-right", (i, j, k))
    # r(x2, y2) y1 x1 = r(x1, y1) x2 y2
    for i in range(n):
        for j in range(n):
            lhs = Matrix.zeros(F, n, 1)
            rhs = Matrix.zeros(F, n, 1)
            for a, b, c in dt[i]:
                for p, q, e in dt[j]:
                    w1 = c * e * rr[b, q]
                    if w1 != 0:
                        lhs = lhs + H.mul_vec(H.e(p), H.e(a)).scale(w1)
                    w2 = c * e * rr[a, p]
                    if w2 != 0:
                        rhs = rhs + H.mul_vec(H.e(b), H.e(q)).scale(w2)
            if lhs != rhs:
                rep.add("coqt-commute", (i, j))
    # convolution invertibility: find s with r(x1, y1) s(x2, y2) = eps(x) eps(y)
    A = Matrix.zeros(F, n * n, n * n)
    for i in range(n):
        for j in range(n):
            for a, b, c in dt[i]:
                for p, q, e in dt[j]:
                    A.a[i * n + j, b * n + q] = F(A.a[i * n + j, b * n + q] + c * e * rr[a, p])
    target = (H.counit.T @ H.counit)
    rhs = Matrix(F, target.a.reshape(n * n, 1))
    if solve(A, rhs) is None:
        rep.add("coqt-invertible")
    return rep


# ---------------------------------------------------------------- generic API

def _same(x, y):
    if x.cat.key != y.cat.key:
        raise CategoryMismatch(f"{x.cat!r} vs {y.cat!r}")
    return x.cat


def unit_obj(cat):
    return cat.unit()


def identity(x):
    return Mor(x, x, eye(x.cat.field, x.dim))


def zero_mor(x, y):
    return Mor(x, y, Matrix.zeros(x.cat.field, y.dim, x.dim))


# objects are immutable once built, so structural results are memoized by identity;
# entries keep their arguments alive so ids cannot be recycled while cached
_MEMO = OrderedDict()
_MEMO_SIZE = 20000


def _memo(op, x, y, build):
    key = (op, id(x), id(y))
    hit = _MEMO.get(key)
    if hit is not None:
        _MEMO.move_to_end(key)
        return hit[2]
    out = build()
    _MEMO[key] = (x, y, out)
    if len(_MEMO) > _MEMO_SIZE:
        _MEMO.popitem(last=False)
    return out


def tensor(x, y):
    return _memo("tensor", x, y, lambda: _same(x, y).tensor(x, y))


def tensor_all(objs, cat=None):
    if not objs:
        return cat.unit()
    out = objs[0]
    for o in objs[1:]:
        out = tensor(out, o)
    return out


def tensor_power(x, n):
    return tensor_all([x] * n, x.cat)


def tensor_mor(f, g):
    return Mor(tensor(f.src, g.src), tensor(f.dst, g.dst), kron(f.mat, g.mat))


def tensor_mors(*fs):
    out = fs[0]
    for f in fs[1:]:
        out = tensor_mor(out, f)
    return out


def braid(x, y):
    cat = _same(x, y)
    return Mor(tensor(x, y), tensor(y, x), cat.braid(x, y))


def braid_inv(x, y):
    """Inverse of braid(x, y), a morphism Y (x) X -> X (x) Y."""
    cat = _same(x, y)
    return Mor(tensor(y, x), tensor(x, y), cat.braid_inv(x, y))


def internal_hom(x, y):
    return _memo("hom", x, y, lambda: _same(x, y).hom(x, y))


def _dual(x):
    h = x.cat.hom(x, x.cat.unit())
    h.predual = x
    return h


def dual(x):
    return _memo("dual", x, None, lambda: _dual(x))


def validate_obj(x):
    return x.cat.validate_obj(x)


def validate_mor(f):
    cat = _same(f.src, f.dst)
    for A, B in cat.constraints(f.src, f.dst):
        if f.mat @ A != B @ f.mat:
            return False
    return True


def ev(x):
    """ev_X: X* (x) X -> 1, e^j (x) e_i -> delta_ij."""
    F = x.cat.field
    m = Matrix.zeros(F, 1, x.dim * x.dim)
    for j in range(x.dim):
        m.a[0, j * x.dim + j] = F.one()
    return Mor(tensor(dual(x), x), x.cat.unit(), m)


def ev_hom(x, y):
    """ev_{X,Y}: [X, Y] (x) X -> Y."""
    F = x.cat.field
    dx, dy = x.dim, y.dim
    m = Matrix.zeros(F, dy, dy * dx * dx)
    for i in range(dy):
        for j in range(dx):
            m.a[i, (i * dx + j) * dx + j] = F.one()
    return Mor(tensor(internal_hom(x, y), x), y, m)


def curry_matrix(psi, dp, dx, dy):
    F = psi.field
    K = Matrix.zeros(F, dy * dx, dp)
    # K[i*dx + j, p] = psi[i, p*dx + j]
    a = psi.a.reshape(dy, dp, dx)
    K.a[...] = a.transpose(0, 2, 1).reshape(dy * dx, dp)
    return K


def curry(psi, p, x, y):
    """K: Mor(P (x) X, Y) -> Mor(P, [X, Y])."""
    return Mor(p, internal_hom(x, y), curry_matrix(psi.mat, p.dim, x.dim, y.dim))


def uncurry(phi, x, y):
    return ev_hom(x, y) @ tensor_mor(phi, identity(x))


def curry_dual(phi, x, y):
    """phi: X (x) Y -> 1 becomes X -> Y*."""
    out = curry(phi, x, y, x.cat.unit())
    out.dst.predual = y
    return Mor(x, dual(y), out.mat)


def dual_mor(f):
    """f*: B* -> A* for f: A -> B."""
    phi = ev(f.dst) @ tensor_mor(identity(dual(f.dst)), f)
    return curry_dual(phi, dual(f.dst), f.src)


def theta(a, b):
    """theta_{A,B}: A* (x) B* -> (A (x) B)*."""
    da, db = dual(a), dual(b)
    phi = (tensor_mor(ev(a), ev(b))
           @ tensor_mors(identity(da), braid_inv(a, db), identity(b)))
    return curry_dual(phi, tensor(da, db), tensor(a, b))


def theta_inv(a, b):
    da, db = dual(a), dual(b)
    phi = (tensor_mor(ev(a), ev(b))
           @ tensor_mors(identity(da), braid(db, a), identity(b)))
    return curry_dual(phi, tensor(da, db), tensor(a, b))


def _predual(obj, what):
    if obj.predual is None:
        raise CategoryError(f"{what}: target must be a dual object")
    return obj.predual


def sharp(f):
    """f: A -> B* gives f#: B -> A*."""
    a, b = f.src, _predual(f.dst, "sharp")
    phi = ev(b) @ tensor_mor(f, identity(b)) @ braid(b, a)
    return curry_dual(phi, b, a)


def flat(g):
    """g: B -> A* gives g_flat: A -> B*; inverse to sharp."""
    b, a = g.src, _predual(g.dst, "flat")
    phi = ev(a) @ tensor_mor(g, identity(a)) @ braid_inv(b, a)
    return curry_dual(phi, a, b)


def alpha(x):
    """alpha_X = (id_{X*}) flat: X -> X**."""
    return flat(identity(dual(x)))


def hom_space(x, y):
    """Basis (list of Mor) of backend morphisms X -> Y."""
    cat = _same(x, y)
    F = cat.field
    dx, dy = x.dim, y.dim
    blocks = []
    for A, B in cat.constraints(x, y):
        # vec(f A) - vec(B f), row-major vec
        blocks.append(kron(eye(F, dy), A.T) - kron(B, eye(F, dx)))
    if dx * dy == 0:
        return []
    if blocks:
        K = kernel(vstack(F, blocks, dx * dy))
    else:
        K = eye(F, dx * dy)
    return [Mor(x, y, Matrix(F, K.a[:, t].reshape(dy, dx).copy())) for t in range(K.cols)]


def random_mor(x, y, rng, basis=None):
    F = x.cat.field
    basis = hom_space(x, y) if basis is None else basis
    m = Matrix.zeros(F, y.dim, x.dim)
    for b in basis:
        m = m + b.mat.scale(F.random_scalar(rng))
    return Mor(x, y, m)


def solve_in_hom_space(x, y, linear_map, rhs):
    """Find a backend morphism f: X -> Y with linear_map(f) = rhs.

    linear_map takes a Matrix and returns a Matrix; returns Mor or None.
    """
    F = x.cat.field
    basis = hom_space(x, y)
    if not basis:
        return Mor(x, y, Matrix.zeros(F, y.dim, x.dim)) if rhs.is_zero() else None
    cols = [Matrix(F, linear_map(b.mat).a.reshape(-1, 1)) for b in basis]
    A = Matrix(F, np.hstack([c.a for c in cols]))
    t = solve(A, Matrix(F, rhs.a.reshape(-1, 1)))
    if t is None:
        return None
    m = Matrix.zeros(F, y.dim, x.dim)
    for k, b in enumerate(basis):
        if t.a[k, 0] != 0:
            m = m + b.mat.scale(t.a[k, 0])
    return Mor(x, y, m)


def direct_sum(x, y):
    return _same(x, y).direct_sum(x, y)


def subobject_of(x, W):
    """(Obj, inclusion Mor) for a stable subspace spanned by W's columns."""
    o, W2 = x.cat.sub(x, W)
    return o, Mor(o, x, W2)


# ---------------------------------------------------------------- embeddings

def qt_embed(m, yd_cat=None):
    """ModQT object to LeftYD via delta m = R^21 (1 (x) m)."""
    cat = m.cat
    H = cat.H
    yd = yd_cat or LeftYD(H)
    n = H.dim
    coact = tuple(lincomb(cat.field, m.dim, m.act, [cat.r(a, h) for a in range(n)])
                  for h in range(n))
    return Obj(yd, m.dim, act=m.act, coact=coact)


def coqt_embed(m, yd_cat=None):
    """ComodCoQT object to RightYD via m h = r(m_(1), h) m_(0)."""
    cat = m.cat
    H = cat.H
    yd = yd_cat or RightYD(H)
    n = H.dim
    act = tuple(lincomb(cat.field, m.dim, m.coact, [cat.rform.a[a, h] for a in range(n)])
                for h in range(n))
    return Obj(yd, m.dim, act=act, coact=m.coact)


def xi_zeta(x):
    """xi = (S^-2 m_(-1)) m_(0) and zeta = (S m_(-1)) m_(0) on a LeftYD object."""
    cat = x.cat
    if not isinstance(cat, LeftYD):
        raise CategoryMismatch("xi/zeta are defined on LeftYD objects")
    H, F = cat.H, cat.field
    Si = H.antipode_inv @ H.antipode_inv
    xi = Matrix.zeros(F, x.dim, x.dim)
    ze = Matrix.zeros(F, x.dim, x.dim)
    for h in range(H.dim):
        xi = xi + cat.at(x.act, Si.col(h)) @ x.coact[h]
        ze = ze + cat.at(x.act, H.antipode.col(h)) @ x.coact[h]
    return xi, ze


# ---------------------------------------------------------------- chain complexes as comodules

class LaurentH:
    """Hopf algebra with basis c^k v^l (k in Z, l in {0, 1}), vc = -cv, v^2 = 0.

    Elements are sparse dicts {(k, l): scalar}; tensor elements are dicts keyed by
    tuples of such pairs. Products and coproducts come from the generator relations.
    """

    def __init__(self, field):
        self.field = field

    def basis_mul(self, x, y):
        (k1, l1), (k2, l2) = x, y
        if l1 + l2 > 1:
            return None, 0
        # v c^k = (-1)^k c^k v
        return (k1 + k2, l1 + l2), (-1 if (l1 * k2) % 2 else 1)

    def mul(self, x, y):
        F = self.field
        out = {}
        for a, s in x.items():
            for b, t in y.items():
                key, sg = self.basis_mul(a, b)
                if key is not None:
                    out[key] = F(out.get(key, 0) + sg * s * t)
        return {k: v for k, v in out.items() if v != 0}

    def mul_tensor(self, x, y):
        """Componentwise product in H (x) ... (x) H (plain tensor product algebra)."""
        F = self.field
        out = {}
        for a, s in x.items():
            for b, t in y.items():
                key, sg = [], 1
                for p, q in zip(a, b):
                    m, e = self.basis_mul(p, q)
                    if m is None:
                        break
                    key.append(m)
                    sg *= e
                else:
                    key = tuple(key)
                    out[key] = F(out.get(key, 0) + sg * s * t)
        return {k: v for k, v in out.items() if v != 0}

    def c_pow(self, k):
        return {(k, 0): self.field(1)}

    def v(self):
        return {(0, 1): self.field(1)}

    def delta_basis(self, b):
        k, l = b
        F = self.field
        out = {((k, 0), (k, 0)): F(1)}
        if l:
            dv = {((1, 0), (0, 1)): F(1), ((0, 1), (0, 0)): F(1)}
            out = self.mul_tensor(out, dv)
        return out

    def delta(self, x):
        F = self.field
        out = {}
        for b, s in x.items():
            for key, t in self.delta_basis(b).items():
                out[key] = F(out.get(key, 0) + s * t)
        return {k: v for k, v in out.items() if v != 0}

    def eps(self, x):
        return self.field(sum((s for (k, l), s in x.items() if l == 0), self.field(0)))

    def antipode_basis(self, b):
        # S(c) = c^{-1}, S(v) = -c^{-1} v, S anti-multiplicative
        k, l = b
        F = self.field
        out = self.c_pow(-k)
        if l:
            out = self.mul({(-1, 1): F(-1)}, out)
        return out


@dataclass
class DgComodule:
    obj: Obj
    H: LaurentH
    coaction: dict     # basis index -> {(index, (k, l)): scalar}

    def check(self):
        """Coassociativity and counit residues as a Report."""
        rep = Report()
        H, F = self.H, self.H.field
        for a, img in self.coaction.items():
            left, right = {}, {}
            for (i, h), s in img.items():
                for (j, h2), t in self.coaction[i].items():
                    key = (j, h2, h)
                    left[key] = F(left.get(key, 0) + s * t)
                for (h1, h2), t in H.delta({h: s}).items():
                    key = (i, h1, h2)
                    right[key] = F(right.get(key, 0) + t)
            if {k: v for k, v in left.items() if v != 0} != {k: v for k, v in right.items() if v != 0}:
                rep.add("coassociativity", (a,))
            cu = {}
            for (i, h), s in img.items():
                e = H.eps({h: s})
                if e != 0:
                    cu[i] = F(cu.get(i, 0) + e)
            cu = {k: v for k, v in cu.items() if v != 0}
            if cu != {a: F(1)}:
                rep.add("counit", (a,))
        return rep

    def is_colinear(self, f, other):
        """rho_W f = (f (x) id) rho_V for a matrix f: V -> W."""
        F = self.H.field
        for a in range(self.obj.dim):
            lhs, rhs = {}, {}
            for i in range(other.obj.dim):
                c = f.a[i, a]
                if c != 0:
                    for key, t in other.coaction[i].items():
                        lhs[key] = F(lhs.get(key, 0) + c * t)
            for (j, h), t in self.coaction[a].items():
                for i in range(other.obj.dim):
                    c = f.a[i, j]
                    if c != 0:
                        rhs[(i, h)] = F(rhs.get((i, h), 0) + c * t)
            if {k: v for k, v in lhs.items() if v != 0} != {k: v for k, v in rhs.items() if v != 0}:
                return False
        return True


def dg_to_comodule(x):
    """rho(a) = a (x) c^{-m} + da (x) v c^{-m} for a of degree m."""
    if x.cat.kind != "dg":
        raise CategoryMismatch("dg_to_comodule needs a DgVect object")
    F = x.cat.field
    H = LaurentH(F)
    co = {}
    for a, m in enumerate(x.degrees):
        img = {(a, (-m, 0)): F(1)}
        vc = H.mul(H.v(), H.c_pow(-m))
        for i in range(x.dim):
            s = x.d.a[i, a]
            if s != 0:
                for h, t in vc.items():
                    img[(i, h)] = F(img.get((i, h), 0) + s * t)
        co[a] = {k: v for k, v in img.items() if v != 0}
    return DgComodule(x, H, co)


def shift_coaction(cm, by=1):
    """Right-multiply every coefficient by c^{-by}."""
    H = cm.H
    out = {}
    for a, img in cm.coaction.items():
        new = {}
        for (i, h), s in img.items():
            for h2, t in H.mul({h: s}, H.c_pow(-by)).items():
                new[(i, h2)] = t
        out[a] = new
    return out
