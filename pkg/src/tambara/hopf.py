"""Finite-dimensional Hopf algebras in Vect, given by structure constants.

These are the base algebras H of the Yetter-Drinfeld, quasitriangular and
coquasitriangular backends.  Conventions:

    e_i e_j        = sum_k mult[k, i*dim + j] e_k
    Delta(e_h)     = sum_{a,b} comult[a*dim + b, h] e_a (x) e_b
"""

from dataclasses import dataclass, field as dc_field
from itertools import permutations


from .exactla import Matrix, QQ, inverse, kron


class HopfError(ValueError):
    pass


# ---------------------------------------------------------------- groups

@dataclass(frozen=True)
class FiniteGroup:
    name: str
    names: tuple
    table: tuple  # table[i][j] = index of g_i g_j; index 0 is the identity

    @property
    def order(self):
        return len(self.names)

    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        for j in range(self.order):
            if self.table[i][j] == 0:
                return j
        raise HopfError("group table has no inverse")

    def is_abelian(self):
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def index(self, name):
        return self.names.index(name)


def cyclic_group(n):
    names = tuple("e" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(f"C{n}", names, table)


def product_group(g1, g2):
    n1, n2 = g1.order, g2.order
    names = tuple(f"({a},{b})" if (a, b) != (g1.names[0], g2.names[0]) else "e"
                  for a in g1.names for b in g2.names)
    table = tuple(tuple(g1.mul(i // n2, j // n2) * n2 + g2.mul(i % n2, j % n2)
                        for j in range(n1 * n2)) for i in range(n1 * n2))
    return FiniteGroup(f"{g1.name}x{g2.name}", names, table)


def symmetric_group_3():
    perms = sorted(permutations(range(3)))
    # identity first
    perms.remove((0, 1, 2))
    perms = [(0, 1, 2)] + perms
    names = tuple("e" if p == (0, 1, 2) else "".join(map(str, p)) for p in perms)
    table = tuple(tuple(perms.index(tuple(p[q[k]] for k in range(3))) for q in perms)
                  for p in perms)
    return FiniteGroup("S3", names, table)


def group_by_name(name):
    name = str(name).replace("×", "x").replace("₂", "2").replace("₃", "3")
    if name == "S3":
        return symmetric_group_3()
    if name in ("C2xC2", "V4", "K4"):
        return product_group(cyclic_group(2), cyclic_group(2))
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) >= 1:
        return cyclic_group(int(name[1:]))
    raise HopfError(f"unknown group {name!r}")


# ---------------------------------------------------------------- Hopf data

@dataclass
class HopfData:
    name: str
    field: object
    dim: int
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    antipode: Matrix
    antipode_inv: Matrix
    basis_names: tuple = ()
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = self.dim
        shapes = {"mult": (n, n * n), "unit": (n, 1), "comult": (n * n, n),
                  "counit": (1, n), "antipode": (n, n), "antipode_inv": (n, n)}
        for k, s in shapes.items():
            if getattr(self, k).shape != s:
                raise HopfError(f"{k} has shape {getattr(self, k).shape}, expected {s}")
        if not self.basis_names:
            self.basis_names = tuple(f"e{i}" for i in range(n))

    # structure-constant views
    def mt(self, i, j):
        """Coefficient column of e_i e_j."""
        return self.mult.a[:, i * self.dim + j]

    def delta(self, h):
        """dim x dim array D with Delta(e_h) = sum D[a,b] e_a (x) e_b."""
        key = ("delta", h)
        if key not in self._cache:
            self._cache[key] = self.comult.a[:, h].reshape(self.dim, self.dim)
        return self._cache[key]

    def delta2(self, h):
        """dim^3 array for (Delta (x) id) Delta (e_h)."""
        key = ("delta2", h)
        if key not in self._cache:
            n = self.dim
            D = self.comult
            big = kron(D, Matrix.identity(self.field, n)) @ D.col(h)
            self._cache[key] = big.a.reshape(n, n, n)
        return self._cache[key]

    def eps(self, h):
        return self.counit.a[0, h]

    def one(self):
        return self.unit

    def e(self, i):
        return Matrix.unit_vector(self.field, self.dim, i)

    def mul_vec(self, x, y):
        return self.mult @ kron(x, y)

    def S(self, x):
        return self.antipode @ x

    def Sinv(self, x):
        return self.antipode_inv @ x

    def left_mult(self, x):
        """Matrix of y -> x y."""
        return self.mult @ kron(x, Matrix.identity(self.field, self.dim))

    def right_mult(self, x):
        return self.mult @ kron(Matrix.identity(self.field, self.dim), x)

    def tensor_square_mult(self):
        """Multiplication of H (x) H (componentwise), H^4 -> H^2."""
        n = self.dim
        sw = _swap_matrix(self.field, n, n)
        mid = kron(kron(Matrix.identity(self.field, n), sw), Matrix.identity(self.field, n))
        return kron(self.mult, self.mult) @ mid

    def is_commutative(self):
        sw = _swap_matrix(self.field, self.dim, self.dim)
        return self.mult == self.mult @ sw

    def is_cocommutative(self):
        sw = _swap_matrix(self.field, self.dim, self.dim)
        return self.comult == sw @ self.comult

    def opcop(self):
        """H^{op,cop}: reversed product and coproduct, same antipode."""
        sw = _swap_matrix(self.field, self.dim, self.dim)
        return HopfData(self.name + "^opcop", self.field, self.dim, self.mult @ sw,
                        self.unit, sw @ self.comult, self.counit, self.antipode,
                        self.antipode_inv, self.basis_names)

    def validate(self):
        """Hopf axioms in Vect; returns a list of (axiom, index tuple)."""
        from .structures import hopf_data_report
        return hopf_data_report(self)


def _swap_matrix(field, m, n):
    """Swap X (x) Y -> Y (x) X with dim X = m, dim Y = n."""
    s = Matrix.zeros(field, m * n, m * n)
    for i in range(m):
        for j in range(n):
            s.a[j * m + i, i * n + j] = field.one()
    return s


def from_tables(name, field, dim, prod, one, cop, counit, anti, basis_names=()):
    """Build HopfData from python callables on basis indices.

    prod(i, j) and anti(i) return {k: coeff}; cop(h) returns {(a, b): coeff};
    one is {k: coeff}; counit(h) is a scalar.
    """
    mult = Matrix.zeros(field, dim, dim * dim)
    for i in range(dim):
        for j in range(dim):
            for k, c in prod(i, j).items():
                mult.a[k, i * dim + j] = field(mult.a[k, i * dim + j] + field(c))
    unit = Matrix.zeros(field, dim, 1)
    for k, c in one.items():
        unit.a[k, 0] = field(c)
    comult = Matrix.zeros(field, dim * dim, dim)
    for h in range(dim):
        for (a, b), c in cop(h).items():
            comult.a[a * dim + b, h] = field(comult.a[a * dim + b, h] + field(c))
    eps = Matrix.zeros(field, 1, dim)
    for h in range(dim):
        eps.a[0, h] = field(counit(h))
    S = Matrix.zeros(field, dim, dim)
    for h in range(dim):
        for k, c in anti(h).items():
            S.a[k, h] = field(S.a[k, h] + field(c))
    try:
        Sinv = inverse(S)
    except ZeroDivisionError:
        raise HopfError(f"{name}: antipode is not invertible")
    return HopfData(name, field, dim, mult, unit, comult, eps, S, Sinv, tuple(basis_names))


def group_algebra(group, field=QQ):
    G = group if isinstance(group, FiniteGroup) else group_by_name(group)
    return from_tables(
        f"k{G.name}", field, G.order,
        prod=lambda i, j: {G.mul(i, j): 1},
        one={0: 1},
        cop=lambda h: {(h, h): 1},
        counit=lambda h: 1,
        anti=lambda h: {G.inv(h): 1},
        basis_names=G.names)


def function_algebra(group, field=QQ):
    G = group if isinstance(group, FiniteGroup) else group_by_name(group)
    n = G.order

    def cop(h):
        return {(x, y): 1 for x in range(n) for y in range(n) if G.mul(x, y) == h}

    return from_tables(
        f"k^{G.name}", field, n,
        prod=lambda i, j: {i: 1} if i == j else {},
        one={k: 1 for k in range(n)},
        cop=cop,
        counit=lambda h: 1 if h == 0 else 0,
        anti=lambda h: {G.inv(h): 1},
        basis_names=tuple(f"d_{g}" for g in G.names))


def _check_root(field, n, q):
    q = field(q)
    if n < 2:
        raise HopfError("Taft algebra needs n >= 2")
    if field.is_rational and n > 2:
        raise HopfError("over Q only n <= 2 admits a primitive n-th root of unity")
    pw = field.one()
    for k in range(1, n + 1):
        pw = field(pw * q)
        if k < n and pw == field.one():
            raise HopfError(f"q = {q} is not a primitive {n}-th root of unity")
    if pw != field.one():
        raise HopfError(f"q^{n} != 1 for q = {q}")
    return q


def taft(n, q, field=QQ):
    """Taft algebra: g^n = 1, x^n = 0, x g = q g x, Delta x = x(x)1 + g(x)x.

    Basis g^i x^j has index i*n + j.
    """
    q = _check_root(field, n, q)
    dim = n * n

    def idx(i, j):
        return (i % n) * n + j

    def prod(s, t):
        a, b = divmod(s, n)
        c, d = divmod(t, n)
        if b + d >= n:
            return {}
        return {idx(a + c, b + d): field(q) ** (b * c) if field.is_rational else pow(int(q), b * c, field.p)}

    def pmul(x, y):
        out = {}
        for s, cs in x.items():
            for t, ct in y.items():
                for k, c in prod(s, t).items():
                    out[k] = field(out.get(k, 0) + field(cs) * field(ct) * field(c))
        return {k: v for k, v in out.items() if v != 0}

    def tmul(x, y):
        out = {}
        for (s1, s2), cs in x.items():
            for (t1, t2), ct in y.items():
                for k1, c1 in prod(s1, t1).items():
                    for k2, c2 in prod(s2, t2).items():
                        key = (k1, k2)
                        out[key] = field(out.get(key, 0) + field(cs) * field(ct) * field(c1) * field(c2))
        return {k: v for k, v in out.items() if v != 0}

    dg = {(idx(1, 0), idx(1, 0)): 1}
    dx = {(idx(0, 1), idx(0, 0)): 1, (idx(1, 0), idx(0, 1)): 1}

    def cop(h):
        a, b = divmod(h, n)
        out = {(0, 0): 1}
        for _ in range(a):
            out = tmul(out, dg)
        for _ in range(b):
            out = tmul(out, dx)
        return out

    Sg = {idx(n - 1, 0): 1}
    Sx = {idx(n - 1, 1): -1}

    def anti(h):
        a, b = divmod(h, n)
        out = {0: 1}
        for _ in range(b):
            out = pmul(out, Sx)
        for _ in range(a):
            out = pmul(out, Sg)
        return out

    names = []
    for i in range(n):
        for j in range(n):
            w = ("g" if i == 1 else (f"g^{i}" if i else "")) + ("x" if j == 1 else (f"x^{j}" if j else ""))
            names.append(w or "1")
    label = "H4" if n == 2 else f"Taft({n},{q})"
    return from_tables(label, field, dim, prod, {0: 1}, cop,
                       lambda h: 1 if h % n == 0 else 0, anti, names)


def sweedler(field=QQ):
    return taft(2, -1, field)


def tensor_element(H, terms):
    """Vector in H (x) H from {(a, b): coeff}."""
    v = Matrix.zeros(H.field, H.dim * H.dim, 1)
    for (a, b), c in terms.items():
        v.a[a * H.dim + b, 0] = H.field(v.a[a * H.dim + b, 0] + H.field(c))
    return v


def c2_triangular_r(field=QQ):
    """R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) on kC2."""
    H = group_algebra(cyclic_group(2), field)
    half = field.inv(2)
    return H, tensor_element(H, {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half})


def sweedler_r(alpha=0, field=QQ):
    """Triangular R_alpha on Sweedler's H4 (basis 1, x, g, gx)."""
    H = sweedler(field)
    one, x, g, gx = 0, 1, 2, 3
    half = field.inv(2)
    a = field(alpha)
    terms = {(one, one): half, (one, g): half, (g, one): half, (g, g): -half}
    for (u, v), s in {(x, x): 1, (x, gx): -1, (gx, x): 1, (gx, gx): 1}.items():
        terms[(u, v)] = field(terms.get((u, v), 0) + s * a * half)
    return H, tensor_element(H, terms)


def trivial_r_form(H):
    """r(a, b) = eps(a) eps(b)."""
    return H.counit.T @ H.counit


def hopf_by_name(name, field=QQ, **params):
    name = str(name)
    if name == "sweedler":
        return sweedler(field)
    if name == "taft":
        return taft(int(params.get("n", 2)), params.get("q", -1), field)
    if name.startswith("k^"):
        return function_algebra(name[2:], field)
    if name.startswith("k") and len(name) > 1:
        return group_algebra(name[1:], field)
    if name == "group_algebra":
        return group_algebra(params.get("group", "C2"), field)
    if name == "function_algebra":
        return function_algebra(params.get("group", "C2"), field)
    raise HopfError(f"unknown Hopf algebra {name!r}")
