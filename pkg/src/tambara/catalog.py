"""Named example structures: Hopf algebras, algebras, coalgebras and magmas.

Algebras are returned as MonoidStr in a chosen backend; the default is Vect.
"""

from .categories import (DgVect, Graded, LeftYD, ModQT, Obj, RightYD, Vect,
                         ComodCoQT, lincomb, qt_embed)
from .exactla import Matrix, QQ
from .hopf import (c2_triangular_r, cyclic_group, function_algebra, group_algebra,
                   group_by_name, sweedler, sweedler_r, taft, trivial_r_form)
from .omega import magma_from_monoid
from .structures import make_comonoid, make_monoid


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------- structure constants

def _mult_table(field, n, prod):
    """prod(i, j) -> {k: c}; returns the n x n^2 multiplication matrix."""
    m = Matrix.zeros(field, n, n * n)
    for i in range(n):
        for j in range(n):
            for k, c in prod(i, j).items():
                m.a[k, i * n + j] = field(m.a[k, i * n + j] + field(c))
    return m


def _vec(field, n, coeffs):
    v = Matrix.zeros(field, n, 1)
    for k, c in coeffs.items():
        v.a[k, 0] = field(c)
    return v


def truncated_poly_tables(field, n):
    """k[x]/(x^n), basis 1, x, ..., x^{n-1}."""
    mul = _mult_table(field, n, lambda i, j: {i + j: 1} if i + j < n else {})
    return mul, _vec(field, n, {0: 1})


def matrix_algebra_tables(field, n):
    """M_n with basis E_ij at index i*n + j."""
    def prod(s, t):
        i, j = divmod(s, n)
        k, l = divmod(t, n)
        return {i * n + l: 1} if j == k else {}
    return _mult_table(field, n * n, prod), _vec(field, n * n, {i * n + i: 1 for i in range(n)})


def kxk_tables(field):
    """k x k with orthogonal idempotents e1, e2."""
    mul = _mult_table(field, 2, lambda i, j: {i: 1} if i == j else {})
    return mul, _vec(field, 2, {0: 1, 1: 1})


# ---------------------------------------------------------------- algebras in backends

def _carrier(cat, name, dim):
    """A carrier object of dimension dim on which the named algebra lives."""
    if isinstance(cat, Vect):
        return cat.obj(dim)
    if isinstance(cat, Graded):
        if name == "dual_numbers":
            return cat.obj((0, 1 % cat.group.order))
        if name == "truncated_poly":
            # x of degree g in a cyclic group of order dividing the exponent
            return cat.obj(tuple(k % cat.group.order for k in range(dim)))
        return cat.obj((0,) * dim)
    if isinstance(cat, DgVect):
        if name == "dual_numbers":
            # eps odd with d eps = 1
            return cat.obj((0, 1), [[0, 1], [0, 0]])
        return cat.obj((0,) * dim)
    if isinstance(cat, (LeftYD, RightYD, ModQT)):
        return _yd_dual_numbers(cat) if name == "dual_numbers" else _trivial_h(cat, dim)
    if isinstance(cat, ComodCoQT):
        return _comod_dual_numbers(cat) if name == "dual_numbers" else _trivial_h(cat, dim)
    raise CatalogError(f"no carrier for {name} in {cat!r}")


def _trivial_h(cat, dim):
    """dim copies of the unit object."""
    H, F = cat.H, cat.field
    act = tuple(Matrix.identity(F, dim).scale(H.eps(h)) for h in range(H.dim))
    coact = tuple(Matrix.identity(F, dim).scale(H.unit.a[h, 0]) for h in range(H.dim))
    if isinstance(cat, ModQT):
        return Obj(cat, dim, act=act)
    if isinstance(cat, ComodCoQT):
        return Obj(cat, dim, coact=coact)
    return Obj(cat, dim, act=act, coact=coact)


def _grouplike_sign_index(H):
    """Index of a group-like g of order 2 with eps-compatible sign action, if any."""
    for k, name in enumerate(H.basis_names):
        if name == "g":
            return k
    raise CatalogError(f"{H.name} has no basis element named g")


def _h4_module_dual_numbers(H, lam):
    """k[eps] as an H-module algebra: g eps = -eps, x eps = lam (only for H4/kC2)."""
    F = H.field
    _grouplike_sign_index(H)  # raises unless H has a group-like g
    act = []
    for h, name in enumerate(H.basis_names):
        if name in ("1", "e"):
            m = [[1, 0], [0, 1]]
        elif name == "g":
            m = [[1, 0], [0, -1]]
        elif name == "x":
            m = [[0, lam], [0, 0]]
        elif name == "gx":
            # g x eps = g lam = lam
            m = [[0, lam], [0, 0]]
        else:
            raise CatalogError(f"no dual-numbers action for {H.name}")
        act.append(Matrix.of(F, m))
    return tuple(act)


def _yd_dual_numbers(cat, lam=1):
    H = cat.H
    R = cat.R if isinstance(cat, ModQT) else _default_r(H)
    act = _h4_module_dual_numbers(H, lam if "x" in H.basis_names else 0)
    m = Obj(ModQT(H, R), 2, act=act)
    if isinstance(cat, ModQT):
        return Obj(cat, 2, act=act)
    y = qt_embed(m)
    if isinstance(cat, LeftYD):
        return Obj(cat, 2, act=y.act, coact=y.coact)
    # right module algebra: eps g = -eps, eps x = lam; coaction m -> R_ah m e_a (x) e_h
    F, n = H.field, H.dim
    if "x" in H.basis_names:
        L = dict(zip(H.basis_names, act))
        ract = tuple(L[nm] if nm != "gx" else L["x"] @ L["g"] for nm in H.basis_names)
    else:
        ract = act
    Rm = R.a[:, 0].reshape(n, n)
    coact = tuple(lincomb(F, 2, ract, [Rm[a, h] for a in range(n)]) for h in range(n))
    return Obj(cat, 2, act=ract, coact=coact)


def _default_r(H):
    if H.name == "H4":
        return sweedler_r(1, H.field)[1]
    if H.name == "kC2":
        return c2_triangular_r(H.field)[1]
    raise CatalogError(f"no default R-matrix for {H.name}")


def _comod_dual_numbers(cat):
    """eps spans the g-graded component of a kC2-comodule (needs basis element g)."""
    H, F = cat.H, cat.field
    g = _grouplike_sign_index(H)
    coact = []
    for h in range(H.dim):
        m = Matrix.zeros(F, 2, 2)
        if h == 0:
            m.a[0, 0] = F.one()
        if h == g:
            m.a[1, 1] = F.one()
        coact.append(m)
    return Obj(cat, 2, coact=tuple(coact))


def algebra(name, cat=None, field=QQ, **params):
    """MonoidStr for a named algebra inside cat (default Vect over field)."""
    cat = cat or Vect(field)
    F = cat.field
    if name == "dual_numbers":
        mul, unit = truncated_poly_tables(F, 2)
        dim = 2
    elif name == "truncated_poly":
        n = int(params.get("n", 3))
        if n < 1:
            raise CatalogError("truncated_poly needs n >= 1")
        mul, unit = truncated_poly_tables(F, n)
        dim = n
    elif name == "matrix_algebra":
        n = int(params.get("n", 2))
        mul, unit = matrix_algebra_tables(F, n)
        dim = n * n
    elif name == "kxk":
        mul, unit = kxk_tables(F)
        dim = 2
    elif name == "ground_field":
        mul, unit = Matrix.identity(F, 1), Matrix.identity(F, 1)
        dim = 1
    else:
        raise CatalogError(f"unknown algebra {name!r}")
    return make_monoid(_carrier(cat, name, dim), mul, unit)


# ---------------------------------------------------------------- coalgebras

def coalgebra(name, cat=None, field=QQ, **params):
    """ComonoidStr: group coalgebra, matrix coalgebra, trivial or zero coalgebra."""
    cat = cat or Vect(field)
    F = cat.field
    if name == "trivial":
        one = cat.unit()
        return make_comonoid(one, Matrix.identity(F, 1), Matrix.identity(F, 1))
    if name == "zero":
        z = _zero_obj(cat)
        return make_comonoid(z, Matrix.zeros(F, 0, 0), Matrix.zeros(F, 1, 0))
    if name == "group":
        G = group_by_name(params.get("group", "C2"))
        n = G.order
        comul = Matrix.zeros(F, n * n, n)
        for g in range(n):
            comul.a[g * n + g, g] = F.one()
        counit = Matrix.of(F, [[1] * n])
        return make_comonoid(_flat_obj(cat, n), comul, counit)
    if name == "matrix":
        n = int(params.get("n", 2))
        N = n * n
        comul = Matrix.zeros(F, N * N, N)
        counit = Matrix.zeros(F, 1, N)
        for i in range(n):
            counit.a[0, i * n + i] = F.one()
            for j in range(n):
                for k in range(n):
                    comul.a[(i * n + k) * N + k * n + j, i * n + j] = F.one()
        if isinstance(cat, Graded) and cat.group.order == 2 and n == 2:
            # e_ij in degree i - j
            X = cat.obj(tuple((i - j) % 2 for i in range(n) for j in range(n)))
        else:
            X = _flat_obj(cat, N)
        return make_comonoid(X, comul, counit)
    raise CatalogError(f"unknown coalgebra {name!r}")


def _flat_obj(cat, n):
    """n copies of the unit object."""
    if isinstance(cat, Vect):
        return cat.obj(n)
    if isinstance(cat, Graded):
        return cat.obj((0,) * n)
    if isinstance(cat, DgVect):
        return cat.obj((0,) * n)
    return _trivial_h(cat, n)


def _zero_obj(cat):
    return _flat_obj(cat, 0) if not hasattr(cat, "H") else _trivial_h(cat, 0)


# ---------------------------------------------------------------- magmas

def magma(name, cat=None, field=QQ, **params):
    """OmegaMagma view of a named algebra (signature mul/unit)."""
    return magma_from_monoid(algebra(name, cat, field, **params))


# ---------------------------------------------------------------- Hopf algebras

def hopf(name, field=QQ, **params):
    if name == "group_algebra":
        return group_algebra(params.get("group", "C2"), field)
    if name == "function_algebra":
        return function_algebra(params.get("group", "C2"), field)
    if name == "sweedler":
        return sweedler(field)
    if name == "taft":
        return taft(int(params.get("n", 2)), params.get("q", -1), field)
    raise CatalogError(f"unknown Hopf algebra {name!r}")


HOPF_NAMES = ("group_algebra", "function_algebra", "sweedler", "taft")
ALGEBRA_NAMES = ("dual_numbers", "truncated_poly", "matrix_algebra", "kxk", "ground_field")
COALGEBRA_NAMES = ("trivial", "zero", "group", "matrix")


def catalog(name, field=QQ, **params):
    """Dispatch on a catalog name; returns HopfData, MonoidStr, ComonoidStr or (H, R)."""
    if name in HOPF_NAMES:
        return hopf(name, field, **params)
    if name in ALGEBRA_NAMES:
        return algebra(name, None, field, **params)
    if name.endswith("_coalgebra") and name[:-len("_coalgebra")] in COALGEBRA_NAMES:
        return coalgebra(name[:-len("_coalgebra")], None, field, **params)
    if name == "c2_triangular_r":
        return c2_triangular_r(field)
    if name == "sweedler_r":
        return sweedler_r(params.get("alpha", 1), field)
    raise CatalogError(f"unknown catalog entry {name!r}")


def standard_entries(field=QQ):
    """(label, structure) pairs covering every catalog family."""
    out = []
    for g in ("C2", "C3", "C2xC2", "S3"):
        out.append((f"k{g}", group_algebra(g, field)))
        out.append((f"k^{g}", function_algebra(g, field)))
    out.append(("H4", sweedler(field)))
    if not field.is_rational and (field.p - 1) % 3 == 0:
        q = next(q for q in range(2, field.p) if pow(q, 3, field.p) == 1)
        out.append((f"Taft(3,{q})", taft(3, q, field)))
    out.append(("k[eps]", algebra("dual_numbers", None, field)))
    for n in (1, 2, 3, 4):
        out.append((f"k[x]/(x^{n})", algebra("truncated_poly", None, field, n=n)))
    out.append(("M2", algebra("matrix_algebra", None, field, n=2)))
    out.append(("kxk", algebra("kxk", None, field)))
    out.append(("kC3-coalgebra", coalgebra("group", None, field, group="C3")))
    out.append(("M2-coalgebra", coalgebra("matrix", None, field, n=2)))
    return out


# ---------------------------------------------------------------- backends

def backend(name, field=QQ, hopf_name=None):
    """Category instance for a backend name used by tests and the CLI."""
    name = name.replace("-", "_")
    if name == "vect":
        return Vect(field)
    if name in ("graded", "graded_c2", "super"):
        return Graded(cyclic_group(2), field, [[1, 1], [1, -1]])
    if name == "graded_c2_plain":
        return Graded(cyclic_group(2), field)
    if name in ("dg", "dgvect"):
        return DgVect(field)
    if name in ("left_yd", "right_yd"):
        H = hopf(hopf_name or "sweedler", field) if hopf_name not in ("kC2", "C2") else group_algebra("C2", field)
        return LeftYD(H) if name == "left_yd" else RightYD(H)
    if name == "mod_qt":
        H, R = (sweedler_r(1, field) if hopf_name == "sweedler" else c2_triangular_r(field))
        return ModQT(H, R)
    if name == "comod_coqt":
        H = group_algebra("C2", field)
        return ComodCoQT(H, trivial_r_form(H))
    raise CatalogError(f"unknown backend {name!r}")


BACKENDS = ("vect", "graded", "left_yd", "right_yd", "mod_qt", "comod_coqt", "dg")
