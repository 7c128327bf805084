"""Seeded random objects and the identity batteries run by verify-lemmas.

Every battery takes a category and a numpy Generator and returns a BatteryResult;
runs are deterministic given the seed.
"""

from dataclasses import dataclass

import numpy as np

from .categories import (ComodCoQT, DgVect, Graded, LeftYD, ModQT, Mor, Obj, Vect,
                         alpha, braid, braid_inv, direct_sum, dual, dual_mor, ev, flat,
                         hom_space, identity, lincomb, random_mor, tensor, tensor_mor,
                         tensor_power, theta, validate_mor, validate_obj)
from .exactla import Matrix, inverse, kernel, kron, rank, solve
from .hopf import sweedler_r
from .omega import (Comeasuring, Measuring, OmegaMagma, Signature, check_comeasuring,
                    check_measuring, compose_comeasurings, nabla, vee)
from .structures import MonoidStr, dual_comonoid, make_comonoid
from .supports import check_supp_cosupp_duality, is_tensor_epi, support


@dataclass
class BatteryResult:
    name: str
    trials: int = 0
    failures: int = 0
    first_failure: str = None
    skipped: str = None

    def fail(self, detail):
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = detail

    @property
    def ok(self):
        return self.failures == 0

    def line(self):
        if self.skipped:
            return f"{self.name}: skipped ({self.skipped})"
        s = f"{self.name}: {self.trials - self.failures}/{self.trials} passed"
        return s if self.ok else f"{s}; first failure: {self.first_failure}"


# ---------------------------------------------------------------- random objects

def _h4_left_module(F, kind, lam):
    """Left H4-module matrices for the basis (1, x, g, gx)."""
    if kind == "trivial":
        m = {"1": [[1]], "x": [[0]], "g": [[1]], "gx": [[0]]}
    elif kind == "sign":
        m = {"1": [[1]], "x": [[0]], "g": [[-1]], "gx": [[0]]}
    else:
        m = {"1": [[1, 0], [0, 1]], "x": [[0, lam], [0, 0]],
             "g": [[1, 0], [0, -1]], "gx": [[0, lam], [0, 0]]}
    return m


def _kc2_module(F, sign):
    return {"e": [[1]], "g": [[sign]]}


def atoms(cat, rng=None):
    """Small indecomposable-ish objects of the backend, dims <= 2 (cached per category)."""
    cached = cat.__dict__.get("_atoms")
    if cached is None:
        cached = cat._atoms = _atoms(cat)
    return cached


def _atoms(cat):
    F = cat.field
    if isinstance(cat, Vect):
        return [cat.obj(1)]
    if isinstance(cat, Graded):
        return [cat.obj((g,)) for g in range(cat.group.order)]
    if isinstance(cat, DgVect):
        out = [cat.obj((k,)) for k in (-1, 0, 1, 2)]
        out += [cat.obj((k, k - 1), [[0, 0], [1, 0]]) for k in (0, 1)]
        return out
    H = cat.H
    names = H.basis_names
    if isinstance(cat, ComodCoQT):
        out = []
        for deg in range(H.dim):
            co = tuple(Matrix.of(F, [[1 if h == deg else 0]]) for h in range(H.dim))
            out.append(Obj(cat, 1, coact=co))
        return out
    if "x" in names:
        mods = [_h4_left_module(F, k, lam) for k, lam in
                (("trivial", 0), ("sign", 0), ("two", 1), ("two", 2))]
    else:
        mods = [_kc2_module(F, s) for s in (1, -1)]
    acts = [tuple(Matrix.of(F, m[nm]) for nm in names) for m in mods]
    if isinstance(cat, ModQT):
        return [Obj(cat, a[0].rows, act=a) for a in acts]
    out = []
    if "x" in names:
        rs = [sweedler_r(al, F)[1] for al in (1, 3)]
    else:
        from .hopf import c2_triangular_r
        rs = [c2_triangular_r(F)[1], _one_r(H)]
    for R in rs:
        Rm = R.a[:, 0].reshape(H.dim, H.dim)
        for a in acts:
            n = a[0].rows
            if isinstance(cat, LeftYD):
                co = tuple(lincomb(F, n, a, [Rm[b, h] for b in range(H.dim)]) for h in range(H.dim))
                x = Obj(cat, n, act=a, coact=co)
            else:
                if "x" in names:
                    L = dict(zip(names, a))
                    ra = tuple(L[nm] if nm != "gx" else L["x"] @ L["g"] for nm in names)
                else:
                    ra = a
                co = tuple(lincomb(F, n, ra, [Rm[b, h] for b in range(H.dim)]) for h in range(H.dim))
                x = Obj(cat, n, act=ra, coact=co)
            if not validate_obj(x):
                out.append(x)
    return out


def _one_r(H):
    v = Matrix.zeros(H.field, H.dim * H.dim, 1)
    v.a[0, 0] = H.field(1)
    return v


def random_invertible(F, n, rng):
    while True:
        P = Matrix.zeros(F, n, n)
        for i in range(n):
            for j in range(n):
                P.a[i, j] = F.random_scalar(rng)
        if rank(P) == n:
            return P


def change_basis(x, rng, with_matrix=False):
    """Transport x along a random structure-compatible basis change."""
    F = x.cat.field
    n = x.dim
    if n == 0 or isinstance(x.cat, Vect):
        return (x, Matrix.identity(F, n)) if with_matrix else x
    if x.degrees is not None:
        P = Matrix.zeros(F, n, n)
        for deg in sorted(set(x.degrees)):
            idx = [i for i, k in enumerate(x.degrees) if k == deg]
            B = random_invertible(F, len(idx), rng)
            for a, i in enumerate(idx):
                for b, j in enumerate(idx):
                    P.a[i, j] = B.a[a, b]
    else:
        P = random_invertible(F, n, rng)
    Pi = inverse(P)
    conj = (lambda ms: None if ms is None else tuple(P @ m @ Pi for m in ms))
    d = None if x.d is None else P @ x.d @ Pi
    y = Obj(x.cat, n, degrees=x.degrees, act=conj(x.act), coact=conj(x.coact), d=d)
    return (y, P) if with_matrix else y


def random_object(cat, rng, max_dim=3, min_dim=1, with_parts=False):
    """Direct sum of random atoms, then a random basis change."""
    ats = atoms(cat, rng)
    while True:
        parts, dim = [], 0
        target = int(rng.integers(min_dim, max_dim + 1))
        while dim < target:
            cand = [a for a in ats if a.dim + dim <= max_dim]
            if not cand:
                break
            a = cand[int(rng.integers(len(cand)))]
            parts.append(a)
            dim += a.dim
        if dim >= min_dim:
            break
    x = parts[0]
    for p in parts[1:]:
        x = direct_sum(x, p)
    if with_parts:
        return x, parts
    return change_basis(x, rng)


# ---------------------------------------------------------------- random magmas

MAGMA_SIG = Signature.of(("m", 2, 1), ("u", 1, 1), ("z", 0, 1))


def _euler(D, s, F, n):
    """Weight derivation on A^{(x)s}."""
    if s == 0:
        return Matrix.zeros(F, 1, 1)
    out = Matrix.zeros(F, n ** s, n ** s)
    for k in range(s):
        m = Matrix.identity(F, 1)
        for j in range(s):
            m = kron(m, D if j == k else Matrix.identity(F, n))
        out = out + m
    return out


def weighted_carrier(cat, rng, max_dim=3):
    """(A, D): random object with a weight derivation D commuting with its structure."""
    x, parts = random_object(cat, rng, max_dim, with_parts=True)
    F = cat.field
    ws = []
    for p in parts:
        ws += [int(rng.integers(0, 3))] * p.dim
    D = Matrix.zeros(F, x.dim, x.dim)
    for i, w in enumerate(ws):
        D.a[i, i] = F(w)
    y, P = change_basis(x, rng, with_matrix=True)
    return y, P @ D @ inverse(P), ws


def random_weighted_ops(A, D, rng, sig=MAGMA_SIG):
    """Random weight-homogeneous backend morphisms, one per operation."""
    F = A.cat.field
    n = A.dim
    mats = {}
    for name, s, t in sig.ops:
        src, dst = tensor_power(A, s), tensor_power(A, t)
        basis = hom_space(src, dst)
        Ds, Dt = _euler(D, s, F, n), _euler(D, t, F, n)
        if basis:
            cols = [Matrix(F, (Dt @ b.mat - b.mat @ Ds).a.reshape(-1, 1)) for b in basis]
            K = kernel(Matrix(F, np.hstack([c.a for c in cols])))
            m = Matrix.zeros(F, dst.dim, src.dim)
            for k in range(K.cols):
                c = F.random_scalar(rng)
                for j, b in enumerate(basis):
                    if K.a[j, k] != 0:
                        m = m + b.mat.scale(F(c * K.a[j, k]))
        else:
            m = Matrix.zeros(F, dst.dim, src.dim)
        mats[name] = Mor(src, dst, m)
    return OmegaMagma(A, sig, mats)


def random_automorphism(A, rng):
    basis = hom_space(A, A)
    while True:
        f = random_mor(A, A, rng, basis)
        if rank(f.mat) == A.dim:
            return f


def transport(a, f):
    """Magma structure on the same carrier transported along an automorphism f."""
    fi = Mor(a.carrier, a.carrier, inverse(f.mat))
    ops = {}
    for name, s, t in a.signature.ops:
        ops[name] = (tensor_power_mor(f, t) @ a.op(name)) @ tensor_power_mor(fi, s)
    return OmegaMagma(a.carrier, a.signature, ops)


def tensor_power_mor(f, n):
    out = identity(f.src.cat.unit())
    for _ in range(n):
        out = tensor_mor(out, f)
    return out


def flat_comonoid(cat, kind):
    """Coalgebras on copies of the unit: group-likes or (1*, eps*) dual numbers dual."""
    from .catalog import coalgebra, _flat_obj
    F = cat.field
    if kind in ("C2", "C3"):
        return coalgebra("group", cat, F, group=kind)
    comul = Matrix.zeros(F, 4, 2)
    comul.a[0, 0] = F(1)
    comul.a[1, 1] = F(1)
    comul.a[2, 1] = F(1)
    counit = Matrix.of(F, [[1, 0]])
    return make_comonoid(_flat_obj(cat, 2), comul, counit)


def symmetric_measuring(a, D, ws, kind, rng):
    """A measuring P (x) A -> B built from the weight symmetry of a.

    Group-likes act by weight characters, the primitive of the dual-numbers
    coalgebra acts by the weight derivation; B is a transport of A.
    """
    A = a.carrier
    F = A.cat.field
    P = flat_comonoid(A.cat, kind)
    f = random_automorphism(A, rng)
    b = transport(a, f)
    n = A.dim
    # the weight operator is diagonalizable with the eigenvalues ws; the character
    # zeta^w is a polynomial in D
    if kind in ("C2", "C3"):
        order = 2 if kind == "C2" else 3
        zeta = F(-1) if order == 2 else _cube_root(F)
        blocks = [_char_poly_eval(D, ws, zeta, g, F) for g in range(order)]
    else:
        blocks = [Matrix.identity(F, n), D]
    psi = Matrix(F, np.hstack([(f.mat @ m).a for m in blocks]))
    ms = Measuring(P, Mor(tensor(P.carrier, A), A, psi), a, b)
    ms.moved = f.mat
    return ms


def _cube_root(F):
    if F.is_rational:
        raise ValueError("no primitive cube root of unity in Q")
    for z in range(2, F.p):
        if pow(z, 3, F.p) == 1:
            return F(z)
    raise ValueError(f"no primitive cube root of unity mod {F.p}")


def _char_poly_eval(D, ws, zeta, g, F):
    """sigma_g = zeta^{g w} on the w-eigenspace of D, as a polynomial in D."""
    n = D.rows
    vals = sorted(set(ws))
    out = Matrix.zeros(F, n, n)
    for w in vals:
        # Lagrange projector onto the w-eigenspace
        proj = Matrix.identity(F, n)
        for v in vals:
            if v != w:
                proj = proj @ (D - Matrix.identity(F, n).scale(F(v))).scale(F.inv(F(w - v)))
        out = out + proj.scale(F(zeta ** (g * w)))
    return out


# ---------------------------------------------------------------- comeasuring samplers

def tensor_algebra_of(B, Q):
    """Braided tensor product algebra B (x) Q as (mul, unit) matrices."""
    X, Y = B.carrier, Q.carrier
    mid = kron(kron(identity(X).mat, braid(Y, X).mat), identity(Y).mat)
    mul = kron(B.mul.mat, Q.mul.mat) @ mid
    unit = kron(B.unit.mat, Q.unit.mat)
    return mul, unit


def _is_dual_numbers(a):
    m = a.op("mul").mat
    u = a.op("unit").mat
    return (a.carrier.dim == 2 and u.a[0, 0] == 1 and u.a[1, 0] == 0
            and m.a[0, 3] == 0 and m.a[1, 3] == 0)


def _is_kxk(a):
    m = a.op("mul").mat
    u = a.op("unit").mat
    return (a.carrier.dim == 2 and u.a[0, 0] == 1 and u.a[1, 0] == 1
            and m.a[0, 0] == 1 and m.a[1, 3] == 1 and m.a[:, 1].tolist() == [0, 0])


def _units(T, F, rng, mul, unit, count):
    """Random invertible backend elements 1 -> T, together with inverses."""
    basis = hom_space(T.cat.unit(), T)
    out = []
    tries = 0
    while len(out) < count and tries < 20 * count:
        tries += 1
        w = random_mor(T.cat.unit(), T, rng, basis).mat
        L = mul @ kron(w, Matrix.identity(F, T.dim))
        if rank(L) == T.dim:
            wi = solve(L, unit)
            out.append((w, wi))
    return out


def _conj(mul, w, z, wi):
    return mul @ kron(mul @ kron(w, z), wi)


def sample_comeasurings(a, b, Q, rng, count=3):
    """Comeasurings a -> b (x) Q for Q a monoid: algebra maps into the braided B (x) Q."""
    A, B = a.carrier, b.carrier
    F = A.cat.field
    bm = MonoidStr(B, b.op("mul"), b.op("unit"))
    mul, unit = tensor_algebra_of(bm, Q)
    T = tensor(B, Q.carrier)
    dQ = Q.carrier.dim
    out = []

    def emit(cols):
        rho = Mor(A, T, Matrix(F, np.hstack([c.a for c in cols])))
        if validate_mor(rho):
            cm = Comeasuring(Q, rho, a, b)
            if check_comeasuring(cm).ok:
                out.append(cm)

    units = _units(T, F, rng, mul, unit, count)
    qelts = [Matrix.unit_vector(F, dQ, k) for k in range(dQ)]
    qmul = Q.mul.mat
    if _is_dual_numbers(a) and _is_dual_numbers(b):
        # z = 1 (x) n + eps (x) q with z^2 = 0, z an admissible image of eps
        Z = _admissible_images(A, T, 1, 0)
        sq0 = [e for e in qelts if (qmul @ kron(e, e)).is_zero()]
        top = [k for k in range(T.dim) if k < dQ]   # the 1 (x) Q coordinates
        for t in range(count * 3):
            n = sq0[int(rng.integers(len(sq0)))] if sq0 and t % 2 else Matrix.zeros(F, dQ, 1)
            z0 = kron(Matrix.unit_vector(F, 2, 0), n)
            if Z is None or not _in_span(Z, z0):
                z0 = Matrix.zeros(F, T.dim, 1)
            rows = []
            for k in range(Z.cols if Z is not None else 0):
                e = Z.col(k)
                anti = mul @ kron(z0, e) + mul @ kron(e, z0)
                rows.append(np.vstack([e.a[top, :], anti.a]))
            z = z0
            if rows:
                K = kernel(Matrix(F, np.hstack(rows)))
                for k in range(K.cols):
                    z = z + (Z @ K.col(k)).scale(F.random_scalar(rng))
            if units and t % 3 == 2:
                w, wi = units[int(rng.integers(len(units)))]
                z = _conj(mul, w, z, wi)
            emit([unit, z])
            if len(out) >= count:
                break
    elif _is_kxk(a) and _is_kxk(b):
        idem = [Matrix.zeros(F, dQ, 1), Q.unit.mat]
        for e in qelts:
            if qmul @ kron(e, e) == e:
                idem.append(e)
                idem.append(Q.unit.mat - e)
        for t in range(count * 3):
            p0 = idem[int(rng.integers(len(idem)))]
            p1 = idem[int(rng.integers(len(idem)))]
            e = kron(Matrix.unit_vector(F, 2, 0), p0) + kron(Matrix.unit_vector(F, 2, 1), p1)
            if units and t % 2:
                w, wi = units[int(rng.integers(len(units)))]
                e = _conj(mul, w, e, wi)
            emit([e, unit - e])
            if len(out) >= count:
                break
    if not out and a.carrier == b.carrier:
        # a -> a (x) 1
        emit([kron(Matrix.unit_vector(F, A.dim, k), Q.unit.mat) for k in range(A.dim)])
    return out[:count]


def _admissible_images(A, T, col, zero_col):
    """Basis of {f[:, col] : f a backend map A -> T with f[:, zero_col] = 0}."""
    F = A.cat.field
    basis = hom_space(A, T)
    if not basis:
        return None
    M0 = Matrix(F, np.hstack([b.mat.a[:, zero_col:zero_col + 1] for b in basis]))
    K = kernel(M0)
    if K.cols == 0:
        return None
    C = Matrix(F, np.hstack([b.mat.a[:, col:col + 1] for b in basis]))
    from .exactla import image
    return image(C @ K)


def _in_span(Z, v):
    return solve(Z, v) is not None


# ---------------------------------------------------------------- batteries

def _pair(cat, rng, max_dim=3):
    return random_object(cat, rng, max_dim), random_object(cat, rng, max_dim)


def battery_braid(cat, rng, trials):
    inv = BatteryResult("braid-inverse")
    nat = BatteryResult("braid-naturality")
    sym = BatteryResult("braid-symmetric")
    for t in range(trials):
        x, y = _pair(cat, rng)
        c = braid(x, y)
        inv.trials += 1
        if braid_inv(x, y).mat @ c.mat != identity(tensor(x, y)).mat:
            inv.fail(f"trial {t}")
        x2, y2 = random_object(cat, rng), random_object(cat, rng)
        f, g = random_mor(x, x2, rng), random_mor(y, y2, rng)
        nat.trials += 1
        if braid(x2, y2).mat @ kron(f.mat, g.mat) != kron(g.mat, f.mat) @ c.mat:
            nat.fail(f"trial {t}")
        if cat.symmetric:
            sym.trials += 1
            if braid(y, x).mat @ c.mat != identity(tensor(x, y)).mat:
                sym.fail(f"trial {t}")
    if not cat.symmetric:
        sym.skipped = "backend not symmetric"
    return [inv, nat, sym]


def battery_prerigid(cat, rng, trials):
    """f-flat/ev lemma, nabla/flat and vee/dual props, cancellation, injectivity."""
    lem = BatteryResult("fflat-ev")
    nf = BatteryResult("nabla-flat")
    vd = BatteryResult("vee-dual")
    can = BatteryResult("cancellation")
    th = BatteryResult("theta-injective")
    al = BatteryResult("alpha-injective")
    F = cat.field
    for t in range(trials):
        P, U = _pair(cat, rng)
        A, B = _pair(cat, rng, 2)
        Us = dual(U)
        f = random_mor(P, Us, rng)
        fb = flat(f)
        lem.trials += 1
        lhs = ev(U).mat @ kron(f.mat, identity(U).mat)
        rhs = ev(P).mat @ braid(P, dual(P)).mat @ kron(identity(P).mat, fb.mat)
        if lhs != rhs:
            lem.fail(f"trial {t}: dims {P.dim},{U.dim}")
        rho = random_mor(A, tensor(B, U), rng)
        nf.trials += 1
        l2 = nabla(tensor_mor(identity(B), fb) @ rho, B, P)
        r2 = vee(rho, B, U) @ tensor_mor(f, identity(A))
        if l2.mat != r2.mat:
            nf.fail(f"trial {t}")
        Q = random_object(cat, rng)
        g = random_mor(U, Q, rng)
        vd.trials += 1
        l3 = vee(tensor_mor(identity(B), g) @ rho, B, Q)
        r3 = vee(rho, B, U) @ tensor_mor(dual_mor(g), identity(A))
        if l3.mat != r3.mat:
            vd.fail(f"trial {t}")
        # rho -> rho^nabla is injective on backend maps A -> B (x) P*
        can.trials += 1
        basis = hom_space(A, tensor(B, dual(P)))
        if basis:
            cols = [nabla(m, B, P).mat.a.reshape(-1, 1) for m in basis]
            if rank(Matrix(F, np.hstack(cols))) != len(basis):
                can.fail(f"trial {t}: nabla not injective")
        th.trials += 1
        if rank(theta(P, U).mat) != P.dim * U.dim:
            th.fail(f"trial {t}")
        al.trials += 1
        if rank(alpha(U).mat) != U.dim:
            al.fail(f"trial {t}")
    return [lem, nf, vd, can, th, al]


def battery_xi_zeta(cat, rng, trials):
    res = BatteryResult("xi-zeta")
    if not isinstance(cat, LeftYD):
        res.skipped = "LeftYD only"
        return [res]
    from .categories import xi_zeta
    for t in range(trials):
        x = random_object(cat, rng)
        xi, ze = xi_zeta(x)
        res.trials += 1
        I = identity(x).mat
        if xi @ ze != I or ze @ xi != I:
            res.fail(f"trial {t}")
    return [res]


def battery_transfer(cat, rng, trials):
    """Measurings and comeasurings into P* correspond under nabla, both directions."""
    res = BatteryResult("measuring-transfer")
    F = cat.field
    kinds = ["C2", "dual"] + ([] if F.is_rational else ["C3"])
    for t in range(trials):
        A, D, ws = weighted_carrier(cat, rng)
        a = random_weighted_ops(A, D, rng)
        kind = kinds[t % len(kinds)]
        ms = symmetric_measuring(a, D, ws, kind, rng)
        P = ms.P
        Ps = dual_comonoid(P)
        res.trials += 1
        from .universal import _unnabla
        rho = _unnabla(ms.psi, A, A, P.carrier)
        if rho is None:
            res.fail(f"trial {t}: nabla not invertible")
            continue
        cm = Comeasuring(Ps, Mor(A, tensor(A, Ps.carrier), rho), a, ms.B)
        mok, cok = check_measuring(ms).ok, check_comeasuring(cm).ok
        if not (mok and cok):
            res.fail(f"trial {t}: {kind} measuring={mok} comeasuring={cok}")
            continue
        # perturbed maps: being a measuring and being a comeasuring still agree
        delta = random_mor(tensor(P.carrier, A), A, rng)
        psi2 = Mor(ms.psi.src, ms.psi.dst, ms.psi.mat + delta.mat)
        rho2 = _unnabla(psi2, A, A, P.carrier)
        m2 = check_measuring(Measuring(P, psi2, a, ms.B)).ok
        c2 = check_comeasuring(Comeasuring(Ps, Mor(A, tensor(A, Ps.carrier), rho2), a, ms.B)).ok
        if m2 != c2:
            res.fail(f"trial {t}: perturbed disagreement")
    return [res]


def battery_supports(cat, rng, trials, pair_trials=20):
    dual_ = BatteryResult("supp-cosupp-duality")
    tr = BatteryResult("preorder-transfer")
    mini = BatteryResult("support-minimality")
    if not (cat.symmetric or isinstance(cat, LeftYD)):
        for r in (dual_, tr, mini):
            r.skipped = "symmetric backends and LeftYD"
        return [dual_, tr, mini]
    for t in range(trials):
        A, B = _pair(cat, rng, 2)
        Q = random_object(cat, rng)
        rho = random_mor(A, tensor(B, Q), rng)
        dual_.trials += 1
        rep = check_supp_cosupp_duality(rho, B, Q)
        if not rep.ok:
            dual_.fail(f"trial {t}: {rep.lines()[0]}")
        s = support(rho, B, Q)
        mini.trials += 1
        fact = tensor_mor(identity(B), s.sub.inclusion) @ s.abs
        if fact.mat != rho.mat or not is_tensor_epi(s.abs, B, s.sub.obj):
            mini.fail(f"trial {t}")
    for t in range(pair_trials):
        A, B = _pair(cat, rng, 2)
        Q1, Q2 = random_object(cat, rng), random_object(cat, rng)
        r1 = random_mor(A, tensor(B, Q1), rng)
        tau = random_mor(Q1, Q2, rng)
        r2 = tensor_mor(identity(B), tau) @ r1
        tr.trials += 1
        rep = check_supp_cosupp_duality(r1, B, Q1, [(r1, Q1, r2, Q2), (r2, Q2, r1, Q1)])
        if not rep.ok:
            tr.fail(f"pair {t}: {rep.lines()[0]}")
    return [dual_, tr, mini]


def _as_comeasuring(ms):
    from .universal import _unnabla
    A = ms.A.carrier
    Ps = dual_comonoid(ms.P)
    rho = _unnabla(ms.psi, A, ms.B.carrier, ms.P.carrier)
    return Comeasuring(Ps, Mor(A, tensor(ms.B.carrier, Ps.carrier), rho), ms.A, ms.B)


def battery_composition(cat, rng, trials):
    """Composite of comeasurings into monoids is a comeasuring (symmetric backends)."""
    res = BatteryResult("compose-comeasurings")
    if not cat.symmetric:
        res.skipped = "backend not symmetric"
        return [res]
    kinds = ["C2", "dual"]
    for t in range(trials):
        A, D, ws = weighted_carrier(cat, rng, 2)
        a = random_weighted_ops(A, D, rng)
        ms = symmetric_measuring(a, D, ws, kinds[t % 2], rng)
        first = _as_comeasuring(ms)
        # the transported target carries the transported weight symmetry
        D2 = ms.moved @ D @ inverse(ms.moved)
        second = _as_comeasuring(symmetric_measuring(first.B, D2, ws, kinds[(t + 1) % 2], rng))
        res.trials += 1
        if not check_comeasuring(compose_comeasurings(second, first)).ok:
            res.fail(f"trial {t}")
    return [res]


BATTERIES = {
    "braid": battery_braid,
    "prerigid": battery_prerigid,
    "xi-zeta": battery_xi_zeta,
    "transfer": battery_transfer,
    "supports": battery_supports,
    "composition": battery_composition,
}


def run_batteries(cat, seed, trials, which=None):
    """Run the named batteries with one Generator per battery, seeded from seed."""
    out = []
    for k, (name, fn) in enumerate(BATTERIES.items()):
        if which and name not in which:
            continue
        rng = np.random.default_rng([seed, k])
        out.extend(fn(cat, rng, trials))
    return out
