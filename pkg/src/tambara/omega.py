"""Omega-magmas, measurings, comeasurings and the vee/nabla correspondence."""

from dataclasses import dataclass

from .categories import (Mor, NotSymmetric, braid, dual, ev, identity, tensor,
                         tensor_mor, tensor_mors, tensor_power, theta_inv)
from .exactla import Matrix
from .report import Report, residue_report
from .structures import MonoidStr, ComonoidStr


@dataclass(frozen=True)
class Signature:
    ops: tuple  # of (name, s, t)

    def __post_init__(self):
        names = [o[0] for o in self.ops]
        if len(set(names)) != len(names):
            raise ValueError("operation names must be unique")
        for name, s, t in self.ops:
            if s < 0 or t < 0:
                raise ValueError(f"negative arity for {name}")

    @classmethod
    def of(cls, *ops):
        return cls(tuple((n, int(s), int(t)) for n, s, t in ops))

    def arity(self, name):
        for n, s, t in self.ops:
            if n == name:
                return s, t
        raise KeyError(name)

    @property
    def names(self):
        return [o[0] for o in self.ops]


ALGEBRA = Signature.of(("mul", 2, 1), ("unit", 0, 1))


@dataclass
class OmegaMagma:
    carrier: object
    signature: Signature
    ops: dict

    def __post_init__(self):
        A = self.carrier
        for name, s, t in self.signature.ops:
            f = self.ops[name]
            if f.mat.shape != (A.dim ** t, A.dim ** s):
                raise ValueError(f"operation {name} has shape {f.mat.shape}")

    @property
    def cat(self):
        return self.carrier.cat

    def op(self, name):
        return self.ops[name]


def magma_from_monoid(m):
    return OmegaMagma(m.carrier, ALGEBRA, {"mul": m.mul, "unit": m.unit})


def magma_from_matrices(carrier, signature, mats):
    A = carrier
    ops = {}
    for name, s, t in signature.ops:
        ops[name] = Mor(tensor_power(A, s), tensor_power(A, t), mats[name])
    return OmegaMagma(carrier, signature, ops)


@dataclass
class Measuring:
    P: ComonoidStr
    psi: Mor
    A: OmegaMagma
    B: OmegaMagma


@dataclass
class Comeasuring:
    Q: MonoidStr
    rho: Mor
    A: OmegaMagma
    B: OmegaMagma


# ---------------------------------------------------------------- twisted products

def meas_product(psi1, A1, psi2, A2, P):
    """(psi1 (x) psi2)(id_P (x) c_{P,A1} (x) id_A2)(Delta (x) id)."""
    Pc = P.carrier
    mid = tensor_mors(identity(Pc), braid(Pc, A1), identity(A2))
    dup = tensor_mor(P.comul, identity(tensor(A1, A2)))
    return tensor_mor(psi1, psi2) @ mid @ dup


def comeas_product(rho1, B1, Q1, rho2, B2, Q2, mu):
    """(id_{B1 B2} (x) mu)(id_B1 (x) c_{Q1,B2} (x) id_Q2)(rho1 (x) rho2)."""
    mid = tensor_mors(identity(B1), braid(Q1, B2), identity(Q2))
    return tensor_mor(identity(tensor(B1, B2)), mu) @ mid @ tensor_mor(rho1, rho2)


def twisted_power_meas(psi, m, P, A, B):
    """psi^{(x~)m}: P (x) A^m -> B^m; m = 0 gives the counit P (x) 1 -> 1."""
    if m == 0:
        one = A.cat.unit()
        return Mor(tensor(P.carrier, one), one, P.counit.mat)
    out = psi
    Am = A
    for _ in range(m - 1):
        out = meas_product(out, Am, psi, A, P)
        Am = tensor(Am, A)
    return out


def twisted_power_comeas(rho, m, Q, A, B):
    """rho^{(x~)m}: A^m -> B^m (x) Q; m = 0 gives the unit 1 -> 1 (x) Q."""
    if m == 0:
        one = A.cat.unit()
        return Mor(one, tensor(one, Q.carrier), Q.unit.mat)
    out = rho
    Bm = B
    for _ in range(m - 1):
        out = comeas_product(out, Bm, Q.carrier, rho, B, Q.carrier, Q.mul)
        Bm = tensor(Bm, B)
    return out


def check_measuring(ms):
    """Per-operation residues psi^t (id (x) w_A) - w_B psi^s."""
    rep = Report()
    rep.residues = {}
    P, A, B = ms.P, ms.A, ms.B
    for name, s, t in A.signature.ops:
        lhs = twisted_power_meas(ms.psi, t, P, A.carrier, B.carrier) @ tensor_mor(
            identity(P.carrier), A.op(name))
        rhs = B.op(name) @ twisted_power_meas(ms.psi, s, P, A.carrier, B.carrier)
        rep.residues[name] = lhs.mat - rhs.mat
        residue_report(rep, name, lhs.mat, rhs.mat)
    return rep


def comeasuring_residue(rho, Q, A, B, name):
    s, t = A.signature.arity(name)
    lhs = twisted_power_comeas(rho, t, Q, A.carrier, B.carrier) @ A.op(name)
    rhs = tensor_mor(B.op(name), identity(Q.carrier)) @ twisted_power_comeas(
        rho, s, Q, A.carrier, B.carrier)
    return lhs.mat - rhs.mat


def check_comeasuring(cm):
    """Per-operation residues rho^t w_A - (w_B (x) id_Q) rho^s."""
    rep = Report()
    rep.residues = {}
    for name in cm.A.signature.names:
        r = comeasuring_residue(cm.rho, cm.Q, cm.A, cm.B, name)
        rep.residues[name] = r
        for c in sorted({c for _, c in r.nonzero_entries()}):
            rep.add(name, (c,))
    return rep


def trivial_comeasuring(A):
    """A = A (x) 1 into the trivial monoid 1."""
    one = A.cat.unit()
    Q = MonoidStr(one, Mor(tensor(one, one), one, Matrix.identity(A.cat.field, 1)),
                  Mor(one, one, Matrix.identity(A.cat.field, 1)))
    return Comeasuring(Q, Mor(A.carrier, tensor(A.carrier, one),
                              Matrix.identity(A.cat.field, A.carrier.dim)), A, A)


def identity_measuring(A):
    one = A.cat.unit()
    P = ComonoidStr(one, Mor(one, tensor(one, one), Matrix.identity(A.cat.field, 1)),
                    Mor(one, one, Matrix.identity(A.cat.field, 1)))
    return Measuring(P, Mor(tensor(one, A.carrier), A.carrier,
                            Matrix.identity(A.cat.field, A.carrier.dim)), A, A)


# ---------------------------------------------------------------- vee / nabla

def vee(rho, B, Q):
    """rho: A -> B (x) Q gives rho^vee: Q* (x) A -> B."""
    Qs = dual(Q)
    step1 = tensor_mor(identity(Qs), rho)
    step2 = tensor_mor(braid(Qs, B), identity(Q))
    step3 = tensor_mor(identity(B), ev(Q))
    return step3 @ step2 @ step1


def nabla(rho, B, P):
    """rho: A -> B (x) P* gives rho^nabla: P (x) A -> B."""
    Ps = dual(P)
    step1 = tensor_mor(identity(P), rho)
    step2 = braid(P, tensor(B, Ps))
    step3 = tensor_mor(identity(B), ev(P))
    return step3 @ step2 @ step1


def tensor_monoid(Q1, Q2):
    """Q1 (x) Q2 with (mu1 (x) mu2)(id (x) c_{Q2,Q1} (x) id); needs a symmetric backend."""
    cat = Q1.carrier.cat
    if not cat.symmetric:
        raise NotSymmetric("monoid structure on Q1 (x) Q2 needs a symmetric braiding")
    A, B = Q1.carrier, Q2.carrier
    X = tensor(A, B)
    mid = tensor_mors(identity(A), braid(B, A), identity(B))
    mul = tensor_mor(Q1.mul, Q2.mul) @ mid
    unit = tensor_mor(Q1.unit, Q2.unit)
    return MonoidStr(X, Mor(tensor(X, X), X, mul.mat), Mor(cat.unit(), X, unit.mat))


def compose_comeasurings(c1, c2):
    """(rho1 (x) id_Q2) rho2 as a comeasuring A -> A (x) Q1 (x) Q2."""
    Q = tensor_monoid(c1.Q, c2.Q)
    rho = tensor_mor(c1.rho, identity(c2.Q.carrier)) @ c2.rho
    rho = Mor(c2.rho.src, tensor(c1.B.carrier, Q.carrier), rho.mat)
    return Comeasuring(Q, rho, c2.A, c1.B)


def composition_identity_holds(c1, c2):
    """((rho1 (x) id) rho2)^vee (theta^inv (x) id) = rho1^vee (id (x) rho2^vee)."""
    comp = compose_comeasurings(c1, c2)
    A = c2.A.carrier
    Q1, Q2 = c1.Q.carrier, c2.Q.carrier
    lhs = vee(comp.rho, c1.B.carrier, comp.Q.carrier) @ tensor_mor(theta_inv(Q1, Q2), identity(A))
    rhs = vee(c1.rho, c1.B.carrier, Q1) @ tensor_mor(identity(dual(Q1)), vee(c2.rho, c2.B.carrier, Q2))
    return lhs.mat == rhs.mat
