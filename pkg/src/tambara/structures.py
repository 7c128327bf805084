"""Monoids, comonoids, bimonoids and Hopf monoids on backend objects.

Also the dual monoid P* of a comonoid and the finite dual A° of a
finite-dimensional monoid, both built from the pre-rigid composites.
"""

from dataclasses import dataclass

from .categories import (Mor, dual, dual_mor, identity, tensor, tensor_mor,
                         tensor_mors, braid, theta, theta_inv, validate_mor,
                         Vect, eye)
from .exactla import Matrix, inverse, rank
from .report import Report, residue_report


@dataclass
class MonoidStr:
    carrier: object
    mul: Mor
    unit: Mor

    @property
    def cat(self):
        return self.carrier.cat


@dataclass
class ComonoidStr:
    carrier: object
    comul: Mor
    counit: Mor

    @property
    def cat(self):
        return self.carrier.cat


@dataclass
class BimonoidStr:
    monoid: MonoidStr
    comonoid: ComonoidStr

    @property
    def carrier(self):
        return self.monoid.carrier


@dataclass
class HopfStr:
    monoid: MonoidStr
    comonoid: ComonoidStr
    antipode: Mor
    antipode_inv: Mor

    @property
    def carrier(self):
        return self.monoid.carrier

    @property
    def bimonoid(self):
        return BimonoidStr(self.monoid, self.comonoid)


def make_monoid(carrier, mul, unit):
    cat = carrier.cat
    one = cat.unit()
    return MonoidStr(carrier, Mor(tensor(carrier, carrier), carrier, mul),
                     Mor(one, carrier, unit))


def make_comonoid(carrier, comul, counit):
    one = carrier.cat.unit()
    return ComonoidStr(carrier, Mor(carrier, tensor(carrier, carrier), comul),
                       Mor(carrier, one, counit))


def _monoid_report(m, rep):
    A = m.carrier
    d = A.dim
    I = identity(A)
    for name, f in (("mul-valid", m.mul), ("unit-valid", m.unit)):
        if not validate_mor(f):
            rep.add(name)
    residue_report(rep, "associativity", (m.mul @ tensor_mor(m.mul, I)).mat,
                   (m.mul @ tensor_mor(I, m.mul)).mat, (d, d, d))
    residue_report(rep, "unit-left", (m.mul @ tensor_mor(m.unit, I)).mat, I.mat, (d,))
    residue_report(rep, "unit-right", (m.mul @ tensor_mor(I, m.unit)).mat, I.mat, (d,))


def _comonoid_report(c, rep):
    P = c.carrier
    d = P.dim
    I = identity(P)
    for name, f in (("comul-valid", c.comul), ("counit-valid", c.counit)):
        if not validate_mor(f):
            rep.add(name)
    residue_report(rep, "coassociativity", (tensor_mor(c.comul, I) @ c.comul).mat,
                   (tensor_mor(I, c.comul) @ c.comul).mat, (d,))
    residue_report(rep, "counit-left", (tensor_mor(c.counit, I) @ c.comul).mat, I.mat, (d,))
    residue_report(rep, "counit-right", (tensor_mor(I, c.counit) @ c.comul).mat, I.mat, (d,))


def _bimonoid_report(m, c, rep):
    H = m.carrier
    d = H.dim
    I = identity(H)
    mid = tensor_mors(I, braid(H, H), I)
    residue_report(rep, "comul-multiplicative", (c.comul @ m.mul).mat,
                   (tensor_mor(m.mul, m.mul) @ mid @ tensor_mor(c.comul, c.comul)).mat, (d, d))
    residue_report(rep, "comul-unital", (c.comul @ m.unit).mat,
                   tensor_mor(m.unit, m.unit).mat, (1,))
    residue_report(rep, "counit-multiplicative", (c.counit @ m.mul).mat,
                   tensor_mor(c.counit, c.counit).mat, (d, d))
    residue_report(rep, "counit-unital", (c.counit @ m.unit).mat, eye(H.cat.field, 1), (1,))


def validate_structure(s):
    """Empty report iff every axiom of the structure holds exactly."""
    rep = Report()
    if isinstance(s, MonoidStr):
        _monoid_report(s, rep)
    elif isinstance(s, ComonoidStr):
        _comonoid_report(s, rep)
    elif isinstance(s, (BimonoidStr, HopfStr)):
        _monoid_report(s.monoid, rep)
        _comonoid_report(s.comonoid, rep)
        if rep.ok:
            _bimonoid_report(s.monoid, s.comonoid, rep)
        if isinstance(s, HopfStr) and rep.ok:
            H = s.carrier
            d = H.dim
            m, c = s.monoid, s.comonoid
            S, Si = s.antipode, s.antipode_inv
            if not validate_mor(S):
                rep.add("antipode-valid")
            ue = (m.unit @ c.counit).mat
            residue_report(rep, "antipode-left",
                           (m.mul @ tensor_mor(S, identity(H)) @ c.comul).mat, ue, (d,))
            residue_report(rep, "antipode-right",
                           (m.mul @ tensor_mor(identity(H), S) @ c.comul).mat, ue, (d,))
            residue_report(rep, "antipode-inverse", (S @ Si).mat, eye(H.cat.field, d), (d,))
            residue_report(rep, "antipode-inverse", (Si @ S).mat, eye(H.cat.field, d), (d,))
    else:
        raise TypeError(f"not a structure: {type(s).__name__}")
    return rep


def hopf_as_structure(H, cat=None):
    """HopfData as a HopfStr in Vect."""
    cat = cat or Vect(H.field)
    X = cat.obj(H.dim)
    m = make_monoid(X, H.mult, H.unit)
    c = make_comonoid(X, H.comult, H.counit)
    return HopfStr(m, c, Mor(X, X, H.antipode), Mor(X, X, H.antipode_inv))


def hopf_data_report(H):
    return validate_structure(hopf_as_structure(H))


def unit_iota(cat):
    """iota: 1 -> 1*, the canonical identification."""
    one = cat.unit()
    return Mor(one, dual(one), Matrix.identity(cat.field, 1))


def dual_comonoid(p):
    """The monoid (P*, Delta* theta_{P,P}, eps* iota)."""
    P = p.carrier
    mul = dual_mor(p.comul) @ theta(P, P)
    unit = dual_mor(p.counit) @ unit_iota(P.cat)
    Ps = dual(P)
    return MonoidStr(Ps, Mor(tensor(Ps, Ps), Ps, mul.mat), Mor(P.cat.unit(), Ps, unit.mat))


def finite_dual(a):
    """(A° comonoid, kappa) for a finite-dimensional monoid A.

    Delta = (theta^inv_{A,A})^{-1} mu*, eps = iota^{-1} u*, and A° = A* so
    kappa is the identity.
    """
    A = a.carrier
    ti = theta_inv(A, A)
    if rank(ti.mat) != ti.mat.rows:
        raise ValueError("theta_inv is not invertible")
    ti_inv = inverse(ti.mat)
    comul = ti_inv @ dual_mor(a.mul).mat
    counit = dual_mor(a.unit).mat  # iota is the identity 1x1 matrix
    As = dual(A)
    co = ComonoidStr(As, Mor(As, tensor(As, As), comul), Mor(As, A.cat.unit(), counit))
    kappa = identity(As)
    return co, kappa
