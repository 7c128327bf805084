"""Supports of A -> B (x) Q, cosupports of P (x) A -> B, and their preorders."""

from dataclasses import dataclass

from .categories import (Mor, curry, dual, ev_hom, identity, internal_hom,
                         solve_in_hom_space, subobject_of, tensor, tensor_mor)
from .exactla import Matrix, column_space_equal, contains_columns, image, kron, rank, solve
from .omega import vee
from .report import Report

COARSER, FINER, EQUIVALENT, INCOMPARABLE = "Coarser", "Finer", "Equivalent", "Incomparable"


@dataclass
class Subobject:
    ambient: object
    inclusion: Mor

    @property
    def obj(self):
        return self.inclusion.src

    @property
    def dim(self):
        return self.inclusion.src.dim

    @property
    def basis(self):
        return self.inclusion.mat

    def contains(self, other):
        return contains_columns(self.basis, other.basis)

    def __eq__(self, other):
        return column_space_equal(self.basis, other.basis)

    __hash__ = None


@dataclass
class Support:
    sub: Subobject
    abs: Mor  # |rho|: A -> B (x) supp


@dataclass
class Cosupport:
    sub: Subobject
    abs: Mor  # |psi|: cosupp (x) A -> B
    pi: Mor   # P -> cosupp


def stable_closure(x, W):
    """Smallest structure-stable subspace containing the columns of W."""
    ops = x.cat.closure_ops(x)
    W = image(W) if W.cols else W
    while True:
        if not W.cols:
            return W
        grown = W
        for A in ops:
            grown = grown.hstack(A @ W)
        W2 = image(grown)
        if W2.cols == W.cols:
            return W
        W = W2


def make_subobject(x, W):
    o, incl = subobject_of(x, stable_closure(x, W))
    return Subobject(x, incl)


def coefficient_span(rho, B, Q):
    """Columns spanning the Q-coefficients of rho: A -> B (x) Q."""
    F = Q.cat.field
    dA = rho.mat.cols
    a = rho.mat.a.reshape(B.dim, Q.dim, dA)
    return Matrix(F, a.transpose(1, 0, 2).reshape(Q.dim, B.dim * dA).copy())


def support(rho, B, Q):
    """Smallest subobject of Q through which rho factors, with |rho|."""
    sub = make_subobject(Q, coefficient_span(rho, B, Q))
    W = sub.basis
    S = sub.obj
    absr = solve(kron(Matrix.identity(Q.cat.field, B.dim), W), rho.mat)
    if absr is None:
        raise ArithmeticError("rho does not factor through its support")
    return Support(sub, Mor(rho.src, tensor(B, S), absr))


def cosupport(psi, P, A, B):
    """Image of K psi in [A, B], with |psi| and the corestriction pi."""
    Kpsi = curry(psi, P, A, B)
    hom = internal_hom(A, B)
    o, incl = subobject_of(hom, image(Kpsi.mat) if Kpsi.mat.cols else Kpsi.mat)
    sub = Subobject(hom, incl)
    pi = solve(incl.mat, Kpsi.mat)
    absp = ev_hom(A, B) @ tensor_mor(incl, identity(A))
    return Cosupport(sub, absp, Mor(P, o, pi))


def is_tensor_epi(rho, B, Q):
    return support(rho, B, Q).sub.dim == Q.dim


def is_tensor_mono(psi, P, A, B):
    return rank(curry(psi, P, A, B).mat) == P.dim


# ---------------------------------------------------------------- preorders

@dataclass
class Comparison:
    relation: str
    forward: Mor = None   # witness for rho1 >= rho2
    backward: Mor = None  # witness for rho2 >= rho1


def _factor(s1, s2, B):
    """tau: supp1 -> supp2 with (id_B (x) tau)|rho1| = |rho2|, or None."""
    F = B.cat.field
    I = Matrix.identity(F, B.dim)
    return solve_in_hom_space(s1.sub.obj, s2.sub.obj,
                              lambda t: kron(I, t) @ s1.abs.mat, s2.abs.mat)


def _verdict(fw, bw):
    if fw is not None and bw is not None:
        return EQUIVALENT
    if fw is not None:
        return FINER
    if bw is not None:
        return COARSER
    return INCOMPARABLE


def preorder_cmp(rho1, rho2, B, Q1, Q2):
    """Compare comeasuring-style maps: Finer means rho1 >= rho2."""
    s1, s2 = support(rho1, B, Q1), support(rho2, B, Q2)
    fw = _factor(s1, s2, B)
    bw = _factor(s2, s1, B)
    return Comparison(_verdict(fw, bw), fw, bw)


def cosupport_cmp(psi1, psi2, P1, P2, A, B):
    """psi1 >= psi2 iff cosupp psi2 lies inside cosupp psi1."""
    c1, c2 = cosupport(psi1, P1, A, B), cosupport(psi2, P2, A, B)
    fw = c1.sub.contains(c2.sub)
    bw = c2.sub.contains(c1.sub)
    return Comparison(_verdict(fw or None, bw or None))


def check_supp_cosupp_duality(rho, B, Q, pairs=()):
    """cosupp(rho^vee) = (supp rho)^* inside [A, B], plus preorder transfer on pairs.

    pairs: iterable of (rho1, Q1, rho2, Q2) sharing A and B with rho.
    """
    rep = Report()
    A = rho.src
    s = support(rho, B, Q)
    S = s.sub.obj
    lhs = cosupport(vee(rho, B, Q), dual(Q), A, B)
    # (supp rho)^* sits in [A, B] through K(|rho|^vee)
    k = curry(vee(s.abs, B, S), dual(S), A, B)
    if rank(k.mat) != S.dim:
        rep.add("dual-support-embedding", (S.dim,))
    if lhs.sub.dim != S.dim:
        rep.add("dimension", (lhs.sub.dim, S.dim))
    if not column_space_equal(lhs.sub.basis, k.mat):
        rep.add("subobject")
    if not (lhs.abs @ tensor_mor(lhs.pi, identity(A))).mat == vee(rho, B, Q).mat:
        rep.add("cosupport-factorization")
    for t, (r1, q1, r2, q2) in enumerate(pairs):
        c = preorder_cmp(r1, r2, B, q1, q2).relation
        cv = cosupport_cmp(vee(r1, B, q1), vee(r2, B, q2), dual(q1), dual(q2), A, B).relation
        if c != cv:
            rep.add("preorder-transfer", (t,))
    return rep
