import numpy as np
import pytest

from tambara.batteries import atoms, battery_supports, random_object
from tambara.categories import validate_mor
from tambara.exactla import contains_columns
from tambara.supports import make_subobject
from tambara.catalog import BACKENDS, backend
from tambara.categories import Mor, identity, random_mor, tensor, tensor_mor
from tambara.exactla import GF, QQ, Matrix
from tambara.supports import (COARSER, EQUIVALENT, FINER, INCOMPARABLE,
                              check_supp_cosupp_duality, cosupport, is_tensor_epi,
                              is_tensor_mono, preorder_cmp, support)

F7 = GF(7)


def test_hand_support_vect():
    cat = backend("vect", QQ)
    A, B, Q = cat.obj(2), cat.obj(2), cat.obj(3)
    # rho(e0) = e0 (x) q0 + e1 (x) q2, rho(e1) = e1 (x) q0
    m = Matrix.zeros(QQ, 6, 2)
    m.a[0 * 3 + 0, 0] = m.a[1 * 3 + 2, 0] = QQ(1)
    m.a[1 * 3 + 0, 1] = QQ(1)
    rho = Mor(A, tensor(B, Q), m)
    s = support(rho, B, Q)
    assert s.sub.dim == 2
    assert not is_tensor_epi(rho, B, Q)
    assert tensor_mor(identity(B), s.sub.inclusion).mat @ s.abs.mat == m
    assert is_tensor_epi(s.abs, B, s.sub.obj)


def test_graded_support_is_stable():
    """A support in Graded is spanned by homogeneous vectors."""
    cat = backend("graded", QQ)
    A, B, Q = cat.obj((0,)), cat.obj((0,)), cat.obj((0, 1, 0))
    m = Matrix.of(QQ, [[1], [0], [1]])
    s = support(Mor(A, tensor(B, Q), m), B, Q)
    assert s.sub.dim == 1


def test_left_yd_support_factors():
    cat = backend("left_yd", F7)
    rng = np.random.default_rng(4)
    for _ in range(20):
        A = random_object(cat, rng, 1)
        B = random_object(cat, rng, 1)
        Q = random_object(cat, rng, 3, 2)
        rho = random_mor(A, tensor(B, Q), rng)
        s = support(rho, B, Q)
        assert validate_mor(s.sub.inclusion)
        assert tensor_mor(identity(B), s.sub.inclusion).mat @ s.abs.mat == rho.mat


def test_stable_closure_grows_in_left_yd():
    """A single vector of the 2-dim Sweedler module generates everything."""
    cat = backend("left_yd", F7)
    two = [x for x in atoms(cat) if x.dim == 2]
    grew = 0
    for x in two:
        for v in ([[1], [0]], [[0], [1]]):
            sub = make_subobject(x, Matrix.of(F7, v))
            assert validate_mor(sub.inclusion)
            assert contains_columns(sub.basis, Matrix.of(F7, v))
            grew += sub.dim == 2
    assert grew > 0


def test_cosupport_hand():
    cat = backend("vect", QQ)
    P, A, B = cat.obj(2), cat.obj(2), cat.obj(2)
    # psi(p0 (x) a) = a, psi(p1 (x) a) = a: both curry to the identity
    psi = Mor(tensor(P, A), B, Matrix.of(QQ, [[1, 0, 1, 0], [0, 1, 0, 1]]))
    c = cosupport(psi, P, A, B)
    assert c.sub.dim == 1
    assert not is_tensor_mono(psi, P, A, B)
    assert (c.abs @ tensor_mor(c.pi, identity(A))).mat == psi.mat


def test_preorder_constructed_pairs(rng):
    cat = backend("vect", F7)
    A, B = cat.obj(2), cat.obj(2)
    Q1, Q2 = cat.obj(3), cat.obj(2)
    r1 = random_mor(A, tensor(B, Q1), rng)
    tau = random_mor(Q1, Q2, rng)
    r2 = tensor_mor(identity(B), tau) @ r1
    assert preorder_cmp(r1, r2, B, Q1, Q2).relation in (FINER, EQUIVALENT)
    assert preorder_cmp(r1, r1, B, Q1, Q1).relation == EQUIVALENT
    zero = Mor(A, tensor(B, Q2), Matrix.zeros(F7, 4, 2))
    assert preorder_cmp(zero, r1, B, Q2, Q1).relation in (COARSER, EQUIVALENT)


def test_preorder_incomparable():
    cat = backend("vect", QQ)
    A, B, Q = cat.obj(1), cat.obj(2), cat.obj(1)
    r1 = Mor(A, tensor(B, Q), Matrix.of(QQ, [[1], [0]]))
    r2 = Mor(A, tensor(B, Q), Matrix.of(QQ, [[0], [1]]))
    assert preorder_cmp(r1, r2, B, Q, Q).relation == INCOMPARABLE
    assert check_supp_cosupp_duality(r1, B, Q, [(r1, Q, r2, Q)]).ok


@pytest.mark.parametrize("name", BACKENDS)
def test_support_battery(name):
    cat = backend(name, F7)
    res = battery_supports(cat, np.random.default_rng(8), 15, pair_trials=5)
    for r in res:
        if cat.symmetric or name == "left_yd":
            assert r.trials > 0 and r.failures == 0, (r.name, r.first_failure)
        else:
            assert r.skipped
