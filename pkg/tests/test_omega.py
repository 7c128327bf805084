import numpy as np
import pytest

from tambara.batteries import (battery_composition, battery_transfer, random_weighted_ops,
                               symmetric_measuring, weighted_carrier)
from tambara.catalog import algebra, backend, coalgebra, magma
from tambara.categories import NotSymmetric, Mor, tensor
from tambara.exactla import GF, QQ, Matrix
from tambara.omega import (Measuring, check_comeasuring, check_measuring, identity_measuring,
                           nabla, tensor_monoid, trivial_comeasuring,
                           twisted_power_meas, vee)
from tambara.structures import dual_comonoid

F7 = GF(7)


def test_trivial_examples():
    a = magma("dual_numbers")
    assert check_comeasuring(trivial_comeasuring(a)).ok
    assert check_measuring(identity_measuring(a)).ok


def test_twisted_power_zero_is_counit():
    a = magma("kxk")
    ms = identity_measuring(a)
    t0 = twisted_power_meas(ms.psi, 0, ms.P, a.carrier, a.carrier)
    assert t0.mat == ms.P.counit.mat


def dual_numbers_derivation_measuring(lam):
    """P = span(1*, e*) with e* primitive acting by the derivation eps -> lam eps."""
    from tambara.batteries import flat_comonoid
    a = magma("dual_numbers")
    P = flat_comonoid(a.carrier.cat, "dual")
    A = a.carrier
    # psi(1* (x) x) = x, psi(e* (x) x) = D x with D(1) = 0, D(eps) = lam eps
    psi = Matrix.zeros(QQ, 2, 4)
    psi.a[0, 0] = psi.a[1, 1] = QQ(1)
    psi.a[1, 3] = QQ(lam)
    return Measuring(P, Mor(tensor(P.carrier, A), A, psi), a, a)


@pytest.mark.parametrize("lam", [0, 1, 5])
def test_derivation_is_measuring(lam):
    assert check_measuring(dual_numbers_derivation_measuring(lam)).ok


def test_non_derivation_rejected():
    ms = dual_numbers_derivation_measuring(1)
    psi = ms.psi.mat + Matrix.of(QQ, [[0, 0, 1, 0], [0, 0, 0, 0]])  # e* acts on 1 nontrivially
    rep = check_measuring(Measuring(ms.P, Mor(ms.psi.src, ms.psi.dst, psi), ms.A, ms.B))
    assert not rep.ok
    assert "unit" in rep.axioms()


@pytest.mark.parametrize("name", ["vect", "graded", "dg", "mod_qt", "left_yd"])
def test_transfer_battery(name):
    cat = backend(name, F7)
    (res,) = battery_transfer(cat, np.random.default_rng(11), 15)
    assert res.failures == 0, res.first_failure


def test_random_ops_are_not_trivial(rng):
    """The weight-homogeneous random magmas carry nonzero operations."""
    cat = backend("graded", F7)
    nonzero = 0
    for _ in range(10):
        A, D, ws = weighted_carrier(cat, rng)
        a = random_weighted_ops(A, D, rng)
        nonzero += any(not a.op(nm).mat.is_zero() for nm in ("m", "u"))
    assert nonzero >= 8


def test_symmetric_measurings_nonvacuous(rng):
    """Some sampled measurings do not factor through the counit."""
    cat = backend("vect", F7)
    moved = 0
    for t in range(10):
        A, D, ws = weighted_carrier(cat, rng)
        a = random_weighted_ops(A, D, rng)
        ms = symmetric_measuring(a, D, ws, "dual", rng)
        assert check_measuring(ms).ok
        prim = ms.psi.mat.a[:, A.dim:]
        moved += any(v != 0 for v in prim.ravel())
    assert moved > 0


def test_nabla_vee_agree_symmetric():
    """In a symmetric backend nabla and vee coincide up to the identification P** = P."""
    cat = backend("graded", QQ)
    a = magma("dual_numbers", cat)
    P = coalgebra("group", cat, group="C2")
    Q = dual_comonoid(P)
    A = a.carrier
    rho = Mor(A, tensor(A, Q.carrier), Matrix.of(QQ, [[1, 0], [0, 0], [0, 1], [0, 0]]))
    assert nabla(rho, A, P.carrier).mat == vee(rho, A, Q.carrier).mat


def test_composition_battery():
    (res,) = battery_composition(backend("graded", F7), np.random.default_rng(2), 10)
    assert res.failures == 0 and res.trials == 10


def test_tensor_monoid_needs_symmetry():
    cat = backend("left_yd", QQ)
    Q = algebra("dual_numbers", cat)
    with pytest.raises(NotSymmetric):
        tensor_monoid(Q, Q)
