import pytest

from tambara.catalog import algebra, backend, catalog, coalgebra, standard_entries
from tambara.categories import alpha, qt_report, coqt_report
from tambara.exactla import GF, QQ, Matrix, kron, rank
from tambara.hopf import (HopfData, HopfError, c2_triangular_r, group_algebra, sweedler,
                          sweedler_r, taft, trivial_r_form)
from tambara.structures import (MonoidStr, dual_comonoid, finite_dual, hopf_data_report,
                                make_monoid, validate_structure)

from oracles import hopf_oracle

F7 = GF(7)


@pytest.mark.parametrize("F", [QQ, F7])
def test_catalog_entries_pass(F):
    for label, s in standard_entries(F):
        rep = hopf_data_report(s) if isinstance(s, HopfData) else validate_structure(s)
        assert rep.ok, (label, rep)


@pytest.mark.parametrize("F", [QQ, F7])
def test_hopf_entries_match_oracle(F):
    for label, s in standard_entries(F):
        if isinstance(s, HopfData):
            assert hopf_oracle(s) == [], label


def test_sweedler_antipode_order():
    H = sweedler(QQ)
    S = H.antipode
    I = Matrix.identity(QQ, 4)
    assert S @ S != I
    assert S @ S @ S @ S == I
    # S(x) = -gx, S(gx) = x by hand (basis 1, x, g, gx)
    x, gx = H.e(1), H.e(3)
    assert H.S(x) == -gx
    assert H.S(gx) == x


def test_taft_over_gf7():
    q = 2  # 2^3 = 8 = 1 mod 7
    H = taft(3, q, F7)
    assert hopf_data_report(H).ok and hopf_oracle(H) == []
    S = H.antipode
    P = Matrix.identity(F7, H.dim)
    orders = [k for k in range(1, 13) if (P := P @ S) == Matrix.identity(F7, H.dim)]
    assert orders[0] == 6


def test_taft_needs_root_of_unity():
    with pytest.raises(HopfError):
        taft(3, 3, F7)


def test_broken_hopf_detected():
    H = sweedler(QQ)
    bad_mult = Matrix(QQ, H.mult.a.copy())
    bad_mult.a[0, 1 * 4 + 1] = QQ(1)  # x*x = 1 instead of 0
    B = HopfData("bad", QQ, 4, bad_mult, H.unit, H.comult, H.counit, H.antipode, H.antipode_inv)
    assert not hopf_data_report(B).ok
    assert hopf_oracle(B) != []


def test_r_matrices():
    H, R = c2_triangular_r(QQ)
    assert qt_report(H, R).ok
    for a in (0, 1, 3):
        H, R = sweedler_r(a, QQ)
        assert qt_report(H, R).ok
    G = group_algebra("C2", QQ)
    assert coqt_report(G, trivial_r_form(G)).ok


def test_monoid_validator():
    A = algebra("dual_numbers")
    mul = Matrix(QQ, A.mul.mat.a.copy())
    mul.a[1, 3] = QQ(1)  # eps^2 = eps is still a unital associative algebra
    assert validate_structure(make_monoid(A.carrier, mul, A.unit.mat)).ok
    bad = Matrix(QQ, A.mul.mat.a.copy())
    bad.a[0, 1] = QQ(1)  # 1 * eps = 1 + eps
    axioms = validate_structure(make_monoid(A.carrier, bad, A.unit.mat)).axioms()
    assert "unit-left" in axioms


# ---------------------------------------------------------------- duals

def test_finite_dual_dual_numbers_table():
    co, kappa = finite_dual(algebra("dual_numbers"))
    # Delta 1* = 1*(x)1*, Delta e* = 1*(x)e* + e*(x)1*
    assert co.comul.mat.tolist() == [["1", "0"], ["0", "1"], ["0", "1"], ["0", "0"]]
    assert co.counit.mat.tolist() == [["1", "0"]]
    assert validate_structure(co).ok
    assert rank(kappa.mat) == 2


@pytest.mark.parametrize("hname", ["sweedler", "kC2"])
def test_finite_dual_left_yd_closed_form(hname):
    """Delta f = f((b_(-1) a) b_(0)) on the YD dual numbers."""
    cat = backend("left_yd", F7, hname)
    a = algebra("dual_numbers", cat)
    co, kappa = finite_dual(a)
    A = a.carrier
    X = Matrix.zeros(F7, A.dim, A.dim * A.dim)
    for h in range(cat.H.dim):
        X = X + a.mul.mat @ kron(A.act[h], A.coact[h])
    assert co.comul.mat == X.T
    assert validate_structure(co).ok
    assert rank(kappa.mat) == A.dim


def test_double_dual_monoid_iso():
    cat = backend("left_yd", F7)
    a = algebra("dual_numbers", cat)
    co, _ = finite_dual(a)
    m = dual_comonoid(co)
    assert validate_structure(m).ok
    al = alpha(a.carrier).mat
    assert al @ a.mul.mat == m.mul.mat @ kron(al, al)
    assert al @ a.unit.mat == m.unit.mat


@pytest.mark.parametrize("spec", [("group", {"group": "C3"}), ("matrix", {"n": 2}), ("trivial", {})])
def test_dual_comonoid_is_monoid(spec):
    for name in ("vect", "graded", "dg"):
        cat = backend(name, QQ)
        P = coalgebra(spec[0], cat, **spec[1])
        assert validate_structure(P).ok
        assert validate_structure(dual_comonoid(P)).ok


def test_catalog_dispatch():
    assert isinstance(catalog("sweedler"), HopfData)
    assert isinstance(catalog("kxk"), MonoidStr)
    with pytest.raises(ValueError):
        catalog("nonsense")
