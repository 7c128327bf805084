import pytest

from tambara.batteries import (BatteryResult, atoms, random_object, run_batteries,
                               sample_comeasurings)
from tambara.catalog import BACKENDS, backend, coalgebra, magma
from tambara.categories import validate_obj
from tambara.exactla import GF, QQ
from tambara.omega import check_comeasuring
from tambara.structures import dual_comonoid

F7 = GF(7)


@pytest.mark.parametrize("name", BACKENDS)
def test_batteries_smoke(name):
    for r in run_batteries(backend(name, F7), 1, 4):
        assert r.ok, r.line()


def test_seeded_runs_repeat():
    cat = backend("right_yd", F7)
    a = [r.line() for r in run_batteries(cat, 9, 3)]
    b = [r.line() for r in run_batteries(cat, 9, 3)]
    assert a == b


@pytest.mark.parametrize("name", BACKENDS)
def test_atoms_valid(name):
    ats = atoms(backend(name, F7))
    assert ats and all(validate_obj(x).ok for x in ats)


def test_yd_atoms_include_two_dim_modules():
    for kind in ("left_yd", "right_yd"):
        assert any(x.dim == 2 for x in atoms(backend(kind, F7)))


def test_random_object_dims(rng):
    cat = backend("dg", F7)
    for _ in range(10):
        x = random_object(cat, rng, max_dim=3)
        assert 1 <= x.dim <= 4  # atoms of dim 2 may overshoot by one


def test_result_line():
    r = BatteryResult("demo")
    r.trials = 3
    r.fail("trial 1")
    assert r.line() == "demo: 2/3 passed; first failure: trial 1"
    assert BatteryResult("x", skipped="why").line() == "x: skipped (why)"


@pytest.mark.parametrize("bk", ["vect", "graded"])
@pytest.mark.parametrize("alg", ["dual_numbers", "kxk"])
def test_sampler_gives_comeasurings(bk, alg, rng):
    cat = backend(bk, QQ)
    a = magma(alg, cat)
    for P in (coalgebra("group", cat, group="C2"), coalgebra("matrix", cat, n=2)):
        S = sample_comeasurings(a, a, dual_comonoid(P), rng, 3)
        assert len(S) == 3
        assert all(check_comeasuring(c).ok for c in S)
        # not all samples are the trivial a -> a (x) 1
        assert any(c.rho.mat != S[0].rho.mat for c in S[1:]) or P.carrier.dim == 1
