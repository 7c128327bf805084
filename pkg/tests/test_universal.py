import numpy as np
import pytest

from tambara.batteries import sample_comeasurings
from tambara.catalog import backend, coalgebra, magma
from tambara.categories import Mor, NotSymmetric, internal_hom, tensor
from tambara.exactla import QQ, Matrix
from tambara.ncalg import truncated_basis
from tambara.omega import Comeasuring, Signature, check_comeasuring, magma_from_matrices
from tambara.structures import dual_comonoid
from tambara.supports import make_subobject
from tambara.universal import (FromV, NotSubmonoid, UniversalError, antipode_certificate,
                               bimonoid_structure, delta_table, duality_roundtrip,
                               extremal_mono_degreewise,
                               factorization_holds, hopf_envelope_presentation, induced_hom,
                               reduced_relations, relations_vanish, universal_presentation)


@pytest.fixture(scope="module")
def dual_numbers():
    a = magma("dual_numbers")
    return a, universal_presentation(a, a)


def into_ground(a, rows):
    Q = dual_comonoid(coalgebra("trivial"))
    A = a.carrier
    return Comeasuring(Q, Mor(A, tensor(A, Q.carrier), Matrix.of(QQ, rows)), a, a)


def test_dual_numbers_presentation(dual_numbers):
    a, u = dual_numbers
    assert u.presentation.names == ("a", "b", "c", "d")
    assert reduced_relations(u, 4) == ["a - 1", "c", "bb", "db + bd"]
    assert truncated_basis(u.presentation, 4)[1] == [1, 2, 2, 2, 2]
    assert relations_vanish(u, 4).ok


def test_graded_super_presentation():
    a = magma("dual_numbers", backend("graded", QQ))
    u = universal_presentation(a, a)
    # the odd generator anticommutes through the super swap
    assert reduced_relations(u, 4) == ["a - 1", "c", "bb", "db - bd"]


def test_kxk_presentation():
    a = magma("kxk")
    u = universal_presentation(a, a)
    assert reduced_relations(u, 4) == ["b + a - 1", "d + c - 1", "aa - a", "cc - c"]
    assert truncated_basis(u.presentation, 4)[1] == [1, 2, 2, 2, 2]


def test_ground_field_endomorphism(dual_numbers):
    """P = 1: algebra endomorphisms eps -> t eps give a -> 1, b -> 0, c -> 0, d -> t."""
    a, u = dual_numbers
    for t in (0, 1, 5, -2):
        cm = into_ground(a, [[1, 0], [0, t]])
        assert check_comeasuring(cm).ok
        ih = induced_hom(u, cm)
        assert ih.ok and ih.unique
        assert ih.tau.mat.tolist() == [["1", "0", "0", str(t)]]
        assert factorization_holds(u, cm, ih)


def test_obstruction(dual_numbers):
    """eps -> 1 is not multiplicative; the first killed relation is reported."""
    a, u = dual_numbers
    cm = into_ground(a, [[1, 1], [0, 0]])
    assert not check_comeasuring(cm).ok
    ih = induced_hom(u, cm)
    assert not ih.ok and not ih.out_of_class
    assert ih.obstruction[1] == "-bb"


def test_sampled_comeasurings_factor(dual_numbers):
    a, u = dual_numbers
    rng = np.random.default_rng(17)
    n = 0
    for P in (coalgebra("group", group="C2"), coalgebra("matrix", n=2)):
        for cm in sample_comeasurings(a, a, dual_comonoid(P), rng, 5):
            assert check_comeasuring(cm).ok
            ih = induced_hom(u, cm)
            assert ih.ok and ih.unique and factorization_holds(u, cm, ih)
            n += 1
    assert n == 10


def test_bimonoid_table(dual_numbers):
    a, u = dual_numbers
    b = bimonoid_structure(u, 4)
    assert b.certificate.ok
    delta, eps = delta_table(b)
    assert delta == {"a": "1(x)1", "b": "1(x)b + b(x)d", "c": "0", "d": "d(x)d"}
    assert eps == {"a": "1", "b": "0", "c": "0", "d": "1"}
    # coassociativity on generators, directly on the matrix
    I = Matrix.identity(QQ, 4)
    from tambara.exactla import kron
    assert kron(b.delta, I) @ b.delta == kron(I, b.delta) @ b.delta


def test_bimonoid_needs_symmetry():
    a = magma("dual_numbers", backend("left_yd", QQ))
    u = universal_presentation(a, a)
    with pytest.raises(NotSymmetric):
        bimonoid_structure(u, 2)


def test_hopf_envelope(dual_numbers):
    a, u = dual_numbers
    b = bimonoid_structure(u, 4)
    env = hopf_envelope_presentation(b, 1)
    assert env.presentation.names == ("a", "b", "c", "d", "a'", "b'", "c'", "d'")
    assert antipode_certificate(env, 3).ok
    rels = reduced_relations(env, 3)
    assert "dd' - 1" in rels and "d'd - 1" in rels
    with pytest.raises(UniversalError):
        hopf_envelope_presentation(b, 0)


# ---------------------------------------------------------------- V-restricted

def restricted(a, cols):
    V = make_subobject(internal_hom(a.carrier, a.carrier), Matrix.of(QQ, cols))
    return universal_presentation(a, a, FromV(V))


def test_scalar_subspace(dual_numbers):
    a, _ = dual_numbers
    u = restricted(a, [[1], [0], [0], [1]])
    assert reduced_relations(u, 4) == ["a - 1"]
    assert truncated_basis(u.presentation, 4)[1] == [1, 0, 0, 0, 0]


def test_diagonal_subspace(dual_numbers):
    a, _ = dual_numbers
    u = restricted(a, [[1, 0], [0, 0], [0, 0], [0, 1]])
    assert truncated_basis(u.presentation, 4)[1] == [1, 1, 1, 1, 1]
    delta, _ = delta_table(bimonoid_structure(u, 4))
    assert delta[u.presentation.names[1]] == "b(x)b"


def test_non_closed_subspace(dual_numbers):
    a, _ = dual_numbers
    u = restricted(a, [[1, 0], [0, 0], [1, 0], [0, 1]])
    with pytest.raises(NotSubmonoid):
        bimonoid_structure(u, 4)


def test_restricted_rejects_out_of_class(dual_numbers):
    a, _ = dual_numbers
    u = restricted(a, [[1, 0], [0, 0], [0, 0], [0, 1]])
    rng = np.random.default_rng(1)
    P = coalgebra("matrix", n=2)
    seen = {True: 0, False: 0}
    for cm in sample_comeasurings(a, a, dual_comonoid(P), rng, 8):
        ih = induced_hom(u, cm)
        seen[ih.out_of_class] += 1
        if not ih.out_of_class:
            assert ih.ok and factorization_holds(u, cm, ih)
    assert seen[True] > 0


def test_v_must_be_subobject(dual_numbers):
    a, _ = dual_numbers
    three = backend("vect", QQ).obj(3)
    other = make_subobject(internal_hom(three, a.carrier),
                           Matrix.of(QQ, [[1]] + [[0]] * 5))
    with pytest.raises(UniversalError):
        universal_presentation(a, a, FromV(other))


@pytest.mark.parametrize("alg", ["dual_numbers", "kxk"])
def test_duality_small(alg):
    a = magma(alg)
    u = universal_presentation(a, a)
    rng = np.random.default_rng(0)
    P = coalgebra("group", group="C2")
    S = sample_comeasurings(a, a, dual_comonoid(P), rng, 2)
    assert duality_roundtrip(u, P, 3, samples=S).ok


def test_extremal_mono_partial(dual_numbers):
    a, u = dual_numbers
    assert extremal_mono_degreewise(bimonoid_structure(u, 2), 2).ok


def test_unit_only_ground_field():
    """k with only a unit operation: one generator, forced to 1."""
    cat = backend("vect", QQ)
    k = cat.obj(1)
    sig = Signature.of(("u", 0, 1))
    a = magma_from_matrices(k, sig, {"u": Matrix.identity(QQ, 1)})
    u = universal_presentation(a, a)
    assert u.presentation.ngens == 1
    assert reduced_relations(u, 3) == ["a - 1"]
    assert truncated_basis(u.presentation, 3)[1] == [1, 0, 0, 0]
