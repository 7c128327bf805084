
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tambara.exactla import GF, QQ
from tambara.ncalg import (DegreeBoundError, NCPoly, Presentation, gb_truncated,
                           ideal_span, normal_form, parse_poly, truncated_basis)

from oracles import brute_quotient_dims


def pres(rels, names, F=QQ):
    return Presentation(F, len(names), [parse_poly(r, names, F) for r in rels], names)


def test_dual_numbers_universal_relations():
    p = pres(["aa - a", "ab - b", "ba - b", "bb", "ac + ca - c", "ad + cb - d",
              "bc + da - d", "bd + db", "a - 1", "c"], ("a", "b", "c", "d"))
    gb = gb_truncated(p, 4)
    assert sorted(p.fmt(g) for g in gb.polys) == sorted(["a - 1", "c", "bb", "db + bd"])
    _, dims = truncated_basis(p, 4)
    assert dims == [1, 2, 2, 2, 2]
    cum = np.cumsum(dims).tolist()
    assert brute_quotient_dims(p, 2, 4) == cum[:3]


@pytest.mark.parametrize("rels,dims", [
    ([], [1, 2, 4, 8]),
    (["xy - yx"], [1, 2, 3, 4]),
    (["xx", "yy"], [1, 2, 2, 2]),
    (["xy - yx", "xx"], [1, 2, 2, 2]),
    (["xy + yx"], [1, 2, 3, 4]),
])
def test_homogeneous_dims(rels, dims):
    p = pres(rels, ("x", "y"))
    assert truncated_basis(p, 3)[1] == dims
    assert brute_quotient_dims(p, 3, 3) == np.cumsum(dims).tolist()


def test_inhomogeneous_collapse():
    p = pres(["xy - yx - 1", "x"], ("x", "y"))  # 0 = [x, y] = 1
    gb = gb_truncated(p, 3)
    assert [p.fmt(g) for g in gb.polys] == ["1"]
    assert truncated_basis(p, 3)[1] == [0, 0, 0, 0]


def test_normal_form_certificate():
    p = pres(["xy - yx"], ("x", "y"))
    x = parse_poly("yxy + 2yyx", ("x", "y"), QQ)
    nf, cert = normal_form(x, p, 3, with_certificate=True)
    assert p.fmt(nf) == "3*xyy"
    assert x - nf == cert.expand(p.relations)


def test_degree_bound():
    p = pres(["xx"], ("x", "y"))
    with pytest.raises(DegreeBoundError):
        normal_form(parse_poly("xxxx", ("x", "y"), QQ), p, 3)


def test_ideal_span_dimension():
    p = pres(["xx"], ("x", "y"))
    W = ideal_span(p, 3)
    # words containing xx: 1 in degree 2, 3 in degree 3
    assert W.cols == 4


names = ("a", "b", "a'", "bb'")


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(st.lists(st.integers(0, 3), max_size=3).map(tuple),
                       st.integers(-4, 4).filter(bool), max_size=4))
def test_parse_fmt_roundtrip(terms):
    x = NCPoly(QQ, {w: QQ(c) for w, c in terms.items()})
    s = x.fmt(names)
    assert parse_poly(s, names, QQ) == x


@pytest.mark.parametrize("bad", ["a +", "zz", "2*/a", "a - - "])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad, ("a", "b"), QQ)


def test_fp_coefficients():
    F = GF(7)
    p = pres(["xx - 8x"], ("x",), F)  # 8 = 1 mod 7
    assert [p.fmt(g) for g in gb_truncated(p, 3).polys] == ["xx + 6*x"]
