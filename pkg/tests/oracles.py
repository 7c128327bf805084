"""Brute-force oracles shared by the unit and acceptance tests."""

from itertools import product

import numpy as np

from tambara.exactla import Matrix, kernel, rank


def hopf_oracle(H):
    """Axioms by index loops over the structure constants."""
    n, F = H.dim, H.field
    m = lambda i, j: H.mult.a[:, i * n + j]
    D = lambda h: H.comult.a[:, h].reshape(n, n)
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = sum((m(i, j)[a] * m(a, k) for a in range(n)), np.zeros(n, dtype=object))
                right = sum((m(j, k)[a] * m(i, a) for a in range(n)), np.zeros(n, dtype=object))
                if any(F(x - y) != 0 for x, y in zip(left, right)):
                    bad.append("assoc")
    for h in range(n):
        d = D(h)
        l = np.zeros((n, n, n), dtype=object)
        r = np.zeros((n, n, n), dtype=object)
        for a in range(n):
            for b in range(n):
                l[:, :, b] += d[a, b] * D(a)
                r[a, :, :] += d[a, b] * D(b)
        if any(F(x) != 0 for x in (l - r).ravel()):
            bad.append("coassoc")
        # antipode: sum S(h1) h2 = eps(h) 1
        tot = np.zeros(n, dtype=object)
        for a in range(n):
            for b in range(n):
                if d[a, b] != 0:
                    for s in range(n):
                        tot += d[a, b] * H.antipode.a[s, a] * m(s, b)
        one = H.unit.a[:, 0] * H.counit.a[0, h]
        if any(F(x - y) != 0 for x, y in zip(tot, one)):
            bad.append("antipode")
    # multiplicativity of Delta on basis pairs
    for i in range(n):
        for j in range(n):
            lhs = np.zeros((n, n), dtype=object)
            for a in range(n):
                lhs += m(i, j)[a] * D(a)
            rhs = np.zeros((n, n), dtype=object)
            di, dj = D(i), D(j)
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        for e in range(n):
                            if di[a, b] != 0 and dj[c, e] != 0:
                                rhs += di[a, b] * dj[c, e] * np.outer(m(a, c), m(b, e))
            if any(F(x) != 0 for x in (lhs - rhs).ravel()):
                bad.append("bialgebra")
    return bad


def brute_quotient_dims(p, n, D):
    """dim T_{<=k} / (I_D cap T_{<=k}) for k <= n, with I_D spanned by u r v of degree <= D."""
    F = p.field
    idx = {}
    for k in range(D + 1):
        for w in product(range(p.ngens), repeat=k):
            idx[w] = len(idx)
    cols = []
    for r in p.relations:
        for lu in range(D - r.degree + 1):
            for lv in range(D - r.degree - lu + 1):
                for u in product(range(p.ngens), repeat=lu):
                    for v in product(range(p.ngens), repeat=lv):
                        x = r.sandwich(u, v)
                        col = np.zeros(len(idx), dtype=object)
                        col[:] = F(0)
                        for w, c in x.terms.items():
                            col[idx[w]] = c
                        cols.append(col)
    I = Matrix(F, np.array(cols, dtype=object).T.copy()) if cols else Matrix.zeros(F, len(idx), 0)
    out = []
    for k in range(n + 1):
        low = [i for w, i in idx.items() if len(w) <= k]
        high = [i for w, i in idx.items() if len(w) > k]
        # I cap T_{<=k}: kernel of the projection onto high words, restricted to I
        if high:
            K = kernel(I.rows_of(high))
            inter = (I @ K).rows_of(low) if K.cols else Matrix.zeros(F, len(low), 0)
        else:
            inter = I.rows_of(low)
        out.append(len(low) - (rank(inter) if inter.cols else 0))
    return out
