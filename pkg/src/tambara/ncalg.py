"""Noncommutative polynomials, presentations and degree-truncated Groebner bases.

Words are tuples of generator indices.  The monomial order is deglex:
key(w) = (len(w), w), so higher generator indices are larger.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

import numpy as np

from .categories import tensor_power
from .exactla import Matrix, contains_columns, image, block_diag


def key(w):
    return (len(w), w)


class DegreeBoundError(ValueError):
    pass


class NCPoly:
    """Finite linear combination of words with coefficients in a field."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        out = {}
        for w, c in (terms or {}).items():
            c = field(c)
            if c != 0:
                out[tuple(w)] = c
        self.terms = out

    @classmethod
    def word(cls, field, w, c=1):
        return cls(field, {tuple(w): c})

    @classmethod
    def one(cls, field):
        return cls(field, {(): 1})

    def copy(self):
        p = NCPoly(self.field)
        p.terms = dict(self.terms)
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        F = self.field
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = F(t.get(w, 0) + c)
            if v == 0:
                t.pop(w, None)
            else:
                t[w] = v
        p = NCPoly(F)
        p.terms = t
        return p

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        F = self.field
        s = F(s)
        if s == 0:
            return NCPoly(F)
        p = NCPoly(F)
        p.terms = {w: F(c * s) for w, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        F = self.field
        t = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                t[w] = F(t.get(w, 0) + a * b)
        return NCPoly(F, t)

    def lmul(self, u, c=1):
        """c * u * self for a word u."""
        F = self.field
        p = NCPoly(F)
        c = F(c)
        p.terms = {tuple(u) + w: F(a * c) for w, a in self.terms.items()} if c != 0 else {}
        return p

    def sandwich(self, u, v, c=1):
        F = self.field
        c = F(c)
        p = NCPoly(F)
        if c != 0:
            p.terms = {tuple(u) + w + tuple(v): F(a * c) for w, a in self.terms.items()}
        return p

    @property
    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def lead(self):
        return max(self.terms, key=key)

    def lc(self):
        return self.terms[self.lead()]

    def monic(self):
        return self.scale(self.field.inv(self.lc()))

    def homogeneous(self, n):
        return NCPoly(self.field, {w: c for w, c in self.terms.items() if len(w) == n})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def fmt(self, names=None):
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for w, c in self.sorted_terms():
            word = "".join(names[i] for i in w) if names else ".".join(map(str, w))
            cs = F.fmt(c)
            if not w:
                s = cs
            elif cs == "1":
                s = word
            elif F.is_rational and cs == "-1":
                s = "-" + word
            else:
                s = f"{cs}*{word}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
        return out

    def __repr__(self):
        return f"NCPoly({self.fmt()})"


# ---------------------------------------------------------------- certificates

class Certificate:
    """x = sum c * u * r_i * v over the presentation's relations r_i."""

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = dict(terms or {})

    def add(self, other, u=(), v=(), c=1):
        F = self.field
        c = F(c)
        if c == 0:
            return self
        for (a, i, b), x in other.terms.items():
            k = (tuple(u) + a, i, b + tuple(v))
            val = F(self.terms.get(k, 0) + x * c)
            if val == 0:
                self.terms.pop(k, None)
            else:
                self.terms[k] = val
        return self

    def copy(self):
        return Certificate(self.field, self.terms)

    def expand(self, relations):
        out = NCPoly(self.field)
        for (u, i, v), c in self.terms.items():
            out = out + relations[i].sandwich(u, v, c)
        return out


# ---------------------------------------------------------------- presentations

@dataclass
class Presentation:
    field: object
    ngens: int
    relations: list
    names: tuple = ()
    generator_obj: object = None
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.names:
            self.names = tuple(f"y{i}" for i in range(self.ngens))
        self.relations = [r for r in self.relations if not r.is_zero()]

    def poly(self, terms):
        return NCPoly(self.field, terms)

    def gen(self, i):
        return NCPoly.word(self.field, (i,))

    def fmt(self, p):
        return p.fmt(self.names)


def tensor_algebra_component(u, n):
    return tensor_power(u, n)


@dataclass
class GB:
    degree: int
    polys: list          # monic, reduced
    certs: list          # certificate of each element
    pairs_checked: int = 0

    @property
    def leads(self):
        return [g.lead() for g in self.polys]


def _find(word, sub):
    """Positions where sub occurs in word."""
    n, m = len(word), len(sub)
    return [i for i in range(n - m + 1) if word[i:i + m] == sub]


def _reduce(x, cert, polys, certs, bound=None):
    """Full reduction of x by polys; returns (remainder, certificate of x - remainder)."""
    F = x.field
    rem = NCPoly(F)
    x = x.copy()
    red = cert
    leads = [g.lead() for g in polys]
    while x.terms:
        w = max(x.terms, key=key)
        c = x.terms[w]
        for g, lw, gc in zip(polys, leads, certs):
            pos = _find(w, lw)
            if pos:
                i = pos[0]
                u, v = w[:i], w[i + len(lw):]
                x = x - g.sandwich(u, v, c)
                red.add(gc, u, v, c)
                break
        else:
            rem.terms[w] = c
            del x.terms[w]
    return rem, red


def _overlaps(f, g):
    """Overlap words of lead(f) suffix with lead(g) prefix: (w, uf, vf, ug, vg)."""
    a, b = f.lead(), g.lead()
    out = []
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            w = a + b[k:]
            out.append((w, (), b[k:], a[:-k], ()))
    return out


def gb_truncated(p, d):
    """Reduced Groebner basis with every overlap of degree <= d resolved."""
    if d < 0:
        raise DegreeBoundError("degree bound must be nonnegative")
    if d in p._cache:
        return p._cache[d]
    F = p.field
    polys, certs = [], []
    for i, r in enumerate(p.relations):
        c = Certificate(F, {((), i, ()): F.one()})
        rem, red = _reduce(r, Certificate(F), polys, certs)
        # r - rem = red  =>  rem = r - red
        cert = c.add(red, c=-1)
        if rem:
            inv = F.inv(rem.lc())
            polys.append(rem.scale(inv))
            certs.append(Certificate(F).add(cert, c=inv))
            polys, certs = _interreduce(polys, certs)
    checked = 0
    done = set()
    while True:
        todo = []
        for i in range(len(polys)):
            for j in range(len(polys)):
                for ov in _overlaps(polys[i], polys[j]):
                    w = ov[0]
                    if len(w) <= d:
                        sig = (polys[i].lead(), polys[j].lead(), w)
                        if sig not in done:
                            todo.append((key(w), i, j, ov, sig))
        if not todo:
            break
        todo.sort(key=lambda t: (t[0], t[1], t[2]))
        _, i, j, (w, uf, vf, ug, vg), sig = todo[0]
        done.add(sig)
        checked += 1
        f, g = polys[i], polys[j]
        s = f.sandwich(uf, vf) - g.sandwich(ug, vg)
        sc = Certificate(F).add(certs[i], uf, vf).add(certs[j], ug, vg, -1)
        rem, red = _reduce(s, Certificate(F), polys, certs)
        if rem:
            inv = F.inv(rem.lc())
            polys.append(rem.scale(inv))
            certs.append(Certificate(F).add(sc.add(red, c=-1), c=inv))
            polys, certs = _interreduce(polys, certs)
    order = sorted(range(len(polys)), key=lambda k: key(polys[k].lead()))
    out = GB(d, [polys[k] for k in order], [certs[k] for k in order], checked)
    p._cache[d] = out
    return out


def _interreduce(polys, certs):
    """Drop elements whose lead is divisible by another lead, then tail-reduce."""
    F = polys[0].field if polys else None
    changed = True
    while changed:
        changed = False
        for k, g in enumerate(polys):
            others = polys[:k] + polys[k + 1:]
            ocerts = certs[:k] + certs[k + 1:]
            rem, red = _reduce(g, Certificate(F), others, ocerts)
            if rem != g:
                cert = certs[k].copy().add(red, c=-1)
                if rem:
                    inv = F.inv(rem.lc())
                    polys = others[:k] + [rem.scale(inv)] + others[k:]
                    certs = ocerts[:k] + [Certificate(F).add(cert, c=inv)] + ocerts[k:]
                else:
                    polys, certs = others, ocerts
                changed = True
                break
    return polys, certs


def normal_form(x, p, d, with_certificate=False):
    if x.degree > d:
        raise DegreeBoundError(f"degree {x.degree} exceeds bound {d}")
    gb = gb_truncated(p, d)
    rem, cert = _reduce(x, Certificate(p.field), gb.polys, gb.certs)
    return (rem, cert) if with_certificate else rem


def is_normal_word(w, leads):
    return not any(_find(w, lw) for lw in leads)


def truncated_basis(p, d):
    """Per-degree lists of normal words and their dimensions, degrees 0..d."""
    gb = gb_truncated(p, d)
    leads = gb.leads
    words = [[()] if is_normal_word((), leads) else []]
    for n in range(1, d + 1):
        nxt = []
        for w in words[-1]:
            for i in range(p.ngens):
                v = w + (i,)
                # a new violation can only end at the last letter
                if not any(len(lw) <= len(v) and v[-len(lw):] == lw for lw in leads):
                    nxt.append(v)
        words.append(nxt)
    return words, [len(ws) for ws in words]


def filtered_index(ngens, d):
    """Index of every word of degree <= d in the filtered tensor algebra."""
    idx = {}
    for n in range(d + 1):
        for w in product(range(ngens), repeat=n):
            idx[w] = len(idx)
    return idx


def ideal_span(p, d):
    """Columns spanning I cap T_{<=d}, as computed from normal forms."""
    F = p.field
    idx = filtered_index(p.ngens, d)
    cols = []
    for w in idx:
        nf = normal_form(NCPoly.word(F, w), p, d)
        diff = NCPoly.word(F, w) - nf
        if diff:
            v = Matrix.zeros(F, len(idx), 1)
            for u, c in diff.terms.items():
                v.a[idx[u], 0] = c
            cols.append(v)
    if not cols:
        return Matrix.zeros(F, len(idx), 0)
    return image(Matrix(F, np.hstack([c.a for c in cols])))


def filtered_ops(u, d):
    """Structure matrices of T_{<=d}(U) = sum_n U^{(x)n}, one per closure op."""
    cat = u.cat
    comps = [tensor_power(u, n) for n in range(d + 1)]
    per = [cat.closure_ops(c) for c in comps]
    n_ops = len(per[-1]) if per else 0
    if any(len(o) != n_ops for o in per):
        # graded/dg closure ops are per-degree projections; use a common grading set
        return None
    return [block_diag(cat.field, [ops[k] for ops in per]) for k in range(n_ops)]


def ideal_is_stable(p, d):
    """Whether I cap T_{<=d} is closed under the backend structure of U."""
    if p.generator_obj is None:
        return True
    W = ideal_span(p, d)
    ops = filtered_ops(p.generator_obj, d)
    if ops is None:
        ops = _projection_ops(p.generator_obj, d)
    return all(contains_columns(W, A @ W) for A in ops) if W.cols else True


def _projection_ops(u, d):
    """Degree projections (and d for dg) on T_{<=d} for graded-type backends."""
    cat = u.cat
    comps = [tensor_power(u, n) for n in range(d + 1)]
    F = cat.field
    degs = sorted({g for c in comps for g in c.degrees})
    ops = []
    for g in degs:
        ops.append(block_diag(F, [cat.projection(c, g) for c in comps]))
    if comps and comps[0].d is not None:
        ops.append(block_diag(F, [c.d for c in comps]))
    return ops


def parse_poly(text, names, field):
    """Inverse of NCPoly.fmt: terms 'c*word', 'word' or 'c' joined by + and -.

    Words are split greedily into generator names, longest name first.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    order = sorted(range(len(names)), key=lambda i: -len(names[i]))
    terms = {}
    pos = 0
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        end = pos
        while end < len(s) and s[end] not in "+-":
            end += 1
        tok = s[pos:end]
        pos = end
        if not tok:
            raise ValueError(f"dangling sign in {text!r}")
        coeff, word_s = "1", tok
        if "*" in tok:
            coeff, word_s = tok.split("*", 1)
        elif tok[0].isdigit():
            k = 0
            while k < len(tok) and (tok[k].isdigit() or tok[k] == "/"):
                k += 1
            coeff, word_s = tok[:k], tok[k:]
        word = []
        i = 0
        while i < len(word_s):
            for g in order:
                if word_s.startswith(names[g], i):
                    word.append(g)
                    i += len(names[g])
                    break
            else:
                raise ValueError(f"cannot split {word_s!r} into generators")
        w = tuple(word)
        terms[w] = field(terms.get(w, 0) + sign * field(coeff))
    return NCPoly(field, terms)
