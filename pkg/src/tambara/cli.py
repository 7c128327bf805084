"""Command line front end.

    tambara validate FILE
    tambara catalog [NAME]
    tambara universal --magma dual_numbers --backend vect --degree 4
    tambara truncate (FILE | --magma NAME) --degree 4
    tambara duality-check --magma kxk --backend graded --seed 1
    tambara support FILE --rho NAME --b OBJ --q OBJ
    tambara cosupport FILE --psi NAME --p OBJ --a OBJ --b OBJ
    tambara verify-lemmas --backend left_yd --hopf sweedler --seed 42 --trials 100

Exit codes: 0 all checks pass, 1 some check failed, 2 malformed input or usage.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

import numpy as np

from .catalog import (ALGEBRA_NAMES, BACKENDS, backend, coalgebra, magma,
                      standard_entries)
from .categories import (ComodCoQT, LeftYD, ModQT, Mor, Obj, RightYD, dual,
                         tensor_all, validate_mor, validate_obj)
from .exactla import FieldError, Matrix, parse_field
from .hopf import HopfData, HopfError
from .ncalg import Presentation, parse_poly, truncated_basis
from .omega import Signature
from .report import Report
from .structures import (BimonoidStr, ComonoidStr, HopfStr, MonoidStr,
                         hopf_data_report, make_comonoid, make_monoid,
                         validate_structure)

COMMANDS = ("validate", "catalog", "universal", "truncate", "duality-check",
            "support", "cosupport", "verify-lemmas")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


@dataclass
class Job:
    command: str
    inputs: list = dc_field(default_factory=list)
    field: str = "rational"
    degree: int = 4
    seed: int = None
    trials: int = None
    backend: str = None
    hopf: str = None
    magma: str = None
    coalgebra: list = None
    names: dict = dc_field(default_factory=dict)
    json: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser():
    p = _Parser(prog="tambara", add_help=True)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("inputs", nargs="*")
    p.add_argument("--field", default="rational")
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--backend")
    p.add_argument("--hopf")
    p.add_argument("--magma")
    p.add_argument("--coalgebra", action="append")
    p.add_argument("--json", action="store_true")
    for k in ("rho", "psi", "p", "q", "a", "b"):
        p.add_argument(f"--{k}")
    return p


def parse_job(argv):
    """Strict parse; raises UsageError on anything malformed."""
    ns = _parser().parse_args(list(argv))
    if ns.degree < 0:
        raise UsageError("--degree must be >= 0")
    if ns.trials is not None and ns.trials < 1:
        raise UsageError("--trials must be >= 1")
    if ns.command == "verify-lemmas" and ns.seed is None:
        raise UsageError("verify-lemmas needs --seed")
    if ns.command in ("validate", "support", "cosupport") and len(ns.inputs) != 1:
        raise UsageError(f"{ns.command} takes exactly one input file")
    if ns.command in ("universal", "duality-check") and not ns.magma:
        raise UsageError(f"{ns.command} needs --magma")
    if ns.command == "truncate" and not (ns.magma or ns.inputs):
        raise UsageError("truncate needs --magma or a presentation file")
    if ns.backend and ns.backend.replace("-", "_") not in BACKENDS + ("graded_c2_plain",):
        raise UsageError(f"unknown backend {ns.backend!r}")
    if ns.magma and ns.magma not in ALGEBRA_NAMES:
        raise UsageError(f"unknown magma {ns.magma!r}")
    try:
        parse_field(ns.field)
    except (FieldError, ValueError) as e:
        raise UsageError(str(e))
    names = {k: getattr(ns, k) for k in ("rho", "psi", "p", "q", "a", "b") if getattr(ns, k)}
    return Job(ns.command, ns.inputs, ns.field, ns.degree, ns.seed, ns.trials,
               ns.backend, ns.hopf, ns.magma, ns.coalgebra, names, ns.json)


# ---------------------------------------------------------------- output

class Out:
    """Collects text lines and a JSON mirror."""

    def __init__(self):
        self.lines = []
        self.data = {}
        self.failed = False

    def line(self, s=""):
        self.lines.append(s)

    def check(self, label, ok, detail=None):
        self.failed |= not ok
        s = f"{label}: {'ok' if ok else 'FAIL'}"
        if detail and not ok:
            s += f" ({detail})"
        self.line(s)
        self.data.setdefault("checks", []).append({"label": label, "ok": bool(ok),
                                                   "detail": detail if not ok else None})

    def render(self, as_json):
        if as_json:
            return json.dumps(self.data, sort_keys=True, indent=1) + "\n"
        return "\n".join(self.lines) + "\n"


def _fmt_report(rep, limit=3):
    return "; ".join(rep.lines(limit))


# ---------------------------------------------------------------- JSON documents

def _mat(F, data, rows=None, cols=None, what="matrix"):
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise InputError(f"{what} must be a nested list")
    for r in data:
        for x in r:
            if not isinstance(x, (str, int)) or isinstance(x, bool):
                raise InputError(f"{what}: scalars must be strings or integers, got {x!r}")
    try:
        m = Matrix.of(F, [[str(x) for x in r] for r in data]) if data else Matrix.zeros(F, rows or 0, cols or 0)
    except (ValueError, ZeroDivisionError, FieldError) as e:
        raise InputError(f"{what}: {e}")
    if data and len({len(r) for r in data}) != 1:
        raise InputError(f"{what} is ragged")
    if (rows is not None and m.rows != rows) or (cols is not None and m.cols != cols):
        raise InputError(f"{what} has shape {m.shape}, expected ({rows}, {cols})")
    return m


def _hopf_from_doc(F, h):
    try:
        n = int(h["dim"])
        mats = {k: _mat(F, h[k], what=f"hopf_data.{k}") for k in
                ("mult", "unit", "comult", "counit", "antipode")}
        from .exactla import inverse
        Sinv = _mat(F, h["antipode_inv"]) if "antipode_inv" in h else inverse(mats["antipode"])
        return HopfData(h.get("name", "H"), F, n, mats["mult"], mats["unit"], mats["comult"],
                        mats["counit"], mats["antipode"], Sinv, tuple(h.get("basis_names", ())))
    except KeyError as e:
        raise InputError(f"hopf_data missing {e}")
    except (HopfError, ZeroDivisionError, ValueError) as e:
        raise InputError(f"hopf_data: {e}")


class Document:
    """A parsed structure file."""

    def __init__(self, doc):
        if not isinstance(doc, dict):
            raise InputError("top level must be an object")
        fspec = doc.get("field", "rational")
        if isinstance(fspec, dict):
            fspec = fspec.get("spec", "rational")
        try:
            self.field = parse_field(fspec)
        except (FieldError, ValueError) as e:
            raise InputError(str(e))
        F = self.field
        self.hopf = _hopf_from_doc(F, doc["hopf_data"]) if "hopf_data" in doc else None
        self.cat = self._backend(doc.get("backend", {"name": "vect"}))
        self.objects = {}
        for o in doc.get("objects", []):
            self.objects[self._name(o)] = self._object(o)
        self.morphisms = {}
        for m in doc.get("morphisms", []):
            src, dst = self._obj_expr(m.get("src")), self._obj_expr(m.get("dst"))
            self.morphisms[self._name(m)] = Mor(src, dst, _mat(F, m.get("matrix"), dst.dim, src.dim,
                                                               what=f"morphism {m.get('name')}"))
        self.structures = {}
        for s in doc.get("structures", []):
            self.structures[self._name(s)] = self._structure(s)
        self.magmas = {}
        om = doc.get("omega")
        if om:
            try:
                sig = Signature.of(*[tuple(x) for x in om["signature"]])
            except (KeyError, TypeError, ValueError) as e:
                raise InputError(f"omega.signature: {e}")
            for mg in om.get("magmas", []):
                A = self._obj_expr(mg.get("carrier"))
                ops = {}
                for name, s, t in sig.ops:
                    if name not in mg.get("ops", {}):
                        raise InputError(f"magma {mg.get('name')} lacks operation {name}")
                    ops[name] = _mat(F, mg["ops"][name], A.dim ** t, A.dim ** s, what=f"op {name}")
                self.magmas[self._name(mg)] = (A, sig, ops)

    @staticmethod
    def _name(entry):
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
            raise InputError(f"entry without a name: {entry!r}")
        return entry["name"]

    def _backend(self, spec):
        if isinstance(spec, str):
            spec = {"name": spec}
        name = str(spec.get("name", "vect")).replace("-", "_")
        F = self.field
        try:
            if self.hopf is not None and name in ("left_yd", "right_yd"):
                return LeftYD(self.hopf) if name == "left_yd" else RightYD(self.hopf)
            if self.hopf is not None and name == "comod_coqt":
                from .hopf import trivial_r_form
                r = _mat(F, spec["r_form"]) if "r_form" in spec else trivial_r_form(self.hopf)
                return ComodCoQT(self.hopf, r)
            if self.hopf is not None and name == "mod_qt":
                return ModQT(self.hopf, _mat(F, spec["r_matrix"]))
            return backend(name, F, spec.get("hopf"))
        except (KeyError, ValueError) as e:
            raise InputError(f"backend: {e}")

    def _object(self, o):
        F, cat = self.field, self.cat
        if "dual_of" in o:
            return dual(self._obj_expr(o["dual_of"]))
        if "tensor_of" in o:
            return self._obj_expr(o["tensor_of"])
        try:
            dim = int(o["dim"])
        except (KeyError, TypeError, ValueError):
            raise InputError(f"object {o.get('name')} needs an integer dim")
        kind = cat.kind
        if kind == "vect":
            return cat.obj(dim)
        if kind == "graded":
            return cat.obj(tuple(int(k) for k in o.get("degrees", [0] * dim)))
        if kind == "dg":
            degs = tuple(int(k) for k in o.get("degrees", [0] * dim))
            d = _mat(F, o["d"], dim, dim, what="d") if "d" in o else None
            return cat.obj(degs, d)
        H = cat.H
        act = tuple(_mat(F, m, dim, dim, what="act") for m in o.get("act", [])) or None
        coact = tuple(_mat(F, m, dim, dim, what="coact") for m in o.get("coact", [])) or None
        if act is not None and len(act) != H.dim or coact is not None and len(coact) != H.dim:
            raise InputError(f"object {o.get('name')}: need one matrix per basis element of H")
        if isinstance(cat, ModQT):
            return Obj(cat, dim, act=act)
        if isinstance(cat, ComodCoQT):
            return Obj(cat, dim, coact=coact)
        return Obj(cat, dim, act=act, coact=coact)

    def _obj_expr(self, e):
        if isinstance(e, str):
            if e in ("1", "unit"):
                return self.cat.unit()
            if e not in self.objects:
                raise InputError(f"unknown object {e!r}")
            return self.objects[e]
        if isinstance(e, list):
            return tensor_all([self._obj_expr(x) for x in e], self.cat)
        raise InputError(f"bad object reference {e!r}")

    def _structure(self, s):
        F = self.field
        kind = s.get("kind")
        X = self._obj_expr(s.get("carrier"))
        n = X.dim

        def monoid():
            return make_monoid(X, _mat(F, s["mul"], n, n * n, what="mul"),
                               _mat(F, s["unit"], n, 1, what="unit"))

        def comonoid():
            return make_comonoid(X, _mat(F, s["comul"], n * n, n, what="comul"),
                                 _mat(F, s["counit"], 1, n, what="counit"))
        try:
            if kind == "monoid":
                return monoid()
            if kind == "comonoid":
                return comonoid()
            if kind == "bimonoid":
                return BimonoidStr(monoid(), comonoid())
            if kind == "hopf":
                S = _mat(F, s["antipode"], n, n, what="antipode")
                Si = _mat(F, s["antipode_inv"], n, n) if "antipode_inv" in s else S
                return HopfStr(monoid(), comonoid(), Mor(X, X, S), Mor(X, X, Si))
        except KeyError as e:
            raise InputError(f"structure {s.get('name')} missing {e}")
        raise InputError(f"structure {s.get('name')}: unknown kind {kind!r}")


def load_document(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})")
    return doc


# ---------------------------------------------------------------- commands

def cmd_validate(job, out):
    doc = Document(load_document(job.inputs[0]))
    if doc.hopf is not None:
        rep = hopf_data_report(doc.hopf)
        out.check(f"hopf_data {doc.hopf.name}", rep.ok, _fmt_report(rep))
    rep = doc.cat.validate() if hasattr(doc.cat, "validate") else Report()
    out.check(f"backend {doc.cat.kind}", rep.ok, _fmt_report(rep))
    for name in sorted(doc.objects):
        rep = validate_obj(doc.objects[name])
        out.check(f"object {name}", rep.ok, _fmt_report(rep))
    for name in sorted(doc.morphisms):
        out.check(f"morphism {name}", validate_mor(doc.morphisms[name]), "not a backend morphism")
    for name in sorted(doc.structures):
        s = doc.structures[name]
        rep = Report()
        parts = ([s.mul, s.unit] if isinstance(s, MonoidStr) else
                 [s.comul, s.counit] if isinstance(s, ComonoidStr) else
                 [s.monoid.mul, s.monoid.unit, s.comonoid.comul, s.comonoid.counit])
        for k, m in enumerate(parts):
            if not validate_mor(m):
                rep.add("not-a-morphism", (k,))
        if rep.ok:
            rep = validate_structure(s)
        out.check(f"structure {name}", rep.ok, _fmt_report(rep))
    for name in sorted(doc.magmas):
        A, sig, ops = doc.magmas[name]
        bad = []
        for op, s, t in sig.ops:
            from .categories import tensor_power
            if not validate_mor(Mor(tensor_power(A, s), tensor_power(A, t), ops[op])):
                bad.append(op)
        out.check(f"magma {name}", not bad, "operations not morphisms: " + ", ".join(bad))


def cmd_catalog(job, out):
    F = parse_field(job.field)
    entries = standard_entries(F)
    if job.inputs:
        entries = [(l, s) for l, s in entries if l in job.inputs]
        if not entries:
            raise InputError(f"no catalog entry named {job.inputs[0]!r}")
    for label, s in entries:
        rep = hopf_data_report(s) if isinstance(s, HopfData) else validate_structure(s)
        out.check(label, rep.ok, _fmt_report(rep))
        if isinstance(s, HopfData):
            order = _antipode_order(s)
            out.line(f"  antipode order: {order}")
            out.data.setdefault("antipode_order", {})[label] = order


def _antipode_order(H, limit=16):
    I = Matrix.identity(H.field, H.dim)
    P = H.antipode
    for k in range(1, limit + 1):
        if P == I:
            return k
        P = P @ H.antipode
    return None


def _universal(job):
    from .universal import universal_presentation
    F = parse_field(job.field)
    cat = backend(job.backend or "vect", F, job.hopf)
    A = magma(job.magma, cat)
    return universal_presentation(A, A), cat


def cmd_universal(job, out):
    from .universal import (bimonoid_structure, delta_table, extremal_mono_degreewise,
                            reduced_relations, relations_vanish)
    u, cat = _universal(job)
    d = job.degree
    pres = u.presentation
    out.line(f"universal comeasuring monoid of {job.magma} in {cat.kind} over {u.field.spec}")
    U = u.U
    gens = []
    for i, nm in enumerate(pres.names):
        deg = U.degrees[i] if U.degrees is not None else None
        gens.append(nm if deg is None else f"{nm}[{deg}]")
    out.line("generators: " + " ".join(gens))
    rels = reduced_relations(u, d)
    out.line(f"relations (reduced, degree <= {d}):")
    for r in rels:
        out.line(f"  {r}")
    _, dims = truncated_basis(pres, d)
    out.line("dims: " + " ".join(map(str, dims)))
    out.data.update({"generators": list(pres.names), "relations": rels, "dims": dims})
    rep = relations_vanish(u, d)
    out.check("coaction is a comeasuring in the truncated quotient", rep.ok, _fmt_report(rep))
    if cat.symmetric:
        b = bimonoid_structure(u, d)
        delta, eps = delta_table(b)
        out.line("delta:")
        for nm in pres.names:
            out.line(f"  {nm} -> {delta[nm]}")
        out.line("eps: " + " ".join(f"{nm}={eps[nm]}" for nm in pres.names))
        out.data.update({"delta": delta, "eps": eps})
        out.check(f"bimonoid certificate at degree {d}", b.certificate.ok, _fmt_report(b.certificate))
        dm = min(d, 2)
        em = extremal_mono_degreewise(b, dm)
        out.check(f"(theta^inv)^flat injective on pieces of total degree <= {dm} (partial)",
                  em.ok, _fmt_report(em))
    else:
        out.line("delta: not computed (backend not symmetric)")


def cmd_truncate(job, out):
    d = job.degree
    if job.magma:
        u, _ = _universal(job)
        pres = u.presentation
    else:
        raw = load_document(job.inputs[0])
        try:
            F = parse_field(raw.get("field", "rational"))
            names = tuple(raw["generators"])
            rels = [parse_poly(r, names, F) for r in raw["relations"]]
        except (KeyError, ValueError, TypeError, FieldError) as e:
            raise InputError(f"presentation: {e}")
        pres = Presentation(F, len(names), rels, names)
    words, dims = truncated_basis(pres, d)
    for k, ws in enumerate(words):
        shown = ["".join(pres.names[i] for i in w) or "1" for w in ws]
        out.line(f"degree {k} ({dims[k]}): " + " ".join(shown))
    out.line("dims: " + " ".join(map(str, dims)))
    out.data.update({"dims": dims,
                     "words": [["".join(pres.names[i] for i in w) or "1" for w in ws] for ws in words]})


DEFAULT_COALGEBRAS = ("trivial", "group:C2", "group:C3", "matrix:2", "zero")


def _coalgebra(spec, cat):
    kind, _, arg = spec.partition(":")
    if kind == "group":
        return coalgebra("group", cat, cat.field, group=arg or "C2")
    if kind == "matrix":
        return coalgebra("matrix", cat, cat.field, n=int(arg or 2))
    if kind in ("trivial", "zero"):
        return coalgebra(kind, cat, cat.field)
    raise UsageError(f"unknown coalgebra {spec!r}")


def cmd_duality(job, out):
    from .batteries import sample_comeasurings
    from .structures import dual_comonoid
    from .universal import duality_roundtrip
    u, cat = _universal(job)
    seed = 0 if job.seed is None else job.seed
    count = job.trials or 3
    for k, spec in enumerate(job.coalgebra or DEFAULT_COALGEBRAS):
        P = _coalgebra(spec, cat)
        rng = np.random.default_rng([seed, k])
        samples = sample_comeasurings(u.A, u.B, dual_comonoid(P), rng, count) if P.carrier.dim else []
        rep = duality_roundtrip(u, P, job.degree, samples=samples)
        ok = rep.ok and (bool(samples) or P.carrier.dim == 0)
        detail = _fmt_report(rep) if rep else "no comeasurings sampled"
        out.check(f"P={spec} ({len(samples)} samples)", ok, detail)


def cmd_support(job, out):
    from .supports import is_tensor_epi, support
    doc = Document(load_document(job.inputs[0]))
    rho = _need(doc.morphisms, job.names.get("rho"), "--rho")
    B = doc._obj_expr(_need_name(job.names.get("b"), "--b"))
    Q = doc._obj_expr(_need_name(job.names.get("q"), "--q"))
    if rho.dst.dim != B.dim * Q.dim:
        raise InputError("rho does not land in B (x) Q")
    s = support(rho, B, Q)
    out.line(f"support dimension: {s.sub.dim}")
    out.line("basis (columns): " + json.dumps(s.sub.basis.tolist()))
    out.line(f"tensor epimorphism: {is_tensor_epi(rho, B, Q)}")
    out.data.update({"dim": s.sub.dim, "basis": s.sub.basis.tolist(),
                     "tensor_epi": is_tensor_epi(rho, B, Q)})
    out.check("rho is a backend morphism", validate_mor(rho))


def cmd_cosupport(job, out):
    from .supports import cosupport, is_tensor_mono
    doc = Document(load_document(job.inputs[0]))
    psi = _need(doc.morphisms, job.names.get("psi"), "--psi")
    P = doc._obj_expr(_need_name(job.names.get("p"), "--p"))
    A = doc._obj_expr(_need_name(job.names.get("a"), "--a"))
    B = doc._obj_expr(_need_name(job.names.get("b"), "--b"))
    if psi.src.dim != P.dim * A.dim or psi.dst.dim != B.dim:
        raise InputError("psi is not a map P (x) A -> B")
    c = cosupport(psi, P, A, B)
    mono = is_tensor_mono(psi, P, A, B)
    out.line(f"cosupport dimension: {c.sub.dim}")
    out.line("basis in [A, B] (columns): " + json.dumps(c.sub.basis.tolist()))
    out.line(f"tensor monomorphism: {mono}")
    out.data.update({"dim": c.sub.dim, "basis": c.sub.basis.tolist(), "tensor_mono": mono})
    out.check("psi is a backend morphism", validate_mor(psi))


def _need_name(v, flag):
    if not v:
        raise UsageError(f"missing {flag}")
    return v


def _need(table, name, flag):
    _need_name(name, flag)
    if name not in table:
        raise InputError(f"unknown name {name!r}")
    return table[name]


def cmd_verify(job, out):
    from .batteries import run_batteries
    F = parse_field(job.field)
    names = [job.backend.replace("-", "_")] if job.backend else list(BACKENDS)
    trials = job.trials or 100
    for name in names:
        cat = backend(name, F, job.hopf)
        label = name + (f"({cat.H.name})" if hasattr(cat, "H") else "")
        out.line(f"[{label}] seed={job.seed} trials={trials} field={F.spec}")
        for r in run_batteries(cat, job.seed, trials):
            out.line("  " + r.line())
            out.failed |= not r.ok
            out.data.setdefault(label, []).append(
                {"lemma": r.name, "trials": r.trials, "failures": r.failures,
                 "first_failure": r.first_failure, "skipped": r.skipped})


HANDLERS = {
    "validate": cmd_validate, "catalog": cmd_catalog, "universal": cmd_universal,
    "truncate": cmd_truncate, "duality-check": cmd_duality, "support": cmd_support,
    "cosupport": cmd_cosupport, "verify-lemmas": cmd_verify,
}


def execute(job):
    """(exit code, report text)."""
    out = Out()
    try:
        HANDLERS[job.command](job, out)
    except UsageError as e:
        return 2, f"usage error: {e}\n"
    except InputError as e:
        return 2, f"input error: {e}\n"
    return (1 if out.failed else 0), out.render(job.json)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_job(argv)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    code, text = execute(job)
    (sys.stderr if code == 2 else sys.stdout).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
