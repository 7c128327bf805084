"""Comeasuring/measuring/algebra-map round trips over several coalgebras P."""

import argparse

import numpy as np

from tambara.batteries import sample_comeasurings
from tambara.catalog import backend, coalgebra, magma
from tambara.structures import dual_comonoid
from tambara.universal import duality_roundtrip, universal_presentation


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--samples", type=int, default=3)
    args = ap.parse_args()
    bad = 0
    for bk in ("vect", "graded"):
        cat = backend(bk)
        for alg in ("dual_numbers", "kxk"):
            a = magma(alg, cat)
            u = universal_presentation(a, a)
            for k, (kind, kw) in enumerate([("trivial", {}), ("group", {"group": "C2"}),
                                            ("group", {"group": "C3"}), ("matrix", {"n": 2})]):
                P = coalgebra(kind, cat, **kw)
                rng = np.random.default_rng([args.seed, k])
                S = sample_comeasurings(a, a, dual_comonoid(P), rng, args.samples)
                rep = duality_roundtrip(u, P, args.degree, samples=S)
                bad += not rep.ok
                status = "ok" if rep.ok else "; ".join(rep.lines(3))
                print(f"{bk:7s} {alg:13s} P={kind}{kw or ''} samples={len(S)}: {status}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
